#pragma once

#include "superweight/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sw {

enum class Parity { even, odd };

inline Parity parity_sum(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

// Root in the standard eps_1..eps_m, delta_1..delta_n coordinate basis.
// Integer coordinates; for F(4) the stored unit is half of the usual one so
// the odd roots stay integral.
using RootVector = std::vector<long>;

RootVector rv_add(const RootVector& a, const RootVector& b);
RootVector rv_neg(const RootVector& a);
bool rv_is_zero(const RootVector& a);
std::string rv_str(const RootVector& a);

enum class FamilyKind { A, B, C, D, D21a, F4, G3, PureA, PureC };

struct Family {
    FamilyKind kind;
    long m = 0;          // first parameter (for C(n+1) this is n)
    long n = 0;
    Rational a;          // D(2,1;a) only
    std::string label() const;
};

struct RootDatum {
    RootVector coords;
    Parity parity;
};

class RootSystem {
public:
    Family family;
    long dim = 0;                 // coordinate dimension (#eps + #delta)
    long eps_count = 0;
    std::vector<RootDatum> roots; // all of Delta, even entries first, sorted
    std::vector<std::vector<Cyclotomic>> form; // Gram matrix on the eps/delta space

    std::optional<Parity> parity_of(const RootVector& v) const;
    bool contains(const RootVector& v) const;
    std::vector<RootVector> even_roots() const;
    std::vector<RootVector> odd_roots() const;

    Cyclotomic form_value(const RootVector& x, const RootVector& y) const;
    Cyclotomic pair_weights(const std::vector<Cyclotomic>& x,
                            const std::vector<Cyclotomic>& y) const;

    // "A1+A1+C2" style canonical label of the semisimple even part, with
    // "+k" appended per central torus direction (span deficit of the even
    // roots inside the span of all roots).  Low-rank coincidences are
    // canonicalized: B1,C1,D1 -> A1; C2 -> B2; D3 -> A3.
    std::string even_type() const;

    bool is_type_I() const;

private:
    mutable std::map<RootVector, Parity> index_; // built lazily
    void build_index() const;
};

// Builders / operations ------------------------------------------------------

Family parse_family(const std::string& name, const std::vector<std::string>& params);

RootSystem build_root_system(const Family& fam);

std::optional<Parity> is_root(const RootSystem& rs, const RootVector& v);

// Degree map of the distinguished Z-grading: even roots land in {0} (type I)
// or {0, +-2} (type II), odd roots in {+-1}.
std::map<RootVector, long> distinguished_grading(const RootSystem& rs);

Cyclotomic form_value(const RootSystem& rs, const RootVector& x, const RootVector& y);

struct ChevalleyEntry {
    std::vector<Cyclotomic> h_coords; // coordinates (eps_i(h), delta_j(h))
    bool sl2_normalized = false;      // alpha(h_alpha) == 2 holds
};

// h_alpha = 2 alpha* / (alpha,alpha) for non-isotropic alpha, alpha* for
// isotropic odd alpha, where * is the form dual.
std::map<RootVector, ChevalleyEntry> chevalley_data(const RootSystem& rs);

// Evaluation of a weight (coords in the dual basis) on a Cartan element
// given by its coordinate vector: plain dot product.
Cyclotomic weight_eval(const std::vector<Cyclotomic>& weight,
                       const std::vector<Cyclotomic>& h_coords);

} // namespace sw
