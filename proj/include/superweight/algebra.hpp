#pragma once

#include "superweight/linalg.hpp"
#include "superweight/root_data.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sw {

enum class GenKind { root, cartan, aux };

// Stable generator identity, independent of any particular basis ordering.
struct GenKey {
    GenKind kind = GenKind::cartan;
    RootVector root;  // kind == root
    long index = 0;   // cartan / aux number

    static GenKey of_root(RootVector r) { return {GenKind::root, std::move(r), 0}; }
    static GenKey of_cartan(long i) { return {GenKind::cartan, {}, i}; }
    static GenKey of_aux(long i) { return {GenKind::aux, {}, i}; }

    bool operator<(const GenKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (kind == GenKind::root) return root < o.root;
        return index < o.index;
    }
    bool operator==(const GenKey& o) const {
        return kind == o.kind && root == o.root && index == o.index;
    }
    std::string str() const;
};

struct AlgebraGen {
    GenKey key;
    Parity parity = Parity::even;
    RootVector weight;                      // zero vector for cartan/aux
    std::vector<Cyclotomic> cartan_coords;  // kind == cartan: (eps_i(h), delta_j(h))
};

// Structure-constant model of a small Lie superalgebra, with the basis
// enumerated in the straightening order used by the PBW engine: indices
// [0, lowering_end) act freely on highest vectors, [raising_begin, size)
// annihilate them, the middle block evaluates or acts on the inducing module.
class SmallAlgebra {
public:
    std::string name;
    long coord_dim = 0;
    std::vector<AlgebraGen> gens;
    // bracket[i][j]: [g_i, g_j] = sum of (k, coeff) * g_k
    std::vector<std::vector<std::vector<std::pair<int, Cyclotomic>>>> bracket;
    int lowering_end = 0;
    int raising_begin = 0;
    std::optional<RootSystem> rs;

    int index_of(const GenKey& k) const;
    const AlgebraGen& gen(int i) const { return gens[i]; }
    size_t size() const { return gens.size(); }
    bool is_odd(int i) const { return gens[i].parity == Parity::odd; }
};

using AlgebraPtr = std::shared_ptr<const SmallAlgebra>;

// Concrete desk-scale models (structure constants extracted exactly from
// supermatrix realizations and checked by the test suite).
AlgebraPtr make_sl2();
AlgebraPtr make_osp12();
// order: "principal" (neg roots | Cartan | pos roots) or "kac"
// (g_{-1} | g_0 | g_1 in the distinguished grading)
AlgebraPtr make_sl21(const std::string& order = "principal");
// span{h, s} with [s,s]=2h: the 1|1 odd-endomorphism witness algebra
AlgebraPtr make_qwit();
AlgebraPtr make_sum(const AlgebraPtr& a, const AlgebraPtr& b);

// Fixture lookup by name: "sl2", "osp12", "sl21", "qwit".
AlgebraPtr algebra_by_name(const std::string& name);

// --- PBW straightening ---------------------------------------------------

// Word = product of basis generators, left to right; normal form is
// non-decreasing indices with odd generators strictly increasing.
using Word = std::vector<int>;
using UEAElt = std::map<Word, Cyclotomic>;

class UEA {
public:
    explicit UEA(AlgebraPtr g) : g_(std::move(g)) {}

    const SmallAlgebra& algebra() const { return *g_; }

    UEAElt normal_form(const Word& w) const;
    // normal form of generator * element
    UEAElt gen_times(int gen, const UEAElt& e) const;

private:
    AlgebraPtr g_;
    mutable std::map<Word, UEAElt> memo_;
};

} // namespace sw
