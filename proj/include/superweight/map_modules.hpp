#pragma once

#include "superweight/weight_modules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

// Distinct nonzero points a_1..a_r of k[t,t^-1] paired with factor windows
// over the same g; realizes the evaluation module (x) V_i^{a_i}.
struct EvaluationDescriptor {
    std::vector<Cyclotomic> points;
    std::vector<ModuleWindow> factors;
};

// The realized tensor window with slot bookkeeping: (x (x) t^n) acts by
// sum_i a_i^n (Koszul-signed slot action).
class EvaluationWindow {
public:
    explicit EvaluationWindow(EvaluationDescriptor desc);

    const EvaluationDescriptor& desc() const { return desc_; }
    size_t arity() const { return desc_.factors.size(); }

    // basis tuple at a combined weight: one (factor weight, index) per slot
    using Tuple = std::vector<std::pair<Weight, long>>;
    const std::map<Weight, std::vector<Tuple>>& entries() const { return entries_; }
    long dim_at(const Weight& w) const;
    Parity parity_of(const Weight& w, long idx) const;

    // block of (g (x) t^n) from weight w; absent when the target weight
    // carries no basis; `complete` reports whether truncation interfered
    std::optional<Matrix> act_block(const GenKey& g, long n, const Weight& w,
                                    bool* complete = nullptr) const;

    // coordinate-vector action; raises OutOfWindow when the image is
    // truncated by a factor box
    std::vector<Cyclotomic> act(const GenKey& g, long n, const Weight& w,
                                const std::vector<Cyclotomic>& v) const;

    // the n = 0 window as a plain module (the diagonal tensor)
    const ModuleWindow& window() const { return window_; }

private:
    EvaluationDescriptor desc_;
    std::map<Weight, std::vector<Tuple>> entries_;
    std::map<Weight, std::map<Tuple, long>> index_;
    std::map<Weight, std::vector<Parity>> parities_;
    std::map<Weight, std::vector<std::vector<Parity>>> prefix_; // Koszul prefixes
    ModuleWindow window_;
};

// convenience: evaluation action on a pure basis vector
std::vector<Cyclotomic> evaluation_act(const EvaluationWindow& ev, const GenKey& g, long n,
                                       const Weight& w, long basis_index);

// --- annihilator -----------------------------------------------------------

struct AnnihilatorReport {
    std::vector<Cyclotomic> generator; // monic polynomial in t, low degree first
    bool is_radical = false;
};

// Ann_A(V) generator prod (t - a_i); verifies that g (x) p kills the window
// exactly when p vanishes at every point, for p ranging over the generator,
// its one-point omissions, and monomials up to the degree bound.
AnnihilatorReport annihilator(const EvaluationWindow& ev, long degree_bound);

std::string poly_str(const std::vector<Cyclotomic>& p);

// --- boundedness -------------------------------------------------------------

struct BoundednessReport {
    bool predicted_bounded = false;
    long infinite_factor_count = 0;
    std::vector<std::pair<long, long>> measured_profile; // (depth n, multiplicity)
    SupportSet theta;
};

// Profile of dim V^{lambda0 + n*alpha} for n <= depth over the tensor
// window; bounded iff at most one factor is infinite (windowed).
BoundednessReport boundedness_analyze(const EvaluationWindow& ev, const RootVector& direction,
                                      long depth);

// --- classification witness ----------------------------------------------------

struct ClassificationWitness {
    bool accepted = false;
    std::vector<std::string> reasons;           // rejection reasons, empty when accepted
    std::vector<std::string> factor_kinds;      // "finite" / "dense-window"
    std::vector<std::string> point_strings;
    std::vector<long> factor_dims;
    bool product_window_cyclic = false;
};

ClassificationWitness classification_witness(const EvaluationDescriptor& desc);

} // namespace sw
