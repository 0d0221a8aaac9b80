#pragma once

#include "superweight/map_modules.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sw {

// --- level and the Cartan-loop character map -----------------------------------

// Trace identity for [h (x) t, h (x) t^{-1}] = (h,h)c on a finite weight
// space: consistent exactly when the level k vanishes.
bool level_forced_zero(const Cyclotomic& h_norm, long weight_dim, const Cyclotomic& k);

// chi_{(lambda,a)}(h (x) t^n) = (sum_i a_i^n lambda_i(h)) t^n
struct ChiData {
    std::vector<Cyclotomic> points;                 // a_0..a_k, distinct, nonzero
    std::vector<std::vector<Cyclotomic>> h_values;  // one row per sampled h: lambda_i(h)
};

// Positive generator of the nonvanishing exponents, certified through the
// order-(k+1) linear recurrence satisfied by n -> sum_i a_i^n lambda_i(h).
// AllZero when chi vanishes identically.
long chi_period(const ChiData& chi);

// --- loop modules -----------------------------------------------------------------

Weight affine_weight(const Weight& finite, long degree);

// L(V) = V (x) k[t,t^-1] truncated to |t-degree| <= radius; c acts by zero,
// d by the t-degree.
class LoopWindow {
public:
    LoopWindow(EvaluationDescriptor desc, long radius);

    const EvaluationWindow& evaluation() const { return ev_; }
    long radius() const { return radius_; }

    long dim_at(const Weight& finite, long degree) const;
    std::vector<std::pair<Weight, long>> weights() const; // (finite weight, degree)

    // block of (g (x) t^s) from (finite weight, degree)
    std::optional<Matrix> act_block(const GenKey& g, long s, const Weight& finite, long degree,
                                    bool* complete = nullptr) const;

    Cyclotomic level_of(const Weight&, long) const { return Cyclotomic(); } // c acts by 0
    long d_eigenvalue(long degree) const { return degree; }

private:
    EvaluationWindow ev_;
    long radius_;
};

LoopWindow loop_module(const EvaluationDescriptor& desc, long radius);

// --- r-fold decomposition ------------------------------------------------------------

struct LoopComponent {
    long generator_class = 0; // t-degree of the generating vector mod r
    // dims of the component span per (finite weight, degree), interior only
    std::map<std::pair<Weight, long>, long> dims;
    long interior_dim = 0;
};

struct LoopDecomposition {
    long r = 1;
    long step = 1; // t-step used by the closure operators
    std::vector<LoopComponent> components;
};

// Closes each v_{lambda,i}, i = 0..r-1, under the window-compatible loop
// operators; verifies the spans are independent and jointly fill the window
// interior.  generator_weights picks the cyclic weight vector of each factor.
LoopDecomposition loop_decompose(const LoopWindow& lw,
                                 const std::vector<Weight>& generator_weights);

// --- affine Kac characters -----------------------------------------------------------

// char K(S) = charS * prod over odd roots beta of g_{-1}, |n| <= depth, of
// (1 + e^{beta + n delta}), truncated to |delta-degree offset| <= depth.
CharacterWindow affine_kac_character(const RootSystem& rs, const CharacterWindow& charS,
                                     long depth);

// --- g_1 invariants on loop windows -----------------------------------------------------

struct G1Invariants {
    std::map<long, long> dim_per_degree; // safe interior degrees only
    long total = 0;
};

// Joint kernel of x_beta (x) t^n, beta in Delta(g_1), |n| <= op_range,
// restricted to the safe interior of the loop window.
G1Invariants g1_invariants_window(const LoopWindow& lw, long op_range);

} // namespace sw
