#pragma once

#include "superweight/algebra.hpp"
#include "superweight/combinatorics.hpp"
#include "superweight/weights.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sw {

// A weight module restricted to a finite weight box: ordered bases per weight
// space (with parities) and generator action matrices between them.  Cartan
// actions are synthesized on demand (diagonal with eigenvalue lambda(h)).
struct ModuleWindow {
    enum class Completeness { total, windowed };

    AlgebraPtr algebra;
    std::map<Weight, std::vector<Parity>> spaces; // ordered basis parities
    std::map<GenKey, std::map<Weight, Matrix>> actions;
    Completeness completeness = Completeness::total;
    std::optional<SupportSet> support; // symbolic support for windowed modules
    // generators that act on this module (absent: all of them); modules over
    // a subalgebra, like the inducing module of a Kac module, restrict this
    std::optional<std::vector<GenKey>> acting;
    // windowed modules: weights whose outgoing action blocks lost
    // contributions to the truncation
    std::set<Weight> frontier;

    bool total() const { return completeness == Completeness::total; }
    bool gen_acts(const GenKey& g) const;
    bool complete_at(const Weight& w) const { return total() || !frontier.count(w); }
    long dim() const;
    long dim_at(const Weight& w) const;
    bool has_weight(const Weight& w) const { return spaces.count(w) > 0; }

    // Block of the generator action from weight w (zero-filled when absent).
    Matrix action_block(const GenKey& g, const Weight& w) const;
    Weight target_weight(const GenKey& g, const Weight& w) const;

    // Weights whose one-step images under every root/aux generator stay in
    // the box (everything, for total modules).
    bool is_interior(const Weight& w) const;

    CharacterWindow character() const;
};

ModuleWindow module_direct_sum(const ModuleWindow& a, const ModuleWindow& b);

// --- constructions -----------------------------------------------------------

// Simple highest weight module F(lambda) for sl2, osp(1|2), sl(2|1):
// generated from a highest vector, then cut by the maximal submodule
// (joint kernel of all raising monomials into the top space).
ModuleWindow finite_simple_module(const AlgebraPtr& g, const Weight& lambda);

// Simple module over the even part of sl(2|1) (sl2 plus the second Cartan
// generator), used as the inducing module of Kac modules.
ModuleWindow even_part_simple(const AlgebraPtr& sl21, const Weight& lambda);

// K(S) = Lambda(g_{-1}) tensor S with g_1 S = 0, for type-I g (sl(2|1) here).
ModuleWindow kac_module_typeI(const AlgebraPtr& g, const ModuleWindow& S);

struct DenseParams {
    Cyclotomic mu;    // base h-eigenvalue
    Cyclotomic q0;    // raising coefficient at the base point
    long window = 10; // |k| <= window
};

// Rank-1 dense (cuspidal bounded) windows over sl2 / osp(1|2); rejects
// parameters whose raising coefficients vanish inside the window.
ModuleWindow rank1_cuspidal(const AlgebraPtr& g, const DenseParams& params);

// The 1|1-dimensional module over the odd witness algebra span{h,s}.
ModuleWindow qwit_module(const AlgebraPtr& qwit, const Cyclotomic& h_value);

// --- tensor products ---------------------------------------------------------

// Same algebra, diagonal action with the Koszul sign.
ModuleWindow tensor(const ModuleWindow& a, const ModuleWindow& b);
// Outer tensor over the direct sum algebra.
ModuleWindow outer_tensor(const ModuleWindow& a, const ModuleWindow& b);

// --- endomorphisms and the V + V splitting ------------------------------------

struct EndoBasis {
    long dim_even = 0;
    long dim_odd = 0;
    // present iff dim_odd == 1; sigma^2 = sign * id
    std::optional<std::map<Weight, Matrix>> sigma;
    int sigma_square_sign = 1;
};

EndoBasis endomorphisms(const ModuleWindow& m);

enum class TensorTag { whole, half };

struct IrreducibleTensor {
    ModuleWindow module; // over the sum algebra
    TensorTag tag = TensorTag::whole;
};

IrreducibleTensor irreducible_tensor(const ModuleWindow& a, const ModuleWindow& b);

// --- simplicity ---------------------------------------------------------------

enum class SimpleVerdict { simple, not_simple, window_evidence };

struct SimplicityReport {
    SimpleVerdict verdict = SimpleVerdict::not_simple;
    long primitive_dim = -1;       // total modules: dim of the joint raising kernel
    bool window_cyclic = false;    // windowed: every interior vector regenerates the core
};

SimplicityReport simplicity_check(const ModuleWindow& m);

std::string verdict_name(SimpleVerdict v);

// --- shadows of concrete modules ----------------------------------------------

ShadowPartition shadow_of_module(const ModuleWindow& m);

// --- characters of induced modules ---------------------------------------------

// char M_T(W) = charW * prod over even alpha in Delta_T^- of (1-e^alpha)^{-A}
//             * prod over odd alpha of (1+e^alpha)^{A},
// truncated to contributions using at most `depth` lowering steps.
CharacterWindow induced_character(const RootSystem& rs, const TriangularDecomposition& T,
                                  const CharacterWindow& charW, long a_dim, long depth);

// --- invariants ----------------------------------------------------------------

// Joint kernel of the actions of x_alpha for alpha in the subset, per weight.
std::map<Weight, std::vector<std::vector<Cyclotomic>>> invariants_subspace(
    const ModuleWindow& m, const std::vector<RootVector>& root_subset);

long invariants_dimension(const ModuleWindow& m, const std::vector<RootVector>& root_subset);

// --- bracket fidelity (used by tests and the verify suites) ---------------------

// Verifies [a,b] action = supercommutator of action blocks wherever the box
// permits; returns a human-readable failure or empty string.
std::string check_bracket_fidelity(const ModuleWindow& m);

} // namespace sw
