#pragma once

#include "superweight/root_data.hpp"
#include "superweight/weights.hpp"

#include <optional>
#include <set>
#include <vector>

namespace sw {

// --- Closed and parabolic subsets -------------------------------------------

bool is_closed(const RootSystem& rs, const std::vector<RootVector>& R);
bool is_parabolic(const RootSystem& rs, const std::vector<RootVector>& R);

// --- Triangular decompositions ----------------------------------------------

struct TriangularDecomposition {
    std::vector<long> functional;       // l, acting on Q by the coordinate pairing
    std::vector<RootVector> plus, zero, minus;
    bool proper = false;                // zero part != Delta
};

TriangularDecomposition triangular_from_functional(const RootSystem& rs,
                                                   const std::vector<long>& l);

long eval_functional(const std::vector<long>& l, const RootVector& alpha);

// --- Saturation cone and shadows --------------------------------------------

// mu in the rational cone spanned by the generators; equivalently
// m*mu in Z_+ span for some m > 0 (saturation).
bool cone_member(const std::vector<RootVector>& generators, const RootVector& mu);

struct ShadowPartition {
    std::vector<RootVector> inj;             // the injective set handed in
    std::vector<RootVector> cone_generators; // generators of Z_+ inj
    std::vector<RootVector> i, f, plus, minus;
};

// Requires inj closed; buckets every root by C_V membership of +-alpha.
ShadowPartition shadow_from_inj(const RootSystem& rs, const std::vector<RootVector>& inj);

// Integer functional vanishing on the i-part, positive on the plus-part,
// negative on the minus-part.  Deterministic: L1-minimal rational solution,
// lexicographically refined, then scaled to coprime integers.  Absent only
// when the sign system is infeasible.
std::optional<TriangularDecomposition> functional_for_shadow(const RootSystem& rs,
                                                             const ShadowPartition& shadow);

// --- String classification ----------------------------------------------------

enum class StringClass { f, i, plus, minus };

std::string string_class_name(StringClass c);

// Boundedness pattern of { x : lambda + x*alpha in Supp } over the symbolic
// support, uniform over the base points.
StringClass classify_string(const SupportSet& support, const RootVector& alpha);

} // namespace sw
