#pragma once

#include "superweight/affine_loop.hpp"
#include "superweight/combinatorics.hpp"
#include "superweight/map_modules.hpp"
#include "superweight/root_data.hpp"
#include "superweight/weight_modules.hpp"

#include <json.hpp>

#include <string>

namespace sw {

using Json = nlohmann::ordered_json;

Json root_system_json(const RootSystem& rs);
Json grading_json(const RootSystem& rs);
Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json character_json(const CharacterWindow& cw);
CharacterWindow character_from_json(const Json& j);
Json shadow_json(const ShadowPartition& sp,
                 const std::optional<TriangularDecomposition>& t);
Json triangular_json(const TriangularDecomposition& t);
Json module_json(const ModuleWindow& m);
ModuleWindow module_from_json(const Json& j);
Json endo_json(const EndoBasis& eb);
Json annihilator_json(const AnnihilatorReport& rep);
Json boundedness_json(const BoundednessReport& rep);
Json witness_json(const ClassificationWitness& w);
Json loop_decomposition_json(const LoopDecomposition& dec);
Json g1_invariants_json(const G1Invariants& inv);

// Fixture grammar shared by the CLI, descriptor files and the bindings:
//   sl2:F:<n>              highest weight module F(n)
//   sl2:dense:<mu>:<q0>:<W>
//   osp12:F:<n>            and osp12:dense:<mu>:<q0>:<W>
//   sl21:F:<l1>,<l2>,<l3>  sl21:even:<coords>  sl21:kac:<coords>
//   qwit:<h>
ModuleWindow module_fixture(const std::string& spec);

// {"points": [scalar strings], "factors": [fixture strings or inline module JSON]}
EvaluationDescriptor descriptor_from_json(const Json& j);
Json descriptor_json(const EvaluationDescriptor& d);

// parse "1,-1,0" into a root vector / "1/3,0" into a weight
RootVector parse_root(const std::string& s);
std::vector<RootVector> parse_root_list(const std::string& s); // semicolon-separated
Weight parse_weight(const std::string& s);

// lossy plain-text rendering of a JSON payload
std::string render_table(const Json& j);

// FNV-1a 64-bit digest, hex-encoded (used by the run manifest)
std::string digest64(const std::string& data);

} // namespace sw
