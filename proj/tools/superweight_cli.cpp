// superweight command line: every toolkit operation behind one binary with
// JSON (default) or table output.  Exit codes: 0 ok, 1 domain error with an
// error JSON on stderr, 2 usage error.

#include "superweight/errors.hpp"
#include "superweight/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sw;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunContext {
    std::string format = "json";
    std::string output_path;
    std::string manifest_path;
    long seed = 20240801;
    std::string inputs_acc; // argv + loaded file contents, for the manifest
};

Json load_json_file(RunContext& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("BadParameter", "cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ctx.inputs_acc += ss.str();
    return Json::parse(ss.str());
}

ModuleWindow load_module(RunContext& ctx, const std::string& arg) {
    if (!arg.empty() && arg[0] == '@')
        return module_from_json(load_json_file(ctx, arg.substr(1)));
    return module_fixture(arg);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Cyclotomic> parse_points(const std::string& s) {
    std::vector<Cyclotomic> pts;
    for (const auto& tok : split_list(s, ',')) pts.push_back(parse_scalar(tok));
    return pts;
}

EvaluationDescriptor make_descriptor(RunContext& ctx, const std::string& points,
                                     const std::string& factors) {
    EvaluationDescriptor d;
    d.points = parse_points(points);
    for (const auto& f : split_list(factors, ';')) d.factors.push_back(load_module(ctx, f));
    return d;
}

// "coords:mult;coords:mult" with an optional "@degree" suffix on the coords
CharacterWindow parse_character(const std::string& s) {
    CharacterWindow cw;
    for (const auto& term : split_list(s, ';')) {
        auto colon = term.rfind(':');
        if (colon == std::string::npos)
            raise("BadParameter", "character term '" + term + "' wants coords:mult");
        std::string head = term.substr(0, colon);
        long mult = std::stol(term.substr(colon + 1));
        long degree = 0;
        bool affine = false;
        auto at = head.find('@');
        if (at != std::string::npos) {
            degree = std::stol(head.substr(at + 1));
            head = head.substr(0, at);
            affine = true;
        }
        Weight w = parse_weight(head);
        if (affine) w = affine_weight(w, degree);
        cw.mult[w] += mult;
    }
    return cw;
}

RootSystem rs_from_args(const std::string& family, const std::vector<std::string>& params) {
    return build_root_system(parse_family(family, params));
}

// --- verify suites -----------------------------------------------------------

Json check(const std::string& name, bool pass, Json detail = Json::object()) {
    Json j;
    j["name"] = name;
    j["pass"] = pass;
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

Json verify_schur(long) {
    Json checks = Json::array();
    auto expect = [&](const std::string& name, const ModuleWindow& m, long de, long dodd) {
        EndoBasis eb = endomorphisms(m);
        Json d;
        d["dim_even"] = eb.dim_even;
        d["dim_odd"] = eb.dim_odd;
        checks.push_back(check(name, eb.dim_even == de && eb.dim_odd == dodd, d));
    };
    for (long n = 0; n <= 5; ++n)
        expect("sl2:F:" + std::to_string(n),
               module_fixture("sl2:F:" + std::to_string(n)), 1, 0);
    for (long n = 1; n <= 3; ++n)
        expect("osp12:F:" + std::to_string(n),
               module_fixture("osp12:F:" + std::to_string(n)), 1, 0);
    for (const char* lam : {"2,1,5", "3,0,1", "1,0,3"})
        expect(std::string("sl21:F:") + lam, module_fixture(std::string("sl21:F:") + lam), 1, 0);
    expect("qwit:1", module_fixture("qwit:1"), 1, 1);
    return checks;
}

Json verify_shadow(long) {
    Json checks = Json::array();
    for (const char* spec : {"sl2:F:3", "osp12:F:2", "sl21:F:2,1,5"}) {
        ShadowPartition sp = shadow_of_module(module_fixture(spec));
        checks.push_back(check(std::string("all-f ") + spec,
                               sp.i.empty() && sp.plus.empty() && sp.minus.empty()));
    }
    for (const char* spec : {"sl2:dense:1/3:1:10", "osp12:dense:1/3:1/5:10"}) {
        ModuleWindow m = module_fixture(spec);
        ShadowPartition sp = shadow_of_module(m);
        checks.push_back(check(std::string("all-i ") + spec,
                               sp.f.empty() && sp.plus.empty() && sp.minus.empty()));
    }
    for (const char* fam : {"sl21", "osp12"}) {
        RootSystem rs = fam == std::string("sl21")
                            ? rs_from_args("A", {"1", "0"})
                            : rs_from_args("B", {"0", "1"});
        std::vector<RootVector> all;
        for (const auto& rd : rs.roots) all.push_back(rd.coords);
        bool ok = true;
        long tested = 0;
        for (size_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<RootVector> sub;
            for (size_t b = 0; b < all.size(); ++b)
                if (mask & (1u << b)) sub.push_back(all[b]);
            if (!is_closed(rs, sub)) continue;
            auto t = functional_for_shadow(rs, shadow_from_inj(rs, sub));
            if (!t.has_value()) ok = false;
            ++tested;
        }
        Json d;
        d["closed_subsets"] = tested;
        checks.push_back(check(std::string("functional-exists ") + fam, ok, d));
    }
    return checks;
}

Json verify_boundedness(long) {
    Json checks = Json::array();
    {
        EvaluationDescriptor d;
        d.points = {Cyclotomic(1), Cyclotomic(-1)};
        d.factors = {module_fixture("sl2:dense:1/3:1:16"), module_fixture("sl2:F:2")};
        auto rep = boundedness_analyze(EvaluationWindow(d), {1, -1}, 10);
        bool ok = rep.predicted_bounded;
        for (auto [n, dim] : rep.measured_profile)
            if (n >= 2 && dim != 3) ok = false;
        checks.push_back(check("dense (x) finite constant profile", ok,
                               boundedness_json(rep)));
    }
    {
        EvaluationDescriptor d;
        d.points = {Cyclotomic(1), Cyclotomic(-1)};
        d.factors = {module_fixture("sl2:dense:1/3:1:16"),
                     module_fixture("sl2:dense:1/5:1:16")};
        auto rep = boundedness_analyze(EvaluationWindow(d), {1, -1}, 12);
        bool ok = !rep.predicted_bounded;
        for (auto [n, dim] : rep.measured_profile)
            if (dim < n + 1) ok = false;
        checks.push_back(check("dense (x) dense linear growth", ok, boundedness_json(rep)));
    }
    return checks;
}

Json verify_loop(long) {
    Json checks = Json::array();
    {
        ChiData chi;
        chi.points = {Cyclotomic(1), Cyclotomic(-1)};
        chi.h_values = {{Cyclotomic(1), Cyclotomic(1)}};
        checks.push_back(check("chi period (1,-1)", chi_period(chi) == 2));
        ChiData gen;
        gen.points = {Cyclotomic(1), Cyclotomic(2)};
        gen.h_values = {{Cyclotomic(1), Cyclotomic(1)}};
        checks.push_back(check("chi period generic", chi_period(gen) == 1));
        ChiData z3;
        z3.points = {Cyclotomic(1), Cyclotomic::zeta(3), Cyclotomic::zeta(3).pow(2)};
        z3.h_values = {{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}};
        checks.push_back(check("chi period zeta3", chi_period(z3) == 3));
    }
    {
        EvaluationDescriptor d;
        d.points = {Cyclotomic(1), Cyclotomic(-1)};
        d.factors = {module_fixture("sl2:F:1"), module_fixture("sl2:F:1")};
        LoopWindow lw = loop_module(d, 6);
        bool law = true;
        for (long n = -6; n <= 6; ++n)
            for (const auto& [w, list] : lw.evaluation().entries())
                if (lw.dim_at(w, n) != lw.evaluation().dim_at(w)) law = false;
        checks.push_back(check("loop support law", law));
        Weight hw = parse_weight("1,0");
        auto dec = loop_decompose(lw, {hw, hw});
        bool ok = dec.r == 2 && dec.components.size() == 2;
        std::map<long, long> per_degree;
        for (const auto& comp : dec.components)
            for (const auto& [key, dim] : comp.dims) per_degree[key.second] += dim;
        for (auto [n, total] : per_degree)
            if (total != 4) ok = false;
        checks.push_back(check("loop decomposition r=2", ok, loop_decomposition_json(dec)));
    }
    return checks;
}

Json verify_kac(long seed) {
    Json checks = Json::array();
    auto g = make_sl21();
    RootSystem rs = *g->rs;
    auto T = triangular_from_functional(rs, {1, 1, 0});
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::uniform_int_distribution<long> pickn(0, 3), pickc(-3, 3);
    for (int iter = 0; iter < 5; ++iter) {
        long n = pickn(rng), c = pickc(rng);
        // K(lambda) is the simple module only for typical lambda:
        // lambda1 + lambda3 + 1 != 0 and lambda2 + lambda3 != 0
        long l3 = pickc(rng) + 5;
        while ((n + c) + l3 + 1 == 0 || c + l3 == 0) ++l3;
        std::ostringstream spec;
        spec << (n + c) << "," << c << "," << l3;
        Weight lam = parse_weight(spec.str());
        ModuleWindow S = even_part_simple(g, lam);
        ModuleWindow K = kac_module_typeI(g, S);
        bool dims_ok = K.dim() == 4 * S.dim();
        bool char_ok = induced_character(rs, T, S.character(), 1, 6) == K.character();
        long inv = invariants_dimension(K, {{1, 0, -1}, {0, 1, -1}});
        Json d;
        d["lambda"] = spec.str();
        d["dimS"] = S.dim();
        d["dimK"] = K.dim();
        d["invariants"] = inv;
        checks.push_back(check("kac lambda=" + spec.str(),
                               dims_ok && char_ok && inv == S.dim(), d));
    }
    return checks;
}

// --- command wiring -------------------------------------------------------------

// the only environment knob: SUPERWEIGHT_OUTPUT_DIR prefixes relative
// output paths
std::string resolve_output(const std::string& path) {
    const char* dir = std::getenv("SUPERWEIGHT_OUTPUT_DIR");
    if (dir && !path.empty() && path[0] != '/') return std::string(dir) + "/" + path;
    return path;
}

int emit(RunContext& ctx, const Json& payload,
         std::chrono::steady_clock::time_point start) {
    std::string body =
        ctx.format == "table" ? render_table(payload) : payload.dump(2) + "\n";
    if (!ctx.output_path.empty()) {
        std::string path = resolve_output(ctx.output_path);
        std::ofstream out(path);
        if (!out) raise("BadParameter", "cannot write '" + path + "'");
        out << body;
    } else {
        std::cout << body;
    }
    if (!ctx.manifest_path.empty()) {
        auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        Json man;
        man["version"] = kVersion;
        man["inputs_digest"] = digest64(ctx.inputs_acc);
        man["result_digest"] = digest64(body);
        man["wall_ms"] = wall;
        std::string path = resolve_output(ctx.manifest_path);
        std::ofstream out(path);
        if (!out) raise("BadParameter", "cannot write '" + path + "'");
        out << man.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superweight: exact weight-module toolkit for basic classical Lie superalgebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunContext ctx;
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--manifest" || a == "--output") {
            ++i; // output destinations are not computation inputs
            continue;
        }
        ctx.inputs_acc += a;
        ctx.inputs_acc += '\n';
    }
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", ctx.output_path, "write the payload to a file");
    app.add_option("--manifest", ctx.manifest_path, "write a run manifest JSON");
    app.add_option("--seed", ctx.seed, "seed for randomized verification suites");

    std::function<Json()> runner;

    // roots / grading ---------------------------------------------------------
    std::string family;
    std::vector<std::string> params;
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("family", family, "family name: A B C D D21a F4 G3 An Cn")->required();
        cmd->add_option("params", params, "family parameters");
    };
    {
        auto* cmd = app.add_subcommand("roots", "build a root system");
        add_family(cmd);
        cmd->callback([&]() { runner = [&]() { return root_system_json(rs_from_args(family, params)); }; });
    }
    {
        auto* cmd = app.add_subcommand("grading", "distinguished Z-grading degrees");
        add_family(cmd);
        cmd->callback([&]() { runner = [&]() { return grading_json(rs_from_args(family, params)); }; });
    }

    // closed / parabolic / triangular / shadow / string ------------------------
    static std::string set_arg, functional_arg, inj_arg;
    {
        auto* cmd = app.add_subcommand("closed", "is the root subset closed");
        add_family(cmd);
        cmd->add_option("--set", set_arg, "roots, e.g. \"1,-1,0;1,0,-1\"")->required();
        cmd->callback([&]() {
            runner = [&]() {
                Json j;
                j["closed"] = is_closed(rs_from_args(family, params), parse_root_list(set_arg));
                return j;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("parabolic", "is the root subset parabolic");
        add_family(cmd);
        cmd->add_option("--set", set_arg, "roots")->required();
        cmd->callback([&]() {
            runner = [&]() {
                Json j;
                j["parabolic"] =
                    is_parabolic(rs_from_args(family, params), parse_root_list(set_arg));
                return j;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("triangular", "triangular decomposition from a functional");
        add_family(cmd);
        cmd->add_option("--functional", functional_arg, "integer vector, e.g. \"1,0,0\"")
            ->required();
        cmd->callback([&]() {
            runner = [&]() {
                RootSystem rs = rs_from_args(family, params);
                std::vector<long> l = parse_root(functional_arg);
                return triangular_json(triangular_from_functional(rs, l));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("shadow", "shadow partition from an injective set");
        add_family(cmd);
        cmd->add_option("--inj", inj_arg, "closed injective roots (may be empty)");
        cmd->callback([&]() {
            runner = [&]() {
                RootSystem rs = rs_from_args(family, params);
                ShadowPartition sp = shadow_from_inj(rs, parse_root_list(inj_arg));
                auto t = functional_for_shadow(rs, sp);
                return shadow_json(sp, t);
            };
        });
    }
    static std::string base_arg, dirs_arg, alpha_arg, kind_arg = "coset";
    {
        auto* cmd = app.add_subcommand("string", "classify an alpha-string over a symbolic support");
        cmd->add_option("--base", base_arg, "base weights, e.g. \"1/3,0\"")->required();
        cmd->add_option("--directions", dirs_arg, "monoid directions");
        cmd->add_option("--kind", kind_arg, "finite|coset")
            ->check(CLI::IsMember({"finite", "coset"}));
        cmd->add_option("--alpha", alpha_arg, "the root")->required();
        cmd->callback([&]() {
            runner = [&]() {
                SupportSet s;
                s.kind = kind_arg == "finite" ? SupportSet::Kind::finite
                                              : SupportSet::Kind::coset;
                for (const auto& b : split_list(base_arg, ';')) s.base.push_back(parse_weight(b));
                s.directions = parse_root_list(dirs_arg);
                Json j;
                j["class"] = string_class_name(classify_string(s, parse_root(alpha_arg)));
                return j;
            };
        });
    }

    // module constructions ------------------------------------------------------
    static std::string fixture_arg, left_arg, right_arg, mode_arg = "diag", module_arg;
    {
        auto* cmd = app.add_subcommand("module", "construct a module window fixture");
        cmd->add_option("fixture", fixture_arg,
                        "e.g. sl2:F:3 | sl21:kac:2,1,5 | sl2:dense:1/3:1:20 | qwit:1")
            ->required();
        cmd->callback([&]() { runner = [&]() { return module_json(load_module(ctx, fixture_arg)); }; });
    }
    {
        auto* cmd = app.add_subcommand("tensor", "tensor product of two module windows");
        cmd->add_option("--left", left_arg, "fixture or @file.json")->required();
        cmd->add_option("--right", right_arg, "fixture or @file.json")->required();
        cmd->add_option("--mode", mode_arg, "diag (same algebra) or outer (direct sum)")
            ->check(CLI::IsMember({"diag", "outer"}));
        cmd->callback([&]() {
            runner = [&]() {
                ModuleWindow a = load_module(ctx, left_arg);
                ModuleWindow b = load_module(ctx, right_arg);
                return module_json(mode_arg == "outer" ? outer_tensor(a, b) : tensor(a, b));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("endo", "endomorphism dimensions (super Schur pattern)");
        cmd->add_option("--module", module_arg, "fixture or @file.json")->required();
        cmd->callback([&]() {
            runner = [&]() { return endo_json(endomorphisms(load_module(ctx, module_arg))); };
        });
    }
    {
        auto* cmd = app.add_subcommand("simple", "simplicity verdict");
        cmd->add_option("--module", module_arg, "fixture or @file.json")->required();
        cmd->callback([&]() {
            runner = [&]() {
                auto rep = simplicity_check(load_module(ctx, module_arg));
                Json j;
                j["verdict"] = verdict_name(rep.verdict);
                if (rep.primitive_dim >= 0) j["primitive_dim"] = rep.primitive_dim;
                j["window_cyclic"] = rep.window_cyclic;
                return j;
            };
        });
    }

    // evaluation modules ---------------------------------------------------------
    static std::string points_arg, factors_arg, direction_arg, descriptor_arg, generators_arg;
    static long depth_arg = 10, degree_bound_arg = 4, radius_arg = 4, adim_arg = 1,
                oprange_arg = 0;
    {
        auto* cmd = app.add_subcommand("eval-module", "evaluation module window and witness");
        cmd->add_option("--points", points_arg, "e.g. \"1,-1\"")->required();
        cmd->add_option("--factors", factors_arg, "fixtures separated by ';'")->required();
        cmd->add_option("--profile-direction", direction_arg, "optional growth direction");
        cmd->add_option("--depth", depth_arg, "profile depth");
        cmd->callback([&]() {
            runner = [&]() {
                EvaluationDescriptor d = make_descriptor(ctx, points_arg, factors_arg);
                EvaluationWindow ev(d);
                Json j;
                Json pts = Json::array();
                for (const auto& a : d.points) pts.push_back(a.str());
                j["points"] = pts;
                Json dims = Json::array();
                for (const auto& [w, list] : ev.entries()) {
                    Json e;
                    e["weight"] = weight_json(w);
                    e["dim"] = static_cast<long>(list.size());
                    dims.push_back(e);
                }
                j["dims"] = dims;
                j["witness"] = witness_json(classification_witness(d));
                if (!direction_arg.empty())
                    j["profile"] = boundedness_json(
                        boundedness_analyze(ev, parse_root(direction_arg), depth_arg));
                return j;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("annihilator", "annihilator ideal of an evaluation module");
        cmd->add_option("--points", points_arg)->required();
        cmd->add_option("--factors", factors_arg)->required();
        cmd->add_option("--degree-bound", degree_bound_arg, "verification degree bound");
        cmd->callback([&]() {
            runner = [&]() {
                EvaluationDescriptor d = make_descriptor(ctx, points_arg, factors_arg);
                return annihilator_json(annihilator(EvaluationWindow(d), degree_bound_arg));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("bounded", "boundedness profile of an evaluation module");
        cmd->add_option("--points", points_arg)->required();
        cmd->add_option("--factors", factors_arg)->required();
        cmd->add_option("--direction", direction_arg, "growth direction")->required();
        cmd->add_option("--depth", depth_arg);
        cmd->callback([&]() {
            runner = [&]() {
                EvaluationDescriptor d = make_descriptor(ctx, points_arg, factors_arg);
                return boundedness_json(
                    boundedness_analyze(EvaluationWindow(d), parse_root(direction_arg),
                                        depth_arg));
            };
        });
    }

    // induced characters -----------------------------------------------------------
    static std::string char_arg;
    {
        auto* cmd = app.add_subcommand("induce", "character of a parabolically induced module");
        add_family(cmd);
        cmd->add_option("--functional", functional_arg, "triangular functional")->required();
        cmd->add_option("--char", char_arg, "inducing character \"coords:mult;...\"")->required();
        cmd->add_option("--adim", adim_arg, "dim of the coefficient algebra");
        cmd->add_option("--depth", depth_arg, "lowering depth");
        cmd->callback([&]() {
            runner = [&]() {
                RootSystem rs = rs_from_args(family, params);
                auto T = triangular_from_functional(rs, parse_root(functional_arg));
                return character_json(
                    induced_character(rs, T, parse_character(char_arg), adim_arg, depth_arg));
            };
        });
    }

    // affine side -------------------------------------------------------------------
    static std::string weights_arg;
    {
        auto* cmd = app.add_subcommand("chi-period", "period of the Cartan-loop character");
        cmd->add_option("--points", points_arg, "a_0..a_k")->required();
        cmd->add_option("--weights", weights_arg, "rows of lambda_i(h), ';' per Cartan sample")
            ->required();
        cmd->callback([&]() {
            runner = [&]() {
                ChiData chi;
                chi.points = parse_points(points_arg);
                for (const auto& row : split_list(weights_arg, ';'))
                    chi.h_values.push_back(parse_points(row));
                Json j;
                j["r"] = chi_period(chi);
                return j;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("loop", "loop module window L(V)");
        cmd->add_option("--points", points_arg)->required();
        cmd->add_option("--factors", factors_arg)->required();
        cmd->add_option("--radius", radius_arg, "t-degree radius");
        cmd->callback([&]() {
            runner = [&]() {
                EvaluationDescriptor d = make_descriptor(ctx, points_arg, factors_arg);
                LoopWindow lw = loop_module(d, radius_arg);
                Json j;
                j["radius"] = lw.radius();
                Json dims = Json::array();
                for (const auto& [w, list] : lw.evaluation().entries()) {
                    Json e;
                    e["weight"] = weight_json(w);
                    e["dim_per_degree"] = static_cast<long>(list.size());
                    dims.push_back(e);
                }
                j["dims"] = dims;
                j["level"] = "0";
                return j;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("loop-decompose", "r-fold decomposition of a loop module");
        cmd->add_option("--descriptor", descriptor_arg, "descriptor JSON file");
        cmd->add_option("--points", points_arg);
        cmd->add_option("--factors", factors_arg);
        cmd->add_option("--depth,--radius", radius_arg, "t-degree radius");
        cmd->add_option("--generators", generators_arg,
                        "generator weights per factor, ';' separated (default: highest/base)");
        cmd->callback([&]() {
            runner = [&]() {
                EvaluationDescriptor d;
                if (!descriptor_arg.empty())
                    d = descriptor_from_json(load_json_file(ctx, descriptor_arg));
                else
                    d = make_descriptor(ctx, points_arg, factors_arg);
                std::vector<Weight> gens;
                if (!generators_arg.empty()) {
                    for (const auto& w : split_list(generators_arg, ';'))
                        gens.push_back(parse_weight(w));
                } else {
                    for (const auto& f : d.factors) {
                        if (!f.support || f.support->base.empty())
                            raise("PreconditionViolated", "factor without a designated base");
                        if (f.total()) {
                            // highest weight: the one with trivial raising image
                            Weight best = f.spaces.rbegin()->first;
                            gens.push_back(best);
                        } else {
                            gens.push_back(f.support->base.front());
                        }
                    }
                }
                LoopWindow lw = loop_module(d, radius_arg);
                return loop_decomposition_json(loop_decompose(lw, gens));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("kac-char", "affine Kac module character");
        add_family(cmd);
        cmd->add_option("--char", char_arg, "inducing affine character")->required();
        cmd->add_option("--depth", depth_arg, "delta-degree depth");
        cmd->callback([&]() {
            runner = [&]() {
                RootSystem rs = rs_from_args(family, params);
                return character_json(
                    affine_kac_character(rs, parse_character(char_arg), depth_arg));
            };
        });
    }
    static std::string roots_arg;
    {
        auto* cmd = app.add_subcommand("invariants",
                                       "joint kernels: --module with --roots, or a loop window");
        cmd->add_option("--module", module_arg, "fixture or @file.json");
        cmd->add_option("--roots", roots_arg, "root subset");
        cmd->add_option("--points", points_arg);
        cmd->add_option("--factors", factors_arg);
        cmd->add_option("--radius", radius_arg);
        cmd->add_option("--op-range", oprange_arg, "t-range of the g1 operators");
        cmd->callback([&]() {
            runner = [&]() {
                if (!module_arg.empty()) {
                    ModuleWindow m = load_module(ctx, module_arg);
                    auto inv = invariants_subspace(m, parse_root_list(roots_arg));
                    Json j;
                    Json dims = Json::array();
                    long total = 0;
                    for (const auto& [w, basis] : inv) {
                        Json e;
                        e["weight"] = weight_json(w);
                        e["dim"] = static_cast<long>(basis.size());
                        total += static_cast<long>(basis.size());
                        dims.push_back(e);
                    }
                    j["dims"] = dims;
                    j["total"] = total;
                    return j;
                }
                EvaluationDescriptor d = make_descriptor(ctx, points_arg, factors_arg);
                LoopWindow lw = loop_module(d, radius_arg);
                return g1_invariants_json(g1_invariants_window(lw, oprange_arg));
            };
        });
    }

    // verify --------------------------------------------------------------------------
    static std::string suite_arg;
    {
        auto* cmd = app.add_subcommand("verify", "run a built-in invariant battery");
        cmd->add_option("suite", suite_arg, "schur | shadow | boundedness | loop | kac")
            ->required()
            ->check(CLI::IsMember({"schur", "shadow", "boundedness", "loop", "kac"}));
        cmd->callback([&]() {
            runner = [&]() {
                Json checks;
                if (suite_arg == "schur") checks = verify_schur(ctx.seed);
                else if (suite_arg == "shadow") checks = verify_shadow(ctx.seed);
                else if (suite_arg == "boundedness") checks = verify_boundedness(ctx.seed);
                else if (suite_arg == "loop") checks = verify_loop(ctx.seed);
                else checks = verify_kac(ctx.seed);
                bool all = true;
                for (const auto& c : checks)
                    if (!c.at("pass").get<bool>()) all = false;
                Json j;
                j["suite"] = suite_arg;
                j["pass"] = all;
                j["checks"] = checks;
                if (!all) raise("SuiteFailed", "verification suite reported failures");
                return j;
            };
        });
    }

    // global flags remain usable after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help / --version
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return emit(ctx, runner(), start);
    } catch (const DomainError& e) {
        Json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
