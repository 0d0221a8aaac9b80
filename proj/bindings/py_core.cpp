// pybind11 surface: the main toolkit operations on fixture strings and JSON
// payload strings; the python package wraps these into dict-returning helpers.

#include "superweight/errors.hpp"
#include "superweight/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sw;

namespace {

RootSystem rs_of(const std::string& family, const std::vector<std::string>& params) {
    return build_root_system(parse_family(family, params));
}

ModuleWindow mod_of(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return module_from_json(Json::parse(arg));
    return module_fixture(arg);
}

EvaluationDescriptor desc_of(const std::vector<std::string>& points,
                             const std::vector<std::string>& factors) {
    EvaluationDescriptor d;
    for (const auto& p : points) d.points.push_back(parse_scalar(p));
    for (const auto& f : factors) d.factors.push_back(mod_of(f));
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact weight-module toolkit for basic classical Lie superalgebras";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DomainError>(m, "DomainError");

    // exact arithmetic
    m.def("scalar_add", [](const std::string& a, const std::string& b) {
        return (parse_scalar(a) + parse_scalar(b)).str();
    });
    m.def("scalar_mul", [](const std::string& a, const std::string& b) {
        return (parse_scalar(a) * parse_scalar(b)).str();
    });
    m.def("scalar_inv", [](const std::string& a) { return cyclo_invert(parse_scalar(a)).str(); });
    m.def("cyclo_normalize", [](const std::vector<std::string>& coeffs, long n) {
        std::vector<Rational> raw;
        for (const auto& c : coeffs) raw.push_back(Rational::parse(c));
        return cyclo_normalize(raw, n).str();
    });
    m.def("zeta", [](long n) { return Cyclotomic::zeta(n).str(); });

    // root data
    m.def("root_system_json", [](const std::string& family, const std::vector<std::string>& params) {
        return root_system_json(rs_of(family, params)).dump();
    });
    m.def("grading_json", [](const std::string& family, const std::vector<std::string>& params) {
        return grading_json(rs_of(family, params)).dump();
    });
    m.def("is_root",
          [](const std::string& family, const std::vector<std::string>& params,
             const RootVector& v) -> py::object {
              auto p = is_root(rs_of(family, params), v);
              if (!p.has_value()) return py::none();
              return py::str(*p == Parity::even ? "even" : "odd");
          });
    m.def("form_value", [](const std::string& family, const std::vector<std::string>& params,
                           const RootVector& a, const RootVector& b) {
        return form_value(rs_of(family, params), a, b).str();
    });

    // combinatorics
    m.def("is_closed", [](const std::string& family, const std::vector<std::string>& params,
                          const std::vector<RootVector>& roots) {
        return is_closed(rs_of(family, params), roots);
    });
    m.def("is_parabolic", [](const std::string& family, const std::vector<std::string>& params,
                             const std::vector<RootVector>& roots) {
        return is_parabolic(rs_of(family, params), roots);
    });
    m.def("cone_member", [](const std::vector<RootVector>& gens, const RootVector& target) {
        return cone_member(gens, target);
    });
    m.def("shadow_json", [](const std::string& family, const std::vector<std::string>& params,
                            const std::vector<RootVector>& inj) {
        RootSystem rs = rs_of(family, params);
        ShadowPartition sp = shadow_from_inj(rs, inj);
        return shadow_json(sp, functional_for_shadow(rs, sp)).dump();
    });
    m.def("classify_string", [](const std::string& base, const std::vector<RootVector>& dirs,
                                const std::string& kind, const RootVector& alpha) {
        SupportSet s;
        s.kind = kind == "finite" ? SupportSet::Kind::finite : SupportSet::Kind::coset;
        s.base = {parse_weight(base)};
        s.directions = dirs;
        return string_class_name(classify_string(s, alpha));
    });

    // weight modules
    m.def("module_json", [](const std::string& fixture) { return module_json(mod_of(fixture)).dump(); });
    m.def("module_dim", [](const std::string& fixture) { return mod_of(fixture).dim(); });
    m.def("tensor_json", [](const std::string& a, const std::string& b, const std::string& mode) {
        ModuleWindow ma = mod_of(a), mb = mod_of(b);
        return module_json(mode == "outer" ? outer_tensor(ma, mb) : tensor(ma, mb)).dump();
    }, py::arg("left"), py::arg("right"), py::arg("mode") = "diag");
    m.def("endomorphisms", [](const std::string& fixture) {
        EndoBasis eb = endomorphisms(mod_of(fixture));
        return py::make_tuple(eb.dim_even, eb.dim_odd);
    });
    m.def("irreducible_tensor_tag", [](const std::string& a, const std::string& b) {
        auto r = irreducible_tensor(mod_of(a), mod_of(b));
        return py::make_tuple(r.tag == TensorTag::half ? "half" : "whole", r.module.dim());
    });
    m.def("simplicity", [](const std::string& fixture) {
        return verdict_name(simplicity_check(mod_of(fixture)).verdict);
    });
    m.def("shadow_of_module_json", [](const std::string& fixture) {
        ShadowPartition sp = shadow_of_module(mod_of(fixture));
        return shadow_json(sp, std::nullopt).dump();
    });
    m.def("character_json", [](const std::string& fixture) {
        return character_json(mod_of(fixture).character()).dump();
    });
    m.def("induced_character_json",
          [](const std::string& family, const std::vector<std::string>& params,
             const std::vector<long>& functional, const std::string& charw, long adim,
             long depth) {
              RootSystem rs = rs_of(family, params);
              auto T = triangular_from_functional(rs, functional);
              CharacterWindow cw;
              // "coords:mult;..." grammar as in the CLI
              std::string cur;
              auto flush = [&](const std::string& term) {
                  auto colon = term.rfind(':');
                  cw.mult[parse_weight(term.substr(0, colon))] +=
                      std::stol(term.substr(colon + 1));
              };
              for (char c : charw) {
                  if (c == ';') {
                      flush(cur);
                      cur.clear();
                  } else cur += c;
              }
              if (!cur.empty()) flush(cur);
              return character_json(induced_character(rs, T, cw, adim, depth)).dump();
          });
    m.def("invariants_dimension", [](const std::string& fixture,
                                     const std::vector<RootVector>& roots) {
        return invariants_dimension(mod_of(fixture), roots);
    });

    // map modules
    m.def("eval_window_json", [](const std::vector<std::string>& points,
                                 const std::vector<std::string>& factors) {
        EvaluationWindow ev(desc_of(points, factors));
        Json dims = Json::array();
        for (const auto& [w, list] : ev.entries()) {
            Json e;
            e["weight"] = weight_json(w);
            e["dim"] = static_cast<long>(list.size());
            dims.push_back(e);
        }
        return dims.dump();
    });
    m.def("annihilator_json", [](const std::vector<std::string>& points,
                                 const std::vector<std::string>& factors, long bound) {
        return annihilator_json(annihilator(EvaluationWindow(desc_of(points, factors)), bound))
            .dump();
    }, py::arg("points"), py::arg("factors"), py::arg("bound") = 4);
    m.def("boundedness_json", [](const std::vector<std::string>& points,
                                 const std::vector<std::string>& factors,
                                 const RootVector& direction, long depth) {
        return boundedness_json(boundedness_analyze(EvaluationWindow(desc_of(points, factors)),
                                                    direction, depth))
            .dump();
    });
    m.def("classification_witness_json", [](const std::vector<std::string>& points,
                                            const std::vector<std::string>& factors) {
        return witness_json(classification_witness(desc_of(points, factors))).dump();
    });

    // affine side
    m.def("level_forced_zero", [](const std::string& h_norm, long dim, const std::string& k) {
        return level_forced_zero(parse_scalar(h_norm), dim, parse_scalar(k));
    });
    m.def("chi_period", [](const std::vector<std::string>& points,
                           const std::vector<std::vector<std::string>>& rows) {
        ChiData chi;
        for (const auto& p : points) chi.points.push_back(parse_scalar(p));
        for (const auto& row : rows) {
            std::vector<Cyclotomic> r;
            for (const auto& v : row) r.push_back(parse_scalar(v));
            chi.h_values.push_back(std::move(r));
        }
        return chi_period(chi);
    });
    m.def("loop_decompose_json",
          [](const std::vector<std::string>& points, const std::vector<std::string>& factors,
             long radius, const std::vector<std::string>& generators) {
              EvaluationDescriptor d = desc_of(points, factors);
              std::vector<Weight> gens;
              for (const auto& g : generators) gens.push_back(parse_weight(g));
              LoopWindow lw = loop_module(d, radius);
              return loop_decomposition_json(loop_decompose(lw, gens)).dump();
          });
    m.def("affine_kac_character_json",
          [](const std::string& family, const std::vector<std::string>& params,
             const std::string& charw, long depth) {
              CharacterWindow cw;
              std::string cur;
              auto flush = [&](const std::string& term) {
                  auto colon = term.rfind(':');
                  cw.mult[parse_weight(term.substr(0, colon))] +=
                      std::stol(term.substr(colon + 1));
              };
              for (char c : charw) {
                  if (c == ';') {
                      flush(cur);
                      cur.clear();
                  } else cur += c;
              }
              if (!cur.empty()) flush(cur);
              return character_json(affine_kac_character(rs_of(family, params), cw, depth))
                  .dump();
          });
    m.def("g1_invariants_json", [](const std::vector<std::string>& points,
                                   const std::vector<std::string>& factors, long radius,
                                   long op_range) {
        LoopWindow lw = loop_module(desc_of(points, factors), radius);
        return g1_invariants_json(g1_invariants_window(lw, op_range)).dump();
    });
}
