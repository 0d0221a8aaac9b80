#include "superweight/json_io.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

namespace {

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    raise("BadParameter", "unknown parity '" + s + "'");
    return Parity::even;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

RootVector parse_root(const std::string& s) {
    RootVector v;
    for (const auto& tok : split(s, ',')) {
        try {
            v.push_back(std::stol(tok));
        } catch (...) {
            raise("BadParameter", "cannot parse root coordinate '" + tok + "'");
        }
    }
    return v;
}

std::vector<RootVector> parse_root_list(const std::string& s) {
    std::vector<RootVector> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ';'))
        if (!part.empty()) out.push_back(parse_root(part));
    return out;
}

Weight parse_weight(const std::string& s) {
    std::vector<Cyclotomic> coords;
    for (const auto& tok : split(s, ',')) coords.push_back(parse_scalar(tok));
    return Weight(std::move(coords));
}

Json root_system_json(const RootSystem& rs) {
    Json j;
    j["family"] = rs.family.label();
    Json params = Json::object();
    switch (rs.family.kind) {
        case FamilyKind::A:
        case FamilyKind::B:
        case FamilyKind::D:
            params["m"] = rs.family.m;
            params["n"] = rs.family.n;
            break;
        case FamilyKind::C:
            params["n"] = rs.family.m;
            break;
        case FamilyKind::D21a:
            params["a"] = rs.family.a.str();
            break;
        case FamilyKind::PureA:
        case FamilyKind::PureC:
            params["n"] = rs.family.n;
            break;
        default:
            break;
    }
    j["params"] = params;
    Json roots = Json::array();
    for (const auto& rd : rs.roots) {
        Json r;
        r["coords"] = rd.coords;
        r["parity"] = parity_name(rd.parity);
        roots.push_back(r);
    }
    j["roots"] = roots;
    Json form = Json::array();
    for (long i = 0; i < rs.dim; ++i) {
        Json row = Json::array();
        for (long k = 0; k < rs.dim; ++k) row.push_back(rs.form[i][k].str());
        form.push_back(row);
    }
    j["form"] = form;
    j["even_type"] = rs.even_type();
    return j;
}

Json grading_json(const RootSystem& rs) {
    Json j = Json::array();
    auto deg = distinguished_grading(rs);
    for (const auto& rd : rs.roots) {
        Json e;
        e["root"] = rd.coords;
        e["degree"] = deg.at(rd.coords);
        j.push_back(e);
    }
    return j;
}

Json weight_json(const Weight& w) {
    Json j;
    Json coords = Json::array();
    for (const auto& c : w.coords) coords.push_back(c.str());
    j["coords"] = coords;
    if (w.level.has_value()) j["level"] = w.level->str();
    if (w.degree.has_value()) j["degree"] = *w.degree;
    return j;
}

Weight weight_from_json(const Json& j) {
    Weight w;
    for (const auto& c : j.at("coords")) w.coords.push_back(parse_scalar(c.get<std::string>()));
    if (j.contains("level")) w.level = parse_scalar(j["level"].get<std::string>());
    if (j.contains("degree")) w.degree = j["degree"].get<long>();
    return w;
}

Json character_json(const CharacterWindow& cw) {
    Json j = Json::array();
    for (const auto& [w, mult] : cw.mult) {
        Json e;
        e["weight"] = weight_json(w);
        e["multiplicity"] = mult;
        j.push_back(e);
    }
    return j;
}

CharacterWindow character_from_json(const Json& j) {
    CharacterWindow cw;
    for (const auto& e : j)
        cw.mult[weight_from_json(e.at("weight"))] = e.at("multiplicity").get<long>();
    return cw;
}

Json shadow_json(const ShadowPartition& sp,
                 const std::optional<TriangularDecomposition>& t) {
    Json j;
    j["i"] = sp.i;
    j["f"] = sp.f;
    j["plus"] = sp.plus;
    j["minus"] = sp.minus;
    if (t.has_value()) j["functional"] = t->functional;
    else j["functional"] = nullptr;
    return j;
}

Json triangular_json(const TriangularDecomposition& t) {
    Json j;
    j["functional"] = t.functional;
    j["plus"] = t.plus;
    j["zero"] = t.zero;
    j["minus"] = t.minus;
    j["proper"] = t.proper;
    return j;
}

Json module_json(const ModuleWindow& m) {
    Json j;
    j["algebra"] = m.algebra->name;
    j["completeness"] = m.total() ? "total" : "windowed";
    Json weights = Json::array();
    for (const auto& [w, ps] : m.spaces) {
        Json e;
        e["weight"] = weight_json(w);
        Json par = Json::array();
        for (Parity p : ps) par.push_back(parity_name(p));
        e["parities"] = par;
        weights.push_back(e);
    }
    j["weights"] = weights;
    Json actions = Json::array();
    for (const auto& [gk, blocks] : m.actions) {
        Json a;
        a["generator"] = gk.str();
        Json bl = Json::array();
        for (const auto& [w, blk] : blocks) {
            Json b;
            b["from"] = weight_json(w);
            Json trip = Json::array();
            for (size_t r = 0; r < blk.rows(); ++r)
                for (size_t c = 0; c < blk.cols(); ++c)
                    if (!blk.at(r, c).is_zero())
                        trip.push_back(Json::array({r, c, blk.at(r, c).str()}));
            b["triplets"] = trip;
            bl.push_back(b);
        }
        a["blocks"] = bl;
        actions.push_back(a);
    }
    j["actions"] = actions;
    if (m.support.has_value()) {
        Json s;
        s["kind"] = m.support->kind == SupportSet::Kind::finite ? "finite" : "coset";
        Json base = Json::array();
        for (const auto& w : m.support->base) base.push_back(weight_json(w));
        s["base"] = base;
        s["directions"] = m.support->directions;
        j["support"] = s;
    }
    if (m.acting.has_value()) {
        Json a = Json::array();
        for (const auto& g : *m.acting) a.push_back(g.str());
        j["acting"] = a;
    }
    if (!m.frontier.empty()) {
        Json f = Json::array();
        for (const auto& w : m.frontier) f.push_back(weight_json(w));
        j["frontier"] = f;
    }
    return j;
}

namespace {

GenKey genkey_from(const std::string& s) {
    if (s.empty()) raise("BadParameter", "empty generator name");
    if (s[0] == 'x') {
        auto open = s.find('[');
        auto close = s.find(']');
        if (open == std::string::npos || close == std::string::npos)
            raise("BadParameter", "cannot parse generator '" + s + "'");
        return GenKey::of_root(parse_root(s.substr(open + 1, close - open - 1)));
    }
    if (s[0] == 'h') return GenKey::of_cartan(std::stol(s.substr(1)));
    if (s[0] == 's') return GenKey::of_aux(std::stol(s.substr(1)));
    raise("BadParameter", "cannot parse generator '" + s + "'");
    return {};
}

} // namespace

ModuleWindow module_from_json(const Json& j) {
    ModuleWindow m;
    m.algebra = algebra_by_name(j.at("algebra").get<std::string>());
    m.completeness = j.at("completeness").get<std::string>() == "total"
                         ? ModuleWindow::Completeness::total
                         : ModuleWindow::Completeness::windowed;
    for (const auto& e : j.at("weights")) {
        Weight w = weight_from_json(e.at("weight"));
        std::vector<Parity> ps;
        for (const auto& p : e.at("parities")) ps.push_back(parity_from(p.get<std::string>()));
        m.spaces[w] = ps;
    }
    for (const auto& a : j.at("actions")) {
        GenKey gk = genkey_from(a.at("generator").get<std::string>());
        for (const auto& b : a.at("blocks")) {
            Weight w = weight_from_json(b.at("from"));
            Weight tw = m.target_weight(gk, w);
            Matrix blk(static_cast<size_t>(m.dim_at(tw)), static_cast<size_t>(m.dim_at(w)));
            for (const auto& t : b.at("triplets"))
                blk.at(t[0].get<size_t>(), t[1].get<size_t>()) =
                    parse_scalar(t[2].get<std::string>());
            m.actions[gk][w] = std::move(blk);
        }
    }
    if (j.contains("support")) {
        SupportSet s;
        s.kind = j["support"].at("kind").get<std::string>() == "finite"
                     ? SupportSet::Kind::finite
                     : SupportSet::Kind::coset;
        for (const auto& w : j["support"].at("base")) s.base.push_back(weight_from_json(w));
        for (const auto& d : j["support"].at("directions"))
            s.directions.push_back(d.get<RootVector>());
        m.support = s;
    }
    if (j.contains("acting")) {
        std::vector<GenKey> acting;
        for (const auto& g : j["acting"]) acting.push_back(genkey_from(g.get<std::string>()));
        m.acting = acting;
    }
    if (j.contains("frontier"))
        for (const auto& w : j["frontier"]) m.frontier.insert(weight_from_json(w));
    return m;
}

Json endo_json(const EndoBasis& eb) {
    Json j;
    j["dim_even"] = eb.dim_even;
    j["dim_odd"] = eb.dim_odd;
    if (eb.sigma.has_value()) j["sigma_square_sign"] = eb.sigma_square_sign;
    return j;
}

Json annihilator_json(const AnnihilatorReport& rep) {
    Json j;
    Json coeffs = Json::array();
    for (const auto& c : rep.generator) coeffs.push_back(c.str());
    j["generator_coeffs"] = coeffs;
    j["generator"] = poly_str(rep.generator);
    j["is_radical"] = rep.is_radical;
    return j;
}

Json boundedness_json(const BoundednessReport& rep) {
    Json j;
    j["predicted_bounded"] = rep.predicted_bounded;
    j["infinite_factor_count"] = rep.infinite_factor_count;
    Json prof = Json::array();
    for (auto [n, d] : rep.measured_profile) prof.push_back(Json::array({n, d}));
    j["measured_profile"] = prof;
    Json theta = Json::array();
    for (const auto& w : rep.theta.base) theta.push_back(weight_json(w));
    j["theta"] = theta;
    return j;
}

Json witness_json(const ClassificationWitness& w) {
    Json j;
    j["accepted"] = w.accepted;
    j["reasons"] = w.reasons;
    j["points"] = w.point_strings;
    j["factor_kinds"] = w.factor_kinds;
    j["factor_dims"] = w.factor_dims;
    j["product_window_cyclic"] = w.product_window_cyclic;
    return j;
}

Json loop_decomposition_json(const LoopDecomposition& dec) {
    Json j;
    j["r"] = dec.r;
    j["step"] = dec.step;
    Json comps = Json::array();
    for (const auto& comp : dec.components) {
        Json c;
        c["t_classes"] = Json::array({comp.generator_class});
        Json dims = Json::array();
        for (const auto& [key, d] : comp.dims) {
            Json e;
            e["weight"] = weight_json(key.first);
            e["degree"] = key.second;
            e["dim"] = d;
            dims.push_back(e);
        }
        c["dims"] = dims;
        c["interior_dim"] = comp.interior_dim;
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

Json g1_invariants_json(const G1Invariants& inv) {
    Json j;
    Json per = Json::array();
    for (auto [n, d] : inv.dim_per_degree) per.push_back(Json::array({n, d}));
    j["dim_per_degree"] = per;
    j["total"] = inv.total;
    return j;
}

ModuleWindow module_fixture(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() < 2) raise("BadParameter", "fixture spec '" + spec + "' too short");
    const std::string& alg = parts[0];
    const std::string& kind = parts[1];
    if (alg == "qwit") {
        return qwit_module(make_qwit(), parse_scalar(parts[1]));
    }
    AlgebraPtr g = algebra_by_name(alg);
    if (kind == "F" || kind == "even") {
        if (parts.size() != 3) raise("BadParameter", "fixture '" + spec + "' needs a weight");
        Weight lam = parse_weight(parts[2]);
        if (alg == "sl2" && lam.coords.size() == 1)
            lam.coords.push_back(Cyclotomic()); // shorthand: "sl2:F:3"
        if (kind == "even") return even_part_simple(g, lam);
        return finite_simple_module(g, lam);
    }
    if (kind == "kac") {
        if (parts.size() != 3) raise("BadParameter", "fixture '" + spec + "' needs a weight");
        return kac_module_typeI(g, even_part_simple(g, parse_weight(parts[2])));
    }
    if (kind == "dense") {
        if (parts.size() != 5)
            raise("BadParameter", "dense fixture wants <alg>:dense:<mu>:<q0>:<window>");
        DenseParams p;
        p.mu = parse_scalar(parts[2]);
        p.q0 = parse_scalar(parts[3]);
        p.window = std::stol(parts[4]);
        return rank1_cuspidal(g, p);
    }
    raise("BadParameter", "unknown fixture kind '" + kind + "'");
    return {};
}

EvaluationDescriptor descriptor_from_json(const Json& j) {
    EvaluationDescriptor d;
    for (const auto& p : j.at("points")) d.points.push_back(parse_scalar(p.get<std::string>()));
    for (const auto& f : j.at("factors")) {
        if (f.is_string()) d.factors.push_back(module_fixture(f.get<std::string>()));
        else d.factors.push_back(module_from_json(f));
    }
    return d;
}

Json descriptor_json(const EvaluationDescriptor& d) {
    Json j;
    Json pts = Json::array();
    for (const auto& a : d.points) pts.push_back(a.str());
    j["points"] = pts;
    Json fs = Json::array();
    for (const auto& f : d.factors) fs.push_back(module_json(f));
    j["factors"] = fs;
    return j;
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive())
                os << prefix << k << ": " << v.dump() << "\n";
            else {
                os << prefix << k << ":\n";
                render(v, prefix + "  ", os);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive())
                os << prefix << "- " << v.dump() << "\n";
            else {
                os << prefix << "-\n";
                render(v, prefix + "  ", os);
            }
        }
    } else {
        os << prefix << j.dump() << "\n";
    }
}

} // namespace

std::string render_table(const Json& j) {
    std::ostringstream os;
    render(j, "", os);
    return os.str();
}

std::string digest64(const std::string& data) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace sw
