#include "superweight/algebra.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

std::string GenKey::str() const {
    switch (kind) {
        case GenKind::root: return "x" + rv_str(root);
        case GenKind::cartan: return "h" + std::to_string(index);
        case GenKind::aux: return "s" + std::to_string(index);
    }
    return "?";
}

int SmallAlgebra::index_of(const GenKey& k) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].key == k) return static_cast<int>(i);
    raise("BadParameter", "unknown generator " + k.str() + " in algebra " + name);
    return -1;
}

namespace {

// Dense supermatrix with parity-graded rows/columns; bracket is the
// supercommutator.  Used only to extract structure constants exactly.
struct SuperMat {
    std::vector<Parity> grading; // row i and column i carry grading[i]
    Matrix m;

    explicit SuperMat(std::vector<Parity> g)
        : grading(std::move(g)), m(grading.size(), grading.size()) {}

    Parity parity() const {
        // parity of the (assumed homogeneous) matrix
        for (size_t i = 0; i < grading.size(); ++i)
            for (size_t j = 0; j < grading.size(); ++j)
                if (!m.at(i, j).is_zero())
                    return parity_sum(grading[i], grading[j]);
        return Parity::even;
    }
};

SuperMat unit_mat(const std::vector<Parity>& g, size_t i, size_t j, long val = 1) {
    SuperMat s(g);
    s.m.at(i, j) = Cyclotomic(Rational(val));
    return s;
}

SuperMat bracket_of(const SuperMat& a, const SuperMat& b) {
    SuperMat r(a.grading);
    int sign = (a.parity() == Parity::odd && b.parity() == Parity::odd) ? 1 : -1;
    r.m = a.m * b.m + (b.m * a.m).scaled(Cyclotomic(sign));
    return r;
}

std::vector<Cyclotomic> flatten(const SuperMat& s) {
    std::vector<Cyclotomic> v;
    for (size_t i = 0; i < s.grading.size(); ++i)
        for (size_t j = 0; j < s.grading.size(); ++j) v.push_back(s.m.at(i, j));
    return v;
}

// Fill in structure constants by expanding supercommutators in the basis.
void extract_brackets(SmallAlgebra& alg, const std::vector<SuperMat>& mats) {
    size_t n = mats.size();
    size_t fl = flatten(mats[0]).size();
    Matrix basis(fl, n);
    for (size_t k = 0; k < n; ++k) {
        auto col = flatten(mats[k]);
        for (size_t r = 0; r < fl; ++r) basis.at(r, k) = col[r];
    }
    alg.bracket.assign(n, std::vector<std::vector<std::pair<int, Cyclotomic>>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto br = flatten(bracket_of(mats[i], mats[j]));
            auto sol = basis.solve(br);
            if (!sol.has_value())
                raise("BadParameter", "bracket not in span for algebra " + alg.name);
            for (size_t k = 0; k < n; ++k)
                if (!(*sol)[k].is_zero()) alg.bracket[i][j].push_back({static_cast<int>(k), (*sol)[k]});
        }
}

AlgebraGen root_gen(RootVector r, Parity p) {
    AlgebraGen g;
    g.key = GenKey::of_root(r);
    g.parity = p;
    g.weight = std::move(r);
    return g;
}

AlgebraGen cartan_gen(long idx, std::vector<Cyclotomic> coords, long dim) {
    AlgebraGen g;
    g.key = GenKey::of_cartan(idx);
    g.parity = Parity::even;
    g.weight = RootVector(dim, 0);
    g.cartan_coords = std::move(coords);
    return g;
}

} // namespace

AlgebraPtr make_sl2() {
    auto alg = std::make_shared<SmallAlgebra>();
    alg->name = "sl2";
    alg->coord_dim = 2;
    std::vector<Parity> gr = {Parity::even, Parity::even};
    std::vector<SuperMat> mats;
    // order: f | h | e
    mats.push_back(unit_mat(gr, 1, 0));
    SuperMat h(gr);
    h.m.at(0, 0) = Cyclotomic(1);
    h.m.at(1, 1) = Cyclotomic(-1);
    mats.push_back(h);
    mats.push_back(unit_mat(gr, 0, 1));

    alg->gens.push_back(root_gen({-1, 1}, Parity::even));
    alg->gens.push_back(cartan_gen(0, {Cyclotomic(1), Cyclotomic(-1)}, 2));
    alg->gens.push_back(root_gen({1, -1}, Parity::even));
    alg->lowering_end = 1;
    alg->raising_begin = 2;
    extract_brackets(*alg, mats);
    alg->rs = build_root_system(parse_family("An", {"1"}));
    return alg;
}

AlgebraPtr make_osp12() {
    auto alg = std::make_shared<SmallAlgebra>();
    alg->name = "osp12";
    alg->coord_dim = 1;
    // module k^{1|2}: basis (w, v_+, v_-), w even
    std::vector<Parity> gr = {Parity::even, Parity::odd, Parity::odd};
    // x = x_delta: v_- -> w -> v_+;  y0: v_+ -> w -> -v_-
    SuperMat x(gr);
    x.m.at(0, 2) = Cyclotomic(1);
    x.m.at(1, 0) = Cyclotomic(1);
    SuperMat y0(gr);
    y0.m.at(0, 1) = Cyclotomic(1);
    y0.m.at(2, 0) = Cyclotomic(-1);
    SuperMat y = y0; // x_{-delta} = 2*y0 so that [x_delta, x_{-delta}] = 2*dual
    y.m = y0.m.scaled(Cyclotomic(2));
    SuperMat e(gr);
    e.m.at(1, 2) = Cyclotomic(1); // x_{2delta}
    SuperMat f(gr);
    f.m.at(2, 1) = Cyclotomic(1); // x_{-2delta}
    SuperMat h(gr);
    h.m.at(1, 1) = Cyclotomic(1);
    h.m.at(2, 2) = Cyclotomic(-1);

    // order: f | y | h | x | e
    std::vector<SuperMat> mats = {f, y, h, x, e};
    alg->gens.push_back(root_gen({-2}, Parity::even));
    alg->gens.push_back(root_gen({-1}, Parity::odd));
    alg->gens.push_back(cartan_gen(0, {Cyclotomic(1)}, 1));
    alg->gens.push_back(root_gen({1}, Parity::odd));
    alg->gens.push_back(root_gen({2}, Parity::even));
    alg->lowering_end = 2;
    alg->raising_begin = 3;
    extract_brackets(*alg, mats);
    alg->rs = build_root_system(parse_family("B", {"0", "1"}));
    return alg;
}

AlgebraPtr make_sl21(const std::string& order) {
    auto alg = std::make_shared<SmallAlgebra>();
    alg->name = "sl21";
    alg->coord_dim = 3;
    std::vector<Parity> gr = {Parity::even, Parity::even, Parity::odd};
    SuperMat e = unit_mat(gr, 0, 1);
    SuperMat f = unit_mat(gr, 1, 0);
    SuperMat h1(gr);
    h1.m.at(0, 0) = Cyclotomic(1);
    h1.m.at(1, 1) = Cyclotomic(-1);
    SuperMat h2(gr);
    h2.m.at(1, 1) = Cyclotomic(1);
    h2.m.at(2, 2) = Cyclotomic(1);
    SuperMat x1 = unit_mat(gr, 0, 2); // eps1 - delta1
    SuperMat x2 = unit_mat(gr, 1, 2); // eps2 - delta1
    SuperMat y1 = unit_mat(gr, 2, 0); // delta1 - eps1
    SuperMat y2 = unit_mat(gr, 2, 1); // delta1 - eps2

    auto g_f = root_gen({-1, 1, 0}, Parity::even);
    auto g_y1 = root_gen({-1, 0, 1}, Parity::odd);
    auto g_y2 = root_gen({0, -1, 1}, Parity::odd);
    auto g_h1 = cartan_gen(0, {Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)}, 3);
    auto g_h2 = cartan_gen(1, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(1)}, 3);
    auto g_e = root_gen({1, -1, 0}, Parity::even);
    auto g_x1 = root_gen({1, 0, -1}, Parity::odd);
    auto g_x2 = root_gen({0, 1, -1}, Parity::odd);

    std::vector<SuperMat> mats;
    if (order == "principal") {
        mats = {f, y1, y2, h1, h2, e, x1, x2};
        alg->gens = {g_f, g_y1, g_y2, g_h1, g_h2, g_e, g_x1, g_x2};
        alg->lowering_end = 3;
        alg->raising_begin = 5;
    } else if (order == "kac") {
        mats = {y1, y2, f, h1, h2, e, x1, x2};
        alg->gens = {g_y1, g_y2, g_f, g_h1, g_h2, g_e, g_x1, g_x2};
        alg->lowering_end = 2;
        alg->raising_begin = 6;
    } else {
        raise("BadParameter", "unknown sl21 basis order '" + order + "'");
    }
    extract_brackets(*alg, mats);
    alg->rs = build_root_system(parse_family("A", {"1", "0"}));
    return alg;
}

AlgebraPtr make_qwit() {
    auto alg = std::make_shared<SmallAlgebra>();
    alg->name = "qwit";
    alg->coord_dim = 1;
    alg->gens.push_back(cartan_gen(0, {Cyclotomic(1)}, 1));
    AlgebraGen s;
    s.key = GenKey::of_aux(0);
    s.parity = Parity::odd;
    s.weight = {0};
    alg->gens.push_back(s);
    alg->bracket.assign(2, std::vector<std::vector<std::pair<int, Cyclotomic>>>(2));
    alg->bracket[1][1].push_back({0, Cyclotomic(2)}); // [s,s] = 2h
    alg->lowering_end = 0;
    alg->raising_begin = 2;
    return alg;
}

AlgebraPtr make_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
    auto alg = std::make_shared<SmallAlgebra>();
    alg->name = a->name + "+" + b->name;
    alg->coord_dim = a->coord_dim + b->coord_dim;
    long acartan = 0, aaux = 0;
    for (const auto& g : a->gens) {
        if (g.key.kind == GenKind::cartan) ++acartan;
        if (g.key.kind == GenKind::aux) ++aaux;
    }
    auto pad = [&](const AlgebraGen& g, bool left) {
        AlgebraGen r = g;
        RootVector w(alg->coord_dim, 0);
        for (size_t i = 0; i < g.weight.size(); ++i)
            w[left ? i : a->coord_dim + i] = g.weight[i];
        r.weight = std::move(w);
        if (g.key.kind == GenKind::root) r.key = GenKey::of_root(r.weight);
        if (!g.cartan_coords.empty()) {
            std::vector<Cyclotomic> c(alg->coord_dim, Cyclotomic());
            for (size_t i = 0; i < g.cartan_coords.size(); ++i)
                c[left ? i : a->coord_dim + i] = g.cartan_coords[i];
            r.cartan_coords = std::move(c);
        }
        if (!left) {
            if (g.key.kind == GenKind::cartan) r.key = GenKey::of_cartan(g.key.index + acartan);
            if (g.key.kind == GenKind::aux) r.key = GenKey::of_aux(g.key.index + aaux);
        }
        return r;
    };
    for (const auto& g : a->gens) alg->gens.push_back(pad(g, true));
    for (const auto& g : b->gens) alg->gens.push_back(pad(g, false));
    size_t na = a->size(), n = alg->gens.size();
    alg->bracket.assign(n, std::vector<std::vector<std::pair<int, Cyclotomic>>>(n));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) alg->bracket[i][j] = a->bracket[i][j];
    for (size_t i = 0; i < b->size(); ++i)
        for (size_t j = 0; j < b->size(); ++j) {
            for (auto [k, c] : b->bracket[i][j])
                alg->bracket[na + i][na + j].push_back({static_cast<int>(na + k), c});
        }
    // straightening order is not used for sums; mark everything as middle
    alg->lowering_end = 0;
    alg->raising_begin = static_cast<int>(n);
    return alg;
}

AlgebraPtr algebra_by_name(const std::string& name) {
    auto plus = name.find('+');
    if (plus != std::string::npos)
        return make_sum(algebra_by_name(name.substr(0, plus)),
                        algebra_by_name(name.substr(plus + 1)));
    if (name == "sl2") return make_sl2();
    if (name == "osp12") return make_osp12();
    if (name == "sl21") return make_sl21();
    if (name == "qwit") return make_qwit();
    raise("BadParameter", "unknown algebra '" + name + "'");
    return nullptr;
}

// --- straightening ---------------------------------------------------------

namespace {

void accumulate(UEAElt& into, const Word& w, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = into.find(w);
    if (it == into.end()) into.emplace(w, c);
    else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

void accumulate(UEAElt& into, const UEAElt& e, const Cyclotomic& scale) {
    for (const auto& [w, c] : e) accumulate(into, w, c * scale);
}

} // namespace

UEAElt UEA::normal_form(const Word& w) const {
    // locate the first violation of normal order
    size_t bad = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1] || (w[i] == w[i + 1] && g_->is_odd(w[i]))) {
            bad = i;
            break;
        }
    }
    if (bad == w.size()) return {{w, Cyclotomic(1)}};

    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    int a = w[bad], b = w[bad + 1];
    UEAElt result;
    Word head(w.begin(), w.begin() + bad);
    Word tail(w.begin() + bad + 2, w.end());
    auto splice = [&](int mid, const Cyclotomic& coef) {
        Word nw = head;
        if (mid >= 0) nw.push_back(mid);
        nw.insert(nw.end(), tail.begin(), tail.end());
        accumulate(result, normal_form(nw), coef);
    };
    auto splice2 = [&](int m1, int m2, const Cyclotomic& coef) {
        Word nw = head;
        nw.push_back(m1);
        nw.push_back(m2);
        nw.insert(nw.end(), tail.begin(), tail.end());
        accumulate(result, normal_form(nw), coef);
    };

    if (a == b) {
        // odd square: a*a = [a,a]/2
        for (auto [k, c] : g_->bracket[a][b]) splice(k, c * Cyclotomic(Rational(1, 2)));
    } else {
        // a b = +- b a + [a,b]
        Cyclotomic sign((g_->is_odd(a) && g_->is_odd(b)) ? -1 : 1);
        splice2(b, a, sign);
        for (auto [k, c] : g_->bracket[a][b]) splice(k, c);
    }
    memo_.emplace(w, result);
    return result;
}

UEAElt UEA::gen_times(int gen, const UEAElt& e) const {
    UEAElt result;
    for (const auto& [w, c] : e) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(gen);
        nw.insert(nw.end(), w.begin(), w.end());
        accumulate(result, normal_form(nw), c);
    }
    return result;
}

} // namespace sw
