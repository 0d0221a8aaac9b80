#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweight/combinatorics.hpp"
#include "superweight/errors.hpp"

#include <random>
#include <set>

using namespace sw;

namespace {

RootSystem make(const std::string& name, std::vector<std::string> params) {
    return build_root_system(parse_family(name, params));
}

// Independent oracle: does some m*mu with 1 <= m <= cap equal a Z_+
// combination of the generators with every coefficient <= cap?  DFS with
// per-coordinate reachability pruning.
bool cone_member_bruteforce(const std::vector<RootVector>& gens, const RootVector& mu, long cap = 12) {
    if (rv_is_zero(mu)) return true;
    if (gens.empty()) return false;
    size_t dim = mu.size();
    // suffix min/max attainable contribution per coordinate
    size_t k = gens.size();
    std::vector<std::vector<long>> smin(k + 1, std::vector<long>(dim, 0));
    std::vector<std::vector<long>> smax(k + 1, std::vector<long>(dim, 0));
    for (size_t g = k; g-- > 0;) {
        for (size_t d = 0; d < dim; ++d) {
            long lo = std::min(0L, gens[g][d] * cap);
            long hi = std::max(0L, gens[g][d] * cap);
            smin[g][d] = smin[g + 1][d] + lo;
            smax[g][d] = smax[g + 1][d] + hi;
        }
    }
    std::function<bool(size_t, RootVector&)> dfs = [&](size_t g, RootVector& rest) -> bool {
        if (g == k) return rv_is_zero(rest);
        for (size_t d = 0; d < dim; ++d)
            if (rest[d] < smin[g][d] || rest[d] > smax[g][d]) return false;
        for (long c = 0; c <= cap; ++c) {
            RootVector next(dim);
            for (size_t d = 0; d < dim; ++d) next[d] = rest[d] - c * gens[g][d];
            if (dfs(g + 1, next)) return true;
        }
        return false;
    };
    for (long m = 1; m <= cap; ++m) {
        RootVector target(dim);
        for (size_t d = 0; d < dim; ++d) target[d] = m * mu[d];
        if (dfs(0, target)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("closed subsets") {
    RootSystem sl21 = make("A", {"1", "0"});
    CHECK(is_closed(sl21, {{1, -1, 0}}));
    CHECK(!is_closed(sl21, {{1, 0, -1}, {0, -1, 1}})); // sum eps1-eps2 is a root, missing
    RootSystem osp12 = make("B", {"0", "1"});
    CHECK(is_closed(osp12, {{1}, {2}}));
    CHECK(!is_closed(osp12, {{1}}));  // delta+delta = 2delta missing
    CHECK_THROWS_AS(is_closed(sl21, {{5, 5, 5}}), DomainError);
}

TEST_CASE("parabolic subsets") {
    RootSystem osp12 = make("B", {"0", "1"});
    CHECK(is_parabolic(osp12, {{1}, {2}}));
    CHECK(!is_parabolic(osp12, {{2}}));
    std::vector<RootVector> all;
    for (const auto& rd : osp12.roots) all.push_back(rd.coords);
    CHECK(is_parabolic(osp12, all));
    RootSystem sl21 = make("A", {"1", "0"});
    std::vector<RootVector> all21;
    for (const auto& rd : sl21.roots) all21.push_back(rd.coords);
    CHECK(is_parabolic(sl21, all21));
}

TEST_CASE("triangular decomposition from a functional") {
    RootSystem sl21 = make("A", {"1", "0"});
    auto t = triangular_from_functional(sl21, {1, 0, 0});
    CHECK(t.proper);
    std::set<RootVector> plus(t.plus.begin(), t.plus.end());
    CHECK(plus == std::set<RootVector>{{1, -1, 0}, {1, 0, -1}});
    CHECK(t.zero.size() == 2); // +-(eps2 - delta1)
    CHECK(t.minus.size() == 2);

    auto improper = triangular_from_functional(sl21, {0, 0, 0});
    CHECK(!improper.proper);
    CHECK(improper.zero.size() == sl21.roots.size());

    RootSystem osp12 = make("B", {"0", "1"});
    auto t2 = triangular_from_functional(osp12, {1});
    CHECK(t2.plus.size() == 2);
    CHECK(t2.zero.empty());
}

TEST_CASE("cone membership basics") {
    // positive combination
    CHECK(cone_member({{1}, {2}}, {3}));
    // opposite ray
    CHECK(!cone_member({{1, -1, 0}}, {-1, 1, 0}));
    // D(2,1;a) saturation: eps1+eps2+eps3 has double in Z_+ Delta_even
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    RootSystem d21 = build_root_system(f);
    CHECK(cone_member(d21.even_roots(), {1, 1, 1}));
    CHECK(cone_member(d21.even_roots(), {1, -1, 1}));
}

TEST_CASE("cone membership agrees with bounded enumeration") {
    std::mt19937 rng(90210);
    std::vector<RootSystem> systems;
    systems.push_back(make("B", {"0", "1"}));
    systems.push_back(make("B", {"1", "1"}));
    systems.push_back(make("A", {"1", "0"}));
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    systems.push_back(build_root_system(f));

    int checked = 0;
    for (const auto& rs : systems) {
        std::vector<RootVector> all;
        for (const auto& rd : rs.roots) all.push_back(rd.coords);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        std::uniform_int_distribution<long> coef(0, 2);
        std::uniform_int_distribution<int> gensize(1, 4);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<RootVector> gens;
            int gs = gensize(rng);
            for (int g = 0; g < gs; ++g) gens.push_back(all[pick(rng)]);
            RootVector mu(rs.dim, 0);
            if (iter % 2 == 0) {
                // member by construction with small coefficients
                for (const auto& g : gens) {
                    long c = coef(rng);
                    for (long d = 0; d < rs.dim; ++d) mu[d] += c * g[d];
                }
            } else {
                mu = all[pick(rng)];
            }
            bool lp = cone_member(gens, mu);
            bool brute = cone_member_bruteforce(gens, mu);
            if (lp != brute) {
                CAPTURE(rs.family.label());
                CAPTURE(rv_str(mu));
            }
            CHECK(lp == brute);
            ++checked;
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("shadow from inj on sl(2|1)") {
    RootSystem sl21 = make("A", {"1", "0"});
    ShadowPartition sp = shadow_from_inj(sl21, {{1, -1, 0}, {-1, 1, 0}});
    std::set<RootVector> iset(sp.i.begin(), sp.i.end());
    CHECK(iset == std::set<RootVector>{{1, -1, 0}, {-1, 1, 0}});
    CHECK(sp.f.size() == 4); // all odd roots
    CHECK(sp.plus.empty());
    CHECK(sp.minus.empty());
}

TEST_CASE("shadow with the whole even part of D(2,1;a)") {
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    RootSystem d21 = build_root_system(f);
    ShadowPartition sp = shadow_from_inj(d21, d21.even_roots());
    CHECK(sp.i.size() == d21.roots.size()); // Delta_V^i = Delta
    CHECK(sp.f.empty());
}

TEST_CASE("shadow of the empty set") {
    RootSystem sl21 = make("A", {"1", "0"});
    ShadowPartition sp = shadow_from_inj(sl21, {});
    CHECK(sp.f.size() == sl21.roots.size());
}

TEST_CASE("shadow rejects non-closed inj") {
    RootSystem osp12 = make("B", {"0", "1"});
    CHECK_THROWS_AS(shadow_from_inj(osp12, {{1}}), DomainError);
}

TEST_CASE("shadow parts always partition Delta with plus = -minus") {
    std::mt19937 rng(777);
    RootSystem sl21 = make("A", {"1", "0"});
    std::vector<RootVector> all;
    for (const auto& rd : sl21.roots) all.push_back(rd.coords);
    for (int mask = 0; mask < (1 << 6); ++mask) {
        std::vector<RootVector> sub;
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) sub.push_back(all[b]);
        if (!is_closed(sl21, sub)) continue;
        ShadowPartition sp = shadow_from_inj(sl21, sub);
        CHECK(sp.i.size() + sp.f.size() + sp.plus.size() + sp.minus.size() == all.size());
        std::set<RootVector> minus(sp.minus.begin(), sp.minus.end());
        for (const auto& a : sp.plus) CHECK(minus.count(rv_neg(a)));
    }
}

TEST_CASE("functional for shadow reproduces the expected sl(2|1) functional") {
    RootSystem sl21 = make("A", {"1", "0"});
    ShadowPartition sp;
    sp.i = {{0, 1, -1}, {0, -1, 1}};
    sp.plus = {{1, -1, 0}, {1, 0, -1}};
    sp.minus = {{-1, 1, 0}, {-1, 0, 1}};
    auto t = functional_for_shadow(sl21, sp);
    REQUIRE(t.has_value());
    CHECK(t->functional == std::vector<long>{1, 0, 0});
    for (const auto& a : sp.i) CHECK(eval_functional(t->functional, a) == 0);
    for (const auto& a : sp.plus) CHECK(eval_functional(t->functional, a) > 0);
    for (const auto& a : sp.minus) CHECK(eval_functional(t->functional, a) < 0);
}

TEST_CASE("functional for the all-i and all-f shadows is zero") {
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    RootSystem d21 = build_root_system(f);
    auto sp = shadow_from_inj(d21, d21.even_roots());
    auto t = functional_for_shadow(d21, sp);
    REQUIRE(t.has_value());
    CHECK(t->functional == std::vector<long>(3, 0));

    RootSystem sl21 = make("A", {"1", "0"});
    auto spf = shadow_from_inj(sl21, {});
    auto tf = functional_for_shadow(sl21, spf);
    REQUIRE(tf.has_value());
    CHECK(tf->functional == std::vector<long>(3, 0));
}

TEST_CASE("functional exists for every closed inj on small systems") {
    for (auto spec : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A", {"1", "0"}}, {"B", {"0", "1"}}}) {
        RootSystem rs = make(spec.first, spec.second);
        std::vector<RootVector> all;
        for (const auto& rd : rs.roots) all.push_back(rd.coords);
        size_t n = all.size();
        for (size_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<RootVector> sub;
            for (size_t b = 0; b < n; ++b)
                if (mask & (1u << b)) sub.push_back(all[b]);
            if (!is_closed(rs, sub)) continue;
            auto sp = shadow_from_inj(rs, sub);
            auto t = functional_for_shadow(rs, sp);
            REQUIRE(t.has_value());
            for (const auto& a : sp.i) CHECK(eval_functional(t->functional, a) == 0);
            for (const auto& a : sp.plus) CHECK(eval_functional(t->functional, a) > 0);
            for (const auto& a : sp.minus) CHECK(eval_functional(t->functional, a) < 0);
        }
    }
}

TEST_CASE("monoid generated by even i-roots is a group") {
    // negatives of generators are reachable inside the cone
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    RootSystem d21 = build_root_system(f);
    auto sp = shadow_from_inj(d21, d21.even_roots());
    std::vector<RootVector> even_i;
    for (const auto& a : sp.i)
        if (d21.parity_of(a) == Parity::even) even_i.push_back(a);
    for (const auto& a : even_i) CHECK(cone_member(even_i, rv_neg(a)));
}

TEST_CASE("string classification") {
    SupportSet line;
    line.kind = SupportSet::Kind::coset;
    line.base = {Weight::from_rationals({Rational(1, 3), Rational(0)})};
    line.directions = {{1, -1}, {-1, 1}};
    CHECK(classify_string(line, {1, -1}) == StringClass::i);

    SupportSet finite;
    finite.kind = SupportSet::Kind::finite;
    finite.base = {Weight::from_rationals({Rational(1), Rational(0)})};
    CHECK(classify_string(finite, {1, -1}) == StringClass::f);

    SupportSet half;
    half.kind = SupportSet::Kind::coset;
    half.base = {Weight::from_rationals({Rational(0), Rational(0)})};
    half.directions = {{1, -1}};
    CHECK(classify_string(half, {1, -1}) == StringClass::minus);
    CHECK(classify_string(half, {-1, 1}) == StringClass::plus);

    SupportSet empty;
    CHECK_THROWS_AS(classify_string(empty, {1, -1}), DomainError);
}
