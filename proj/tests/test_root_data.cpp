#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweight/root_data.hpp"
#include "superweight/errors.hpp"

#include <random>
#include <set>

using namespace sw;

namespace {

RootSystem make(const std::string& name, std::vector<std::string> params) {
    return build_root_system(parse_family(name, params));
}

} // namespace

TEST_CASE("sl(2|1) = A(1,0) root system") {
    RootSystem rs = make("A", {"1", "0"});
    CHECK(rs.even_roots().size() == 2);
    CHECK(rs.odd_roots().size() == 4);
    CHECK(rs.parity_of({1, -1, 0}) == Parity::even);
    CHECK(rs.parity_of({1, 0, -1}) == Parity::odd);
    CHECK(rs.parity_of({0, 1, -1}) == Parity::odd);
    CHECK(!rs.parity_of({0, 0, 0}).has_value());
    CHECK(rs.even_type() == "A1+k");
}

TEST_CASE("osp(1|2) = B(0,1) root system") {
    RootSystem rs = make("B", {"0", "1"});
    CHECK(rs.roots.size() == 4);
    CHECK(rs.parity_of({1}) == Parity::odd);
    CHECK(rs.parity_of({2}) == Parity::even);
    CHECK(rs.parity_of({-1}) == Parity::odd);
    CHECK(is_root(rs, {2}) == Parity::even);
    CHECK_THROWS_AS(is_root(rs, {1, 0}), DomainError);
}

TEST_CASE("D(2,1;a) at a=1/2") {
    Family f;
    f.kind = FamilyKind::D21a;
    f.a = Rational(1, 2);
    RootSystem rs = build_root_system(f);
    CHECK(rs.even_roots().size() == 6);
    CHECK(rs.odd_roots().size() == 8);
    CHECK(rs.parity_of({2, 0, 0}) == Parity::even);
    CHECK(rs.parity_of({1, 1, -1}) == Parity::odd);
    CHECK(rs.even_type() == "A1+A1+A1");
    // every odd root is isotropic
    for (const auto& r : rs.odd_roots()) CHECK(rs.form_value(r, r).is_zero());
    CHECK_THROWS_AS(build_root_system(parse_family("D21a", {"0"})), DomainError);
    CHECK_THROWS_AS(build_root_system(parse_family("D21a", {"-1"})), DomainError);
}

TEST_CASE("family errors") {
    CHECK_THROWS_AS(make("A", {"1", "1"}), DomainError);
    CHECK_THROWS_AS(make("D", {"1", "1"}), DomainError);
    CHECK_THROWS_AS(make("B", {"1", "0"}), DomainError);
    try {
        make("A", {"2", "2"});
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == "UnsupportedFamily");
    }
}

TEST_CASE("odd root cardinalities") {
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n) {
            if (m == n) continue;
            RootSystem rs = make("A", {std::to_string(m), std::to_string(n)});
            CHECK(rs.odd_roots().size() == static_cast<size_t>(2 * (m + 1) * (n + 1)));
        }
    for (long n = 1; n <= 4; ++n) {
        RootSystem rs = make("B", {"0", std::to_string(n)});
        CHECK(rs.odd_roots().size() == static_cast<size_t>(2 * n));
    }
}

TEST_CASE("even part types match the table") {
    CHECK(make("A", {"2", "0"}).even_type() == "A2+k");
    CHECK(make("A", {"2", "1"}).even_type() == "A1+A2+k");
    CHECK(make("B", {"2", "1"}).even_type() == "A1+B2");   // C1 = A1
    CHECK(make("B", {"1", "2"}).even_type() == "A1+B2");   // B1 = A1, C2 = B2
    CHECK(make("B", {"3", "3"}).even_type() == "B3+C3");
    CHECK(make("B", {"0", "2"}).even_type() == "B2");
    CHECK(make("C", {"2"}).even_type() == "A1+k");
    CHECK(make("C", {"4"}).even_type() == "C3+k");
    CHECK(make("D", {"2", "1"}).even_type() == "A1+A1+A1"); // D2 = A1+A1, C1 = A1
    CHECK(make("D", {"3", "2"}).even_type() == "A3+B2");
    CHECK(make("D", {"4", "3"}).even_type() == "C3+D4");
    CHECK(make("F4", {}).even_type() == "A1+B3");
    CHECK(make("G3", {}).even_type() == "A1+G2");
    CHECK(make("An", {"3"}).even_type() == "A3");
    CHECK(make("Cn", {"3"}).even_type() == "C3");
}

TEST_CASE("distinguished grading") {
    RootSystem sl21 = make("A", {"1", "0"});
    auto deg = distinguished_grading(sl21);
    CHECK(deg[{1, 0, -1}] == 1);
    CHECK(deg[{0, 1, -1}] == 1);
    CHECK(deg[{-1, 0, 1}] == -1);
    CHECK(deg[{1, -1, 0}] == 0);

    RootSystem osp12 = make("B", {"0", "1"});
    auto deg2 = distinguished_grading(osp12);
    CHECK(deg2[{1}] == 1);
    CHECK(deg2[{2}] == 2);
    CHECK(deg2[{-2}] == -2);

    RootSystem c2 = make("C", {"2"});
    for (const auto& rd : c2.roots) {
        auto deg3 = distinguished_grading(c2);
        if (rd.parity == Parity::even)
            CHECK(deg3[rd.coords] == 0);
        else
            CHECK((deg3[rd.coords] == 1 || deg3[rd.coords] == -1));
    }

    // degree parity matches root parity everywhere
    for (auto name : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A", {"2", "1"}}, {"B", {"2", "2"}}, {"D", {"2", "2"}}, {"F4", {}}, {"G3", {}}}) {
        RootSystem rs = make(name.first, name.second);
        auto d = distinguished_grading(rs);
        for (const auto& rd : rs.roots) {
            long v = d[rd.coords];
            if (rd.parity == Parity::even) CHECK((v == 0 || v == 2 || v == -2));
            else CHECK((v == 1 || v == -1));
        }
    }
}

TEST_CASE("form values on sl(2|1)") {
    RootSystem rs = make("A", {"1", "0"});
    CHECK(form_value(rs, {1, -1, 0}, {1, -1, 0}) == Cyclotomic(2));
    CHECK(form_value(rs, {1, 0, -1}, {1, 0, -1}).is_zero());
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, rs.roots.size() - 1);
    for (int i = 0; i < 50; ++i) {
        const auto& a = rs.roots[pick(rng)].coords;
        const auto& b = rs.roots[pick(rng)].coords;
        CHECK(form_value(rs, a, b) == form_value(rs, b, a));
    }
}

TEST_CASE("closure parity sanity") {
    for (auto spec : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A", {"1", "0"}}, {"B", {"1", "1"}}, {"C", {"2"}}, {"G3", {}}}) {
        RootSystem rs = make(spec.first, spec.second);
        for (const auto& x : rs.roots)
            for (const auto& y : rs.roots) {
                RootVector s = rv_add(x.coords, y.coords);
                if (rv_is_zero(s)) continue;
                auto p = rs.parity_of(s);
                if (p.has_value()) CHECK(*p == parity_sum(x.parity, y.parity));
            }
    }
}

TEST_CASE("chevalley normalization") {
    for (auto spec : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A", {"1", "0"}}, {"B", {"1", "1"}}, {"B", {"0", "1"}}, {"C", {"2"}}}) {
        RootSystem rs = make(spec.first, spec.second);
        auto ch = chevalley_data(rs);
        for (const auto& rd : rs.roots) {
            const auto& e = ch[rd.coords];
            // alpha(h_alpha) = 2 for even roots
            std::vector<Cyclotomic> alpha;
            for (long c : rd.coords) alpha.push_back(Cyclotomic(Rational(c)));
            if (rd.parity == Parity::even) {
                CHECK(e.sl2_normalized);
                CHECK(weight_eval(alpha, e.h_coords) == Cyclotomic(2));
            }
            // h_{-alpha} = -h_alpha
            const auto& eneg = ch[rv_neg(rd.coords)];
            for (size_t i = 0; i < e.h_coords.size(); ++i)
                CHECK(eneg.h_coords[i] == -e.h_coords[i]);
        }
    }
}
