#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweight/linalg.hpp"

#include <random>

using namespace sw;

namespace {
Rational rat(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("rref, rank, kernel") {
    Matrix m(2, 3);
    m.at(0, 0) = Cyclotomic(1); m.at(0, 1) = Cyclotomic(2); m.at(0, 2) = Cyclotomic(3);
    m.at(1, 0) = Cyclotomic(2); m.at(1, 1) = Cyclotomic(4); m.at(1, 2) = Cyclotomic(6);
    CHECK(m.rank() == 1);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto img = m.apply(v);
        for (const auto& x : img) CHECK(x.is_zero());
    }
}

TEST_CASE("solve consistent and inconsistent") {
    Matrix m(2, 2);
    m.at(0, 0) = Cyclotomic(1); m.at(0, 1) = Cyclotomic(1);
    m.at(1, 0) = Cyclotomic(1); m.at(1, 1) = Cyclotomic(-1);
    auto x = m.solve({Cyclotomic(3), Cyclotomic(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Cyclotomic(2));
    CHECK((*x)[1] == Cyclotomic(1));

    Matrix s(2, 1);
    s.at(0, 0) = Cyclotomic(1);
    s.at(1, 0) = Cyclotomic(1);
    CHECK(!s.solve({Cyclotomic(1), Cyclotomic(2)}).has_value());
}

TEST_CASE("solve over a cyclotomic field") {
    Cyclotomic i = Cyclotomic::zeta(4);
    Matrix m(2, 2);
    m.at(0, 0) = i; m.at(0, 1) = Cyclotomic(1);
    m.at(1, 0) = Cyclotomic(1); m.at(1, 1) = i;
    // det = i*i - 1 = -2, invertible
    auto x = m.solve({Cyclotomic(1), Cyclotomic(0)});
    REQUIRE(x.has_value());
    CHECK(i * (*x)[0] + (*x)[1] == Cyclotomic(1));
    CHECK((*x)[0] + i * (*x)[1] == Cyclotomic(0));
}

TEST_CASE("span builder") {
    SpanBuilder sb(3);
    CHECK(sb.add({Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)}));
    CHECK(sb.add({Cyclotomic(0), Cyclotomic(1), Cyclotomic(0)}));
    CHECK(!sb.add({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}));
    CHECK(sb.rank() == 2);
    CHECK(sb.contains({Cyclotomic(2), Cyclotomic(-3), Cyclotomic(2)}));
    CHECK(!sb.contains({Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)}));
}

TEST_CASE("lp basic feasibility and optimum") {
    // minimize x + y subject to x + y >= 2, x >= 0, y >= 0
    std::vector<LinConstraint> cons;
    cons.push_back({{rat(1), rat(1)}, Cmp::GE, rat(2)});
    cons.push_back({{rat(1), rat(0)}, Cmp::GE, rat(0)});
    cons.push_back({{rat(0), rat(1)}, Cmp::GE, rat(0)});
    auto res = lp_minimize({rat(1), rat(1)}, cons);
    REQUIRE(res.feasible);
    REQUIRE(res.bounded);
    CHECK(res.value == rat(2));

    // infeasible: x >= 1 and x <= 0
    std::vector<LinConstraint> bad;
    bad.push_back({{rat(1)}, Cmp::GE, rat(1)});
    bad.push_back({{rat(1)}, Cmp::LE, rat(0)});
    CHECK(!lp_minimize({rat(0)}, bad).feasible);

    // unbounded: minimize x with x <= 0
    std::vector<LinConstraint> unb;
    unb.push_back({{rat(1)}, Cmp::LE, rat(0)});
    auto u = lp_minimize({rat(1)}, unb);
    CHECK(u.feasible);
    CHECK(!u.bounded);
}

TEST_CASE("lp exact fractional optimum") {
    // minimize -x - y st 2x + y <= 3, x + 3y <= 5 => vertex (4/5, 7/5)
    std::vector<LinConstraint> cons;
    cons.push_back({{rat(2), rat(1)}, Cmp::LE, rat(3)});
    cons.push_back({{rat(1), rat(3)}, Cmp::LE, rat(5)});
    cons.push_back({{rat(1), rat(0)}, Cmp::GE, rat(0)});
    cons.push_back({{rat(0), rat(1)}, Cmp::GE, rat(0)});
    auto res = lp_minimize({rat(-1), rat(-1)}, cons);
    REQUIRE(res.feasible);
    REQUIRE(res.bounded);
    CHECK(res.x[0] == rat(4, 5));
    CHECK(res.x[1] == rat(7, 5));
}

TEST_CASE("cone membership") {
    std::vector<std::vector<Rational>> gens = {{rat(1), rat(0)}, {rat(1), rat(1)}};
    CHECK(in_rational_cone(gens, {rat(3), rat(1)}));
    CHECK(in_rational_cone(gens, {rat(0), rat(0)}));
    CHECK(!in_rational_cone(gens, {rat(-1), rat(0)}));
    CHECK(!in_rational_cone(gens, {rat(0), rat(1)}));
    CHECK(!in_rational_cone(gens, {rat(-1), rat(1)}));
    CHECK(in_rational_cone({}, {rat(0), rat(0)}));
    CHECK(!in_rational_cone({}, {rat(1), rat(0)}));
    // saturation style: (1,1,1) in cone of {(2,0,0),(0,2,0),(0,0,2)}
    std::vector<std::vector<Rational>> evens = {
        {rat(2), rat(0), rat(0)}, {rat(0), rat(2), rat(0)}, {rat(0), rat(0), rat(2)}};
    CHECK(in_rational_cone(evens, {rat(1), rat(1), rat(1)}));
}

TEST_CASE("random lp feasibility agrees with witness construction") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        // random generators in Z^3, random nonnegative combo as target
        std::vector<std::vector<Rational>> gens;
        for (int g = 0; g < 4; ++g)
            gens.push_back({rat(coef(rng)), rat(coef(rng)), rat(coef(rng))});
        std::uniform_int_distribution<long> cc(0, 3);
        std::vector<Rational> target(3, rat(0));
        for (int g = 0; g < 4; ++g) {
            long k = cc(rng);
            for (int d = 0; d < 3; ++d) target[d] += rat(k) * gens[g][d];
        }
        CHECK(in_rational_cone(gens, target));
    }
}
