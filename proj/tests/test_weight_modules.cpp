#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superweight/errors.hpp"
#include "superweight/weight_modules.hpp"

#include <random>

using namespace sw;

namespace {

Weight wt(std::vector<long> coords) {
    std::vector<Cyclotomic> c;
    for (long x : coords) c.emplace_back(Rational(x));
    return Weight(std::move(c));
}

Weight wtr(std::vector<Rational> coords) { return Weight::from_rationals(coords); }

} // namespace

TEST_CASE("F(3) over sl2") {
    auto g = make_sl2();
    ModuleWindow m = finite_simple_module(g, wt({3, 0}));
    CHECK(m.dim() == 4);
    CHECK(m.spaces.size() == 4);
    for (const auto& [w, ps] : m.spaces) CHECK(ps.size() == 1);
    CHECK(check_bracket_fidelity(m).empty());
    CHECK(m.dim_at(wt({3, 0})) == 1);
    CHECK(m.dim_at(wt({0, 3})) == 1); // lambda - 3 alpha
}

TEST_CASE("F(0) and dominance errors") {
    auto g = make_sl2();
    CHECK(finite_simple_module(g, wt({0, 0})).dim() == 1);
    CHECK_THROWS_AS(finite_simple_module(g, wt({-1, 0})), DomainError);
    CHECK_THROWS_AS(finite_simple_module(g, wtr({Rational(1, 2), Rational(0)})), DomainError);
}

TEST_CASE("osp(1|2) spin module") {
    auto g = make_osp12();
    ModuleWindow m = finite_simple_module(g, wt({1}));
    // dim = 2n+1 with n = 1, weights delta-string (1,1,1)
    CHECK(m.dim() == 3);
    CHECK(m.spaces.size() == 3);
    CHECK(check_bracket_fidelity(m).empty());
    // cross-check the dimension formula on more highest weights
    for (long n = 0; n <= 4; ++n)
        CHECK(finite_simple_module(g, wt({n})).dim() == 2 * n + 1);
}

TEST_CASE("sl(2|1) typical Kac dimension 4 dim F0") {
    auto g = make_sl21();
    // typical lambda: lambda1 + lambda3 + 1 != 0 and lambda2 + lambda3 != 0
    for (auto lam : {wt({2, 1, 5}), wt({3, 0, 1}), wt({1, 0, 3})}) {
        long n = 2;
        {
            Cyclotomic d = lam.coords[0] - lam.coords[1];
            n = d.rational_part().to_long();
        }
        ModuleWindow m = finite_simple_module(g, lam);
        CHECK(m.dim() == 4 * (n + 1));
        CHECK(check_bracket_fidelity(m).empty());
    }
}

TEST_CASE("sl(2|1) atypical module is smaller") {
    auto g = make_sl21();
    // lambda2 + lambda3 = 0 forces atypicality; trivial module
    ModuleWindow m = finite_simple_module(g, wt({0, 0, 0}));
    CHECK(m.dim() == 1);
}

TEST_CASE("constructed highest weight modules are certified simple") {
    for (long n = 0; n <= 4; ++n) {
        CHECK(simplicity_check(finite_simple_module(make_sl2(), wt({n, 0}))).verdict ==
              SimpleVerdict::simple);
        CHECK(simplicity_check(finite_simple_module(make_osp12(), wt({n}))).verdict ==
              SimpleVerdict::simple);
    }
    // typical and atypical sl(2|1) weights alike
    for (auto lam : {wt({2, 1, 5}), wt({4, 0, 2}), wt({2, 1, -1}), wt({3, 1, -1})}) {
        ModuleWindow f = finite_simple_module(make_sl21(), lam);
        CHECK(simplicity_check(f).verdict == SimpleVerdict::simple);
        CHECK(check_bracket_fidelity(f).empty());
    }
    // the atypical quotient is a proper quotient of the Kac module
    ModuleWindow atyp = finite_simple_module(make_sl21(), wt({2, 1, -1}));
    CHECK(atyp.dim() < 8);
    CHECK(atyp.dim() > 0);
}

TEST_CASE("even part simple of sl(2|1)") {
    auto g = make_sl21();
    ModuleWindow s = even_part_simple(g, wt({2, 1, 5}));
    CHECK(s.dim() == 2);
    CHECK(check_bracket_fidelity(s).empty());
}

TEST_CASE("Kac module dimensions") {
    auto g = make_sl21();
    ModuleWindow s1 = even_part_simple(g, wt({0, 0, 1}));
    ModuleWindow k1 = kac_module_typeI(g, s1);
    CHECK(k1.dim() == 4);
    CHECK(check_bracket_fidelity(k1).empty());

    ModuleWindow s2 = even_part_simple(g, wt({1, 0, 1}));
    ModuleWindow k2 = kac_module_typeI(g, s2);
    CHECK(k2.dim() == 8);
    CHECK(check_bracket_fidelity(k2).empty());

    CHECK_THROWS_AS(kac_module_typeI(make_osp12(), s1), DomainError);
    try {
        kac_module_typeI(make_osp12(), s1);
    } catch (const DomainError& e) {
        CHECK(e.code() == "NotTypeI");
    }
}

TEST_CASE("Kac module of a typical weight matches the simple module") {
    auto g = make_sl21();
    Weight lam = wt({2, 1, 5});
    ModuleWindow f = finite_simple_module(g, lam);
    ModuleWindow k = kac_module_typeI(g, even_part_simple(g, lam));
    CHECK(f.character() == k.character());
}

TEST_CASE("dense sl2 window") {
    auto g = make_sl2();
    DenseParams p;
    p.mu = Cyclotomic(Rational(1, 3));
    p.q0 = Cyclotomic(1);
    p.window = 20;
    ModuleWindow m = rank1_cuspidal(g, p);
    CHECK(m.dim() == 41);
    for (const auto& [w, ps] : m.spaces) CHECK(ps.size() == 1);
    CHECK(check_bracket_fidelity(m).empty());
    CHECK(!m.total());

    // q_{-2} = 0 for mu = 1/2
    DenseParams bad;
    bad.mu = Cyclotomic(Rational(1, 2));
    bad.q0 = Cyclotomic(1);
    bad.window = 5;
    CHECK_THROWS_AS(rank1_cuspidal(g, bad), DomainError);
    try {
        rank1_cuspidal(g, bad);
    } catch (const DomainError& e) {
        CHECK(e.code() == "DegenerateParameters");
    }
}

TEST_CASE("dense osp(1|2) window") {
    auto g = make_osp12();
    DenseParams p;
    p.mu = Cyclotomic(Rational(1, 3));
    p.q0 = Cyclotomic(Rational(1, 5));
    p.window = 10;
    ModuleWindow m = rank1_cuspidal(g, p);
    CHECK(m.dim() == 21);
    CHECK(check_bracket_fidelity(m).empty());
    // odd generator acts injectively both ways on the interior:
    // 2 x_delta^2 = x_{2delta} holds via bracket fidelity above
}

TEST_CASE("qwit module") {
    auto q = make_qwit();
    ModuleWindow m = qwit_module(q, Cyclotomic(1));
    CHECK(m.dim() == 2);
    CHECK(check_bracket_fidelity(m).empty());
}

TEST_CASE("Clebsch-Gordan dims for F(1) (x) F(1)") {
    auto g = make_sl2();
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    ModuleWindow t = tensor(f1, f1);
    CHECK(t.dim() == 4);
    CHECK(t.dim_at(wt({2, 0})) == 1);
    CHECK(t.dim_at(wt({1, 1})) == 2);
    CHECK(t.dim_at(wt({0, 2})) == 1);
    CHECK(check_bracket_fidelity(t).empty());
}

TEST_CASE("dense tensor finite has constant interior multiplicities") {
    auto g = make_sl2();
    DenseParams p;
    p.mu = Cyclotomic(Rational(1, 3));
    p.q0 = Cyclotomic(1);
    p.window = 8;
    ModuleWindow dense = rank1_cuspidal(g, p);
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    ModuleWindow t = tensor(dense, f1);
    CHECK(check_bracket_fidelity(t).empty());
    long twos = 0;
    for (const auto& [w, ps] : t.spaces)
        if (ps.size() == 2) ++twos;
    CHECK(twos >= 10); // all interior weights have multiplicity 2
}

TEST_CASE("weight additivity of tensor supports") {
    auto g = make_sl2();
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    ModuleWindow f2 = finite_simple_module(g, wt({2, 0}));
    ModuleWindow t = tensor(f1, f2);
    // support of the product is contained in the sumset, with convolved dims
    for (const auto& [w, ps] : t.spaces) {
        long conv = 0;
        for (const auto& [w1, ps1] : f1.spaces) {
            // w2 = w - w1
            std::vector<Cyclotomic> diff;
            for (size_t i = 0; i < w.coords.size(); ++i)
                diff.push_back(w.coords[i] - w1.coords[i]);
            Weight w2(diff);
            auto it = f2.spaces.find(w2);
            if (it != f2.spaces.end())
                conv += static_cast<long>(ps1.size() * it->second.size());
        }
        CHECK(static_cast<long>(ps.size()) == conv);
    }
}

TEST_CASE("Schur pattern on simple modules") {
    auto g = make_sl2();
    for (long n = 0; n <= 5; ++n) {
        EndoBasis eb = endomorphisms(finite_simple_module(g, wt({n, 0})));
        CHECK(eb.dim_even == 1);
        CHECK(eb.dim_odd == 0);
    }
    auto o = make_osp12();
    for (long n = 1; n <= 3; ++n) {
        EndoBasis eb = endomorphisms(finite_simple_module(o, wt({n})));
        CHECK(eb.dim_even == 1);
        CHECK(eb.dim_odd == 0);
    }
    auto s = make_sl21();
    for (auto lam : {wt({2, 1, 5}), wt({3, 0, 1}), wt({1, 0, 3})}) {
        EndoBasis eb = endomorphisms(finite_simple_module(s, lam));
        CHECK(eb.dim_even == 1);
        CHECK(eb.dim_odd == 0);
    }
}

TEST_CASE("odd endomorphism of the 1|1 witness") {
    auto q = make_qwit();
    ModuleWindow m = qwit_module(q, Cyclotomic(1));
    EndoBasis eb = endomorphisms(m);
    CHECK(eb.dim_even == 1);
    CHECK(eb.dim_odd == 1);
    REQUIRE(eb.sigma.has_value());
    CHECK((eb.sigma_square_sign == 1 || eb.sigma_square_sign == -1));
}

TEST_CASE("direct sum breaks the Schur pattern") {
    auto g = make_sl2();
    ModuleWindow f3 = finite_simple_module(g, wt({3, 0}));
    ModuleWindow m = module_direct_sum(f3, f3);
    CHECK(check_bracket_fidelity(m).empty());
    EndoBasis eb = endomorphisms(m);
    CHECK(eb.dim_even == 4);
}

TEST_CASE("irreducible tensor: whole case") {
    auto g = make_sl2();
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    ModuleWindow f2 = finite_simple_module(g, wt({2, 0}));
    auto r = irreducible_tensor(f1, f2);
    CHECK(r.tag == TensorTag::whole);
    CHECK(r.module.dim() == 6);
    CHECK(check_bracket_fidelity(r.module).empty());
}

TEST_CASE("irreducible tensor: half case splits the witness square") {
    auto q = make_qwit();
    ModuleWindow m = qwit_module(q, Cyclotomic(1));
    auto r = irreducible_tensor(m, m);
    CHECK(r.tag == TensorTag::half);
    CHECK(r.module.dim() == 2);
    CHECK(check_bracket_fidelity(r.module).empty());
    // the half is a simple module with trivial endomorphisms; the two
    // eigenspaces are swapped by the odd intertwiner sigma_1 (x) 1
    EndoBasis eb = endomorphisms(r.module);
    CHECK(eb.dim_even == 1);
    CHECK(eb.dim_odd == 0);
    CHECK(simplicity_check(r.module).verdict == SimpleVerdict::simple);
}

TEST_CASE("irreducible tensor: typical sl(2|1) simple against sl2 simple is whole") {
    auto s = make_sl21();
    auto g = make_sl2();
    ModuleWindow f = finite_simple_module(s, wt({2, 1, 5}));
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    auto r = irreducible_tensor(f, f1);
    CHECK(r.tag == TensorTag::whole);
    CHECK(r.module.dim() == f.dim() * f1.dim());
}

TEST_CASE("irreducible tensor rejects non-simple factors") {
    auto g = make_sl2();
    ModuleWindow f1 = finite_simple_module(g, wt({1, 0}));
    ModuleWindow nonsimple = tensor(f1, f1);
    CHECK_THROWS_AS(irreducible_tensor(nonsimple, f1), DomainError);
}

TEST_CASE("simplicity verdicts") {
    auto g = make_sl2();
    ModuleWindow f3 = finite_simple_module(g, wt({3, 0}));
    CHECK(simplicity_check(f3).verdict == SimpleVerdict::simple);

    ModuleWindow t = tensor(finite_simple_module(g, wt({1, 0})),
                            finite_simple_module(g, wt({1, 0})));
    CHECK(simplicity_check(t).verdict == SimpleVerdict::not_simple);

    DenseParams p;
    p.mu = Cyclotomic(Rational(1, 3));
    p.q0 = Cyclotomic(1);
    p.window = 8;
    auto rep = simplicity_check(rank1_cuspidal(g, p));
    CHECK(rep.verdict == SimpleVerdict::window_evidence);
    CHECK(rep.window_cyclic);

    auto q = make_qwit();
    CHECK(simplicity_check(qwit_module(q, Cyclotomic(1))).verdict == SimpleVerdict::simple);
    ModuleWindow qq = module_direct_sum(qwit_module(q, Cyclotomic(1)),
                                        qwit_module(q, Cyclotomic(1)));
    CHECK(simplicity_check(qq).verdict == SimpleVerdict::not_simple);
}

TEST_CASE("shadow of modules") {
    auto g = make_sl2();
    ModuleWindow f3 = finite_simple_module(g, wt({3, 0}));
    ShadowPartition sp = shadow_of_module(f3);
    CHECK(sp.f.size() == 2);
    CHECK(sp.i.empty());

    DenseParams p;
    p.mu = Cyclotomic(Rational(1, 3));
    p.q0 = Cyclotomic(1);
    p.window = 8;
    ShadowPartition spd = shadow_of_module(rank1_cuspidal(g, p));
    CHECK(spd.i.size() == 2);
    CHECK(spd.f.empty());

    auto o = make_osp12();
    DenseParams po;
    po.mu = Cyclotomic(Rational(1, 3));
    po.q0 = Cyclotomic(Rational(1, 5));
    po.window = 8;
    ShadowPartition spo = shadow_of_module(rank1_cuspidal(o, po));
    CHECK(spo.i.size() == 4); // all of Delta
}

TEST_CASE("induced character: Verma over sl2") {
    auto g = make_sl2();
    const RootSystem& rs = *g->rs;
    auto T = triangular_from_functional(rs, {1, -1});
    CharacterWindow cw;
    cw.mult[wt({3, 0})] = 1;
    auto out = induced_character(rs, T, cw, 1, 3);
    CHECK(out.mult.size() == 4);
    for (const auto& [w, mult] : out.mult) CHECK(mult == 1);

    auto out2 = induced_character(rs, T, cw, 2, 3);
    CHECK(out2.at(wt({3, 0})) == 1);
    CHECK(out2.at(wt({2, 1})) == 2);
    CHECK(out2.at(wt({1, 2})) == 3);
    CHECK(out2.at(wt({0, 3})) == 4);
}

TEST_CASE("induced character reproduces the Kac character") {
    auto g = make_sl21();
    const RootSystem& rs = *g->rs;
    // distinguished triangular: positive on the +1-degree odd roots only
    auto T = triangular_from_functional(rs, {1, 1, 0});
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> pickn(0, 3), pickc(-3, 3);
    for (int iter = 0; iter < 5; ++iter) {
        long n = pickn(rng);
        long c = pickc(rng);
        Weight lam = wt({n + c, c, pickc(rng) + 5});
        ModuleWindow S = even_part_simple(g, lam);
        ModuleWindow K = kac_module_typeI(g, S);
        auto out = induced_character(rs, T, S.character(), 1, 4);
        CHECK(out == K.character());
        CHECK(out.total_mass() == 4 * S.dim());
    }
}

TEST_CASE("coset violation raises") {
    auto g = make_sl2();
    const RootSystem& rs = *g->rs;
    auto T = triangular_from_functional(rs, {1, -1}); // zero part empty
    CharacterWindow cw;
    cw.mult[wt({3, 0})] = 1;
    cw.mult[wt({2, 0})] = 1; // differs by a non-lattice vector
    CHECK_THROWS_AS(induced_character(rs, T, cw, 1, 3), DomainError);
}

TEST_CASE("invariants of highest weight modules") {
    auto g = make_sl2();
    ModuleWindow f3 = finite_simple_module(g, wt({3, 0}));
    CHECK(invariants_dimension(f3, {{1, -1}}) == 1);

    ModuleWindow t = tensor(finite_simple_module(g, wt({1, 0})),
                            finite_simple_module(g, wt({1, 0})));
    CHECK(invariants_dimension(t, {{1, -1}}) == 2); // one per Clebsch-Gordan summand

    auto s = make_sl21();
    Weight lam = wt({2, 1, 5});
    ModuleWindow K = kac_module_typeI(s, even_part_simple(s, lam));
    // g_1 invariants recover the inducing module
    CHECK(invariants_dimension(K, {{1, 0, -1}, {0, 1, -1}}) == 2);
}
