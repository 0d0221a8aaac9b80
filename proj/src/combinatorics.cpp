#include "superweight/combinatorics.hpp"

#include "superweight/errors.hpp"
#include "superweight/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sw {

namespace {

std::set<RootVector> to_set(const std::vector<RootVector>& v) {
    return std::set<RootVector>(v.begin(), v.end());
}

void check_subset(const RootSystem& rs, const std::vector<RootVector>& R) {
    for (const auto& r : R)
        if (!rs.contains(r))
            raise("NotASubsetOfDelta", "vector " + rv_str(r) + " is not a root");
}

std::vector<Rational> to_rationals(const RootVector& v) {
    std::vector<Rational> r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

} // namespace

bool is_closed(const RootSystem& rs, const std::vector<RootVector>& R) {
    check_subset(rs, R);
    auto set = to_set(R);
    for (const auto& a : R)
        for (const auto& b : R) {
            RootVector s = rv_add(a, b);
            if (rv_is_zero(s)) continue;
            if (rs.contains(s) && !set.count(s)) return false;
        }
    return true;
}

bool is_parabolic(const RootSystem& rs, const std::vector<RootVector>& R) {
    if (!is_closed(rs, R)) return false;
    auto set = to_set(R);
    for (const auto& rd : rs.roots)
        if (!set.count(rd.coords) && !set.count(rv_neg(rd.coords))) return false;
    return true;
}

long eval_functional(const std::vector<long>& l, const RootVector& alpha) {
    if (l.size() != alpha.size()) raise("DimensionMismatch", "functional dimension mismatch");
    long s = 0;
    for (size_t i = 0; i < l.size(); ++i) s += l[i] * alpha[i];
    return s;
}

TriangularDecomposition triangular_from_functional(const RootSystem& rs,
                                                   const std::vector<long>& l) {
    TriangularDecomposition t;
    t.functional = l;
    for (const auto& rd : rs.roots) {
        long v = eval_functional(l, rd.coords);
        if (v > 0) t.plus.push_back(rd.coords);
        else if (v < 0) t.minus.push_back(rd.coords);
        else t.zero.push_back(rd.coords);
    }
    t.proper = t.zero.size() != rs.roots.size();
    return t;
}

bool cone_member(const std::vector<RootVector>& generators, const RootVector& mu) {
    std::vector<std::vector<Rational>> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(to_rationals(g));
    return in_rational_cone(gens, to_rationals(mu));
}

ShadowPartition shadow_from_inj(const RootSystem& rs, const std::vector<RootVector>& inj) {
    check_subset(rs, inj);
    if (!is_closed(rs, inj))
        raise("InjNotClosed", "the injective set must be closed");
    ShadowPartition sp;
    sp.inj = inj;
    sp.cone_generators = inj;
    for (const auto& rd : rs.roots) {
        bool up = cone_member(inj, rd.coords);
        bool down = cone_member(inj, rv_neg(rd.coords));
        if (up && down) sp.i.push_back(rd.coords);
        else if (!up && !down) sp.f.push_back(rd.coords);
        else if (!up && down) sp.plus.push_back(rd.coords);
        else sp.minus.push_back(rd.coords);
    }
    return sp;
}

std::optional<TriangularDecomposition> functional_for_shadow(const RootSystem& rs,
                                                             const ShadowPartition& shadow) {
    // consistency: parts must partition Delta, with plus = -minus
    size_t covered = shadow.i.size() + shadow.f.size() + shadow.plus.size() + shadow.minus.size();
    if (covered != rs.roots.size())
        raise("InconsistentShadow", "shadow parts do not cover Delta");
    {
        auto all = to_set(shadow.i);
        for (const auto& v : shadow.f) all.insert(v);
        for (const auto& v : shadow.plus) all.insert(v);
        for (const auto& v : shadow.minus) all.insert(v);
        if (all.size() != covered) raise("InconsistentShadow", "shadow parts overlap");
        auto plus = to_set(shadow.plus);
        if (shadow.plus.size() != shadow.minus.size())
            raise("InconsistentShadow", "plus/minus parts differ in size");
        for (const auto& v : shadow.minus)
            if (!plus.count(rv_neg(v)))
                raise("InconsistentShadow", "minus part is not the negative of the plus part");
    }

    size_t d = rs.dim;
    // variables: l_1..l_d, u_1..u_d with -u_i <= l_i <= u_i
    size_t nv = 2 * d;
    std::vector<LinConstraint> cons;
    auto sign_constraint = [&](const RootVector& alpha, Cmp cmp, long rhs) {
        LinConstraint c;
        c.a.assign(nv, Rational(0));
        for (size_t i = 0; i < d; ++i) c.a[i] = Rational(alpha[i]);
        c.cmp = cmp;
        c.b = Rational(rhs);
        cons.push_back(std::move(c));
    };
    for (const auto& alpha : shadow.i) sign_constraint(alpha, Cmp::EQ, 0);
    for (const auto& alpha : shadow.plus) sign_constraint(alpha, Cmp::GE, 1);
    for (const auto& alpha : shadow.minus) sign_constraint(alpha, Cmp::LE, -1);
    for (size_t i = 0; i < d; ++i) {
        LinConstraint lo, hi;
        lo.a.assign(nv, Rational(0));
        lo.a[i] = Rational(1);
        lo.a[d + i] = Rational(1);
        lo.cmp = Cmp::GE;
        lo.b = Rational(0); // l_i + u_i >= 0
        hi.a.assign(nv, Rational(0));
        hi.a[i] = Rational(-1);
        hi.a[d + i] = Rational(1);
        hi.cmp = Cmp::GE;
        hi.b = Rational(0); // u_i - l_i >= 0
        cons.push_back(std::move(lo));
        cons.push_back(std::move(hi));
    }

    std::vector<Rational> objective(nv, Rational(0));
    for (size_t i = 0; i < d; ++i) objective[d + i] = Rational(1);
    LPResult res = lp_minimize(objective, cons);
    if (!res.feasible) return std::nullopt;

    // pin the L1 value, then lexicographically minimize l_1, l_2, ...
    {
        LinConstraint pin;
        pin.a = objective;
        pin.cmp = Cmp::EQ;
        pin.b = res.value;
        cons.push_back(std::move(pin));
    }
    std::vector<Rational> l(d, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        std::vector<Rational> obj(nv, Rational(0));
        obj[i] = Rational(1);
        LPResult step = lp_minimize(obj, cons);
        if (!step.feasible) raise("InconsistentShadow", "internal: refinement infeasible");
        l[i] = step.value;
        LinConstraint fix;
        fix.a.assign(nv, Rational(0));
        fix.a[i] = Rational(1);
        fix.cmp = Cmp::EQ;
        fix.b = l[i];
        cons.push_back(std::move(fix));
    }

    // scale to coprime integers
    mpz_class denom_lcm = 1;
    for (const auto& q : l)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.denominator().get_mpz_t());
    std::vector<long> li(d, 0);
    mpz_class g = 0;
    for (size_t i = 0; i < d; ++i) {
        mpz_class v = l[i].numerator() * (denom_lcm / l[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (!v.fits_slong_p()) raise("InconsistentShadow", "functional coordinates out of range");
        li[i] = v.get_si();
    }
    if (g > 1)
        for (auto& x : li) x /= g.get_si();

    return triangular_from_functional(rs, li);
}

std::string string_class_name(StringClass c) {
    switch (c) {
        case StringClass::f: return "f";
        case StringClass::i: return "i";
        case StringClass::plus: return "plus";
        case StringClass::minus: return "minus";
    }
    return "?";
}

StringClass classify_string(const SupportSet& support, const RootVector& alpha) {
    if (support.empty())
        raise("AmbiguousSupport", "support has no base points to sample");
    for (const auto& w : support.base)
        if (w.coords.size() != alpha.size())
            raise("DimensionMismatch", "support/root dimension mismatch");
    if (support.kind == SupportSet::Kind::finite) return StringClass::f;
    // Unbounded above iff alpha lies in the rational cone of the monoid
    // directions (saturation: some positive multiple is a Z_+ combination,
    // and revisiting a support point shifts the string by it indefinitely);
    // this is uniform over the sampled base points.
    bool up = cone_member(support.directions, alpha);
    bool down = cone_member(support.directions, rv_neg(alpha));
    if (up && down) return StringClass::i;
    if (!up && !down) return StringClass::f;
    if (!up) return StringClass::plus;  // bounded above only
    return StringClass::minus;          // bounded below only
}

} // namespace sw
