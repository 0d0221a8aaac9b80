#include "superweight/root_data.hpp"

#include "superweight/errors.hpp"
#include "superweight/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sw {

RootVector rv_add(const RootVector& a, const RootVector& b) {
    if (a.size() != b.size()) raise("DimensionMismatch", "root vector dimension mismatch");
    RootVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RootVector rv_neg(const RootVector& a) {
    RootVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool rv_is_zero(const RootVector& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

std::string rv_str(const RootVector& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

std::string Family::label() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::A: os << "A(" << m << "," << n << ")"; break;
        case FamilyKind::B: os << "B(" << m << "," << n << ")"; break;
        case FamilyKind::C: os << "C(" << m + 1 << ")"; break;
        case FamilyKind::D: os << "D(" << m << "," << n << ")"; break;
        case FamilyKind::D21a: os << "D(2,1;" << a.str() << ")"; break;
        case FamilyKind::F4: os << "F(4)"; break;
        case FamilyKind::G3: os << "G(3)"; break;
        case FamilyKind::PureA: os << "A" << n; break;
        case FamilyKind::PureC: os << "C" << n; break;
    }
    return os.str();
}

void RootSystem::build_index() const {
    if (!index_.empty() || roots.empty()) return;
    for (const auto& rd : roots) index_[rd.coords] = rd.parity;
}

std::optional<Parity> RootSystem::parity_of(const RootVector& v) const {
    build_index();
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::contains(const RootVector& v) const { return parity_of(v).has_value(); }

std::vector<RootVector> RootSystem::even_roots() const {
    std::vector<RootVector> r;
    for (const auto& rd : roots)
        if (rd.parity == Parity::even) r.push_back(rd.coords);
    return r;
}

std::vector<RootVector> RootSystem::odd_roots() const {
    std::vector<RootVector> r;
    for (const auto& rd : roots)
        if (rd.parity == Parity::odd) r.push_back(rd.coords);
    return r;
}

Cyclotomic RootSystem::form_value(const RootVector& x, const RootVector& y) const {
    if (x.size() != static_cast<size_t>(dim) || y.size() != static_cast<size_t>(dim))
        raise("DimensionMismatch", "form arguments must have dimension " + std::to_string(dim));
    Cyclotomic s;
    for (long i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (long j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            s += Cyclotomic(Rational(x[i]) * Rational(y[j])) * form[i][j];
        }
    }
    return s;
}

Cyclotomic RootSystem::pair_weights(const std::vector<Cyclotomic>& x,
                                    const std::vector<Cyclotomic>& y) const {
    if (x.size() != static_cast<size_t>(dim) || y.size() != static_cast<size_t>(dim))
        raise("DimensionMismatch", "weights must have dimension " + std::to_string(dim));
    Cyclotomic s;
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            if (!x[i].is_zero() && !y[j].is_zero()) s += x[i] * y[j] * form[i][j];
    return s;
}

bool RootSystem::is_type_I() const {
    switch (family.kind) {
        case FamilyKind::A:
        case FamilyKind::C: return true;
        default: return false;
    }
}

namespace {

void push_pm(std::vector<RootDatum>& out, const RootVector& v, Parity p) {
    out.push_back({v, p});
    out.push_back({rv_neg(v), p});
}

RootVector unit(long dim, long i, long val = 1) {
    RootVector v(dim, 0);
    v[i] = val;
    return v;
}

void sort_roots(std::vector<RootDatum>& roots) {
    std::sort(roots.begin(), roots.end(), [](const RootDatum& a, const RootDatum& b) {
        if (a.parity != b.parity) return a.parity == Parity::even;
        return a.coords < b.coords;
    });
}

std::vector<std::vector<Cyclotomic>> diag_form(const std::vector<Rational>& d) {
    size_t n = d.size();
    std::vector<std::vector<Cyclotomic>> g(n, std::vector<Cyclotomic>(n, Cyclotomic()));
    for (size_t i = 0; i < n; ++i) g[i][i] = Cyclotomic(d[i]);
    return g;
}

} // namespace

Family parse_family(const std::string& name, const std::vector<std::string>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            raise("BadParameter", "family " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    auto as_long = [&](const std::string& s) {
        try { return std::stol(s); } catch (...) { raise("BadParameter", "bad integer '" + s + "'"); }
        return 0L;
    };
    Family f;
    if (name == "A") { f.kind = FamilyKind::A; need(2); f.m = as_long(params[0]); f.n = as_long(params[1]); }
    else if (name == "B") { f.kind = FamilyKind::B; need(2); f.m = as_long(params[0]); f.n = as_long(params[1]); }
    else if (name == "C") { f.kind = FamilyKind::C; need(1); f.m = as_long(params[0]) - 1; }
    else if (name == "D") { f.kind = FamilyKind::D; need(2); f.m = as_long(params[0]); f.n = as_long(params[1]); }
    else if (name == "D21a") { f.kind = FamilyKind::D21a; need(1); f.a = Rational::parse(params[0]); }
    else if (name == "F4") { f.kind = FamilyKind::F4; need(0); }
    else if (name == "G3") { f.kind = FamilyKind::G3; need(0); }
    else if (name == "An") { f.kind = FamilyKind::PureA; need(1); f.n = as_long(params[0]); }
    else if (name == "Cn") { f.kind = FamilyKind::PureC; need(1); f.n = as_long(params[0]); }
    else raise("UnsupportedFamily", "unknown family '" + name + "'");
    return f;
}

RootSystem build_root_system(const Family& fam) {
    RootSystem rs;
    rs.family = fam;
    std::vector<RootDatum> roots;

    switch (fam.kind) {
        case FamilyKind::A: {
            if (fam.m < 0 || fam.n < 0) raise("BadParameter", "A(m,n) needs m,n >= 0");
            if (fam.m == fam.n)
                raise("UnsupportedFamily",
                      "A(n,n) = psl(n|n) is excluded (center bookkeeping out of scope)");
            long p = fam.m + 1, q = fam.n + 1;
            rs.dim = p + q;
            rs.eps_count = p;
            for (long i = 0; i < p; ++i)
                for (long j = 0; j < p; ++j)
                    if (i != j) roots.push_back({rv_add(unit(rs.dim, i), unit(rs.dim, j, -1)), Parity::even});
            for (long i = 0; i < q; ++i)
                for (long j = 0; j < q; ++j)
                    if (i != j) roots.push_back({rv_add(unit(rs.dim, p + i), unit(rs.dim, p + j, -1)), Parity::even});
            for (long i = 0; i < p; ++i)
                for (long j = 0; j < q; ++j)
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, p + j, -1)), Parity::odd);
            std::vector<Rational> d(p, Rational(1));
            d.insert(d.end(), q, Rational(-1));
            rs.form = diag_form(d);
            break;
        }
        case FamilyKind::B: {
            if (fam.m < 0 || fam.n < 1) raise("BadParameter", "B(m,n) needs m >= 0, n >= 1");
            long m = fam.m, n = fam.n;
            rs.dim = m + n;
            rs.eps_count = m;
            for (long i = 0; i < m; ++i) {
                for (long j = i + 1; j < m; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, j)), Parity::even);
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, j, -1)), Parity::even);
                }
                push_pm(roots, unit(rs.dim, i), Parity::even);
            }
            for (long i = 0; i < n; ++i) {
                for (long j = i + 1; j < n; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, m + i), unit(rs.dim, m + j)), Parity::even);
                    push_pm(roots, rv_add(unit(rs.dim, m + i), unit(rs.dim, m + j, -1)), Parity::even);
                }
                push_pm(roots, unit(rs.dim, m + i, 2), Parity::even);
            }
            for (long j = 0; j < n; ++j) {
                push_pm(roots, unit(rs.dim, m + j), Parity::odd);
                for (long i = 0; i < m; ++i) {
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, m + j)), Parity::odd);
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, m + j, -1)), Parity::odd);
                }
            }
            std::vector<Rational> d(m, Rational(1));
            d.insert(d.end(), n, Rational(-1));
            rs.form = diag_form(d);
            break;
        }
        case FamilyKind::C: {
            long n = fam.m; // C(n+1)
            if (n < 1) raise("BadParameter", "C(n+1) needs n >= 1");
            rs.dim = 1 + n;
            rs.eps_count = 1;
            for (long i = 0; i < n; ++i) {
                for (long j = i + 1; j < n; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, 1 + i), unit(rs.dim, 1 + j)), Parity::even);
                    push_pm(roots, rv_add(unit(rs.dim, 1 + i), unit(rs.dim, 1 + j, -1)), Parity::even);
                }
                push_pm(roots, unit(rs.dim, 1 + i, 2), Parity::even);
            }
            for (long j = 0; j < n; ++j) {
                push_pm(roots, rv_add(unit(rs.dim, 0), unit(rs.dim, 1 + j)), Parity::odd);
                push_pm(roots, rv_add(unit(rs.dim, 0), unit(rs.dim, 1 + j, -1)), Parity::odd);
            }
            std::vector<Rational> d(1, Rational(1));
            d.insert(d.end(), n, Rational(-1));
            rs.form = diag_form(d);
            break;
        }
        case FamilyKind::D: {
            if (fam.m < 2 || fam.n < 1) raise("BadParameter", "D(m,n) needs m >= 2, n >= 1");
            long m = fam.m, n = fam.n;
            rs.dim = m + n;
            rs.eps_count = m;
            for (long i = 0; i < m; ++i)
                for (long j = i + 1; j < m; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, j)), Parity::even);
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, j, -1)), Parity::even);
                }
            for (long i = 0; i < n; ++i) {
                for (long j = i + 1; j < n; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, m + i), unit(rs.dim, m + j)), Parity::even);
                    push_pm(roots, rv_add(unit(rs.dim, m + i), unit(rs.dim, m + j, -1)), Parity::even);
                }
                push_pm(roots, unit(rs.dim, m + i, 2), Parity::even);
            }
            for (long i = 0; i < m; ++i)
                for (long j = 0; j < n; ++j) {
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, m + j)), Parity::odd);
                    push_pm(roots, rv_add(unit(rs.dim, i), unit(rs.dim, m + j, -1)), Parity::odd);
                }
            std::vector<Rational> d(m, Rational(1));
            d.insert(d.end(), n, Rational(-1));
            rs.form = diag_form(d);
            break;
        }
        case FamilyKind::D21a: {
            if (fam.a.is_zero() || fam.a == Rational(-1))
                raise("BadParameter", "D(2,1;a) needs a not in {0,-1}");
            rs.dim = 3;
            rs.eps_count = 3;
            for (long i = 0; i < 3; ++i) push_pm(roots, unit(3, i, 2), Parity::even);
            for (long s1 : {1L, -1L})
                for (long s2 : {1L, -1L})
                    roots.push_back({{1, s1, s2}, Parity::odd});
            for (long s1 : {1L, -1L})
                for (long s2 : {1L, -1L})
                    roots.push_back({{-1, s1, s2}, Parity::odd});
            // invariant form pinned by isotropy of the odd roots:
            // -(1+a) + 1 + a = 0
            rs.form = diag_form({-(Rational(1) + fam.a), Rational(1), fam.a});
            break;
        }
        case FamilyKind::F4: {
            // stored unit is half of the usual eps/delta unit
            rs.dim = 4;
            rs.eps_count = 3;
            for (long i = 0; i < 3; ++i) {
                for (long j = i + 1; j < 3; ++j) {
                    push_pm(roots, rv_add(unit(4, i, 2), unit(4, j, 2)), Parity::even);
                    push_pm(roots, rv_add(unit(4, i, 2), unit(4, j, -2)), Parity::even);
                }
                push_pm(roots, unit(4, i, 2), Parity::even);
            }
            push_pm(roots, unit(4, 3, 2), Parity::even);
            for (long s1 : {1L, -1L})
                for (long s2 : {1L, -1L})
                    for (long s3 : {1L, -1L})
                        roots.push_back({{s1, s2, s3, 1}, Parity::odd});
            for (long s1 : {1L, -1L})
                for (long s2 : {1L, -1L})
                    for (long s3 : {1L, -1L})
                        roots.push_back({{s1, s2, s3, -1}, Parity::odd});
            rs.form = diag_form({Rational(1), Rational(1), Rational(1), Rational(-3)});
            break;
        }
        case FamilyKind::G3: {
            // coordinates (eps1, eps2, delta) with eps3 = -eps1-eps2
            rs.dim = 3;
            rs.eps_count = 2;
            std::vector<RootVector> g2_pos = {
                {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {2, 1, 0}, {1, 2, 0}};
            for (const auto& v : g2_pos) push_pm(roots, v, Parity::even);
            push_pm(roots, {0, 0, 2}, Parity::even);
            push_pm(roots, {0, 0, 1}, Parity::odd);
            std::vector<RootVector> eps = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}};
            for (const auto& e : eps) {
                push_pm(roots, rv_add(e, {0, 0, 1}), Parity::odd);
                push_pm(roots, rv_add(e, {0, 0, -1}), Parity::odd);
            }
            rs.form = {
                {Cyclotomic(2), Cyclotomic(-1), Cyclotomic(0)},
                {Cyclotomic(-1), Cyclotomic(2), Cyclotomic(0)},
                {Cyclotomic(0), Cyclotomic(0), Cyclotomic(-2)}};
            break;
        }
        case FamilyKind::PureA: {
            if (fam.n < 1) raise("BadParameter", "A_n needs n >= 1");
            long p = fam.n + 1;
            rs.dim = p;
            rs.eps_count = p;
            for (long i = 0; i < p; ++i)
                for (long j = 0; j < p; ++j)
                    if (i != j) roots.push_back({rv_add(unit(p, i), unit(p, j, -1)), Parity::even});
            rs.form = diag_form(std::vector<Rational>(p, Rational(1)));
            break;
        }
        case FamilyKind::PureC: {
            if (fam.n < 1) raise("BadParameter", "C_n needs n >= 1");
            long n = fam.n;
            rs.dim = n;
            rs.eps_count = 0;
            for (long i = 0; i < n; ++i) {
                for (long j = i + 1; j < n; ++j) {
                    push_pm(roots, rv_add(unit(n, i), unit(n, j)), Parity::even);
                    push_pm(roots, rv_add(unit(n, i), unit(n, j, -1)), Parity::even);
                }
                push_pm(roots, unit(n, i, 2), Parity::even);
            }
            rs.form = diag_form(std::vector<Rational>(n, Rational(-1)));
            break;
        }
    }

    sort_roots(roots);
    rs.roots = std::move(roots);
    if (!rs.roots.empty())
        rs.contains(rs.roots.front().coords); // prime the index for shared readers
    return rs;
}

std::optional<Parity> is_root(const RootSystem& rs, const RootVector& v) {
    if (v.size() != static_cast<size_t>(rs.dim))
        raise("DimensionMismatch", "vector has dimension " + std::to_string(v.size()) +
                                       ", expected " + std::to_string(rs.dim));
    return rs.parity_of(v);
}

std::map<RootVector, long> distinguished_grading(const RootSystem& rs) {
    // Degree functional: count the delta side for type II, the eps side for
    // type I; for F(4)/G(3) the delta coordinate is the last one.
    std::map<RootVector, long> deg;
    long d = rs.dim, eps = rs.eps_count;
    for (const auto& rd : rs.roots) {
        long value = 0;
        switch (rs.family.kind) {
            case FamilyKind::A:
            case FamilyKind::C:
                for (long i = 0; i < eps; ++i) value += rd.coords[i];
                break;
            case FamilyKind::B:
            case FamilyKind::D:
                for (long i = eps; i < d; ++i) value += rd.coords[i];
                break;
            case FamilyKind::D21a:
                value = rd.coords[0];
                break;
            case FamilyKind::F4:
            case FamilyKind::G3:
                value = rd.coords[d - 1];
                break;
            case FamilyKind::PureA:
            case FamilyKind::PureC:
                value = 0;
                break;
        }
        deg[rd.coords] = value;
    }
    return deg;
}

Cyclotomic form_value(const RootSystem& rs, const RootVector& x, const RootVector& y) {
    return rs.form_value(x, y);
}

Cyclotomic weight_eval(const std::vector<Cyclotomic>& weight,
                       const std::vector<Cyclotomic>& h_coords) {
    if (weight.size() != h_coords.size())
        raise("DimensionMismatch", "weight/Cartan dimension mismatch");
    Cyclotomic s;
    for (size_t i = 0; i < weight.size(); ++i)
        if (!weight[i].is_zero() && !h_coords[i].is_zero()) s += weight[i] * h_coords[i];
    return s;
}

std::map<RootVector, ChevalleyEntry> chevalley_data(const RootSystem& rs) {
    std::map<RootVector, ChevalleyEntry> out;
    for (const auto& rd : rs.roots) {
        ChevalleyEntry e;
        // form dual: coords (eps_i(h), delta_j(h)) = G * alpha
        std::vector<Cyclotomic> dual(rs.dim, Cyclotomic());
        for (long i = 0; i < rs.dim; ++i)
            for (long j = 0; j < rs.dim; ++j)
                if (rd.coords[j] != 0) dual[i] += rs.form[i][j] * Cyclotomic(Rational(rd.coords[j]));
        Cyclotomic norm = rs.form_value(rd.coords, rd.coords);
        if (!norm.is_zero()) {
            Cyclotomic scale = Cyclotomic(2) * norm.inverse();
            for (auto& x : dual) x *= scale;
            e.sl2_normalized = (rd.parity == Parity::even);
        }
        e.h_coords = std::move(dual);
        out[rd.coords] = std::move(e);
    }
    return out;
}

namespace {

// Connected components of the even root graph (edges where the form does not
// vanish), then a canonical Cartan-type label per component.
struct EvenComponent {
    std::vector<RootVector> roots;
};

std::string classify_component(const RootSystem& rs, const EvenComponent& comp) {
    // rank = dimension of the rational span
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& r : comp.roots) {
        std::vector<Cyclotomic> row;
        for (long x : r) row.push_back(Cyclotomic(Rational(x)));
        rows.push_back(std::move(row));
    }
    size_t rank = span_rank(rows);
    size_t count = comp.roots.size();

    // norm profile (absolute values of the nonzero norms)
    std::map<Rational, size_t> norms;
    for (const auto& r : comp.roots) {
        Cyclotomic n = rs.form_value(r, r);
        Rational q = n.rational_part().abs();
        norms[q]++;
    }

    auto label = [&](const std::string& base, size_t r) {
        return base + std::to_string(r);
    };

    if (rank == 1) return "A1";
    if (norms.size() == 1) {
        if (count == rank * (rank + 1)) return label("A", rank);
        if (count == 2 * rank * (rank - 1)) return rank == 3 ? std::string("A3") : label("D", rank);
        return "?";
    }
    if (norms.size() == 2) {
        auto it = norms.begin();
        Rational small = it->first;
        size_t nsmall = it->second;
        ++it;
        Rational big = it->first;
        size_t nbig = it->second;
        Rational ratio = big / small;
        if (ratio == Rational(3) && count == 12) return "G2";
        if (ratio == Rational(2) && count == 2 * rank * rank) {
            if (rank == 2) return "B2"; // B2 == C2
            if (nsmall == 2 * rank) return label("B", rank);
            if (nbig == 2 * rank) return label("C", rank);
        }
        return "?";
    }
    return "?";
}

} // namespace

std::string RootSystem::even_type() const {
    auto evens = even_roots();
    if (evens.empty()) return "0";
    // union-find over the form graph
    std::vector<long> parent(evens.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < evens.size(); ++i)
        for (size_t j = i + 1; j < evens.size(); ++j)
            if (!form_value(evens[i], evens[j]).is_zero()) parent[find(i)] = find(j);
    std::map<long, EvenComponent> comps;
    for (size_t i = 0; i < evens.size(); ++i) comps[find(i)].roots.push_back(evens[i]);

    std::vector<std::string> labels;
    for (auto& [root, comp] : comps) labels.push_back(classify_component(*this, comp));
    std::sort(labels.begin(), labels.end());

    // central torus directions: span deficit of the even roots in the span of Delta
    std::vector<std::vector<Cyclotomic>> all_rows, even_rows;
    for (const auto& rd : roots) {
        std::vector<Cyclotomic> row;
        for (long x : rd.coords) row.push_back(Cyclotomic(Rational(x)));
        all_rows.push_back(row);
        if (rd.parity == Parity::even) even_rows.push_back(row);
    }
    size_t deficit = span_rank(all_rows) - span_rank(even_rows);

    std::string result;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) result += "+";
        result += labels[i];
    }
    for (size_t i = 0; i < deficit; ++i) result += "+k";
    return result;
}

} // namespace sw
