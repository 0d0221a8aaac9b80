#include "superweight/exact.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sw {

Rational::Rational(long num, long den) {
    if (den == 0) raise("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) raise("DivisionByZero", "rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

long Rational::to_long() const {
    if (!is_integer()) raise("BadParameter", "rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) raise("BadParameter", "integer out of range: " + str());
    return v_.get_num().get_si();
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&]() { raise("BadParameter", "cannot parse rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(t)));
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        if (den == 0) bad();
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational(); // unreachable
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

namespace {

using Poly = std::vector<Rational>; // lowest degree first

void trim(Poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Euclidean division; d must not be the zero polynomial.
std::pair<Poly, Poly> poly_divmod(Poly n, const Poly& d) {
    Poly q(std::max<size_t>(1, n.size()), Rational(0));
    trim(n);
    while (n.size() >= d.size() && !(n.size() == 1 && n[0].is_zero())) {
        size_t shift = n.size() - d.size();
        Rational coef = n.back() / d.back();
        q[shift] += coef;
        for (size_t i = 0; i < d.size(); ++i) n[shift + i] -= coef * d[i];
        trim(n);
        if (n.size() == 1 && n[0].is_zero()) break;
    }
    trim(q);
    return {q, n};
}

const Poly& phi_poly(long N) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // x^N - 1 = prod_{d | N} Phi_d
    for (long d : divisors_of(N)) {
        if (cache.count(d)) continue;
        Poly f(d + 1, Rational(0));
        f[0] = Rational(-1);
        f[d] = Rational(1);
        for (long e : divisors_of(d)) {
            if (e == d) continue;
            f = poly_divmod(f, cache.at(e)).first;
        }
        cache[d] = f;
    }
    return cache.at(N);
}

Poly poly_mod_phi(Poly p, long N) {
    const Poly& phi = phi_poly(N);
    auto rem = poly_divmod(std::move(p), phi).second;
    rem.resize(euler_phi(N), Rational(0));
    return rem;
}

// Solve A x = b over the rationals (A given column-major as vectors).
// Returns empty optional when inconsistent.
bool solve_columns(const std::vector<std::vector<Rational>>& cols,
                   std::vector<Rational> b, std::vector<Rational>& out) {
    size_t ncols = cols.size();
    size_t nrows = b.size();
    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < nrows; ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < nrows; ++i) m[i][ncols] = b[i];

    std::vector<long> pivot_col(nrows, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && m[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j <= ncols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i != row && !m[i][col].is_zero()) {
                Rational f = m[i][col];
                for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
            }
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (size_t i = row; i < nrows; ++i)
        if (!m[i][ncols].is_zero()) return false;
    out.assign(ncols, Rational(0));
    for (size_t i = 0; i < row; ++i) out[pivot_col[i]] = m[i][ncols];
    return true;
}

} // namespace

void Cyclotomic::canonicalize() {
    coeffs_.resize(euler_phi(conductor_), Rational(0));
    if (conductor_ == 1) return;
    bool only_constant = true;
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) { only_constant = false; break; }
    if (only_constant) {
        coeffs_ = {coeffs_[0]};
        conductor_ = 1;
        return;
    }
    // Descend to the smallest cyclotomic subfield containing the value.
    for (long d : divisors_of(conductor_)) {
        if (d == conductor_ || d == 1) continue;
        long step = conductor_ / d;
        std::vector<std::vector<Rational>> cols;
        for (long j = 0; j < euler_phi(d); ++j) {
            Poly p(static_cast<size_t>(j * step) + 1, Rational(0));
            p[static_cast<size_t>(j * step)] = Rational(1);
            cols.push_back(poly_mod_phi(std::move(p), conductor_));
        }
        std::vector<Rational> sol;
        if (solve_columns(cols, coeffs_, sol)) {
            conductor_ = d;
            coeffs_ = std::move(sol);
            canonicalize();
            return;
        }
    }
}

Cyclotomic Cyclotomic::from_coeffs(const std::vector<Rational>& raw, long N) {
    if (N < 1) raise("BadParameter", "conductor must be positive");
    Cyclotomic c;
    c.conductor_ = N;
    Poly p = raw.empty() ? Poly{Rational(0)} : raw;
    c.coeffs_ = poly_mod_phi(std::move(p), N);
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::zeta(long N) {
    std::vector<Rational> raw(2, Rational(0));
    raw[1] = Rational(1);
    return from_coeffs(raw, N);
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) raise("BadParameter", "scalar " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted_to(long M) const {
    if (M == conductor_) return *this;
    long step = M / conductor_;
    Poly p(static_cast<size_t>((euler_phi(conductor_) - 1) * step) + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) p[j * step] = coeffs_[j];
    Cyclotomic c;
    c.conductor_ = M;
    c.coeffs_ = poly_mod_phi(std::move(p), M);
    return c; // deliberately not re-canonicalized: used only inside arithmetic
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic c = *this;
    for (auto& x : c.coeffs_) x = -x;
    return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long M = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
    for (size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
    a.canonicalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_rational() && o.is_rational())
        return Cyclotomic(coeffs_[0] * o.coeffs_[0]);
    long M = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
    Cyclotomic c;
    c.conductor_ = M;
    c.coeffs_ = poly_mod_phi(poly_mul(a.coeffs_, b.coeffs_), M);
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) raise("DivisionByZero", "inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] against Phi_N (irreducible, so gcd is 1).
    Poly r0 = phi_poly(conductor_), r1 = coeffs_;
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)};
    while (!(r1.size() == 1 && r1[0].is_zero())) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly qs = poly_mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the (constant) gcd; s0 * this == r0 mod Phi.
    Rational inv = Rational(1) / r0[0];
    for (auto& x : s0) x *= inv;
    Cyclotomic c;
    c.conductor_ = conductor_;
    c.coeffs_ = poly_mod_phi(std::move(s0), conductor_);
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != o.coeffs_[j]) return coeffs_[j] < o.coeffs_[j];
    }
    return false;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return coeffs_[0].str();
    std::ostringstream os;
    os << "poly(ζ" << conductor_ << "): " << coeffs_[0].str();
    for (size_t j = 1; j < coeffs_.size(); ++j) {
        os << " + " << coeffs_[j].str() << "*z";
        if (j > 1) os << "^" << j;
    }
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    std::string t = s;
    // strip leading/trailing whitespace
    auto l = t.find_first_not_of(" \t");
    auto r = t.find_last_not_of(" \t");
    if (l == std::string::npos) raise("BadParameter", "empty scalar");
    t = t.substr(l, r - l + 1);
    size_t head = 0;
    if (t.rfind("poly(ζ", 0) == 0)
        head = std::string("poly(ζ").size();
    else if (t.rfind("poly(z", 0) == 0)
        head = 6;
    else
        return Cyclotomic(Rational::parse(t));
    auto close = t.find("):");
    if (close == std::string::npos) raise("BadParameter", "cannot parse scalar: '" + s + "'");
    long N = std::stol(t.substr(head, close - head));
    std::string body = t.substr(close + 2);
    std::vector<Rational> coeffs;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(" + ", pos);
        std::string term = body.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? body.size() : next + 3;
        auto star = term.find('*');
        std::string coef = star == std::string::npos ? term : term.substr(0, star);
        size_t deg = coeffs.size();
        coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] = Rational::parse(coef);
    }
    return from_coeffs(coeffs, N);
}

Cyclotomic cyclo_normalize(const std::vector<Rational>& raw, long N) {
    return Cyclotomic::from_coeffs(raw, N);
}

Cyclotomic cyclo_invert(const Cyclotomic& x) { return x.inverse(); }

std::vector<Rational> cyclotomic_polynomial(long N) { return phi_poly(N); }

Cyclotomic parse_scalar(const std::string& s) {
    std::string t = s;
    auto l = t.find_first_not_of(" \t");
    auto r = t.find_last_not_of(" \t");
    if (l == std::string::npos) raise("BadParameter", "empty scalar");
    t = t.substr(l, r - l + 1);
    if (!t.empty() && t[0] == 'z' && t.size() > 1 && isdigit(static_cast<unsigned char>(t[1]))) {
        auto caret = t.find('^');
        long N = std::stol(t.substr(1, caret == std::string::npos ? caret : caret - 1));
        long k = caret == std::string::npos ? 1 : std::stol(t.substr(caret + 1));
        return Cyclotomic::zeta(N).pow(k);
    }
    return Cyclotomic::parse(t);
}

} // namespace sw
