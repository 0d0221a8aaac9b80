#include "superweight/linalg.hpp"

#include "superweight/errors.hpp"

#include <algorithm>

namespace sw {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) raise("DimensionMismatch", "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Cyclotomic& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise("DimensionMismatch", "matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Cyclotomic(-1)); }

Matrix Matrix::scaled(const Cyclotomic& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

std::vector<Cyclotomic> Matrix::apply(const std::vector<Cyclotomic>& v) const {
    if (v.size() != cols_) raise("DimensionMismatch", "matrix apply shape mismatch");
    std::vector<Cyclotomic> r(rows_, Cyclotomic());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Cyclotomic inv = at(row, col).inverse();
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i != row && !at(i, col).is_zero()) {
                Cyclotomic f = at(i, col);
                for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Cyclotomic>> Matrix::kernel_basis() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Cyclotomic> v(cols_, Cyclotomic());
        v[freec] = Cyclotomic(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> Matrix::solve(const std::vector<Cyclotomic>& b) const {
    if (b.size() != rows_) raise("DimensionMismatch", "solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Cyclotomic> x(cols_, Cyclotomic());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

size_t span_rank(const std::vector<std::vector<Cyclotomic>>& rows) {
    if (rows.empty()) return 0;
    SpanBuilder sb(rows[0].size());
    for (const auto& r : rows) sb.add(r);
    return sb.rank();
}

void SpanBuilder::reduce(std::vector<Cyclotomic>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Cyclotomic f = c;
        for (size_t j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
}

bool SpanBuilder::add(std::vector<Cyclotomic> v) {
    if (v.size() != dim_) raise("DimensionMismatch", "span vector dimension mismatch");
    reduce(v);
    size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    Cyclotomic inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // keep previous rows reduced against the new one
    for (size_t r = 0; r < rows_.size(); ++r) {
        Cyclotomic f = rows_[r][p];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool SpanBuilder::contains(std::vector<Cyclotomic> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

// ---------------------------------------------------------------------------
// Simplex over exact rationals.
//
// Standard form: minimize c.y with A y = b, y >= 0, after splitting free
// variables and adding slacks.  Two phases, Bland's rule throughout.

namespace {

struct Tableau {
    // column 0 .. n-1: structural; last column: rhs
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> cost; // reduced cost row, with objective at back
    std::vector<long> basis;    // basic variable per row

    size_t nvars() const { return cost.size() - 1; }

    void pivot(size_t r, size_t c) {
        Rational inv = Rational(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        if (!cost[c].is_zero()) {
            Rational f = cost[c];
            for (size_t j = 0; j < cost.size(); ++j) cost[j] -= f * rows[r][j];
        }
        basis[r] = static_cast<long>(c);
    }

    // Returns false when unbounded.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            long enter = -1;
            for (size_t j = 0; j < nvars(); ++j) {
                if (allowed[j] && cost[j] < Rational(0)) { enter = static_cast<long>(j); break; }
            }
            if (enter < 0) return true;
            long leave = -1;
            Rational best_ratio;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] > Rational(0)) {
                    Rational ratio = rows[i].back() / rows[i][enter];
                    if (leave < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && basis[i] < basis[leave])) {
                        leave = static_cast<long>(i);
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
        }
    }
};

} // namespace

LPResult lp_minimize(const std::vector<Rational>& c,
                     const std::vector<LinConstraint>& constraints) {
    size_t n = c.size();
    size_t m = constraints.size();
    // variable layout: x+ (n), x- (n), slacks (one per inequality), artificials (m)
    size_t nslack = 0;
    for (const auto& con : constraints)
        if (con.cmp != Cmp::EQ) ++nslack;
    size_t nstruct = 2 * n + nslack;
    size_t total = nstruct + m;

    Tableau t;
    t.rows.assign(m, std::vector<Rational>(total + 1, Rational(0)));
    t.basis.assign(m, 0);
    size_t slack_at = 2 * n;
    for (size_t i = 0; i < m; ++i) {
        const auto& con = constraints[i];
        if (con.a.size() != n) raise("DimensionMismatch", "LP constraint width mismatch");
        Rational rhs = con.b;
        int flip = 1;
        // normalize rhs >= 0 so the artificial basis is feasible
        if (rhs < Rational(0)) flip = -1;
        for (size_t j = 0; j < n; ++j) {
            Rational a = con.a[j] * Rational(flip);
            t.rows[i][j] = a;
            t.rows[i][n + j] = -a;
        }
        if (con.cmp != Cmp::EQ) {
            // <= gets +slack, >= gets -slack (before flip)
            Rational s = (con.cmp == Cmp::LE) ? Rational(1) : Rational(-1);
            t.rows[i][slack_at] = s * Rational(flip);
            ++slack_at;
        }
        t.rows[i].back() = rhs * Rational(flip);
        t.rows[i][nstruct + i] = Rational(1);
        t.basis[i] = static_cast<long>(nstruct + i);
    }

    // Phase 1: minimize sum of artificials.
    t.cost.assign(total + 1, Rational(0));
    for (size_t i = 0; i < m; ++i) t.cost[nstruct + i] = Rational(1);
    for (size_t i = 0; i < m; ++i) {
        // price out the artificial basis
        for (size_t j = 0; j <= total; ++j) t.cost[j] -= t.rows[i][j];
    }
    std::vector<bool> allow(total, true);
    t.run(allow); // phase 1 is always bounded below by 0

    LPResult res;
    if (-t.cost.back() != Rational(0)) { // residual infeasibility
        res.feasible = false;
        return res;
    }
    // Drive artificials out of the basis where possible.
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= static_cast<long>(nstruct)) {
            long enter = -1;
            for (size_t j = 0; j < nstruct; ++j)
                if (!t.rows[i][j].is_zero()) { enter = static_cast<long>(j); break; }
            if (enter >= 0) t.pivot(i, static_cast<size_t>(enter));
        }
    }

    // Phase 2.
    t.cost.assign(total + 1, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        t.cost[j] = c[j];
        t.cost[n + j] = -c[j];
    }
    for (size_t i = 0; i < m; ++i) {
        long b = t.basis[i];
        if (b >= 0 && !t.cost[b].is_zero()) {
            Rational f = t.cost[b];
            for (size_t j = 0; j <= total; ++j) t.cost[j] -= f * t.rows[i][j];
        }
    }
    for (size_t j = nstruct; j < total; ++j) allow[j] = false;
    res.feasible = true;
    if (!t.run(allow)) {
        res.bounded = false;
        return res;
    }
    res.value = -t.cost.back();
    res.x.assign(n, Rational(0));
    std::vector<Rational> y(total, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (t.basis[i] >= 0 && t.basis[i] < static_cast<long>(total))
            y[t.basis[i]] = t.rows[i].back();
    for (size_t j = 0; j < n; ++j) res.x[j] = y[j] - y[n + j];
    return res;
}

bool in_rational_cone(const std::vector<std::vector<Rational>>& generators,
                      const std::vector<Rational>& target) {
    if (generators.empty()) {
        return std::all_of(target.begin(), target.end(),
                           [](const Rational& r) { return r.is_zero(); });
    }
    size_t dim = target.size();
    size_t k = generators.size();
    // feasibility of sum_i x_i g_i = target, x_i >= 0
    std::vector<LinConstraint> cons;
    for (size_t d = 0; d < dim; ++d) {
        LinConstraint con;
        con.a.assign(k, Rational(0));
        for (size_t i = 0; i < k; ++i) {
            if (generators[i].size() != dim)
                raise("DimensionMismatch", "cone generator dimension mismatch");
            con.a[i] = generators[i][d];
        }
        con.cmp = Cmp::EQ;
        con.b = target[d];
        cons.push_back(std::move(con));
    }
    for (size_t i = 0; i < k; ++i) {
        LinConstraint con;
        con.a.assign(k, Rational(0));
        con.a[i] = Rational(1);
        con.cmp = Cmp::GE;
        con.b = Rational(0);
        cons.push_back(std::move(con));
    }
    std::vector<Rational> zero(k, Rational(0));
    return lp_minimize(zero, cons).feasible;
}

} // namespace sw
