#pragma once

#include "superweight/exact.hpp"

#include <optional>
#include <vector>

namespace sw {

// Dense matrix over Q(zeta); everything exact, sizes stay at desk scale.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Cyclotomic()) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Cyclotomic& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Cyclotomic& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;

    size_t rank() const;
    // Basis of the right kernel, one vector per column of the result.
    std::vector<std::vector<Cyclotomic>> kernel_basis() const;
    // Solves A x = b; empty when inconsistent (free variables set to 0).
    std::optional<std::vector<Cyclotomic>> solve(const std::vector<Cyclotomic>& b) const;

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<size_t> rref();

private:
    size_t rows_, cols_;
    std::vector<Cyclotomic> data_;
};

// Rank of a list of row vectors.
size_t span_rank(const std::vector<std::vector<Cyclotomic>>& rows);

// Incrementally maintained row space with exact membership tests.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t dim) : dim_(dim) {}
    // Returns true when the vector enlarged the span.
    bool add(std::vector<Cyclotomic> v);
    bool contains(std::vector<Cyclotomic> v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    const std::vector<std::vector<Cyclotomic>>& rows() const { return rows_; }

private:
    size_t dim_;
    std::vector<std::vector<Cyclotomic>> rows_; // kept in echelon form
    std::vector<size_t> pivots_;
    void reduce(std::vector<Cyclotomic>& v) const;
};

// --- Exact rational linear programming (simplex with Bland's rule) ---

enum class Cmp { LE, GE, EQ };

struct LinConstraint {
    std::vector<Rational> a;
    Cmp cmp;
    Rational b;
};

struct LPResult {
    bool feasible = false;
    bool bounded = true;
    Rational value;              // optimal objective when feasible && bounded
    std::vector<Rational> x;     // optimizer
};

// Minimizes c.x subject to the constraints; variables are free (split
// internally).  Deterministic: Bland's rule, fixed construction order.
LPResult lp_minimize(const std::vector<Rational>& c,
                     const std::vector<LinConstraint>& constraints);

// Is target in the rational convex cone generated by the given vectors?
bool in_rational_cone(const std::vector<std::vector<Rational>>& generators,
                      const std::vector<Rational>& target);

} // namespace sw
