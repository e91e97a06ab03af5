#pragma once

#include <optional>
#include <vector>

#include "eds/rational.hpp"

namespace eds {

using QVector = std::vector<Rational>;

// Dense exact rational matrix, row-major. Sizes in this library are small
// (tens of rows/columns); clarity over cleverness.
struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static QMatrix identity(int n);
    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QVector operator*(const QVector& v) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const Rational& c) const;
    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_zero() const;
    QVector row(int i) const;
    QVector flatten() const { return a; }
};

struct Echelon {
    QMatrix rref;                  // fully reduced row echelon form
    std::vector<int> pivot_cols;   // one per pivot row
    int rank = 0;
};

// Exact reduced row echelon form. The forward pass runs fraction-free
// (Bareiss) on a denominator-cleared copy; divisions happen only in the
// final normalization, so every intermediate value stays integral.
Echelon rref(const QMatrix& m);

int rank(const QMatrix& m);

// Basis of { x : m x = 0 }.
std::vector<QVector> nullspace(const QMatrix& m);

// Any solution of m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

// Reduced basis (RREF rows) of the span of the given vectors.
std::vector<QVector> span_basis(const std::vector<QVector>& vecs);

// Is v in the span of the given vectors?
bool in_span(const std::vector<QVector>& vecs, const QVector& v);

// Functionals vanishing on the span (nullspace of the transpose of the
// stacked vectors).
std::vector<QVector> cokernel(const std::vector<QVector>& vecs, int ambient_dim);

QMatrix stack_rows(const std::vector<QVector>& vecs, int cols);

// Random invertible matrix with small integer entries; used for generic
// flags and basis-change invariance checks.
QMatrix random_invertible(int n, Rng& rng, long mag = 3);

}  // namespace eds
