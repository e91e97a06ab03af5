#include "eds/matrix.hpp"

#include <stdexcept>

namespace eds {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product size mismatch");
    QMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matvec size mismatch");
    QVector r(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix sum size mismatch");
    QMatrix r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix diff size mismatch");
    QMatrix r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
    return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix r = *this;
    for (auto& x : r.a) x *= c;
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QVector QMatrix::row(int i) const {
    QVector r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

Echelon rref(const QMatrix& m) {
    const int R = m.rows, C = m.cols;
    // clear denominators per row; the forward pass then stays in integers
    std::vector<std::vector<mpz_class>> w(R, std::vector<mpz_class>(C));
    for (int i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < C; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            w[i][j] = v.get_num();
        }
    }

    // Bareiss fraction-free forward elimination
    std::vector<int> pivot_cols;
    int prow = 0;
    mpz_class prev = 1;
    for (int pcol = 0; pcol < C && prow < R; ++pcol) {
        int sel = -1;
        for (int i = prow; i < R; ++i)
            if (w[i][pcol] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(w[prow], w[sel]);
        const mpz_class piv = w[prow][pcol];
        for (int i = prow + 1; i < R; ++i) {
            for (int j = pcol + 1; j < C; ++j) {
                mpz_class t = w[i][j] * piv - w[i][pcol] * w[prow][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[i][j] = t;
            }
            w[i][pcol] = 0;
        }
        prev = piv;
        pivot_cols.push_back(pcol);
        ++prow;
    }
    const int rk = prow;

    // normalize and back-substitute with exact rational division
    QMatrix out(R, C);
    for (int i = 0; i < rk; ++i) {
        Rational piv(w[i][pivot_cols[i]]);
        for (int j = 0; j < C; ++j) out.at(i, j) = Rational(w[i][j]) / piv;
    }
    for (int i = rk - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            Rational f = out.at(k, pivot_cols[i]);
            if (f == 0) continue;
            for (int j = 0; j < C; ++j) out.at(k, j) -= f * out.at(i, j);
        }
    }
    return Echelon{std::move(out), std::move(pivot_cols), rk};
}

int rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> nullspace(const QMatrix& m) {
    Echelon e = rref(m);
    const int C = m.cols;
    std::vector<bool> is_pivot(C, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (int fc = 0; fc < C; ++fc) {
        if (is_pivot[fc]) continue;
        QVector v(C, Rational(0));
        v[fc] = 1;
        for (int i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = -e.rref.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve size mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    Echelon e = rref(aug);
    for (int i = 0; i < e.rank; ++i)
        if (e.pivot_cols[i] == m.cols) return std::nullopt;  // inconsistent
    QVector x(m.cols, Rational(0));
    for (int i = 0; i < e.rank; ++i) x[e.pivot_cols[i]] = e.rref.at(i, m.cols);
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows;
    if (n == 0) return QMatrix(0, 0);
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.rank < n || e.pivot_cols[n - 1] >= n) return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

QMatrix stack_rows(const std::vector<QVector>& vecs, int cols) {
    QMatrix m(static_cast<int>(vecs.size()), cols);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(vecs[i].size()) != cols)
            throw std::invalid_argument("stack_rows width mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = vecs[i][j];
    }
    return m;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vecs) {
    if (vecs.empty()) return {};
    Echelon e = rref(stack_rows(vecs, static_cast<int>(vecs.front().size())));
    std::vector<QVector> out;
    for (int i = 0; i < e.rank; ++i) out.push_back(e.rref.row(i));
    return out;
}

bool in_span(const std::vector<QVector>& vecs, const QVector& v) {
    bool vzero = true;
    for (const auto& x : v)
        if (x != 0) vzero = false;
    if (vzero) return true;
    if (vecs.empty()) return false;
    const int C = static_cast<int>(v.size());
    QMatrix m = stack_rows(vecs, C);
    int r0 = rank(m);
    std::vector<QVector> all = vecs;
    all.push_back(v);
    return rank(stack_rows(all, C)) == r0;
}

std::vector<QVector> cokernel(const std::vector<QVector>& vecs, int ambient_dim) {
    if (vecs.empty()) {
        std::vector<QVector> out;
        for (int i = 0; i < ambient_dim; ++i) {
            QVector v(ambient_dim, Rational(0));
            v[i] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    return nullspace(stack_rows(vecs, ambient_dim));
}

QMatrix random_invertible(int n, Rng& rng, long mag) {
    while (true) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rational(rng.range(-mag, mag));
        if (rank(m) == n) return m;
    }
}

}  // namespace eds
