#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "eds/tableau.hpp"

namespace eds::oracles {

// dim A^(1) by the rank formula on explicit spanning sets:
// dim(U ∩ W) = dim U + dim W - dim(U + W) with U = A (x) V* and
// W = W (x) S^2 V* inside W (x) V* (x) V*. No kernel solve involved.
inline int brute_force_prolongation_dim(const Tableau& A) {
    const int n = A.n, s = A.s;
    const int amb = s * n * n;  // index (a, i, j) with j the added slot
    std::vector<QVector> u_span;
    for (const auto& M : A.basis)
        for (int j = 0; j < n; ++j) {
            QVector v(amb, Rational(0));
            for (int a = 0; a < s; ++a)
                for (int i = 0; i < n; ++i) v[(a * n + i) * n + j] = M.at(a, i);
            u_span.push_back(std::move(v));
        }
    std::vector<QVector> w_span;
    for (int a = 0; a < s; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                QVector v(amb, Rational(0));
                v[(a * n + i) * n + j] += 1;
                v[(a * n + j) * n + i] += 1;
                w_span.push_back(std::move(v));
            }
    int du = u_span.empty() ? 0 : rank(stack_rows(u_span, amb));
    int dw = rank(stack_rows(w_span, amb));
    std::vector<QVector> both = u_span;
    both.insert(both.end(), w_span.begin(), w_span.end());
    int dsum = rank(stack_rows(both, amb));
    return du + dw - dsum;
}

inline Tableau random_tableau(Rng& rng, int max_n = 4, int max_s = 4) {
    int n = static_cast<int>(rng.range(1, max_n));
    int s = static_cast<int>(rng.range(1, max_s));
    int k = static_cast<int>(rng.range(1, std::min(6, n * s)));
    std::vector<QMatrix> span;
    for (int t = 0; t < k; ++t) {
        QMatrix m(s, n);
        for (int a = 0; a < s; ++a)
            for (int i = 0; i < n; ++i) m.at(a, i) = Rational(rng.range(-2, 2));
        span.push_back(std::move(m));
    }
    return Tableau::from_span(n, s, span);
}

}  // namespace eds::oracles
