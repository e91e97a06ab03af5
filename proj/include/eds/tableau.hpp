#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eds/matrix.hpp"

namespace eds {

// Linear subspace A of W (x) V*, held as a basis of s x n matrices with
// exact rational entries. Rows index W (the thetas), columns index V (the
// independence directions).
struct Tableau {
    int n = 0;  // dim V
    int s = 0;  // dim W
    std::vector<QMatrix> basis;

    Tableau() = default;
    Tableau(int n_, int s_) : n(n_), s(s_) {}

    int dim() const { return static_cast<int>(basis.size()); }

    // Reduces a spanning set to an independent basis (RREF rows of the
    // flattened span).
    static Tableau from_span(int n, int s, const std::vector<QMatrix>& span);

    static QVector flatten(const QMatrix& m);
    static QMatrix unflatten(const QVector& v, int s, int n);
    std::vector<QVector> flat_basis() const;

    // A with V-basis changed by g (columns) and W-basis by h (rows):
    // M -> h * M * g.
    Tableau change_basis(const QMatrix& g, const QMatrix& h) const;
};

// Symmetric pair bookkeeping for W (x) S^2 V*.
std::vector<std::pair<int, int>> sym_pairs(int n);
int sym_index(int n, int i, int j);

struct CharacterVector {
    std::vector<int> s;  // s_1..s_n
    int trials_used = 0;
    std::uint64_t seed = 0;

    long cartan_bound() const {
        long b = 0;
        for (std::size_t j = 0; j < s.size(); ++j) b += static_cast<long>(j + 1) * s[j];
        return b;
    }
    int last_nonzero_index() const {  // 1-based; 0 when all vanish
        for (int j = static_cast<int>(s.size()); j >= 1; --j)
            if (s[j - 1] > 0) return j;
        return 0;
    }
};

// Cartan characters by randomized generic flags: apply `trials` random
// rational changes of basis to V, take for each j the maximal rank of the
// projection of A onto the first j columns. s_1+...+s_j is that maximum.
CharacterVector characters(const Tableau& A, int trials, std::uint64_t seed);

// Prolongation A^(1) = (A (x) V*) ∩ (W (x) S^2 V*), coordinates over
// (a, sym pair) with a outermost.
struct Prolongation {
    int n = 0, s = 0;
    std::vector<QVector> basis;  // length s * n(n+1)/2 each
    int dim() const { return static_cast<int>(basis.size()); }

    // Slice of a prolongation element in the first index: the s x n matrix
    // (X^a_{ij})_{a,j} for fixed i. Lands in A (property-tested).
    static QMatrix slice(const QVector& x, int s, int n, int i);
};

Prolongation prolong(const Tableau& A);

struct CartanResult {
    int dim_tableau = 0;
    CharacterVector chars;
    long bound = 0;
    long dim_prolongation = 0;
    bool involutive = false;
};

// Cartan's test: involutive iff dim A^(1) equals s_1 + 2 s_2 + ... + n s_n.
// The inequality dim A^(1) <= bound is asserted; if a flag run violates it
// the trial count is raised (up to a cap) before GenericityFailureError.
CartanResult cartan_test(const Tableau& A, int trials, std::uint64_t seed);

// True iff every element of A^(1) is traceless in its V indices for each
// W slot (the prolongation lies in traceless symmetric tensors).
bool msubset_check(const Tableau& A);

}  // namespace eds
