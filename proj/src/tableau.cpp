#include "eds/tableau.hpp"

#include <stdexcept>

#include "eds/errors.hpp"

namespace eds {

QVector Tableau::flatten(const QMatrix& m) { return m.a; }

QMatrix Tableau::unflatten(const QVector& v, int s, int n) {
    QMatrix m(s, n);
    if (static_cast<int>(v.size()) != s * n) throw std::invalid_argument("unflatten size mismatch");
    m.a = v;
    return m;
}

std::vector<QVector> Tableau::flat_basis() const {
    std::vector<QVector> out;
    out.reserve(basis.size());
    for (const auto& m : basis) out.push_back(flatten(m));
    return out;
}

Tableau Tableau::from_span(int n, int s, const std::vector<QMatrix>& span) {
    Tableau t(n, s);
    std::vector<QVector> flats;
    for (const auto& m : span) {
        if (m.rows != s || m.cols != n) throw std::invalid_argument("tableau matrix size mismatch");
        if (!m.is_zero()) flats.push_back(flatten(m));
    }
    for (auto& v : span_basis(flats)) t.basis.push_back(unflatten(v, s, n));
    return t;
}

Tableau Tableau::change_basis(const QMatrix& g, const QMatrix& h) const {
    std::vector<QMatrix> span;
    span.reserve(basis.size());
    for (const auto& m : basis) span.push_back(h * m * g);
    return from_span(n, s, span);
}

std::vector<std::pair<int, int>> sym_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
}

int sym_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (i,i)..(i,n-1) follow all pairs with smaller first index
    return i * n - i * (i - 1) / 2 + (j - i);
}

namespace {

// rank of the projection of A onto the first j columns
int projection_rank(const std::vector<QMatrix>& transformed, int s, int j) {
    if (transformed.empty() || j == 0) return 0;
    std::vector<QVector> rows;
    rows.reserve(transformed.size());
    for (const auto& m : transformed) {
        QVector v;
        v.reserve(static_cast<std::size_t>(s) * j);
        for (int a = 0; a < s; ++a)
            for (int c = 0; c < j; ++c) v.push_back(m.at(a, c));
        rows.push_back(std::move(v));
    }
    return rank(stack_rows(rows, s * j));
}

}  // namespace

namespace {

CharacterVector characters_once(const Tableau& A, int trials, std::uint64_t seed, bool& concave) {
    const int n = A.n;
    CharacterVector cv;
    cv.seed = seed;
    cv.trials_used = trials;
    std::vector<long> best(n + 1, 0);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        QMatrix g = random_invertible(n, rng);
        std::vector<QMatrix> transformed;
        transformed.reserve(A.basis.size());
        for (const auto& m : A.basis) transformed.push_back(m * g);
        for (int j = 1; j <= n; ++j) {
            long r = projection_rank(transformed, A.s, j);
            if (r > best[j]) best[j] = r;
        }
    }
    cv.s.resize(n);
    for (int j = 1; j <= n; ++j) cv.s[j - 1] = static_cast<int>(best[j] - best[j - 1]);
    concave = true;
    for (int j = 1; j < n; ++j)
        if (cv.s[j] > cv.s[j - 1]) concave = false;
    return cv;
}

}  // namespace

CharacterVector characters(const Tableau& A, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("characters requires trials >= 1");
    int t = trials;
    for (int attempt = 0; attempt < 5; ++attempt) {
        bool concave = false;
        CharacterVector cv = characters_once(A, t, seed, concave);
        if (concave) return cv;
        t *= 2;
    }
    throw GenericityFailureError("character profile not concave after trial escalation");
}

Prolongation prolong(const Tableau& A) {
    const int n = A.n, s = A.s;
    Prolongation P;
    P.n = n;
    P.s = s;
    const auto pairs = sym_pairs(n);
    const int nunk = s * static_cast<int>(pairs.size());
    if (nunk == 0) return P;

    // functionals vanishing on A, applied to every V-slice of the unknown
    std::vector<QVector> cok = cokernel(A.flat_basis(), s * n);
    std::vector<QVector> rows;
    for (const auto& phi : cok) {
        for (int i = 0; i < n; ++i) {
            QVector row(nunk, Rational(0));
            bool nontrivial = false;
            for (int a = 0; a < s; ++a)
                for (int j = 0; j < n; ++j) {
                    const Rational& c = phi[a * n + j];
                    if (c == 0) continue;
                    row[a * static_cast<int>(pairs.size()) + sym_index(n, i, j)] += c;
                    nontrivial = true;
                }
            if (nontrivial) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        // A is all of W (x) V*: the prolongation is all of W (x) S^2 V*
        for (int k = 0; k < nunk; ++k) {
            QVector v(nunk, Rational(0));
            v[k] = 1;
            P.basis.push_back(std::move(v));
        }
        return P;
    }
    P.basis = nullspace(stack_rows(rows, nunk));
    return P;
}

QMatrix Prolongation::slice(const QVector& x, int s, int n, int i) {
    QMatrix m(s, n);
    const int npairs = n * (n + 1) / 2;
    for (int a = 0; a < s; ++a)
        for (int j = 0; j < n; ++j) m.at(a, j) = x[a * npairs + sym_index(n, i, j)];
    return m;
}

CartanResult cartan_test(const Tableau& A, int trials, std::uint64_t seed) {
    CartanResult res;
    res.dim_tableau = A.dim();
    Prolongation P = prolong(A);
    res.dim_prolongation = P.dim();
    int t = trials;
    for (int attempt = 0; attempt < 5; ++attempt) {
        res.chars = characters(A, t, seed);
        res.bound = res.chars.cartan_bound();
        if (res.dim_prolongation <= res.bound) {
            res.involutive = (res.dim_prolongation == res.bound);
            return res;
        }
        t *= 2;  // flags were unlucky: the bound is a theorem for generic flags
    }
    throw GenericityFailureError("Cartan inequality violated after trial escalation");
}

bool msubset_check(const Tableau& A) {
    Prolongation P = prolong(A);
    const int npairs = A.n * (A.n + 1) / 2;
    for (const auto& x : P.basis) {
        for (int a = 0; a < A.s; ++a) {
            Rational tr(0);
            for (int i = 0; i < A.n; ++i) tr += x[a * npairs + sym_index(A.n, i, i)];
            if (tr != 0) return false;
        }
    }
    return true;
}

}  // namespace eds
