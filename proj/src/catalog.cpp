#include "eds/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "eds/dsl.hpp"

namespace eds::catalog {

namespace {

std::string idx2(int a, int i, int j) {
    std::ostringstream os;
    os << a << "_" << i << j;
    return os.str();
}

}  // namespace

PointAssignment zero_point(const PfaffianSystem& sys) {
    PointAssignment pt;
    for (std::uint32_t v = 0; v < sys.coframe->nscalars(); ++v) pt[v] = Rational(0);
    return pt;
}

PfaffianSystem build_frobenius_example(const ScalarPoly& A, const ScalarPoly& B) {
    if (A.nvars() != 3 || B.nvars() != 3)
        throw Error("frobenius example expects polynomials in (x, y, u)");
    auto decl = make_coframe({"th", "dx", "dy"}, {Block::theta, Block::omega, Block::omega},
                             {"x", "y", "u"});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    Form th = Form::symbol(decl, 0), dx = Form::symbol(decl, 1), dy = Form::symbol(decl, 2);
    sys.rules.set_dcoframe(1u, Form::zero(decl));
    sys.rules.set_dcoframe(2u, Form::zero(decl));
    sys.rules.set_dscalar(0u, dx);
    sys.rules.set_dscalar(1u, dy);
    // theta = du - A dx - B dy, so du = th + A dx + B dy
    sys.rules.set_dscalar(2u, th + dx * A + dy * B);
    // d theta = -dA ^ dx - dB ^ dy with dA, dB expanded through the rules
    Form dA = ext_d(Form::scalar(decl, A), sys.rules);
    Form dB = ext_d(Form::scalar(decl, B), sys.rules);
    sys.rules.set_dcoframe(0u, -wedge(dA, dx) - wedge(dB, dy));
    sys.point = zero_point(sys);
    sys.validate();
    return sys;
}

PfaffianSystem build_contact_j1(int n, int s) {
    if (n < 1 || s < 1) throw Error("contact system needs n, s >= 1");
    std::vector<std::string> names;
    std::vector<Block> blocks;
    for (int a = 1; a <= s; ++a) {
        names.push_back("th" + std::to_string(a));
        blocks.push_back(Block::theta);
    }
    for (int i = 1; i <= n; ++i) {
        names.push_back("dx" + std::to_string(i));
        blocks.push_back(Block::omega);
    }
    for (int a = 1; a <= s; ++a)
        for (int i = 1; i <= n; ++i) {
            names.push_back("dp" + std::to_string(a) + "_" + std::to_string(i));
            blocks.push_back(Block::pi);
        }
    auto decl = make_coframe(names, blocks, {});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    auto dx = [&](int i) { return Form::symbol(decl, s + i - 1); };
    auto dp = [&](int a, int i) { return Form::symbol(decl, s + n + (a - 1) * n + i - 1); };
    for (int a = 1; a <= s; ++a) {
        Form d(decl);
        for (int i = 1; i <= n; ++i) d = d - wedge(dp(a, i), dx(i));
        sys.rules.set_dcoframe(static_cast<std::uint32_t>(a - 1), d);
    }
    for (std::uint32_t k = s; k < decl->size(); ++k) sys.rules.set_dcoframe(k, Form::zero(decl));
    sys.point = PointAssignment{};
    sys.validate();
    return sys;
}

PfaffianSystem build_cauchy_riemann() {
    auto decl = make_coframe(
        {"th1", "th2", "dx1", "dx2", "pi1", "pi2"},
        {Block::theta, Block::theta, Block::omega, Block::omega, Block::pi, Block::pi}, {});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    Form dx1 = Form::symbol(decl, 2), dx2 = Form::symbol(decl, 3);
    Form pi1 = Form::symbol(decl, 4), pi2 = Form::symbol(decl, 5);
    sys.rules.set_dcoframe(0u, wedge(pi1, dx1) + wedge(pi2, dx2));
    sys.rules.set_dcoframe(1u, -wedge(pi2, dx1) + wedge(pi1, dx2));
    for (std::uint32_t k = 2; k < 6; ++k) sys.rules.set_dcoframe(k, Form::zero(decl));
    sys.point = PointAssignment{};
    sys.validate();
    return sys;
}

namespace {

// Frame bundle of E^{n+s} adapted to a submanifold, with the second
// fundamental form coefficients h^a_{ij} as fiber variables. Shared by the
// submanifold and minimal-surface builders; `traceless` substitutes
// h^a_{nn} = -(h^a_{11} + ... ) and drops it from the variable list.
PfaffianSystem build_submanifold_like(int n, int s, bool traceless) {
    std::vector<std::string> names;
    std::vector<Block> blocks;
    auto add = [&](const std::string& nm, Block b) {
        names.push_back(nm);
        blocks.push_back(b);
    };
    for (int a = 1; a <= s; ++a) add("on" + std::to_string(a), Block::theta);
    for (int a = 1; a <= s; ++a)
        for (int i = 1; i <= n; ++i)
            add("th" + std::to_string(a) + "_" + std::to_string(i), Block::theta);
    for (int i = 1; i <= n; ++i) add("om" + std::to_string(i), Block::omega);
    std::vector<std::pair<int, int>> hpairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (traceless && i == n && j == n) continue;
            hpairs.emplace_back(i, j);
        }
    for (int a = 1; a <= s; ++a)
        for (auto [i, j] : hpairs) add("dh" + idx2(a, i, j), Block::pi);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add("rot" + std::to_string(i) + "_" + std::to_string(j), Block::other);
    for (int a = 1; a <= s; ++a)
        for (int b = a + 1; b <= s; ++b)
            add("nrot" + std::to_string(a) + "_" + std::to_string(b), Block::other);

    std::vector<std::string> scalars;
    for (int a = 1; a <= s; ++a)
        for (auto [i, j] : hpairs) scalars.push_back("h" + idx2(a, i, j));

    auto decl = make_coframe(names, blocks, scalars);
    const std::uint32_t nv = decl->nscalars();

    auto sym = [&](const std::string& nm) { return Form::symbol(decl, decl->name_index.at(nm)); };
    auto ON = [&](int a) { return sym("on" + std::to_string(a)); };
    auto TH = [&](int a, int i) { return sym("th" + std::to_string(a) + "_" + std::to_string(i)); };
    auto OM = [&](int i) { return sym("om" + std::to_string(i)); };
    auto DH = [&](int a, int i, int j) { return sym("dh" + idx2(a, i, j)); };
    auto ROT = [&](int i, int j) -> Form {
        if (i == j) return Form::zero(decl);
        if (i < j) return sym("rot" + std::to_string(i) + "_" + std::to_string(j));
        return -sym("rot" + std::to_string(j) + "_" + std::to_string(i));
    };
    auto NROT = [&](int a, int b) -> Form {
        if (a == b) return Form::zero(decl);
        if (a < b) return sym("nrot" + std::to_string(a) + "_" + std::to_string(b));
        return -sym("nrot" + std::to_string(b) + "_" + std::to_string(a));
    };
    auto hvar = [&](int a, int i, int j) -> ScalarPoly {
        if (i > j) std::swap(i, j);
        if (traceless && i == n && j == n) {
            ScalarPoly acc(nv);
            for (int k = 1; k < n; ++k)
                acc = acc - ScalarPoly::variable(nv, decl->scalar_index.at("h" + idx2(a, k, k)));
            return acc;
        }
        return ScalarPoly::variable(nv, decl->scalar_index.at("h" + idx2(a, i, j)));
    };
    // omega^{n+a}_i = theta^a_i + h^a_{ij} omega^j
    auto WNA = [&](int a, int i) {
        Form f = TH(a, i);
        for (int j = 1; j <= n; ++j) f = f + OM(j) * hvar(a, i, j);
        return f;
    };

    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);

    for (int a = 1; a <= s; ++a)
        for (auto [i, j] : hpairs)
            sys.rules.set_dscalar(decl->scalar_index.at("h" + idx2(a, i, j)), DH(a, i, j));

    for (int i = 1; i <= n; ++i) {
        Form d(decl);
        for (int j = 1; j <= n; ++j) d = d - wedge(ROT(i, j), OM(j));
        for (int a = 1; a <= s; ++a) d = d + wedge(WNA(a, i), ON(a));
        sys.rules.set_dcoframe("om" + std::to_string(i), d);
    }
    for (int a = 1; a <= s; ++a) {
        Form d(decl);
        for (int j = 1; j <= n; ++j) d = d - wedge(WNA(a, j), OM(j));
        for (int b = 1; b <= s; ++b) d = d - wedge(NROT(a, b), ON(b));
        sys.rules.set_dcoframe("on" + std::to_string(a), d);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Form d(decl);
            for (int k = 1; k <= n; ++k) d = d - wedge(ROT(i, k), ROT(k, j));
            for (int a = 1; a <= s; ++a) d = d + wedge(WNA(a, i), WNA(a, j));
            sys.rules.set_dcoframe("rot" + std::to_string(i) + "_" + std::to_string(j), d);
        }
    for (int a = 1; a <= s; ++a)
        for (int b = a + 1; b <= s; ++b) {
            Form d(decl);
            for (int j = 1; j <= n; ++j) d = d + wedge(WNA(a, j), WNA(b, j));
            for (int c = 1; c <= s; ++c) d = d - wedge(NROT(a, c), NROT(c, b));
            sys.rules.set_dcoframe("nrot" + std::to_string(a) + "_" + std::to_string(b), d);
        }
    for (int a = 1; a <= s; ++a)
        for (int i = 1; i <= n; ++i) {
            Form d(decl);
            for (int k = 1; k <= n; ++k) d = d - wedge(WNA(a, k), ROT(k, i));
            for (int b = 1; b <= s; ++b) d = d - wedge(NROT(a, b), WNA(b, i));
            for (int k = 1; k <= n; ++k) {
                Form dh = ext_d(Form::scalar(decl, hvar(a, i, k)), sys.rules);
                d = d - wedge(dh, OM(k)) - ext_d(OM(k), sys.rules) * hvar(a, i, k);
            }
            sys.rules.set_dcoframe("th" + std::to_string(a) + "_" + std::to_string(i), d);
        }
    for (int a = 1; a <= s; ++a)
        for (auto [i, j] : hpairs) sys.rules.set_dcoframe("dh" + idx2(a, i, j), Form::zero(decl));

    sys.point = zero_point(sys);
    sys.validate();
    return sys;
}

}  // namespace

PfaffianSystem build_submanifold_system(int n, int s) {
    if (n < 1 || s < 1) throw Error("submanifold system needs n, s >= 1");
    return build_submanifold_like(n, s, false);
}

PfaffianSystem build_minimal_surface_system(int s) {
    if (s < 1) throw Error("minimal-surface system needs s >= 1");
    return build_submanifold_like(2, s, true);
}

namespace {

// ---- curvature bookkeeping for the isometric-embedding builder ----

struct CurvatureSpace {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;      // (i<j), 1-based
    std::vector<std::pair<int, int>> sym_slots;  // (P<=Q) over pair indices
    std::vector<QVector> basis;                  // Bianchi-compatible basis over sym slots
    std::vector<std::string> var_names;

    int pair_index(int i, int j) const {  // i < j
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (pairs[p] == std::make_pair(i, j)) return static_cast<int>(p);
        throw std::logic_error("bad pair");
    }
    int slot(int P, int Q) const {
        if (P > Q) std::swap(P, Q);
        for (std::size_t k = 0; k < sym_slots.size(); ++k)
            if (sym_slots[k] == std::make_pair(P, Q)) return static_cast<int>(k);
        throw std::logic_error("bad slot");
    }
};

CurvatureSpace make_curvature_space(int n) {
    CurvatureSpace cs;
    cs.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cs.pairs.emplace_back(i, j);
    const int np = static_cast<int>(cs.pairs.size());
    for (int P = 0; P < np; ++P)
        for (int Q = P; Q < np; ++Q) cs.sym_slots.emplace_back(P, Q);
    const int ns = static_cast<int>(cs.sym_slots.size());

    // oriented component R^{(x,y)}_{P} as a covector over sym slots
    auto oriented = [&](int x, int y, int P) {
        QVector v(ns, Rational(0));
        if (x == y) return v;
        Rational sign = 1;
        if (x > y) {
            std::swap(x, y);
            sign = -1;
        }
        v[cs.slot(cs.pair_index(x, y), P)] = sign;
        return v;
    };
    // first Bianchi: R^{(i,c)}_{(ab)} - R^{(i,b)}_{(ac)} + R^{(i,a)}_{(bc)} = 0
    std::vector<QVector> rows;
    for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    QVector row(ns, Rational(0));
                    auto acc = [&](const QVector& t, const Rational& s2) {
                        for (int k = 0; k < ns; ++k) row[k] += s2 * t[k];
                    };
                    acc(oriented(i, c, cs.pair_index(a, b)), 1);
                    acc(oriented(i, b, cs.pair_index(a, c)), -1);
                    acc(oriented(i, a, cs.pair_index(b, c)), 1);
                    bool nonzero = false;
                    for (const auto& x : row)
                        if (x != 0) nonzero = true;
                    if (nonzero) rows.push_back(std::move(row));
                }
    cs.basis = rows.empty() ? cokernel({}, ns) : nullspace(stack_rows(rows, ns));

    bool is_identity = (static_cast<int>(cs.basis.size()) == ns);
    if (is_identity) {
        for (int k = 0; k < ns; ++k) {
            QVector unit(ns, Rational(0));
            unit[k] = 1;
            if (cs.basis[k] != unit) is_identity = false;
        }
    }
    for (std::size_t m = 0; m < cs.basis.size(); ++m) {
        if (is_identity) {
            auto [P, Q] = cs.sym_slots[m];
            auto [i, j] = cs.pairs[P];
            auto [k, l] = cs.pairs[Q];
            cs.var_names.push_back("R" + std::to_string(i) + std::to_string(j) + "_" +
                                   std::to_string(k) + std::to_string(l));
        } else {
            cs.var_names.push_back("Rb" + std::to_string(m + 1));
        }
    }
    return cs;
}

}  // namespace

PfaffianSystem build_isometric_embedding(int n, int r, CurvatureMode mode) {
    if (n < 2 || r < 1) throw Error("isometric embedding needs n >= 2, r >= 1");
    const bool generic = (mode == CurvatureMode::generic_from_h);
    CurvatureSpace cs = make_curvature_space(n);

    std::vector<std::string> names;
    std::vector<Block> blocks;
    auto add = [&](const std::string& nm, Block b) {
        names.push_back(nm);
        blocks.push_back(b);
    };
    for (int mu = 1; mu <= r; ++mu) add("omu" + std::to_string(mu), Block::theta);
    for (int i = 1; i <= n; ++i) add("zeta" + std::to_string(i), Block::theta);
    for (int i = 1; i <= n; ++i) add("eta" + std::to_string(i), Block::omega);
    for (int mu = 1; mu <= r; ++mu)
        for (int i = 1; i <= n; ++i)
            add("b" + std::to_string(mu) + "_" + std::to_string(i), Block::pi);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add("c" + std::to_string(i) + "_" + std::to_string(j), Block::pi);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add("etr" + std::to_string(i) + "_" + std::to_string(j), Block::other);
    for (int mu = 1; mu <= r; ++mu)
        for (int nu = mu + 1; nu <= r; ++nu)
            add("w" + std::to_string(mu) + "_" + std::to_string(nu), Block::other);

    std::vector<std::string> scalars;
    if (generic) scalars = cs.var_names;
    auto decl = make_coframe(names, blocks, scalars);
    const std::uint32_t nv = decl->nscalars();

    auto sym = [&](const std::string& nm) { return Form::symbol(decl, decl->name_index.at(nm)); };
    auto ETA = [&](int i) { return sym("eta" + std::to_string(i)); };
    auto OMU = [&](int mu) { return sym("omu" + std::to_string(mu)); };
    auto ZETA = [&](int i) { return sym("zeta" + std::to_string(i)); };
    auto B = [&](int mu, int i) { return sym("b" + std::to_string(mu) + "_" + std::to_string(i)); };
    auto signed_pair = [&](const std::string& prefix, int i, int j) -> Form {
        if (i == j) return Form::zero(decl);
        if (i < j) return sym(prefix + std::to_string(i) + "_" + std::to_string(j));
        return -sym(prefix + std::to_string(j) + "_" + std::to_string(i));
    };
    auto ETR = [&](int i, int j) { return signed_pair("etr", i, j); };
    auto C = [&](int i, int j) { return signed_pair("c", i, j); };
    auto WN = [&](int mu, int nu) { return signed_pair("w", mu, nu); };
    auto OMROT = [&](int i, int j) { return C(i, j) + ETR(i, j); };
    auto OM = [&](int i) { return ZETA(i) + ETA(i); };

    // oriented curvature coefficient R^{(x,y)}_{(kl)} as a polynomial in
    // the independent curvature variables
    auto Rc = [&](int x, int y, int P) -> ScalarPoly {
        ScalarPoly out(nv);
        if (!generic || x == y) return out;
        Rational sign = 1;
        int xx = x, yy = y;
        if (xx > yy) {
            std::swap(xx, yy);
            sign = -1;
        }
        int S = cs.slot(cs.pair_index(xx, yy), P);
        for (std::size_t m = 0; m < cs.basis.size(); ++m) {
            if (cs.basis[m][S] != 0)
                out = out + ScalarPoly::variable(nv, static_cast<std::uint32_t>(m)) *
                                (sign * cs.basis[m][S]);
        }
        return out;
    };
    // Phi^x_y = sum_{k<l} R^{(x,y)}_{(kl)} eta^k ^ eta^l
    auto PHI = [&](int x, int y) -> Form {
        Form f(decl);
        for (std::size_t P = 0; P < cs.pairs.size(); ++P) {
            auto [k, l] = cs.pairs[P];
            f = f + wedge(ETA(k), ETA(l)) * Rc(x, y, static_cast<int>(P));
        }
        return f;
    };

    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);

    for (int i = 1; i <= n; ++i) {
        Form d(decl);
        for (int j = 1; j <= n; ++j) d = d - wedge(ETR(i, j), ETA(j));
        sys.rules.set_dcoframe("eta" + std::to_string(i), d);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Form d = PHI(i, j);
            for (int k = 1; k <= n; ++k) d = d - wedge(ETR(i, k), ETR(k, j));
            sys.rules.set_dcoframe("etr" + std::to_string(i) + "_" + std::to_string(j), d);
        }
    for (int mu = 1; mu <= r; ++mu) {
        Form d(decl);
        for (int j = 1; j <= n; ++j) d = d - wedge(B(mu, j), OM(j));
        for (int nu = 1; nu <= r; ++nu) d = d - wedge(WN(mu, nu), OMU(nu));
        sys.rules.set_dcoframe("omu" + std::to_string(mu), d);
    }
    for (int i = 1; i <= n; ++i) {
        Form d(decl);
        for (int j = 1; j <= n; ++j) d = d - wedge(OMROT(i, j), OM(j)) + wedge(ETR(i, j), ETA(j));
        for (int mu = 1; mu <= r; ++mu) d = d + wedge(B(mu, i), OMU(mu));
        sys.rules.set_dcoframe("zeta" + std::to_string(i), d);
    }
    for (int mu = 1; mu <= r; ++mu)
        for (int i = 1; i <= n; ++i) {
            Form d(decl);
            for (int k = 1; k <= n; ++k) d = d - wedge(B(mu, k), OMROT(k, i));
            for (int nu = 1; nu <= r; ++nu) d = d - wedge(WN(mu, nu), B(nu, i));
            sys.rules.set_dcoframe("b" + std::to_string(mu) + "_" + std::to_string(i), d);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Form d = -PHI(i, j);
            for (int k = 1; k <= n; ++k)
                d = d - wedge(OMROT(i, k), OMROT(k, j)) + wedge(ETR(i, k), ETR(k, j));
            for (int mu = 1; mu <= r; ++mu) d = d + wedge(B(mu, i), B(mu, j));
            sys.rules.set_dcoframe("c" + std::to_string(i) + "_" + std::to_string(j), d);
        }
    for (int mu = 1; mu <= r; ++mu)
        for (int nu = mu + 1; nu <= r; ++nu) {
            Form d(decl);
            for (int k = 1; k <= n; ++k) d = d + wedge(B(mu, k), B(nu, k));
            for (int rho = 1; rho <= r; ++rho) d = d - wedge(WN(mu, rho), WN(rho, nu));
            sys.rules.set_dcoframe("w" + std::to_string(mu) + "_" + std::to_string(nu), d);
        }

    if (generic) {
        // The d-rules of the curvature variables are pinned by exactness of
        // the structure equations: d Phi^i_j = Phi^i_k ^ eta^k_j
        // - eta^i_k ^ Phi^k_j. Matching monomials yields an exact linear
        // system for the rotation coefficients; failure here would mean the
        // equations above are wrong.
        const int np = static_cast<int>(cs.pairs.size());
        const int M = static_cast<int>(cs.basis.size());
        std::vector<std::vector<std::vector<QVector>>> Y(
            np, std::vector<std::vector<QVector>>(np,
                                                  std::vector<QVector>(np, QVector(M, Rational(0)))));
        for (int Pij = 0; Pij < np; ++Pij) {
            auto [i, j] = cs.pairs[Pij];
            Form rhs(decl);
            for (int k = 1; k <= n; ++k)
                rhs = rhs + wedge(PHI(i, k), ETR(k, j)) - wedge(ETR(i, k), PHI(k, j));
            for (int P = 0; P < np; ++P) {
                auto [k, l] = cs.pairs[P];
                Form dkl = wedge(ext_d(ETA(k), sys.rules), ETA(l)) -
                           wedge(ETA(k), ext_d(ETA(l), sys.rules));
                rhs = rhs - dkl * Rc(i, j, P);
            }
            for (const auto& [idx, coef] : rhs.terms()) {
                if (idx.size() != 3) throw Error("curvature rule solver: bad monomial degree");
                auto name_of = [&](std::uint32_t k2) { return decl->names[k2]; };
                std::uint32_t ia = idx[0], ib = idx[1], ic = idx[2];
                if (name_of(ia).rfind("eta", 0) != 0 || name_of(ib).rfind("eta", 0) != 0 ||
                    name_of(ic).rfind("etr", 0) != 0)
                    throw Error("curvature rule solver: unexpected monomial " + name_of(ia) + "^" +
                                name_of(ib) + "^" + name_of(ic));
                int a = std::stoi(name_of(ia).substr(3));
                int b = std::stoi(name_of(ib).substr(3));
                auto uv = name_of(ic).substr(3);
                int u = std::stoi(uv.substr(0, uv.find('_')));
                int v = std::stoi(uv.substr(uv.find('_') + 1));
                int P = cs.pair_index(a, b);
                int UV = cs.pair_index(u, v);
                for (const auto& [e, c2] : coef.terms()) {
                    int which = -1;
                    for (std::uint32_t v2 = 0; v2 < nv; ++v2) {
                        if (e[v2] == 1) {
                            if (which >= 0)
                                throw Error("curvature rule solver: nonlinear coefficient");
                            which = static_cast<int>(v2);
                        } else if (e[v2] != 0) {
                            throw Error("curvature rule solver: nonlinear coefficient");
                        }
                    }
                    if (which < 0) throw Error("curvature rule solver: constant term");
                    Y[Pij][P][UV][which] += c2;
                }
            }
        }
        const int ns = static_cast<int>(cs.sym_slots.size());
        QMatrix E(ns, M);
        for (int S = 0; S < ns; ++S)
            for (int m = 0; m < M; ++m) E.at(S, m) = cs.basis[m][S];
        std::vector<std::vector<QVector>> X(M, std::vector<QVector>(np, QVector(M, Rational(0))));
        for (int UV = 0; UV < np; ++UV)
            for (int mp = 0; mp < M; ++mp) {
                QVector y(ns, Rational(0));
                for (int S = 0; S < ns; ++S) {
                    auto [P, Q] = cs.sym_slots[S];
                    const Rational& a1 = Y[P][Q][UV][mp];
                    const Rational& a2 = Y[Q][P][UV][mp];
                    if (P != Q && a1 != a2)
                        throw Error("curvature rule solver: pair symmetry violated");
                    y[S] = a1;
                }
                auto x = solve(E, y);
                if (!x) throw Error("curvature rule solver: inconsistent system");
                for (int m = 0; m < M; ++m) X[m][UV][mp] = (*x)[m];
            }
        for (int m = 0; m < M; ++m) {
            Form d(decl);
            for (int UV = 0; UV < np; ++UV) {
                auto [u, v] = cs.pairs[UV];
                ScalarPoly coef(nv);
                for (int mp = 0; mp < M; ++mp)
                    if (X[m][UV][mp] != 0)
                        coef = coef + ScalarPoly::variable(nv, static_cast<std::uint32_t>(mp)) *
                                          X[m][UV][mp];
                d = d + ETR(u, v) * coef;
            }
            sys.rules.set_dscalar(static_cast<std::uint32_t>(m), d);
        }
    }

    sys.point = zero_point(sys);
    sys.validate();

    // the coframe-level structure equations must close exactly
    auto rep = mc_check(sys.rules);
    for (const auto& nm : rep.inconsistent)
        if (decl->name_index.count(nm))
            throw Error("isometric-embedding structure equations inconsistent at " + nm);
    return sys;
}

PfaffianSystem build_from_request(const CatalogRequest& req) {
    auto need = [&](std::size_t k) {
        if (req.params.size() < k)
            throw Error("catalog entry '" + req.name + "' needs " + std::to_string(k) +
                        " numeric parameter(s)");
    };
    if (req.name == "frobenius") {
        std::vector<std::string> vars = {"x", "y", "u"};
        ScalarPoly A = dsl::parse_polynomial(req.expr_a.empty() ? "y" : req.expr_a, vars);
        ScalarPoly B = dsl::parse_polynomial(req.expr_b.empty() ? "x" : req.expr_b, vars);
        return build_frobenius_example(A, B);
    }
    if (req.name == "contact") {
        need(2);
        return build_contact_j1(static_cast<int>(req.params[0]), static_cast<int>(req.params[1]));
    }
    if (req.name == "cauchy-riemann") return build_cauchy_riemann();
    if (req.name == "submanifold") {
        need(2);
        return build_submanifold_system(static_cast<int>(req.params[0]),
                                        static_cast<int>(req.params[1]));
    }
    if (req.name == "minimal-surface") {
        need(1);
        return build_minimal_surface_system(static_cast<int>(req.params[0]));
    }
    if (req.name == "isometric-embedding") {
        need(2);
        CurvatureMode mode =
            req.curvature == "flat" ? CurvatureMode::flat : CurvatureMode::generic_from_h;
        return build_isometric_embedding(static_cast<int>(req.params[0]),
                                         static_cast<int>(req.params[1]), mode);
    }
    throw Error("unknown catalog entry '" + req.name + "'");
}

}  // namespace eds::catalog
