#include "eds/pfaffian.hpp"

#include <algorithm>
#include <sstream>

namespace eds {

std::vector<std::uint32_t> PfaffianSystem::pi_directions() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < coframe->size(); ++i)
        if (coframe->blocks[i] != Block::theta && coframe->blocks[i] != Block::omega)
            out.push_back(i);
    return out;
}

std::vector<Form> PfaffianSystem::ideal_generators() const {
    std::vector<Form> gens;
    for (auto t : thetas()) gens.push_back(Form::symbol(coframe, t));
    return gens;
}

Form PfaffianSystem::independence() const {
    Form omega = Form::scalar(coframe, ScalarPoly::constant(coframe->nscalars(), Rational(1)));
    for (auto o : omegas()) omega = wedge(omega, Form::symbol(coframe, o));
    return omega;
}

void PfaffianSystem::validate() const {
    for (std::uint32_t i = 0; i < coframe->size(); ++i) {
        auto it = rules.dcoframe.find(i);
        if (it == rules.dcoframe.end()) throw IncompleteRulesError(coframe->names[i]);
        if (!it->second.is_zero() && !it->second.homogeneous_of_degree(2))
            throw Error("d " + coframe->names[i] + " is not a degree-2 form");
    }
    for (const auto& [v, f] : rules.dscalar) {
        if (!f.is_zero() && !f.homogeneous_of_degree(1))
            throw Error("d " + coframe->scalars[v] + " is not a degree-1 form");
    }
    if (omegas().empty()) throw Error("system has an empty independence condition");
}

PointAssignment require_full_point(const PfaffianSystem& sys,
                                   const std::optional<PointAssignment>& override) {
    const PointAssignment* p = override ? &*override : (sys.point ? &*sys.point : nullptr);
    PointAssignment full;
    if (p) full = *p;
    for (std::uint32_t v = 0; v < sys.coframe->nscalars(); ++v)
        if (!full.count(v)) throw MissingAssignmentError(sys.coframe->scalars[v]);
    return full;
}

namespace {

enum class Kind { theta, omega, pi };

struct Classifier {
    std::vector<Kind> kind;
    std::vector<int> pos;  // position within its block list

    Classifier(const PfaffianSystem& sys) {
        kind.assign(sys.coframe->size(), Kind::pi);
        pos.assign(sys.coframe->size(), -1);
        auto th = sys.thetas();
        auto om = sys.omegas();
        auto pi = sys.pi_directions();
        for (std::size_t k = 0; k < th.size(); ++k) kind[th[k]] = Kind::theta, pos[th[k]] = (int)k;
        for (std::size_t k = 0; k < om.size(); ++k) kind[om[k]] = Kind::omega, pos[om[k]] = (int)k;
        for (std::size_t k = 0; k < pi.size(); ++k) kind[pi[k]] = Kind::pi, pos[pi[k]] = (int)k;
    }
};

std::vector<Form> reduced_dthetas(const PfaffianSystem& sys) {
    IdealBasis ideal = row_reduce_generators(sys.ideal_generators());
    std::vector<Form> out;
    for (auto t : sys.thetas())
        out.push_back(reduce_mod(ext_d(Form::symbol(sys.coframe, t), sys.rules), ideal));
    return out;
}

}  // namespace

LinearityReport check_linear(const PfaffianSystem& sys) {
    LinearityReport rep;
    Classifier cl(sys);
    auto dthetas = reduced_dthetas(sys);
    auto th = sys.thetas();
    for (std::size_t a = 0; a < dthetas.size(); ++a) {
        for (const auto& [idx, c] : dthetas[a].terms()) {
            if (idx.size() != 2) continue;
            if (cl.kind[idx[0]] == Kind::pi && cl.kind[idx[1]] == Kind::pi) {
                rep.linear = false;
                rep.offending.push_back("d " + sys.coframe->names[th[a]] + " contains " +
                                        sys.coframe->names[idx[0]] + "/\\" +
                                        sys.coframe->names[idx[1]]);
            }
        }
    }
    return rep;
}

bool frobenius_check(const PfaffianSystem& sys) {
    for (const auto& f : reduced_dthetas(sys))
        if (!f.is_zero()) return false;
    return true;
}

int TableauExtract::torsion_slot(int a, int i, int j) const {
    // lex over a, then pairs (i<j) in lex order
    int pair = i * (2 * n - i - 1) / 2 + (j - i - 1);
    return a * (n * (n - 1) / 2) + pair;
}

TableauExtract extract_tableau_torsion(const PfaffianSystem& sys, const PointAssignment& point) {
    TableauExtract ex;
    ex.theta_idx = sys.thetas();
    ex.omega_idx = sys.omegas();
    ex.pi_idx = sys.pi_directions();
    ex.s = static_cast<int>(ex.theta_idx.size());
    ex.n = static_cast<int>(ex.omega_idx.size());
    ex.r = static_cast<int>(ex.pi_idx.size());
    ex.point = point;

    const std::uint32_t nv = sys.coframe->nscalars();
    for (std::uint32_t v = 0; v < nv; ++v)
        if (!point.count(v)) throw MissingAssignmentError(sys.coframe->scalars[v]);

    Classifier cl(sys);
    ex.A_sym.assign(ex.r, std::vector<std::vector<ScalarPoly>>(
                              ex.s, std::vector<ScalarPoly>(ex.n, ScalarPoly(nv))));
    ex.dtheta_reduced = reduced_dthetas(sys);

    for (int a = 0; a < ex.s; ++a) {
        for (const auto& [idx, c] : ex.dtheta_reduced[a].terms()) {
            if (idx.size() != 2)
                throw Error("reduced d theta has a monomial of degree != 2");
            Kind k0 = cl.kind[idx[0]], k1 = cl.kind[idx[1]];
            if (k0 == Kind::omega && k1 == Kind::omega) {
                ex.T_sym[{a, cl.pos[idx[0]], cl.pos[idx[1]]}] = c;
            } else if (k0 == Kind::pi && k1 == Kind::omega) {
                ex.A_sym[cl.pos[idx[0]]][a][cl.pos[idx[1]]] =
                    ex.A_sym[cl.pos[idx[0]]][a][cl.pos[idx[1]]] + c;
            } else if (k0 == Kind::omega && k1 == Kind::pi) {
                ex.A_sym[cl.pos[idx[1]]][a][cl.pos[idx[0]]] =
                    ex.A_sym[cl.pos[idx[1]]][a][cl.pos[idx[0]]] - c;
            } else {
                throw NonlinearSystemError("d " + sys.coframe->names[ex.theta_idx[a]] +
                                           " contains " + sys.coframe->names[idx[0]] + "/\\" +
                                           sys.coframe->names[idx[1]]);
            }
        }
    }

    std::vector<Rational> pt(nv);
    for (const auto& [v, q] : point) pt[v] = q;

    ex.A_eval.reserve(ex.r);
    for (int e = 0; e < ex.r; ++e) {
        QMatrix m(ex.s, ex.n);
        for (int a = 0; a < ex.s; ++a)
            for (int i = 0; i < ex.n; ++i) m.at(a, i) = ex.A_sym[e][a][i].eval(pt);
        ex.A_eval.push_back(std::move(m));
    }
    ex.T_eval.assign(ex.torsion_slots(), Rational(0));
    for (const auto& [key, c] : ex.T_sym) {
        auto [a, i, j] = key;
        ex.T_eval[ex.torsion_slot(a, i, j)] = c.eval(pt);
    }
    ex.tableau = Tableau::from_span(ex.n, ex.s, ex.A_eval);
    return ex;
}

TorsionClass torsion_class(const TableauExtract& ex) {
    TorsionClass tc;
    tc.representative = ex.T_eval;
    const int slots = ex.torsion_slots();

    // delta(A (x) V*): for each tableau basis element M and each j,
    // the skew part of M (x) v^j
    for (const auto& M : ex.tableau.basis) {
        for (int j = 0; j < ex.n; ++j) {
            QVector v(slots, Rational(0));
            bool nonzero = false;
            for (int a = 0; a < ex.s; ++a)
                for (int i = 0; i < ex.n; ++i) {
                    if (i == j || M.at(a, i) == 0) continue;
                    int lo = std::min(i, j), hi = std::max(i, j);
                    Rational sign = (i < j) ? 1 : -1;
                    v[ex.torsion_slot(a, lo, hi)] += sign * M.at(a, i);
                    nonzero = true;
                }
            if (nonzero) tc.image_basis.push_back(std::move(v));
        }
    }
    tc.image_basis = span_basis(tc.image_basis);
    tc.zero_at_point = in_span(tc.image_basis, tc.representative);

    // residual equations: cokernel functionals of the image applied to the
    // symbolic torsion, emitted in lex (a, i<j) functional order
    std::uint32_t nv = 0;
    if (!ex.dtheta_reduced.empty() && ex.dtheta_reduced[0].decl())
        nv = ex.dtheta_reduced[0].decl()->nscalars();
    std::vector<ScalarPoly> t_poly(slots, ScalarPoly(nv));
    for (const auto& [key, c] : ex.T_sym) {
        auto [a, i, j] = key;
        t_poly[ex.torsion_slot(a, i, j)] = c;
    }
    for (const auto& phi : cokernel(tc.image_basis, slots)) {
        ScalarPoly res(nv);
        for (int k = 0; k < slots; ++k)
            if (phi[k] != 0) res = res + t_poly[k] * phi[k];
        tc.residuals.push_back(res);
        if (!res.is_zero()) tc.residuals_identically_zero = false;
    }
    return tc;
}

CauchyCharacteristics cauchy_characteristics(const PfaffianSystem& sys,
                                             const PointAssignment& point) {
    CauchyCharacteristics cc;
    TableauExtract ex = extract_tableau_torsion(sys, point);
    const std::uint32_t N = sys.coframe->size();

    // unknowns: components of v along non-theta directions
    std::vector<std::uint32_t> dirs;
    for (std::uint32_t i = 0; i < N; ++i)
        if (sys.coframe->blocks[i] != Block::theta) dirs.push_back(i);
    std::map<std::uint32_t, int> col;
    for (std::size_t k = 0; k < dirs.size(); ++k) col[dirs[k]] = static_cast<int>(k);

    std::vector<Rational> pt(sys.coframe->nscalars());
    for (const auto& [v, q] : point) pt[v] = q;

    // conditions: for each theta row and each coframe direction r, the
    // coefficient of xi_r in v _| (reduced dtheta) vanishes
    std::vector<QVector> rows;
    for (int a = 0; a < ex.s; ++a) {
        std::map<std::uint32_t, QVector> cond;  // r -> row over unknowns
        for (const auto& [idx, c] : ex.dtheta_reduced[a].terms()) {
            Rational cv = c.eval(pt);
            if (cv == 0) continue;
            std::uint32_t p = idx[0], q = idx[1];
            // v _| (xi_p ^ xi_q) = v_p xi_q - v_q xi_p
            auto& rq = cond.try_emplace(q, QVector(dirs.size(), Rational(0))).first->second;
            rq[col.at(p)] += cv;
            auto& rp = cond.try_emplace(p, QVector(dirs.size(), Rational(0))).first->second;
            rp[col.at(q)] -= cv;
        }
        for (auto& [r, row] : cond) rows.push_back(std::move(row));
    }
    std::vector<QVector> ker = rows.empty()
                                   ? cokernel({}, static_cast<int>(dirs.size()))
                                   : nullspace(stack_rows(rows, static_cast<int>(dirs.size())));
    for (const auto& k : ker) {
        QVector full(N, Rational(0));
        for (std::size_t c2 = 0; c2 < dirs.size(); ++c2) full[dirs[c2]] = k[c2];
        cc.basis.push_back(std::move(full));
    }
    cc.dimension = static_cast<int>(cc.basis.size());
    return cc;
}

long integral_element_dim(const PfaffianSystem& sys, const PointAssignment& point) {
    TableauExtract ex = extract_tableau_torsion(sys, point);
    TorsionClass tc = torsion_class(ex);
    if (!tc.zero_at_point) {
        std::ostringstream os;
        bool first = true;
        for (const auto& r : tc.residuals) {
            if (r.is_zero()) continue;
            if (!first) os << "; ";
            first = false;
            os << r.to_string(sys.coframe->scalars);
        }
        throw NoIntegralElementError(os.str().empty() ? "nonzero constant torsion" : os.str());
    }
    return prolong(ex.tableau).dim();
}

}  // namespace eds
