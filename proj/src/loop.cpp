#include "eds/loop.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eds {

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base)) base += "_";
    return base;
}

std::vector<Rational> point_vector(const CoframePtr& decl, const PointAssignment& pt) {
    std::vector<Rational> v(decl->nscalars(), Rational(0));
    for (const auto& [k, q] : pt) v[k] = q;
    return v;
}

}  // namespace

ProlongedSystem prolong_system(const PfaffianSystem& sys, const TableauExtract& ex,
                               const std::string& var_prefix) {
    TorsionClass tc = torsion_class(ex);
    if (!tc.zero_at_point)
        throw MustRestrictFirstError("prolongation requires zero torsion at the point");
    for (int e = 0; e < ex.r; ++e)
        for (int a = 0; a < ex.s; ++a)
            for (int i = 0; i < ex.n; ++i)
                if (!ex.A_sym[e][a][i].is_constant())
                    throw Error("prolongation requires constant tableau coefficients");

    const CoframePtr old_decl = sys.coframe;
    const std::uint32_t old_nv = old_decl->nscalars();
    Prolongation P = prolong(ex.tableau);
    const int M = P.dim();
    const int npairs = ex.n * (ex.n + 1) / 2;

    // flattened presentation rows over the pi directions
    std::vector<QVector> rows(static_cast<std::size_t>(ex.s) * ex.n, QVector(ex.r, Rational(0)));
    for (int a = 0; a < ex.s; ++a)
        for (int i = 0; i < ex.n; ++i)
            for (int e = 0; e < ex.r; ++e) rows[a * ex.n + i][e] = ex.A_eval[e].at(a, i);

    // greedy independent row selection (lex over (a, i))
    std::vector<std::pair<int, int>> selected;
    std::vector<QVector> sel_rows;
    int cur_rank = 0;
    for (int a = 0; a < ex.s; ++a)
        for (int i = 0; i < ex.n; ++i) {
            const QVector& row = rows[a * ex.n + i];
            bool zero =
                std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; });
            if (zero) continue;
            std::vector<QVector> trial = sel_rows;
            trial.push_back(row);
            int r2 = rank(stack_rows(trial, ex.r));
            if (r2 > cur_rank) {
                cur_rank = r2;
                sel_rows.push_back(row);
                selected.emplace_back(a, i);
            }
        }
    const int K = static_cast<int>(selected.size());
    if (K != ex.tableau.dim()) throw Error("tableau presentation rank mismatch");

    QMatrix Msel = stack_rows(sel_rows, ex.r);
    Echelon esel = rref(Msel);
    std::vector<int> leaders = esel.pivot_cols;  // |leaders| == K
    std::set<int> leader_set(leaders.begin(), leaders.end());

    // ---- new declaration ----
    std::set<std::string> taken(old_decl->names.begin(), old_decl->names.end());
    for (const auto& s2 : old_decl->scalars) taken.insert(s2);

    std::vector<std::string> new_scalar_names;
    for (int m = 0; m < M; ++m) {
        auto nm = fresh_name(var_prefix + std::to_string(m + 1), taken);
        taken.insert(nm);
        new_scalar_names.push_back(nm);
    }
    std::vector<std::string> theta_names;
    for (int k = 0; k < K; ++k) {
        auto nm = fresh_name(var_prefix + "t" + std::to_string(k + 1), taken);
        taken.insert(nm);
        theta_names.push_back(nm);
    }
    std::vector<std::string> tau_names;
    for (int m = 0; m < M; ++m) {
        auto nm = fresh_name("d" + new_scalar_names[m], taken);
        taken.insert(nm);
        tau_names.push_back(nm);
    }

    std::vector<std::string> names;
    std::vector<Block> blocks;
    std::vector<std::uint32_t> old_to_new(old_decl->size(), UINT32_MAX);
    for (auto t : ex.theta_idx) {
        old_to_new[t] = static_cast<std::uint32_t>(names.size());
        names.push_back(old_decl->names[t]);
        blocks.push_back(Block::theta);
    }
    std::vector<std::uint32_t> theta_new_pos;
    for (int k = 0; k < K; ++k) {
        theta_new_pos.push_back(static_cast<std::uint32_t>(names.size()));
        names.push_back(theta_names[k]);
        blocks.push_back(Block::theta);
    }
    for (auto o : ex.omega_idx) {
        old_to_new[o] = static_cast<std::uint32_t>(names.size());
        names.push_back(old_decl->names[o]);
        blocks.push_back(Block::omega);
    }
    for (int e = 0; e < ex.r; ++e) {
        if (leader_set.count(e)) continue;
        std::uint32_t old_idx = ex.pi_idx[e];
        old_to_new[old_idx] = static_cast<std::uint32_t>(names.size());
        names.push_back(old_decl->names[old_idx]);
        blocks.push_back(old_decl->blocks[old_idx]);
    }
    std::vector<std::uint32_t> tau_pos;
    for (int m = 0; m < M; ++m) {
        tau_pos.push_back(static_cast<std::uint32_t>(names.size()));
        names.push_back(tau_names[m]);
        blocks.push_back(Block::pi);
    }

    std::vector<std::string> scalars = old_decl->scalars;
    scalars.insert(scalars.end(), new_scalar_names.begin(), new_scalar_names.end());
    auto decl = make_coframe(names, blocks, scalars);
    const std::uint32_t nv = decl->nscalars();

    std::vector<std::uint32_t> vmap(old_nv);
    for (std::uint32_t v = 0; v < old_nv; ++v) vmap[v] = v;

    // p^a_{ij}(c) for a selected row (a, i): sum_m c_m X_m[a][sym(i,j)]
    auto p_coeff = [&](int a, int i, int j) {
        ScalarPoly out(nv);
        for (int m = 0; m < M; ++m) {
            const Rational& x = P.basis[m][a * npairs + sym_index(ex.n, i, j)];
            if (x != 0)
                out = out + ScalarPoly::variable(nv, old_nv + static_cast<std::uint32_t>(m)) * x;
        }
        return out;
    };
    auto omega_new = [&](int i) { return Form::symbol(decl, old_to_new[ex.omega_idx[i]]); };
    // F_k = Theta_k + q_k over the new declaration
    auto Fk = [&](int k) {
        auto [a, i] = selected[k];
        Form f = Form::symbol(decl, theta_new_pos[k]);
        for (int j = 0; j < ex.n; ++j) f = f + omega_new(j) * p_coeff(a, i, j);
        return f;
    };

    // substitution for the leading pi symbols: pi_L = A_L^{-1} (F - A_D pi_D)
    QMatrix AL(K, K);
    for (int k = 0; k < K; ++k)
        for (int l = 0; l < K; ++l) AL.at(k, l) = Msel.at(k, leaders[l]);
    auto ALinv_opt = inverse(AL);
    if (!ALinv_opt) throw Error("leading pi block not invertible");
    QMatrix ALinv = *ALinv_opt;

    std::map<std::uint32_t, Form> subst;  // old coframe index -> new form
    for (int l = 0; l < K; ++l) {
        Form f(decl);
        for (int k = 0; k < K; ++k)
            if (ALinv.at(l, k) != 0) f = f + Fk(k) * ALinv.at(l, k);
        for (int e = 0; e < ex.r; ++e) {
            if (leader_set.count(e)) continue;
            Rational acc(0);
            for (int k = 0; k < K; ++k) acc += ALinv.at(l, k) * Msel.at(k, e);
            if (acc != 0) f = f - Form::symbol(decl, old_to_new[ex.pi_idx[e]]) * acc;
        }
        subst[ex.pi_idx[static_cast<std::size_t>(leaders[l])]] = std::move(f);
    }

    auto rewrite = [&](const Form& f) {
        Form out(decl);
        for (const auto& [idx, c] : f.terms()) {
            Form acc = Form::scalar(decl, c.reindex(vmap, nv));
            for (auto s2 : idx) {
                auto it = subst.find(s2);
                if (it != subst.end())
                    acc = wedge(acc, it->second);
                else
                    acc = wedge(acc, Form::symbol(decl, old_to_new[s2]));
            }
            out = out + acc;
        }
        return out;
    };

    PfaffianSystem out;
    out.coframe = decl;
    out.rules = StructureRules(decl);

    for (std::uint32_t i = 0; i < old_decl->size(); ++i) {
        if (old_to_new[i] == UINT32_MAX) continue;  // leader, replaced
        out.rules.set_dcoframe(old_to_new[i], rewrite(sys.rules.dcoframe.at(i)));
    }
    for (int k = 0; k < K; ++k) {
        auto [a, i] = selected[k];
        Form d(decl);
        for (int e = 0; e < ex.r; ++e) {
            const Rational& c = Msel.at(k, e);
            if (c != 0) d = d + rewrite(sys.rules.dcoframe.at(ex.pi_idx[e])) * c;
        }
        for (int j = 0; j < ex.n; ++j) {
            Form dp(decl);
            for (int m = 0; m < M; ++m) {
                const Rational& x = P.basis[m][a * npairs + sym_index(ex.n, i, j)];
                if (x != 0) dp = dp + Form::symbol(decl, tau_pos[m]) * x;
            }
            d = d - wedge(dp, omega_new(j));
            d = d - rewrite(sys.rules.dcoframe.at(ex.omega_idx[j])) * p_coeff(a, i, j);
        }
        out.rules.set_dcoframe(theta_new_pos[k], d);
    }
    for (const auto& [v, f] : sys.rules.dscalar) out.rules.set_dscalar(v, rewrite(f));
    for (int m = 0; m < M; ++m) {
        out.rules.set_dscalar(old_nv + static_cast<std::uint32_t>(m),
                              Form::symbol(decl, tau_pos[m]));
        out.rules.set_dcoframe(tau_pos[m], Form::zero(decl));
    }

    out.point = PointAssignment{};
    for (const auto& [v, q] : ex.point) (*out.point)[v] = q;
    for (int m = 0; m < M; ++m) (*out.point)[old_nv + static_cast<std::uint32_t>(m)] = Rational(0);

    out.validate();

    // the old ideal closes modulo the enlarged ideal
    IdealBasis new_ideal = row_reduce_generators(out.ideal_generators());
    for (auto t : ex.theta_idx) {
        Form r = reduce_mod(ext_d(Form::symbol(decl, old_to_new[t]), out.rules), new_ideal);
        if (!r.is_zero())
            throw Error("prolonged system: old ideal form " + old_decl->names[t] +
                        " does not close modulo the new ideal");
    }

    ProlongedSystem res;
    res.system = std::move(out);
    res.new_scalars = new_scalar_names;
    res.new_thetas = theta_names;
    res.prolongation_dim = M;
    return res;
}

Restriction restrict_by_torsion(const PfaffianSystem& sys, const TableauExtract& ex,
                                const std::vector<ScalarPoly>& residuals,
                                const PointAssignment& point) {
    Restriction out;
    const CoframePtr decl = sys.coframe;
    std::vector<Rational> pt = point_vector(decl, point);
    for (const auto& q : residuals)
        if (q.eval(pt) != 0)
            throw InvalidRestrictionError("point is not on the torsion zero locus");

    IdealBasis ideal = row_reduce_generators(sys.ideal_generators());
    std::map<std::uint32_t, int> pi_pos, om_pos;
    for (int e = 0; e < ex.r; ++e) pi_pos[ex.pi_idx[e]] = e;
    for (int i = 0; i < ex.n; ++i) om_pos[ex.omega_idx[i]] = i;

    for (const auto& q : residuals) {
        Form dq = reduce_mod(ext_d(Form::scalar(decl, q), sys.rules), ideal);
        QVector lp(ex.r, Rational(0)), lo(ex.n, Rational(0));
        bool any = false;
        for (const auto& [idx, c] : dq.terms()) {
            if (idx.size() != 1) throw Error("restriction: non-1-form differential");
            Rational cv = c.eval(pt);
            if (cv == 0) continue;
            any = true;
            auto itp = pi_pos.find(idx[0]);
            if (itp != pi_pos.end()) {
                lp[itp->second] += cv;
                continue;
            }
            auto ito = om_pos.find(idx[0]);
            if (ito != om_pos.end()) {
                lo[ito->second] += cv;
                continue;
            }
            throw Error("restriction: differential meets an ideal direction");
        }
        if (!any) continue;
        bool lp_zero = std::all_of(lp.begin(), lp.end(), [](const Rational& x) { return x == 0; });
        bool lo_zero = std::all_of(lo.begin(), lo.end(), [](const Rational& x) { return x == 0; });
        if (lp_zero && !lo_zero) out.independence_survives = false;
        out.relations_pi.push_back(std::move(lp));
        out.relations_omega.push_back(std::move(lo));
    }

    // surviving pi space and the cut tableau
    std::vector<QVector> nontrivial;
    for (const auto& l : out.relations_pi) {
        bool z = std::all_of(l.begin(), l.end(), [](const Rational& x) { return x == 0; });
        if (!z) nontrivial.push_back(l);
    }
    out.pi_kernel =
        nontrivial.empty() ? cokernel({}, ex.r) : nullspace(stack_rows(nontrivial, ex.r));
    std::vector<QMatrix> span;
    for (const auto& v : out.pi_kernel) {
        QMatrix m(ex.s, ex.n);
        for (int e = 0; e < ex.r; ++e)
            if (v[e] != 0) m = m + ex.A_eval[e] * v[e];
        span.push_back(std::move(m));
    }
    out.cut_tableau = Tableau::from_span(ex.n, ex.s, span);

    // eliminated directions: pi_pivot = -(free part) - beta . omega; the
    // beta parts feed back into the torsion
    out.adjusted_torsion = ex.T_eval;
    if (!nontrivial.empty()) {
        const int R = static_cast<int>(out.relations_pi.size());
        QMatrix aug(R, ex.r + ex.n);
        for (int q2 = 0; q2 < R; ++q2) {
            for (int e = 0; e < ex.r; ++e) aug.at(q2, e) = out.relations_pi[q2][e];
            for (int i = 0; i < ex.n; ++i) aug.at(q2, ex.r + i) = out.relations_omega[q2][i];
        }
        Echelon es = rref(aug);
        for (int row = 0; row < es.rank; ++row) {
            int pcol = es.pivot_cols[row];
            if (pcol >= ex.r) {
                out.independence_survives = false;
                continue;
            }
            for (int i = 0; i < ex.n; ++i) {
                Rational beta = es.rref.at(row, ex.r + i);
                if (beta == 0) continue;
                const QMatrix& Ap = ex.A_eval[pcol];
                for (int a = 0; a < ex.s; ++a)
                    for (int k = 0; k < ex.n; ++k) {
                        // A_p[a][k] pi^p ^ omega^k picks up (-beta omega^i) ^ omega^k
                        if (Ap.at(a, k) == 0 || i == k) continue;
                        Rational c = -beta * Ap.at(a, k);
                        int lo2 = std::min(i, k), hi2 = std::max(i, k);
                        out.adjusted_torsion[ex.torsion_slot(a, lo2, hi2)] += (i < k) ? c : -c;
                    }
            }
        }
    }
    // zero iff the adjusted representative lies in delta(A_cut (x) V*)
    TableauExtract cutex = ex;
    cutex.tableau = out.cut_tableau;
    cutex.T_eval = out.adjusted_torsion;
    cutex.T_sym.clear();
    TorsionClass tc = torsion_class(cutex);
    out.adjusted_torsion_zero = tc.zero_at_point;
    return out;
}

VanishingReport vanishing_coefficient_lemma(const PfaffianSystem& sys, const TableauExtract& ex) {
    VanishingReport rep;
    Prolongation P = prolong(ex.tableau);
    const int npairs = ex.n * (ex.n + 1) / 2;
    for (int a = 0; a < ex.s; ++a) {
        bool has_pi = false;
        for (int e = 0; e < ex.r && !has_pi; ++e)
            for (int i = 0; i < ex.n; ++i)
                if (ex.A_eval[e].at(a, i) != 0) {
                    has_pi = true;
                    break;
                }
        if (!has_pi) continue;
        bool freedom = false;
        for (const auto& x : P.basis) {
            for (int k = 0; k < npairs; ++k)
                if (x[a * npairs + k] != 0) {
                    freedom = true;
                    break;
                }
            if (freedom) break;
        }
        if (!freedom) {
            rep.forced_rows.push_back(a);
            rep.descriptions.push_back(
                "row " + sys.coframe->names[ex.theta_idx[a]] +
                ": symmetric coefficients vanish identically; its pi combinations join the "
                "ideal with no correction");
        }
    }
    return rep;
}

std::string Generality::phrase() const {
    if (frobenius_constants) return "constants (Frobenius)";
    std::ostringstream os;
    os << s_p << " function" << (s_p == 1 ? "" : "s") << " of " << p << " variable"
       << (p == 1 ? "" : "s");
    return os.str();
}

std::string status_name(Status st) {
    switch (st) {
        case Status::involutive: return "involutive";
        case Status::no_integral_manifolds: return "no-integral-manifolds";
        case Status::cap_reached: return "iteration-cap-reached";
    }
    return "?";
}

namespace {

// Moves the point onto the common zero locus when the residuals are
// jointly affine in some block of variables. `empty` is set when the locus
// is provably empty (a constant nonzero residual).
std::optional<PointAssignment> solve_onto_locus(const std::vector<ScalarPoly>& residuals,
                                                const PointAssignment& point,
                                                const CoframePtr& decl, bool& empty) {
    empty = false;
    std::vector<ScalarPoly> live;
    for (const auto& q : residuals)
        if (!q.is_zero()) live.push_back(q);
    if (live.empty()) return point;
    const std::uint32_t nv = decl->nscalars();

    for (const auto& q : live)
        if (q.is_constant() && q.constant_value() != 0) {
            empty = true;
            return std::nullopt;
        }

    std::set<std::uint32_t> appearing;
    for (const auto& q : live)
        for (const auto& [e, c] : q.terms())
            for (std::uint32_t v = 0; v < nv; ++v)
                if (e[v] > 0) appearing.insert(v);
    if (appearing.empty()) return point;

    // candidate block: variables of per-monomial degree <= 1 everywhere
    std::set<std::uint32_t> block;
    for (auto v : appearing) {
        bool ok = true;
        for (const auto& q : live)
            for (const auto& [e, c] : q.terms())
                if (e[v] > 1) ok = false;
        if (ok) block.insert(v);
    }
    // enforce joint affinity: no monomial with two block variables
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& q : live)
            for (const auto& [e, c] : q.terms()) {
                std::vector<std::uint32_t> in;
                for (auto v : block)
                    if (e[v] > 0) in.push_back(v);
                if (in.size() >= 2) {
                    for (std::size_t k = 1; k < in.size(); ++k) block.erase(in[k]);
                    changed = true;
                }
            }
    }
    if (block.empty()) return std::nullopt;

    std::vector<std::uint32_t> bvars(block.begin(), block.end());
    std::map<std::uint32_t, Rational> others;
    for (std::uint32_t v = 0; v < nv; ++v)
        if (!block.count(v)) others[v] = point.count(v) ? point.at(v) : Rational(0);

    QMatrix L(static_cast<int>(live.size()), static_cast<int>(bvars.size()));
    QVector b(live.size(), Rational(0));
    std::vector<Rational> zero_pt(nv, Rational(0));
    for (const auto& [v, q] : others) zero_pt[v] = q;
    for (std::size_t r2 = 0; r2 < live.size(); ++r2) {
        for (std::size_t c2 = 0; c2 < bvars.size(); ++c2) {
            ScalarPoly d = live[r2].derivative(bvars[c2]).substitute(others);
            if (!d.is_constant()) return std::nullopt;
            L.at(static_cast<int>(r2), static_cast<int>(c2)) = d.constant_value();
        }
        ScalarPoly c0 = live[r2].substitute(others);
        b[r2] = -c0.eval(zero_pt);
    }
    auto sol = solve(L, b);
    if (!sol) return std::nullopt;
    PointAssignment moved = point;
    for (std::size_t c2 = 0; c2 < bvars.size(); ++c2) moved[bvars[c2]] = (*sol)[c2];
    return moved;
}

Generality generality_from(const CharacterVector& cv) {
    Generality g;
    int j = cv.last_nonzero_index();
    if (j == 0) {
        g.frobenius_constants = true;
    } else {
        g.p = j;
        g.s_p = cv.s[j - 1];
    }
    return g;
}

}  // namespace

AnalysisReport analyze(const PfaffianSystem& input, const AnalyzeOptions& opts) {
    AnalysisReport rep;
    rep.seed = opts.seed;

    PfaffianSystem sys = input;
    sys.validate();
    auto mc = mc_check(sys.rules);
    for (const auto& nm : mc.inconsistent) {
        if (sys.coframe->name_index.count(nm))
            throw Error("structure rules inconsistent at coframe symbol " + nm);
        rep.notes.push_back("d^2 != 0 at scalar variable " + nm +
                            " (jet truncation of the structure rules)");
    }
    auto lin = check_linear(sys);
    if (!lin.linear) {
        std::string msg = "system is not a linear Pfaffian system:";
        for (const auto& o : lin.offending) msg += " " + o;
        throw NonlinearSystemError(msg);
    }

    PointAssignment point = require_full_point(sys, opts.point);
    Rng rng(opts.seed);

    for (int iter = 0; iter <= opts.max_prolongations; ++iter) {
        IterationRecord rec;
        rec.iteration = iter;

        TableauExtract ex = extract_tableau_torsion(sys, point);
        TorsionClass tc = torsion_class(ex);

        if (!tc.zero_at_point) {
            bool empty = false;
            auto moved = solve_onto_locus(tc.residuals, point, sys.coframe, empty);
            if (empty) {
                for (const auto& q : tc.residuals)
                    if (!q.is_zero())
                        rec.torsion_residuals.push_back(q.to_string(sys.coframe->scalars));
                rec.torsion_zero_at_point = false;
                rec.dim_tableau = ex.tableau.dim();
                rep.iterations.push_back(rec);
                rep.status = Status::no_integral_manifolds;
                rep.point_used = point;
                rep.scalar_names = sys.coframe->scalars;
                return rep;
            }
            if (!moved)
                throw InvalidRestrictionError(
                    "torsion nonzero at the point and the residuals are not affine in any "
                    "variable block; supply a point on the zero locus");
            point = *moved;
            ex = extract_tableau_torsion(sys, point);
            tc = torsion_class(ex);
            if (!tc.zero_at_point)
                throw InvalidRestrictionError("failed to move the point onto the torsion locus");
        }
        rec.torsion_zero_at_point = true;
        for (const auto& q : tc.residuals)
            if (!q.is_zero()) rec.torsion_residuals.push_back(q.to_string(sys.coframe->scalars));

        Tableau tab = ex.tableau;
        if (!tc.residuals_identically_zero) {
            std::vector<ScalarPoly> live;
            for (const auto& q : tc.residuals)
                if (!q.is_zero()) live.push_back(q);
            Restriction restr = restrict_by_torsion(sys, ex, live, point);
            rec.restricted = true;
            if (!restr.independence_survives) {
                rec.dim_tableau = tab.dim();
                rep.iterations.push_back(rec);
                rep.status = Status::no_integral_manifolds;
                rep.point_used = point;
                rep.scalar_names = sys.coframe->scalars;
                return rep;
            }
            if (!restr.adjusted_torsion_zero) {
                rep.notes.push_back(
                    "restriction left a nonzero torsion representative; iterated restriction "
                    "is outside the supported flow");
                rec.dim_tableau = tab.dim();
                rep.iterations.push_back(rec);
                rep.status = Status::cap_reached;
                rep.point_used = point;
                rep.scalar_names = sys.coframe->scalars;
                return rep;
            }
            tab = restr.cut_tableau;
        }

        CartanResult ct = cartan_test(tab, opts.flag_trials, opts.seed + 101 * iter);
        rec.dim_tableau = ct.dim_tableau;
        rec.characters = ct.chars.s;
        rec.cartan_bound = ct.bound;
        rec.dim_prolongation = ct.dim_prolongation;
        rec.involutive = ct.involutive;
        rep.iterations.push_back(rec);

        if (ct.involutive) {
            rep.status = Status::involutive;
            rep.generality = generality_from(ct.chars);
            break;
        }
        if (iter == opts.max_prolongations) {
            rep.status = Status::cap_reached;
            break;
        }
        if (rec.restricted) {
            rep.notes.push_back(
                "prolongation after a torsion restriction is outside the supported flow; "
                "stopping");
            rep.status = Status::cap_reached;
            break;
        }

        ProlongedSystem pro = prolong_system(sys, ex, opts.new_var_prefix + std::to_string(iter));
        const std::uint32_t old_nv = sys.coframe->nscalars();
        sys = std::move(pro.system);
        PointAssignment next;
        for (const auto& [v, q] : point) next[v] = q;
        for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(pro.prolongation_dim); ++m)
            next[old_nv + m] = Rational(rng.small_nonzero(3));
        point = next;
    }

    rep.point_used = point;
    rep.scalar_names = sys.coframe->scalars;
    return rep;
}

}  // namespace eds
