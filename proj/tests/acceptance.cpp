// Acceptance suite: one line per criterion, PASS/FAIL, exit code = number
// of failures. Every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "eds/catalog.hpp"
#include "eds/loop.hpp"
#include "eds/weier.hpp"
#include "oracles.hpp"

using namespace eds;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt > budget_seconds) {
        ok = false;
        detail << " [exceeded " << budget_seconds << "s budget: " << dt << "s]";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << " ("
              << dt << "s)" << detail.str() << "\n";
    if (!ok) ++failures;
}

bool expect(std::ostream& os, bool cond, const std::string& what) {
    if (!cond) os << " [failed: " << what << "]";
    return cond;
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n================\n";

    criterion(1, "Cauchy-Riemann: characters (2,0), dim A^(1) = 2, involutive, 2 functions of 1 variable",
              1.0, [](std::ostream& os) {
        auto rep = analyze(catalog::build_cauchy_riemann(), {});
        bool ok = expect(os, rep.status == Status::involutive, "involutive");
        ok &= expect(os, rep.iterations.size() == 1, "iteration 0");
        ok &= expect(os, rep.iterations[0].characters == std::vector<int>{2, 0}, "characters");
        ok &= expect(os, rep.iterations[0].dim_prolongation == 2, "dim A^(1)");
        ok &= expect(os, rep.generality && rep.generality->phrase() == "2 functions of 1 variable",
                     "generality");
        return ok;
    });

    criterion(2, "contact J1(n,s), n<=4, s<=3: involutive at iteration 0, s_j = s, dim A^(1) = s n(n+1)/2",
              5.0, [](std::ostream& os) {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (int s = 1; s <= 3; ++s) {
                auto rep = analyze(catalog::build_contact_j1(n, s), {});
                std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
                ok &= expect(os, rep.status == Status::involutive, tag + " involutive");
                ok &= expect(os, rep.iterations.size() == 1, tag + " iteration 0");
                for (int j = 0; j < n; ++j)
                    ok &= expect(os, rep.iterations[0].characters[j] == s, tag + " s_j = s");
                ok &= expect(os, rep.iterations[0].dim_prolongation == s * n * (n + 1) / 2,
                             tag + " dim A^(1)");
                ok &= expect(os,
                             rep.generality && rep.generality->s_p == s && rep.generality->p == n,
                             tag + " generality");
            }
        return ok;
    });

    criterion(3, "isometric embedding stage 1, (2,1) and (3,3): dims, character partial sums, not involutive",
              10.0, [](std::ostream& os) {
        bool ok = true;
        for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 3}}) {
            auto sys = catalog::build_isometric_embedding(n, r);
            auto ex = extract_tableau_torsion(sys, require_full_point(sys));
            std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
            ok &= expect(os, ex.tableau.dim() == n * r + n * (n - 1) / 2, tag + " dim A");
            auto ct = cartan_test(ex.tableau, 5, 7);
            ok &= expect(os, ct.dim_prolongation == r * n * (n + 1) / 2, tag + " dim A^(1)");
            ok &= expect(os, !ct.involutive, tag + " not involutive");
            int acc = 0;
            for (int k = 1; k <= n; ++k) {
                acc += ct.chars.s[k - 1];
                int expectsum = r * k;
                for (int j = 1; j <= k; ++j) expectsum += n - j;
                ok &= expect(os, acc == expectsum, tag + " character partial sum");
            }
        }
        return ok;
    });

    criterion(4, "generic-metric embedding count, (2,1) and (3,3): involutive after one prolongation, s_{n-1} = n",
              60.0, [](std::ostream& os) {
        bool ok = true;
        for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 3}}) {
            auto sys = catalog::build_isometric_embedding(n, r, catalog::CurvatureMode::generic_from_h);
            AnalyzeOptions opts;
            opts.seed = 20240601;
            auto rep = analyze(sys, opts);
            std::string tag = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
            ok &= expect(os, rep.status == Status::involutive, tag + " involutive");
            ok &= expect(os, rep.iterations.size() == 2, tag + " one prolongation");
            ok &= expect(os, rep.iterations[1].restricted, tag + " torsion restriction");
            ok &= expect(os,
                         rep.generality && rep.generality->p == n - 1 && rep.generality->s_p == n,
                         tag + " n functions of n-1 variables");
        }
        return ok;
    });

    criterion(5, "Example-2 trichotomy: (y,x) and (u,0) Frobenius-integrable, (y,0) no integral manifolds",
              5.0, [](std::ostream& os) {
        ScalarPoly x = ScalarPoly::variable(3, 0), y = ScalarPoly::variable(3, 1),
                   u = ScalarPoly::variable(3, 2), z(3);
        bool ok = true;
        auto r1 = analyze(catalog::build_frobenius_example(y, x), {});
        ok &= expect(os, r1.status == Status::involutive && r1.generality->frobenius_constants,
                     "(y,x) integrable");
        ok &= expect(os, frobenius_check(catalog::build_frobenius_example(y, x)), "(y,x) Frobenius");
        auto r2 = analyze(catalog::build_frobenius_example(u, z), {});
        ok &= expect(os, r2.status == Status::involutive && r2.generality->frobenius_constants,
                     "(u,0) integrable");
        auto r3 = analyze(catalog::build_frobenius_example(y, z), {});
        ok &= expect(os, r3.status == Status::no_integral_manifolds, "(y,0) no integral manifolds");
        return ok;
    });

    criterion(6, "property suites, >= 200 random cases each: exterior algebra, Cartan inequality, basis invariance",
              60.0, [](std::ostream& os) {
        bool ok = true;
        // graded anticommutativity + d^2 = 0 over a consistent rule set
        {
            auto sys = catalog::build_minimal_surface_system(1);
            auto decl = sys.coframe;
            Rng rng(2025);
            auto random_form = [&](int degree) {
                Form f(decl);
                for (int t = 0; t < 3; ++t) {
                    std::vector<std::uint32_t> idx;
                    for (int k = 0; k < degree; ++k)
                        idx.push_back(static_cast<std::uint32_t>(
                            rng.range(0, (long)decl->size() - 1)));
                    ScalarPoly c(decl->nscalars());
                    Exponents e(decl->nscalars(), 0);
                    e[(std::size_t)rng.range(0, (long)decl->nscalars() - 1)] =
                        (std::uint32_t)rng.range(0, 2);
                    c.add_term(e, Rational(rng.range(-3, 3)));
                    f.add_unsorted(idx, c);
                }
                return f;
            };
            for (int c2 = 0; c2 < 200; ++c2) {
                int p = (int)rng.range(0, 2), q = (int)rng.range(0, 2);
                Form a = random_form(p), b = random_form(q);
                Form ab = wedge(a, b), ba = wedge(b, a);
                bool anti = ((p * q) % 2 == 1) ? (ab == -ba) : (ab == ba);
                if (!anti) {
                    ok = expect(os, false, "graded anticommutativity");
                    break;
                }
                if (!ext_d(ext_d(a, sys.rules), sys.rules).is_zero()) {
                    ok = expect(os, false, "d^2 = 0");
                    break;
                }
            }
        }
        // Cartan inequality with an independent brute-force prolongation
        {
            Rng rng(4096);
            for (int c2 = 0; c2 < 200; ++c2) {
                Tableau A = oracles::random_tableau(rng);
                auto res = cartan_test(A, 4, rng.next());
                if (res.dim_prolongation > res.bound) {
                    ok = expect(os, false, "Cartan inequality");
                    break;
                }
                if (res.dim_prolongation != oracles::brute_force_prolongation_dim(A)) {
                    ok = expect(os, false, "prolongation vs brute force");
                    break;
                }
            }
        }
        // basis-change invariance
        {
            Rng rng(9001);
            for (int c2 = 0; c2 < 200; ++c2) {
                Tableau A = oracles::random_tableau(rng, 3, 3);
                auto base = cartan_test(A, 4, 555);
                Tableau B = A.change_basis(random_invertible(A.n, rng),
                                           random_invertible(A.s, rng));
                auto moved = cartan_test(B, 4, 555);
                if (base.dim_prolongation != moved.dim_prolongation ||
                    base.involutive != moved.involutive) {
                    ok = expect(os, false, "basis-change invariance");
                    break;
                }
            }
        }
        return ok;
    });

    criterion(7, "Weierstrass numerics: Enneper |H| < 1e-6, isothermal < 1e-12, sphere patch |H| ~ 1",
              10.0, [](std::ostream& os) {
        bool ok = true;
        auto one = holo::constant(rat(1));
        auto w = holo::variable();
        auto enneper = weier::classical_param(one, w, {0, 0});
        for (auto pt : std::vector<std::vector<double>>{{0.3, 0.1}, {-0.2, 0.4}, {0.5, -0.5}})
            ok &= expect(os, std::abs(weier::mean_curvature_graph(enneper, pt, 1e-4)) < 1e-6,
                         "Enneper |H| < 1e-6");
        Rng rng(5);
        for (int k = 0; k < 100; ++k) {
            weier::Complex z(rng.range(-100, 100) / 37.0, rng.range(-100, 100) / 41.0);
            auto phi = weier::classical_integrand(one, w, z);
            weier::Complex dot = phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2];
            double scale =
                std::max(1.0, std::norm(phi[0]) + std::norm(phi[1]) + std::norm(phi[2]));
            if (std::abs(dot) / scale >= 1e-12) {
                ok = expect(os, false, "isothermal identity");
                break;
            }
        }
        weier::ParamFn sphere = [](const std::vector<double>& uv) {
            return std::vector<double>{uv[0], uv[1],
                                       std::sqrt(1.0 - uv[0] * uv[0] - uv[1] * uv[1])};
        };
        ok &= expect(
            os, std::abs(std::abs(weier::mean_curvature_graph(sphere, {0.0, 0.0}, 1e-4)) - 1.0) < 1e-4,
            "sphere |H| within 1e-4 of 1");
        return ok;
    });

    criterion(8, "orbit threefold: cone homogeneity and section radius 1/12 for h = 0; h = z^2 minimal",
              10.0, [](std::ostream& os) {
        bool ok = true;
        auto zero = holo::constant(rat(0));
        Rng rng(17);
        for (int k = 0; k < 100; ++k) {
            double t = 0.5 + rng.range(0, 100) / 50.0;
            weier::Complex z(rng.range(-80, 80) / 41.0, rng.range(-80, 80) / 43.0);
            auto p = weier::so3_point(zero, t, z);
            auto q = weier::so3_point(zero, 1.75 * t, z);
            double s = 0;
            for (int c2 = 0; c2 < 5; ++c2) {
                if (std::abs(q[c2] - 1.75 * p[c2]) >= 1e-12) {
                    ok = expect(os, false, "cone homogeneity");
                    break;
                }
                s += p[c2] * p[c2];
            }
            if (std::abs(s / (t * t) - 1.0 / 12.0) >= 1e-12) {
                ok = expect(os, false, "section radius 1/12");
                break;
            }
            if (!ok) break;
        }
        auto h = holo::parse_holomorphic("z^2", "z");
        auto param = weier::so3_param(h);
        for (auto pt : std::vector<std::vector<double>>{
                 {1.0, 0.3, 0.1}, {1.5, -0.2, 0.4}, {2.0, 0.1, -0.3}})
            ok &= expect(os, weier::trace_II_norm(param, pt, 1e-4) < 1e-5,
                         "h = z^2 |trace_g II| < 1e-5");
        return ok;
    });

    criterion(9, "m-subset criterion: minimal-surface blocks pass, full tableau fails", 5.0,
              [](std::ostream& os) {
        bool ok = true;
        auto sys = catalog::build_minimal_surface_system(2);
        auto ex = extract_tableau_torsion(sys, require_full_point(sys));
        ok &= expect(os, msubset_check(ex.tableau), "minimal-surface blocks pass");
        std::vector<QMatrix> span;
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i) {
                QMatrix m(2, 2);
                m.at(a, i) = 1;
                span.push_back(m);
            }
        ok &= expect(os, !msubset_check(Tableau::from_span(2, 2, span)), "full tableau fails");
        return ok;
    });

    std::cout << "note  criterion 10: headline geometric theorems (calibration-face rigidity, "
                 "ruledness bounds) are out of scope by design; acceptance rests on criteria 1-9.\n";

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED\n" : "FAILURES PRESENT\n");
    return failures;
}
