#include <doctest.h>

#include "eds/catalog.hpp"
#include "eds/loop.hpp"

using namespace eds;
using namespace eds::catalog;

namespace {

ScalarPoly X() { return ScalarPoly::variable(3, 0); }
ScalarPoly Y() { return ScalarPoly::variable(3, 1); }
ScalarPoly U() { return ScalarPoly::variable(3, 2); }
ScalarPoly Z3() { return ScalarPoly(3); }

}  // namespace

TEST_CASE("check_linear: contact and Cauchy-Riemann are linear") {
    CHECK(check_linear(build_contact_j1(2, 2)).linear);
    CHECK(check_linear(build_cauchy_riemann()).linear);
}

TEST_CASE("check_linear flags pi^pi terms") {
    auto decl = make_coframe({"t", "w", "p1", "p2"},
                             {Block::theta, Block::omega, Block::pi, Block::pi}, {});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    sys.rules.set_dcoframe(0u, wedge(Form::symbol(decl, 2), Form::symbol(decl, 3)));
    for (std::uint32_t k = 1; k < 4; ++k) sys.rules.set_dcoframe(k, Form::zero(decl));
    auto rep = check_linear(sys);
    CHECK(!rep.linear);
    REQUIRE(rep.offending.size() == 1);
    CHECK(rep.offending[0] == "d t contains p1/\\p2");
}

TEST_CASE("frobenius_check trichotomy inputs") {
    CHECK(frobenius_check(build_frobenius_example(Y(), X())));
    CHECK(frobenius_check(build_frobenius_example(U(), Z3())));
    CHECK(!frobenius_check(build_frobenius_example(Y(), Z3())));
    // the system {du} alone
    CHECK(frobenius_check(build_frobenius_example(Z3(), Z3())));
}

TEST_CASE("extract: Cauchy-Riemann tableau matches the displayed matrix") {
    auto sys = build_cauchy_riemann();
    auto ex = extract_tableau_torsion(sys, {});
    REQUIRE(ex.r == 2);
    QMatrix m1(2, 2), m2(2, 2);
    m1.at(0, 0) = 1;
    m1.at(1, 1) = 1;
    m2.at(0, 1) = 1;
    m2.at(1, 0) = -1;
    CHECK(ex.A_eval[0] == m1);
    CHECK(ex.A_eval[1] == m2);
    for (const auto& t : ex.T_eval) CHECK(t == 0);
    CHECK(ex.tableau.dim() == 2);
}

TEST_CASE("extract: contact tableau is all of W (x) V*") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
        auto sys = build_contact_j1(n, s);
        auto ex = extract_tableau_torsion(sys, {});
        CHECK(ex.tableau.dim() == n * s);
        for (const auto& t : ex.T_eval) CHECK(t == 0);
    }
}

TEST_CASE("extract: pure-torsion example has empty tableau and T = dx^dy") {
    auto sys = build_frobenius_example(Y(), Z3());
    auto ex = extract_tableau_torsion(sys, *sys.point);
    CHECK(ex.tableau.dim() == 0);
    REQUIRE(ex.T_eval.size() == 1);
    CHECK(ex.T_eval[0] == 1);
    auto tc = torsion_class(ex);
    CHECK(!tc.zero_at_point);
    REQUIRE(tc.residuals.size() == 1);
    CHECK(tc.residuals[0] == ScalarPoly::constant(3, rat(1)));
}

TEST_CASE("torsion residual reproduces the compatibility polynomial") {
    // A = x*u, B = y: A_y + B A_u - B_x - A B_u = x*y
    auto sys = build_frobenius_example(X() * U(), Y());
    auto ex = extract_tableau_torsion(sys, *sys.point);
    auto tc = torsion_class(ex);
    REQUIRE(tc.residuals.size() == 1);
    CHECK(tc.residuals[0] == X() * Y());
}

TEST_CASE("torsion class: membership in the delta image") {
    auto sys = build_cauchy_riemann();
    auto ex = extract_tableau_torsion(sys, {});
    auto tc = torsion_class(ex);
    CHECK(tc.zero_at_point);
    CHECK(tc.residuals_identically_zero);
    // verdict is invariant under adding delta-image elements
    for (const auto& img : tc.image_basis) {
        TableauExtract shifted = ex;
        for (std::size_t k = 0; k < img.size(); ++k) shifted.T_eval[k] += img[k];
        CHECK(torsion_class(shifted).zero_at_point);
    }
}

TEST_CASE("reconstruction: catalog dthetas rebuild from (A, T) exactly") {
    std::vector<PfaffianSystem> systems;
    systems.push_back(build_cauchy_riemann());
    systems.push_back(build_contact_j1(2, 2));
    systems.push_back(build_frobenius_example(X() * U(), Y()));
    systems.push_back(build_minimal_surface_system(2));
    systems.push_back(build_submanifold_system(2, 1));
    for (const auto& sys : systems) {
        PointAssignment pt = require_full_point(sys);
        auto ex = extract_tableau_torsion(sys, pt);
        for (int a = 0; a < ex.s; ++a) {
            Form rebuilt(sys.coframe);
            for (int e = 0; e < ex.r; ++e)
                for (int i = 0; i < ex.n; ++i)
                    rebuilt = rebuilt +
                              wedge(Form::symbol(sys.coframe, ex.pi_idx[e]),
                                    Form::symbol(sys.coframe, ex.omega_idx[i])) *
                                  ex.A_sym[e][a][i];
            for (const auto& [key, c] : ex.T_sym) {
                auto [aa, i, j] = key;
                if (aa != a) continue;
                rebuilt = rebuilt + wedge(Form::symbol(sys.coframe, ex.omega_idx[i]),
                                          Form::symbol(sys.coframe, ex.omega_idx[j])) *
                                        c;
            }
            CHECK(rebuilt == ex.dtheta_reduced[a]);
        }
    }
}

TEST_CASE("cauchy characteristics: contact has none, {du} has two") {
    auto contact = build_contact_j1(2, 1);
    CHECK(cauchy_characteristics(contact, {}).dimension == 0);

    auto du_only = build_frobenius_example(ScalarPoly(3), ScalarPoly(3));
    auto cc = cauchy_characteristics(du_only, *du_only.point);
    CHECK(cc.dimension == 2);
}

TEST_CASE("cauchy characteristics of the minimal-surface system") {
    for (int s = 1; s <= 2; ++s) {
        auto sys = build_minimal_surface_system(s);
        PointAssignment pt = require_full_point(sys);
        auto cc = cauchy_characteristics(sys, pt);
        // rotation directions: one tangent rotation plus the normal rotations
        CHECK(cc.dimension == 1 + s * (s - 1) / 2);
        // basis vectors contract the ideal and its derivatives to zero
        IdealBasis ideal = row_reduce_generators(sys.ideal_generators());
        for (const auto& v : cc.basis) {
            std::vector<ScalarPoly> vp;
            for (std::size_t k = 0; k < v.size(); ++k)
                vp.push_back(ScalarPoly::constant(sys.coframe->nscalars(), v[k]));
            for (auto t : sys.thetas()) {
                Form g = Form::symbol(sys.coframe, t);
                CHECK(reduce_mod(interior_product(vp, g), ideal).is_zero());
                Form dg = ext_d(g, sys.rules);
                Form contracted = evaluate(interior_product(vp, dg), pt);
                CHECK(reduce_mod(contracted, ideal).is_zero());
            }
        }
    }
}

TEST_CASE("integral element dimensions") {
    CHECK(integral_element_dim(build_contact_j1(2, 1), {}) == 3);
    CHECK(integral_element_dim(build_contact_j1(3, 2), {}) == 12);
    CHECK(integral_element_dim(build_cauchy_riemann(), {}) == 2);
    auto frob = build_frobenius_example(Y(), X());
    CHECK(integral_element_dim(frob, *frob.point) == 0);
    auto bad = build_frobenius_example(Y(), Z3());
    CHECK_THROWS_AS(integral_element_dim(bad, *bad.point), NoIntegralElementError);
}

TEST_CASE("restriction of the contact system to u_x + u_y = 0") {
    // coframe for the hypersurface p1 + p2 = 0 in J^1(R^2, R): pi = dp1
    auto decl = make_coframe({"th", "dx1", "dx2", "pi"},
                             {Block::theta, Block::omega, Block::omega, Block::pi}, {});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    Form dx1 = Form::symbol(decl, 1), dx2 = Form::symbol(decl, 2), pi = Form::symbol(decl, 3);
    // d theta = -dp1 ^ dx1 - dp2 ^ dx2 with dp2 = -dp1
    sys.rules.set_dcoframe(0u, -wedge(pi, dx1) + wedge(pi, dx2));
    for (std::uint32_t k = 1; k < 4; ++k) sys.rules.set_dcoframe(k, Form::zero(decl));
    CHECK(integral_element_dim(sys, {}) == 1);
}

TEST_CASE("contact system restricted to a curved jet hypersurface") {
    // p1 = -p2^2 in J^1(R^2, R): d theta = 2 p2 dp2 ^ dx1 - dp2 ^ dx2, a
    // variable-coefficient tableau; the integral-element space stays
    // one-dimensional at every point
    auto decl = make_coframe({"th", "dx1", "dx2", "dp2"},
                             {Block::theta, Block::omega, Block::omega, Block::pi}, {"p2"});
    PfaffianSystem sys;
    sys.coframe = decl;
    sys.rules = StructureRules(decl);
    Form dx1 = Form::symbol(decl, 1), dx2 = Form::symbol(decl, 2), dp2 = Form::symbol(decl, 3);
    ScalarPoly p2 = ScalarPoly::variable(1, 0);
    sys.rules.set_dcoframe(0u, wedge(dp2, dx1) * (p2 * Rational(2)) - wedge(dp2, dx2));
    for (std::uint32_t k = 1; k < 4; ++k) sys.rules.set_dcoframe(k, Form::zero(decl));
    sys.rules.set_dscalar(0u, dp2);
    REQUIRE(mc_check(sys.rules).consistent());
    for (long v : {0L, 1L, -2L, 5L}) {
        PointAssignment pt = {{0, rat(v)}};
        CHECK(integral_element_dim(sys, pt) == 1);
        auto ex = extract_tableau_torsion(sys, pt);
        CHECK(ex.A_eval[0].at(0, 0) == rat(2 * v));
        CHECK(ex.A_eval[0].at(0, 1) == rat(-1));
    }
}
