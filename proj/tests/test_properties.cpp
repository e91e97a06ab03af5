#include <doctest.h>

#include "eds/catalog.hpp"
#include "eds/pfaffian.hpp"
#include "oracles.hpp"

using namespace eds;

namespace {

// Random form of the given degree with small polynomial coefficients.
Form random_form(Rng& rng, const CoframePtr& decl, int degree, int terms = 3) {
    Form f(decl);
    const int N = static_cast<int>(decl->size());
    const std::uint32_t nv = decl->nscalars();
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> idx;
        for (int k = 0; k < degree; ++k)
            idx.push_back(static_cast<std::uint32_t>(rng.range(0, N - 1)));
        ScalarPoly c(nv);
        Exponents e(nv, 0);
        if (nv > 0) e[static_cast<std::size_t>(rng.range(0, nv - 1))] =
            static_cast<std::uint32_t>(rng.range(0, 2));
        c.add_term(e, Rational(rng.range(-3, 3)));
        f.add_unsorted(idx, c);
    }
    return f;
}

// A few structurally different consistent rule sets to drive d^2 = 0 and
// Leibniz checks.
std::vector<std::pair<CoframePtr, StructureRules>> consistent_rule_sets() {
    std::vector<std::pair<CoframePtr, StructureRules>> out;
    {
        // flat coframe with wired scalars
        auto decl = make_coframe({"dx", "dy", "dz"},
                                 {Block::omega, Block::omega, Block::omega}, {"x", "y"});
        StructureRules rules(decl);
        for (std::uint32_t i = 0; i < 3; ++i) rules.set_dcoframe(i, Form::zero(decl));
        rules.set_dscalar(0u, Form::symbol(decl, 0));
        rules.set_dscalar(1u, Form::symbol(decl, 1));
        out.emplace_back(decl, rules);
    }
    {
        // Heisenberg-type: d c = a ^ b
        auto decl = make_coframe({"a", "b", "c"},
                                 {Block::omega, Block::omega, Block::other}, {});
        StructureRules rules(decl);
        rules.set_dcoframe(0u, Form::zero(decl));
        rules.set_dcoframe(1u, Form::zero(decl));
        rules.set_dcoframe(2u, wedge(Form::symbol(decl, 0), Form::symbol(decl, 1)));
        out.emplace_back(decl, rules);
    }
    {
        auto sys = catalog::build_contact_j1(2, 1);
        out.emplace_back(sys.coframe, sys.rules);
    }
    {
        auto sys = catalog::build_minimal_surface_system(1);
        out.emplace_back(sys.coframe, sys.rules);
    }
    return out;
}

}  // namespace

TEST_CASE("graded anticommutativity and associativity, 300+ random cases") {
    Rng rng(2024);
    auto sets = consistent_rule_sets();
    int cases = 0;
    while (cases < 300) {
        for (const auto& [decl, rules] : sets) {
            int p = static_cast<int>(rng.range(0, 2));
            int q = static_cast<int>(rng.range(0, 2));
            Form a = random_form(rng, decl, p);
            Form b = random_form(rng, decl, q);
            Form ab = wedge(a, b);
            Form ba = wedge(b, a);
            if ((p * q) % 2 == 1)
                CHECK(ab == -ba);
            else
                CHECK(ab == ba);
            Form c = random_form(rng, decl, static_cast<int>(rng.range(0, 1)));
            CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
            ++cases;
        }
    }
}

TEST_CASE("d^2 = 0 and Leibniz on consistent rules, 300+ random cases") {
    Rng rng(777);
    auto sets = consistent_rule_sets();
    for (const auto& [decl, rules] : sets) REQUIRE(mc_check(rules).consistent());
    int cases = 0;
    while (cases < 300) {
        for (const auto& [decl, rules] : sets) {
            int p = static_cast<int>(rng.range(0, 2));
            Form a = random_form(rng, decl, p);
            CHECK(ext_d(ext_d(a, rules), rules).is_zero());
            Form b = random_form(rng, decl, static_cast<int>(rng.range(0, 1)));
            // d(a^b) = da^b + (-1)^p a^db, with a homogeneous of degree p
            Form lhs = ext_d(wedge(a, b), rules);
            Form rhs = wedge(ext_d(a, rules), b) + wedge(a, ext_d(b, rules)) * Rational(p % 2 ? -1 : 1);
            CHECK(lhs == rhs);
            ++cases;
        }
    }
}

TEST_CASE("interior product antiderivation, 200+ random cases") {
    Rng rng(31337);
    auto decl = make_coframe({"e1", "e2", "e3", "e4"},
                             {Block::omega, Block::omega, Block::pi, Block::pi}, {"t"});
    for (int c = 0; c < 200; ++c) {
        int p = static_cast<int>(rng.range(0, 2));
        Form a = random_form(rng, decl, p);
        Form b = random_form(rng, decl, static_cast<int>(rng.range(0, 2)));
        std::vector<ScalarPoly> v;
        for (int k = 0; k < 4; ++k) v.push_back(ScalarPoly::constant(1, Rational(rng.range(-2, 2))));
        Form lhs = interior_product(v, wedge(a, b));
        Form rhs = wedge(interior_product(v, a), b) +
                   wedge(a, interior_product(v, b)) * Rational(p % 2 ? -1 : 1);
        CHECK(lhs == rhs);
    }
    // degree drop and degree-0 behavior
    Form s = Form::scalar(decl, ScalarPoly::variable(1, 0));
    std::vector<Rational> v = {rat(1), rat(0), rat(0), rat(0)};
    CHECK(interior_product(v, s).is_zero());
}

TEST_CASE("Cartan inequality and independent prolongation oracle, 200 random tableaux") {
    Rng rng(4096);
    for (int c = 0; c < 200; ++c) {
        Tableau A = oracles::random_tableau(rng);
        auto res = cartan_test(A, 4, rng.next());
        CHECK(res.dim_prolongation <= res.bound);
        CHECK(res.dim_prolongation == oracles::brute_force_prolongation_dim(A));
        // character sums equal dim A
        int total = 0;
        for (int sj : res.chars.s) total += sj;
        CHECK(total == A.dim());
    }
}

TEST_CASE("basis-change invariance of prolongation dimension and verdict, 200 cases") {
    Rng rng(9001);
    for (int c = 0; c < 200; ++c) {
        Tableau A = oracles::random_tableau(rng, 3, 3);
        auto base = cartan_test(A, 4, 555);
        QMatrix g = random_invertible(A.n, rng);
        QMatrix h = random_invertible(A.s, rng);
        Tableau B = A.change_basis(g, h);
        auto moved = cartan_test(B, 4, 555);
        CHECK(base.dim_prolongation == moved.dim_prolongation);
        CHECK(base.dim_tableau == moved.dim_tableau);
        CHECK(base.involutive == moved.involutive);
    }
}

TEST_CASE("full tableau prolongation dimension, n <= 5, s <= 4") {
    for (int n = 1; n <= 5; ++n)
        for (int s = 1; s <= 4; ++s) {
            std::vector<QMatrix> span;
            for (int a = 0; a < s; ++a)
                for (int i = 0; i < n; ++i) {
                    QMatrix m(s, n);
                    m.at(a, i) = 1;
                    span.push_back(m);
                }
            Tableau A = Tableau::from_span(n, s, span);
            CHECK(prolong(A).dim() == s * n * (n + 1) / 2);
            CHECK(oracles::brute_force_prolongation_dim(A) == s * n * (n + 1) / 2);
        }
}

TEST_CASE("torsion verdict invariant under delta-image shifts, random systems") {
    Rng rng(616);
    for (int c = 0; c < 60; ++c) {
        // random small linear Pfaffian system data: tableau + torsion slots
        int n = 2, s = static_cast<int>(rng.range(1, 3));
        Tableau A = oracles::random_tableau(rng, n, s);
        while (A.n != n) A = oracles::random_tableau(rng, n, s);
        TableauExtract ex;
        ex.s = A.s;
        ex.n = A.n;
        ex.r = A.dim();
        ex.A_eval = A.basis;
        ex.tableau = A;
        ex.T_eval.assign(ex.torsion_slots(), Rational(0));
        for (auto& t : ex.T_eval) t = Rational(rng.range(-2, 2));
        auto base = torsion_class(ex);
        for (int k = 0; k < 3 && !base.image_basis.empty(); ++k) {
            TableauExtract shifted = ex;
            for (std::size_t m = 0; m < base.image_basis.size(); ++m) {
                Rational cmul(rng.range(-2, 2));
                for (std::size_t q2 = 0; q2 < shifted.T_eval.size(); ++q2)
                    shifted.T_eval[q2] += cmul * base.image_basis[m][q2];
            }
            CHECK(torsion_class(shifted).zero_at_point == base.zero_at_point);
        }
    }
}
