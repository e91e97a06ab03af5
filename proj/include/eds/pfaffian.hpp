#pragma once

#include <optional>
#include <tuple>

#include "eds/reduce.hpp"
#include "eds/structure.hpp"
#include "eds/tableau.hpp"

namespace eds {

using PointAssignment = std::map<std::uint32_t, Rational>;

// Linear Pfaffian system (I, J) presented by an adapted coframe: the ideal
// generators are exactly the theta-block symbols, the independence condition
// is the wedge of the omega-block in coframe order, and d is driven by the
// declared structure rules. Symbols outside the theta/omega blocks are
// treated as pi directions (declared pi and completion alike).
struct PfaffianSystem {
    CoframePtr coframe;
    StructureRules rules;
    std::optional<PointAssignment> point;

    std::vector<std::uint32_t> thetas() const { return coframe->block_indices(Block::theta); }
    std::vector<std::uint32_t> omegas() const { return coframe->block_indices(Block::omega); }
    // Everything that is neither theta nor omega, in coframe order.
    std::vector<std::uint32_t> pi_directions() const;

    std::vector<Form> ideal_generators() const;
    Form independence() const;

    // Checks rule degrees (2 for symbols, 1 for scalars) and that every
    // coframe symbol has a rule. Throws on violation.
    void validate() const;
};

// Full point for a system: every scalar variable assigned. Throws
// MissingAssignmentError naming the first gap.
PointAssignment require_full_point(const PfaffianSystem& sys,
                                   const std::optional<PointAssignment>& override = std::nullopt);

struct LinearityReport {
    bool linear = true;
    // human-readable pi^pi offenders, e.g. "d theta1 contains pi1/\pi2"
    std::vector<std::string> offending;
};

// dtheta^a == 0 mod J for every a; false reports the pi^pi terms.
LinearityReport check_linear(const PfaffianSystem& sys);

// dtheta^a == 0 modulo the algebraic ideal of the thetas alone.
bool frobenius_check(const PfaffianSystem& sys);

// Tableau and torsion of a linear Pfaffian system at a point, under the
// convention  dtheta^a = A^a_{ei} pi^e ^ omega^i + T^a_{ij} omega^i ^ omega^j
// (i < j) mod I.
struct TableauExtract {
    int s = 0;  // #theta
    int n = 0;  // #omega
    int r = 0;  // #pi directions (declared + completion)
    std::vector<std::uint32_t> theta_idx, omega_idx, pi_idx;

    // A_sym[e](a,i): ScalarPoly coefficient of pi^e ^ omega^i in dtheta^a
    std::vector<std::vector<std::vector<ScalarPoly>>> A_sym;
    // T_sym[(a,i,j)] with i<j over omega positions
    std::map<std::tuple<int, int, int>, ScalarPoly> T_sym;

    PointAssignment point;
    std::vector<QMatrix> A_eval;  // per pi direction, s x n
    QVector T_eval;               // lex over (a, i<j)
    Tableau tableau;              // span of the evaluated matrices

    // reduced dtheta^a, kept for the reconstruction invariant
    std::vector<Form> dtheta_reduced;

    int torsion_slots() const { return s * n * (n - 1) / 2; }
    int torsion_slot(int a, int i, int j) const;  // lex position of (a, i<j)
};

TableauExtract extract_tableau_torsion(const PfaffianSystem& sys, const PointAssignment& point);

// Torsion class in H^{0,2} = W (x) Lambda^2 V* / delta(A (x) V*).
struct TorsionClass {
    bool zero_at_point = true;
    QVector representative;            // evaluated T over (a, i<j)
    std::vector<QVector> image_basis;  // basis of delta(A (x) V*)
    // cokernel functionals applied to the symbolic torsion, in lex (a, i<j)
    // functional order; the class vanishes identically iff all are zero
    std::vector<ScalarPoly> residuals;
    bool residuals_identically_zero = true;
};

TorsionClass torsion_class(const TableauExtract& ex);

struct CauchyCharacteristics {
    int dimension = 0;
    std::vector<QVector> basis;  // coframe-dual coordinates
};

// Vector fields contracting the whole differential ideal to zero at the
// point: theta(v) = 0 and v _| dtheta^a == 0 mod {theta}.
CauchyCharacteristics cauchy_characteristics(const PfaffianSystem& sys,
                                             const PointAssignment& point);

// dim A^(1) of the extracted tableau; requires zero torsion class at the
// point (NoIntegralElementError otherwise).
long integral_element_dim(const PfaffianSystem& sys, const PointAssignment& point);

}  // namespace eds
