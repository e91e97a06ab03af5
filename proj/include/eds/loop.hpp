#pragma once

#include <optional>
#include <string>

#include "eds/pfaffian.hpp"

namespace eds {

// ---- prolongation of a linear Pfaffian system ----

// New system on the enlarged space: one scalar variable per A^(1)
// coordinate, new ideal forms A^a_{ei} pi^e - p^a_{ij}(c) omega^j re-coframed
// as fresh theta symbols, leading pi symbols eliminated by exact
// substitution. Requires zero torsion at the point and constant tableau
// coefficients (every catalog system satisfies both at the prolongation
// step).
struct ProlongedSystem {
    PfaffianSystem system;
    std::vector<std::string> new_scalars;     // fiber coordinates over A^(1)
    std::vector<std::string> new_thetas;      // adapted ideal symbols
    int prolongation_dim = 0;
};

ProlongedSystem prolong_system(const PfaffianSystem& sys, const TableauExtract& ex,
                               const std::string& var_prefix = "q");

// ---- torsion restriction ----

// Differentiates each residual, reduces mod the ideal, and turns the
// resulting 1-forms at the point into linear relations on the pi
// directions. The homogeneous parts cut the pi space; the omega parts feed
// the adjusted torsion.
struct Restriction {
    bool independence_survives = true;
    // relation covectors over (pi | omega) split
    std::vector<QVector> relations_pi;
    std::vector<QVector> relations_omega;
    std::vector<QVector> pi_kernel;  // surviving pi-coefficient space
    Tableau cut_tableau;
    QVector adjusted_torsion;        // lex (a, i<j) slots
    bool adjusted_torsion_zero = true;
};

Restriction restrict_by_torsion(const PfaffianSystem& sys, const TableauExtract& ex,
                                const std::vector<ScalarPoly>& residuals,
                                const PointAssignment& point);

// ---- forced-vanishing report ----

// Rows of the tableau whose prolongation freedom is empty even though the
// row carries pi entries: the corresponding combinations join the ideal
// with no correction term (the Cartan-lemma symmetric coefficients vanish
// identically against the skew structure).
struct VanishingReport {
    std::vector<int> forced_rows;              // theta row indices
    std::vector<std::string> descriptions;
};

VanishingReport vanishing_coefficient_lemma(const PfaffianSystem& sys, const TableauExtract& ex);

// ---- the flowchart driver ----

enum class Status { involutive, no_integral_manifolds, cap_reached };

struct Generality {
    int s_p = 0;
    int p = 0;
    bool frobenius_constants = false;  // all characters vanish

    std::string phrase() const;
};

struct IterationRecord {
    int iteration = 0;
    int dim_tableau = 0;
    std::vector<int> characters;
    long cartan_bound = 0;
    long dim_prolongation = 0;
    std::vector<std::string> torsion_residuals;  // nonzero symbolic residuals
    bool torsion_zero_at_point = true;
    bool restricted = false;
    bool involutive = false;
};

struct AnalysisReport {
    std::vector<IterationRecord> iterations;
    Status status = Status::cap_reached;
    std::optional<Generality> generality;
    std::uint64_t seed = 0;
    PointAssignment point_used;
    std::vector<std::string> scalar_names;
    std::vector<std::string> notes;
};

struct AnalyzeOptions {
    int max_prolongations = 3;
    std::uint64_t seed = 1;
    int flag_trials = 5;
    std::optional<PointAssignment> point;  // defaults to the system's point
    std::string new_var_prefix = "q";
};

// Linearity check, torsion class, restriction, Cartan test, prolongation,
// iterated to max_prolongations. Deterministic given (system, point, seed).
AnalysisReport analyze(const PfaffianSystem& sys, const AnalyzeOptions& opts = {});

// Versioned JSON document for an AnalysisReport; byte-identical across runs
// with identical inputs and seed. Rationals are rendered as "p/q" strings.
std::string report_to_json(const AnalysisReport& rep);

std::string status_name(Status st);

}  // namespace eds
