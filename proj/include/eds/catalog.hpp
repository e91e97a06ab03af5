#pragma once

#include <string>

#include "eds/pfaffian.hpp"

namespace eds::catalog {

// du - A dx - B dy with independence dx ^ dy; A, B polynomials in the
// scalar variables (x, y, u) (arity 3, in that order).
PfaffianSystem build_frobenius_example(const ScalarPoly& A, const ScalarPoly& B);

// Canonical contact system on the space of one-jets of maps R^n -> R^s:
// theta^a = du^a - p^a_i dx^i, d theta^a = -dp^a_i ^ dx^i.
PfaffianSystem build_contact_j1(int n, int s);

// Restriction of the contact system on J^1(R^2, R^2) to the locus of the
// Cauchy-Riemann equations; tableau [[p1, p2], [-p2, p1]].
PfaffianSystem build_cauchy_riemann();

// Frame-bundle system for n-dimensional submanifolds of E^{n+s} with the
// second-fundamental-form coefficients h^a_{ij} as fiber variables.
PfaffianSystem build_submanifold_system(int n, int s);

// The minimal-surface restriction (n = 2, trace h = 0); per-normal tableau
// blocks [[p1, p2], [p2, -p1]].
PfaffianSystem build_minimal_surface_system(int s);

enum class CurvatureMode { flat, generic_from_h };

// Stage-1 isometric-embedding system on the product of the two frame
// bundles, ideal {omega^mu, omega^j - eta^j}. In generic_from_h mode the
// curvature components are carried as scalar variables (rotation-covariant
// d-rules derived at build time); their point values are meant to be fixed
// by the Gauss equations once second-order data exists.
PfaffianSystem build_isometric_embedding(int n, int r,
                                         CurvatureMode mode = CurvatureMode::generic_from_h);

// Zero assignment for every scalar variable of the system.
PointAssignment zero_point(const PfaffianSystem& sys);

// CLI-facing registry: builds a catalog entry from its name and numeric /
// expression parameters. Throws Error on unknown names or bad parameters.
struct CatalogRequest {
    std::string name;             // frobenius | contact | cauchy-riemann |
                                  // submanifold | minimal-surface | isometric-embedding
    std::vector<long> params;     // numeric parameters in declared order
    std::string expr_a, expr_b;   // frobenius A and B expressions
    std::string curvature = "generic";  // isometric-embedding: flat | generic
};
PfaffianSystem build_from_request(const CatalogRequest& req);

}  // namespace eds::catalog
