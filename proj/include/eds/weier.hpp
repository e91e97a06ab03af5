#pragma once

#include <array>
#include <functional>
#include <vector>

#include "eds/holo.hpp"

namespace eds::weier {

using holo::HoloPtr;
using Complex = std::complex<double>;

// Rectangular grid in a complex parameter.
struct GridSpec {
    double re0 = -1, re1 = 1;
    int nre = 10;
    double im0 = -1, im1 = 1;
    int nim = 10;
};

struct TGrid {
    double t0 = 1, t1 = 2;
    int nt = 4;
};

// Point array over a rectangular parameter grid; ambient dimension 3
// (classical) or 5 (orbit threefold).
struct ParamMesh {
    int ambient = 3;
    std::vector<int> shape;                    // grid extents, row-major order
    std::vector<std::string> param_names;
    std::vector<std::vector<double>> params;   // per point
    std::vector<std::vector<double>> points;   // per point, ambient coords

    std::size_t size() const { return points.size(); }
};

struct QuadratureOptions {
    int initial_segments = 8;
    int max_segments = 4096;
    double tol = 1e-12;
};

// Weierstrass integrand Phi = (f(1-g^2)/2, i f(1+g^2)/2, f g).
std::array<Complex, 3> classical_integrand(const HoloPtr& f, const HoloPtr& g, Complex w);

// Path integral of Phi along the straight segment from a to b, composite
// Gauss-Legendre, refined until the change drops below tol.
std::array<Complex, 3> integrate_segment(const HoloPtr& f, const HoloPtr& g, Complex a, Complex b,
                                         const QuadratureOptions& q);

// Coordinates x, y, z at w: real parts of the path integrals from w0.
std::array<double, 3> classical_point(const HoloPtr& f, const HoloPtr& g, Complex w0, Complex w,
                                      const QuadratureOptions& q);

ParamMesh classical_weierstrass(const HoloPtr& f, const HoloPtr& g, Complex w0,
                                const GridSpec& grid, const QuadratureOptions& q = {});

// The orbit-threefold representation: direct evaluation of the closed-form
// coordinate expressions at (t, z), with w = h(z) and y = h'(z).
std::array<double, 5> so3_point(const HoloPtr& h, double t, Complex z);

ParamMesh so3_orbit_threefold(const HoloPtr& h, const TGrid& tg, const GridSpec& zg);

// ---- finite-difference curvature verification ----

using ParamFn = std::function<std::vector<double>(const std::vector<double>&)>;

// Mean curvature of a surface patch R^2 -> R^3 via the graph formula: fit
// the local graph over the tangent plane at the point (Newton projection),
// finite-difference the height, and evaluate
//   H = [(1+z_y^2) z_xx - 2 z_x z_y z_xy + (1+z_x^2) z_yy] / 2 (1+z_x^2+z_y^2)^{3/2}.
double mean_curvature_graph(const ParamFn& p, const std::vector<double>& at, double step);

// |trace_g II| for a patch R^k -> R^N: second-order central differences,
// tangential part projected out, traced against the inverse first
// fundamental form. Works in any codimension.
double trace_II_norm(const ParamFn& p, const std::vector<double>& at, double step);

ParamFn classical_param(const HoloPtr& f, const HoloPtr& g, Complex w0,
                        const QuadratureOptions& q = {});
ParamFn so3_param(const HoloPtr& h);

// ---- mesh export ----

// OBJ: vertices plus quad faces over the last two grid dimensions; 3D only.
void export_obj(const ParamMesh& mesh, const std::string& path);
// CSV: header "param...,x0..." then one row per grid point, full precision.
void export_csv(const ParamMesh& mesh, const std::string& path);

}  // namespace eds::weier
