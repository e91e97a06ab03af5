#include "eds/weier.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

namespace eds::weier {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                              -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                              0.7966664774136267,  0.9602898564975363};
constexpr double kWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

std::array<Complex, 3> classical_integrand(const HoloPtr& f, const HoloPtr& g, Complex w) {
    Complex fv = holo::eval(f, w), gv = holo::eval(g, w);
    Complex g2 = gv * gv;
    return {0.5 * fv * (1.0 - g2), Complex(0, 0.5) * fv * (1.0 + g2), fv * gv};
}

std::array<Complex, 3> integrate_segment(const HoloPtr& f, const HoloPtr& g, Complex a, Complex b,
                                         const QuadratureOptions& q) {
    auto run = [&](int segments) {
        std::array<Complex, 3> acc = {Complex(0), Complex(0), Complex(0)};
        Complex d = (b - a) / static_cast<double>(segments);
        for (int s = 0; s < segments; ++s) {
            Complex lo = a + d * static_cast<double>(s);
            for (int k = 0; k < 8; ++k) {
                Complex w = lo + d * (0.5 * (kNodes[k] + 1.0));
                auto phi = classical_integrand(f, g, w);
                for (int c = 0; c < 3; ++c) {
                    if (!finite(phi[c]) || std::abs(phi[c]) > 1e12)
                        throw SingularIntegrandError(
                            "integrand singular along the integration path (pole of g without "
                            "matching zero of f?)");
                    acc[c] += phi[c] * (0.5 * kWeights[k]) * d;
                }
            }
        }
        return acc;
    };
    int segments = q.initial_segments;
    std::array<Complex, 3> prev = run(segments);
    double delta = 0;
    while (segments < q.max_segments) {
        segments *= 2;
        std::array<Complex, 3> next = run(segments);
        delta = 0;
        double scale = 1;
        for (int c = 0; c < 3; ++c) {
            delta = std::max(delta, std::abs(next[c] - prev[c]));
            scale = std::max(scale, std::abs(next[c]));
        }
        prev = next;
        if (delta < q.tol * scale) return prev;
    }
    if (delta > 1e6 * q.tol)
        throw SingularIntegrandError(
            "path integral did not converge under refinement; the integrand is singular on "
            "the path (pole of g without matching zero of f?)");
    return prev;
}

std::array<double, 3> classical_point(const HoloPtr& f, const HoloPtr& g, Complex w0, Complex w,
                                      const QuadratureOptions& q) {
    auto I = integrate_segment(f, g, w0, w, q);
    return {I[0].real(), I[1].real(), I[2].real()};
}

ParamMesh classical_weierstrass(const HoloPtr& f, const HoloPtr& g, Complex w0,
                                const GridSpec& grid, const QuadratureOptions& q) {
    if (grid.nre < 1 || grid.nim < 1) throw EmptyGridError("empty parameter grid");
    ParamMesh mesh;
    mesh.ambient = 3;
    mesh.shape = {grid.nre, grid.nim};
    mesh.param_names = {"re_w", "im_w"};
    for (int i = 0; i < grid.nre; ++i) {
        double u = grid.nre == 1 ? grid.re0
                                 : grid.re0 + (grid.re1 - grid.re0) * i / double(grid.nre - 1);
        for (int j = 0; j < grid.nim; ++j) {
            double v = grid.nim == 1 ? grid.im0
                                     : grid.im0 + (grid.im1 - grid.im0) * j / double(grid.nim - 1);
            auto p = classical_point(f, g, w0, Complex(u, v), q);
            mesh.params.push_back({u, v});
            mesh.points.push_back({p[0], p[1], p[2]});
        }
    }
    return mesh;
}

std::array<double, 5> so3_point(const HoloPtr& h, double t, Complex z) {
    const double s3 = std::sqrt(3.0);
    Complex w = holo::eval(h, z);
    Complex y = holo::eval(holo::derivative(h), z);
    Complex zb = std::conj(z);
    double r = std::norm(z);  // |z|^2
    double D1 = (1 + r) * (1 + r);
    double D3 = D1 * (1 + r);
    double D4 = D3 * (1 + r);

    double x0 = (1 - 4 * r + r * r) / (2 * s3 * D1) * t +
                2 * (-2 + 2 * r + r * r) / (s3 * D4) * (zb * zb * w).real() -
                (-5 + 2 * r + r * r) / (2 * s3 * D3) * (zb * y).real();
    Complex x12 = z * (1 - r) / D1 * t - 2.0 * zb * r * (2 + r) / D4 * w -
                  2.0 * z * z * z / D4 * std::conj(w) -
                  (1 - 2 * r - r * r) / (2 * D3) * y + z * z / D3 * std::conj(y);
    Complex x34 = z * z / D1 * t + (1 + 4 * r + 2 * r * r) / D4 * w -
                  z * z * z * z / D4 * std::conj(w) - z * (r + 2) / (2 * D3) * y +
                  z * z * z / (2 * D3) * std::conj(y);
    return {x0, x12.real(), x12.imag(), x34.real(), x34.imag()};
}

ParamMesh so3_orbit_threefold(const HoloPtr& h, const TGrid& tg, const GridSpec& zg) {
    if (tg.nt < 1 || zg.nre < 1 || zg.nim < 1) throw EmptyGridError("empty parameter grid");
    ParamMesh mesh;
    mesh.ambient = 5;
    mesh.shape = {tg.nt, zg.nre, zg.nim};
    mesh.param_names = {"t", "re_z", "im_z"};
    for (int k = 0; k < tg.nt; ++k) {
        double t = tg.nt == 1 ? tg.t0 : tg.t0 + (tg.t1 - tg.t0) * k / double(tg.nt - 1);
        for (int i = 0; i < zg.nre; ++i) {
            double u = zg.nre == 1 ? zg.re0 : zg.re0 + (zg.re1 - zg.re0) * i / double(zg.nre - 1);
            for (int j = 0; j < zg.nim; ++j) {
                double v =
                    zg.nim == 1 ? zg.im0 : zg.im0 + (zg.im1 - zg.im0) * j / double(zg.nim - 1);
                auto p = so3_point(h, t, Complex(u, v));
                mesh.params.push_back({t, u, v});
                mesh.points.push_back({p[0], p[1], p[2], p[3], p[4]});
            }
        }
    }
    return mesh;
}

namespace {

std::vector<double> vsub(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double mean_curvature_graph(const ParamFn& p, const std::vector<double>& at, double step) {
    if (at.size() != 2) throw Error("mean_curvature_graph expects a 2-parameter patch");
    std::vector<double> P0 = p(at);
    if (P0.size() != 3) throw Error("mean_curvature_graph expects an R^3 patch");

    auto shifted = [&](double du, double dv) {
        std::vector<double> q = at;
        q[0] += du;
        q[1] += dv;
        return p(q);
    };
    double h0 = step;
    std::vector<double> t1 = vsub(shifted(h0, 0), shifted(-h0, 0));
    std::vector<double> t2 = vsub(shifted(0, h0), shifted(0, -h0));
    for (auto& x : t1) x /= 2 * h0;
    for (auto& x : t2) x /= 2 * h0;
    // orthonormal tangent frame and unit normal
    double n1 = std::sqrt(vdot(t1, t1));
    if (n1 < 1e-14) throw DegenerateMetricError("degenerate tangent at the evaluation point");
    for (auto& x : t1) x /= n1;
    double c = vdot(t2, t1);
    for (std::size_t i = 0; i < 3; ++i) t2[i] -= c * t1[i];
    double n2 = std::sqrt(vdot(t2, t2));
    if (n2 < 1e-14) throw DegenerateMetricError("degenerate tangent at the evaluation point");
    for (auto& x : t2) x /= n2;
    std::vector<double> nrm = {t1[1] * t2[2] - t1[2] * t2[1], t1[2] * t2[0] - t1[0] * t2[2],
                               t1[0] * t2[1] - t1[1] * t2[0]};

    // Newton projection: find (u,v) whose tangent-plane coordinates are (a,b)
    auto graph_height = [&](double a, double b) {
        std::vector<double> q = at;
        for (int it = 0; it < 40; ++it) {
            std::vector<double> d = vsub(p(q), P0);
            double f1 = vdot(d, t1) - a, f2 = vdot(d, t2) - b;
            if (std::abs(f1) < 1e-14 && std::abs(f2) < 1e-14) break;
            double hj = step;
            std::vector<double> qu = q, qv = q;
            qu[0] += hj;
            qv[1] += hj;
            std::vector<double> du = vsub(p(qu), p(q)), dv = vsub(p(qv), p(q));
            double j11 = vdot(du, t1) / hj, j12 = vdot(dv, t1) / hj;
            double j21 = vdot(du, t2) / hj, j22 = vdot(dv, t2) / hj;
            double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-14) throw DegenerateMetricError("singular graph projection");
            q[0] -= (j22 * f1 - j12 * f2) / det;
            q[1] -= (-j21 * f1 + j11 * f2) / det;
        }
        return vdot(vsub(p(q), P0), nrm);
    };

    double h = step;
    double zxx = (graph_height(h, 0) - 2 * graph_height(0, 0) + graph_height(-h, 0)) / (h * h);
    double zyy = (graph_height(0, h) - 2 * graph_height(0, 0) + graph_height(0, -h)) / (h * h);
    double zxy = (graph_height(h, h) - graph_height(h, -h) - graph_height(-h, h) +
                  graph_height(-h, -h)) /
                 (4 * h * h);
    double zx = (graph_height(h, 0) - graph_height(-h, 0)) / (2 * h);
    double zy = (graph_height(0, h) - graph_height(0, -h)) / (2 * h);
    double denom = std::pow(1 + zx * zx + zy * zy, 1.5);
    return 0.5 * ((1 + zy * zy) * zxx - 2 * zx * zy * zxy + (1 + zx * zx) * zyy) / denom;
}

double trace_II_norm(const ParamFn& p, const std::vector<double>& at, double step) {
    const int k = static_cast<int>(at.size());
    std::vector<double> P0 = p(at);
    const int N = static_cast<int>(P0.size());

    auto shifted = [&](int i, double d, int j = -1, double e = 0) {
        std::vector<double> q = at;
        q[i] += d;
        if (j >= 0) q[j] += e;
        return p(q);
    };
    // first derivatives
    std::vector<std::vector<double>> D(k);
    for (int i = 0; i < k; ++i) {
        D[i] = vsub(shifted(i, step), shifted(i, -step));
        for (auto& x : D[i]) x /= 2 * step;
    }
    // metric and its inverse (small k: direct Gauss)
    std::vector<std::vector<double>> g(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g[i][j] = vdot(D[i], D[j]);
    // invert g
    std::vector<std::vector<double>> gi(k, std::vector<double>(k, 0));
    {
        std::vector<std::vector<double>> a = g;
        for (int i = 0; i < k; ++i) gi[i][i] = 1;
        for (int c = 0; c < k; ++c) {
            int piv = c;
            for (int r2 = c + 1; r2 < k; ++r2)
                if (std::abs(a[r2][c]) > std::abs(a[piv][c])) piv = r2;
            if (std::abs(a[piv][c]) < 1e-13)
                throw DegenerateMetricError("degenerate induced metric at the evaluation point");
            std::swap(a[c], a[piv]);
            std::swap(gi[c], gi[piv]);
            double d = a[c][c];
            for (int j = 0; j < k; ++j) {
                a[c][j] /= d;
                gi[c][j] /= d;
            }
            for (int r2 = 0; r2 < k; ++r2) {
                if (r2 == c) continue;
                double f = a[r2][c];
                for (int j = 0; j < k; ++j) {
                    a[r2][j] -= f * a[c][j];
                    gi[r2][j] -= f * gi[c][j];
                }
            }
        }
    }
    // second derivatives
    auto second = [&](int i, int j) {
        std::vector<double> r(N);
        if (i == j) {
            auto a = shifted(i, step), b = shifted(i, -step);
            for (int c = 0; c < N; ++c) r[c] = (a[c] - 2 * P0[c] + b[c]) / (step * step);
        } else {
            auto pp = shifted(i, step, j, step), pm = shifted(i, step, j, -step);
            auto mp = shifted(i, -step, j, step), mm = shifted(i, -step, j, -step);
            for (int c = 0; c < N; ++c)
                r[c] = (pp[c] - pm[c] - mp[c] + mm[c]) / (4 * step * step);
        }
        return r;
    };
    // trace_g of the normal part of the second derivatives
    std::vector<double> tr(N, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (gi[i][j] == 0) continue;
            std::vector<double> dij = second(i, j);
            // project out the tangent component: solve g x = (D . dij)
            std::vector<double> rhs(k);
            for (int m = 0; m < k; ++m) rhs[m] = vdot(D[m], dij);
            std::vector<double> x(k, 0.0);
            for (int m = 0; m < k; ++m)
                for (int l = 0; l < k; ++l) x[m] += gi[m][l] * rhs[l];
            for (int c = 0; c < N; ++c) {
                double tang = 0;
                for (int m = 0; m < k; ++m) tang += x[m] * D[m][c];
                tr[c] += gi[i][j] * (dij[c] - tang);
            }
        }
    return std::sqrt(vdot(tr, tr));
}

ParamFn classical_param(const HoloPtr& f, const HoloPtr& g, Complex w0,
                        const QuadratureOptions& q) {
    return [f, g, w0, q](const std::vector<double>& uv) {
        auto p = classical_point(f, g, w0, Complex(uv[0], uv[1]), q);
        return std::vector<double>{p[0], p[1], p[2]};
    };
}

ParamFn so3_param(const HoloPtr& h) {
    return [h](const std::vector<double>& tz) {
        auto p = so3_point(h, tz[0], Complex(tz[1], tz[2]));
        return std::vector<double>(p.begin(), p.end());
    };
}

void export_obj(const ParamMesh& mesh, const std::string& path) {
    if (mesh.ambient != 3)
        throw UnsupportedFormatError("OBJ export requires a 3D mesh; use CSV");
    if (mesh.points.empty()) throw EmptyGridError("empty mesh");
    if (mesh.shape.size() != 2) throw UnsupportedFormatError("OBJ export expects a 2D grid");
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << std::setprecision(17);
    for (const auto& p : mesh.points) os << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
    const int nu = mesh.shape[0], nv = mesh.shape[1];
    for (int i = 0; i + 1 < nu; ++i)
        for (int j = 0; j + 1 < nv; ++j) {
            int a = i * nv + j + 1;  // OBJ indices are 1-based
            int b = (i + 1) * nv + j + 1;
            os << "f " << a << " " << b << " " << b + 1 << " " << a + 1 << "\n";
        }
}

void export_csv(const ParamMesh& mesh, const std::string& path) {
    if (mesh.points.empty()) throw EmptyGridError("empty mesh");
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << std::setprecision(17);
    for (std::size_t k = 0; k < mesh.param_names.size(); ++k) {
        if (k) os << ",";
        os << mesh.param_names[k];
    }
    for (int c = 0; c < mesh.ambient; ++c) os << ",x" << c;
    os << "\n";
    for (std::size_t r = 0; r < mesh.points.size(); ++r) {
        for (std::size_t k = 0; k < mesh.params[r].size(); ++k) {
            if (k) os << ",";
            os << mesh.params[r][k];
        }
        for (int c = 0; c < mesh.ambient; ++c) os << "," << mesh.points[r][c];
        os << "\n";
    }
}

}  // namespace eds::weier
