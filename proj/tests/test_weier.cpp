#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "eds/weier.hpp"

using namespace eds;
using namespace eds::weier;

namespace {

HoloPtr one() { return holo::constant(rat(1)); }
HoloPtr zero() { return holo::constant(rat(0)); }
HoloPtr w() { return holo::variable(); }

}  // namespace

TEST_CASE("isothermal identity: Phi . Phi = 0 at random points") {
    auto f = holo::parse_holomorphic("1 + w^3", "w");
    auto g = holo::parse_holomorphic("w^2 - 2", "w");
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        Complex z(rng.range(-100, 100) / 37.0, rng.range(-100, 100) / 41.0);
        auto phi = classical_integrand(f, g, z);
        Complex dot = phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2];
        double scale = std::max(1.0, std::norm(phi[0]) + std::norm(phi[1]) + std::norm(phi[2]));
        CHECK(std::abs(dot) / scale < 1e-12);
    }
}

TEST_CASE("plane: f = 1, g = 0") {
    auto mesh = classical_weierstrass(one(), zero(), {0, 0}, {-1, 1, 5, -1, 1, 5});
    for (std::size_t k = 0; k < mesh.size(); ++k) {
        const auto& p = mesh.points[k];
        CHECK(p[2] == doctest::Approx(0.0).epsilon(1e-14));
        // x + iy is affine in w: x = Re(w)/2, y = -Im(w)/2
        CHECK(p[0] == doctest::Approx(mesh.params[k][0] / 2).epsilon(1e-12));
        CHECK(p[1] == doctest::Approx(-mesh.params[k][1] / 2).epsilon(1e-12));
    }
}

TEST_CASE("path independence of the Weierstrass integrals") {
    auto f = one();
    auto g = w();
    QuadratureOptions q;
    Complex w0(0.1, 0.0), wend(0.7, 0.4), mid(0.0, 0.9);
    auto direct = integrate_segment(f, g, w0, wend, q);
    auto leg1 = integrate_segment(f, g, w0, mid, q);
    auto leg2 = integrate_segment(f, g, mid, wend, q);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(direct[c] - (leg1[c] + leg2[c])) < 1e-12);
}

TEST_CASE("quadrature convergence under refinement") {
    auto f = holo::parse_holomorphic("exp(w)", "w");
    auto g = w();
    QuadratureOptions coarse;
    coarse.initial_segments = 2;
    coarse.max_segments = 2;
    QuadratureOptions fine;
    fine.initial_segments = 4;
    fine.max_segments = 4;
    auto a = integrate_segment(f, g, {0, 0}, {1, 1}, coarse);
    auto b = integrate_segment(f, g, {0, 0}, {1, 1}, fine);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(a[c] - b[c]) < 1e-10);
}

TEST_CASE("mean curvature: plane, sphere, Enneper") {
    // plane z = 0
    ParamFn plane = [](const std::vector<double>& uv) {
        return std::vector<double>{uv[0], uv[1], 0.0};
    };
    CHECK(std::abs(mean_curvature_graph(plane, {0.2, -0.3}, 1e-4)) < 1e-12);

    // unit sphere graph patch at the origin: H = -1 (inner normal convention)
    ParamFn sphere = [](const std::vector<double>& uv) {
        return std::vector<double>{uv[0], uv[1],
                                   std::sqrt(1.0 - uv[0] * uv[0] - uv[1] * uv[1])};
    };
    CHECK(std::abs(std::abs(mean_curvature_graph(sphere, {0.0, 0.0}, 1e-4)) - 1.0) < 1e-4);

    // Enneper: f = 1, g = w
    auto enneper = classical_param(one(), w(), {0, 0});
    for (auto pt : std::vector<std::vector<double>>{{0.3, 0.1}, {-0.2, 0.4}, {0.5, -0.5}}) {
        CHECK(std::abs(mean_curvature_graph(enneper, pt, 1e-4)) < 1e-6);
        // the general-codimension route agrees
        CHECK(trace_II_norm(enneper, pt, 1e-4) < 1e-5);
    }
}

TEST_CASE("orbit threefold: h = 0 is a cone over a constant-radius section") {
    auto h = zero();
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        double t = 0.5 + rng.range(0, 100) / 50.0;
        Complex z(rng.range(-80, 80) / 41.0, rng.range(-80, 80) / 43.0);
        auto p = so3_point(h, t, z);
        // exact positive-scaling homogeneity
        double lam = 1.75;
        auto q = so3_point(h, lam * t, z);
        for (int c = 0; c < 5; ++c) CHECK(std::abs(q[c] - lam * p[c]) < 1e-12);
        // radius of the section: sum x_i^2 / t^2 == 1/12
        double s = 0;
        for (int c = 0; c < 5; ++c) s += p[c] * p[c];
        CHECK(std::abs(s / (t * t) - 1.0 / 12.0) < 1e-12);
    }
}

TEST_CASE("orbit threefold: h = z^2 image is minimal") {
    auto h = holo::parse_holomorphic("z^2", "z");
    auto p = so3_param(h);
    for (auto pt : std::vector<std::vector<double>>{
             {1.0, 0.3, 0.1}, {1.5, -0.2, 0.4}, {2.0, 0.1, -0.3}}) {
        CHECK(trace_II_norm(p, pt, 1e-4) < 1e-5);
    }
}

TEST_CASE("mesh export: OBJ quads and CSV columns") {
    auto mesh = classical_weierstrass(one(), w(), {0, 0}, {-1, 1, 10, -1, 1, 10});
    std::string obj = "/tmp/eds_test_enneper.obj";
    export_obj(mesh, obj);
    std::ifstream is(obj);
    int nv = 0, nf = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("v ", 0) == 0) ++nv;
        if (line.rfind("f ", 0) == 0) ++nf;
    }
    CHECK(nv == 100);
    CHECK(nf == 81);
    std::remove(obj.c_str());

    auto m5 = so3_orbit_threefold(zero(), {1, 2, 2}, {-1, 1, 3, -1, 1, 3});
    CHECK_THROWS_AS(export_obj(m5, "/tmp/eds_test_should_not_exist.obj"), UnsupportedFormatError);
    std::string csv = "/tmp/eds_test_so3.csv";
    export_csv(m5, csv);
    std::ifstream cs(csv);
    std::getline(cs, line);
    CHECK(line == "t,re_z,im_z,x0,x1,x2,x3,x4");
    int rows = 0;
    while (std::getline(cs, line)) ++rows;
    CHECK(rows == 2 * 3 * 3);
    std::remove(csv.c_str());
}

TEST_CASE("empty grids and singular integrands are rejected") {
    CHECK_THROWS_AS(classical_weierstrass(one(), w(), {0, 0}, {0, 1, 0, 0, 1, 5}), EmptyGridError);
    // g with a pole (as 1/w) and f without a matching zero
    auto ginv = holo::parse_holomorphic("1/w", "w");
    CHECK_THROWS_AS(integrate_segment(one(), ginv, {-1, 0}, {1, 0}, {}), SingularIntegrandError);
}
