#include <catch_amalgamated.hpp>

#include <cmath>

#include "ccsurf/ambient.hpp"

using namespace ccsurf;
using Catch::Approx;

TEST_CASE("ambient inner product carries the base-space sign", "[ambient]") {
    const Vec4 e1{1.0, 0.0, 0.0, 0.0};
    const Vec4 e4{0.0, 0.0, 0.0, 1.0};
    CHECK(inner(Space::H2R, e1, e1) == -1.0);
    CHECK(inner(Space::S2R, e1, e1) == 1.0);
    CHECK(inner(Space::H2R, e4, e4) == 1.0);

    const Vec4 a{1.5, -0.2, 0.3, 2.0}, b{0.5, 1.0, -1.0, 4.0};
    CHECK(inner(Space::H2R, a, b) ==
          Approx(-1.5 * 0.5 + (-0.2) * 1.0 + 0.3 * (-1.0) + 2.0 * 4.0).epsilon(1e-15));
}

TEST_CASE("manifold residual vanishes exactly on model points", "[ambient]") {
    const double t = 0.3, phi = 1.2;
    const Vec4 hp{std::cosh(t), std::sinh(t) * std::cos(phi), std::sinh(t) * std::sin(phi), 7.0};
    CHECK(std::abs(manifold_residual(Space::H2R, hp)) < 1e-15);

    const Vec4 sp{std::sin(t), std::cos(t) * std::cos(phi), std::cos(t) * std::sin(phi), -2.0};
    CHECK(std::abs(manifold_residual(Space::S2R, sp)) < 1e-15);

    const Vec4 off{1.1, 0.0, 0.0, 0.0};
    CHECK(manifold_residual(Space::H2R, off) == Approx(-1.21 + 1.0).epsilon(1e-14));
}

TEST_CASE("isometries preserve residual, inner products, and height", "[ambient]") {
    const Vec4 p{std::cosh(0.9), std::sinh(0.9) * std::cos(0.4), std::sinh(0.9) * std::sin(0.4),
                 1.25};
    const Vec4 q = rotate_about_axis(p, 2.1);
    CHECK(std::abs(manifold_residual(Space::H2R, q)) < 1e-14);
    CHECK(inner(Space::H2R, q, q) == Approx(inner(Space::H2R, p, p)).epsilon(1e-14));
    CHECK(q[0] == p[0]);
    CHECK(q[3] == p[3]);
    CHECK(q[1] == Approx(std::sinh(0.9) * std::cos(0.4 + 2.1)).epsilon(1e-13));

    const Vec4 lifted = vertical_translate(p, -3.5);
    CHECK(lifted[3] == Approx(p[3] - 3.5));
    CHECK(lifted[0] == p[0]);
}

TEST_CASE("vector arithmetic behaves componentwise", "[ambient]") {
    const Vec4 a{1.0, 2.0, 3.0, 4.0}, b{0.5, -1.0, 0.0, 2.0};
    const Vec4 s = a + b;
    CHECK(s[1] == 1.0);
    const Vec4 d = a - b;
    CHECK(d[3] == 2.0);
    const Vec4 m = 2.0 * a;
    CHECK(m[2] == 6.0);
    const Vec4 n = -a;
    CHECK(n[0] == -1.0);
    CHECK(euclid_norm(Vec4{3.0, 0.0, 4.0, 0.0}) == Approx(5.0));
}
