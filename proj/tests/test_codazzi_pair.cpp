#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ccsurf/codazzi_pair.hpp"
#include "ccsurf/revolution.hpp"

using namespace ccsurf;
using Catch::Approx;

TEST_CASE("the constant c of the auxiliary form", "[codazzi_pair]") {
    CHECK(c_of(Space::H2R, 2.0) == Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(c_of(Space::H2R, -2.0) == Approx(1.0).epsilon(1e-14));
    CHECK(c_of(Space::S2R, 4.0) == Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_WITH(c_of(Space::H2R, -1.0),
                      Catch::Matchers::ContainsSubstring("form A undefined (K equals eps)"));
    CHECK_THROWS_AS(c_of(Space::S2R, 1.0), std::domain_error);
}

TEST_CASE("A = I + c dh^2 coefficientwise on a profile chart", "[codazzi_pair]") {
    const double K = 2.0;
    const ProfileCurve p = profile(Space::H2R, K);
    const ImmersionChart chart = immersion_from_profile(Space::H2R, p);
    const APair pair = build_A(chart, K);
    const double u = 0.6, v = 1.3;
    const double G = induced_metric_coeffs(p).coeff(u, 0.0).G;
    const double dh = p.dh(u);
    const FormAtPoint a = pair.A.coeff(u, v);
    CHECK(a.E == Approx(1.0 + pair.c * dh * dh).margin(1e-13));
    CHECK(a.F == Approx(0.0).margin(1e-14));
    CHECK(a.G == Approx(G).margin(1e-13));

    // exact derivatives agree with finite differences of the coefficients
    REQUIRE(pair.A.deriv);
    const FormDerivs d = pair.A.deriv(u, v);
    const double h = 1e-6;
    CHECK(d.Eu == Approx((pair.A.coeff(u + h, v).E - pair.A.coeff(u - h, v).E) / (2.0 * h))
                      .margin(1e-7));
    CHECK(d.Gu == Approx((pair.A.coeff(u + h, v).G - pair.A.coeff(u - h, v).G) / (2.0 * h))
                      .margin(1e-6));
}

TEST_CASE("the pair (A, II) has constant extrinsic curvature K - eps", "[codazzi_pair]") {
    const std::vector<std::tuple<Space, double, FamilyTag>> cases = {
        {Space::H2R, 2.0, FamilyTag::H2R_SpherePositiveK},
        {Space::H2R, 0.5, FamilyTag::H2R_SpherePositiveK},
        {Space::H2R, 0.0, FamilyTag::H2R_FlatAxisGraph},
        {Space::H2R, -0.5, FamilyTag::H2R_NegKAxis},
        {Space::S2R, 4.0, FamilyTag::S2R_SphereKGe1},
        {Space::S2R, 2.0, FamilyTag::S2R_SphereKGe1},
    };
    for (const auto& [space, K, tag] : cases) {
        const ImmersionChart chart = immersion_from_profile(space, profile(space, K, tag));
        const APair pair = build_A(chart, K);
        const double target = K - eps_of(space);
        for (double frac : {0.2, 0.5, 0.8}) {
            const double u = chart.domain.ulo + frac * (chart.domain.uhi - chart.domain.ulo);
            CHECK(pair_extrinsic_curvature(pair.A, pair.II, u, 0.8) ==
                  Approx(target).margin(1e-9));
            CHECK(std::abs(lemma1_residual(pair, chart, u, 0.8)) < 1e-9);
        }
    }
}

TEST_CASE("lemma1 residual refuses a degenerate A", "[codazzi_pair]") {
    const ImmersionChart chart = immersion_from_profile(
        Space::H2R, profile(Space::H2R, -0.5, FamilyTag::H2R_NegKExponential));
    const APair pair = build_A(chart, -0.5);
    CHECK_THROWS_WITH(lemma1_residual(pair, chart, 0.3, 0.5),
                      Catch::Matchers::ContainsSubstring("not Riemannian"));
}

TEST_CASE("pointwise degeneracy criterion for A", "[codazzi_pair]") {
    // boundary case sits exactly on w = 1 + K
    CHECK(lemma2_check(Space::H2R, -0.5, 0.5));
    CHECK_FALSE(lemma2_check(Space::H2R, -0.5, 0.49));
    CHECK(lemma2_check(Space::H2R, -1.0, 0.0));
    CHECK_FALSE(lemma2_check(Space::H2R, 0.5, 1.0));
    CHECK_FALSE(lemma2_check(Space::H2R, -1.5, 1.0));

    CHECK(lemma2_check(Space::S2R, 0.5, 0.5));
    CHECK_FALSE(lemma2_check(Space::S2R, 0.5, 0.49));
    CHECK(lemma2_check(Space::S2R, 0.0, 1.0));
    CHECK_FALSE(lemma2_check(Space::S2R, -0.5, 1.0));
    CHECK_FALSE(lemma2_check(Space::S2R, 2.0, 1.0));
}

TEST_CASE("degeneracy criterion is equivalent to the sign of 1 + c w", "[codazzi_pair]") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> Kdist(-3.0, 3.0), wdist(0.0, 1.0);
    int checked = 0;
    while (checked < 200) {
        const Space space = (rng() & 1) ? Space::H2R : Space::S2R;
        const double K = Kdist(rng), w = wdist(rng);
        if (std::abs(eps_of(space) * K - 1.0) < 1e-9) continue;
        const double c = c_of(space, K);
        REQUIRE(lemma2_check(space, K, w) == (1.0 + c * w <= 0.0));
        ++checked;
    }
}

TEST_CASE("closed-form Christoffel symbols of A on the conformal disk", "[codazzi_pair]") {
    for (auto [space, K] : std::vector<std::pair<Space, double>>{
             {Space::H2R, 2.0}, {Space::H2R, 0.5}, {Space::S2R, 4.0}}) {
        const ImmersionChart disk = conformal_chart(space, K);
        const APair pair = build_A(disk, K);
        for (auto [u, v] : std::vector<std::pair<double, double>>{
                 {0.15, -0.2}, {0.0, 0.3}, {-0.25, -0.1}}) {
            const Christoffel closed = christoffel_A_closed(pair, disk, u, v);
            const Christoffel numeric = christoffel_of(pair.A, u, v);
            CHECK(closed.g111 == Approx(numeric.g111).margin(1e-9));
            CHECK(closed.g112 == Approx(numeric.g112).margin(1e-9));
            CHECK(closed.g121 == Approx(numeric.g121).margin(1e-9));
            CHECK(closed.g122 == Approx(numeric.g122).margin(1e-9));
            CHECK(closed.g221 == Approx(numeric.g221).margin(1e-9));
            CHECK(closed.g222 == Approx(numeric.g222).margin(1e-9));
        }
    }

    const ImmersionChart prof = immersion_from_profile(Space::H2R, profile(Space::H2R, 2.0));
    const APair pair = build_A(prof, 2.0);
    CHECK_THROWS_WITH(christoffel_A_closed(pair, prof, 0.5, 0.5),
                      Catch::Matchers::ContainsSubstring("chart not in conformal coordinates"));
}

TEST_CASE("curvature of A as a function of the gradient norm", "[codazzi_pair]") {
    CHECK(KA_formula(Space::H2R, -2.0, 0.5) == Approx(-5.0 / 3.0).epsilon(1e-13));
    CHECK(KA_formula(Space::H2R, 2.0, 0.0) == Approx(1.0).margin(1e-13));
    CHECK(KA_formula(Space::H2R, 2.0, 1.0) == Approx(3.0).margin(1e-13));
    CHECK(KA_formula(Space::S2R, 4.0, 0.0) == Approx(5.0).margin(1e-13));
    CHECK(KA_formula(Space::S2R, 4.0, 1.0) == Approx(3.0).margin(1e-13));
    // 1 + c w = 0 exactly at w = 1 + K in H2xR
    CHECK_THROWS_WITH(KA_formula(Space::H2R, -0.5, 0.5),
                      Catch::Matchers::ContainsSubstring("degenerate denominator"));
}

TEST_CASE("curvature of A sweeps exactly the band [K-1, K+1]", "[codazzi_pair]") {
    for (Space space : {Space::H2R, Space::S2R}) {
        for (double K : {-2.0, -1.5, -1.1}) {
            const auto [lo, hi] = hilbert_bound_check(space, K);
            CHECK(lo == Approx(K - 1.0).margin(1e-12));
            CHECK(hi == Approx(K + 1.0).margin(1e-12));
        }
    }
    const auto [lo, hi] = hilbert_bound_check(Space::H2R, 2.0);
    CHECK(lo == Approx(1.0).margin(1e-12));
    CHECK(hi == Approx(3.0).margin(1e-12));
}

TEST_CASE("A minorizes the comparison metric when the gradient is short", "[codazzi_pair]") {
    std::mt19937 rng(171717);
    std::uniform_real_distribution<double> logdist(-1.0, 1.0), corr(-0.9, 0.9),
        dir(-1.0, 1.0), wdist(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Space space = (trial & 1) ? Space::H2R : Space::S2R;
        const double K = space == Space::H2R ? -1.0 - 0.1 - wdist(rng) : -1.0 - 0.1 - wdist(rng);
        FormAtPoint I{std::exp(logdist(rng)), 0.0, std::exp(logdist(rng))};
        I.F = corr(rng) * std::sqrt(I.E * I.G);
        double hu = dir(rng), hv = dir(rng);
        const double det = I.E * I.G - I.F * I.F;
        const double w0 = (I.G * hu * hu - 2.0 * I.F * hu * hv + I.E * hv * hv) / det;
        if (w0 == 0.0) continue;
        const double scale = std::sqrt(wdist(rng) / w0);  // target norm in [0,1]
        hu *= scale;
        hv *= scale;
        REQUIRE(a_minorization_gap(space, K, I, hu, hv) >= -1e-12);
    }

    // a gradient longer than 1 breaks the bound in S2xR
    const FormAtPoint I{1.0, 0.0, 1.0};
    CHECK(a_minorization_gap(Space::S2R, -2.0, I, 1.2, 0.0) < 0.0);
}
