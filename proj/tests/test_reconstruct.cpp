#include <catch_amalgamated.hpp>

#include <cmath>

#include "ccsurf/forms_engine.hpp"
#include "ccsurf/reconstruct.hpp"
#include "ccsurf/revolution.hpp"

using namespace ccsurf;
using Catch::Approx;

TEST_CASE("nu laws carry the frozen integration constants", "[reconstruct]") {
    const NuLaw h2 = make_nu_law(Space::H2R, 2.0);
    CHECK(h2.c0 == Approx(0.6154797087).margin(1e-9));
    CHECK(h2.slope == Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(h2.lambda == Approx(std::sqrt(3.0)).epsilon(1e-14));

    const NuLaw s4 = make_nu_law(Space::S2R, 4.0);
    CHECK(s4.c0 == Approx(0.5493061443).margin(1e-9));
    CHECK(s4.slope == Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(make_nu_law(Space::H2R, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_nu_law(Space::H2R, -0.5), std::domain_error);
    CHECK_THROWS_AS(make_nu_law(Space::S2R, 1.0), std::domain_error);
}

TEST_CASE("nu equals one at the center height and decays along it", "[reconstruct]") {
    const NuLaw h2 = make_nu_law(Space::H2R, 2.0);
    CHECK(nu_of_h(h2, 0.0) == Approx(1.0).margin(1e-13));
    const NuLaw s4 = make_nu_law(Space::S2R, 4.0);
    CHECK(nu_of_h(s4, 0.0) == Approx(1.0).margin(1e-13));

    // the equator height, where nu crosses zero
    const double h_eq = h2.c0 / h2.slope;
    CHECK(nu_of_h(h2, h_eq) == Approx(0.0).margin(1e-13));

    // beyond the branch of the tangent law
    const double h_bad = (h2.c0 + M_PI / 2.0) / h2.slope + 0.01;
    CHECK_THROWS_WITH(nu_of_h(h2, -h_bad),
                      Catch::Matchers::ContainsSubstring("nu-law out of branch"));
}

TEST_CASE("jet Hessian at the disk center is isotropic", "[reconstruct]") {
    const NuLaw law = make_nu_law(Space::H2R, 2.0);
    const JetHessian H = hessian_of_jet(law, 0.0, 0.0, JetState{});
    // d = 1/2 and nu = 1 there: h_uu = h_vv = 4 sqrt(3), h_uv = 0
    CHECK(H.huu == Approx(4.0 * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(H.hvv == Approx(H.huu).epsilon(1e-14));
    CHECK(H.huv == Approx(0.0).margin(1e-14));
}

TEST_CASE("radial integration hits frozen height values", "[reconstruct]") {
    const NuLaw h2 = make_nu_law(Space::H2R, 2.0);
    const JetState a = integrate_jet(h2, {{0.0, 0.0}, {0.3, 0.0}}, JetState{}, 1e-3);
    CHECK(a.h == Approx(0.248185729219).margin(1e-9));
    CHECK(a.q == Approx(0.0).margin(1e-12));

    const NuLaw s4 = make_nu_law(Space::S2R, 4.0);
    const JetState b = integrate_jet(s4, {{0.0, 0.0}, {0.3, 0.0}}, JetState{}, 1e-3);
    CHECK(b.h == Approx(0.243221635932).margin(1e-9));
}

TEST_CASE("transport is path independent", "[reconstruct]") {
    const NuLaw law = make_nu_law(Space::H2R, 2.0);
    const JetState direct =
        integrate_jet(law, {{0.0, 0.0}, {0.3, 0.1}}, JetState{}, 1e-3);
    const JetState detour =
        integrate_jet(law, {{0.0, 0.0}, {0.25, -0.1}, {0.3, 0.1}}, JetState{}, 1e-3);
    CHECK(direct.h == Approx(detour.h).margin(1e-9));
    CHECK(direct.p == Approx(detour.p).margin(1e-8));
    CHECK(direct.q == Approx(detour.q).margin(1e-8));
}

TEST_CASE("inadmissible jets abort the integration", "[reconstruct]") {
    const NuLaw law = make_nu_law(Space::H2R, 2.0);
    JetState bad;
    bad.p = 3.0;  // d^2 (p^2+q^2) = 2.25 at the center
    CHECK_THROWS_WITH(integrate_jet(law, {{0.0, 0.0}, {0.1, 0.0}}, bad, 1e-3),
                      Catch::Matchers::ContainsSubstring("jet left admissible region"));
}

TEST_CASE("reconstructed disks match the rotational sphere", "[reconstruct]") {
    const HeightField f = reconstruct_height_field(Space::H2R, 2.0, 0.4, 1e-3, 16);
    CHECK(f.radius_reached == Approx(0.4));
    CHECK(f.n_rays == 16);
    CHECK_FALSE(f.branch_exited);
    CHECK(oracle_max_error(f) < 1e-9);
    CHECK(f.max_frame_defect < 1e-9);
    CHECK(std::isnan(f.equator_rho));
    CHECK(f.min_nu > 0.0);
    CHECK(f.min_nu <= 1.0);

    // rotational symmetry and evenness in both coordinates
    for (int i = 0; i < f.n_nodes; ++i)
        for (int r = 1; r < f.n_rays; ++r)
            CHECK(f.at(r, i).h == Approx(f.at(0, i).h).margin(1e-12));
}

TEST_CASE("an S2xR disk reconstructs equally well", "[reconstruct]") {
    const HeightField f = reconstruct_height_field(Space::S2R, 4.0, 0.3, 1e-3, 8);
    CHECK(oracle_max_error(f) < 1e-9);
    CHECK(f.max_frame_defect < 1e-9);
}

TEST_CASE("the reconstructed chart is a constant-curvature immersion", "[reconstruct]") {
    const ImmersionChart chart = reconstructed_chart(Space::H2R, 2.0, 0.4);
    const ChartJet j = chart.eval(0.2, 0.1);
    CHECK(std::abs(manifold_residual(Space::H2R, j.p)) < 1e-12);

    // height and conformal factor agree with the closed-form chart
    const ImmersionChart closed = conformal_chart(Space::H2R, 2.0);
    const ChartJet jc = closed.eval(0.2, 0.1);
    for (int k = 0; k < 4; ++k) {
        CHECK(j.p[k] == Approx(jc.p[k]).margin(1e-9));
        CHECK(j.pu[k] == Approx(jc.pu[k]).margin(1e-8));
    }

    CHECK(structure_equation_residual(chart, 0.1, 0.05) < 1e-5);

    const QuadraticFormField g = metric_field(chart);
    CHECK(gaussian_curvature_fd(g, 0.15, -0.1) == Approx(2.0).margin(1e-4));
}

TEST_CASE("reference heights agree with the conformal chart closed form", "[reconstruct]") {
    for (auto [space, K] : std::vector<std::pair<Space, double>>{
             {Space::H2R, 2.0}, {Space::S2R, 4.0}}) {
        const ImmersionChart closed = conformal_chart(space, K);
        for (double rho : {0.05, 0.2, 0.35}) {
            CHECK(reference_height(space, K, rho) ==
                  Approx(closed.eval(rho, 0.0).p[3]).margin(1e-12));
        }
    }
}

TEST_CASE("a large disk reports the equator crossing", "[reconstruct]") {
    // for K=2 the angle function crosses zero at rho = 1/sqrt(2)
    const HeightField f = reconstruct_height_field(Space::H2R, 2.0, 1.2, 1e-3, 4);
    CHECK_FALSE(std::isnan(f.equator_rho));
    CHECK(f.min_nu < 0.0);
    CHECK(f.equator_rho > 0.5);
    CHECK(f.equator_rho < 1.2);
    CHECK(oracle_max_error(f) < 1e-8);
}
