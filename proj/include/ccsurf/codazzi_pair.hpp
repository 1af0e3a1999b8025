#pragma once

// The auxiliary form A = I + c dh^2 with c = 1/(eps K - 1): construction with
// exact coefficient derivatives, the constant extrinsic curvature of the pair
// (A, II), the pointwise degeneracy criterion, the closed-form Christoffel
// symbols of A on conformal charts, the curvature-of-A formula with its
// two-sided bounds, and the completeness minorization used alongside them.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ambient.hpp"
#include "forms_engine.hpp"
#include "quadratic_forms.hpp"

namespace ccsurf {

struct APair {
    QuadraticFormField A;
    QuadraticFormField II;
    double c = 0.0;
    double K = 0.0;
    Space space = Space::H2R;
};

inline double c_of(Space space, double K) {
    const double denom = eps_of(space) * K - 1.0;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("form A undefined (K equals eps)");
    return 1.0 / denom;
}

inline APair build_A(const ImmersionChart& chart, double K) {
    APair pair;
    pair.space = chart.space;
    pair.K = K;
    pair.c = c_of(chart.space, K);

    const double c = pair.c;
    const Space s = chart.space;
    auto eval = chart.eval;
    pair.A.domain = {chart.domain.ulo, chart.domain.uhi, chart.domain.vlo, chart.domain.vhi};
    pair.A.coeff = [s, c, eval](double u, double v) {
        const ChartJet j = eval(u, v);
        const double hu = j.pu[3], hv = j.pv[3];
        FormAtPoint a = detail::first_form(s, j);
        a.E += c * hu * hu;
        a.F += c * hu * hv;
        a.G += c * hv * hv;
        return a;
    };
    pair.A.deriv = [s, c, eval](double u, double v) {
        const ChartJet j = eval(u, v);
        const double hu = j.pu[3], hv = j.pv[3];
        const double huu = j.puu[3], huv = j.puv[3], hvv = j.pvv[3];
        FormDerivs d;
        d.Eu = 2.0 * inner(s, j.puu, j.pu) + 2.0 * c * hu * huu;
        d.Ev = 2.0 * inner(s, j.puv, j.pu) + 2.0 * c * hu * huv;
        d.Fu = inner(s, j.puu, j.pv) + inner(s, j.pu, j.puv) + c * (huu * hv + hu * huv);
        d.Fv = inner(s, j.puv, j.pv) + inner(s, j.pu, j.pvv) + c * (huv * hv + hu * hvv);
        d.Gu = 2.0 * inner(s, j.puv, j.pv) + 2.0 * c * hv * huv;
        d.Gv = 2.0 * inner(s, j.pvv, j.pv) + 2.0 * c * hv * hvv;
        return d;
    };
    pair.II = second_form_field(chart);
    return pair;
}

// K(A,II) - (K - eps); zero is the constant-extrinsic-curvature statement.
inline double lemma1_residual(const APair& pair, const ImmersionChart& chart, double u, double v) {
    if (!positive_definite(pair.A.coeff(u, v)))
        throw std::domain_error("form A not Riemannian at this point");
    (void)chart;
    return pair_extrinsic_curvature(pair.A, pair.II, u, v) -
           (pair.K - eps_of(pair.space));
}

// Pointwise criterion for A failing to be Riemannian at gradient norm
// squared w: (eps=+1) 0 <= K <= 1 and w >= 1-K; (eps=-1) -1 <= K <= 0 and
// w >= 1+K. Equivalent to 1 + c w <= 0 for w in [0,1].
inline bool lemma2_check(Space space, double K, double gradh_norm2) {
    const double w = gradh_norm2;
    if (space == Space::S2R) return K >= 0.0 && K <= 1.0 && w >= 1.0 - K;
    return K >= -1.0 && K <= 0.0 && w >= 1.0 + K;
}

// Closed-form Christoffel symbols of A on a conformal-model chart.
inline Christoffel christoffel_A_closed(const APair& pair, const ImmersionChart& chart,
                                        double u, double v) {
    if (!chart.conformal_model)
        throw std::domain_error("chart not in conformal coordinates");
    const double K = pair.K, c = pair.c;
    const double d = 0.5 * (1.0 + K * (u * u + v * v));
    const double d2 = d * d;
    const ChartJet j = chart.eval(u, v);
    const PointFrame fr = frame_at(chart, u, v);
    const FundamentalForms ff = fundamental_forms(chart, u, v);
    const double hu = j.pu[3], hv = j.pv[3];
    const double w = d2 * (hu * hu + hv * hv);  // |grad h|^2 in the conformal metric
    const double ks = 1.0 + c * w;
    if (!(ks > 0.0))
        throw std::domain_error("form A not Riemannian at this point");
    const double su = c * d2 * fr.nu * hu / ks;
    const double sv = c * d2 * fr.nu * hv / ks;
    const double Ku_d = K * u / d, Kv_d = K * v / d;
    Christoffel g;
    g.g111 = ff.II.E * su - Ku_d;
    g.g112 = ff.II.E * sv + Kv_d;
    g.g121 = ff.II.F * su - Kv_d;
    g.g122 = ff.II.F * sv - Ku_d;
    g.g221 = ff.II.G * su + Ku_d;
    g.g222 = ff.II.G * sv - Kv_d;
    return g;
}

// K(A) = ((1+c) K - eps c (1-w)^2) / (1 + c w)^2 at gradient norm squared w.
inline double KA_formula(Space space, double K, double gradh_norm2) {
    const double c = c_of(space, K);
    const double w = gradh_norm2;
    const double denom = 1.0 + c * w;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("degenerate denominator in curvature of A");
    return ((1.0 + c) * K - eps_of(space) * c * (1.0 - w) * (1.0 - w)) / (denom * denom);
}

// (min, max) of K(A) over w in [0,1]: 1001 uniform samples plus the exact
// endpoints, which evaluate to K-1 and K+1. The formula is monotone in w, so
// the sweep is effectively exhaustive.
inline std::pair<double, double> hilbert_bound_check(Space space, double K) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i <= 1000; ++i) {
        const double ka = KA_formula(space, K, static_cast<double>(i) / 1000.0);
        lo = std::min(lo, ka);
        hi = std::max(hi, ka);
    }
    return {lo, hi};
}

// Minimum eigenvalue of A - m I where m = 1 for eps=-1 and m = 1+c for
// eps=+1; nonnegative (up to roundoff) whenever |grad h| <= 1, which is the
// pointwise half of the completeness argument for A.
inline double a_minorization_gap(Space space, double K, const FormAtPoint& I,
                                 double hu, double hv) {
    const double c = c_of(space, K);
    const double m = space == Space::S2R ? 1.0 + c : 1.0;
    const double E = I.E + c * hu * hu - m * I.E;
    const double F = I.F + c * hu * hv - m * I.F;
    const double G = I.G + c * hv * hv - m * I.G;
    const double tr = E + G, det = E * G - F * F;
    return 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

}  // namespace ccsurf
