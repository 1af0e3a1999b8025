#pragma once

// Geometric fields attached to an immersion chart into M^2(eps) x R:
// the frame {N, eta, nu, grad h}, the fundamental forms I, II, II_eta,
// the Gauss-equation split, the conformal-model structure equations, and
// the signature of II.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "ambient.hpp"
#include "quadratic_forms.hpp"

namespace ccsurf {

// Full second-order jet of the immersion at a chart point.
struct ChartJet {
    Vec4 p, pu, pv, puu, puv, pvv;
};

struct ChartDomain {
    double ulo = 0.0, uhi = 0.0;
    double vlo = 0.0, vhi = 0.0;
    bool v_periodic = false;
};

struct ImmersionChart {
    Space space = Space::H2R;
    double K = 0.0;  // designed constant curvature of the induced metric
    std::function<ChartJet(double, double)> eval;
    ChartDomain domain;
    double orientation = 1.0;     // sign applied to the adjugate normal
    bool conformal_model = false; // I = d^-2 (du^2 + dv^2), d = (1 + K rho^2)/2
    std::string family;

    Vec4 psi(double u, double v) const { return eval(u, v).p; }
};

struct PointFrame {
    Vec4 N;                  // unit normal of the surface inside M^2(eps) x R
    Vec4 eta;                // (x1, x2, x3, 0): unit normal of M^2(eps) inside R^4
    double nu = 0.0;         // fourth coordinate of N
    double gradh[2] = {0.0, 0.0};  // contravariant components I^-1 (h_u, h_v)
    double gradh_norm2 = 0.0;
};

namespace detail {
inline double det3(double a0, double a1, double a2,
                   double b0, double b1, double b2,
                   double c0, double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

// Generalized cross product of three R^4 rows: the vector of signed 3x3
// minors, Euclidean-orthogonal to each row.
inline Vec4 adjugate_normal(const Vec4& a, const Vec4& b, const Vec4& c) {
    Vec4 w;
    w[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    w[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    w[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    w[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    return w;
}

inline FormAtPoint first_form(Space s, const ChartJet& j) {
    return {inner(s, j.pu, j.pu), inner(s, j.pu, j.pv), inner(s, j.pv, j.pv)};
}
}  // namespace detail

inline PointFrame frame_at(const ImmersionChart& chart, double u, double v) {
    const ChartJet j = chart.eval(u, v);
    const Space s = chart.space;
    const double e = eps_of(s);
    const FormAtPoint I = detail::first_form(s, j);
    const double W = det_of(I);
    const double scale = std::max(1.0, std::abs(I.E * I.G) + I.F * I.F);
    if (!(W > 1e-14 * scale))
        throw std::domain_error("degenerate chart point");

    const Vec4 eta{{j.p[0], j.p[1], j.p[2], 0.0}};
    // w is Euclidean-orthogonal to psi_u, psi_v, eta; flipping its first
    // component makes it orthogonal in the eps-inner product, i.e. tangent
    // to the ambient manifold and normal to the surface.
    const Vec4 w = detail::adjugate_normal(j.pu, j.pv, eta);
    Vec4 N{{e * w[0], w[1], w[2], w[3]}};
    const double n2 = inner(s, N, N);
    if (!(n2 > 0.0))
        throw std::domain_error("degenerate chart point");
    N = (chart.orientation / std::sqrt(n2)) * N;

    PointFrame f;
    f.N = N;
    f.eta = eta;
    f.nu = N[3];
    const double hu = j.pu[3], hv = j.pv[3];
    f.gradh[0] = (I.G * hu - I.F * hv) / W;
    f.gradh[1] = (I.E * hv - I.F * hu) / W;
    f.gradh_norm2 = hu * f.gradh[0] + hv * f.gradh[1];
    return f;
}

// Fixes the chart's normal orientation so that nu >= 0 at the anchor point.
// Vertical surfaces (nu identically 0) keep the raw adjugate orientation.
inline void orient_at_anchor(ImmersionChart& chart, double u, double v) {
    chart.orientation = 1.0;
    const PointFrame f = frame_at(chart, u, v);
    if (f.nu < 0.0) chart.orientation = -1.0;
}

struct FundamentalForms {
    FormAtPoint I, II, II_eta;
};

inline FundamentalForms fundamental_forms(const ImmersionChart& chart, double u, double v) {
    const ChartJet j = chart.eval(u, v);
    const Space s = chart.space;
    const PointFrame f = frame_at(chart, u, v);
    FundamentalForms r;
    r.I = detail::first_form(s, j);
    r.II = {inner(s, f.N, j.puu), inner(s, f.N, j.puv), inner(s, f.N, j.pvv)};
    const double hu = j.pu[3], hv = j.pv[3];
    r.II_eta = {-r.I.E + hu * hu, -r.I.F + hu * hv, -r.I.G + hv * hv};
    return r;
}

// Metric of the chart as a form field with exact derivative callbacks.
inline QuadraticFormField metric_field(const ImmersionChart& chart) {
    const Space s = chart.space;
    QuadraticFormField g;
    g.domain = {chart.domain.ulo, chart.domain.uhi, chart.domain.vlo, chart.domain.vhi};
    auto eval = chart.eval;
    g.coeff = [s, eval](double u, double v) {
        return detail::first_form(s, eval(u, v));
    };
    g.deriv = [s, eval](double u, double v) {
        const ChartJet j = eval(u, v);
        FormDerivs d;
        d.Eu = 2.0 * inner(s, j.puu, j.pu);
        d.Ev = 2.0 * inner(s, j.puv, j.pu);
        d.Fu = inner(s, j.puu, j.pv) + inner(s, j.pu, j.puv);
        d.Fv = inner(s, j.puv, j.pv) + inner(s, j.pu, j.pvv);
        d.Gu = 2.0 * inner(s, j.puv, j.pv);
        d.Gv = 2.0 * inner(s, j.pvv, j.pv);
        return d;
    };
    return g;
}

// Second fundamental form as a field; its coefficient derivatives are left
// to finite differences (they would need third derivatives of the chart).
inline QuadraticFormField second_form_field(const ImmersionChart& chart) {
    QuadraticFormField b;
    b.domain = {chart.domain.ulo, chart.domain.uhi, chart.domain.vlo, chart.domain.vhi};
    b.coeff = [&chart](double u, double v) { return fundamental_forms(chart, u, v).II; };
    return b;
}

// Residual of the Gauss equation K(I) = K(I,II) + eps (1 - |grad h|^2),
// with K(I) taken by finite differences through the connection.
inline double gauss_split_residual(const ImmersionChart& chart, double u, double v,
                                   double fd_step = 1e-5) {
    const QuadraticFormField I = metric_field(chart);
    const FundamentalForms ff = fundamental_forms(chart, u, v);
    const PointFrame f = frame_at(chart, u, v);
    const double kfd = gaussian_curvature_fd(I, u, v, fd_step);
    const double kext = det_of(ff.II) / det_of(ff.I);
    return kfd - kext - eps_of(chart.space) * (1.0 - f.gradh_norm2);
}

// Cross-check of II: |<N, psi_ij> + <N_i, psi_j>| with dN by central
// differences; returns the worst of the four comparisons.
inline double ii_fd_crosscheck(const ImmersionChart& chart, double u, double v,
                               double fd_step = 1e-5) {
    const ChartJet j = chart.eval(u, v);
    const Space s = chart.space;
    const FundamentalForms ff = fundamental_forms(chart, u, v);
    const Vec4 Nup = frame_at(chart, u + fd_step, v).N;
    const Vec4 Num = frame_at(chart, u - fd_step, v).N;
    const Vec4 Nvp = frame_at(chart, u, v + fd_step).N;
    const Vec4 Nvm = frame_at(chart, u, v - fd_step).N;
    const double inv2s = 0.5 / fd_step;
    const Vec4 Nu = inv2s * (Nup - Num);
    const Vec4 Nv = inv2s * (Nvp - Nvm);
    const double e_fd = -inner(s, Nu, j.pu);
    const double f_fd1 = -inner(s, Nu, j.pv);
    const double f_fd2 = -inner(s, Nv, j.pu);
    const double g_fd = -inner(s, Nv, j.pv);
    double worst = std::abs(ff.II.E - e_fd);
    worst = std::max(worst, std::abs(ff.II.F - f_fd1));
    worst = std::max(worst, std::abs(ff.II.F - f_fd2));
    worst = std::max(worst, std::abs(ff.II.G - g_fd));
    return worst;
}

// Residual of the seven frame structure equations on a conformal-model chart
// (I = d^-2 (du^2+dv^2), d = (1 + K rho^2)/2): the decomposition of psi_uu,
// psi_uv, psi_vv, -N_u, -N_v, -eta_u, -eta_v against {psi_u, psi_v, N, eta}.
// N derivatives are taken by central differences; eta derivatives are exact.
inline double structure_equation_residual(const ImmersionChart& chart, double u, double v,
                                          double fd_step = 1e-5) {
    const Space s = chart.space;
    const double e = eps_of(s);
    const double K = chart.K;
    const double d = 0.5 * (1.0 + K * (u * u + v * v));
    const ChartJet j = chart.eval(u, v);
    const FormAtPoint I = detail::first_form(s, j);
    const double d2 = d * d;
    if (!chart.conformal_model ||
        std::abs(I.E * d2 - 1.0) > 1e-6 || std::abs(I.G * d2 - 1.0) > 1e-6 ||
        std::abs(I.F * d2) > 1e-6)
        throw std::domain_error("chart not in conformal coordinates");

    const PointFrame f = frame_at(chart, u, v);
    const FundamentalForms ff = fundamental_forms(chart, u, v);
    const double hu = j.pu[3], hv = j.pv[3];
    const double Ku_d = K * u / d, Kv_d = K * v / d;

    const Vec4 Nu = (0.5 / fd_step) * (frame_at(chart, u + fd_step, v).N -
                                       frame_at(chart, u - fd_step, v).N);
    const Vec4 Nv = (0.5 / fd_step) * (frame_at(chart, u, v + fd_step).N -
                                       frame_at(chart, u, v - fd_step).N);
    // eta = (psi1, psi2, psi3, 0), so d(eta) = d(psi) with the height zeroed.
    const Vec4 eta_u{{j.pu[0], j.pu[1], j.pu[2], 0.0}};
    const Vec4 eta_v{{j.pv[0], j.pv[1], j.pv[2], 0.0}};

    auto lin = [&](double a, double b, double cn, double ce) {
        return a * j.pu + b * j.pv + cn * f.N + ce * f.eta;
    };
    const Vec4 r[7] = {
        j.puu - lin(-Ku_d, Kv_d, ff.II.E, e * (hu * hu - 1.0 / d2)),
        j.puv - lin(-Kv_d, -Ku_d, ff.II.F, e * hu * hv),
        j.pvv - lin(Ku_d, -Kv_d, ff.II.G, e * (hv * hv - 1.0 / d2)),
        -1.0 * Nu - lin(ff.II.E * d2, ff.II.F * d2, 0.0, -e * f.nu * hu),
        -1.0 * Nv - lin(ff.II.F * d2, ff.II.G * d2, 0.0, -e * f.nu * hv),
        -1.0 * eta_u - lin(hu * hu * d2 - 1.0, hu * hv * d2, f.nu * hu, 0.0),
        -1.0 * eta_v - lin(hu * hv * d2, hv * hv * d2 - 1.0, f.nu * hv, 0.0),
    };
    double worst = 0.0;
    for (const Vec4& x : r) worst = std::max(worst, euclid_norm(x));
    return worst;
}

enum class SecondFormSignature { definite, degenerate, lorentzian };

inline SecondFormSignature second_form_signature(const ImmersionChart& chart, double u, double v,
                                                 double tol = 1e-9) {
    const double det = det_of(fundamental_forms(chart, u, v).II);
    if (det > tol) return SecondFormSignature::definite;
    if (det < -tol) return SecondFormSignature::lorentzian;
    return SecondFormSignature::degenerate;
}

}  // namespace ccsurf
