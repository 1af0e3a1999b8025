#pragma once

// Pointwise quadratic-form machinery on a 2-dimensional chart: form fields
// with optional exact coefficient derivatives, Christoffel symbols, the pair
// curvatures K(A,B) and H(A,B), classical Codazzi residuals, and a
// finite-difference Gaussian curvature that goes through the Levi-Civita
// connection rather than any closed-form shortcut.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ccsurf {

// Coefficients of E du^2 + 2 F du dv + G dv^2 at one point.
struct FormAtPoint {
    double E = 0.0, F = 0.0, G = 0.0;
};

struct FormDerivs {
    double Eu = 0.0, Ev = 0.0, Fu = 0.0, Fv = 0.0, Gu = 0.0, Gv = 0.0;
};

struct ChartRect {
    double ulo = 0.0, uhi = 0.0, vlo = 0.0, vhi = 0.0;
};

// A form field over a chart rectangle. `deriv` may be empty, in which case
// consumers fall back to central differences of `coeff`.
struct QuadraticFormField {
    std::function<FormAtPoint(double, double)> coeff;
    std::function<FormDerivs(double, double)> deriv;
    ChartRect domain;
};

inline double det_of(const FormAtPoint& a) { return a.E * a.G - a.F * a.F; }

inline bool positive_definite(const FormAtPoint& a) { return a.E > 0.0 && det_of(a) > 0.0; }

// Symbols of the Levi-Civita connection of a metric; g{ij}{k} holds the
// symbol with lower indices ij and upper index k.
struct Christoffel {
    double g111 = 0.0, g112 = 0.0;
    double g121 = 0.0, g122 = 0.0;
    double g221 = 0.0, g222 = 0.0;
};

namespace detail {
inline void require_base(const FormAtPoint& a) {
    const double scale = std::max(1.0, std::abs(a.E * a.G) + a.F * a.F);
    if (std::abs(det_of(a)) <= 1e-14 * scale)
        throw std::domain_error("degenerate base form");
}

inline FormDerivs form_derivs(const QuadraticFormField& f, double u, double v, double step) {
    if (f.deriv) return f.deriv(u, v);
    const FormAtPoint up = f.coeff(u + step, v), um = f.coeff(u - step, v);
    const FormAtPoint vp = f.coeff(u, v + step), vm = f.coeff(u, v - step);
    const double s = 0.5 / step;
    return {(up.E - um.E) * s, (vp.E - vm.E) * s,
            (up.F - um.F) * s, (vp.F - vm.F) * s,
            (up.G - um.G) * s, (vp.G - vm.G) * s};
}
}  // namespace detail

// Mean curvature of the pair (A,B): trace of B in A, halved.
inline double pair_mean_curvature(const QuadraticFormField& A, const QuadraticFormField& B,
                                  double u, double v) {
    const FormAtPoint a = A.coeff(u, v), b = B.coeff(u, v);
    detail::require_base(a);
    return (a.E * b.G - 2.0 * a.F * b.F + a.G * b.E) / (2.0 * det_of(a));
}

// Extrinsic curvature of the pair (A,B): det B / det A.
inline double pair_extrinsic_curvature(const QuadraticFormField& A, const QuadraticFormField& B,
                                       double u, double v) {
    const FormAtPoint a = A.coeff(u, v), b = B.coeff(u, v);
    detail::require_base(a);
    return det_of(b) / det_of(a);
}

inline Christoffel christoffel_of(const QuadraticFormField& g, double u, double v,
                                  double fd_step = 1e-5) {
    const FormAtPoint a = g.coeff(u, v);
    if (!positive_definite(a))
        throw std::domain_error("form not positive definite");
    const FormDerivs d = detail::form_derivs(g, u, v, fd_step);
    const double W = det_of(a);
    Christoffel c;
    c.g111 = (a.G * d.Eu / 2.0 - a.F * (d.Fu - d.Ev / 2.0)) / W;
    c.g112 = (a.E * (d.Fu - d.Ev / 2.0) - a.F * d.Eu / 2.0) / W;
    c.g121 = (a.G * d.Ev / 2.0 - a.F * d.Gu / 2.0) / W;
    c.g122 = (a.E * d.Gu / 2.0 - a.F * d.Ev / 2.0) / W;
    c.g221 = (a.G * (d.Fv - d.Gu / 2.0) - a.F * d.Gv / 2.0) / W;
    c.g222 = (a.E * d.Gv / 2.0 - a.F * (d.Fv - d.Gu / 2.0)) / W;
    return c;
}

struct CodazziResidual {
    double r1 = 0.0, r2 = 0.0;

    double max_abs() const { return std::max(std::abs(r1), std::abs(r2)); }
};

// Classical space-form Codazzi residuals of the pair (A,B):
//   r1 = e_v - f_u - [ e g121 + f (g122 - g111) - g g112 ]
//   r2 = f_v - g_u - [ e g221 + f (g222 - g121) - g g122 ]
// where (e,f,g) are the coefficients of B and the symbols belong to A.
inline CodazziResidual codazzi_residual(const QuadraticFormField& A, const QuadraticFormField& B,
                                        double u, double v, double fd_step = 1e-5) {
    const Christoffel c = christoffel_of(A, u, v, fd_step);
    const FormAtPoint b = B.coeff(u, v);
    const FormDerivs db = detail::form_derivs(B, u, v, fd_step);
    CodazziResidual r;
    r.r1 = db.Ev - db.Fu - (b.E * c.g121 + b.F * (c.g122 - c.g111) - b.G * c.g112);
    r.r2 = db.Fv - db.Gu - (b.E * c.g221 + b.F * (c.g222 - c.g121) - b.G * c.g122);
    return r;
}

inline bool is_riemannian(const QuadraticFormField& f,
                          const std::vector<std::pair<double, double>>& points) {
    for (const auto& [u, v] : points)
        if (!positive_definite(f.coeff(u, v))) return false;
    return true;
}

// Gaussian curvature of a metric field from the Riemann tensor of its
// Levi-Civita connection, with the symbol derivatives taken by central
// differences:
//   (EG - F^2) K = E P + F Q, where
//   P = d_u g221 - d_v g121 + g221 g111 + g222 g121 - g121^2   - g122 g221
//   Q = d_u g222 - d_v g122 + g112 g221 + g222 g122 - g121 g122 - g122 g222
// (the two components of R(d_u,d_v)d_v against the coordinate frame).
inline double gaussian_curvature_fd(const QuadraticFormField& g, double u, double v,
                                    double fd_step = 1e-5) {
    // When the coefficient derivatives inside christoffel_of are themselves
    // finite differences, the outer step must be coarser to keep the nested
    // roundoff below the truncation error.
    const double s = g.deriv ? fd_step : std::max(fd_step, 2e-4);
    const Christoffel c = christoffel_of(g, u, v, fd_step);
    const Christoffel cu_p = christoffel_of(g, u + s, v, fd_step);
    const Christoffel cu_m = christoffel_of(g, u - s, v, fd_step);
    const Christoffel cv_p = christoffel_of(g, u, v + s, fd_step);
    const Christoffel cv_m = christoffel_of(g, u, v - s, fd_step);
    const double inv2s = 0.5 / s;
    const double d221_u = (cu_p.g221 - cu_m.g221) * inv2s;
    const double d121_v = (cv_p.g121 - cv_m.g121) * inv2s;
    const double d222_u = (cu_p.g222 - cu_m.g222) * inv2s;
    const double d122_v = (cv_p.g122 - cv_m.g122) * inv2s;
    const double P = d221_u - d121_v + c.g221 * c.g111 + c.g222 * c.g121 -
                     c.g121 * c.g121 - c.g122 * c.g221;
    const double Q = d222_u - d122_v + c.g112 * c.g221 + c.g222 * c.g122 -
                     c.g121 * c.g122 - c.g122 * c.g222;
    const FormAtPoint a = g.coeff(u, v);
    return (a.E * P + a.F * Q) / det_of(a);
}

}  // namespace ccsurf
