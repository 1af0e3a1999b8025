#pragma once

// Shared numerical kernel: second-order forward jets in one and two variables
// (so closed-form profiles and charts get exact derivatives without hand-derived
// chain rules), adaptive Simpson quadrature, and a safeguarded monotone solver.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ccsurf {

// ---------------------------------------------------------------------------
// Jet1: value + first + second derivative of a function of one variable.

struct Jet1 {
    double f = 0.0;
    double d = 0.0;
    double dd = 0.0;
};

inline Jet1 jet_var(double u) { return {u, 1.0, 0.0}; }
inline Jet1 jet_const(double c) { return {c, 0.0, 0.0}; }

inline Jet1 operator+(const Jet1& a, const Jet1& b) { return {a.f + b.f, a.d + b.d, a.dd + b.dd}; }
inline Jet1 operator-(const Jet1& a, const Jet1& b) { return {a.f - b.f, a.d - b.d, a.dd - b.dd}; }
inline Jet1 operator-(const Jet1& a) { return {-a.f, -a.d, -a.dd}; }
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    return {a.f * b.f, a.d * b.f + a.f * b.d, a.dd * b.f + 2.0 * a.d * b.d + a.f * b.dd};
}
inline Jet1 operator+(const Jet1& a, double s) { return {a.f + s, a.d, a.dd}; }
inline Jet1 operator+(double s, const Jet1& a) { return a + s; }
inline Jet1 operator-(const Jet1& a, double s) { return {a.f - s, a.d, a.dd}; }
inline Jet1 operator-(double s, const Jet1& a) { return {s - a.f, -a.d, -a.dd}; }
inline Jet1 operator*(const Jet1& a, double s) { return {a.f * s, a.d * s, a.dd * s}; }
inline Jet1 operator*(double s, const Jet1& a) { return a * s; }

// g(a) for scalar g with derivatives gp, gpp evaluated at a.f.
inline Jet1 jet_chain(double g, double gp, double gpp, const Jet1& a) {
    return {g, gp * a.d, gpp * a.d * a.d + gp * a.dd};
}

inline Jet1 operator/(const Jet1& a, const Jet1& b) {
    const double inv = 1.0 / b.f;
    return a * jet_chain(inv, -inv * inv, 2.0 * inv * inv * inv, b);
}
inline Jet1 operator/(const Jet1& a, double s) { return a * (1.0 / s); }
inline Jet1 operator/(double s, const Jet1& b) { return jet_const(s) / b; }

inline Jet1 jsqrt(const Jet1& a) {
    const double r = std::sqrt(a.f);
    return jet_chain(r, 0.5 / r, -0.25 / (r * a.f), a);
}
inline Jet1 jsin(const Jet1& a) { return jet_chain(std::sin(a.f), std::cos(a.f), -std::sin(a.f), a); }
inline Jet1 jcos(const Jet1& a) { return jet_chain(std::cos(a.f), -std::sin(a.f), -std::cos(a.f), a); }
inline Jet1 jsinh(const Jet1& a) { return jet_chain(std::sinh(a.f), std::cosh(a.f), std::sinh(a.f), a); }
inline Jet1 jcosh(const Jet1& a) { return jet_chain(std::cosh(a.f), std::sinh(a.f), std::cosh(a.f), a); }
inline Jet1 jexp(const Jet1& a) { const double e = std::exp(a.f); return jet_chain(e, e, e, a); }
inline Jet1 jlog(const Jet1& a) { return jet_chain(std::log(a.f), 1.0 / a.f, -1.0 / (a.f * a.f), a); }
inline Jet1 jatan(const Jet1& a) {
    const double w = 1.0 + a.f * a.f;
    return jet_chain(std::atan(a.f), 1.0 / w, -2.0 * a.f / (w * w), a);
}
inline Jet1 jasinh(const Jet1& a) {
    const double w = 1.0 + a.f * a.f, r = std::sqrt(w);
    return jet_chain(std::asinh(a.f), 1.0 / r, -a.f / (w * r), a);
}
// argument clamped into [-1,1] by at most `slack` to absorb roundoff at
// branch points; beyond that the call is a genuine domain error.
inline Jet1 jacos(const Jet1& a, double slack = 1e-12) {
    double x = a.f;
    if (x > 1.0) {
        if (x > 1.0 + slack) throw std::domain_error("acos argument out of range");
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - slack) throw std::domain_error("acos argument out of range");
        x = -1.0;
    }
    const double w = 1.0 - x * x, r = std::sqrt(w);
    if (r == 0.0) return {std::acos(x), a.d != 0.0 ? -std::numeric_limits<double>::infinity() : 0.0, 0.0};
    return jet_chain(std::acos(x), -1.0 / r, -x / (w * r), a);
}

// ---------------------------------------------------------------------------
// Jet2: value, gradient and Hessian of a function of two variables (u, v).

struct Jet2 {
    double f = 0.0;
    double fu = 0.0, fv = 0.0;
    double fuu = 0.0, fuv = 0.0, fvv = 0.0;
};

inline Jet2 jet_u(double u) { return {u, 1.0, 0.0, 0.0, 0.0, 0.0}; }
inline Jet2 jet_v(double v) { return {v, 0.0, 1.0, 0.0, 0.0, 0.0}; }
inline Jet2 jet2_const(double c) { return {c, 0.0, 0.0, 0.0, 0.0, 0.0}; }

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.f + b.f, a.fu + b.fu, a.fv + b.fv, a.fuu + b.fuu, a.fuv + b.fuv, a.fvv + b.fvv};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.f - b.f, a.fu - b.fu, a.fv - b.fv, a.fuu - b.fuu, a.fuv - b.fuv, a.fvv - b.fvv};
}
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.fu, -a.fv, -a.fuu, -a.fuv, -a.fvv}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f,
            a.fu * b.f + a.f * b.fu,
            a.fv * b.f + a.f * b.fv,
            a.fuu * b.f + 2.0 * a.fu * b.fu + a.f * b.fuu,
            a.fuv * b.f + a.fu * b.fv + a.fv * b.fu + a.f * b.fuv,
            a.fvv * b.f + 2.0 * a.fv * b.fv + a.f * b.fvv};
}
inline Jet2 operator+(const Jet2& a, double s) { return {a.f + s, a.fu, a.fv, a.fuu, a.fuv, a.fvv}; }
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) { return {a.f - s, a.fu, a.fv, a.fuu, a.fuv, a.fvv}; }
inline Jet2 operator-(double s, const Jet2& a) { return -a + s; }
inline Jet2 operator*(const Jet2& a, double s) { return {a.f * s, a.fu * s, a.fv * s, a.fuu * s, a.fuv * s, a.fvv * s}; }
inline Jet2 operator*(double s, const Jet2& a) { return a * s; }

inline Jet2 jet2_chain(double g, double gp, double gpp, const Jet2& a) {
    return {g,
            gp * a.fu,
            gp * a.fv,
            gpp * a.fu * a.fu + gp * a.fuu,
            gpp * a.fu * a.fv + gp * a.fuv,
            gpp * a.fv * a.fv + gp * a.fvv};
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double inv = 1.0 / b.f;
    return a * jet2_chain(inv, -inv * inv, 2.0 * inv * inv * inv, b);
}
inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& b) { return jet2_const(s) / b; }

inline Jet2 jsqrt(const Jet2& a) {
    const double r = std::sqrt(a.f);
    return jet2_chain(r, 0.5 / r, -0.25 / (r * a.f), a);
}
inline Jet2 jlog(const Jet2& a) { return jet2_chain(std::log(a.f), 1.0 / a.f, -1.0 / (a.f * a.f), a); }
inline Jet2 jatan(const Jet2& a) {
    const double w = 1.0 + a.f * a.f;
    return jet2_chain(std::atan(a.f), 1.0 / w, -2.0 * a.f / (w * w), a);
}

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature.

namespace detail {
template <class F>
double simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

// ---------------------------------------------------------------------------
// Root of f(x) = target for strictly monotone f on [lo, hi]; bisection to
// `tol` in x.  Monotonicity direction is detected from the endpoint values.

template <class F>
double solve_monotone(F&& f, double target, double lo, double hi, double tol = 1e-12) {
    double flo = f(lo), fhi = f(hi);
    const bool inc = fhi >= flo;
    if (!inc) { std::swap(flo, fhi); }
    if (target < flo - 1e-9 || target > fhi + 1e-9)
        throw std::domain_error("solve_monotone: target outside bracketed range");
    double a = lo, b = hi;
    for (int i = 0; i < 200 && (b - a) > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        const bool below = inc ? (fm < target) : (fm > target);
        (below ? a : b) = m;
    }
    return 0.5 * (a + b);
}

}  // namespace ccsurf
