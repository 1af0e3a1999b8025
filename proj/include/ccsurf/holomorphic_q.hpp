#pragma once

// Isothermal coordinates for the second fundamental form on elliptic
// revolution charts, the quadratic differential Q = <psi_z, psi_z> + c h_z^2
// sampled on such grids, and a finite-difference Cauchy-Riemann residual.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ambient.hpp"
#include "codazzi_pair.hpp"
#include "forms_engine.hpp"
#include "numerics.hpp"

namespace ccsurf {

struct ConformalIIChart {
    ImmersionChart base;
    double K = 0.0;
    double c = 0.0;
    double u0 = 0.0;                             // profile parameter mapped to t = 0
    double t_lo = 0.0, t_hi = 0.0;
    std::function<double(double)> reparam;       // u(t)
    std::function<double(double)> factor;        // II = factor(t) (dt^2 + dv^2)
};

// Arclength-like substitution t(u) = integral of sqrt(e/g) that makes II a
// multiple of dt^2 + dv^2 on a revolution chart with definite second form.
// The chart is probed on a slightly shrunk parameter window so that pole
// degeneracies of the rotation orbit stay outside.
inline ConformalIIChart isothermal_for_II(const ImmersionChart& chart, double K,
                                          double collar = 0.05) {
    if (K - eps_of(chart.space) <= 0.0)
        throw std::domain_error("surface not elliptic type");
    ConformalIIChart cc;
    cc.base = chart;
    cc.K = K;
    cc.c = c_of(chart.space, K);

    const double len = chart.domain.uhi - chart.domain.ulo;
    const double ulo = chart.domain.ulo + collar * len;
    const double uhi = chart.domain.uhi - collar * len;
    cc.u0 = 0.5 * (chart.domain.ulo + chart.domain.uhi);

    auto ratio = [&chart](double u) {
        const FundamentalForms ff = fundamental_forms(chart, u, 0.0);
        if (!(ff.II.E > 0.0) || !(ff.II.G > 0.0))
            throw std::domain_error("surface not elliptic type");
        return std::sqrt(ff.II.E / ff.II.G);
    };
    ratio(ulo);
    ratio(uhi);

    const double u0 = cc.u0;
    auto t_of_u = [ratio, u0](double u) {
        if (u == u0) return 0.0;
        return adaptive_simpson(ratio, u0, u, 1e-10);
    };
    cc.t_lo = t_of_u(ulo);
    cc.t_hi = t_of_u(uhi);
    cc.reparam = [t_of_u, ulo, uhi](double t) {
        return solve_monotone(t_of_u, t, ulo, uhi, 1e-12);
    };
    auto base = chart;
    auto reparam = cc.reparam;
    cc.factor = [base, reparam](double t) {
        const double u = reparam(t);
        return fundamental_forms(base, u, 0.0).II.G;
    };
    return cc;
}

struct QSample {
    std::complex<double> z;
    std::complex<double> Q;
};

struct QGrid {
    int nt = 0, nv = 0;
    double spacing = 0.0;
    std::vector<QSample> samples;  // row-major, t index outer

    const QSample& at(int i, int j) const { return samples[static_cast<size_t>(i) * nv + j]; }
};

inline std::complex<double> q_at(const ConformalIIChart& cc, double t, double v) {
    const double u = cc.reparam(t);
    const ChartJet j = cc.base.eval(u, v);
    const FundamentalForms ff = fundamental_forms(cc.base, u, 0.0);
    const double du_dt = std::sqrt(ff.II.G / ff.II.E);

    const std::complex<double> i(0.0, 1.0);
    std::complex<double> psi_z[4];
    for (int k = 0; k < 4; ++k)
        psi_z[k] = 0.5 * (j.pu[k] * du_dt - i * j.pv[k]);
    const double eps = eps_of(cc.base.space);
    std::complex<double> qq = eps * psi_z[0] * psi_z[0];
    for (int k = 1; k < 4; ++k) qq += psi_z[k] * psi_z[k];

    const std::complex<double> h_z = 0.5 * (j.pu[3] * du_dt - i * j.pv[3]);
    return qq + cc.c * h_z * h_z;
}

inline QGrid q_field(const ConformalIIChart& cc, int nt, int nv, double spacing,
                     double t_center = 0.0, double v_center = 0.0) {
    QGrid grid;
    grid.nt = nt;
    grid.nv = nv;
    grid.spacing = spacing;
    grid.samples.reserve(static_cast<size_t>(nt) * nv);
    const double t0 = t_center - 0.5 * (nt - 1) * spacing;
    const double v0 = v_center - 0.5 * (nv - 1) * spacing;
    for (int it = 0; it < nt; ++it) {
        const double t = t0 + it * spacing;
        for (int iv = 0; iv < nv; ++iv) {
            const double v = v0 + iv * spacing;
            grid.samples.push_back({{t, v}, q_at(cc, t, v)});
        }
    }
    return grid;
}

// max |dQ/dzbar| over interior grid points, by central differences.
inline double cauchy_riemann_residual(const QGrid& grid) {
    if (grid.nt < 3 || grid.nv < 3)
        throw std::invalid_argument("grid too small for Cauchy-Riemann residual");
    const std::complex<double> i(0.0, 1.0);
    double worst = 0.0;
    for (int it = 1; it + 1 < grid.nt; ++it)
        for (int iv = 1; iv + 1 < grid.nv; ++iv) {
            const std::complex<double> qt =
                (grid.at(it + 1, iv).Q - grid.at(it - 1, iv).Q) / (2.0 * grid.spacing);
            const std::complex<double> qv =
                (grid.at(it, iv + 1).Q - grid.at(it, iv - 1).Q) / (2.0 * grid.spacing);
            worst = std::max(worst, std::abs(0.5 * (qt + i * qv)));
        }
    return worst;
}

inline double max_abs_q(const QGrid& grid) {
    double worst = 0.0;
    for (const QSample& s : grid.samples) worst = std::max(worst, std::abs(s.Q));
    return worst;
}

}  // namespace ccsurf
