#pragma once

// Reconstruction of the rotational sphere from its curvature alone: the
// angle-function law nu(h), the closed Hessian of the height jet on the
// conformal disk, RK4 transport of (h, h_u, h_v) along polyline paths, and
// assembly of a full immersion chart whose height comes from integration.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ambient.hpp"
#include "forms_engine.hpp"
#include "numerics.hpp"
#include "revolution.hpp"

namespace ccsurf {

// nu as a function of height along the rotational sphere, normalized so that
// nu = 1 at the center height h = 0:
//   H2R: nu = sqrt(K) tan(-sqrt(K/(1+K)) h + c2), c2 = arctan(1/sqrt(K))
//   S2R: nu = sqrt(K) tanh(-sqrt(K/(K-1)) h + c1), c1 = artanh(1/sqrt(K))
struct NuLaw {
    Space space = Space::H2R;
    double K = 0.0;
    double c0 = 0.0;      // the integration constant c2 (H2R) or c1 (S2R)
    double slope = 0.0;   // sqrt(K/(1+K)) or sqrt(K/(K-1))
    double lambda = 0.0;  // sqrt(K - eps), the shape-operator multiple
};

inline NuLaw make_nu_law(Space space, double K) {
    NuLaw law;
    law.space = space;
    law.K = K;
    if (space == Space::H2R) {
        if (!(K > 0.0)) throw std::domain_error("nu-law undefined for this curvature");
        law.c0 = std::atan(1.0 / std::sqrt(K));
        law.slope = std::sqrt(K / (1.0 + K));
    } else {
        if (!(K > 1.0)) throw std::domain_error("nu-law undefined for this curvature");
        law.c0 = std::atanh(1.0 / std::sqrt(K));
        law.slope = std::sqrt(K / (K - 1.0));
    }
    law.lambda = std::sqrt(K - eps_of(space));
    return law;
}

inline double nu_of_h(const NuLaw& law, double h) {
    const double arg = -law.slope * h + law.c0;
    if (law.space == Space::H2R) {
        if (std::abs(arg) >= M_PI / 2.0 - 1e-6)
            throw std::domain_error("nu-law out of branch");
        return std::sqrt(law.K) * std::tan(arg);
    }
    return std::sqrt(law.K) * std::tanh(arg);
}

struct JetState {
    double h = 0.0;
    double p = 0.0;  // h_u
    double q = 0.0;  // h_v
};

struct JetHessian {
    double huu = 0.0, huv = 0.0, hvv = 0.0;
};

inline JetHessian hessian_of_jet(const NuLaw& law, double u, double v, const JetState& s) {
    const double K = law.K;
    const double c = 1.0 / (eps_of(law.space) * K - 1.0);
    const double d = 0.5 * (1.0 + K * (u * u + v * v));
    const double nu = nu_of_h(law, s.h);
    const double au = K * u / d, av = K * v / d;
    const double inv_d2 = 1.0 / (d * d);
    JetHessian H;
    H.huu = -au * s.p + av * s.q + law.lambda * (inv_d2 + c * s.p * s.p) * nu;
    H.huv = -av * s.p - au * s.q + law.lambda * c * s.p * s.q * nu;
    H.hvv = au * s.p - av * s.q + law.lambda * (inv_d2 + c * s.q * s.q) * nu;
    return H;
}

namespace detail {

// One RK4 step of the height jet along the straight segment of length ds in
// direction (eu, ev) starting at (u, v).
inline JetState rk4_jet_step(const NuLaw& law, double u, double v, double eu, double ev,
                             const JetState& s, double ds) {
    auto deriv = [&law, eu, ev](double uu, double vv, const JetState& st) {
        const JetHessian H = hessian_of_jet(law, uu, vv, st);
        JetState d;
        d.h = st.p * eu + st.q * ev;
        d.p = H.huu * eu + H.huv * ev;
        d.q = H.huv * eu + H.hvv * ev;
        return d;
    };
    auto advance = [](const JetState& a, const JetState& b, double w) {
        return JetState{a.h + w * b.h, a.p + w * b.p, a.q + w * b.q};
    };
    const JetState k1 = deriv(u, v, s);
    const JetState k2 = deriv(u + 0.5 * ds * eu, v + 0.5 * ds * ev, advance(s, k1, 0.5 * ds));
    const JetState k3 = deriv(u + 0.5 * ds * eu, v + 0.5 * ds * ev, advance(s, k2, 0.5 * ds));
    const JetState k4 = deriv(u + ds * eu, v + ds * ev, advance(s, k3, ds));
    JetState out = s;
    out.h += ds / 6.0 * (k1.h + 2.0 * k2.h + 2.0 * k3.h + k4.h);
    out.p += ds / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    out.q += ds / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    return out;
}

inline void check_admissible(const NuLaw& law, double u, double v, const JetState& s) {
    const double d = 0.5 * (1.0 + law.K * (u * u + v * v));
    if (d * d * (s.p * s.p + s.q * s.q) > 1.0 + 1e-4)
        throw std::runtime_error("jet left admissible region");
}

}  // namespace detail

// Transport the jet along a polyline with fixed RK4 step size; the final
// partial step of each segment is shortened to land on the vertex exactly.
inline JetState integrate_jet(const NuLaw& law,
                              const std::vector<std::pair<double, double>>& path,
                              const JetState& init, double step) {
    if (path.size() < 2) return init;
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    JetState s = init;
    detail::check_admissible(law, path[0].first, path[0].second, s);
    for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
        const double u0 = path[seg].first, v0 = path[seg].second;
        const double du = path[seg + 1].first - u0, dv = path[seg + 1].second - v0;
        const double len = std::hypot(du, dv);
        if (len == 0.0) continue;
        const double eu = du / len, ev = dv / len;
        double done = 0.0;
        while (done < len) {
            const double ds = std::min(step, len - done);
            s = detail::rk4_jet_step(law, u0 + done * eu, v0 + done * ev, eu, ev, s, ds);
            done += ds;
            detail::check_admissible(law, u0 + done * eu, v0 + done * ev, s);
        }
    }
    return s;
}

struct HeightField {
    Space space = Space::H2R;
    double K = 0.0;
    double radius_requested = 0.0;
    double radius_reached = 0.0;
    double step = 0.0;
    int n_rays = 0;
    int n_nodes = 0;             // radial samples per ray, counting the origin
    std::vector<double> theta;   // n_rays ray angles
    std::vector<double> rho;     // n_nodes radii, rho[0] = 0
    std::vector<JetState> jets;  // n_rays * n_nodes, ray-major
    bool branch_exited = false;
    double min_nu = std::numeric_limits<double>::infinity();
    double max_gradnorm2 = 0.0;          // max of d^2 (p^2 + q^2)
    double max_frame_defect = 0.0;       // max |nu^2 + d^2(p^2+q^2) - 1|
    double equator_rho = std::numeric_limits<double>::quiet_NaN();  // first nu <= 0

    const JetState& at(int ray, int node) const {
        return jets[static_cast<size_t>(ray) * n_nodes + node];
    }
};

inline HeightField reconstruct_height_field(Space space, double K, double radius,
                                            double step, int n_rays = 64) {
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
    const NuLaw law = make_nu_law(space, K);

    HeightField f;
    f.space = space;
    f.K = K;
    f.radius_requested = radius;
    f.step = step;
    f.n_rays = n_rays;

    f.rho.push_back(0.0);
    while (f.rho.back() < radius - 1e-12)
        f.rho.push_back(std::min(f.rho.back() + step, radius));

    std::vector<std::vector<JetState>> rays(n_rays);
    size_t reach = f.rho.size();
    for (int r = 0; r < n_rays; ++r) {
        const double th = 2.0 * M_PI * r / n_rays;
        f.theta.push_back(th);
        const double eu = std::cos(th), ev = std::sin(th);
        JetState s;  // h = 0, grad h = 0 at the center
        rays[r].push_back(s);
        for (size_t i = 1; i < f.rho.size(); ++i) {
            const double lo = f.rho[i - 1], hi = f.rho[i];
            double done = lo;
            bool exited = false;
            while (done < hi) {
                const double ds = std::min(step, hi - done);
                try {
                    s = detail::rk4_jet_step(law, done * eu, done * ev, eu, ev, s, ds);
                    done += ds;
                    detail::check_admissible(law, done * eu, done * ev, s);
                    nu_of_h(law, s.h);
                } catch (const std::domain_error&) {
                    exited = true;
                    break;
                }
            }
            if (exited) {
                f.branch_exited = true;
                break;
            }
            rays[r].push_back(s);
        }
        reach = std::min(reach, rays[r].size());
    }

    f.n_nodes = static_cast<int>(reach);
    f.rho.resize(reach);
    f.radius_reached = f.rho.back();
    for (int r = 0; r < n_rays; ++r)
        for (size_t i = 0; i < reach; ++i) f.jets.push_back(rays[r][i]);

    for (int r = 0; r < n_rays; ++r)
        for (int i = 0; i < f.n_nodes; ++i) {
            const JetState& s = f.at(r, i);
            const double u = f.rho[i] * std::cos(f.theta[r]);
            const double v = f.rho[i] * std::sin(f.theta[r]);
            const double d = 0.5 * (1.0 + K * (u * u + v * v));
            const double w = d * d * (s.p * s.p + s.q * s.q);
            const double nu = nu_of_h(law, s.h);
            f.min_nu = std::min(f.min_nu, nu);
            f.max_gradnorm2 = std::max(f.max_gradnorm2, w);
            f.max_frame_defect = std::max(f.max_frame_defect, std::abs(nu * nu + w - 1.0));
            if (nu <= 0.0 && std::isnan(f.equator_rho)) f.equator_rho = f.rho[i];
        }
    return f;
}

// Immersion chart of the reconstructed surface: x1..x3 are the closed-form
// conformal-model coordinates, the height jet is integrated radially from the
// center on every evaluation, and its second derivatives come from the same
// Hessian the integrator uses.
inline ImmersionChart reconstructed_chart(Space space, double K, double radius,
                                          double step = 1e-3) {
    const NuLaw law = make_nu_law(space, K);
    const double e = eps_of(space);

    ImmersionChart chart;
    chart.space = space;
    chart.K = K;
    chart.family = "reconstructed";
    chart.conformal_model = true;
    const double half = 0.7 * radius;
    chart.domain = {-half, half, -half, half, false};

    chart.eval = [space, K, e, law, step](double u, double v) {
        const Jet2 U = jet_u(u), V = jet_v(v);
        const Jet2 rho2 = U * U + V * V;
        const Jet2 d = 0.5 * (1.0 + K * rho2);
        const Jet2 m = d * d - e * rho2;
        if (m.f <= 0.0) throw std::domain_error("degenerate chart point");
        const Jet2 S = jsqrt(m);
        const Jet2 x1 = S / d, x2 = U / d, x3 = V / d;

        JetState s = integrate_jet(law, {{0.0, 0.0}, {u, v}}, JetState{}, step);
        const JetHessian H = hessian_of_jet(law, u, v, s);

        ChartJet J;
        J.p = {{x1.f, x2.f, x3.f, s.h}};
        J.pu = {{x1.fu, x2.fu, x3.fu, s.p}};
        J.pv = {{x1.fv, x2.fv, x3.fv, s.q}};
        J.puu = {{x1.fuu, x2.fuu, x3.fuu, H.huu}};
        J.puv = {{x1.fuv, x2.fuv, x3.fuv, H.huv}};
        J.pvv = {{x1.fvv, x2.fvv, x3.fvv, H.hvv}};
        return J;
    };
    orient_at_anchor(chart, 0.0, 0.0);
    return chart;
}

// Height of the rotational sphere above the disk center at conformal radius
// rho, through the profile parametrization: the radial conformal coordinate
// integrates to arclength s = (2/sqrt(K)) arctan(sqrt(K) rho).
inline double reference_height(Space space, double K, double rho) {
    static thread_local Space cached_space = Space::H2R;
    static thread_local double cached_K = std::numeric_limits<double>::quiet_NaN();
    static thread_local ProfileCurve prof;
    if (space != cached_space || K != cached_K) {
        prof = profile(space, K);
        cached_space = space;
        cached_K = K;
    }
    const double s = 2.0 / std::sqrt(K) * std::atan(std::sqrt(K) * rho);
    return prof.h(s) - prof.h(0.0);
}

inline double oracle_max_error(const HeightField& f) {
    double worst = 0.0;
    for (int r = 0; r < f.n_rays; ++r)
        for (int i = 0; i < f.n_nodes; ++i)
            worst = std::max(worst,
                             std::abs(f.at(r, i).h - reference_height(f.space, f.K, f.rho[i])));
    return worst;
}

}  // namespace ccsurf
