#pragma once

// The ambient product 3-manifolds, realized as hypersurfaces of R^4:
//   S^2 x R : x1^2 + x2^2 + x3^2 = 1, Euclidean inner product   (eps = +1)
//   H^2 x R : -x1^2 + x2^2 + x3^2 = -1, x1 > 0, Lorentzian inner (eps = -1)
// The fourth coordinate is the height axis in both cases.

#include <array>
#include <cmath>

namespace ccsurf {

enum class Space { H2R, S2R };

inline double eps_of(Space s) { return s == Space::H2R ? -1.0 : 1.0; }

inline const char* space_name(Space s) { return s == Space::H2R ? "h2r" : "s2r"; }

struct Vec4 {
    std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};

    double& operator[](int i) { return x[static_cast<size_t>(i)]; }
    double operator[](int i) const { return x[static_cast<size_t>(i)]; }
};

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}
inline Vec4 operator*(double s, const Vec4& a) {
    return {{s * a[0], s * a[1], s * a[2], s * a[3]}};
}
inline Vec4 operator-(const Vec4& a) { return -1.0 * a; }

// Signature (eps, +, +, +) bilinear form shared by both ambient models.
inline double inner(Space s, const Vec4& a, const Vec4& b) {
    return eps_of(s) * a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double euclid_norm(const Vec4& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

// Defect of the defining equation of M^2(eps) x R at p; zero on the manifold.
// The x1 > 0 sheet condition for H2R is the caller's responsibility.
inline double manifold_residual(Space s, const Vec4& p) {
    const double e = eps_of(s);
    return e * p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - e;
}

// Rotation about the vertical axis through (1,0,0)x{R}: turns the (x2,x3)
// plane, fixes x1 and the height. An isometry of both ambient spaces.
inline Vec4 rotate_about_axis(const Vec4& p, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {{p[0], c * p[1] - s * p[2], s * p[1] + c * p[2], p[3]}};
}

inline Vec4 vertical_translate(const Vec4& p, double t) {
    return {{p[0], p[1], p[2], p[3] + t}};
}

}  // namespace ccsurf
