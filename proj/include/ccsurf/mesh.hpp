#pragma once

// Triangle/quad meshes of revolution charts under the disk-model projections,
// with pole rows welded to single vertices so closed surfaces close up
// combinatorially, and a plain OBJ writer.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambient.hpp"
#include "forms_engine.hpp"

namespace ccsurf {

using Projection = std::function<std::array<double, 3>(const Vec4&)>;

// Disk-model projections of the ambient: "poincare" and "stereographic-south"
// divide by 1 + x1, "stereographic" by 1 - x1; the height passes through.
inline Projection projection_by_name(const std::string& name) {
    auto make = [](double sign) {
        return [sign](const Vec4& p) {
            const double denom = 1.0 + sign * p[0];
            if (std::abs(denom) < 1e-9)
                throw std::runtime_error(
                    "projection pole hit; try --projection stereographic-south");
            return std::array<double, 3>{p[1] / denom, p[2] / denom, p[3]};
        };
    };
    if (name == "poincare" || name == "stereographic-south") return make(1.0);
    if (name == "stereographic") return make(-1.0);
    throw std::invalid_argument("unknown projection: " + name);
}

inline std::string default_projection(Space space) {
    return space == Space::H2R ? "poincare" : "stereographic";
}

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::vector<int>> faces;  // 0-based vertex indices
};

// Sample the chart on an n_u x n_v parameter grid. With closed=true the two
// ends of the u window are treated as poles of a closed surface: each end row
// collapses to one vertex joined to its neighbor row by a triangle fan.
inline Mesh mesh_from_chart(const ImmersionChart& chart, int n_u, int n_v,
                            const Projection& proj, bool closed) {
    if (n_u < 3 || n_v < 3) throw std::invalid_argument("mesh grid too small");
    if (!chart.domain.v_periodic)
        throw std::invalid_argument("mesh requires a rotation-periodic chart");
    Mesh mesh;
    const double ulo = chart.domain.ulo, uhi = chart.domain.uhi;

    auto vertex_at = [&](double u, double v) {
        mesh.vertices.push_back(proj(chart.psi(u, v)));
        return static_cast<int>(mesh.vertices.size()) - 1;
    };

    if (closed) {
        // interior rows only; rows 1..n_u-1 of the closed parameter interval
        std::vector<std::vector<int>> rows;
        for (int i = 1; i < n_u; ++i) {
            const double u = ulo + (uhi - ulo) * i / n_u;
            std::vector<int> row;
            for (int j = 0; j < n_v; ++j)
                row.push_back(vertex_at(u, 2.0 * M_PI * j / n_v));
            rows.push_back(std::move(row));
        }
        const int south = vertex_at(ulo, 0.0);
        const int north = vertex_at(uhi, 0.0);
        for (int j = 0; j < n_v; ++j) {
            const int jn = (j + 1) % n_v;
            mesh.faces.push_back({south, rows.front()[jn], rows.front()[j]});
            mesh.faces.push_back({north, rows.back()[j], rows.back()[jn]});
        }
        for (size_t i = 0; i + 1 < rows.size(); ++i)
            for (int j = 0; j < n_v; ++j) {
                const int jn = (j + 1) % n_v;
                mesh.faces.push_back({rows[i][j], rows[i][jn], rows[i + 1][jn], rows[i + 1][j]});
            }
        return mesh;
    }

    std::vector<std::vector<int>> rows;
    for (int i = 0; i <= n_u; ++i) {
        const double u = ulo + (uhi - ulo) * i / n_u;
        std::vector<int> row;
        for (int j = 0; j < n_v; ++j) row.push_back(vertex_at(u, 2.0 * M_PI * j / n_v));
        rows.push_back(std::move(row));
    }
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        for (int j = 0; j < n_v; ++j) {
            const int jn = (j + 1) % n_v;
            mesh.faces.push_back({rows[i][j], rows[i][jn], rows[i + 1][jn], rows[i + 1][j]});
        }
    return mesh;
}

inline void write_obj(std::ostream& out, const Mesh& mesh) {
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.12e %.12e %.12e\n", v[0], v[1], v[2]);
        out << buf;
    }
    for (const auto& f : mesh.faces) {
        out << 'f';
        for (int idx : f) out << ' ' << idx + 1;
        out << '\n';
    }
}

inline int euler_characteristic(const Mesh& mesh) {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : mesh.faces)
        for (size_t i = 0; i < f.size(); ++i) {
            const int a = f[i], b = f[(i + 1) % f.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return static_cast<int>(mesh.vertices.size()) - static_cast<int>(edges.size()) +
           static_cast<int>(mesh.faces.size());
}

}  // namespace ccsurf
