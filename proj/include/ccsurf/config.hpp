#pragma once

// Run configuration shared by the CLI subcommands: tolerances, grid sizes,
// and integrator parameters, overridable from a key=value config file.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ccsurf {

struct RunConfig {
    double tol_algebraic = 1e-9;  // identities that only use exact chart jets
    double tol_fd = 1e-4;         // residuals limited by finite differencing
    double fd_step = 1e-5;
    double pole_collar = 0.05;    // fraction of the window trimmed at each end
    int grid = 40;
    int samples = 200;
    double simpson_tol = 1e-10;
    double bisection_tol = 1e-12;
    long long seed = 7261946;
    double step = 1e-3;
    double radius = 0.5;
    int rays = 64;
};

namespace detail {

inline void assign_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto as_double = [&value, &key]() {
        size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("bad numeric value for config key: " + key);
        return x;
    };
    auto as_int = [&]() { return static_cast<long long>(as_double()); };

    if (key == "tol_algebraic") cfg.tol_algebraic = as_double();
    else if (key == "tol_fd") cfg.tol_fd = as_double();
    else if (key == "fd_step") cfg.fd_step = as_double();
    else if (key == "pole_collar") cfg.pole_collar = as_double();
    else if (key == "grid") cfg.grid = static_cast<int>(as_int());
    else if (key == "samples") cfg.samples = static_cast<int>(as_int());
    else if (key == "simpson_tol") cfg.simpson_tol = as_double();
    else if (key == "bisection_tol") cfg.bisection_tol = as_double();
    else if (key == "seed") cfg.seed = as_int();
    else if (key == "step") cfg.step = as_double();
    else if (key == "radius") cfg.radius = as_double();
    else if (key == "rays") cfg.rays = static_cast<int>(as_int());
    else throw std::invalid_argument("unknown config key: " + key);
}

}  // namespace detail

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                     " is not key=value");
        auto trim = [](std::string s) {
            const size_t x = s.find_first_not_of(" \t");
            const size_t y = s.find_last_not_of(" \t");
            return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
        };
        detail::assign_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace ccsurf
