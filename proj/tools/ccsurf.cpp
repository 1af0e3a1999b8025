// ccsurf command line: classify curvatures, generate meshes and point
// clouds, run the verification battery, and reconstruct the rotational
// sphere from its curvature. Exit code 0 on success, 1 when a check fails or
// a bound is violated, 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ccsurf/ambient.hpp"
#include "ccsurf/config.hpp"
#include "ccsurf/json.hpp"
#include "ccsurf/mesh.hpp"
#include "ccsurf/reconstruct.hpp"
#include "ccsurf/revolution.hpp"
#include "ccsurf/verify.hpp"

namespace {

using namespace ccsurf;

Space parse_space(const std::string& s) {
    if (s == "h2r") return Space::H2R;
    if (s == "s2r") return Space::S2R;
    throw CLI::ValidationError("--space must be h2r or s2r");
}

FamilyTag parse_family(Space space, const std::string& name) {
    if (name == "sphere")
        return space == Space::H2R ? FamilyTag::H2R_SpherePositiveK : FamilyTag::S2R_SphereKGe1;
    if (name == "cylinder")
        return space == Space::H2R ? FamilyTag::H2R_FlatCylinder : FamilyTag::S2R_FlatCylinder;
    if (space == Space::H2R) {
        if (name == "axis-graph") return FamilyTag::H2R_FlatAxisGraph;
        if (name == "negk-axis") return FamilyTag::H2R_NegKAxis;
        if (name == "negk-exp") return FamilyTag::H2R_NegKExponential;
        if (name == "negk-cosh") return FamilyTag::H2R_NegKCoshC;
    }
    throw std::invalid_argument("unknown family for " + std::string(space_name(space)) + ": " +
                                name);
}

FamilyTag default_family(Space space, double K) {
    if (space == Space::H2R) {
        if (K > 0.0) return FamilyTag::H2R_SpherePositiveK;
        if (K == 0.0) return FamilyTag::H2R_FlatCylinder;
        return FamilyTag::H2R_NegKAxis;
    }
    return K >= 1.0 ? FamilyTag::S2R_SphereKGe1 : FamilyTag::S2R_FlatCylinder;
}

struct Cli {
    std::string space_str = "h2r";
    double K = 1.0;
    std::string family;
    std::string projection;
    std::string out;
    std::string config_path;
    RunConfig cfg;

    // options whose CLI value overrides the config file
    CLI::Option* opt_samples = nullptr;
    CLI::Option* opt_grid = nullptr;
    CLI::Option* opt_radius = nullptr;
    CLI::Option* opt_step = nullptr;
    int samples = 0;
    int grid = 0;
    double radius = 0.0;
    double step = 0.0;

    void finalize() {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (opt_samples && opt_samples->count()) cfg.samples = samples;
        if (opt_grid && opt_grid->count()) cfg.grid = grid;
        if (opt_radius && opt_radius->count()) cfg.radius = radius;
        if (opt_step && opt_step->count()) cfg.step = step;
    }
};

void add_common(CLI::App* cmd, Cli& c, bool need_k = true) {
    cmd->add_option("--space", c.space_str, "ambient space")
        ->check(CLI::IsMember({"h2r", "s2r"}));
    auto* k = cmd->add_option("--k", c.K, "Gaussian curvature of the surface");
    if (need_k) k->required();
    cmd->add_option("--config", c.config_path, "key=value config file");
    cmd->add_option("--out", c.out, "output path");
}

int cmd_classify(Cli& c) {
    c.finalize();
    const std::string text = format_verdict(classify(parse_space(c.space_str), c.K));
    std::cout << text << '\n';
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open output file: " + c.out);
        f << text << '\n';
    }
    return 0;
}

int cmd_generate(Cli& c) {
    c.finalize();
    const Space space = parse_space(c.space_str);
    const FamilyTag tag =
        c.family.empty() ? default_family(space, c.K) : parse_family(space, c.family);
    if (c.out.empty()) throw std::invalid_argument("generate requires --out");
    const ProfileCurve prof = profile(space, c.K, tag);
    const ImmersionChart chart = immersion_from_profile(space, prof);

    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open output file: " + c.out);

    const std::string proj_name =
        c.projection.empty() ? default_projection(space) : c.projection;
    if (proj_name == "raw") {
        f << "x1,x2,x3,x4\n";
        char buf[160];
        const int n = c.cfg.grid;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j < n; ++j) {
                const double u =
                    chart.domain.ulo + (chart.domain.uhi - chart.domain.ulo) * i / n;
                const Vec4 p = chart.psi(u, 2.0 * M_PI * j / n);
                std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e\n", p[0], p[1], p[2],
                              p[3]);
                f << buf;
            }
        return 0;
    }

    const bool closed =
        tag == FamilyTag::H2R_SpherePositiveK || tag == FamilyTag::S2R_SphereKGe1;
    const Mesh mesh =
        mesh_from_chart(chart, c.cfg.grid, c.cfg.grid, projection_by_name(proj_name), closed);
    write_obj(f, mesh);
    return 0;
}

int cmd_verify(Cli& c) {
    c.finalize();
    const Space space = parse_space(c.space_str);
    const FamilyTag tag =
        c.family.empty() ? default_family(space, c.K) : parse_family(space, c.family);
    const VerificationReport rep = run_verification(space, c.K, tag, c.cfg);
    const std::string text = report_to_json(rep).dump();
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open output file: " + c.out);
        f << text;
        for (const CheckResult& chk : rep.checks)
            std::cerr << chk.name << ": " << chk.status << '\n';
    }
    return rep.passed() ? 0 : 1;
}

int cmd_reconstruct(Cli& c) {
    c.finalize();
    const Space space = parse_space(c.space_str);
    const HeightField field =
        reconstruct_height_field(space, c.K, c.cfg.radius, c.cfg.step, c.cfg.rays);

    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot open output file: " + c.out);
        f << "u,v,rho,theta,h,h_u,h_v\n";
        char buf[200];
        for (int r = 0; r < field.n_rays; ++r)
            for (int i = 0; i < field.n_nodes; ++i) {
                const double rho = field.rho[i], th = field.theta[r];
                const JetState& s = field.at(r, i);
                std::snprintf(buf, sizeof buf,
                              "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n",
                              rho * std::cos(th), rho * std::sin(th), rho, th, s.h, s.p, s.q);
                f << buf;
            }
    }

    char line[160];
    auto emit = [&line](const char* fmt, auto... args) {
        std::snprintf(line, sizeof line, fmt, args...);
        std::cout << line;
    };
    emit("space: %s\n", space_name(space));
    emit("K: %.6g\n", field.K);
    emit("radius requested: %.6g\n", field.radius_requested);
    emit("radius reached: %.6g\n", field.radius_reached);
    emit("rays: %d\n", field.n_rays);
    emit("radial nodes: %d\n", field.n_nodes);
    emit("step: %.6g\n", field.step);
    emit("branch exited: %s\n", field.branch_exited ? "yes" : "no");
    emit("min nu: %.6g\n", field.min_nu);
    emit("max |grad h|^2: %.6g\n", field.max_gradnorm2);
    if (std::isnan(field.equator_rho)) std::cout << "equator radius: none\n";
    else emit("equator radius: %.6g\n", field.equator_rho);
    emit("max frame defect: %.6g\n", field.max_frame_defect);
    emit("max height error vs rotational sphere: %.6g\n", oracle_max_error(field));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-curvature surfaces in H2xR and S2xR"};
    app.require_subcommand(1);
    Cli ccl, cgen, cver, crec;

    CLI::App* cl = app.add_subcommand("classify", "verdict for a curvature value");
    add_common(cl, ccl);

    CLI::App* gen = app.add_subcommand("generate", "mesh or point cloud of a surface");
    add_common(gen, cgen);
    gen->add_option("--family", cgen.family, "profile family tag");
    gen->add_option("--projection", cgen.projection,
                    "poincare | stereographic | stereographic-south | raw");
    cgen.opt_grid = gen->add_option("--grid", cgen.grid, "mesh grid resolution");
    cgen.opt_samples = gen->add_option("--samples", cgen.samples, "profile sample count");

    CLI::App* ver = app.add_subcommand("verify", "run the verification battery");
    add_common(ver, cver);
    ver->add_option("--family", cver.family, "profile family tag");
    cver.opt_grid = ver->add_option("--grid", cver.grid, "verification grid resolution");
    cver.opt_samples = ver->add_option("--samples", cver.samples, "sweep sample count");

    CLI::App* rec = app.add_subcommand("reconstruct", "integrate the height field from K");
    add_common(rec, crec);
    crec.opt_radius =
        rec->add_option("--radius", crec.radius, "disk radius in the conformal model");
    crec.opt_step = rec->add_option("--step", crec.step, "RK4 step size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cl->parsed()) return cmd_classify(ccl);
        if (gen->parsed()) return cmd_generate(cgen);
        if (ver->parsed()) return cmd_verify(cver);
        if (rec->parsed()) return cmd_reconstruct(crec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
