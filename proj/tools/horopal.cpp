// command-line front end: body I/O, experiment drivers, CSV reporting and
// SVG figure rendering

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "horopal/bodyspec.hpp"
#include "horopal/experiments.hpp"
#include "horopal/svg.hpp"

namespace {

using namespace horopal;

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

BoundaryBody body_from_spec(const BodySpec& spec, HConvexBody& hk, ConvexBody& ck, bool& hconv) {
    hconv = spec.kind == "hconvex";
    if (hconv) {
        hk = hconvex_hull(spec.generators);
        return as_body(hk);
    }
    ck = convex_hull(spec.generators);
    return as_body(ck);
}

int cmd_width(const std::string& input, const std::string& method, int samples, double tol) {
    BodySpec spec = load_bodyspec(input);
    HConvexBody hk;
    ConvexBody ck;
    bool hconv = false;
    BoundaryBody body = body_from_spec(spec, hk, ck, hconv);
    if (body.degenerate) {
        std::cout << "degenerate body: width 0\n";
        return 0;
    }
    WidthMethod m = method == "oracle" ? WidthMethod::oracle : WidthMethod::refine;
    WidthResult res = lassak_width(body, m, samples);
    std::cout.precision(12);
    std::cout << "width " << res.width << "\n";
    std::cout << "touch_line " << res.cert.touch_line.x << " " << res.cert.touch_line.y << "\n";
    std::cout << "touch_hyper " << res.cert.touch_hyper.x << " " << res.cert.touch_hyper.y
              << "\n";
    std::cout << "orthogonality_residue " << res.cert.orthogonality_residue << "\n";
    std::cout << "near_ties " << res.cert.near_ties.size() << "\n";
    std::cout << "certificate_ok " << (res.cert.orthogonality_residue < tol ? 1 : 0) << "\n";
    return 0;
}

int cmd_hull(const std::string& input, const std::string& out_path) {
    BodySpec spec = load_bodyspec(input);
    if (spec.kind == "convex") {
        ConvexBody K = convex_hull(spec.generators);
        std::cout << "kind convex\nvertices " << K.vertices.size() << "\n";
        std::cout << "degenerate " << (K.degenerate ? 1 : 0) << "\n";
        if (!K.degenerate) std::cout << "area " << area(make_region(K.boundary)) << "\n";
    } else {
        HConvexBody K = hconvex_hull(spec.generators);
        std::cout << "kind hconvex\nvertices " << K.vertices.size() << "\n";
        std::cout << "degenerate " << (K.degenerate ? 1 : 0) << "\n";
        if (!K.degenerate) {
            std::cout << "area " << area(make_region(K.boundary)) << "\n";
            std::cout << "incircle " << K.incircle_cache.center.x << " "
                      << K.incircle_cache.center.y << " " << K.incircle_cache.radius << "\n";
            std::cout << "circumcircle " << K.circumcircle_cache.center.x << " "
                      << K.circumcircle_cache.center.y << " " << K.circumcircle_cache.radius
                      << "\n";
        }
        if (!out_path.empty()) {
            BodySpec out;
            out.kind = "hconvex";
            out.label = spec.label;
            out.generators = K.vertices;
            std::ofstream f(out_path);
            f << to_json(out) << "\n";
        }
    }
    return 0;
}

int cmd_triangle(double w, double r) {
    RegularHorocyclicTriangle T = r > 0.0 ? regular_triangle_from_inradius(r) : t_w(w);
    std::cout << "inradius " << T.inradius << "\n";
    std::cout << "circumradius " << T.circumradius << "\n";
    std::cout << "width " << T.width << "\n";
    std::cout << "aleph " << T.aleph << "\n";
    for (int j = 0; j < 3; ++j)
        std::cout << "vertex " << T.vertices[j].x << " " << T.vertices[j].y << "\n";
    std::cout << "area " << area(T.region()) << "\n";
    return 0;
}

int cmd_render(const std::string& scene_name, const std::string& input, double w, double rs,
               const std::string& out_path) {
    SvgScene scene;
    if (scene_name == "tw") {
        RegularHorocyclicTriangle T = t_w(w);
        scene.add_chain(T.body().boundary);
        scene.add_curve(circle_curve(origin, T.inradius), "#27ae60");
        for (const HPoint& v : T.vertices) scene.points.push_back(v);
    } else if (scene_name == "kr") {
        ConvexBody K = k_r(rs);
        scene.add_chain(K.boundary);
        scene.add_curve(circle_curve(origin, rs), "#27ae60");
    } else if (scene_name == "body") {
        BodySpec spec = load_bodyspec(input);
        HConvexBody hk;
        ConvexBody ck;
        bool hconv = false;
        BoundaryBody body = body_from_spec(spec, hk, ck, hconv);
        scene.add_chain(body.arcs);
        for (const HPoint& p : spec.generators) scene.points.push_back(p);
    } else if (scene_name != "empty") {
        std::cerr << "unknown scene: " << scene_name << "\n";
        return 2;
    }
    write_svg(scene, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_experiment(const std::string& name, const std::string& out_path, uint64_t seed,
                   int trials, int points, int grid, double w, const std::string& rs,
                   const std::string& eps) {
    ExperimentReport rep;
    if (name == "nopal") {
        rep = exp_nopal(parse_list(rs));
    } else if (name == "steinhagen") {
        rep = exp_steinhagen(trials, points, seed);
    } else if (name == "pal") {
        rep = exp_pal(trials, points, seed);
    } else if (name == "monotone") {
        rep = exp_monotone(w, grid);
    } else if (name == "stability") {
        rep = exp_stability(w, parse_list(eps), seed);
    } else {
        std::cerr << "unknown experiment: " << name << "\n";
        return 2;
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        rep.write_csv(f);
    } else {
        rep.write_csv(std::cout);
    }
    rep.print_summary(std::cout);
    if (!rep.all_pass()) {
        // print the witness bodies' parameters for reproduction
        std::cerr << "assertion failures; seed " << rep.seed << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic-plane convexity toolkit"};
    app.require_subcommand(1);

    std::string input, out_path, method = "refine", scene = "empty";
    std::string rs = "0.2,0.1,0.05,0.025", eps = "0.005,0.01,0.02,0.05,0.1";
    uint64_t seed = 0;
    int trials = 100, points = 8, grid = 64, samples = 720;
    double w = 1.0, r = 0.0, tol = 1e-6;

    auto* width_cmd = app.add_subcommand("width", "minimal Lassak width of a body");
    width_cmd->add_option("--input", input, "BodySpec JSON path")->required();
    width_cmd->add_option("--method", method, "oracle|refine");
    width_cmd->add_option("--samples", samples, "sweep positions");
    width_cmd->add_option("--tol", tol, "tolerance");

    auto* hull_cmd = app.add_subcommand("hull", "hull of a generator set");
    hull_cmd->add_option("--input", input, "BodySpec JSON path")->required();
    hull_cmd->add_option("--out", out_path, "write hull vertices as BodySpec JSON");

    auto* tri_cmd = app.add_subcommand("triangle", "regular horocyclic triangle");
    tri_cmd->add_option("--w", w, "target minimal Lassak width");
    tri_cmd->add_option("--r", r, "inradius (overrides --w)");

    auto* render_cmd = app.add_subcommand("render", "render a scene to SVG");
    render_cmd->add_option("--scene", scene, "tw|kr|body|empty");
    render_cmd->add_option("--input", input, "BodySpec JSON path for --scene body");
    render_cmd->add_option("--w", w, "width for --scene tw");
    render_cmd->add_option("--rs", rs, "r for --scene kr");
    render_cmd->add_option("--out", out_path, "output SVG path")->required();

    auto* exp_cmd = app.add_subcommand(
        "experiment",
        "run a theorem experiment; CSV columns are fixed per experiment:\n"
        "  nopal:      r,g_r,width,width_bound,volume,cone_bound\n"
        "  steinhagen: trial,width,inradius,inradius_tw,ratio\n"
        "  pal:        trial,width,volume,volume_tw,ratio,near_equality,haus_to_tw\n"
        "  monotone:   rho,v_delta,v_gamma,v_c,alpha,delta_minus,delta_plus\n"
        "  stability:  eps,t_bump,delta_bump,bump_ratio,rho_cap,delta_cap,cap_ratio");
    std::string exp_name;
    exp_cmd->add_option("name", exp_name, "nopal|steinhagen|pal|monotone|stability")->required();
    exp_cmd->add_option("--out", out_path, "CSV output path");
    exp_cmd->add_option("--seed", seed, "RNG seed");
    exp_cmd->add_option("--trials", trials, "number of trials");
    exp_cmd->add_option("--points", points, "generators per random body");
    exp_cmd->add_option("--grid", grid, "rho-grid size");
    exp_cmd->add_option("--w", w, "target width");
    exp_cmd->add_option("--rs", rs, "comma-separated r values");
    exp_cmd->add_option("--eps", eps, "comma-separated eps values");
    exp_cmd->add_option("--tol", tol, "tolerance");
    exp_cmd->add_option("--samples", samples, "quadrature samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*width_cmd) return cmd_width(input, method, samples, tol);
        if (*hull_cmd) return cmd_hull(input, out_path);
        if (*tri_cmd) return cmd_triangle(w, r);
        if (*render_cmd) {
            double kr_r = parse_list(rs).empty() ? 0.1 : parse_list(rs).front();
            return cmd_render(scene, input, w, kr_r, out_path);
        }
        if (*exp_cmd)
            return run_experiment(exp_name, out_path, seed, trials, points, grid, w, rs, eps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
