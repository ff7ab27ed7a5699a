// Command-line front end: every command reads JSON files, writes JSON (or CSV)
// with the fully resolved configuration next to the result.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "univalent/analysis.hpp"
#include "univalent/classes.hpp"
#include "univalent/functionals.hpp"
#include "univalent/optimize.hpp"
#include "univalent/schwarzian.hpp"
#include "univalent/serialization.hpp"

using namespace univalent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

struct Output {
    std::string path;
    std::string format = "json";
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

Json envelope(const std::string& command, Json config) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

void emit(const Output& out, const Json& j) { write_text(out.path, j.dump(2) + "\n"); }

std::string series_csv(const TaylorSeries& s) {
    std::string text = "n,re,im\n";
    for (int n = 0; n <= s.order(); ++n) {
        text += std::to_string(n) + "," + format_double(s[n].real()) + "," + format_double(s[n].imag()) + "\n";
    }
    return text;
}

void require_json(const Output& out, const std::string& command) {
    if (out.format != "json") throw Error(ErrorKind::InvalidArgument, command + " only writes JSON");
}

Complex parse_point(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw Error(ErrorKind::InvalidArgument, "bad point '" + text + "', expected re,im");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw Error(ErrorKind::InvalidArgument, "bad point '" + text + "', expected re,im");
    }
    std::string rest;
    if (in >> rest) throw Error(ErrorKind::InvalidArgument, "trailing text in point '" + text + "'");
    return {re, im};
}

GrowthModel growth_from_name(const std::string& name, const TaylorSeries& s) {
    if (name == "exact") return GrowthModel::exact();
    if (name == "bieberbach") return GrowthModel::bieberbach();
    if (name == "observed") return GrowthModel::observed_geometric(s);
    throw Error(ErrorKind::InvalidArgument, "unknown growth model '" + name + "'");
}

bool is_exterior(const Json& j) { return j.is_object() && (j.contains("exterior") || j.contains("leading")); }

// "a3", "c1", "zalcman3", "fekete-szego:0.5", "exterior-quadratic:0.01"
Target target_from_name(const std::string& name) {
    auto tail_number = [&](std::size_t pos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(name.substr(pos), &used);
            if (used != name.size() - pos) throw std::invalid_argument(name);
            return v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidArgument, "bad target '" + name + "'");
        }
    };
    auto tail_int = [&](std::size_t pos) {
        const double v = tail_number(pos);
        if (v != std::floor(v)) throw Error(ErrorKind::InvalidArgument, "bad target '" + name + "'");
        return static_cast<int>(v);
    };
    if (name.rfind("zalcman", 0) == 0) return Target::functional(zalcman_spec(tail_int(7)));
    if (name.rfind("fekete-szego:", 0) == 0) return Target::functional(fekete_szego_spec(tail_number(13)));
    if (name.rfind("exterior-quadratic:", 0) == 0) return Target::functional(exterior_quadratic_spec(tail_number(19)));
    if (name.size() > 1 && name[0] == 'a') return Target::coefficient(tail_int(1));
    if (name.size() > 1 && name[0] == 'c') return Target::schwarzian_coefficient(tail_int(1));
    throw Error(ErrorKind::InvalidArgument, "unknown target '" + name + "'");
}

struct KoebeArgs {
    double theta = 0.0;
    int order = 64;
    Output out;
};

int run_koebe(const KoebeArgs& a) {
    const SchlichtFunction k = koebe(a.theta, a.order);
    if (a.out.format == "csv") {
        write_text(a.out.path, series_csv(k.series()));
        return kExitOk;
    }
    Json config;
    config["theta"] = a.theta;
    config["order"] = a.order;
    Json j = envelope("koebe", std::move(config));
    j["series"] = to_json(k.series());
    emit(a.out, j);
    return kExitOk;
}

struct SchwarzianArgs {
    std::string input;
    Output out;
};

int run_schwarzian(const SchwarzianArgs& a) {
    const TaylorSeries f = series_from_json(read_json_file(a.input));
    const TaylorSeries s = schwarzian_derivative(f);
    if (a.out.format == "csv") {
        write_text(a.out.path, series_csv(s));
        return kExitOk;
    }
    Json config;
    config["input"] = a.input;
    config["input_order"] = f.order();
    Json j = envelope("schwarzian", std::move(config));
    j["order"] = s.order();
    j["series"] = to_json(s);
    emit(a.out, j);
    return kExitOk;
}

struct SolveArgs {
    std::string input;
    int order = 64;
    std::string z0 = "1,0";
    double theta = 0.0;
    bool canonical_only = false;
    std::string growth = "observed";
    double eval_radius = 0.995;
    double tail_tolerance = 1e-6;
    Output out;
};

int run_solve(const SolveArgs& a) {
    const TaylorSeries phi = series_from_json(read_json_file(a.input));
    const Complex z0 = parse_point(a.z0);
    std::vector<std::string> warnings;
    const bool gate = ahlfors_weill_gate(phi);
    if (!gate) {
        warnings.push_back("phi fails the Ahlfors-Weill gate; univalence of the solution is not guaranteed");
        std::cerr << "warning: " << warnings.back() << "\n";
    }
    const TaylorSeries w_can = solve_canonical(phi.padded(std::max(phi.order(), a.order)), a.order);

    Json config;
    config["input"] = a.input;
    config["order"] = a.order;
    config["canonical_only"] = a.canonical_only;
    if (!a.canonical_only) {
        config["z0"] = to_json(z0);
        config["theta"] = a.theta;
        config["growth"] = a.growth;
        config["eval_radius"] = a.eval_radius;
        config["tail_tolerance"] = a.tail_tolerance;
    }
    Json j = envelope("solve", std::move(config));
    j["gate_passed"] = gate;

    TaylorSeries result = w_can;
    if (a.canonical_only) {
        j["a2"] = to_json(w_can[2]);
    } else {
        NormalizeOptions opts;
        opts.eval_radius = a.eval_radius;
        opts.tail_tolerance = a.tail_tolerance;
        NormalizedSolution sol = normalize_fixed_point(w_can, z0, a.theta, growth_from_name(a.growth, w_can), opts);
        for (const auto& w : sol.warnings) {
            std::cerr << "warning: " << w << "\n";
            warnings.push_back(w);
        }
        result = sol.w;
        Json norm = to_json(sol);
        norm.erase("w");
        norm.erase("warnings");
        j["a2"] = to_json(sol.a2);
        j["normalization"] = std::move(norm);
    }
    j["warnings"] = warnings;
    j["canonical"] = to_json(w_can);
    j["series"] = to_json(result);
    if (a.out.format == "csv") {
        write_text(a.out.path, series_csv(result));
    } else {
        emit(a.out, j);
    }
    return kExitOk;
}

struct InvertArgs {
    std::string input;
    int order = -1;
    Output out;
};

int run_invert(const InvertArgs& a) {
    require_json(a.out, "invert");
    const Json in = read_json_file(a.input);
    Json config;
    config["input"] = a.input;
    if (is_exterior(in)) {
        const ExteriorFunction big_f = exterior_from_json(in);
        const int n = a.order >= 0 ? a.order : big_f.order() + 2;
        config["direction"] = "exterior_to_interior";
        config["order"] = n;
        const SchlichtFunction f = invert_to_s(big_f, n);
        Json j = envelope("invert", std::move(config));
        j["series"] = to_json(f.series());
        j["b0_plus_rotated_a2"] = n >= 2 ? std::abs(big_f.b[0] + std::polar(1.0, -2.0 * f.theta()) * f.a(2)) : 0.0;
        emit(a.out, j);
    } else {
        const SchlichtFunction f(series_from_json(in));
        const int m = a.order >= 0 ? a.order : f.order() - 2;
        config["direction"] = "interior_to_exterior";
        config["order"] = m;
        const ExteriorFunction big_f = invert_to_sigma(f, m);
        Json j = envelope("invert", std::move(config));
        j["exterior"] = to_json(big_f);
        emit(a.out, j);
    }
    return kExitOk;
}

struct FunctionalArgs {
    std::string input;
    std::string kind = "zalcman";
    int n = 3;
    double lambda = 1.0;
    double m_re = 0.0;
    double m_im = 0.0;
    std::string spec_file;
    bool symmetry = false;
    int grid = 16;
    Output out;
};

int run_functional(const FunctionalArgs& a) {
    require_json(a.out, "functional");
    FunctionalSpec spec;
    Json config;
    config["input"] = a.input;
    config["kind"] = a.kind;
    if (a.kind == "zalcman") {
        spec = zalcman_spec(a.n);
        config["n"] = a.n;
    } else if (a.kind == "coefficient") {
        spec = coefficient_spec(a.n);
        config["n"] = a.n;
    } else if (a.kind == "fekete-szego") {
        spec = fekete_szego_spec(a.lambda);
        config["lambda"] = a.lambda;
    } else if (a.kind == "exterior-quadratic") {
        spec = exterior_quadratic_spec({a.m_re, a.m_im});
        config["m"] = to_json(Complex{a.m_re, a.m_im});
    } else if (a.kind == "spec") {
        if (a.spec_file.empty()) throw Error(ErrorKind::InvalidArgument, "--kind spec needs --spec FILE");
        spec = functional_from_json(read_json_file(a.spec_file));
        config["spec_file"] = a.spec_file;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown functional kind '" + a.kind + "'");
    }
    config["symmetry"] = a.symmetry;
    if (a.symmetry) config["grid"] = a.grid;

    const SchlichtFunction f(series_from_json(read_json_file(a.input)));
    const Complex value = eval_functional(spec, f);
    Json j = envelope("functional", std::move(config));
    j["functional"] = to_json(spec);
    j["value"] = to_json(value);
    j["modulus"] = std::abs(value);
    if (a.symmetry) j["symmetry"] = to_json(symmetry_scan(spec, f, a.grid));
    emit(a.out, j);
    return kExitOk;
}

struct CoveringArgs {
    std::string input;
    std::optional<double> radius;
    std::vector<std::string> probes;
    double a2_sup = 2.0;
    std::optional<std::string> growth;
    int samples = 2048;
    double tail_tolerance = 1e-4;
    std::string curve_csv;
    Output out;
};

int run_covering(const CoveringArgs& a) {
    require_json(a.out, "covering");
    const Json in = read_json_file(a.input);
    Json config;
    config["input"] = a.input;
    config["a2_sup"] = a.a2_sup;
    config["samples"] = a.samples;

    if (is_exterior(in)) {
        const ExteriorFunction big_f = exterior_from_json(in);
        const double radius = a.radius.value_or(1.005);
        const std::string growth_name = big_f.exact ? "exact" : a.growth.value_or("observed");
        const GrowthModel growth = growth_from_name(growth_name, big_f.tail_series());
        config["mode"] = "enclosure";
        config["radius"] = radius;
        config["growth"] = growth_name;
        const EnclosureReport r = enclosure_check(big_f, a.a2_sup, radius, growth, -1.0, a.samples);
        Json j = envelope("covering", std::move(config));
        j["enclosure"] = to_json(r);
        emit(a.out, j);
        return kExitOk;
    }

    const SchlichtFunction w(series_from_json(in));
    const double radius = a.radius.value_or(0.9);
    std::vector<Complex> probes;
    Json probe_config = Json::array();
    for (const auto& p : a.probes) {
        probes.push_back(parse_point(p));
        probe_config.push_back(to_json(probes.back()));
    }
    config["mode"] = "covering";
    config["radius"] = radius;
    config["probes"] = std::move(probe_config);
    const std::string growth_name = a.growth.value_or("bieberbach");
    config["growth"] = growth_name;
    config["tail_tolerance"] = a.tail_tolerance;
    CoveringOptions opts;
    opts.samples = a.samples;
    opts.tail_tolerance = a.tail_tolerance;
    const CoveringReport r = covering_check(w, a.a2_sup, radius, probes, growth_from_name(growth_name, w.series()), opts);
    if (!a.curve_csv.empty()) {
        std::string text = "theta,re,im\n";
        for (std::size_t i = 0; i < r.curve.size(); ++i) {
            text += format_double(r.curve_angles[i]) + "," + format_double(r.curve[i].real()) + "," +
                    format_double(r.curve[i].imag()) + "\n";
        }
        write_text(a.curve_csv, text);
        config["curve_csv"] = a.curve_csv;
    }
    Json j = envelope("covering", std::move(config));
    j["covering"] = to_json(r);
    emit(a.out, j);
    return kExitOk;
}

struct NormsArgs {
    std::string input;
    int radii = 64;
    int angles = 256;
    Output out;
};

int run_norms(const NormsArgs& a) {
    const TaylorSeries phi = series_from_json(read_json_file(a.input));
    const NormPair n = norm_pair(phi, a.radii, a.angles);
    const bool gate = ahlfors_weill_gate(phi, GrowthModel::exact(), a.radii, a.angles);
    const NormInequality ineq = norm_inequality_check(phi, a.radii, a.angles);
    if (a.out.format == "csv") {
        write_text(a.out.path, "a2_paper,a2_area,b_norm,ratio_b_over_a2paper,gate_passed,inequality_ok\n" +
                                   format_double(n.a2_paper) + "," + format_double(n.a2_area) + "," +
                                   format_double(n.b_norm) + "," + format_double(n.ratio_b_over_a2paper) + "," +
                                   (gate ? "true" : "false") + "," + (ineq.ok ? "true" : "false") + "\n");
        return kExitOk;
    }
    Json config;
    config["input"] = a.input;
    config["radii"] = a.radii;
    config["angles"] = a.angles;
    Json j = envelope("norms", std::move(config));
    j["norms"] = to_json(n);
    j["gate_passed"] = gate;
    Json iq;
    iq["lhs"] = ineq.lhs;
    iq["rhs"] = ineq.rhs;
    iq["ok"] = ineq.ok;
    j["inequality"] = std::move(iq);
    emit(a.out, j);
    return kExitOk;
}

struct OptimizeArgs {
    std::string config_file;
    int dim = 3;
    double radius = kBallRadius;
    std::string norm_mode = "area";
    std::string target = "a2";
    std::string functional_file;
    int starts = 64;
    int iterations = 400;
    double shrink_tolerance = 1e-8;
    int z0_grid = 32;
    int theta_grid = 8;
    int order = 64;
    int verify_order = 256;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string trace_csv;
    Output out;
};

int run_optimize(const OptimizeArgs& a, const CLI::App& cmd) {
    require_json(a.out, "optimize");
    MaximizeConfig c;
    if (!a.config_file.empty()) c = maximize_config_from_json(read_json_file(a.config_file).value("config", Json::object()));
    auto given = [&](const char* name) { return a.config_file.empty() || cmd.count(name) > 0; };
    if (given("--ball-dim")) c.ball.dim = a.dim;
    if (given("--ball-radius")) c.ball.radius = a.radius;
    if (given("--norm-mode")) c.ball.norm_mode = norm_mode_from_string(a.norm_mode);
    if (!a.functional_file.empty()) {
        c.target = Target::functional(functional_from_json(read_json_file(a.functional_file)));
    } else if (given("--target")) {
        c.target = target_from_name(a.target);
    }
    if (given("--starts")) c.starts = a.starts;
    if (given("--iterations")) c.max_iterations = a.iterations;
    if (given("--shrink-tolerance")) c.shrink_tolerance = a.shrink_tolerance;
    if (given("--z0-grid")) c.z0_grid = a.z0_grid;
    if (given("--theta-grid")) c.theta_grid = a.theta_grid;
    if (given("--order")) c.order = a.order;
    if (given("--verify-order")) c.verify_order = a.verify_order;
    if (given("--seed")) c.seed = a.seed;
    c.threads = a.threads;
    c.validate();

    const ExtremalRun run = maximize(c);
    if (!a.trace_csv.empty()) {
        std::string text = "iteration,value,cell,start,evaluations,failed\n";
        for (const auto& e : run.trace) {
            text += std::to_string(e.iteration) + "," + format_double(e.value) + "," + std::to_string(e.cell) + "," +
                    std::to_string(e.start) + "," + std::to_string(e.evaluations) + "," + (e.failed ? "1" : "0") + "\n";
        }
        write_text(a.trace_csv, text);
    }
    Json j = envelope("optimize", to_json(c));
    Json body = to_json(run);
    body.erase("config");
    for (auto& [key, value] : body.items()) j[key] = value;
    emit(a.out, j);
    return kExitOk;
}

struct ReportArgs {
    std::vector<std::string> inputs;
    Output out;
};

int run_report(const ReportArgs& a) {
    require_json(a.out, "report");
    std::vector<ExtremalRun> runs;
    for (const auto& path : a.inputs) {
        Json in = read_json_file(path);
        // optimize output keeps the run fields at top level
        if (!in.contains("config")) throw Error(ErrorKind::InvalidArgument, "'" + path + "' is not an optimize run");
        runs.push_back(extremal_run_from_json(in));
    }
    const ConsistencyReport report = consistency_report(runs);
    Json config;
    config["inputs"] = a.inputs;
    Json j = envelope("report", std::move(config));
    j["report"] = to_json(report);
    emit(a.out, j);
    return kExitOk;
}

void add_output(CLI::App* cmd, Output& out) {
    cmd->add_option("-o,--out", out.path, "Output file (default stdout)");
    cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Univalent function toolkit: Schwarzian derivatives, inversion, functionals, extremal search"};
    app.require_subcommand(1);

    KoebeArgs koebe_args;
    auto* koebe_cmd = app.add_subcommand("koebe", "Write the rotated Koebe function as a series");
    koebe_cmd->add_option("--theta", koebe_args.theta, "Rotation angle");
    koebe_cmd->add_option("-N,--order", koebe_args.order, "Truncation order");
    add_output(koebe_cmd, koebe_args.out);

    SchwarzianArgs schwarzian_args;
    auto* schwarzian_cmd = app.add_subcommand("schwarzian", "Schwarzian derivative of a series");
    schwarzian_cmd->add_option("input", schwarzian_args.input, "Series JSON")->required();
    add_output(schwarzian_cmd, schwarzian_args.out);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve S_w = phi and normalize at a boundary fixed point");
    solve_cmd->add_option("input", solve_args.input, "phi series JSON")->required();
    solve_cmd->add_option("-N,--order", solve_args.order, "Truncation order of w");
    solve_cmd->add_option("--z0", solve_args.z0, "Unimodular fixed point as re,im");
    solve_cmd->add_option("--theta", solve_args.theta, "Rotation angle of w'(0)");
    solve_cmd->add_flag("--canonical-only", solve_args.canonical_only, "Skip the Moebius normalization");
    solve_cmd->add_option("--growth", solve_args.growth, "Tail model: observed, bieberbach, exact");
    solve_cmd->add_option("--eval-radius", solve_args.eval_radius, "Radius of the fixed point reading");
    solve_cmd->add_option("--tail-tolerance", solve_args.tail_tolerance, "Largest admissible tail bound");
    add_output(solve_cmd, solve_args.out);

    InvertArgs invert_args;
    auto* invert_cmd = app.add_subcommand("invert", "f(z) <-> F(zeta) = 1/f(1/zeta); direction follows the input");
    invert_cmd->add_option("input", invert_args.input, "Series or exterior JSON")->required();
    invert_cmd->add_option("-N,--order", invert_args.order, "Output order (default: as much as the input allows)");
    add_output(invert_cmd, invert_args.out);

    FunctionalArgs functional_args;
    auto* functional_cmd = app.add_subcommand("functional", "Evaluate a coefficient functional");
    functional_cmd->add_option("input", functional_args.input, "Series JSON")->required();
    functional_cmd->add_option("--kind", functional_args.kind, "zalcman, coefficient, fekete-szego, exterior-quadratic, spec");
    functional_cmd->add_option("--n", functional_args.n, "Index for zalcman and coefficient");
    functional_cmd->add_option("--lambda", functional_args.lambda, "Fekete-Szego parameter");
    functional_cmd->add_option("--m", functional_args.m_re, "Real part of M");
    functional_cmd->add_option("--m-imag", functional_args.m_im, "Imaginary part of M");
    functional_cmd->add_option("--spec", functional_args.spec_file, "FunctionalSpec JSON");
    functional_cmd->add_flag("--symmetry", functional_args.symmetry, "Also classify rotation symmetry");
    functional_cmd->add_option("--grid", functional_args.grid, "Symmetry scan grid size");
    add_output(functional_cmd, functional_args.out);

    CoveringArgs covering_args;
    auto* covering_cmd = app.add_subcommand("covering", "Covering check (interior series) or enclosure check (exterior)");
    covering_cmd->add_option("input", covering_args.input, "Series or exterior JSON")->required();
    covering_cmd->add_option("--radius", covering_args.radius, "Sampling radius (default 0.9 inside, 1.005 outside)");
    covering_cmd->add_option("--probe", covering_args.probes, "Probe point re,im (repeatable; write --probe=-0.2,0)");
    covering_cmd->add_option("--a2-sup", covering_args.a2_sup, "Assumed bound on |a_2|");
    covering_cmd->add_option("--growth", covering_args.growth, "Tail model: bieberbach (default inside), observed (default outside), exact");
    covering_cmd->add_option("--samples", covering_args.samples, "Curve samples");
    covering_cmd->add_option("--tail-tolerance", covering_args.tail_tolerance, "Largest admissible tail bound");
    covering_cmd->add_option("--curve-csv", covering_args.curve_csv, "Write the sampled curve as CSV");
    add_output(covering_cmd, covering_args.out);

    NormsArgs norms_args;
    auto* norms_cmd = app.add_subcommand("norms", "A2 and B norms of a quadratic differential");
    norms_cmd->add_option("input", norms_args.input, "phi series JSON")->required();
    norms_cmd->add_option("--radii", norms_args.radii, "Radial grid size");
    norms_cmd->add_option("--angles", norms_args.angles, "Angular grid size");
    add_output(norms_cmd, norms_args.out);

    OptimizeArgs optimize_args;
    auto* optimize_cmd = app.add_subcommand("optimize", "Maximize a target over a ball of Schwarzians");
    optimize_cmd->add_option("--config", optimize_args.config_file, "Start from the config block of an earlier run");
    optimize_cmd->add_option("--ball-dim", optimize_args.dim, "Number of free coefficients");
    optimize_cmd->add_option("--ball-radius", optimize_args.radius, "Ball radius");
    optimize_cmd->add_option("--norm-mode", optimize_args.norm_mode, "area or paper");
    optimize_cmd->add_option("--target", optimize_args.target, "a<n>, c<n>, zalcman<n>, fekete-szego:<l>, exterior-quadratic:<M>");
    optimize_cmd->add_option("--functional", optimize_args.functional_file, "FunctionalSpec JSON target");
    optimize_cmd->add_option("--starts", optimize_args.starts, "Local searches per grid cell");
    optimize_cmd->add_option("--iterations", optimize_args.iterations, "Simplex iterations per search");
    optimize_cmd->add_option("--shrink-tolerance", optimize_args.shrink_tolerance, "Simplex size at which a search stops");
    optimize_cmd->add_option("--z0-grid", optimize_args.z0_grid, "Fixed points on the unit circle");
    optimize_cmd->add_option("--theta-grid", optimize_args.theta_grid, "Rotation angles");
    optimize_cmd->add_option("-N,--order", optimize_args.order, "Truncation order during the search");
    optimize_cmd->add_option("--verify-order", optimize_args.verify_order, "Truncation order of the final check");
    optimize_cmd->add_option("--seed", optimize_args.seed, "Random seed");
    optimize_cmd->add_option("--threads", optimize_args.threads, "Worker threads (0: all cores; no effect on results)");
    optimize_cmd->add_option("--trace-csv", optimize_args.trace_csv, "Write the trace as CSV");
    add_output(optimize_cmd, optimize_args.out);

    ReportArgs report_args;
    auto* report_cmd = app.add_subcommand("report", "Consistency report across optimize runs");
    report_cmd->add_option("inputs", report_args.inputs, "Optimize output files")->required()->expected(2, -1);
    add_output(report_cmd, report_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*koebe_cmd) return run_koebe(koebe_args);
        if (*schwarzian_cmd) return run_schwarzian(schwarzian_args);
        if (*solve_cmd) return run_solve(solve_args);
        if (*invert_cmd) return run_invert(invert_args);
        if (*functional_cmd) return run_functional(functional_args);
        if (*covering_cmd) return run_covering(covering_args);
        if (*norms_cmd) return run_norms(norms_args);
        if (*optimize_cmd) return run_optimize(optimize_args, *optimize_cmd);
        if (*report_cmd) return run_report(report_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.category()) {
            case ErrorCategory::Input: return kExitInput;
            case ErrorCategory::Domain: return kExitDomain;
            case ErrorCategory::Internal: return kExitInternal;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
