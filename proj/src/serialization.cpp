#include "univalent/serialization.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace univalent {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

template <typename T>
T optional_field(const Json& j, const char* key, T fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

Json complex_array(std::span<const Complex> values) {
    Json out = Json::array();
    for (const Complex& z : values) out.push_back(to_json(z));
    return out;
}

std::vector<Complex> complex_vector(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

std::string kind_name(Target::Kind k) {
    switch (k) {
        case Target::Kind::Coefficient: return "coefficient";
        case Target::Kind::SchwarzianCoefficient: return "schwarzian_coefficient";
        case Target::Kind::Functional: return "functional";
    }
    return "coefficient";
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        bad("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const TaylorSeries& s) { return complex_array(s.coeffs()); }

TaylorSeries series_from_json(const Json& j) {
    const Json& arr = j.is_object() ? field(j, "series") : j;
    std::vector<Complex> c = complex_vector(arr, "series");
    if (c.empty()) bad("series must have at least one coefficient");
    return TaylorSeries(std::move(c));
}

Json to_json(const ExteriorFunction& f) {
    Json j;
    j["leading"] = to_json(f.leading);
    j["b"] = complex_array(f.b);
    j["exact"] = f.exact;
    return j;
}

ExteriorFunction exterior_from_json(const Json& j) {
    const Json& src = j.contains("exterior") ? j["exterior"] : j;
    return ExteriorFunction(complex_from_json(field(src, "leading")), complex_vector(field(src, "b"), "b"),
                            optional_field<bool>(src, "exact", false));
}

Json to_json(const FunctionalSpec& spec) {
    Json j;
    j["name"] = spec.name;
    Json terms = Json::array();
    for (const auto& t : spec.terms) {
        Json mono = Json::array();
        for (const auto& f : t.monomial) mono.push_back(Json::array({f.index, f.exponent}));
        Json term;
        term["w"] = to_json(t.weight);
        term["mono"] = std::move(mono);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

FunctionalSpec functional_from_json(const Json& j) {
    FunctionalSpec spec;
    spec.name = optional_field<std::string>(j, "name", "functional");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    for (const auto& t : terms) {
        Term term{complex_from_json(field(t, "w")), {}};
        const Json& mono = field(t, "mono");
        if (!mono.is_array()) bad("'mono' must be an array of [index, exponent]");
        for (const auto& f : mono) {
            if (!f.is_array() || f.size() != 2) bad("monomial factors are [index, exponent]");
            term.monomial.push_back({integer(f[0], "index"), integer(f[1], "exponent")});
        }
        spec.terms.push_back(std::move(term));
    }
    spec.validate();
    return spec;
}

Json to_json(const NormPair& n) {
    Json j;
    j["a2_paper"] = n.a2_paper;
    j["a2_area"] = n.a2_area;
    j["b_norm"] = n.b_norm;
    j["ratio_b_over_a2paper"] = n.ratio_b_over_a2paper;
    return j;
}

Json to_json(const CoveringReport& r) {
    Json j;
    j["radius_estimate"] = r.radius_estimate;
    j["eval_radius"] = r.eval_radius;
    j["tail_bound"] = r.tail_bound;
    j["max_spacing"] = r.max_spacing;
    j["a2_sup"] = r.a2_sup;
    j["guaranteed_radius"] = 1.0 / (2.0 * r.a2_sup);
    j["certified"] = r.certified;
    j["consistent"] = r.consistent;
    j["samples"] = r.curve.size();
    Json probes = Json::array();
    for (const auto& p : r.certified_points) {
        Json e;
        e["point"] = to_json(p.point);
        e["winding"] = p.winding;
        e["covered"] = p.covered;
        e["in_guaranteed_disk"] = p.in_guaranteed_disk;
        probes.push_back(std::move(e));
    }
    j["certified_points"] = std::move(probes);
    return j;
}

Json to_json(const EnclosureReport& r) {
    Json j;
    j["max_excursion"] = r.max_excursion;
    j["tolerance"] = r.tolerance;
    j["tail_bound"] = r.tail_bound;
    j["ok"] = r.ok;
    return j;
}

Json to_json(const SymmetryReport& r) {
    Json j;
    j["symmetry"] = to_string(r.symmetry);
    j["max_modulus_deviation"] = r.max_modulus_deviation;
    j["grid"] = r.grid;
    if (r.symmetry != SymmetryClass::Strong) {
        j["best_line"] = Json::array({r.line_p, r.line_q});
        j["line_deviation"] = r.line_deviation;
    }
    return j;
}

Json to_json(const NormalizedSolution& s) {
    Json j;
    j["w"] = to_json(s.w);
    j["a2"] = to_json(s.a2);
    j["theta"] = s.theta;
    j["z0"] = to_json(s.z0);
    j["moebius_c"] = to_json(s.moebius_c);
    j["pole_guard"] = s.pole_guard;
    j["fixed_point_residual"] = s.fixed_point_residual;
    j["eval_radius"] = s.eval_radius;
    j["tail_bound"] = s.tail_bound;
    j["warnings"] = s.warnings;
    return j;
}

Json to_json(const BallSpec& b) {
    Json j;
    j["dim"] = b.dim;
    j["radius"] = b.radius;
    j["norm_mode"] = to_string(b.norm_mode);
    return j;
}

BallSpec ball_from_json(const Json& j) {
    BallSpec b;
    b.dim = integer(field(j, "dim"), "dim");
    b.radius = number(field(j, "radius"), "radius");
    b.norm_mode = norm_mode_from_string(optional_field<std::string>(j, "norm_mode", "area"));
    b.validate();
    return b;
}

Json to_json(const Target& t) {
    Json j;
    j["kind"] = kind_name(t.kind);
    j["label"] = t.label();
    if (t.kind == Target::Kind::Functional) {
        j["spec"] = to_json(t.spec);
    } else {
        j["index"] = t.index;
    }
    return j;
}

Target target_from_json(const Json& j) {
    const std::string kind = optional_field<std::string>(j, "kind", "coefficient");
    Target t;
    if (kind == "coefficient") {
        t = Target::coefficient(integer(field(j, "index"), "index"));
    } else if (kind == "schwarzian_coefficient") {
        t = Target::schwarzian_coefficient(integer(field(j, "index"), "index"));
    } else if (kind == "functional") {
        t = Target::functional(functional_from_json(field(j, "spec")));
    } else {
        bad("unknown target kind '" + kind + "'");
    }
    t.validate();
    return t;
}

Json to_json(const MaximizeConfig& c) {
    Json j;
    j["ball"] = to_json(c.ball);
    j["target"] = to_json(c.target);
    j["starts"] = c.starts;
    j["max_iterations"] = c.max_iterations;
    j["shrink_tolerance"] = c.shrink_tolerance;
    j["z0_grid"] = c.z0_grid;
    j["theta_grid"] = c.theta_grid;
    j["order"] = c.order;
    j["verify_order"] = c.verify_order;
    j["seed"] = c.seed;
    j["search_guard_radii"] = c.search_guard_radii;
    j["search_guard_angles"] = c.search_guard_angles;
    // thread count is left out on purpose: results do not depend on it
    return j;
}

MaximizeConfig maximize_config_from_json(const Json& j) {
    MaximizeConfig c;
    c.ball = ball_from_json(field(j, "ball"));
    c.target = target_from_json(field(j, "target"));
    c.starts = optional_field<int>(j, "starts", c.starts);
    c.max_iterations = optional_field<int>(j, "max_iterations", c.max_iterations);
    c.shrink_tolerance = optional_field<double>(j, "shrink_tolerance", c.shrink_tolerance);
    c.z0_grid = optional_field<int>(j, "z0_grid", c.z0_grid);
    c.theta_grid = optional_field<int>(j, "theta_grid", c.theta_grid);
    c.order = optional_field<int>(j, "order", c.order);
    c.verify_order = optional_field<int>(j, "verify_order", c.verify_order);
    c.seed = optional_field<std::uint64_t>(j, "seed", c.seed);
    c.search_guard_radii = optional_field<int>(j, "search_guard_radii", c.search_guard_radii);
    c.search_guard_angles = optional_field<int>(j, "search_guard_angles", c.search_guard_angles);
    c.validate();
    return c;
}

Json to_json(const ExtremalRun& r) {
    Json j;
    j["config"] = to_json(r.config);
    j["seed"] = r.seed;
    j["best_value"] = r.best_value;
    j["best_phi"] = to_json(r.best_phi);
    j["best_z0"] = to_json(r.best_z0);
    j["theta"] = r.theta;
    j["verified"] = r.verified;
    j["verified_value"] = r.verified_value;
    j["best_a2"] = to_json(r.best_a2);
    j["c1_modulus"] = r.c1_modulus;
    j["angle_to_c1_axis"] = r.angle_to_c1_axis;
    j["failed_starts"] = r.failed_starts;
    j["evaluations"] = r.evaluations;
    Json trace = Json::array();
    for (const auto& e : r.trace) {
        Json t;
        t["iteration"] = e.iteration;
        t["value"] = e.value;
        t["cell"] = e.cell;
        t["start"] = e.start;
        t["evaluations"] = e.evaluations;
        t["failed"] = e.failed;
        trace.push_back(std::move(t));
    }
    j["trace"] = std::move(trace);
    return j;
}

ExtremalRun extremal_run_from_json(const Json& j) {
    ExtremalRun r;
    r.config = maximize_config_from_json(field(j, "config"));
    r.seed = optional_field<std::uint64_t>(j, "seed", r.config.seed);
    r.best_value = number(field(j, "best_value"), "best_value");
    r.best_phi = series_from_json(field(j, "best_phi"));
    r.best_z0 = complex_from_json(field(j, "best_z0"));
    r.theta = number(field(j, "theta"), "theta");
    r.verified = optional_field<bool>(j, "verified", false);
    r.verified_value = optional_field<double>(j, "verified_value", 0.0);
    if (j.contains("best_a2")) r.best_a2 = complex_from_json(j["best_a2"]);
    r.c1_modulus = optional_field<double>(j, "c1_modulus", 0.0);
    r.angle_to_c1_axis = optional_field<double>(j, "angle_to_c1_axis", 0.0);
    r.failed_starts = optional_field<int>(j, "failed_starts", 0);
    r.evaluations = optional_field<long long>(j, "evaluations", 0);
    if (j.contains("trace")) {
        if (!j["trace"].is_array()) bad("'trace' must be an array");
        for (const auto& t : j["trace"]) {
            TraceEntry e;
            e.iteration = integer(field(t, "iteration"), "iteration");
            e.value = number(field(t, "value"), "value");
            e.cell = optional_field<int>(t, "cell", 0);
            e.start = optional_field<int>(t, "start", 0);
            e.evaluations = optional_field<int>(t, "evaluations", 0);
            e.failed = optional_field<bool>(t, "failed", false);
            r.trace.push_back(e);
        }
    }
    return r;
}

Json to_json(const ConsistencyReport& r) {
    Json j;
    j["ball"] = to_json(r.ball);
    j["agreement_threshold"] = r.agreement_threshold;
    Json runs = Json::array();
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
        Json e;
        e["label"] = r.labels[i];
        e["best_value"] = r.best_values[i];
        e["symmetry"] = r.symmetry_classes[i];
        runs.push_back(std::move(e));
    }
    j["runs"] = std::move(runs);
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json e;
        e["first"] = p.first;
        e["second"] = p.second;
        e["distance"] = p.distance;
        e["rotation_reduced_distance"] = p.rotation_reduced_distance;
        e["best_rotation"] = p.best_rotation;
        e["value_gap"] = p.value_gap;
        e["agree"] = p.agree;
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace univalent
