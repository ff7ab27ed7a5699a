#include "univalent/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "univalent/analysis.hpp"

namespace univalent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

// Orthonormal coordinates: y_n = c_n sqrt(pi / (n+1)), so the area norm is |y|.
double basis_scale(int n) { return std::sqrt((n + 1) / std::numbers::pi); }

TaylorSeries phi_from_coords(const std::vector<double>& x) {
    const int dim = static_cast<int>(x.size() / 2);
    std::vector<Complex> c(static_cast<std::size_t>(dim));
    for (int n = 0; n < dim; ++n) {
        c[static_cast<std::size_t>(n)] =
            Complex{x[static_cast<std::size_t>(2 * n)], x[static_cast<std::size_t>(2 * n + 1)]} * basis_scale(n);
    }
    return TaylorSeries(std::move(c));
}

std::vector<double> coords_from_phi(const TaylorSeries& phi, int dim) {
    std::vector<double> x(static_cast<std::size_t>(2 * dim), 0.0);
    for (int n = 0; n < dim && n <= phi.order(); ++n) {
        const Complex y = phi[n] / basis_scale(n);
        x[static_cast<std::size_t>(2 * n)] = y.real();
        x[static_cast<std::size_t>(2 * n + 1)] = y.imag();
    }
    return x;
}

void project_to_ball(std::vector<double>& x, double radius) {
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (norm > radius) {
        for (auto& v : x) v *= radius / norm;
    }
}

double coordinate_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

struct LocalResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool failed = true;
};

// Nelder-Mead maximization with standard coefficients (1, 2, 1/2, 1/2).
template <typename F>
LocalResult nelder_mead_max(F&& f, std::vector<double> x0, double step, int max_iterations, double tolerance) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> values(n + 1);

    LocalResult result;
    auto evaluate = [&](const std::vector<double>& x) {
        const auto [v, ok] = f(x);
        ++result.evaluations;
        if (ok) result.failed = false;
        return v;
    };
    for (std::size_t i = 0; i <= n; ++i) values[i] = evaluate(simplex[i]);

    std::vector<std::size_t> idx(n + 1);
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
        const auto& best = simplex[idx[0]];
        double size = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(simplex[idx[i]][k] - best[k]));
        }
        if (size < tolerance) break;

        const std::size_t worst = idx[n];
        const std::size_t second_worst = idx[n - 1];
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[idx[i]][k] / static_cast<double>(n);

        auto along = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
            return p;
        };

        auto reflected = along(-1.0);
        const double fr = evaluate(reflected);
        if (fr > values[idx[0]]) {
            auto expanded = along(-2.0);
            const double fe = evaluate(expanded);
            if (fe > fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr > values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        const bool outside = fr > values[worst];
        auto contracted = along(outside ? -0.5 : 0.5);
        const double fc = evaluate(contracted);
        if (fc > (outside ? fr : values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        const std::vector<double> anchor = simplex[idx[0]];
        for (std::size_t i = 1; i <= n; ++i) {
            auto& v = simplex[idx[i]];
            for (std::size_t k = 0; k < n; ++k) v[k] = anchor[k] + 0.5 * (v[k] - anchor[k]);
            values[idx[i]] = evaluate(v);
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (values[i] > values[best]) best = i;
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

Complex cell_z0(int cell, int theta_grid, int z0_grid) {
    const int i = cell / theta_grid;
    return std::polar(1.0, 2.0 * std::numbers::pi * i / z0_grid);
}

double cell_theta(int cell, int theta_grid) {
    const int k = cell % theta_grid;
    return -std::numbers::pi + 2.0 * std::numbers::pi * k / theta_grid;
}

double target_value(const Target& target, const NormalizedSolution& sol, const TaylorSeries& phi) {
    switch (target.kind) {
        case Target::Kind::Coefficient:
            return std::abs(sol.w.coeff(target.index));
        case Target::Kind::SchwarzianCoefficient:
            return target.index <= phi.order() ? std::abs(phi[target.index]) : 0.0;
        case Target::Kind::Functional:
            return std::abs(eval_functional(target.spec, SchlichtFunction(sol.w)));
    }
    return 0.0;
}

}  // namespace

std::string to_string(NormMode mode) { return mode == NormMode::Area ? "area" : "paper"; }

NormMode norm_mode_from_string(const std::string& s) {
    if (s == "area") return NormMode::Area;
    if (s == "paper") return NormMode::Paper;
    throw Error(ErrorKind::InvalidArgument, "unknown norm mode '" + s + "'");
}

void BallSpec::validate() const {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "ball dimension must be >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(ErrorKind::InvalidArgument, "ball radius must be > 0");
}

double BallSpec::area_radius() const {
    return norm_mode == NormMode::Area ? radius : radius * std::sqrt(2.0 * std::numbers::pi);
}

double ball_norm(const TaylorSeries& phi, NormMode mode) {
    const NormPair n = a2_norms(phi);
    return mode == NormMode::Area ? n.a2_area : n.a2_paper;
}

TaylorSeries sample_ball(const BallSpec& ball, std::uint64_t seed) {
    ball.validate();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(2 * ball.dim));
    double norm = 0.0;
    while (norm == 0.0) {
        for (auto& v : x) v = gauss(rng);
        norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    }
    const double r = ball.area_radius() * std::pow(unif(rng), 1.0 / (2.0 * ball.dim));
    for (auto& v : x) v *= r / norm;
    return phi_from_coords(x);
}

std::string Target::label() const {
    switch (kind) {
        case Kind::Coefficient: return "a" + std::to_string(index);
        case Kind::SchwarzianCoefficient: return "c" + std::to_string(index);
        case Kind::Functional: return spec.name.empty() ? "functional" : spec.name;
    }
    return "target";
}

void Target::validate() const {
    switch (kind) {
        case Kind::Coefficient:
            if (index < 2) throw Error(ErrorKind::InvalidArgument, "coefficient target needs n >= 2");
            break;
        case Kind::SchwarzianCoefficient:
            if (index < 0) throw Error(ErrorKind::InvalidArgument, "Schwarzian coefficient index must be >= 0");
            break;
        case Kind::Functional:
            spec.validate();
            break;
    }
}

ObjectiveValue objective(const TaylorSeries& phi, const Target& target, Complex z0, double theta,
                         const ObjectiveOptions& options) {
    if (!ahlfors_weill_gate(phi)) throw Error(ErrorKind::GateFailed, "phi is outside the Ahlfors-Weill ball");
    ObjectiveValue out;
    try {
        const TaylorSeries w_can = solve_canonical(phi.padded(std::max(phi.order(), options.order)), options.order);
        NormalizedSolution sol =
            normalize_fixed_point(w_can, z0, theta, GrowthModel::observed_geometric(w_can), options.normalize);
        out.value = target_value(target, sol, phi);
        out.solution = std::move(sol);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleInDisk && e.kind() != ErrorKind::TailTooLarge &&
            e.kind() != ErrorKind::NonFiniteCoefficient) {
            throw;
        }
        out.value = 0.0;
        out.rejected = true;
        out.reason = e.what();
    }
    return out;
}

void MaximizeConfig::validate() const {
    ball.validate();
    target.validate();
    if (starts < 1 || max_iterations < 1 || z0_grid < 1 || theta_grid < 1) {
        throw Error(ErrorKind::InvalidArgument, "starts, iterations and grids must be >= 1");
    }
    if (order < 4 || verify_order < order) throw Error(ErrorKind::InvalidArgument, "need 4 <= order <= verify_order");
    if (target.kind == Target::Kind::Coefficient && target.index > order) {
        throw Error(ErrorKind::InvalidArgument, "target index exceeds truncation order");
    }
}

ExtremalRun maximize(const MaximizeConfig& config) {
    config.validate();
    const int cells = config.z0_grid * config.theta_grid;
    const int jobs = cells * config.starts;
    const double radius = config.ball.area_radius();

    ObjectiveOptions search;
    search.order = config.order;
    search.normalize.guard_radii = config.search_guard_radii;
    search.normalize.guard_angles = config.search_guard_angles;

    std::vector<LocalResult> results(static_cast<std::size_t>(jobs));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int job = next++; job < jobs; job = next++) {
            const int cell = job / config.starts;
            const int start = job % config.starts;
            const Complex z0 = cell_z0(cell, config.theta_grid, config.z0_grid);
            const double theta = cell_theta(cell, config.theta_grid);
            const TaylorSeries init =
                sample_ball(config.ball, mix_seed(config.seed, static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(start)));
            auto f = [&](const std::vector<double>& x) {
                std::vector<double> y = x;
                project_to_ball(y, radius);
                const ObjectiveValue v = objective(phi_from_coords(y), config.target, z0, theta, search);
                return std::pair<double, bool>{v.value, !v.rejected};
            };
            LocalResult r = nelder_mead_max(f, coords_from_phi(init, config.ball.dim), 0.25 * radius,
                                            config.max_iterations, config.shrink_tolerance);
            project_to_ball(r.x, radius);
            results[static_cast<std::size_t>(job)] = std::move(r);
        }
    };
    const int threads = std::max(1, std::min(jobs, config.threads > 0 ? config.threads
                                                                       : static_cast<int>(std::thread::hardware_concurrency())));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    ExtremalRun run;
    run.config = config;
    run.seed = config.seed;
    int best_job = -1;
    for (int job = 0; job < jobs; ++job) {
        const auto& r = results[static_cast<std::size_t>(job)];
        TraceEntry e;
        e.iteration = job;
        e.cell = job / config.starts;
        e.start = job % config.starts;
        e.value = r.value;
        e.evaluations = r.evaluations;
        e.failed = r.failed;
        run.trace.push_back(e);
        run.evaluations += r.evaluations;
        if (r.failed) ++run.failed_starts;
        if (best_job < 0 || r.value > results[static_cast<std::size_t>(best_job)].value) best_job = job;
    }
    const auto& best = results[static_cast<std::size_t>(best_job)];
    const int best_cell = best_job / config.starts;
    run.best_value = best.value;
    run.best_phi = phi_from_coords(best.x);
    run.best_z0 = cell_z0(best_cell, config.theta_grid, config.z0_grid);
    run.theta = cell_theta(best_cell, config.theta_grid);
    run.c1_modulus = run.best_phi.order() >= 1 ? std::abs(run.best_phi[1]) : 0.0;
    const double norm = std::sqrt(std::inner_product(best.x.begin(), best.x.end(), best.x.begin(), 0.0));
    const double y1 = best.x.size() >= 4 ? std::hypot(best.x[2], best.x[3]) : 0.0;
    run.angle_to_c1_axis = norm > 0.0 ? std::acos(std::clamp(y1 / norm, 0.0, 1.0)) : 0.0;

    ObjectiveOptions verify;
    verify.order = config.verify_order;
    const ObjectiveValue v = objective(run.best_phi, config.target, run.best_z0, run.theta, verify);
    run.verified = !v.rejected;
    run.verified_value = v.value;
    if (v.solution) run.best_a2 = v.solution->a2;
    return run;
}

TaylorSeries rotate_schwarzian(const TaylorSeries& phi, double alpha) {
    return std::polar(1.0, 2.0 * alpha) * rotate_argument(phi, alpha);
}

ConsistencyReport consistency_report(const std::vector<ExtremalRun>& runs) {
    if (runs.size() < 2) throw Error(ErrorKind::InvalidArgument, "consistency report needs at least two runs");
    ConsistencyReport report;
    report.ball = runs.front().config.ball;
    for (const auto& r : runs) {
        if (!(r.config.ball == report.ball)) throw Error(ErrorKind::MismatchedBalls, "runs use different balls");
    }
    const double scale = report.ball.norm_mode == NormMode::Area ? 1.0 : 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const int dim = report.ball.dim;

    for (const auto& r : runs) {
        report.labels.push_back(r.config.target.label());
        report.best_values.push_back(r.best_value);
        std::string symmetry = "n/a";
        if (r.config.target.kind != Target::Kind::SchwarzianCoefficient) {
            const FunctionalSpec spec = r.config.target.kind == Target::Kind::Coefficient
                                            ? coefficient_spec(r.config.target.index)
                                            : r.config.target.spec;
            ObjectiveOptions opts;
            opts.order = r.config.order;
            try {
                const ObjectiveValue v = objective(r.best_phi, r.config.target, r.best_z0, r.theta, opts);
                if (v.solution) symmetry = to_string(symmetry_scan(spec, SchlichtFunction(v.solution->w), 16).symmetry);
            } catch (const Error&) {
                symmetry = "unavailable";
            }
        }
        report.symmetry_classes.push_back(symmetry);
    }

    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            const auto xi = coords_from_phi(runs[i].best_phi, dim);
            PairComparison p;
            p.first = i;
            p.second = j;
            p.distance = scale * coordinate_distance(xi, coords_from_phi(runs[j].best_phi, dim));
            auto rotated_distance = [&](double alpha) {
                return scale * coordinate_distance(xi, coords_from_phi(rotate_schwarzian(runs[j].best_phi, alpha), dim));
            };
            // coarse scan then golden-section refinement
            constexpr int kCoarse = 720;
            double best_alpha = 0.0;
            double best_d = rotated_distance(0.0);
            for (int k = 1; k < kCoarse; ++k) {
                const double a = 2.0 * std::numbers::pi * k / kCoarse;
                const double d = rotated_distance(a);
                if (d < best_d) {
                    best_d = d;
                    best_alpha = a;
                }
            }
            const double h = 2.0 * std::numbers::pi / kCoarse;
            double lo = best_alpha - h, hi = best_alpha + h;
            const double g = (std::sqrt(5.0) - 1.0) / 2.0;
            for (int it = 0; it < 60; ++it) {
                const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
                if (rotated_distance(m1) < rotated_distance(m2)) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            const double refined = 0.5 * (lo + hi);
            if (rotated_distance(refined) < best_d) {
                best_d = rotated_distance(refined);
                best_alpha = refined;
            }
            p.rotation_reduced_distance = best_d;
            p.best_rotation = best_alpha;
            p.value_gap = std::abs(runs[i].best_value - runs[j].best_value);
            p.agree = p.rotation_reduced_distance < report.agreement_threshold;
            report.pairs.push_back(p);
        }
    }
    return report;
}

ExtremalOde extremal_ode_system(int n, double scale) {
    if (n < 4) throw Error(ErrorKind::InvalidArgument, "extremal solution needs order >= 4");
    ExtremalOde out;
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[1] = scale * kBallRadius * std::sqrt(2.0 / std::numbers::pi);
    out.phi = TaylorSeries(std::move(c));
    auto [eta1, eta2] = solve_linear(out.phi, n);
    out.max_residual = std::max(linear_residual(out.phi, eta1), linear_residual(out.phi, eta2));
    out.eta1 = std::move(eta1);
    out.eta2 = std::move(eta2);
    out.w = solve_canonical(out.phi, n);
    return out;
}

TaylorSeries extremal_ode_solution(int n) { return extremal_ode_system(n).w; }

}  // namespace univalent
