#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univalent/functionals.hpp"
#include "univalent/schwarzian.hpp"

namespace univalent {

/// sqrt(2) / pi, the radius of the Schwarzian ball that stays inside the univalence region.
inline constexpr double kBallRadius = 1.4142135623730951 / 3.141592653589793;

enum class NormMode { Area, Paper };

std::string to_string(NormMode mode);
NormMode norm_mode_from_string(const std::string& s);

/// Polynomials c_0 + ... + c_{dim-1} z^{dim-1} with norm <= radius.
struct BallSpec {
    int dim = 3;
    double radius = kBallRadius;
    NormMode norm_mode = NormMode::Area;

    void validate() const;
    /// Radius of the ball in orthonormal (area) coordinates.
    double area_radius() const;

    friend bool operator==(const BallSpec&, const BallSpec&) = default;
};

/// Norm of phi in the ball's mode.
double ball_norm(const TaylorSeries& phi, NormMode mode);

/// Uniform sample from the ball: uniform direction on the sphere in
/// orthonormal coordinates y_n = c_n sqrt(pi / (n+1)), radius law U^{1/(2 dim)}.
TaylorSeries sample_ball(const BallSpec& ball, std::uint64_t seed);

/// What the optimizer maximizes the modulus of.
struct Target {
    enum class Kind { Coefficient, SchwarzianCoefficient, Functional };

    Kind kind = Kind::Coefficient;
    int index = 2;
    FunctionalSpec spec;

    static Target coefficient(int n) { return {Kind::Coefficient, n, {}}; }
    static Target schwarzian_coefficient(int n) { return {Kind::SchwarzianCoefficient, n, {}}; }
    static Target functional(FunctionalSpec s) { return {Kind::Functional, 0, std::move(s)}; }

    std::string label() const;
    void validate() const;

    friend bool operator==(const Target&, const Target&) = default;
};

struct ObjectiveOptions {
    int order = 64;
    NormalizeOptions normalize{};
};

struct ObjectiveValue {
    double value = 0.0;
    bool rejected = false;
    std::string reason;
    std::optional<NormalizedSolution> solution;
};

/// |target| on the normalized solution of S_w = phi with fixed point z0 and angle theta.
/// Throws GateFailed outside the Ahlfors-Weill region; PoleInDisk and
/// TailTooLarge come back as a rejected value of 0.
ObjectiveValue objective(const TaylorSeries& phi, const Target& target, Complex z0, double theta,
                         const ObjectiveOptions& options = {});

struct MaximizeConfig {
    BallSpec ball{};
    Target target = Target::coefficient(2);
    int starts = 64;
    int max_iterations = 400;
    double shrink_tolerance = 1e-8;
    int z0_grid = 32;
    int theta_grid = 8;
    int order = 64;
    int verify_order = 256;
    std::uint64_t seed = 0;
    /// 0 means std::thread::hardware_concurrency().
    int threads = 0;
    /// Pole guard used inside the search; the final candidate is re-checked with the full grid.
    int search_guard_radii = 2;
    int search_guard_angles = 128;

    void validate() const;
};

struct TraceEntry {
    int iteration = 0;  ///< ordinal of the local search (cell-major, then start)
    double value = 0.0;
    int cell = 0;
    int start = 0;
    int evaluations = 0;
    bool failed = false;  ///< every evaluation of this start was rejected
};

struct ExtremalRun {
    MaximizeConfig config;
    double best_value = 0.0;
    TaylorSeries best_phi;
    Complex best_z0{1.0, 0.0};
    double theta = 0.0;
    std::vector<TraceEntry> trace;
    std::uint64_t seed = 0;

    /// Objective at best_phi recomputed at verify_order with the full guard grid.
    double verified_value = 0.0;
    bool verified = false;
    Complex best_a2{};
    double c1_modulus = 0.0;
    /// Angle between best_phi and the c_1 axis in orthonormal coordinates.
    double angle_to_c1_axis = 0.0;
    int failed_starts = 0;
    long long evaluations = 0;
};

/// Multi-start Nelder-Mead over the 2 dim real ball coordinates, repeated on
/// every (z0, theta) grid cell. Deterministic for a given config, independent
/// of the thread count; ties go to the lowest start ordinal.
ExtremalRun maximize(const MaximizeConfig& config);

/// c_n -> e^{i(n+2) alpha} c_n, the Schwarzian of e^{-i alpha} w(e^{i alpha} z).
TaylorSeries rotate_schwarzian(const TaylorSeries& phi, double alpha);

struct PairComparison {
    std::size_t first = 0;
    std::size_t second = 0;
    double distance = 0.0;
    /// min over alpha of ||phi_first - rotate_schwarzian(phi_second, alpha)||
    double rotation_reduced_distance = 0.0;
    double best_rotation = 0.0;
    double value_gap = 0.0;
    bool agree = false;
};

struct ConsistencyReport {
    BallSpec ball;
    std::vector<std::string> labels;
    std::vector<double> best_values;
    std::vector<std::string> symmetry_classes;
    std::vector<PairComparison> pairs;
    double agreement_threshold = 0.05;
};

/// Pairwise distances between maximizers over a shared ball. Throws MismatchedBalls.
ConsistencyReport consistency_report(const std::vector<ExtremalRun>& runs);

struct ExtremalOde {
    TaylorSeries phi;
    TaylorSeries eta1;
    TaylorSeries eta2;
    TaylorSeries w;
    double max_residual = 0.0;
};

/// 2 eta'' + phi eta = 0 with phi = scale * r0 * sqrt(2/pi) z, i.e. the
/// ball radius times the unit-norm direction z.
ExtremalOde extremal_ode_system(int n, double scale = 1.0);
TaylorSeries extremal_ode_solution(int n);

}  // namespace univalent
