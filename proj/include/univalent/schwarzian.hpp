#pragma once

#include <string>
#include <vector>

#include "univalent/powerseries.hpp"

namespace univalent {

/// S_f = (f''/f')' - (f''/f')^2 / 2, to order N - 3.
/// Throws CriticalPointAtOrigin when f'(0) = 0.
TaylorSeries schwarzian_derivative(const TaylorSeries& f);

/// Two independent solutions of 2 eta'' + phi eta = 0 with
/// eta1(0) = 0, eta1'(0) = 1 and eta2(0) = 1, eta2'(0) = 0.
struct LinearSolutions {
    TaylorSeries eta1;
    TaylorSeries eta2;
};

/// Coefficient recursion 2 (k+2)(k+1) e_{k+2} = -sum_j c_j e_{k-j}.
/// The solutions carry order min(n, phi.order() + 2).
LinearSolutions solve_linear(const TaylorSeries& phi, int n);

/// Largest |2 (k+2)(k+1) e_{k+2} + sum_j c_j e_{k-j}| over the recursion range.
double linear_residual(const TaylorSeries& phi, const TaylorSeries& eta);

/// The canonical solution w = eta1 / eta2 of S_w = phi: w(0) = 0, w'(0) = 1, w''(0) = 0.
/// Order is min(n, phi.order() + 3); coefficient n of w depends on c_0..c_{n-3} only.
TaylorSeries solve_canonical(const TaylorSeries& phi, int n);

/// A quadratic differential together with its norms (recomputed on construction).
struct SchwarzianCandidate {
    explicit SchwarzianCandidate(TaylorSeries phi_in);

    TaylorSeries phi;
    double a2_norm_paper;
    double a2_norm_area;
    double b_norm_estimate;
};

struct NormalizeOptions {
    /// Radius at which w_can(z0) is read off; 1.0 is allowed when the growth model converges there.
    double eval_radius = 0.995;
    double tail_tolerance = 1e-6;
    int guard_radii = 64;
    int guard_angles = 256;
};

/// e^{i theta} w_can / (1 + c w_can), with c fixed by the boundary fixed point.
struct NormalizedSolution {
    TaylorSeries w;
    double theta = 0.0;
    Complex z0{1.0, 0.0};
    Complex moebius_c{};
    /// min |1 + c w_can| over the polar guard grid, less the tail slack.
    double pole_guard = 0.0;
    /// Second Taylor coefficient of w, -e^{i theta} c.
    Complex a2{};
    /// |w(p) - p| at p = eval_radius * z0, from the closed-form Moebius value.
    double fixed_point_residual = 0.0;
    double eval_radius = 0.995;
    double tail_bound = 0.0;
    std::vector<std::string> warnings;
};

/// Post-compose the canonical solution with the Moebius map that makes
/// w(0) = 0, w'(0) = e^{i theta} and w(p) = p for p = eval_radius * z0.
///
/// Zeros of 1 + c w_can inside the evaluation disk are poles of the result;
/// they are detected by the argument principle on the outermost guard circle
/// and by the grid minimum, and reported as PoleInDisk. A boundary reading
/// whose tail bound exceeds the tolerance is TailTooLarge. When
/// |e^{i theta} - z0| >= 1 the result carries a warning: existence of a
/// pole-free solution is only guaranteed inside that region.
NormalizedSolution normalize_fixed_point(const TaylorSeries& w_can, Complex z0, double theta,
                                         const GrowthModel& growth, const NormalizeOptions& options = {});

/// (a w + b) / (c w + d) as a series; requires c w(0) + d != 0.
TaylorSeries moebius_post_compose(const TaylorSeries& w, Complex a, Complex b, Complex c, Complex d);

}  // namespace univalent
