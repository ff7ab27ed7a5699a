#include "univalent/schwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "univalent/analysis.hpp"

namespace univalent {

namespace {

TaylorSeries add_constant(const TaylorSeries& a, Complex c) {
    std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
    out[0] += c;
    return TaylorSeries(std::move(out));
}

double wrap_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta + std::numbers::pi, two_pi);
    if (t < 0.0) t += two_pi;
    return t - std::numbers::pi;
}

}  // namespace

TaylorSeries schwarzian_derivative(const TaylorSeries& f) {
    if (f.order() < 3) {
        throw Error(ErrorKind::InsufficientOrder, "the Schwarzian needs a series of order >= 3");
    }
    const TaylorSeries d1 = derivative(f);
    if (d1[0] == Complex{}) {
        throw Error(ErrorKind::CriticalPointAtOrigin, "f'(0) = 0");
    }
    const TaylorSeries pre = div(derivative(d1), d1);  // f''/f', order N-2
    const TaylorSeries out = derivative(pre) - 0.5 * mul(pre, pre);
    return out.truncated(f.order() - 3);
}

LinearSolutions solve_linear(const TaylorSeries& phi, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "solution order must be >= 1");
    const int order = std::min(n, phi.order() + 2);
    std::vector<Complex> e1(static_cast<std::size_t>(order) + 1);
    std::vector<Complex> e2(static_cast<std::size_t>(order) + 1);
    e1[1] = 1.0;
    e2[0] = 1.0;
    for (int k = 0; k + 2 <= order; ++k) {
        Complex s1{}, s2{};
        for (int j = 0; j <= k; ++j) {
            s1 += phi[j] * e1[static_cast<std::size_t>(k - j)];
            s2 += phi[j] * e2[static_cast<std::size_t>(k - j)];
        }
        const double denom = 2.0 * (k + 2) * (k + 1);
        e1[static_cast<std::size_t>(k + 2)] = -s1 / denom;
        e2[static_cast<std::size_t>(k + 2)] = -s2 / denom;
    }
    return {TaylorSeries(std::move(e1)), TaylorSeries(std::move(e2))};
}

double linear_residual(const TaylorSeries& phi, const TaylorSeries& eta) {
    double worst = 0.0;
    for (int k = 0; k + 2 <= eta.order() && k <= phi.order(); ++k) {
        Complex s = 2.0 * (k + 2) * (k + 1) * eta[k + 2];
        for (int j = 0; j <= k; ++j) s += phi[j] * eta[k - j];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

TaylorSeries solve_canonical(const TaylorSeries& phi, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "solution order must be >= 1");
    const int order = std::min(n, phi.order() + 3);
    // c_{M+1} only ever multiplies eta1(0) = 0 in the top coefficient of w,
    // so padding phi by one zero does not invent information.
    const TaylorSeries phi_ext = phi.padded(std::max(phi.order(), order - 2));
    const auto [eta1, eta2] = solve_linear(phi_ext, order);
    return div(eta1, eta2);
}

SchwarzianCandidate::SchwarzianCandidate(TaylorSeries phi_in) : phi(std::move(phi_in)) {
    const NormPair norms = a2_norms(phi);
    a2_norm_paper = norms.a2_paper;
    a2_norm_area = norms.a2_area;
    b_norm_estimate = b_norm(phi, 64, 256, GrowthModel::exact());
}

TaylorSeries moebius_post_compose(const TaylorSeries& w, Complex a, Complex b, Complex c, Complex d) {
    return div(add_constant(scale(w, a), b), add_constant(scale(w, c), d));
}

NormalizedSolution normalize_fixed_point(const TaylorSeries& w_can, Complex z0, double theta,
                                         const GrowthModel& growth, const NormalizeOptions& options) {
    if (w_can.order() < 2) throw Error(ErrorKind::InsufficientOrder, "canonical solution needs order >= 2");
    if (std::abs(w_can[0]) != 0.0 || std::abs(w_can[1] - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "expected w(0) = 0 and w'(0) = 1");
    }
    if (std::abs(std::abs(z0) - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "z0 must be unimodular");
    if (!(options.eval_radius > 0.0 && options.eval_radius <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "eval_radius must lie in (0, 1]");
    }
    if (options.guard_radii < 1 || options.guard_angles < 8) {
        throw Error(ErrorKind::InvalidArgument, "guard grid too small");
    }

    NormalizedSolution out;
    out.theta = wrap_angle(theta);
    out.z0 = z0 / std::abs(z0);
    out.eval_radius = options.eval_radius;
    const Complex rot = std::polar(1.0, out.theta);
    const Complex p = options.eval_radius * out.z0;

    EvalResult at_p;
    try {
        at_p = eval(w_can, p, growth);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnboundedTail) throw Error(ErrorKind::TailTooLarge, e.what());
        throw;
    }
    if (at_p.tail_bound > options.tail_tolerance) {
        throw Error(ErrorKind::TailTooLarge,
                    "tail bound " + std::to_string(at_p.tail_bound) + " at the fixed point exceeds tolerance");
    }
    out.tail_bound = at_p.tail_bound;
    const Complex big_w = at_p.value;
    if (big_w == Complex{}) throw Error(ErrorKind::PoleInDisk, "w_can vanishes at the fixed point");

    const Complex c = rot / p - 1.0 / big_w;
    out.moebius_c = c;
    out.fixed_point_residual = std::abs(rot * big_w / (1.0 + c * big_w) - p);

    // Pole guard: polar grid up to the evaluation radius.
    const int n_rad = options.guard_radii;
    const int n_ang = options.guard_angles;
    const double abs_c = std::abs(c);
    double guard = std::numeric_limits<double>::infinity();
    double winding = 0.0;
    for (int i = 1; i <= n_rad; ++i) {
        const double rho = options.eval_radius * static_cast<double>(i) / n_rad;
        const double slack = abs_c * growth.tail(w_can.order(), rho);
        Complex first{}, prev{};
        for (int j = 0; j < n_ang; ++j) {
            const Complex z = std::polar(rho, 2.0 * std::numbers::pi * j / n_ang);
            const Complex v = 1.0 + c * horner(w_can.coeffs(), z);
            guard = std::min(guard, std::abs(v) - slack);
            if (i == n_rad) {
                if (j == 0) {
                    first = v;
                } else {
                    winding += std::arg(v / prev);
                }
                prev = v;
            }
        }
        if (i == n_rad) winding += std::arg(first / prev);
    }
    out.pole_guard = guard;
    const long zeros = std::lround(winding / (2.0 * std::numbers::pi));
    if (zeros != 0 || !(guard > 0.0)) {
        throw Error(ErrorKind::PoleInDisk, "1 + c w_can vanishes inside the evaluation disk (zero count " +
                                               std::to_string(zeros) + ", guard " + std::to_string(guard) + ")");
    }

    const TaylorSeries shifted = scale(div(w_can, add_constant(scale(w_can, c), 1.0)), rot);
    std::vector<Complex> w(shifted.coeffs().begin(), shifted.coeffs().end());
    w[0] = 0.0;
    w[1] = rot;
    out.w = TaylorSeries(std::move(w));
    out.a2 = rot * (w_can[2] - c);
    if (std::abs(rot - out.z0) >= 1.0) {
        out.warnings.push_back("|e^{i theta} - z0| >= 1: outside the region where a pole-free normalization is guaranteed");
    }
    return out;
}

}  // namespace univalent
