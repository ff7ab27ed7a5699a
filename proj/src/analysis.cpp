#include "univalent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace univalent {

namespace {

double segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

// > 0 when p is left of the directed line a -> b
double is_left(Complex a, Complex b, Complex p) {
    return (b.real() - a.real()) * (p.imag() - a.imag()) - (p.real() - a.real()) * (b.imag() - a.imag());
}

}  // namespace

NormPair a2_norms(const TaylorSeries& phi) {
    double sum = 0.0;
    for (int n = 0; n <= phi.order(); ++n) sum += std::norm(phi[n]) * std::numbers::pi / (n + 1);
    NormPair out;
    out.a2_area = std::sqrt(sum);
    out.a2_paper = out.a2_area / std::sqrt(2.0 * std::numbers::pi);
    return out;
}

NormPair norm_pair(const TaylorSeries& phi, int radii, int angles, const GrowthModel& growth) {
    NormPair out = a2_norms(phi);
    out.b_norm = b_norm(phi, radii, angles, growth);
    out.ratio_b_over_a2paper = out.a2_paper > 0.0 ? out.b_norm / out.a2_paper : 0.0;
    return out;
}

double b_norm(const TaylorSeries& phi, int radii, int angles, const GrowthModel& growth) {
    if (radii < 16 || angles < 16) throw Error(ErrorKind::InvalidArgument, "b_norm grid sizes must be >= 16");
    double best = 0.0;
    for (int i = 0; i < radii; ++i) {
        const double r = static_cast<double>(i) / radii;
        const double weight = (1.0 - r * r) * (1.0 - r * r);
        const double tail = growth.tail(phi.order(), r);
        const int n_ang = (i == 0) ? 1 : angles;
        for (int j = 0; j < n_ang; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / angles);
            best = std::max(best, weight * (std::abs(horner(phi.coeffs(), z)) + tail));
        }
    }
    return best;
}

bool ahlfors_weill_gate(const TaylorSeries& phi, const GrowthModel& growth, int radii, int angles) {
    if (growth.kind() == GrowthModel::Kind::Exact && a2_norms(phi).a2_area / std::sqrt(std::numbers::pi) < 2.0) {
        return true;
    }
    return b_norm(phi, radii, angles, growth) < 2.0;
}

NormInequality norm_inequality_check(const TaylorSeries& phi, int radii, int angles) {
    const double lhs = b_norm(phi, radii, angles, GrowthModel::exact());
    const double rhs = std::sqrt(2.0) * std::numbers::pi * a2_norms(phi).a2_paper;
    return {lhs, rhs, lhs <= rhs + 1e-9};
}

double hyperbolic_density(Complex z, Domain domain) {
    const double r2 = std::norm(z);
    if (domain == Domain::Disk) {
        if (r2 >= 1.0) throw Error(ErrorKind::PointOnBoundary, "point not inside the unit disk");
        return 1.0 / (1.0 - r2);
    }
    if (r2 <= 1.0) throw Error(ErrorKind::PointOnBoundary, "point not inside the exterior disk");
    return 1.0 / (r2 - 1.0);
}

int winding_number(std::span<const Complex> curve, Complex p) {
    int wn = 0;
    const std::size_t n = curve.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = curve[i];
        const Complex b = curve[(i + 1) % n];
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && is_left(a, b, p) > 0.0) ++wn;
        } else if (b.imag() <= p.imag() && is_left(a, b, p) < 0.0) {
            --wn;
        }
    }
    return wn;
}

CoveringReport covering_check(const SchlichtFunction& w, double a2_sup, double eval_radius,
                              std::span<const Complex> probes, const GrowthModel& growth,
                              const CoveringOptions& options) {
    if (!(eval_radius > 0.0 && eval_radius < 1.0)) throw Error(ErrorKind::InvalidArgument, "eval_radius must lie in (0, 1)");
    if (!(a2_sup > 0.0)) throw Error(ErrorKind::InvalidArgument, "a2_sup must be positive");
    if (options.samples < 2048) throw Error(ErrorKind::InvalidArgument, "covering check needs >= 2048 samples");

    CoveringReport report;
    report.eval_radius = eval_radius;
    report.a2_sup = a2_sup;
    try {
        report.tail_bound = growth.tail(w.order(), eval_radius);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnboundedTail) throw Error(ErrorKind::TailTooLarge, e.what());
        throw;
    }
    if (report.tail_bound > options.tail_tolerance) {
        throw Error(ErrorKind::TailTooLarge, "tail bound " + std::to_string(report.tail_bound) + " at radius " +
                                                 std::to_string(eval_radius));
    }
    report.certified = true;

    const int n = options.samples;
    report.curve.reserve(static_cast<std::size_t>(n));
    report.curve_angles.reserve(static_cast<std::size_t>(n));
    report.radius_estimate = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * std::numbers::pi * j / n;
        const Complex v = horner(w.series().coeffs(), std::polar(eval_radius, t));
        report.curve_angles.push_back(t);
        report.curve.push_back(v);
        report.radius_estimate = std::min(report.radius_estimate, std::abs(v));
    }
    for (int j = 0; j < n; ++j) {
        report.max_spacing = std::max(report.max_spacing, std::abs(report.curve[static_cast<std::size_t>((j + 1) % n)] -
                                                                   report.curve[static_cast<std::size_t>(j)]));
    }

    const double guaranteed = 1.0 / (2.0 * a2_sup);
    for (const Complex p : probes) {
        for (int j = 0; j < n; ++j) {
            const Complex a = report.curve[static_cast<std::size_t>(j)];
            const Complex b = report.curve[static_cast<std::size_t>((j + 1) % n)];
            if (segment_distance(p, a, b) < std::abs(b - a) + report.tail_bound) {
                throw Error(ErrorKind::ProbeTooCloseToCurve,
                            "probe (" + std::to_string(p.real()) + ", " + std::to_string(p.imag()) +
                                ") is within sampling resolution of the curve");
            }
        }
        ProbeResult r;
        r.point = p;
        r.winding = winding_number(report.curve, p);
        r.covered = r.winding == 1;
        r.in_guaranteed_disk = std::abs(p) < guaranteed;
        if (r.in_guaranteed_disk && !r.covered) report.consistent = false;
        report.certified_points.push_back(r);
    }
    return report;
}

EnclosureReport enclosure_check(const ExteriorFunction& big_f, double a2_sup, double eval_radius,
                                const GrowthModel& growth, double tolerance, int samples) {
    if (!(eval_radius > 1.0)) throw Error(ErrorKind::InvalidArgument, "eval_radius must exceed 1");
    if (samples < 16) throw Error(ErrorKind::InvalidArgument, "too few samples");
    EnclosureReport report;
    report.tolerance = tolerance >= 0.0 ? tolerance : 10.0 * (eval_radius - 1.0);
    const GrowthModel model = big_f.exact ? GrowthModel::exact() : growth;
    try {
        report.tail_bound = model.tail(big_f.order(), 1.0 / eval_radius);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnboundedTail) throw Error(ErrorKind::TailTooLarge, e.what());
        throw;
    }
    if (report.tail_bound > 1e-4) {
        throw Error(ErrorKind::TailTooLarge, "exterior tail bound " + std::to_string(report.tail_bound));
    }
    const Complex center = big_f.b[0];
    for (int j = 0; j < samples; ++j) {
        const Complex zeta = std::polar(eval_radius, 2.0 * std::numbers::pi * j / samples);
        const Complex value = big_f.leading * zeta + horner(big_f.b, 1.0 / zeta);
        report.max_excursion = std::max(report.max_excursion, std::abs(value - center) + report.tail_bound);
    }
    report.ok = report.max_excursion <= a2_sup + report.tolerance;
    return report;
}

}  // namespace univalent
