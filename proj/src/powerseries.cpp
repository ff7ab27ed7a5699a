#include "univalent/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace univalent {

namespace {

void require_finite(std::span<const Complex> coeffs, const char* where) {
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag())) {
            throw Error(ErrorKind::NonFiniteCoefficient,
                        std::string(where) + ": coefficient " + std::to_string(n) + " is not finite");
        }
    }
}

int common_order(const TaylorSeries& a, const TaylorSeries& b) { return std::min(a.order(), b.order()); }

}  // namespace

TaylorSeries::TaylorSeries() : coeffs_(1, Complex{}) {}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "a series needs at least one coefficient");
    }
    require_finite(coeffs_, "TaylorSeries");
}

TaylorSeries TaylorSeries::zero(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
    return TaylorSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TaylorSeries TaylorSeries::constant(Complex value, int order) {
    auto s = zero(order);
    s.coeffs_[0] = value;
    require_finite(s.coeffs_, "constant");
    return s;
}

TaylorSeries TaylorSeries::identity(int order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "identity needs order >= 1");
    auto s = zero(order);
    s.coeffs_[1] = 1.0;
    return s;
}

TaylorSeries TaylorSeries::geometric(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
    return TaylorSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, Complex{1.0, 0.0}));
}

Complex TaylorSeries::coeff(int n) const {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative coefficient index");
    if (n > order()) {
        throw Error(ErrorKind::InsufficientOrder,
                    "coefficient " + std::to_string(n) + " requested from a series of order " + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

TaylorSeries TaylorSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw Error(ErrorKind::InsufficientOrder,
                    "cannot truncate order " + std::to_string(order()) + " to " + std::to_string(new_order));
    }
    return TaylorSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TaylorSeries TaylorSeries::padded(int new_order) const {
    if (new_order <= order()) return truncated(new_order);
    auto out = coeffs_;
    out.resize(static_cast<std::size_t>(new_order) + 1);
    return TaylorSeries(std::move(out));
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& rhs) {
    coeffs_.resize(static_cast<std::size_t>(common_order(*this, rhs)) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    require_finite(coeffs_, "add");
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& rhs) {
    coeffs_.resize(static_cast<std::size_t>(common_order(*this, rhs)) + 1);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    require_finite(coeffs_, "sub");
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(Complex scalar) {
    for (auto& c : coeffs_) c *= scalar;
    require_finite(coeffs_, "scale");
    return *this;
}

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries out = a;
    out += b;
    return out;
}

TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries out = a;
    out -= b;
    return out;
}

TaylorSeries scale(const TaylorSeries& a, Complex s) {
    TaylorSeries out = a;
    out *= s;
    return out;
}

TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b) {
    const int order = common_order(a, b);
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Complex acc{};
        for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return TaylorSeries(std::move(out));
}

TaylorSeries div(const TaylorSeries& a, const TaylorSeries& b) {
    if (b[0] == Complex{}) {
        throw Error(ErrorKind::DivisorVanishesAtOrigin, "divisor has zero constant term");
    }
    const int order = common_order(a, b);
    std::vector<Complex> q(static_cast<std::size_t>(order) + 1);
    const Complex inv_b0 = 1.0 / b[0];
    for (int n = 0; n <= order; ++n) {
        Complex acc = a[n];
        for (int k = 1; k <= n; ++k) acc -= b[k] * q[static_cast<std::size_t>(n - k)];
        q[static_cast<std::size_t>(n)] = acc * inv_b0;
    }
    return TaylorSeries(std::move(q));
}

TaylorSeries reciprocal(const TaylorSeries& b) { return div(TaylorSeries::constant(1.0, b.order()), b); }

TaylorSeries derivative(const TaylorSeries& a) {
    if (a.order() == 0) return TaylorSeries::zero(0);
    std::vector<Complex> out(static_cast<std::size_t>(a.order()));
    for (int n = 1; n <= a.order(); ++n) out[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * a[n];
    return TaylorSeries(std::move(out));
}

TaylorSeries compose(const TaylorSeries& a, const TaylorSeries& b) {
    if (b[0] != Complex{}) {
        throw Error(ErrorKind::InnerSeriesNotRooted, "inner series must vanish at the origin");
    }
    const int order = common_order(a, b);
    // Horner: ((a_N b + a_{N-1}) b + ...) b + a_0
    TaylorSeries acc = TaylorSeries::constant(a[order], order);
    const TaylorSeries inner = b.truncated(order);
    for (int n = order - 1; n >= 0; --n) {
        acc = mul(acc, inner);
        std::vector<Complex> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += a[n];
        acc = TaylorSeries(std::move(c));
    }
    return acc;
}

TaylorSeries rotate_argument(const TaylorSeries& a, double alpha) {
    std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] *= std::polar(1.0, static_cast<double>(n) * alpha);
    return TaylorSeries(std::move(out));
}

GrowthModel GrowthModel::geometric(double amplitude, double rho) {
    if (!(amplitude >= 0.0) || !(rho >= 0.0) || !std::isfinite(amplitude) || !std::isfinite(rho)) {
        throw Error(ErrorKind::InvalidArgument, "geometric growth needs finite A >= 0 and rho >= 0");
    }
    return GrowthModel(Kind::Geometric, amplitude, rho);
}

GrowthModel GrowthModel::linear(double amplitude) {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
        throw Error(ErrorKind::InvalidArgument, "linear growth needs finite A >= 0");
    }
    return GrowthModel(Kind::Linear, amplitude, 1.0);
}

GrowthModel GrowthModel::observed_geometric(const TaylorSeries& a, double safety) {
    constexpr double kRhoFloor = 1e-3;
    const int order = a.order();
    if (order < 1) return geometric(0.0, kRhoFloor);
    double rho = kRhoFloor;
    for (int n = std::max(1, order / 2); n <= order; ++n) {
        const double m = std::abs(a[n]);
        if (m > 0.0) rho = std::max(rho, std::pow(m, 1.0 / n));
    }
    double amplitude = 0.0;
    for (int n = 1; n <= order; ++n) amplitude = std::max(amplitude, std::abs(a[n]) / std::pow(rho, n));
    return geometric(safety * amplitude, rho);
}

double GrowthModel::tail(int order, double r) const {
    switch (kind_) {
        case Kind::Exact:
            return 0.0;
        case Kind::Geometric: {
            const double q = rho_ * r;
            if (amplitude_ == 0.0) return 0.0;
            if (q >= 1.0) {
                throw Error(ErrorKind::UnboundedTail, "geometric tail diverges (rho*|z| = " + std::to_string(q) + ")");
            }
            return amplitude_ * std::pow(q, order + 1) / (1.0 - q);
        }
        case Kind::Linear: {
            if (amplitude_ == 0.0) return 0.0;
            if (r >= 1.0) throw Error(ErrorKind::UnboundedTail, "linear-growth tail diverges on |z| >= 1");
            // sum_{n >= N+1} n r^n = r^{N+1} ((N+1) - N r) / (1 - r)^2
            const double n = static_cast<double>(order);
            return amplitude_ * std::pow(r, order + 1) * ((n + 1.0) - n * r) / ((1.0 - r) * (1.0 - r));
        }
    }
    return 0.0;
}

Complex horner(std::span<const Complex> coeffs, Complex z) noexcept {
    Complex acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

EvalResult eval(const TaylorSeries& a, Complex z, const GrowthModel& growth) {
    const double r = std::abs(z);
    if (r > 1.0) throw Error(ErrorKind::PointOutsideDisk, "|z| = " + std::to_string(r) + " > 1");
    return EvalResult{horner(a.coeffs(), z), growth.tail(a.order(), r)};
}

double max_coeff_distance(const TaylorSeries& a, const TaylorSeries& b) {
    double d = 0.0;
    for (int n = 0; n <= common_order(a, b); ++n) d = std::max(d, std::abs(a[n] - b[n]));
    return d;
}

}  // namespace univalent
