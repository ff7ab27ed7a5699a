#pragma once

#include <complex>
#include <span>
#include <vector>

#include "univalent/error.hpp"

namespace univalent {

using Complex = std::complex<double>;

/// Truncated power series c_0 + c_1 z + ... + c_N z^N about the origin.
///
/// The truncation order travels with the value. Binary operations return the
/// smaller of the two operand orders, so no result ever claims more precision
/// than its inputs carry. Coefficients are always finite.
class TaylorSeries {
public:
    /// The zero series of order 0.
    TaylorSeries();
    explicit TaylorSeries(std::vector<Complex> coeffs);

    static TaylorSeries zero(int order);
    static TaylorSeries constant(Complex value, int order);
    /// The identity map z, truncated at `order` (order >= 1).
    static TaylorSeries identity(int order);
    /// Geometric series 1 + z + z^2 + ... truncated at `order`.
    static TaylorSeries geometric(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Unchecked access; n must lie in [0, order].
    const Complex& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    /// Checked access; throws InsufficientOrder when n > order.
    Complex coeff(int n) const;

    /// Drop coefficients above `order` (order must not exceed the current one).
    TaylorSeries truncated(int order) const;
    /// Pad with zero coefficients. Only meaningful for exact polynomials.
    TaylorSeries padded(int order) const;

    TaylorSeries& operator+=(const TaylorSeries& rhs);
    TaylorSeries& operator-=(const TaylorSeries& rhs);
    TaylorSeries& operator*=(Complex scalar);

    friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b);
/// Truncated Cauchy product.
TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b);
/// q with q*b = a; requires b(0) != 0.
TaylorSeries div(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries reciprocal(const TaylorSeries& b);
TaylorSeries scale(const TaylorSeries& a, Complex s);
/// Term-by-term derivative; the order drops by one (an order-0 series yields the zero series of order 0).
TaylorSeries derivative(const TaylorSeries& a);
/// a(b(z)) for b(0) = 0, via Horner's scheme in the series ring.
TaylorSeries compose(const TaylorSeries& a, const TaylorSeries& b);
/// f(e^{i alpha} z): coefficient n picks up e^{i n alpha}.
TaylorSeries rotate_argument(const TaylorSeries& a, double alpha);

inline TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) { return add(a, b); }
inline TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) { return sub(a, b); }
inline TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) { return mul(a, b); }
inline TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) { return div(a, b); }
inline TaylorSeries operator*(Complex s, const TaylorSeries& a) { return scale(a, s); }
inline TaylorSeries operator*(const TaylorSeries& a, Complex s) { return scale(a, s); }

/// Bound |c_n| <= g(n) on the coefficients beyond the truncation order.
class GrowthModel {
public:
    enum class Kind {
        Exact,      ///< the series is a polynomial; nothing beyond the order
        Geometric,  ///< g(n) = A rho^n
        Linear,     ///< g(n) = A n (A = 1 is the Bieberbach bound)
    };

    static GrowthModel exact() { return GrowthModel(Kind::Exact, 0.0, 0.0); }
    static GrowthModel geometric(double amplitude, double rho);
    static GrowthModel linear(double amplitude);
    static GrowthModel bieberbach() { return linear(1.0); }

    /// Fit A rho^n to the computed coefficients of `a` (indices >= 1).
    ///
    /// rho is the largest n-th root ratio seen over the upper half of the
    /// coefficients and A the smallest amplitude dominating every computed
    /// coefficient. This is an extrapolation from the visible coefficients,
    /// not a certificate.
    static GrowthModel observed_geometric(const TaylorSeries& a, double safety = 2.0);

    Kind kind() const noexcept { return kind_; }
    double amplitude() const noexcept { return amplitude_; }
    double rho() const noexcept { return rho_; }

    /// sum_{n > order} g(n) r^n in closed form; throws UnboundedTail if divergent.
    double tail(int order, double r) const;

private:
    GrowthModel(Kind kind, double amplitude, double rho) : kind_(kind), amplitude_(amplitude), rho_(rho) {}

    Kind kind_;
    double amplitude_;
    double rho_;
};

struct EvalResult {
    Complex value;
    double tail_bound = 0.0;
};

/// Horner evaluation plus a truncation error bound from `growth`.
/// Points with |z| > 1 are rejected with PointOutsideDisk.
EvalResult eval(const TaylorSeries& a, Complex z, const GrowthModel& growth);

/// Plain Horner evaluation of the truncated polynomial, no checks.
Complex horner(std::span<const Complex> coeffs, Complex z) noexcept;

/// max_n |a_n - b_n| over the common order.
double max_coeff_distance(const TaylorSeries& a, const TaylorSeries& b);

}  // namespace univalent
