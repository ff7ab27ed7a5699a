#pragma once

#include <vector>

#include "univalent/powerseries.hpp"

namespace univalent {

/// f(z) = e^{i theta} z + a_2 z^2 + ... on the unit disk.
class SchlichtFunction {
public:
    /// Requires c_0 = 0 and |c_1| = 1 (to 1e-12); theta is read from c_1.
    explicit SchlichtFunction(TaylorSeries series);

    const TaylorSeries& series() const noexcept { return series_; }
    double theta() const noexcept { return theta_; }
    int order() const noexcept { return series_.order(); }
    /// a_n, checked against the truncation order.
    Complex a(int n) const { return series_.coeff(n); }

private:
    TaylorSeries series_;
    double theta_;
};

/// F(zeta) = leading * zeta + b_0 + b_1 / zeta + ... near infinity.
///
/// `b` holds b_0..b_M. When `exact` is set the expansion is a finite Laurent
/// polynomial and every b_n with n > M vanishes.
struct ExteriorFunction {
    ExteriorFunction(Complex leading_in, std::vector<Complex> b_in, bool exact_in = false);

    Complex leading;
    std::vector<Complex> b;
    bool exact = false;

    int order() const noexcept { return static_cast<int>(b.size()) - 1; }
    /// The b_k as the series b_0 + b_1 u + b_2 u^2 + ... in u = 1/zeta.
    TaylorSeries tail_series() const { return TaylorSeries(b); }
};

/// Koebe family with coefficients a_n = n e^{-i(n-1) theta}.
SchlichtFunction koebe(double theta, int n);

/// e^{i beta} f(e^{i alpha} z).
SchlichtFunction rotate(const SchlichtFunction& f, double alpha, double beta);

/// F(zeta) = 1 / f(1 / zeta), with b_0..b_m. Needs f of order >= m + 2.
ExteriorFunction invert_to_sigma(const SchlichtFunction& f, int m);

/// f(z) = 1 / F(1 / z) to order n.
SchlichtFunction invert_to_s(const ExteriorFunction& big_f, int n);

/// Two-term leading structure of a_n in b_0 and b_1 next to the exact value.
struct LeadingStructure {
    Complex predicted;
    Complex actual;
};

/// Integer phase exponents k with eps = e^{i k theta}, found by running the
/// inversion recursion symbolically (cached).
struct PhaseExponents {
    int leading;          ///< eps_{n-1,0}, multiplies b_0^{n-1}
    int subleading;       ///< eps_{1,n-3}, multiplies b_1 b_0^{n-3}
    long long leading_coefficient;     ///< integer factor of b_0^{n-1}, (-1)^{n-1}
    long long subleading_coefficient;  ///< integer factor of b_1 b_0^{n-3}, -(-1)^{n-1}(n-2)
};

PhaseExponents phase_exponents(int n);

/// Prediction of a_n from b_0, b_1 only, alongside a_n from full inversion. Requires n >= 3.
LeadingStructure exterior_leading_structure(const ExteriorFunction& big_f, int n);

}  // namespace univalent
