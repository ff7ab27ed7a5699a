#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "univalent/powerseries.hpp"

using namespace univalent;

namespace {

TaylorSeries random_series(std::mt19937_64& rng, int order, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = {g(rng), g(rng)};
    return TaylorSeries(std::move(c));
}

TaylorSeries rooted(TaylorSeries s) {
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = 0.0;
    return TaylorSeries(std::move(c));
}

TaylorSeries unit_constant(TaylorSeries s) {
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = 1.0;
    return TaylorSeries(std::move(c));
}

}  // namespace

TEST_CASE("construction rejects empty and non-finite coefficients") {
    CHECK_THROWS_AS(TaylorSeries(std::vector<Complex>{}), Error);
    try {
        TaylorSeries({Complex{1.0, std::numeric_limits<double>::quiet_NaN()}});
        FAIL("expected NonFiniteCoefficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonFiniteCoefficient);
        CHECK(e.category() == ErrorCategory::Domain);
    }
    CHECK_THROWS_AS(TaylorSeries::identity(0), Error);
    CHECK(TaylorSeries().order() == 0);
}

TEST_CASE("checked access past the order") {
    const TaylorSeries s = TaylorSeries::geometric(4);
    CHECK(s.coeff(4) == Complex{1.0, 0.0});
    try {
        (void)s.coeff(5);
        FAIL("expected InsufficientOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientOrder);
    }
}

TEST_CASE("geometric series times (1 - z) is 1") {
    const TaylorSeries g = TaylorSeries::geometric(10);
    const TaylorSeries one_minus_z(std::vector<Complex>{1.0, -1.0});
    const TaylorSeries p = g * one_minus_z;
    CHECK(p.order() == 1);
    const TaylorSeries q = g * one_minus_z.padded(10);
    CHECK(q.order() == 10);
    CHECK(q[0] == Complex{1.0, 0.0});
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(q[n]) == 0.0);
}

TEST_CASE("binary operations take the smaller order") {
    const TaylorSeries a = TaylorSeries::geometric(8);
    const TaylorSeries b = TaylorSeries::geometric(5);
    CHECK((a + b).order() == 5);
    CHECK((a - b).order() == 5);
    CHECK((a * b).order() == 5);
    CHECK((a / b).order() == 5);
    CHECK(compose(a, TaylorSeries::identity(3)).order() == 3);
}

TEST_CASE("reciprocal of 1 - z is the geometric series") {
    const TaylorSeries r = reciprocal(TaylorSeries(std::vector<Complex>{1.0, -1.0, 0.0, 0.0, 0.0, 0.0}));
    CHECK(max_coeff_distance(r, TaylorSeries::geometric(5)) < 1e-15);
}

TEST_CASE("division by a series vanishing at the origin") {
    try {
        (void)div(TaylorSeries::geometric(3), TaylorSeries::identity(3));
        FAIL("expected DivisorVanishesAtOrigin");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisorVanishesAtOrigin);
    }
}

TEST_CASE("composition needs an inner series through the origin") {
    try {
        (void)compose(TaylorSeries::geometric(3), TaylorSeries::geometric(3));
        FAIL("expected InnerSeriesNotRooted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InnerSeriesNotRooted);
    }
}

TEST_CASE("composition oracle: 1/(1 - 2z) from the geometric series") {
    const TaylorSeries two_z(std::vector<Complex>{0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const TaylorSeries c = compose(TaylorSeries::geometric(6), two_z);
    for (int n = 0; n <= 6; ++n) CHECK(std::abs(c[n] - std::pow(2.0, n)) < 1e-12);
}

TEST_CASE("derivative") {
    const TaylorSeries d = derivative(TaylorSeries::geometric(4));
    CHECK(d.order() == 3);
    for (int n = 0; n <= 3; ++n) CHECK(d[n] == Complex(n + 1.0, 0.0));
    CHECK(derivative(TaylorSeries::constant(3.0, 0)).order() == 0);
}

TEST_CASE("rotate_argument multiplies coefficient n by e^{i n alpha}") {
    const TaylorSeries r = rotate_argument(TaylorSeries::geometric(3), 0.5);
    for (int n = 0; n <= 3; ++n) CHECK(std::abs(r[n] - std::polar(1.0, 0.5 * n)) < 1e-15);
}

TEST_CASE("property: ring laws on random series") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const TaylorSeries a = random_series(rng, 12);
        const TaylorSeries b = random_series(rng, 12);
        const TaylorSeries c = random_series(rng, 12);
        CHECK(max_coeff_distance(a * b, b * a) < 1e-12);
        CHECK(max_coeff_distance(a * (b + c), a * b + a * c) < 1e-10);
        CHECK(max_coeff_distance((a * b) * c, a * (b * c)) < 1e-9);
        const TaylorSeries u = unit_constant(b);
        CHECK(max_coeff_distance((a / u) * u, a) < 1e-8);
    }
}

TEST_CASE("property: composition is associative and respects products") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const TaylorSeries a = random_series(rng, 10, 0.5);
        const TaylorSeries b = rooted(random_series(rng, 10, 0.5));
        const TaylorSeries c = rooted(random_series(rng, 10, 0.5));
        CHECK(max_coeff_distance(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-10);
        const TaylorSeries d = random_series(rng, 10, 0.5);
        CHECK(max_coeff_distance(compose(a * d, b), compose(a, b) * compose(d, b)) < 1e-10);
    }
}

TEST_CASE("property: evaluation is a ring homomorphism on exact polynomials") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int trial = 0; trial < 50; ++trial) {
        const TaylorSeries a = random_series(rng, 6);
        const TaylorSeries b = random_series(rng, 6);
        const TaylorSeries prod = a.padded(12) * b.padded(12);
        const Complex z{u(rng), u(rng)};
        const auto ea = eval(a, z, GrowthModel::exact());
        const auto eb = eval(b, z, GrowthModel::exact());
        const auto ep = eval(prod, z, GrowthModel::exact());
        CHECK(std::abs(ep.value - ea.value * eb.value) < 1e-11);
        CHECK(ep.tail_bound == 0.0);
    }
}

TEST_CASE("eval rejects points outside the closed disk") {
    try {
        (void)eval(TaylorSeries::geometric(3), {1.5, 0.0}, GrowthModel::exact());
        FAIL("expected PointOutsideDisk");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PointOutsideDisk);
    }
    CHECK_NOTHROW((void)eval(TaylorSeries::geometric(3), {1.0, 0.0}, GrowthModel::exact()));
}

TEST_CASE("tail bounds in closed form") {
    // geometric: A q^{N+1} / (1 - q)
    CHECK(GrowthModel::geometric(1.0, 1.0).tail(9, 0.5) == doctest::Approx(std::pow(0.5, 10) / 0.5).epsilon(1e-14));
    // linear: sum_{n > N} n r^n
    const double r = 0.6;
    double direct = 0.0;
    for (int n = 6; n < 2000; ++n) direct += n * std::pow(r, n);
    CHECK(GrowthModel::bieberbach().tail(5, r) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(GrowthModel::exact().tail(3, 1.0) == 0.0);
    try {
        (void)GrowthModel::bieberbach().tail(5, 1.0);
        FAIL("expected UnboundedTail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnboundedTail);
    }
}

TEST_CASE("the truncation bound really bounds the truncation error") {
    // 1/(1 - z/2) truncated at 10 against its closed form
    std::vector<Complex> c(11);
    for (int n = 0; n <= 10; ++n) c[static_cast<std::size_t>(n)] = std::pow(0.5, n);
    const TaylorSeries s(std::move(c));
    const GrowthModel g = GrowthModel::geometric(1.0, 0.5);
    for (double t = 0.0; t < 6.3; t += 0.7) {
        const Complex z = std::polar(0.9, t);
        const auto e = eval(s, z, g);
        CHECK(std::abs(e.value - 1.0 / (1.0 - 0.5 * z)) <= e.tail_bound + 1e-15);
    }
}

TEST_CASE("observed geometric growth dominates the visible coefficients") {
    const TaylorSeries s = TaylorSeries::geometric(20);
    const GrowthModel g = GrowthModel::observed_geometric(s);
    CHECK(g.rho() == doctest::Approx(1.0));
    for (int n = 1; n <= 20; ++n) CHECK(std::abs(s[n]) <= g.amplitude() * std::pow(g.rho(), n));
    CHECK(GrowthModel::observed_geometric(TaylorSeries::identity(1)).kind() == GrowthModel::Kind::Geometric);
}

TEST_CASE("error categories") {
    CHECK(category_of(ErrorKind::InvalidArgument) == ErrorCategory::Input);
    CHECK(category_of(ErrorKind::MismatchedBalls) == ErrorCategory::Input);
    CHECK(category_of(ErrorKind::PoleInDisk) == ErrorCategory::Domain);
    CHECK(category_of(ErrorKind::GateFailed) == ErrorCategory::Domain);
    CHECK(category_of(ErrorKind::InvariantViolation) == ErrorCategory::Internal);
    CHECK(std::string(Error(ErrorKind::TailTooLarge, "x").what()) == "TailTooLarge: x");
}
