#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "univalent/analysis.hpp"
#include "univalent/optimize.hpp"
#include "univalent/schwarzian.hpp"

using namespace univalent;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

const TaylorSeries kPhi1(std::vector<Complex>{0.0, std::sqrt(2.0 / std::numbers::pi)});

}  // namespace

TEST_CASE("A2 norms of the unit direction z") {
    const NormPair n = a2_norms(kPhi1);
    CHECK(n.a2_area == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(n.a2_paper == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("norm inequality on the unit direction") {
    const NormInequality q = norm_inequality_check(kPhi1);
    CHECK(q.ok);
    CHECK(q.rhs == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    // sup r (1 - r^2)^2 is attained at r = 1/sqrt(5)
    const double exact = std::sqrt(2.0 / std::numbers::pi) * (16.0 / 25.0) / std::sqrt(5.0);
    CHECK(q.lhs <= exact + 1e-15);
    CHECK(q.lhs == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("B norm of the Koebe Schwarzian is 6") {
    const TaylorSeries s = schwarzian_derivative(koebe(0.0, 64).series());
    CHECK(b_norm(s, 64, 256, GrowthModel::exact()) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK_FALSE(ahlfors_weill_gate(s));
    CHECK_THROWS_AS((void)b_norm(s, 8, 256, GrowthModel::exact()), Error);
}

TEST_CASE("gate accepts small polynomials with either path") {
    const TaylorSeries phi(std::vector<Complex>{0.5, 0.2});
    CHECK(ahlfors_weill_gate(phi));
    CHECK(ahlfors_weill_gate(phi, GrowthModel::geometric(1e-3, 0.5)));
    CHECK_FALSE(ahlfors_weill_gate(TaylorSeries::constant(2.5, 0)));
}

TEST_CASE("property: nested grid refinement never lowers the estimate") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const TaylorSeries phi = sample_ball(BallSpec{5, 1.0, NormMode::Area}, seed);
        const double coarse = b_norm(phi, 16, 64, GrowthModel::exact());
        const double fine = b_norm(phi, 64, 256, GrowthModel::exact());
        CHECK(coarse <= fine + 1e-15);
    }
}

TEST_CASE("property: B norm bounded by the area norm (paper mode)") {
    for (std::uint64_t seed = 100; seed < 300; ++seed) {
        const TaylorSeries phi = sample_ball(BallSpec{4, 1.0, NormMode::Paper}, seed);
        CHECK(norm_inequality_check(phi, 32, 128).ok);
    }
}

TEST_CASE("hyperbolic density") {
    CHECK(hyperbolic_density(0.0, Domain::Disk) == 1.0);
    CHECK(hyperbolic_density(0.5, Domain::Disk) == doctest::Approx(4.0 / 3.0));
    CHECK(hyperbolic_density({0.0, 2.0}, Domain::Exterior) == doctest::Approx(1.0 / 3.0));
    CHECK(kind_of([] { (void)hyperbolic_density(1.0, Domain::Disk); }) == ErrorKind::PointOnBoundary);
    CHECK(kind_of([] { (void)hyperbolic_density(0.5, Domain::Exterior); }) == ErrorKind::PointOnBoundary);
}

TEST_CASE("property: density times boundary distance lies in [1/4, 1]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex z = std::polar(std::sqrt(u(rng)) * 0.999999, 2.0 * std::numbers::pi * u(rng));
        const double product = hyperbolic_density(z, Domain::Disk) * (1.0 - std::abs(z));
        CHECK(product >= 0.25);
        CHECK(product <= 1.0);
        CHECK(product == doctest::Approx(1.0 / (1.0 + std::abs(z))));
    }
}

TEST_CASE("winding numbers of a sampled circle") {
    std::vector<Complex> circle;
    for (int j = 0; j < 64; ++j) circle.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / 64));
    CHECK(winding_number(circle, 0.0) == 1);
    CHECK(winding_number(circle, {0.3, -0.5}) == 1);
    CHECK(winding_number(circle, 2.0) == 0);
    std::vector<Complex> reversed(circle.rbegin(), circle.rend());
    CHECK(winding_number(reversed, 0.0) == -1);
    std::vector<Complex> twice;
    for (int j = 0; j < 128; ++j) twice.push_back(std::polar(1.0, 4.0 * std::numbers::pi * j / 128));
    CHECK(winding_number(twice, 0.0) == 2);
}

TEST_CASE("covering radius of the Koebe function in closed form") {
    const SchlichtFunction k = koebe(0.0, 4096);
    const Complex probes[] = {{-0.2, 0.0}, {-0.3, 0.0}, {0.5, 0.5}};
    for (double r : {0.5, 0.9, 0.99}) {
        const CoveringReport rep = covering_check(k, 2.0, r, probes, GrowthModel::bieberbach());
        CHECK(std::abs(rep.radius_estimate - r / ((1.0 + r) * (1.0 + r))) < 1e-6);
        CHECK(rep.certified);
        CHECK(rep.certified_points[0].covered);
        CHECK(rep.certified_points[0].in_guaranteed_disk);
        CHECK_FALSE(rep.certified_points[1].covered);
        CHECK(rep.consistent);
        CHECK(rep.curve.size() == 2048);
    }
    const CoveringReport at99 = covering_check(k, 2.0, 0.99, {}, GrowthModel::bieberbach());
    CHECK(std::abs(at99.radius_estimate - 0.25) < 3e-3);
}

TEST_CASE("covering errors") {
    const SchlichtFunction k = koebe(0.0, 64);
    CHECK(kind_of([&] { (void)covering_check(k, 2.0, 0.9, {}, GrowthModel::bieberbach()); }) == ErrorKind::TailTooLarge);
    const SchlichtFunction big = koebe(0.0, 512);
    const Complex on_curve[] = {{-0.9 / 3.61, 0.0}};
    CHECK(kind_of([&] { (void)covering_check(big, 2.0, 0.9, on_curve, GrowthModel::bieberbach()); }) ==
          ErrorKind::ProbeTooCloseToCurve);
    CHECK(kind_of([&] { (void)covering_check(big, 2.0, 1.0, {}, GrowthModel::bieberbach()); }) ==
          ErrorKind::InvalidArgument);
    CoveringOptions few;
    few.samples = 100;
    CHECK(kind_of([&] { (void)covering_check(big, 2.0, 0.9, {}, GrowthModel::bieberbach(), few); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("property: probes near the origin are covered by univalent samples") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TaylorSeries phi = sample_ball(BallSpec{}, seed).padded(128);
        const TaylorSeries w_can = solve_canonical(phi, 128);
        const SchlichtFunction w(w_can);
        const Complex probes[] = {{0.05, 0.0}, {0.0, -0.1}, {5.0, 5.0}};
        const CoveringReport rep = covering_check(w, 2.0, 0.9, probes, GrowthModel::observed_geometric(w_can));
        CHECK(rep.certified_points[0].winding == 1);
        CHECK(rep.certified_points[1].winding == 1);
        CHECK(rep.certified_points[2].winding == 0);
        CHECK(rep.consistent);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("enclosure of the Koebe exterior function") {
    const ExteriorFunction big_f(1.0, {-2.0, 1.0}, true);
    const EnclosureReport ok = enclosure_check(big_f, 2.0);
    CHECK(ok.ok);
    CHECK(ok.tolerance == doctest::Approx(0.05));
    CHECK(ok.max_excursion == doctest::Approx(1.005 + 1.0 / 1.005).epsilon(1e-9));
    CHECK_FALSE(enclosure_check(big_f, 1.9).ok);
    CHECK_THROWS_AS((void)enclosure_check(big_f, 2.0, 0.9), Error);
    const ExteriorFunction truncated(1.0, {-2.0, 1.0, 0.0}, false);
    CHECK(kind_of([&] { (void)enclosure_check(truncated, 2.0, 1.005, GrowthModel::bieberbach()); }) ==
          ErrorKind::TailTooLarge);
}
