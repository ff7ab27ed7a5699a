#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "univalent/functionals.hpp"
#include "univalent/optimize.hpp"
#include "univalent/schwarzian.hpp"

using namespace univalent;

TEST_CASE("Zalcman functional on Koebe functions") {
    CHECK(std::abs(eval_functional(zalcman_spec(3), koebe(0.0, 8)) - (-4.0)) < 1e-12);
    for (double theta : {0.0, 0.7, -1.9}) {
        const SchlichtFunction k = koebe(theta, 16);
        for (int n = 2; n <= 6; ++n) {
            CHECK(std::abs(std::abs(eval_functional(zalcman_spec(n), k)) - (n - 1.0) * (n - 1.0)) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)zalcman_spec(1), Error);
}

TEST_CASE("Fekete-Szego on the Koebe function is 3 - 4 lambda") {
    for (double lambda : {0.0, 0.5, 1.0, 2.5}) {
        CHECK(std::abs(eval_functional(fekete_szego_spec(lambda), koebe(0.0, 4)) - (3.0 - 4.0 * lambda)) < 1e-12);
    }
}

TEST_CASE("expanded exterior quadratic functional equals M on the Koebe function") {
    for (double m : {0.0, 0.01, 1.0}) {
        CHECK(std::abs(eval_functional(exterior_quadratic_spec(m), koebe(0.0, 6)) - m) < 1e-12);
    }
    const Complex m{0.2, -0.4};
    CHECK(std::abs(eval_functional(exterior_quadratic_spec(m), koebe(0.0, 6)) - m) < 1e-12);
}

TEST_CASE("exterior quadratic functional in factored form agrees with the expansion") {
    const SchlichtFunction f(TaylorSeries(std::vector<Complex>{0.0, 1.0, {0.3, 0.2}, {-0.1, 0.4}, {0.05, -0.2}}));
    const Complex a2 = f.a(2), a3 = f.a(3), a4 = f.a(4), m{0.1, 0.3};
    const Complex factored = a2 * a2 * a2 - 2.0 * a2 * (a2 * a2 - a3) - a4 + m * (a2 * a2 - a3) * (a2 * a2 - a3);
    CHECK(std::abs(eval_functional(exterior_quadratic_spec(m), f) - factored) < 1e-14);
}

TEST_CASE("spec validation and order checks") {
    CHECK_THROWS_AS(FunctionalSpec({"empty", {}}).validate(), Error);
    CHECK_THROWS_AS(FunctionalSpec({"a1", {{1.0, {{1, 1}}}}}).validate(), Error);
    CHECK_THROWS_AS(FunctionalSpec({"zero_exp", {{1.0, {{2, 0}}}}}).validate(), Error);
    CHECK_THROWS_AS(FunctionalSpec({"no_mono", {{1.0, {}}}}).validate(), Error);
    CHECK(zalcman_spec(4).max_index() == 7);
    try {
        (void)eval_functional(zalcman_spec(4), koebe(0.0, 5));
        FAIL("expected InsufficientOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientOrder);
    }
}

TEST_CASE("symmetry classes") {
    const SchlichtFunction f(TaylorSeries(std::vector<Complex>{0.0, 1.0, {0.3, 0.2}, {-0.1, 0.4}, {0.05, -0.2}}));

    const SymmetryReport coeff = symmetry_scan(coefficient_spec(3), f, 16);
    CHECK(coeff.symmetry == SymmetryClass::Strong);
    CHECK(coeff.max_modulus_deviation < 1e-12);

    // a3 - a2^2 keeps its modulus only along beta = -alpha
    const SymmetryReport fs = symmetry_scan(fekete_szego_spec(1.0), f, 16);
    CHECK(fs.symmetry == SymmetryClass::WeakSingleRotation);
    CHECK(fs.line_p == 1);
    CHECK(fs.line_q == -1);
    CHECK(fs.line_deviation < 1e-12);

    const FunctionalSpec mixed{"mixed", {{1.0, {{2, 1}}}, {1.0, {{3, 1}}}, {1.0, {{2, 2}}}}};
    CHECK(symmetry_scan(mixed, f, 16).symmetry == SymmetryClass::None);

    CHECK(to_string(SymmetryClass::WeakSingleRotation) == "weak_single_rotation");
    CHECK_THROWS_AS((void)symmetry_scan(coefficient_spec(2), f, 4), Error);
}

TEST_CASE("property: coefficient moduli are rotation invariant") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const TaylorSeries phi = sample_ball(BallSpec{}, seed).padded(20);
        const SchlichtFunction w(solve_canonical(phi, 20));
        for (int n = 2; n <= 6; ++n) {
            const double base = std::abs(eval_functional(coefficient_spec(n), w));
            for (double alpha : {0.3, 2.0}) {
                CHECK(std::abs(std::abs(eval_functional(coefficient_spec(n), rotate(w, alpha, -alpha))) - base) < 1e-12);
            }
        }
    }
}
