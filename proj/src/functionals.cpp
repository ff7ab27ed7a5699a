#include "univalent/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace univalent {

namespace {

constexpr double kStrongThreshold = 1e-9;
constexpr double kWeakFullThreshold = 1e-6;

double relative_deviation(double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, reference);
}

}  // namespace

void FunctionalSpec::validate() const {
    if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "functional '" + name + "' has no terms");
    for (const auto& t : terms) {
        if (t.monomial.empty()) throw Error(ErrorKind::InvalidArgument, "empty monomial in '" + name + "'");
        for (const auto& f : t.monomial) {
            if (f.index < 2) throw Error(ErrorKind::InvalidArgument, "coefficient indices start at 2 (a_1 is fixed)");
            if (f.exponent < 1) throw Error(ErrorKind::InvalidArgument, "exponents must be >= 1");
        }
    }
}

int FunctionalSpec::max_index() const {
    int m = 0;
    for (const auto& t : terms)
        for (const auto& f : t.monomial) m = std::max(m, f.index);
    return m;
}

Complex eval_functional(const FunctionalSpec& spec, const SchlichtFunction& f) {
    spec.validate();
    if (f.order() < spec.max_index()) {
        throw Error(ErrorKind::InsufficientOrder, "functional '" + spec.name + "' needs a_" +
                                                      std::to_string(spec.max_index()));
    }
    Complex total{};
    for (const auto& term : spec.terms) {
        Complex prod = term.weight;
        for (const auto& factor : term.monomial) {
            const Complex a = f.a(factor.index);
            for (int e = 0; e < factor.exponent; ++e) prod *= a;
        }
        total += prod;
    }
    return total;
}

FunctionalSpec coefficient_spec(int n) {
    FunctionalSpec s{"a" + std::to_string(n), {{1.0, {{n, 1}}}}};
    s.validate();
    return s;
}

FunctionalSpec zalcman_spec(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "Zalcman functional needs n >= 2");
    return {"zalcman" + std::to_string(n), {{1.0, {{2 * n - 1, 1}}}, {-1.0, {{n, 2}}}}};
}

FunctionalSpec fekete_szego_spec(double lambda) {
    return {"fekete_szego", {{1.0, {{3, 1}}}, {-lambda, {{2, 2}}}}};
}

FunctionalSpec exterior_quadratic_spec(Complex m) {
    // a2^3 - 2 a2 (a2^2 - a3) - a4 + M (a2^2 - a3)^2
    //   = -a2^3 + 2 a2 a3 - a4 + M a2^4 - 2 M a2^2 a3 + M a3^2
    return {"exterior-quadratic",
            {
                {-1.0, {{2, 3}}},
                {2.0, {{2, 1}, {3, 1}}},
                {-1.0, {{4, 1}}},
                {m, {{2, 4}}},
                {-2.0 * m, {{2, 2}, {3, 1}}},
                {m, {{3, 2}}},
            }};
}

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Strong: return "strong";
        case SymmetryClass::WeakSingleRotation: return "weak_single_rotation";
        case SymmetryClass::None: return "none";
    }
    return "none";
}

SymmetryReport symmetry_scan(const FunctionalSpec& spec, const SchlichtFunction& f, int grid_size) {
    if (grid_size < 8) throw Error(ErrorKind::InvalidArgument, "symmetry scan needs grid_size >= 8");
    spec.validate();
    if (f.order() < spec.max_index()) {
        throw Error(ErrorKind::InsufficientOrder, "functional '" + spec.name + "' needs a_" +
                                                      std::to_string(spec.max_index()));
    }
    const double reference = std::abs(eval_functional(spec, f));
    const double step = 2.0 * std::numbers::pi / grid_size;
    auto modulus_at = [&](double alpha, double beta) { return std::abs(eval_functional(spec, rotate(f, alpha, beta))); };

    SymmetryReport report;
    report.grid = std::to_string(grid_size) + "x" + std::to_string(grid_size) + " torus, step 2pi/" +
                  std::to_string(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        for (int j = 0; j < grid_size; ++j) {
            const double alpha = -std::numbers::pi + i * step;
            const double beta = -std::numbers::pi + j * step;
            report.max_modulus_deviation =
                std::max(report.max_modulus_deviation, relative_deviation(modulus_at(alpha, beta), reference));
        }
    }
    if (report.max_modulus_deviation < kStrongThreshold) {
        report.symmetry = SymmetryClass::Strong;
        return report;
    }

    // One-parameter subgroups: (alpha, beta) = t (1, k), plus pure post-rotation (0, 1).
    // |k| never needs to exceed the largest total index weight of a monomial.
    int k_max = 1;
    for (const auto& term : spec.terms) {
        int weight = 0;
        for (const auto& fac : term.monomial) weight += fac.index * fac.exponent;
        k_max = std::max(k_max, weight);
    }
    std::vector<std::pair<int, int>> lines{{0, 1}};
    for (int k = -k_max; k <= k_max; ++k) lines.emplace_back(1, k);

    report.line_deviation = std::numeric_limits<double>::infinity();
    for (const auto& [p, q] : lines) {
        double dev = 0.0;
        for (int i = 0; i < grid_size; ++i) {
            const double t = -std::numbers::pi + i * step;
            dev = std::max(dev, relative_deviation(modulus_at(p * t, q * t), reference));
        }
        if (dev < report.line_deviation) {
            report.line_deviation = dev;
            report.line_p = p;
            report.line_q = q;
        }
    }
    if (report.line_deviation < kStrongThreshold && report.max_modulus_deviation > kWeakFullThreshold) {
        report.symmetry = SymmetryClass::WeakSingleRotation;
    }
    return report;
}

}  // namespace univalent
