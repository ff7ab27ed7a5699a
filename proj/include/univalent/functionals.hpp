#pragma once

#include <string>
#include <vector>

#include "univalent/classes.hpp"

namespace univalent {

/// a_index^exponent
struct Factor {
    int index;
    int exponent;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
    Complex weight;
    std::vector<Factor> monomial;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial in the Taylor coefficients a_2, a_3, ... given as weighted monomials.
struct FunctionalSpec {
    std::string name;
    std::vector<Term> terms;

    /// Throws InvalidArgument unless there is a term and every index >= 2, exponent >= 1.
    void validate() const;
    int max_index() const;

    friend bool operator==(const FunctionalSpec&, const FunctionalSpec&) = default;
};

/// sum of weight * prod a_m^e
Complex eval_functional(const FunctionalSpec& spec, const SchlichtFunction& f);

FunctionalSpec coefficient_spec(int n);
/// Z_n = a_{2n-1} - a_n^2
FunctionalSpec zalcman_spec(int n);
/// a_3 - lambda a_2^2
FunctionalSpec fekete_szego_spec(double lambda);
/// a_2^3 - 2 a_2 (a_2^2 - a_3) - a_4 + M (a_2^2 - a_3)^2, expanded into monomials.
FunctionalSpec exterior_quadratic_spec(Complex m);

enum class SymmetryClass { Strong, WeakSingleRotation, None };

std::string to_string(SymmetryClass c);

struct SymmetryReport {
    /// max over the (alpha, beta) torus of ||J(f_{alpha,beta})| - |J(f)||, relative to max(1, |J(f)|)
    double max_modulus_deviation = 0.0;
    SymmetryClass symmetry = SymmetryClass::None;
    std::string grid;
    /// Best invariant one-parameter family (alpha, beta) = t (p, q) and its deviation.
    int line_p = 0;
    int line_q = 0;
    double line_deviation = 0.0;
};

/// Scan |J(e^{i beta} f(e^{i alpha} z))| over a grid_size x grid_size torus grid and along
/// the one-parameter lines (alpha, beta) = t (1, k) and (0, 1).
SymmetryReport symmetry_scan(const FunctionalSpec& spec, const SchlichtFunction& f, int grid_size);

}  // namespace univalent
