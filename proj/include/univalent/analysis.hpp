#pragma once

#include <span>
#include <vector>

#include "univalent/classes.hpp"
#include "univalent/powerseries.hpp"

namespace univalent {

struct NormPair {
    double a2_paper = 0.0;  ///< (1/(2 pi) * area integral of |phi|^2)^{1/2}
    double a2_area = 0.0;   ///< (area integral of |phi|^2)^{1/2}
    double b_norm = 0.0;
    double ratio_b_over_a2paper = 0.0;
};

/// Exact A_2 norms of the truncated polynomial: a2_area^2 = sum |c_n|^2 pi / (n + 1).
/// Only the two integral norms are filled in.
NormPair a2_norms(const TaylorSeries& phi);

/// All four fields; b_norm on a radii x angles polar grid.
NormPair norm_pair(const TaylorSeries& phi, int radii = 64, int angles = 256,
                   const GrowthModel& growth = GrowthModel::exact());

/// Upper-biased estimate of sup (1 - |z|^2)^2 |phi(z)| over the polar grid
/// r_i = i / radii, t_j = 2 pi j / angles (tail bound added pointwise).
/// Grids whose sizes divide each other are nested, so refinement never lowers the estimate.
double b_norm(const TaylorSeries& phi, int radii, int angles, const GrowthModel& growth);

/// ||phi||_B < 2. Exact polynomials are first checked against the Bergman
/// kernel bound ||phi||_B <= ||phi||_area / sqrt(pi); otherwise the grid estimate decides.
bool ahlfors_weill_gate(const TaylorSeries& phi, const GrowthModel& growth = GrowthModel::exact(),
                        int radii = 64, int angles = 256);

struct NormInequality {
    double lhs;  ///< b_norm
    double rhs;  ///< sqrt(2) pi a2_paper
    bool ok;
};

NormInequality norm_inequality_check(const TaylorSeries& phi, int radii = 64, int angles = 256);

enum class Domain { Disk, Exterior };

/// 1 / (1 - |z|^2) on the disk, 1 / (|z|^2 - 1) on the exterior disk.
double hyperbolic_density(Complex z, Domain domain);

/// Winding number of the closed polygon through `curve` (last point joins the first) around p.
int winding_number(std::span<const Complex> curve, Complex p);

struct ProbeResult {
    Complex point;
    bool covered = false;
    int winding = 0;
    /// |p| < 1 / (2 a2_sup): the image must contain p if a2_sup really bounds |a_2|.
    bool in_guaranteed_disk = false;
};

struct CoveringReport {
    double radius_estimate = 0.0;
    double eval_radius = 0.0;
    std::vector<ProbeResult> certified_points;
    double tail_bound = 0.0;
    /// Largest distance between adjacent curve samples.
    double max_spacing = 0.0;
    double a2_sup = 0.0;
    bool certified = false;
    /// Every probe in the guaranteed disk was covered.
    bool consistent = true;
    std::vector<double> curve_angles;
    std::vector<Complex> curve;
};

struct CoveringOptions {
    int samples = 2048;
    double tail_tolerance = 1e-4;
};

/// Sample w on |z| = eval_radius, report min |w| and the winding number of
/// that curve around each probe. A probe closer to some chord than the
/// chord's own length cannot be decided and raises ProbeTooCloseToCurve.
CoveringReport covering_check(const SchlichtFunction& w, double a2_sup, double eval_radius,
                              std::span<const Complex> probes, const GrowthModel& growth,
                              const CoveringOptions& options = {});

struct EnclosureReport {
    double max_excursion = 0.0;  ///< max |W - b_0| on the sampled circle, tail included
    double tolerance = 0.0;
    double tail_bound = 0.0;
    bool ok = false;
};

/// Check that W(eval_radius e^{it}) stays in {|W - b_0| <= a2_sup + tol} with
/// tol = 10 (eval_radius - 1) unless given. `growth` bounds the b_n beyond the stored ones.
EnclosureReport enclosure_check(const ExteriorFunction& big_f, double a2_sup, double eval_radius = 1.005,
                                const GrowthModel& growth = GrowthModel::exact(), double tolerance = -1.0,
                                int samples = 2048);

}  // namespace univalent
