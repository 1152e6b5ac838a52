#ifndef TWODVM_MEANFIELD_HPP
#define TWODVM_MEANFIELD_HPP

#include <optional>

#include "twodvm/model.hpp"

namespace twodvm {

/// Intrinsic-state energy per boson at deformation r >= 0:
///   E(r) = (1-xi) r^2/(1+r^2) + alpha r^4/(1+r^2)^2 + xi ((1-r^2)/(1+r^2))^2.
/// E(0) = xi and E(r) -> 1 + alpha as r -> infinity.
double energy_functional(double r, double xi, double alpha);

/// Threshold anharmonicity alpha_t = -(3 xi + 1)/2 below which the
/// functional develops an interior maximum in the symmetric phase.
/// Only defined for xi in [0, xi_critical].
double alpha_threshold(double xi);

/// Deformation of the broken-phase minimum,
///   r_min = sqrt(5 (xi - xi_c) / (2 alpha + 3 xi + 1)),
/// present for xi >= xi_c when the radicand is finite and non-negative
/// (r_min = 0 exactly at xi_c). Absent in the symmetric phase.
std::optional<double> r_min(double xi, double alpha);

/// Barrier-to-linearity separatrix f1 = (5 xi - 1)^2 / (4 (4 xi + alpha)),
/// the height of the origin maximum above the broken-phase minimum.
/// Absent for xi <= xi_c; domain error when 4 xi + alpha <= 0.
std::optional<double> separatrix_f1(double xi, double alpha);

/// Asymptote separatrix f2 = E(inf) - E(min):
///   1 + alpha - xi                              for xi <= xi_c,
///   (1 + 2 alpha + 3 xi)^2 / (4 (4 xi + alpha)) for xi >  xi_c.
/// Continuous at xi_c where both branches equal 0.8 + alpha.
double separatrix_f2(double xi, double alpha);

/// Control-parameter value xi* = 1 + alpha where f1 and f2 cross.
/// Requires alpha in (-1, 0] so the crossing lies in (0, 1].
double separatrix_crossing(double alpha);

enum class Phase { symmetric, broken };

/// Summary of the classical critical structure at one (xi, alpha) point.
/// f1 is present only in the broken phase; r_min only where it is real.
/// in_regime mirrors ModelParams::in_regime — outside it the closed forms
/// are reported as-is and the flag is the caller's warning.
struct MeanFieldReport {
    double xi;
    double alpha;
    Phase phase;
    double alpha_threshold; // -(3 xi + 1)/2, the r_min reality boundary
    std::optional<double> r_min;
    std::optional<double> f1;
    double f2;
    double crossing_xi; // 1 + alpha
    bool in_regime;
};

MeanFieldReport mean_field_report(double xi, double alpha);

} // namespace twodvm

#endif
