#ifndef TWODVM_DIAGNOSTICS_HPP
#define TWODVM_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "twodvm/spectrum.hpp"

namespace twodvm {

enum class DiagnosticKind { omega_eff, expect_n, pr, dos, qfs, gamma };

std::string to_string(DiagnosticKind kind);

struct DiagnosticPoint {
    double energy; // normalized excitation energy (abscissa)
    double value;
    int ordinal;
    bool valid = true;
};

/// Per-eigenstate series of one diagnostic, ordered by energy, with the
/// parameters it came from. For gamma the partner block is ell + 1.
struct DiagnosticSeries {
    DiagnosticKind kind;
    ModelParams params;
    int ell;
    int ell_partner = -1;
    std::vector<DiagnosticPoint> points;
};

/// Effective frequency omega_eff(j) = E_j - E_{j-1}, plotted against the
/// mean normalized excitation energy of the pair (Birge-Sponer style).
/// dim-1 points; a deep minimum marks an ESQPT critical energy.
DiagnosticSeries effective_frequency(const SpectrumBlock& block);

/// <n>/N per eigenstate (needs vectors). Order parameter of the
/// ground-state QPT; peaks at the anharmonicity critical energy.
DiagnosticSeries expectation_n(const SpectrumBlock& block);

/// Normalized participation ratio P/dim with P = 1/sum |C|^4 (needs
/// vectors). P = 1 for a basis state, dim for a uniform superposition.
DiagnosticSeries participation_ratio(const SpectrumBlock& block);

/// Histogram density of states over the normalized excitation energy:
/// counts per bin / (dim * bin_width), bins half-open and anchored at 0.
/// Empty interior bins are kept so the series integrates to one.
DiagnosticSeries density_of_states(const SpectrumBlock& block, double bin_width);

/// Quantum fidelity susceptibility at lambda = 0 for every eigenstate of
/// the ell-block:
///   chi_F(j) = sum_{i != j} |<phi_i|H_I|phi_j>|^2 / (E_i - E_j)^2,
/// evaluated by rotating the tridiagonal H_I into the eigenbasis. The
/// abscissa is normalized against the ell = 0 ground state. A degenerate
/// pair inside the block is a hard error.
DiagnosticSeries qfs(const ModelParams& params, int ell, const SolverOptions& opts = {});

/// Quasilinearity parameter
///   gamma_k = (E_{k, ell+1} - E_{k, ell}) / (E_{k+1, ell} - E_{k, ell}),
/// the ordinal pairing that matches u(2) labels (n+1, ell+1) and
/// (n+2, ell). 1/2 on the symmetric-phase ladder, 0 below the barrier in
/// the broken phase, 1 where the partner states are degenerate. Points
/// whose denominator falls below degeneracy_threshold (normalized units)
/// are flagged invalid.
DiagnosticSeries quasilinearity(const SpectrumBlock& lower, const SpectrumBlock& upper,
                                double degeneracy_threshold = 1e-3);

enum class SeparatrixTarget { f1, f2 };

std::string to_string(SeparatrixTarget target);

/// The state singled out by a diagnostic near a separatrix: series extremum
/// inside the search window plus its dominant u(2) component.
struct CriticalStateReport {
    int ordinal;
    double energy; // normalized
    int dominant_n;
    double dominant_weight; // |C|^2 of the dominant component
    SeparatrixTarget target;
    double predicted; // analytic critical energy
};

/// Extremal state of the series within +-window of the predicted energy
/// (minimum for pr/omega_eff, maximum for expect_n/qfs). The block must
/// carry vectors for the dominant-component readout.
CriticalStateReport critical_state(const DiagnosticSeries& series, const SpectrumBlock& block,
                                   SeparatrixTarget target, double predicted,
                                   double window = 0.05);

struct DegeneracyPair {
    int ordinal_lower;
    int ordinal_upper;
    double gap; // E_upper - E_lower in normalized units
    bool degenerate;
};

/// Cross-block level pairing in the gamma ordinal convention (ordinal k of
/// both blocks), each pair classified by |gap| against the threshold.
std::vector<DegeneracyPair> degeneracy_map(const SpectrumBlock& a, const SpectrumBlock& b,
                                           double threshold = 1e-3);

} // namespace twodvm

#endif
