#ifndef TWODVM_SPECTRUM_HPP
#define TWODVM_SPECTRUM_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twodvm/operators.hpp"

namespace twodvm {

/// Thrown when the implicit-shift iteration exhausts its sweep budget.
/// Carries the block descriptor; partial spectra are never returned.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverOptions {
    /// Total implicit QL sweep budget is sweeps_per_dim * dim.
    int sweeps_per_dim = 50;
    /// An off-diagonal entry e is treated as annihilated once
    /// |e| <= rel_tol * (|d_left| + |d_right|).
    double rel_tol = 1e-14;
};

/// Eigendecomposition of one ell-block.
///
/// energies are ascending; for an unreduced block (all off-diagonals
/// nonzero, the xi > 0 case) they are strictly increasing. When vectors
/// are requested they are stored column-major: component i of eigenvector
/// j sits at vectors[j*dim + i], columns orthonormal, and the first
/// nonzero component of each column is positive.
///
/// ground_ref is the reference energy used by normalized_excitation. A
/// standalone solve sets it to the block's own lowest eigenvalue;
/// full_spectrum overwrites it with the global minimum over all requested
/// blocks.
struct SpectrumBlock {
    ModelParams params;
    int ell;
    std::vector<double> energies;
    std::vector<double> vectors; // column-major dim*dim, empty unless requested
    double ground_ref = 0.0;

    int dim() const { return static_cast<int>(energies.size()); }
    bool has_vectors() const { return !vectors.empty(); }

    /// Eigenvector of energies[j], contiguous.
    std::span<const double> eigenvector(int j) const {
        const auto d = static_cast<std::size_t>(dim());
        return {vectors.data() + static_cast<std::size_t>(j) * d, d};
    }
};

/// Ascending eigenvalues of a symmetric tridiagonal block.
std::vector<double> eigenvalues(const TridiagonalBlock& T, const SolverOptions& opts = {});

/// Full eigendecomposition (values and vectors).
SpectrumBlock eigensystem(const TridiagonalBlock& T, const SolverOptions& opts = {});

/// Spectra of several ell-blocks of the model Hamiltonian.
struct FullSpectrum {
    ModelParams params;
    std::map<int, SpectrumBlock> blocks;
    double ground_ref;
    /// False when ell = 0 was not requested; separatrix comparisons then
    /// use a reference above the true ground state.
    bool ground_from_ell0;

    const SpectrumBlock& at(int ell) const { return blocks.at(ell); }
};

/// Solves every requested ell-block (duplicates and signs collapse onto
/// |ell|) and stamps ground_ref = global minimum onto each block. Blocks
/// are independent; jobs > 1 distributes them over threads with results
/// identical to sequential execution.
FullSpectrum full_spectrum(const ModelParams& params, const std::vector<int>& ells,
                           bool want_vectors, const SolverOptions& opts = {}, unsigned jobs = 1);

/// Excitation energies (E_j - ground_ref)/N, directly comparable to the
/// mean-field separatrix values f1 and f2.
std::vector<double> normalized_excitation(const SpectrumBlock& block);

} // namespace twodvm

#endif
