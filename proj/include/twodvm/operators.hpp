#ifndef TWODVM_OPERATORS_HPP
#define TWODVM_OPERATORS_HPP

#include <vector>

#include "twodvm/basis.hpp"
#include "twodvm/model.hpp"

namespace twodvm {

/// One ell-block of an ell-conserving operator in the u(2) ladder basis.
/// The only nonzero couplings are n -> n and n -> n +- 2, so the block is
/// real symmetric tridiagonal: diag[k] = <n_k|O|n_k>, offdiag[k] =
/// <n_k|O|n_{k+1}>. Immutable after assembly.
struct TridiagonalBlock {
    ModelParams params;
    BasisBlock basis;
    std::vector<double> diag;
    std::vector<double> offdiag; // size dim-1

    int dim() const { return basis.dim(); }

    /// Max row sum |diag| + adjacent |offdiag| (infinity norm).
    double inf_norm() const;
};

/// Full model Hamiltonian H = (1-xi) n + alpha/(N-1) n(n+1) + xi/(N-1) P.
TridiagonalBlock assemble_hamiltonian(const ModelParams& params, const BasisBlock& block);

/// One-parameter family H(lambda): weight (1-lambda) on the u(2)-diagonal
/// part and (1+lambda) on the pairing part. H(0) is bit-identical to
/// assemble_hamiltonian; dH/dlambda is the interaction block below.
TridiagonalBlock assemble_lambda_hamiltonian(const ModelParams& params, double lambda,
                                             const BasisBlock& block);

/// Interaction block H_I = -[(1-xi) n + alpha/(N-1) n(n+1)] + xi/(N-1) P.
TridiagonalBlock assemble_interaction(const ModelParams& params, const BasisBlock& block);

/// Number operator block (diagonal: n_values themselves).
TridiagonalBlock assemble_number_operator(const ModelParams& params, const BasisBlock& block);

} // namespace twodvm

#endif
