#include "twodvm/operators.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace twodvm {

double TridiagonalBlock::inf_norm() const {
    double norm = 0.0;
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        double row = std::fabs(diag[static_cast<std::size_t>(i)]);
        if (i > 0) row += std::fabs(offdiag[static_cast<std::size_t>(i - 1)]);
        if (i + 1 < d) row += std::fabs(offdiag[static_cast<std::size_t>(i)]);
        norm = std::max(norm, row);
    }
    return norm;
}

namespace {

// The radicand of the pairing coupling is a product of non-negative
// integers; evaluating it in 64-bit integers keeps ladder-edge zeros exact
// (no negative round-off under the root). Largest factor is N+2, so the
// product stays well inside 2^63 for any desk-scale N.
std::int64_t coupling_product(std::int64_t N, std::int64_t n, std::int64_t ell) {
    return (N - n + 2) * (N - n + 1) * (n + ell) * (n - ell);
}

// One assembler for the whole operator family: weight_u2 scales the
// u(2)-diagonal part (1-xi) n + alpha/(N-1) n(n+1), weight_pair scales the
// pairing part xi/(N-1) P. H = (1,1), H(lambda) = (1-lambda, 1+lambda),
// H_I = (-1, 1).
TridiagonalBlock assemble_weighted(const ModelParams& params, const BasisBlock& block,
                                   double weight_u2, double weight_pair) {
    if (block.N != params.N)
        throw std::invalid_argument("assemble: basis block N does not match params");
    const int dim = block.dim();
    const double xi = params.xi;
    const std::int64_t N = params.N;
    const std::int64_t ell = block.ell;
    const double pair_scale = weight_pair * xi / static_cast<double>(N - 1);

    TridiagonalBlock T{params, block, {}, {}};
    T.diag.resize(static_cast<std::size_t>(dim));
    T.offdiag.resize(dim > 1 ? static_cast<std::size_t>(dim - 1) : 0);

    for (int k = 0; k < dim; ++k) {
        const std::int64_t n = block.n_at(k);
        const double u2 = (1.0 - xi) * static_cast<double>(n) +
                          (params.alpha / static_cast<double>(N - 1)) *
                              static_cast<double>(n * (n + 1));
        const std::int64_t pair = N * (N + 1) - (N - n) * (n + 2) - (N - n + 1) * n - ell * ell;
        T.diag[static_cast<std::size_t>(k)] =
            weight_u2 * u2 + pair_scale * static_cast<double>(pair);
    }
    for (int k = 0; k + 1 < dim; ++k) {
        // Coupling between n_k and n_{k+1} = n_k + 2, from the lowering line
        // evaluated at n_{k+1}; the raising line at n_k gives the same
        // integer product, kept as a consistency assertion.
        const std::int64_t n_hi = block.n_at(k + 1);
        const std::int64_t n_lo = block.n_at(k);
        const std::int64_t down = coupling_product(N, n_hi, ell);
        [[maybe_unused]] const std::int64_t up =
            (N - n_lo) * (N - n_lo - 1) * (n_lo + ell + 2) * (n_lo - ell + 2);
        assert(down == up);
        T.offdiag[static_cast<std::size_t>(k)] = pair_scale * std::sqrt(static_cast<double>(down));
    }
    return T;
}

} // namespace

TridiagonalBlock assemble_hamiltonian(const ModelParams& params, const BasisBlock& block) {
    return assemble_weighted(params, block, 1.0, 1.0);
}

TridiagonalBlock assemble_lambda_hamiltonian(const ModelParams& params, double lambda,
                                             const BasisBlock& block) {
    return assemble_weighted(params, block, 1.0 - lambda, 1.0 + lambda);
}

TridiagonalBlock assemble_interaction(const ModelParams& params, const BasisBlock& block) {
    return assemble_weighted(params, block, -1.0, 1.0);
}

TridiagonalBlock assemble_number_operator(const ModelParams& params, const BasisBlock& block) {
    if (block.N != params.N)
        throw std::invalid_argument("assemble: basis block N does not match params");
    TridiagonalBlock T{params, block, {}, {}};
    T.diag.assign(block.n_values.begin(), block.n_values.end());
    T.offdiag.assign(block.dim() > 1 ? static_cast<std::size_t>(block.dim() - 1) : 0, 0.0);
    return T;
}

} // namespace twodvm
