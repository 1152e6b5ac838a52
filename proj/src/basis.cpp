#include "twodvm/basis.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace twodvm {

BasisBlock block_basis(const ModelParams& params, int ell) {
    const int abs_ell = std::abs(ell);
    if (abs_ell > params.N)
        throw std::domain_error("block_basis: |ell| = " + std::to_string(abs_ell) +
                                " exceeds N = " + std::to_string(params.N));
    BasisBlock block{params.N, abs_ell, {}};
    block.n_values.reserve(static_cast<std::size_t>((params.N - abs_ell) / 2 + 1));
    for (int n = abs_ell; n <= params.N; n += 2)
        block.n_values.push_back(n);
    return block;
}

So3Labels so3_labels(int n, int ell, int N) {
    const int abs_ell = std::abs(ell);
    if ((n - ell) % 2 != 0)
        throw std::domain_error("so3_labels: n = " + std::to_string(n) + " and ell = " +
                                std::to_string(ell) + " differ in parity");
    if (n < abs_ell || n > N)
        throw std::domain_error("so3_labels: n = " + std::to_string(n) +
                                " outside [|ell|, N] for ell = " + std::to_string(ell) +
                                ", N = " + std::to_string(N));
    const int nu_b = (n - abs_ell) / 2;
    return So3Labels{nu_b, N - 2 * nu_b, ell};
}

int u2_label(const So3Labels& labels) { return 2 * labels.nu_b + std::abs(labels.K); }

} // namespace twodvm
