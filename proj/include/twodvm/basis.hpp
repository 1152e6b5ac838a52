#ifndef TWODVM_BASIS_HPP
#define TWODVM_BASIS_HPP

#include <vector>

#include "twodvm/model.hpp"

namespace twodvm {

/// Fixed-ell ladder of the u(2) basis: n = |ell|, |ell|+2, ..., up to N
/// (or N-1, matching the parity of ell). Ordinal k maps to n = |ell| + 2k.
///
/// Blocks are always built for ell >= 0; the spectrum depends on ell only
/// through ell^2, so a negative request is served by the |ell| block.
struct BasisBlock {
    int N;
    int ell; // >= 0
    std::vector<int> n_values;

    int dim() const { return static_cast<int>(n_values.size()); }
    int n_at(int ordinal) const { return n_values[static_cast<std::size_t>(ordinal)]; }

    bool operator==(const BasisBlock&) const = default;
};

/// so(3)-chain labels of a u(2) basis state: bending quantum number nu_b,
/// irrep label omega = N - 2 nu_b, and projection K = ell.
struct So3Labels {
    int nu_b;
    int omega;
    int K;

    bool operator==(const So3Labels&) const = default;
};

BasisBlock block_basis(const ModelParams& params, int ell);

So3Labels so3_labels(int n, int ell, int N);

/// Inverse of so3_labels: the u(2) quantum number n = 2 nu_b + |K|.
int u2_label(const So3Labels& labels);

} // namespace twodvm

#endif
