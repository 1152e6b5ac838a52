#ifndef TWODVM_MODEL_HPP
#define TWODVM_MODEL_HPP

#include <stdexcept>
#include <string>

namespace twodvm {

/// Critical value of the control parameter for the ground-state QPT.
inline constexpr double xi_critical = 0.2;

/// Model instance: total vibron number N and the two control parameters.
///
/// The Hamiltonian is
///   H = (1-xi) n + alpha/(N-1) n(n+1) + xi/(N-1) P,
/// with P = N(N+1) - W^2 the pairing operator. The overall energy scale
/// is unity; xi in [0,1] interpolates between the cylindrical-oscillator
/// (xi=0) and displaced-oscillator (xi=1) limits, alpha controls the
/// quadratic anharmonicity.
///
/// Immutable after construction; shareable across threads.
struct ModelParams {
    int N;
    double xi;
    double alpha;

    ModelParams(int N_, double xi_, double alpha_) : N(N_), xi(xi_), alpha(alpha_) {
        if (N < 2)
            throw std::domain_error("ModelParams: N must be >= 2, got " + std::to_string(N));
        if (!(xi >= 0.0 && xi <= 1.0))
            throw std::domain_error("ModelParams: xi must lie in [0,1], got " + std::to_string(xi));
    }

    /// True when alpha lies in [-(3 xi + 1)/2, 0], the anharmonicity range
    /// for which the classical energy functional keeps a single stationary
    /// point besides its asymptote (quasilinear regime).
    bool in_regime() const { return alpha <= 0.0 && 2.0 * alpha + 3.0 * xi + 1.0 >= 0.0; }

    bool operator==(const ModelParams&) const = default;
};

} // namespace twodvm

#endif
