#include "twodvm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "twodvm/parallel.hpp"

namespace twodvm {

namespace {

std::string describe(const TridiagonalBlock& T) {
    std::ostringstream out;
    out << "block{N=" << T.params.N << ", xi=" << T.params.xi << ", alpha=" << T.params.alpha
        << ", ell=" << T.basis.ell << ", dim=" << T.dim() << "}";
    return out.str();
}

// Implicit QL with Wilkinson shift on (d, e); e[k] couples d[k] and d[k+1].
// When z is non-null the Givens rotations are accumulated into its columns
// (column-major n x n, initialized to identity by the caller), so column j
// ends up as the eigenvector of d[j]. Values-only cost is O(n^2), with
// rotations O(n^3).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, double* z, int n,
                 const SolverOptions& opts, const TridiagonalBlock& origin) {
    if (n <= 1) return;
    e.push_back(0.0); // e[n-1] used as scratch by the rotation recurrence
    long sweeps_left = static_cast<long>(opts.sweeps_per_dim) * n;

    for (int l = 0; l < n; ++l) {
        for (;;) {
            // Smallest m >= l with a negligible coupling e[m]; the submatrix
            // l..m is then irreducible.
            int m = l;
            for (; m < n - 1; ++m) {
                const double neighborhood = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= opts.rel_tol * neighborhood ||
                    std::fabs(e[m]) < std::numeric_limits<double>::min())
                    break;
            }
            if (m == l) break; // d[l] converged

            if (--sweeps_left < 0)
                throw ConvergenceError("eigensolver: sweep budget exhausted (" +
                                       std::to_string(static_cast<long>(opts.sweeps_per_dim) * n) +
                                       " sweeps) on " + describe(origin));

            // Wilkinson shift from the leading 2x2 of the active submatrix.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;

            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) { // rotation annihilated early: split and retry
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (z != nullptr) {
                    double* zi = z + static_cast<std::size_t>(i) * n;
                    double* zj = zi + n;
                    for (int k = 0; k < n; ++k) {
                        f = zj[k];
                        zj[k] = s * zi[k] + c * f;
                        zi[k] = c * zi[k] - s * f;
                    }
                }
            }
            if (i >= l) continue; // early split: rescan the same l
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    e.pop_back();
}

void sort_ascending(std::vector<double>& d, std::vector<double>& z, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) ds[j] = d[order[j]];
    d = std::move(ds);
    if (!z.empty()) {
        std::vector<double> zs(z.size());
        for (int j = 0; j < n; ++j)
            std::copy_n(z.begin() + static_cast<std::size_t>(order[j]) * n, n,
                        zs.begin() + static_cast<std::size_t>(j) * n);
        z = std::move(zs);
    }
}

// Deterministic sign: first nonzero component of each column positive.
void fix_signs(std::vector<double>& z, int n) {
    for (int j = 0; j < n; ++j) {
        double* col = z.data() + static_cast<std::size_t>(j) * n;
        for (int i = 0; i < n; ++i) {
            if (col[i] != 0.0) {
                if (col[i] < 0.0)
                    for (int k = 0; k < n; ++k) col[k] = -col[k];
                break;
            }
        }
    }
}

} // namespace

std::vector<double> eigenvalues(const TridiagonalBlock& T, const SolverOptions& opts) {
    std::vector<double> d = T.diag;
    std::vector<double> e = T.offdiag;
    ql_implicit(d, e, nullptr, T.dim(), opts, T);
    std::sort(d.begin(), d.end());
    return d;
}

SpectrumBlock eigensystem(const TridiagonalBlock& T, const SolverOptions& opts) {
    const int n = T.dim();
    std::vector<double> d = T.diag;
    std::vector<double> e = T.offdiag;
    std::vector<double> z(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j) * n + j] = 1.0;
    ql_implicit(d, e, z.data(), n, opts, T);
    sort_ascending(d, z, n);
    fix_signs(z, n);
    SpectrumBlock block{T.params, T.basis.ell, std::move(d), std::move(z), 0.0};
    block.ground_ref = block.energies.front();
    return block;
}

FullSpectrum full_spectrum(const ModelParams& params, const std::vector<int>& ells,
                           bool want_vectors, const SolverOptions& opts, unsigned jobs) {
    if (ells.empty()) throw std::invalid_argument("full_spectrum: empty ell list");
    std::set<int> wanted;
    for (int ell : ells) {
        if (std::abs(ell) > params.N)
            throw std::domain_error("full_spectrum: |ell| = " + std::to_string(std::abs(ell)) +
                                    " exceeds N = " + std::to_string(params.N));
        wanted.insert(std::abs(ell));
    }
    const std::vector<int> order(wanted.begin(), wanted.end());
    std::vector<SpectrumBlock> solved(order.size(),
                                      SpectrumBlock{params, 0, {}, {}, 0.0});
    parallel_for(order.size(), jobs, [&](std::size_t i) {
        const auto basis = block_basis(params, order[i]);
        const auto T = assemble_hamiltonian(params, basis);
        if (want_vectors)
            solved[i] = eigensystem(T, opts);
        else {
            solved[i] = SpectrumBlock{params, order[i], eigenvalues(T, opts), {}, 0.0};
            solved[i].ground_ref = solved[i].energies.front();
        }
    });

    FullSpectrum result{params, {}, 0.0, wanted.count(0) > 0};
    double ground = std::numeric_limits<double>::infinity();
    for (const auto& block : solved) ground = std::min(ground, block.energies.front());
    if (result.ground_from_ell0 && solved.front().energies.front() != ground)
        throw std::logic_error("full_spectrum: global minimum not attained in the ell=0 block");
    for (auto& block : solved) {
        block.ground_ref = ground;
        result.blocks.emplace(block.ell, std::move(block));
    }
    result.ground_ref = ground;
    return result;
}

std::vector<double> normalized_excitation(const SpectrumBlock& block) {
    std::vector<double> out(block.energies.size());
    const double scale = static_cast<double>(block.params.N);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = (block.energies[j] - block.ground_ref) / scale;
    return out;
}

} // namespace twodvm
