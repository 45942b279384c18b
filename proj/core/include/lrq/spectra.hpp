#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lrq::spectra {

/// Power-law interaction kernel J0 / (N_alpha r^alpha) on a periodic hypercube.
struct CouplingSpec {
    double alpha = 0.0;      ///< decay exponent, >= 0
    int d = 1;               ///< lattice dimension, 1..3
    std::int64_t size = 0;   ///< sites per direction, even and >= 4
    double strength = 1.0;   ///< overall coupling J0 > 0

    /// Throws std::invalid_argument when an invariant is violated
    /// (including the excluded alpha = 1, d = 1 boundary).
    void validate() const;
};

/// Momentum k_n = 2 pi n / N.
double momentum(std::int64_t n, std::int64_t size) noexcept;

/// (cos, sin) of 2 pi m / N, evaluated with exact reflection symmetry so that
/// multiples of pi/2 produce exact zeros and +-m give exactly mirrored values.
std::pair<double, double> unit_phase(std::int64_t m, std::int64_t size) noexcept;

/// Kac factor. d = 1: sum_{r=1}^{N/2} r^-alpha. d > 1: one half of the lattice sum
/// of |R|^-alpha over R in [-L/2, L/2]^d without the origin (reduces to the
/// d = 1 expression).
double kac_norm(const CouplingSpec& spec);

/// Finite-size hopping coefficient (1/N_alpha) sum_{r=1}^{N/2-1} cos(k_n r) r^-alpha,
/// for -N/2 <= n < N/2.
double hopping_fourier_finite(const CouplingSpec& spec, std::int64_t n);

/// Same as hopping_fourier_finite with sin(k_n r).
double pairing_fourier_finite(const CouplingSpec& spec, std::int64_t n);

/// Both finite-size coefficients for every n in [0, N/2]; entry N/2 is the
/// k = -pi mode (its cosine sum coincides with +pi, its sine sum is zero).
struct CoefficientTable {
    std::int64_t size = 0;
    std::vector<double> hopping;
    std::vector<double> pairing;
};
CoefficientTable coefficient_table(const CouplingSpec& spec, unsigned threads = 0);

/// Thermodynamic-limit coefficients for 0 < alpha < 1:
///   t_n = c_alpha int_0^{1/2} cos(2 pi n s) s^-alpha ds,  c_alpha = (1 - alpha) 2^{1-alpha},
/// and the sine analogue. Absolute accuracy 1e-10.
double hopping_coeff_limit(double alpha, std::int64_t n);
double pairing_coeff_limit(double alpha, std::int64_t n);

/// Li_alpha(e^{ik}) / zeta(alpha) for alpha > 1, returned as (real, imaginary).
/// These are the N -> infinity hopping and pairing couplings at momentum k.
struct PolylogValue {
    double re = 0.0;
    double im = 0.0;
    double remainder_bound = 0.0;  ///< magnitude bound on the truncated tail (before division)
};
PolylogValue polylog_couplings(double alpha, double k);

struct Level {
    std::int64_t mode = 0;
    double energy = 0.0;
    int degeneracy = 1;
};

struct ModeSpectrum {
    std::vector<Level> levels;  ///< ascending in energy
    double mu = 0.0;
};

/// Discrete limit levels omega_n = mu - t_n for n = 0..n_max (alpha from spec,
/// 0 < alpha < 1). Level n > 0 carries the two momenta +-n.
ModeSpectrum discrete_spectrum(const CouplingSpec& spec, double mu, std::int64_t n_max);

/// Kac-normalised Fourier coefficient of the d-dimensional (d = 2, 3) lattice:
/// sum_R cos(k.R) |R|^-alpha / (2 kac_norm) with R over [-(L/2-1), L/2-1]^d \ {0}.
/// Lattices with more than 2^24 sites are rejected.
double lattice_coeff_ddim(const CouplingSpec& spec, std::span<const std::int64_t> n_vec);

struct GapPoint {
    std::int64_t size = 0;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    double gap = 0.0;
};

/// |t_{n1}(N) - t_{n2}(N)| from the finite sums, for each N in `sizes` (ascending).
std::vector<GapPoint> gap_scan(const CouplingSpec& spec, std::span<const std::int64_t> sizes,
                               std::pair<std::int64_t, std::int64_t> n_pair);

/// Gap between the adjacent modes n = floor(k N / 2 pi) and n + 1, i.e. at a fixed
/// momentum k in (0, pi) rather than at fixed mode labels.
std::vector<GapPoint> adjacent_gap_scan(const CouplingSpec& spec,
                                        std::span<const std::int64_t> sizes, double k);

}  // namespace lrq::spectra
