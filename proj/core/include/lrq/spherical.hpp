#pragma once

#include "lrq/spectra.hpp"
#include "lrq/timeseries.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace lrq::spherical {

struct SpectralLevel {
    double energy = 0.0;
    double weight = 0.0;
};

/// Coupling-matrix spectrum split into an isolated lowest state and a bulk.
/// The isolated state sets mu_c = -min(eps)/2; constraint sums and dynamics run
/// over the bulk only.
class DensityOfStates {
public:
    enum class Kind { discrete, two_level, semicircle };

    /// Weighted levels (weights sum to 1); the lowest entry becomes the isolated state.
    static DensityOfStates discrete(std::vector<SpectralLevel> levels);
    /// e0 with weight 1/N and e1 with weight (N-1)/N; n == 0 is the N -> infinity form.
    static DensityOfStates two_level(double e0, double e1, std::int64_t n);
    /// (2/pi) sqrt(4J^2 - e^2) / (4J^2) on [-2J, 2J] plus the isolated level
    /// -J0 - J^2/J0 of zero weight. Requires 0 < J < J0.
    static DensityOfStates semicircle(double J, double J0);

    Kind kind() const noexcept { return kind_; }
    std::int64_t size() const noexcept { return size_; }
    double coupling() const noexcept { return J_; }
    double background() const noexcept { return J0_; }

    SpectralLevel isolated() const noexcept { return isolated_; }
    /// Bulk levels of the discrete and two-level kinds (empty for the semicircle).
    const std::vector<SpectralLevel>& bulk() const noexcept { return bulk_; }
    /// [lowest, highest] bulk energy.
    std::pair<double, double> bulk_support() const noexcept { return support_; }
    /// Lowest energy, isolated state included.
    double min_energy() const noexcept;

    /// Sum over bulk levels of weight * f(energy); the semicircle branch is
    /// integrated adaptively to absolute tolerance `tol`.
    double bulk_average(const std::function<double(double)>& f, double tol = 1e-13) const;

private:
    Kind kind_ = Kind::discrete;
    std::int64_t size_ = 0;
    double J_ = 0.0;
    double J0_ = 0.0;
    SpectralLevel isolated_{};
    std::vector<SpectralLevel> bulk_;
    std::pair<double, double> support_{0.0, 0.0};
};

/// Spectrum of the circulant U_ij = -J0 / (2 N_alpha) d_ij^-alpha (periodic
/// distance, zero diagonal), with +-k levels folded. Requires d = 1.
DensityOfStates dos_powerlaw(const spectra::CouplingSpec& spec, unsigned threads = 0);

/// alpha = 0 coupling -J0/N: levels -J0(1 - 1/N) and J0/N; n == 0 gives the limit.
DensityOfStates dos_flat(std::int64_t n, double J0 = 1.0);

DensityOfStates dos_semicircle(double J, double J0);

/// One draw of -J0/N + x_ij with symmetric Gaussian x_ij of variance J^2/N,
/// diagonalised densely. Each eigenvalue carries weight 1/N.
DensityOfStates dos_random_matrix(std::int64_t n, double J, double J0, std::uint64_t seed);

/// mu_c = -min(eps)/2.
double critical_mu(const DensityOfStates& dos);

/// F(mu) = bulk average of 2 / sqrt(2 mu + eps).
double constraint_sum(const DensityOfStates& dos, double mu);

/// g_c = F(mu_c)^-2, or 0 when the bulk touches the isolated level.
double critical_coupling(const DensityOfStates& dos);

/// mu with F(mu) = 1/sqrt(g). Throws std::domain_error for g < g_c (condensed phase).
double solve_constraint(double g, const DensityOfStates& dos);

/// xi(t) = sqrt(1 + ((omega0/omegaf)^2 - 1) sin^2(omegaf t)).
double ermakov_width(double omega0, double omegaf, double t);

struct SphericalQuench {
    double g = 0.0;
    double mu_initial = 0.0;
    double mu_final = 0.0;
    DensityOfStates dos;
    double t_max = 0.0;
    double dt = 0.0;

    /// Throws unless g > 0, the grid is valid and both chemical potentials give
    /// strictly positive squared frequencies on the whole bulk.
    void validate() const;
};

/// mu_initial = initial_factor * mu_c and mu_final = final_factor * mu_c; g
/// defaults to the value that makes mu_initial solve the constraint.
SphericalQuench make_lift_quench(DensityOfStates dos, double t_max, double dt,
                                 double initial_factor = 2.0, double final_factor = 1.0,
                                 std::optional<double> g = std::nullopt);

/// A(t) = sum_bulk w (2g/omega0) xi(t)^2 with omega^2 = g (2 mu + eps).
TimeSeries quench_observable(const SphericalQuench& q, unsigned threads = 0);

/// Q_A(T) = (1/T) int_0^T (A - Abar)^2 dt, Abar the trapezoid mean over the whole series.
double cesaro_fluctuation(const TimeSeries& series, double T);

/// Q_A evaluated at every grid time T >= 10 dt.
TimeSeries fluctuation_curve(const TimeSeries& series);

struct EquilibrationFit {
    double tau_eq = 0.0;
    double amplitude = 0.0;
    double residual = 0.0;  ///< RMS of the log-space residuals
    std::size_t points = 0;
};

/// Fits log Q_A = log R - T / tau_eq over the points after the maximum with
/// Q_A in [1e-8, 1e-1] * max. Empty when fewer than 20 points qualify or the
/// fitted slope does not decay.
std::optional<EquilibrationFit> fit_equilibration_time(const TimeSeries& qa);

struct EnsembleAverage {
    TimeSeries mean;
    std::vector<double> standard_error;
    std::size_t samples = 0;
};

/// Disorder-averaged lift quench over `samples` independent matrices whose
/// seeds derive from (seed, sample index).
EnsembleAverage ensemble_quench(std::int64_t n, double J, double J0, std::size_t samples,
                                std::uint64_t seed, double t_max, double dt,
                                double initial_factor = 2.0, double final_factor = 1.0,
                                unsigned threads = 0);

}  // namespace lrq::spherical
