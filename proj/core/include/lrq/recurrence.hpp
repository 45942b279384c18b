#pragma once

#include "lrq/spectra.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace lrq::recurrence {

/// Levels E_n with populations p_n (non-negative, summing to 1).
struct SpectralEnsemble {
    std::vector<double> energies;
    std::vector<double> populations;

    void validate() const;
    static SpectralEnsemble uniform(std::vector<double> energies);
};

/// chi(t) = sum_n p_n exp(-i t E_n).
std::complex<double> characteristic_function(const SpectralEnsemble& ens, double t);

/// |chi(t)|^2.
double fidelity(const SpectralEnsemble& ens, double t);

/// (4/M^2) sum_{m>n} sin^2((E_m - E_n) t / 2), equal to 1 - fidelity for p_n = 1/M.
double uniform_Q(std::span<const double> energies, double t);

/// sqrt(sum_{m>=2} (E_m - E_1)^2 / (M - 1)), E_1 the first entry.
double avg_frequency(std::span<const double> energies);

/// Volume of the dim-dimensional ball of radius R.
double ball_volume(int dim, double R);

struct RecurrenceEstimate {
    double tau = 0.0;
    int M = 0;
    double epsilon = 0.0;
    double omega_avg = 0.0;
    double radius = 0.0;
    double sphere_volume = 0.0;
};

/// tau = 1 / (sqrt(M-1) omega sigma(R)), R = sqrt((M-1) eps / 8), sigma the
/// (M-2)-ball volume; omega is measured from the lowest level.
RecurrenceEstimate recurrence_estimate(std::span<const double> energies, double epsilon);

/// 2 pi / (50 * (max E - min E)), or 1 for a degenerate spectrum.
double default_scan_step(std::span<const double> energies);

/// Scans Q = 1 - |chi|^2 (uniform populations) on t = t_min, t_min + dt, ... <= t_max. The trajectory first
/// has to leave the epsilon-ball (Q >= epsilon); the result is the time of the
/// smallest Q within the first subsequent stretch where Q < epsilon. If Q never
/// reaches epsilon, t_min is returned; if it leaves but does not come back,
/// nothing is returned.
std::optional<double> first_recurrence_scan(std::span<const double> energies, double epsilon,
                                            double t_min, double t_max, double dt);

/// The M lowest-index discrete levels omega_n = mode_frequency(h, t_n, Delta_n),
/// n = 0..M-1, from the thermodynamic-limit coefficients, uniformly populated.
SpectralEnsemble kitaev_recurrence_bridge(const spectra::CouplingSpec& spec, double h, int M);

}  // namespace lrq::recurrence
