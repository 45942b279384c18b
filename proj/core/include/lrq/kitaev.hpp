#pragma once

#include "lrq/spectra.hpp"
#include "lrq/timeseries.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace lrq::kitaev {

/// Sudden quench h_initial -> h_final of the long-range Kitaev chain,
/// sampled on t = 0, dt, ..., t_max.
struct QuenchProtocol {
    spectra::CouplingSpec spec;
    double h_initial = 20.0;
    double h_final = 0.4;
    double t_max = 100.0;
    double dt = 0.05;

    void validate() const;
};

struct Angle {
    double theta = 0.0;
    bool indeterminate = false;  ///< set when (delta, h - t) = (0, 0)
};

/// theta = atan2(delta_tilde, h - t_tilde), in (-pi, pi].
Angle bogolyubov_angle(double h, double t_tilde, double delta_tilde);

/// omega = sqrt((h - t_tilde)^2 + delta_tilde^2).
double mode_frequency(double h, double t_tilde, double delta_tilde);

/// One independent (k, -k) pair, or one of the unpaired modes k = 0, k = -pi.
struct Mode {
    std::int64_t n = 0;
    double k = 0.0;
    int weight = 1;  ///< 2 for a paired momentum, 1 for k = 0 and k = -pi
    std::complex<double> u{1.0, 0.0};
    std::complex<double> v{0.0, 0.0};
    double theta_f = 0.0;
    double omega_f = 0.0;
    double epsilon_f = 0.0;
    double delta_f = 0.0;
    bool indeterminate = false;
};

struct BogolyubovField {
    std::int64_t size = 0;
    double time = 0.0;
    std::vector<Mode> modes;  ///< n = 0, 1, ..., N/2 - 1, then n = -N/2
};

/// Ground state of the initial Hamiltonian, (u, v) = (cos theta_i/2, sin theta_i/2),
/// together with the final-Hamiltonian angles and frequencies. Always uses the
/// finite-N couplings.
BogolyubovField prepare_ground_state(const QuenchProtocol& protocol, unsigned threads = 0);

/// Applies exp(-2 i H_k t) to every mode, with H_k = [[eps, delta], [delta, -eps]].
BogolyubovField evolve(const BogolyubovField& state, double t);

/// m_x = 1 - (2/N) sum_k |v_k|^2.
double transverse_magnetization(const BogolyubovField& state);

/// Expectation of the final Hamiltonian, sum_k [eps (|u|^2 - |v|^2) + 2 delta Re(u* v)].
double energy(const BogolyubovField& state);

/// max_k | |u|^2 + |v|^2 - 1 |.
double norm_defect(const BogolyubovField& state);

/// m_x(t) on the protocol's grid; each sample is evolved directly from t = 0.
TimeSeries run_quench(const QuenchProtocol& protocol, unsigned threads = 0);

/// Times of local maxima of |dm/dt| (central differences) whose height is at
/// least `relative_height` times the largest such maximum.
std::vector<double> revival_times(const TimeSeries& series, double relative_height = 0.5);

}  // namespace lrq::kitaev
