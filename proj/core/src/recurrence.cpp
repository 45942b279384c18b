#include "lrq/recurrence.hpp"

#include "lrq/kitaev.hpp"
#include "lrq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrq::recurrence {

void SpectralEnsemble::validate() const {
    if (energies.empty() || energies.size() != populations.size()) {
        throw std::invalid_argument("ensemble needs matching, non-empty energies and populations");
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        if (!std::isfinite(energies[i])) throw std::invalid_argument("energies must be finite");
        if (!(populations[i] >= 0.0)) throw std::invalid_argument("populations must be >= 0");
        total += populations[i];
    }
    if (std::abs(total.value() - 1.0) > 1e-12) {
        throw std::invalid_argument("populations must sum to 1");
    }
}

SpectralEnsemble SpectralEnsemble::uniform(std::vector<double> energies) {
    SpectralEnsemble ens;
    const double p = 1.0 / static_cast<double>(energies.size());
    ens.populations.assign(energies.size(), p);
    ens.energies = std::move(energies);
    return ens;
}

std::complex<double> characteristic_function(const SpectralEnsemble& ens, double t) {
    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t i = 0; i < ens.energies.size(); ++i) {
        const double ph = ens.energies[i] * t;
        re += ens.populations[i] * std::cos(ph);
        im += -ens.populations[i] * std::sin(ph);
    }
    return {re.value(), im.value()};
}

double fidelity(const SpectralEnsemble& ens, double t) {
    return std::clamp(std::norm(characteristic_function(ens, t)), 0.0, 1.0);
}

double uniform_Q(std::span<const double> energies, double t) {
    const std::size_t M = energies.size();
    if (M < 2) throw std::invalid_argument("uniform_Q needs at least two levels");
    CompensatedSum s;
    for (std::size_t n = 0; n < M; ++n) {
        for (std::size_t m = n + 1; m < M; ++m) {
            const double x = std::sin(0.5 * (energies[m] - energies[n]) * t);
            s += x * x;
        }
    }
    const double Md = static_cast<double>(M);
    return std::clamp(4.0 * s.value() / (Md * Md), 0.0, 1.0);
}

double avg_frequency(std::span<const double> energies) {
    const std::size_t M = energies.size();
    if (M < 2) throw std::invalid_argument("avg_frequency needs at least two levels");
    CompensatedSum s;
    for (std::size_t m = 1; m < M; ++m) {
        const double w = energies[m] - energies[0];
        s += w * w;
    }
    return std::sqrt(s.value() / static_cast<double>(M - 1));
}

double ball_volume(int dim, double R) {
    if (dim < 0 || !(R >= 0.0)) throw std::invalid_argument("ball_volume needs dim >= 0, R >= 0");
    if (dim == 0) return 1.0;
    if (R == 0.0) return 0.0;
    const double h = 0.5 * dim;
    return std::exp(h * std::log(pi) + dim * std::log(R) - std::lgamma(h + 1.0));
}

RecurrenceEstimate recurrence_estimate(std::span<const double> energies, double epsilon) {
    if (energies.size() < 3) throw std::invalid_argument("recurrence_estimate needs M >= 3");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    std::vector<double> sorted(energies.begin(), energies.end());
    std::sort(sorted.begin(), sorted.end());
    RecurrenceEstimate est;
    est.M = static_cast<int>(sorted.size());
    est.epsilon = epsilon;
    est.omega_avg = avg_frequency(sorted);
    const double m1 = static_cast<double>(est.M - 1);
    est.radius = std::sqrt(m1 * epsilon / 8.0);
    est.sphere_volume = ball_volume(est.M - 2, est.radius);
    est.tau = 1.0 / (std::sqrt(m1) * est.omega_avg * est.sphere_volume);
    return est;
}

double default_scan_step(std::span<const double> energies) {
    if (energies.empty()) throw std::invalid_argument("empty spectrum");
    const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
    const double gap = *hi - *lo;
    return gap > 0.0 ? 2.0 * pi / (50.0 * gap) : 1.0;
}

std::optional<double> first_recurrence_scan(std::span<const double> energies, double epsilon,
                                            double t_min, double t_max, double dt) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(t_min > 0.0) || !(dt > 0.0) || !(t_max >= t_min)) {
        throw std::invalid_argument("scan needs 0 < t_min <= t_max and dt > 0");
    }
    if (energies.size() < 2) throw std::invalid_argument("scan needs at least two levels");
    const auto steps = static_cast<std::int64_t>(std::floor((t_max - t_min) / dt + 1e-9));
    const std::size_t M = energies.size();
    const double inv_m = 1.0 / static_cast<double>(M);
    std::vector<double> re(M), im(M), step_re(M), step_im(M);
    for (std::size_t n = 0; n < M; ++n) {
        step_re[n] = std::cos(energies[n] * dt);
        step_im[n] = -std::sin(energies[n] * dt);
    }
    constexpr std::int64_t resync = 256;
    bool left = false;
    bool inside = false;
    double best_q = 0.0;
    double best_t = 0.0;
    for (std::int64_t i = 0; i <= steps; ++i) {
        const double t = t_min + static_cast<double>(i) * dt;
        if (i % resync == 0) {
            for (std::size_t n = 0; n < M; ++n) {
                re[n] = std::cos(energies[n] * t);
                im[n] = -std::sin(energies[n] * t);
            }
        } else {
            for (std::size_t n = 0; n < M; ++n) {
                const double r = re[n] * step_re[n] - im[n] * step_im[n];
                im[n] = re[n] * step_im[n] + im[n] * step_re[n];
                re[n] = r;
            }
        }
        double sr = 0.0;
        double si = 0.0;
        for (std::size_t n = 0; n < M; ++n) {
            sr += re[n];
            si += im[n];
        }
        sr *= inv_m;
        si *= inv_m;
        const double q = 1.0 - (sr * sr + si * si);
        if (!left) {
            if (q >= epsilon) left = true;
            continue;
        }
        if (q < epsilon) {
            if (!inside || q < best_q) {
                best_q = q;
                best_t = t;
            }
            inside = true;
        } else if (inside) {
            return best_t;
        }
    }
    if (!left) return t_min;
    if (inside) return best_t;
    return std::nullopt;
}

SpectralEnsemble kitaev_recurrence_bridge(const spectra::CouplingSpec& spec, double h, int M) {
    if (M < 1) throw std::invalid_argument("bridge needs M >= 1");
    if (!std::isfinite(h)) throw std::invalid_argument("h must be finite");
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(M));
    for (int n = 0; n < M; ++n) {
        levels.push_back(kitaev::mode_frequency(h, spectra::hopping_coeff_limit(spec.alpha, n),
                                                spectra::pairing_coeff_limit(spec.alpha, n)));
    }
    return SpectralEnsemble::uniform(std::move(levels));
}

}  // namespace lrq::recurrence
