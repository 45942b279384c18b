#include "lrq/spherical.hpp"

#include "lrq/numeric.hpp"
#include "lrq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lrq::spherical {

namespace {

constexpr double constraint_tol = 1e-13;
constexpr double dynamics_tol = 1e-9;

const char* kind_name(DensityOfStates::Kind k) {
    switch (k) {
        case DensityOfStates::Kind::discrete: return "discrete";
        case DensityOfStates::Kind::two_level: return "two_level";
        case DensityOfStates::Kind::semicircle: return "semicircle";
    }
    return "unknown";
}

}  // namespace

double critical_mu(const DensityOfStates& dos) { return -0.5 * dos.min_energy(); }

double constraint_sum(const DensityOfStates& dos, double mu) {
    if (2.0 * mu + dos.bulk_support().first < 0.0) {
        throw std::domain_error("constraint_sum: 2 mu + eps negative on the bulk");
    }
    return dos.bulk_average([mu](double e) { return 2.0 / std::sqrt(2.0 * mu + e); },
                            constraint_tol);
}

double critical_coupling(const DensityOfStates& dos) {
    const double mu_c = critical_mu(dos);
    if (2.0 * mu_c + dos.bulk_support().first <= 0.0) return 0.0;
    const double F = constraint_sum(dos, mu_c);
    if (!std::isfinite(F) || F <= 0.0) return 0.0;
    return 1.0 / (F * F);
}

double solve_constraint(double g, const DensityOfStates& dos) {
    if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("g must be positive");
    const double gc = critical_coupling(dos);
    if (g < gc * (1.0 - 1e-12)) {
        throw std::domain_error("g = " + format_real(g) + " is below g_c = " + format_real(gc) +
                                " (condensed phase)");
    }
    const double target = 1.0 / std::sqrt(g);
    const double mu_c = critical_mu(dos);
    auto residual = [&](double mu) { return constraint_sum(dos, mu) - target; };

    double lo = mu_c;
    if (gc == 0.0) {
        // Bulk reaches the isolated level: step just above the divergence.
        const double edge = -0.5 * dos.bulk_support().first;
        double step = std::max(1e-300, 1e-12 * std::max(1.0, std::abs(edge)));
        lo = edge + step;
        while (residual(lo) < 0.0) {
            step *= 1e-3;
            lo = edge + step;
            if (step < 1e-300) throw NumericalError("solve_constraint", "cannot bracket near the edge");
        }
    }
    if (residual(lo) <= 0.0) return lo;
    double width = std::max(1.0, std::abs(mu_c));
    double hi = lo + width;
    while (residual(hi) > 0.0) {
        width *= 2.0;
        hi = lo + width;
        if (width > 1e300) throw NumericalError("solve_constraint", "no upper bracket");
    }
    const double tol = 1e-15 * std::max(1.0, std::abs(hi));
    return find_root(residual, lo, hi, tol, "solve_constraint");
}

double ermakov_width(double omega0, double omegaf, double t) {
    if (!(omega0 > 0.0) || !(omegaf > 0.0)) {
        throw std::invalid_argument("ermakov_width needs positive frequencies");
    }
    const double r = omega0 / omegaf;
    const double s = std::sin(omegaf * t);
    return std::sqrt(1.0 + (r * r - 1.0) * s * s);
}

void SphericalQuench::validate() const {
    if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("g must be positive");
    grid_points(t_max, dt);
    const double lowest = dos.bulk_support().first;
    for (const double mu : {mu_initial, mu_final}) {
        if (!std::isfinite(mu) || !(2.0 * mu + lowest > 0.0)) {
            throw std::domain_error("non-positive squared frequency for mu = " + format_real(mu));
        }
    }
}

SphericalQuench make_lift_quench(DensityOfStates dos, double t_max, double dt, double initial_factor,
                                 double final_factor, std::optional<double> g) {
    const double mu_c = critical_mu(dos);
    if (!(mu_c > 0.0)) throw std::domain_error("lift quench needs mu_c > 0");
    SphericalQuench q;
    q.mu_initial = initial_factor * mu_c;
    q.mu_final = final_factor * mu_c;
    q.t_max = t_max;
    q.dt = dt;
    q.dos = std::move(dos);
    if (g) {
        q.g = *g;
    } else {
        const double F = constraint_sum(q.dos, q.mu_initial);
        q.g = 1.0 / (F * F);
    }
    q.validate();
    return q;
}

TimeSeries quench_observable(const SphericalQuench& q, unsigned threads) {
    q.validate();
    TimeSeries series;
    series.dt = q.dt;
    series.values.assign(grid_points(q.t_max, q.dt), 0.0);
    const double g = q.g;

    if (q.dos.kind() == DensityOfStates::Kind::semicircle) {
        parallel_for(
            series.size(),
            [&](std::size_t i) {
                const double t = series.time(i);
                series.values[i] = q.dos.bulk_average(
                    [&](double e) {
                        const double w0 = std::sqrt(g * (2.0 * q.mu_initial + e));
                        const double wf = std::sqrt(g * (2.0 * q.mu_final + e));
                        const double xi = ermakov_width(w0, wf, t);
                        return 2.0 * g / w0 * xi * xi;
                    },
                    dynamics_tol);
            },
            threads);
    } else {
        const auto& bulk = q.dos.bulk();
        std::vector<double> amp(bulk.size());
        std::vector<double> eps(bulk.size());
        std::vector<double> wf(bulk.size());
        for (std::size_t l = 0; l < bulk.size(); ++l) {
            const double w0 = std::sqrt(g * (2.0 * q.mu_initial + bulk[l].energy));
            wf[l] = std::sqrt(g * (2.0 * q.mu_final + bulk[l].energy));
            amp[l] = bulk[l].weight * 2.0 * g / w0;
            const double r = w0 / wf[l];
            eps[l] = r * r - 1.0;
        }
        parallel_for(
            series.size(),
            [&](std::size_t i) {
                const double t = series.time(i);
                CompensatedSum s;
                for (std::size_t l = 0; l < bulk.size(); ++l) {
                    const double sn = std::sin(wf[l] * t);
                    s += amp[l] * (1.0 + eps[l] * sn * sn);
                }
                series.values[i] = s.value();
            },
            threads);
    }
    series.meta["dos"] = kind_name(q.dos.kind());
    series.meta["N"] = std::to_string(q.dos.size());
    series.meta["g"] = format_real(g);
    series.meta["mu_initial"] = format_real(q.mu_initial);
    series.meta["mu_final"] = format_real(q.mu_final);
    return series;
}

double cesaro_fluctuation(const TimeSeries& series, double T) {
    const double dt = series.dt;
    if (series.size() < 2) throw std::invalid_argument("cesaro_fluctuation: series too short");
    if (T < 10.0 * dt * (1.0 - 1e-12)) {
        throw std::invalid_argument("cesaro_fluctuation: T below 10 dt is under-resolved");
    }
    if (T > series.horizon() * (1.0 + 1e-12)) {
        throw std::invalid_argument("cesaro_fluctuation: T beyond the stored horizon");
    }
    T = std::min(T, series.horizon());
    const double mean = cesaro_mean(series);
    auto dev2 = [&](std::size_t i) {
        const double d = series.values[i] - mean;
        return d * d;
    };
    const auto full = static_cast<std::size_t>(std::floor(T / dt * (1.0 + 1e-14)));
    CompensatedSum s;
    for (std::size_t i = 0; i < full; ++i) s += 0.5 * dt * (dev2(i) + dev2(i + 1));
    const double rest = T - static_cast<double>(full) * dt;
    if (rest > 0.0 && full + 1 < series.size()) {
        const double frac = rest / dt;
        const double a = series.values[full] - mean;
        const double b = series.values[full + 1] - mean;
        const double mid = a + frac * (b - a);
        s += 0.5 * rest * (a * a + mid * mid);
    }
    return s.value() / T;
}

TimeSeries fluctuation_curve(const TimeSeries& series) {
    if (series.size() < 12) throw std::invalid_argument("fluctuation_curve: series too short");
    const double mean = cesaro_mean(series);
    const double dt = series.dt;
    TimeSeries out;
    out.t0 = 10.0 * dt;
    out.dt = dt;
    out.meta = series.meta;
    CompensatedSum s;
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double a = series.values[i - 1] - mean;
        const double b = series.values[i] - mean;
        s += 0.5 * dt * (a * a + b * b);
        if (i >= 10) out.values.push_back(s.value() / (static_cast<double>(i) * dt));
    }
    return out;
}

std::optional<EquilibrationFit> fit_equilibration_time(const TimeSeries& qa) {
    if (qa.size() == 0) return std::nullopt;
    const auto peak = std::max_element(qa.values.begin(), qa.values.end());
    const double top = *peak;
    if (!(top > 0.0)) return std::nullopt;
    std::vector<double> x;
    std::vector<double> y;
    for (auto i = static_cast<std::size_t>(peak - qa.values.begin()) + 1; i < qa.size(); ++i) {
        const double v = qa.values[i];
        if (v >= 1e-8 * top && v <= 1e-1 * top) {
            x.push_back(qa.time(i));
            y.push_back(std::log(v));
        }
    }
    if (x.size() < 20) return std::nullopt;
    const auto line = fit_line(x, y);
    if (!(line.slope < 0.0)) return std::nullopt;
    return EquilibrationFit{-1.0 / line.slope, std::exp(line.intercept), line.rms_residual, x.size()};
}

EnsembleAverage ensemble_quench(std::int64_t n, double J, double J0, std::size_t samples,
                                std::uint64_t seed, double t_max, double dt, double initial_factor,
                                double final_factor, unsigned threads) {
    if (samples < 2) throw std::invalid_argument("ensemble needs at least two samples");
    std::vector<TimeSeries> runs(samples);
    parallel_for(
        samples,
        [&](std::size_t s) {
            auto dos = dos_random_matrix(n, J, J0, stream_seed(seed, s));
            auto q = make_lift_quench(std::move(dos), t_max, dt, initial_factor, final_factor);
            runs[s] = quench_observable(q, 1);
        },
        threads);

    EnsembleAverage out;
    out.samples = samples;
    out.mean.dt = dt;
    const std::size_t points = runs.front().size();
    out.mean.values.assign(points, 0.0);
    out.standard_error.assign(points, 0.0);
    const double S = static_cast<double>(samples);
    for (std::size_t i = 0; i < points; ++i) {
        CompensatedSum m;
        for (const auto& r : runs) m += r.values[i];
        const double mean = m.value() / S;
        CompensatedSum v;
        for (const auto& r : runs) v += (r.values[i] - mean) * (r.values[i] - mean);
        out.mean.values[i] = mean;
        out.standard_error[i] = std::sqrt(v.value() / (S - 1.0) / S);
    }
    out.mean.meta["dos"] = "random_matrix";
    out.mean.meta["N"] = std::to_string(n);
    out.mean.meta["J"] = format_real(J);
    out.mean.meta["J0"] = format_real(J0);
    out.mean.meta["samples"] = std::to_string(samples);
    out.mean.meta["seed"] = std::to_string(seed);
    return out;
}

}  // namespace lrq::spherical
