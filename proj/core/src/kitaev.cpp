#include "lrq/kitaev.hpp"

#include "lrq/numeric.hpp"
#include "lrq/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lrq::kitaev {

using cplx = std::complex<double>;

void QuenchProtocol::validate() const {
    spec.validate();
    if (spec.d != 1) throw std::invalid_argument("the Kitaev chain is one-dimensional");
    if (!std::isfinite(h_initial) || !std::isfinite(h_final)) {
        throw std::invalid_argument("fields must be finite");
    }
    if (!(dt > 0.0) || !(t_max > 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("need t_max > 0 and dt > 0");
    }
    if (t_max / dt > 1e7) throw std::invalid_argument("t_max / dt exceeds 1e7");
}

Angle bogolyubov_angle(double h, double t_tilde, double delta_tilde) {
    const double eps = h - t_tilde;
    if (eps == 0.0 && delta_tilde == 0.0) return {0.0, true};
    double theta = std::atan2(delta_tilde, eps);
    if (theta == -pi) theta = pi;
    return {theta, false};
}

double mode_frequency(double h, double t_tilde, double delta_tilde) {
    return std::hypot(h - t_tilde, delta_tilde);
}

BogolyubovField prepare_ground_state(const QuenchProtocol& protocol, unsigned threads) {
    protocol.validate();
    const std::int64_t N = protocol.spec.size;
    const std::int64_t half = N / 2;
    const auto table = spectra::coefficient_table(protocol.spec, threads);

    BogolyubovField field;
    field.size = N;
    field.modes.reserve(static_cast<std::size_t>(half + 1));
    for (std::int64_t idx = 0; idx <= half; ++idx) {
        const double t = table.hopping[idx];
        const double dlt = table.pairing[idx];
        Mode m;
        m.n = idx == half ? -half : idx;
        m.k = spectra::momentum(m.n, N);
        m.weight = (idx == 0 || idx == half) ? 1 : 2;
        const double theta_i = bogolyubov_angle(protocol.h_initial, t, dlt).theta;
        m.u = cplx(std::cos(0.5 * theta_i), 0.0);
        m.v = cplx(std::sin(0.5 * theta_i), 0.0);
        const auto final_angle = bogolyubov_angle(protocol.h_final, t, dlt);
        m.theta_f = final_angle.theta;
        m.indeterminate = final_angle.indeterminate;
        m.omega_f = mode_frequency(protocol.h_final, t, dlt);
        m.epsilon_f = protocol.h_final - t;
        m.delta_f = dlt;
        field.modes.push_back(m);
    }
    return field;
}

BogolyubovField evolve(const BogolyubovField& state, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("evolve needs t >= 0");
    BogolyubovField out = state;
    out.time = state.time + t;
    for (auto& m : out.modes) {
        const double phase = 2.0 * m.omega_f * t;
        const double c = std::cos(phase);
        const double s = std::sin(phase);
        const double ct = std::cos(m.theta_f);
        const double st = std::sin(m.theta_f);
        const cplx d_plus(c, -ct * s);
        const cplx d_minus(c, ct * s);
        const cplx off(0.0, -st * s);
        const cplx u = m.u;
        const cplx v = m.v;
        m.u = d_plus * u + off * v;
        m.v = off * u + d_minus * v;
    }
    return out;
}

double transverse_magnetization(const BogolyubovField& state) {
    CompensatedSum occupied;
    for (const auto& m : state.modes) occupied += m.weight * std::norm(m.v);
    return 1.0 - 2.0 * occupied.value() / static_cast<double>(state.size);
}

double energy(const BogolyubovField& state) {
    CompensatedSum e;
    for (const auto& m : state.modes) {
        const double diag = m.epsilon_f * (std::norm(m.u) - std::norm(m.v));
        const double offd = 2.0 * m.delta_f * std::real(std::conj(m.u) * m.v);
        e += m.weight * (diag + offd);
    }
    return e.value();
}

double norm_defect(const BogolyubovField& state) {
    double worst = 0.0;
    for (const auto& m : state.modes) {
        worst = std::max(worst, std::abs(std::norm(m.u) + std::norm(m.v) - 1.0));
    }
    return worst;
}

TimeSeries run_quench(const QuenchProtocol& protocol, unsigned threads) {
    const auto initial = prepare_ground_state(protocol, threads);
    TimeSeries series;
    series.dt = protocol.dt;
    series.values.assign(grid_points(protocol.t_max, protocol.dt), 0.0);
    parallel_for(
        series.size(),
        [&](std::size_t i) {
            series.values[i] = transverse_magnetization(evolve(initial, series.time(i)));
        },
        threads);
    series.meta["alpha"] = format_real(protocol.spec.alpha);
    series.meta["N"] = std::to_string(protocol.spec.size);
    series.meta["h_i"] = format_real(protocol.h_initial);
    series.meta["h_f"] = format_real(protocol.h_final);
    return series;
}

std::vector<double> revival_times(const TimeSeries& series, double relative_height) {
    const std::size_t n = series.size();
    std::vector<double> out;
    if (n < 5) return out;
    std::vector<double> slope(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        slope[i] = std::abs(series.values[i + 1] - series.values[i - 1]) / (2.0 * series.dt);
    }
    std::vector<std::size_t> peaks;
    double highest = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        if (slope[i] > slope[i - 1] && slope[i] >= slope[i + 1]) {
            peaks.push_back(i);
            highest = std::max(highest, slope[i]);
        }
    }
    for (const auto i : peaks) {
        if (slope[i] >= relative_height * highest && highest > 0.0) out.push_back(series.time(i));
    }
    return out;
}

}  // namespace lrq::kitaev
