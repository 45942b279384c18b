#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lrq {

/// Observable sampled on the uniform grid t_i = t0 + i*dt.
struct TimeSeries {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> values;
    /// Free-form provenance record (parameters, seed, ...), kept ordered so
    /// serialisation is deterministic.
    std::map<std::string, std::string> meta;

    std::size_t size() const noexcept { return values.size(); }
    double time(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * dt; }
    double horizon() const noexcept {
        return values.empty() ? 0.0 : static_cast<double>(values.size() - 1) * dt;
    }
};

/// Number of grid points covering [0, t_max] with step dt (inclusive of both ends
/// when t_max is a multiple of dt up to rounding).
std::size_t grid_points(double t_max, double dt);

/// Trapezoid integral of the first `count` samples (count >= 2) with spacing dt.
double trapezoid(std::span<const double> y, double dt);

/// Trapezoid time average (1/T) * integral over the whole stored horizon.
double cesaro_mean(const TimeSeries& series);

/// Shortest decimal form that reads back to exactly x.
std::string format_real(double x);

/// Plain arithmetic mean of the samples with index >= first.
double tail_mean(const TimeSeries& series, std::size_t first);

}  // namespace lrq
