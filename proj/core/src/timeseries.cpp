#include "lrq/timeseries.hpp"

#include "lrq/numeric.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace lrq {

std::size_t grid_points(double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("time grid needs dt > 0 and finite t_max >= 0");
    }
    const double steps = std::floor(t_max / dt + 1e-9);
    if (steps > 1e7) throw std::invalid_argument("time grid exceeds 1e7 steps");
    return static_cast<std::size_t>(steps) + 1;
}

double trapezoid(std::span<const double> y, double dt) {
    if (y.size() < 2) throw std::invalid_argument("trapezoid: need at least two samples");
    CompensatedSum s;
    s += 0.5 * y.front();
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    s += 0.5 * y.back();
    return s.value() * dt;
}

double cesaro_mean(const TimeSeries& series) {
    if (series.size() < 2) throw std::invalid_argument("cesaro_mean: series too short");
    return trapezoid(series.values, series.dt) / series.horizon();
}

std::string format_real(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double tail_mean(const TimeSeries& series, std::size_t first) {
    if (first >= series.size()) throw std::invalid_argument("tail_mean: empty window");
    CompensatedSum s;
    for (std::size_t i = first; i < series.size(); ++i) s += series.values[i];
    return s.value() / static_cast<double>(series.size() - first);
}

}  // namespace lrq
