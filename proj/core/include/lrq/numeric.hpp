#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrq {

/// Raised when an iterative numerical procedure fails to meet its contract.
/// `operation()` names the routine that gave up, which the CLI reports.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string operation, const std::string& what)
        : std::runtime_error(operation + ": " + what), operation_(std::move(operation)) {}

    const std::string& operation() const noexcept { return operation_; }

private:
    std::string operation_;
};

/// Neumaier (improved Kahan) compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (non-negative half).
inline constexpr std::array<double, 8> kronrod_nodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const noexcept { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kr = fc * kronrod_weights[7];
    double ga = fc * gauss_weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kronrod_nodes[j];
        const double s = f(c - dx) + f(c + dx);
        kr += kronrod_weights[j] * s;
        if (j % 2 == 1) ga += gauss_weights[j / 2] * s;
    }
    return {a, b, kr * h, std::abs((kr - ga) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Bisects the segment with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|). Throws NumericalError
/// when the interval budget is exhausted.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                           int max_intervals = 100000) {
    if (!(abs_tol > 0.0 || rel_tol > 0.0)) {
        throw std::invalid_argument("integrate: a positive tolerance is required");
    }
    if (a == b) return {};
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gk15(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int n = 1;
    while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (n >= max_intervals) {
            throw NumericalError("integrate", "interval budget exhausted, error estimate " +
                                                  std::to_string(error));
        }
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
        if (n % 64 == 0) {
            // Periodic exact re-summation of the running totals.
            auto copy = heap;
            CompensatedSum v, e;
            while (!copy.empty()) {
                v += copy.top().value;
                e += copy.top().error;
                copy.pop();
            }
            total = v.value();
            error = e.value();
        }
    }
    CompensatedSum v;
    while (!heap.empty()) {
        v += heap.top().value;
        heap.pop();
    }
    return {v.value(), error, n};
}

/// Bracketed root of a continuous function; f(lo) and f(hi) must differ in sign.
/// Converges until the bracket is narrower than x_tol (absolute).
double find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 const std::string& operation = "find_root");

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least-squares straight line through (x, y).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace lrq
