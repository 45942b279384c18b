#include "lrq/numeric.hpp"
#include "lrq/spectra.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lrq::spectra {

namespace {

using cplx = std::complex<double>;

constexpr int max_tail_order = 60;

// Returns R^-j Li_{-j}(z) for j = 0..orders, using
// Li_{-j}(z) = sum_{k=1}^{j+1} (k-1)! S(j+1, k) w^k,  w = z / (1 - z),
// with S the Stirling numbers of the second kind.
std::vector<cplx> scaled_negative_polylogs(cplx z, double R, int orders) {
    const cplx w = z / (1.0 - z);
    const cplx v = w / R;
    std::vector<std::vector<double>> stirling(static_cast<std::size_t>(orders + 2));
    stirling[0] = {1.0};
    for (int n = 1; n <= orders + 1; ++n) {
        stirling[n].assign(static_cast<std::size_t>(n + 1), 0.0);
        for (int k = 1; k <= n; ++k) {
            const double prev_k = k < n ? stirling[n - 1][k] : 0.0;
            stirling[n][k] = k * prev_k + stirling[n - 1][k - 1];
        }
    }
    std::vector<cplx> out(static_cast<std::size_t>(orders + 1));
    for (int j = 0; j <= orders; ++j) {
        cplx acc = 0.0;
        cplx vk = 1.0;
        double fact = 1.0;
        for (int k = 1; k <= j + 1; ++k) {
            if (k > 1) {
                vk *= v;
                fact *= (k - 1);
            }
            acc += fact * stirling[j + 1][k] * std::pow(R, -(j + 1 - k)) * vk;
        }
        out[j] = w * acc;
    }
    return out;
}

}  // namespace

PolylogValue polylog_couplings(double alpha, double k) {
    if (!std::isfinite(alpha) || alpha <= 1.0) {
        throw std::invalid_argument("polylog couplings need alpha > 1");
    }
    if (!std::isfinite(k) || k < -pi || k > pi) {
        throw std::invalid_argument("momentum must lie in [-pi, pi]");
    }
    if (k == 0.0) return {1.0, 0.0, 0.0};

    const cplx z = std::polar(1.0, k);
    const double dist = std::abs(1.0 - z);
    const auto R = static_cast<std::int64_t>(std::max(100.0, std::ceil(60.0 / dist)));

    CompensatedSum re;
    CompensatedSum im;
    for (std::int64_t r = 1; r <= R; ++r) {
        const double w = std::pow(static_cast<double>(r), -alpha);
        const double phase = k * static_cast<double>(r);
        re += w * std::cos(phase);
        im += w * std::sin(phase);
    }

    // Tail sum_{m>=1} z^{R+m} (R+m)^-alpha as the asymptotic series
    // z^R sum_j f^(j)(R)/j! Li_{-j}(z), f(x) = x^-alpha, truncated at its smallest term.
    const double Rd = static_cast<double>(R);
    const auto li = scaled_negative_polylogs(z, Rd, max_tail_order);
    double coeff = std::pow(Rd, -alpha);
    cplx tail = 0.0;
    // The remainder bound is the larger of the last two included terms.
    double last = std::numeric_limits<double>::infinity();
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= max_tail_order; ++j) {
        const cplx term = coeff * li[j];
        const double mag = std::abs(term);
        const double bound = std::max(mag, j == 0 ? mag : prev_mag);
        if (bound > last) break;
        tail += term;
        last = bound;
        prev_mag = mag;
        if (j > 0 && bound < 1e-18) break;
        coeff *= -(alpha + j) / (j + 1);
    }
    if (last > 1e-13) throw NumericalError("polylog_couplings", "tail series did not converge");
    tail *= std::polar(1.0, k * Rd);

    const double zeta = std::riemann_zeta(alpha);
    return {(re.value() + tail.real()) / zeta, (im.value() + tail.imag()) / zeta, last};
}

}  // namespace lrq::spectra
