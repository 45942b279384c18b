#include "lrq/spectra.hpp"

#include "lattice_internal.hpp"
#include "lrq/numeric.hpp"
#include "lrq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lrq::spectra {

void CouplingSpec::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::invalid_argument("alpha must be finite and >= 0");
    }
    if (d < 1 || d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (size < 4 || size % 2 != 0) throw std::invalid_argument("size must be even and >= 4");
    if (!std::isfinite(strength) || strength <= 0.0) {
        throw std::invalid_argument("strength must be positive");
    }
    if (d == 1 && alpha == 1.0) {
        throw std::invalid_argument("alpha = 1 in one dimension is not supported");
    }
}

double momentum(std::int64_t n, std::int64_t size) noexcept {
    return 2.0 * pi * static_cast<double>(n) / static_cast<double>(size);
}

std::pair<double, double> unit_phase(std::int64_t m, std::int64_t size) noexcept {
    const std::int64_t N = size;
    m %= N;
    if (m < 0) m += N;
    double sign_s = 1.0;
    double sign_c = 1.0;
    if (2 * m > N) {
        m = N - m;
        sign_s = -1.0;
    }
    if (N % 2 == 0 && 4 * m > N) {
        m = N / 2 - m;
        sign_c = -1.0;
    }
    double c;
    double s;
    if (N % 4 == 0 && 8 * m > N) {
        const double a = 2.0 * pi * static_cast<double>(N / 4 - m) / static_cast<double>(N);
        c = std::sin(a);
        s = std::cos(a);
    } else {
        const double a = 2.0 * pi * static_cast<double>(m) / static_cast<double>(N);
        c = std::cos(a);
        s = std::sin(a);
    }
    return {sign_c * c, sign_s * s};
}

namespace {

double kac_norm_1d(double alpha, std::int64_t size) {
    CompensatedSum s;
    for (std::int64_t r = 1; r <= size / 2; ++r) s += std::pow(static_cast<double>(r), -alpha);
    return s.value();
}

void check_mode(const CouplingSpec& spec, std::int64_t n) {
    if (n < -spec.size / 2 || n >= spec.size / 2) {
        throw std::out_of_range("mode index " + std::to_string(n) +
                                " outside the Brillouin zone [-N/2, N/2)");
    }
}

template <bool Sine>
double finite_sum(const CouplingSpec& spec, std::int64_t n) {
    spec.validate();
    if (spec.d != 1) throw std::invalid_argument("finite Fourier sums are one-dimensional");
    check_mode(spec, n);
    const std::int64_t N = spec.size;
    CompensatedSum s;
    for (std::int64_t r = 1; r < N / 2; ++r) {
        const auto [c, sn] = unit_phase((n * r) % N, N);
        s += (Sine ? sn : c) * std::pow(static_cast<double>(r), -spec.alpha);
    }
    return s.value() / kac_norm_1d(spec.alpha, N);
}

void check_limit_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        throw std::invalid_argument("limit coefficients require 0 < alpha < 1");
    }
}

// With s = u^p, p = 1/(1 - alpha), the weight s^-alpha ds becomes p du and the
// upper limit 1/2 maps to u = 2^(alpha - 1).
template <class Trig>
double limit_integral(double alpha, std::int64_t n, Trig trig) {
    check_limit_alpha(alpha);
    const double p = 1.0 / (1.0 - alpha);
    const double upper = std::exp2(alpha - 1.0);
    const double w = 2.0 * pi * static_cast<double>(n);
    auto f = [&](double u) { return trig(w * std::pow(u, p)); };
    const auto r = integrate(f, 0.0, upper, 1e-11, 0.0, 200000);
    return std::exp2(1.0 - alpha) * r.value;
}

}  // namespace

double kac_norm(const CouplingSpec& spec) {
    spec.validate();
    if (spec.d == 1) return kac_norm_1d(spec.alpha, spec.size);
    return detail::lattice_kac_norm(spec);
}

double hopping_fourier_finite(const CouplingSpec& spec, std::int64_t n) {
    return finite_sum<false>(spec, n);
}

double pairing_fourier_finite(const CouplingSpec& spec, std::int64_t n) {
    return finite_sum<true>(spec, n);
}

CoefficientTable coefficient_table(const CouplingSpec& spec, unsigned threads) {
    spec.validate();
    if (spec.d != 1) throw std::invalid_argument("coefficient tables are one-dimensional");
    const std::int64_t N = spec.size;
    const std::int64_t half = N / 2;
    std::vector<double> cos_t(static_cast<std::size_t>(N));
    std::vector<double> sin_t(static_cast<std::size_t>(N));
    for (std::int64_t m = 0; m < N; ++m) {
        const auto [c, s] = unit_phase(m, N);
        cos_t[m] = c;
        sin_t[m] = s;
    }
    std::vector<double> weight(static_cast<std::size_t>(half), 0.0);
    for (std::int64_t r = 1; r < half; ++r) weight[r] = std::pow(static_cast<double>(r), -spec.alpha);
    const double norm = kac_norm_1d(spec.alpha, N);

    CoefficientTable table;
    table.size = N;
    table.hopping.assign(static_cast<std::size_t>(half + 1), 0.0);
    table.pairing.assign(static_cast<std::size_t>(half + 1), 0.0);
    parallel_for(
        static_cast<std::size_t>(half + 1),
        [&](std::size_t idx) {
            const auto n = static_cast<std::int64_t>(idx);
            CompensatedSum hc;
            CompensatedSum hs;
            std::int64_t m = 0;
            for (std::int64_t r = 1; r < half; ++r) {
                m += n;
                if (m >= N) m -= N;
                hc += weight[r] * cos_t[m];
                hs += weight[r] * sin_t[m];
            }
            table.hopping[idx] = hc.value() / norm;
            table.pairing[idx] = n == half ? 0.0 : hs.value() / norm;
        },
        threads);
    return table;
}

double hopping_coeff_limit(double alpha, std::int64_t n) {
    return limit_integral(alpha, n, [](double x) { return std::cos(x); });
}

double pairing_coeff_limit(double alpha, std::int64_t n) {
    return limit_integral(alpha, n, [](double x) { return std::sin(x); });
}

ModeSpectrum discrete_spectrum(const CouplingSpec& spec, double mu, std::int64_t n_max) {
    check_limit_alpha(spec.alpha);
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (!std::isfinite(mu)) throw std::invalid_argument("mu must be finite");
    ModeSpectrum out;
    out.mu = mu;
    out.levels.reserve(static_cast<std::size_t>(n_max + 1));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.levels.push_back({n, mu - hopping_coeff_limit(spec.alpha, n), n == 0 ? 1 : 2});
    }
    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const Level& a, const Level& b) { return a.energy < b.energy; });
    return out;
}

std::vector<GapPoint> gap_scan(const CouplingSpec& spec, std::span<const std::int64_t> sizes,
                               std::pair<std::int64_t, std::int64_t> n_pair) {
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("gap_scan sizes must be ascending");
    }
    std::vector<GapPoint> out;
    for (const auto N : sizes) {
        CouplingSpec s = spec;
        s.size = N;
        const double a = hopping_fourier_finite(s, n_pair.first);
        const double b = n_pair.first == n_pair.second ? a : hopping_fourier_finite(s, n_pair.second);
        out.push_back({N, n_pair.first, n_pair.second, std::abs(a - b)});
    }
    return out;
}

std::vector<GapPoint> adjacent_gap_scan(const CouplingSpec& spec,
                                        std::span<const std::int64_t> sizes, double k) {
    if (!(k > 0.0 && k < pi)) throw std::invalid_argument("adjacent_gap_scan needs 0 < k < pi");
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("adjacent_gap_scan sizes must be ascending");
    }
    std::vector<GapPoint> out;
    for (const auto N : sizes) {
        CouplingSpec s = spec;
        s.size = N;
        auto n1 = static_cast<std::int64_t>(std::floor(k * static_cast<double>(N) / (2.0 * pi)));
        n1 = std::min(n1, N / 2 - 2);
        const double a = hopping_fourier_finite(s, n1);
        const double b = hopping_fourier_finite(s, n1 + 1);
        out.push_back({N, n1, n1 + 1, std::abs(a - b)});
    }
    return out;
}

}  // namespace lrq::spectra
