#include "lattice_internal.hpp"
#include "lrq/numeric.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lrq::spectra {

namespace {

constexpr double max_sites = 16777216.0;  // 2^24

void check_lattice(const CouplingSpec& spec) {
    spec.validate();
    if (spec.d < 2) throw std::invalid_argument("lattice sums need d = 2 or 3");
    if (std::pow(static_cast<double>(spec.size), spec.d) > max_sites) {
        throw std::invalid_argument("lattice enumeration exceeds 2^24 sites");
    }
}

// Visits every R in [-extent, extent]^d except the origin.
template <class Visit>
void for_each_site(int d, std::int64_t extent, Visit visit) {
    std::array<std::int64_t, 3> r{0, 0, 0};
    const std::int64_t lo = -extent;
    for (int i = 0; i < d; ++i) r[i] = lo;
    for (;;) {
        bool origin = true;
        for (int i = 0; i < d; ++i) origin = origin && r[i] == 0;
        if (!origin) visit(r);
        int i = 0;
        while (i < d && r[i] == extent) {
            r[i] = lo;
            ++i;
        }
        if (i == d) return;
        ++r[i];
    }
}

double inverse_power(const std::array<std::int64_t, 3>& r, int d, double alpha) {
    double sq = 0.0;
    for (int i = 0; i < d; ++i) sq += static_cast<double>(r[i] * r[i]);
    return std::pow(sq, -0.5 * alpha);
}

}  // namespace

namespace detail {

double lattice_kac_norm(const CouplingSpec& spec) {
    check_lattice(spec);
    CompensatedSum s;
    for_each_site(spec.d, spec.size / 2, [&](const auto& r) { s += inverse_power(r, spec.d, spec.alpha); });
    return 0.5 * s.value();
}

}  // namespace detail

double lattice_coeff_ddim(const CouplingSpec& spec, std::span<const std::int64_t> n_vec) {
    check_lattice(spec);
    if (n_vec.size() != static_cast<std::size_t>(spec.d)) {
        throw std::invalid_argument("wave vector length must equal the dimension");
    }
    const std::int64_t L = spec.size;
    for (const auto n : n_vec) {
        if (std::llabs(n) > L / 2) throw std::out_of_range("wave vector component beyond L/2");
    }
    CompensatedSum num;
    for_each_site(spec.d, L / 2 - 1, [&](const auto& r) {
        std::int64_t phase = 0;
        for (int i = 0; i < spec.d; ++i) phase += n_vec[i] * r[i];
        num += unit_phase(phase, L).first * inverse_power(r, spec.d, spec.alpha);
    });
    return num.value() / (2.0 * detail::lattice_kac_norm(spec));
}

}  // namespace lrq::spectra
