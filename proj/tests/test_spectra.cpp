#include "doctest.h"
#include "oracles.hpp"

#include "lrq/numeric.hpp"
#include "lrq/spectra.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <vector>

using namespace lrq::spectra;

namespace {
CouplingSpec chain(double alpha, std::int64_t N) { return {alpha, 1, N, 1.0}; }
}  // namespace

TEST_CASE("coupling spec invariants") {
    CHECK_NOTHROW(chain(0.5, 4).validate());
    CHECK_THROWS(chain(0.5, 6 - 1).validate());
    CHECK_THROWS(chain(0.5, 2).validate());
    CHECK_THROWS(chain(1.0, 8).validate());
    CHECK_THROWS(chain(-0.1, 8).validate());
    CHECK_NOTHROW(CouplingSpec{1.0, 2, 8, 1.0}.validate());
    CHECK_THROWS(CouplingSpec{0.5, 4, 8, 1.0}.validate());
}

TEST_CASE("unit_phase symmetries are exact") {
    for (std::int64_t N : {8, 12, 1024, 1 << 18}) {
        CHECK(unit_phase(N / 2, N).second == 0.0);
        CHECK(unit_phase(N / 2, N).first == -1.0);
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{3}, N / 4 + 1, N / 3}) {
            const auto a = unit_phase(m, N);
            const auto b = unit_phase(-m, N);
            CHECK(a.first == b.first);
            CHECK(a.second == -b.second);
            CHECK(std::abs(a.first - std::cos(2 * oracle::pi * m / N)) < 1e-15);
            CHECK(std::abs(a.second - std::sin(2 * oracle::pi * m / N)) < 1e-15);
        }
    }
}

TEST_CASE("kac_norm examples") {
    CHECK(kac_norm(chain(0.0, 8)) == 4.0);
    CHECK(kac_norm(chain(2.0, 1 << 20)) == doctest::Approx(oracle::pi * oracle::pi / 6).epsilon(1e-5));
    // alpha = 1 is excluded in one dimension; the same direct sum at alpha -> 1 is 1 + 1/2.
    CHECK(kac_norm(chain(1.0 - 1e-12, 4)) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(kac_norm(CouplingSpec{1.0, 2, 4, 1.0}) > 0.0);
}

TEST_CASE("finite coefficients: zero mode, parity, range") {
    const auto s = chain(0.7, 1024);
    const double n0 = hopping_fourier_finite(s, 0);
    const double tail = std::pow(512.0, -0.7) / kac_norm(s);
    CHECK(std::abs(n0 - (1.0 - tail)) < 1e-14);
    CHECK(pairing_fourier_finite(s, 0) == 0.0);
    for (std::int64_t n : {1, 5, 100, 511}) {
        CHECK(hopping_fourier_finite(s, n) == hopping_fourier_finite(s, -n));
        CHECK(pairing_fourier_finite(s, n) == -pairing_fourier_finite(s, -n));
    }
    CHECK(pairing_fourier_finite(s, -512) == 0.0);
    CHECK_THROWS_AS(hopping_fourier_finite(s, 512), std::out_of_range);
    CHECK_THROWS_AS(hopping_fourier_finite(s, -513), std::out_of_range);
}

TEST_CASE("coefficient table agrees with the single-mode sums") {
    const auto s = chain(0.4, 256);
    const auto table = coefficient_table(s, 2);
    REQUIRE(table.hopping.size() == 129);
    for (std::int64_t n : {0, 1, 17, 64, 127}) {
        CHECK(std::abs(table.hopping[n] - hopping_fourier_finite(s, n)) < 1e-14);
        CHECK(std::abs(table.pairing[n] - pairing_fourier_finite(s, n)) < 1e-14);
    }
    CHECK(std::abs(table.hopping[128] - hopping_fourier_finite(s, -128)) < 1e-14);
    CHECK(table.pairing[128] == 0.0);
}

TEST_CASE("limit coefficients against the independent quadrature oracle") {
    CHECK(std::abs(hopping_coeff_limit(0.5, 1) - oracle::hopping_limit(0.5, 1)) < 1e-10);
    CHECK(std::abs(pairing_coeff_limit(0.5, 2) - oracle::pairing_limit(0.5, 2)) < 1e-10);
    for (double a : {0.1, 0.3, 0.5}) {
        for (std::int64_t n : {1, 3, 10}) {
            CHECK(std::abs(hopping_coeff_limit(a, n) - oracle::hopping_limit(a, n)) < 1e-10);
            CHECK(std::abs(pairing_coeff_limit(a, n) - oracle::pairing_limit(a, n)) < 1e-10);
        }
    }
    for (double a : {0.7, 0.9}) {
        CHECK(std::abs(hopping_coeff_limit(a, 2) - oracle::hopping_limit(a, 2)) < 1e-9);
        CHECK(std::abs(pairing_coeff_limit(a, 2) - oracle::pairing_limit(a, 2)) < 1e-9);
    }
}

TEST_CASE("limit coefficients: normalisation and parity") {
    for (int i = 1; i <= 9; ++i) {
        const double a = 0.1 * i;
        CHECK(std::abs(hopping_coeff_limit(a, 0) - 1.0) < 1e-9);
        CHECK(pairing_coeff_limit(a, 0) == 0.0);
        for (std::int64_t n : {1, 4, 25}) {
            CHECK(hopping_coeff_limit(a, n) == hopping_coeff_limit(a, -n));
            CHECK(pairing_coeff_limit(a, n) == -pairing_coeff_limit(a, -n));
        }
    }
    CHECK_THROWS(hopping_coeff_limit(0.0, 1));
    CHECK_THROWS(hopping_coeff_limit(1.0, 1));
    CHECK_THROWS(pairing_coeff_limit(1.5, 1));
}

TEST_CASE("limit coefficients decay with n") {
    for (double a : {0.1, 0.3, 0.5}) {
        CHECK(std::abs(hopping_coeff_limit(a, 100)) < std::abs(hopping_coeff_limit(a, 1)) / 10.0);
        CHECK(std::abs(pairing_coeff_limit(a, 100)) < std::abs(pairing_coeff_limit(a, 1)) / 10.0);
    }
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double t1 = hopping_coeff_limit(a, 1);
        const double t100 = hopping_coeff_limit(a, 100);
        const double t1000 = hopping_coeff_limit(a, 1000);
        CHECK(std::abs(t100) < std::abs(t1));
        CHECK(std::abs(t1000) < std::abs(t100));
        const double slope = std::log(std::abs(t1000 / t100)) / std::log(10.0);
        CHECK(slope == doctest::Approx(a - 1.0).epsilon(0.05));
    }
}

TEST_CASE("limit coefficients vanish as alpha -> 0") {
    for (std::int64_t n : {1, 2, 7}) CHECK(std::abs(hopping_coeff_limit(1e-3, n)) < 1e-2);
}

TEST_CASE("finite sums converge monotonically to the limit") {
    for (double a : {0.3, 0.5, 0.9}) {
        for (std::int64_t n : {1, 2, 5}) {
            const double limit = hopping_coeff_limit(a, n);
            double prev = INFINITY;
            for (int p = 10; p <= 18; ++p) {
                const double err = std::abs(hopping_fourier_finite(chain(a, std::int64_t{1} << p), n) - limit);
                CHECK(err < prev);
                prev = err;
            }
        }
    }
    const double tl = hopping_coeff_limit(0.5, 1);
    const double dl = pairing_coeff_limit(0.5, 1);
    const double t14 = std::abs(hopping_fourier_finite(chain(0.5, 1 << 14), 1) - tl);
    const double t16 = std::abs(hopping_fourier_finite(chain(0.5, 1 << 16), 1) - tl);
    const double d14 = std::abs(pairing_fourier_finite(chain(0.5, 1 << 14), 1) - dl);
    const double d16 = std::abs(pairing_fourier_finite(chain(0.5, 1 << 16), 1) - dl);
    CHECK(t16 < 3e-3);
    CHECK(d16 < 3e-3);
    // finite-size corrections scale as N^(alpha - 1)
    CHECK(t16 / t14 == doctest::Approx(0.5).epsilon(0.05));
    CHECK(d16 / d14 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("polylog couplings") {
    const auto z = polylog_couplings(2.0, 0.0);
    CHECK(z.re == 1.0);
    CHECK(z.im == 0.0);
    const auto m = polylog_couplings(2.0, oracle::pi);
    const double li2 = oracle::dilog_minus_one() / (oracle::pi * oracle::pi / 6.0);
    CHECK(std::abs(m.re - li2) < 1e-11);
    CHECK(std::abs(m.re + 0.5) < 1e-12);
    CHECK(std::abs(m.im) < 1e-12);

    // Li_2(i) = -pi^2/48 + i G (Catalan's constant)
    const auto q = polylog_couplings(2.0, oracle::pi / 2.0);
    CHECK(std::abs(q.re - (-1.0 / 8.0)) < 1e-12);
    CHECK(std::abs(q.im - 0.915965594177219015 * 6.0 / (oracle::pi * oracle::pi)) < 1e-12);

    const auto small = polylog_couplings(1.75, 0.1);
    const std::int64_t N = 1 << 18;
    const auto n = static_cast<std::int64_t>(std::llround(0.1 * N / (2 * oracle::pi)));
    const double k = momentum(n, N);
    const auto at_k = polylog_couplings(1.75, k);
    CHECK(std::abs(at_k.re - hopping_fourier_finite(chain(1.75, N), n)) < 1e-4);
    CHECK(std::abs(at_k.im - pairing_fourier_finite(chain(1.75, N), n)) < 1e-4);
    CHECK(std::abs(small.re - at_k.re) < 1e-3);

    const auto quarter = polylog_couplings(2.0, oracle::pi / 2);
    CHECK(std::abs(quarter.re - hopping_fourier_finite(chain(2.0, 1 << 14), (1 << 14) / 4)) < 1e-3);

    CHECK_THROWS(polylog_couplings(1.0, 0.3));
    CHECK_THROWS(polylog_couplings(0.5, 0.0));
    CHECK_THROWS(polylog_couplings(2.0, 4.0));
}

TEST_CASE("discrete spectrum") {
    const auto one = discrete_spectrum(chain(0.5, 4), 1.0, 0);
    REQUIRE(one.levels.size() == 1);
    CHECK(std::abs(one.levels[0].energy) < 1e-9);

    const auto sp = discrete_spectrum(chain(0.3, 4), 2.0, 10);
    REQUIRE(sp.levels.size() == 11);
    int modes = 0;
    for (std::size_t i = 0; i < sp.levels.size(); ++i) {
        const auto& l = sp.levels[i];
        CHECK(l.energy == doctest::Approx(2.0 - hopping_coeff_limit(0.3, l.mode)).epsilon(1e-15));
        if (i > 0) CHECK(l.energy > sp.levels[i - 1].energy);
        CHECK(l.energy < 2.0);
        modes += l.degeneracy;
    }
    CHECK(modes == 21);

    const auto wide = discrete_spectrum(chain(0.5, 4), 1.0, 200);
    CHECK(wide.levels.back().energy < 1.0);
    CHECK(1.0 - wide.levels.back().energy < 0.1);
}

TEST_CASE("d-dimensional lattice coefficients") {
    const std::array<std::int64_t, 2> zero{0, 0};
    const double c0 = lattice_coeff_ddim(CouplingSpec{1.5, 2, 64, 1.0}, zero);
    CHECK(c0 < 1.0);
    CHECK(c0 > 0.9);

    const std::array<std::int64_t, 2> e1{1, 0};
    std::vector<double> seq;
    for (std::int64_t L : {32, 64, 128, 256}) seq.push_back(lattice_coeff_ddim(CouplingSpec{1.5, 2, L, 1.0}, e1));
    CHECK(std::abs(seq[2] - seq[1]) < std::abs(seq[1] - seq[0]));
    CHECK(std::abs(seq[3] - seq[2]) < std::abs(seq[2] - seq[1]));

    const std::array<std::int64_t, 2> e2{2, 0};
    std::vector<double> gaps;
    for (std::int64_t L : {32, 64, 128, 256}) {
        const CouplingSpec s{3.0, 2, L, 1.0};
        gaps.push_back(std::abs(lattice_coeff_ddim(s, e1) - lattice_coeff_ddim(s, e2)));
        if (gaps.size() > 1) CHECK(gaps.back() < 0.6 * gaps[gaps.size() - 2]);
    }
    CHECK(gaps.back() < gaps.front() / 6.0);

    const std::array<std::int64_t, 3> z3{1, 0, 0};
    CHECK(lattice_coeff_ddim(CouplingSpec{0.5, 3, 16, 1.0}, z3) < 1.0);
    CHECK_THROWS(lattice_coeff_ddim(CouplingSpec{0.5, 3, 512, 1.0}, z3));
    CHECK_THROWS(lattice_coeff_ddim(CouplingSpec{0.5, 2, 16, 1.0}, z3));
    const std::array<std::int64_t, 2> big{9, 0};
    CHECK_THROWS(lattice_coeff_ddim(CouplingSpec{0.5, 2, 16, 1.0}, big));
}

TEST_CASE("gap scans") {
    const std::vector<std::int64_t> sizes{1 << 10, 1 << 12, 1 << 14};
    const auto same = gap_scan(chain(0.5, 4), sizes, {3, 3});
    for (const auto& g : same) CHECK(g.gap == 0.0);

    const auto discrete = gap_scan(chain(0.5, 4), sizes, {1, 2});
    const double limit = hopping_coeff_limit(0.5, 1) - hopping_coeff_limit(0.5, 2);
    CHECK(std::abs(discrete.back().gap - limit) < std::abs(discrete.front().gap - limit));
    CHECK(discrete.back().gap > 0.1);

    const auto continuous = adjacent_gap_scan(chain(1.5, 4), sizes, oracle::pi / 2);
    const double ratio = continuous[0].gap / continuous[2].gap;
    CHECK(ratio == doctest::Approx(16.0).epsilon(0.1));
    CHECK(continuous[0].n1 == 256);

    const std::vector<std::int64_t> unsorted{64, 32};
    CHECK_THROWS(gap_scan(chain(0.5, 4), unsorted, {1, 2}));
}
