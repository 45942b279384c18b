#include "lrq/numeric.hpp"
#include "lrq/parallel.hpp"
#include "lrq/spherical.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lrq::spherical {

DensityOfStates DensityOfStates::discrete(std::vector<SpectralLevel> levels) {
    if (levels.size() < 2) throw std::invalid_argument("a discrete DOS needs at least two levels");
    CompensatedSum total;
    for (const auto& l : levels) {
        if (!std::isfinite(l.energy) || !(l.weight >= 0.0)) {
            throw std::invalid_argument("levels need finite energies and non-negative weights");
        }
        total += l.weight;
    }
    if (std::abs(total.value() - 1.0) > 1e-10) {
        throw std::invalid_argument("level weights must sum to 1");
    }
    std::stable_sort(levels.begin(), levels.end(),
                     [](const SpectralLevel& a, const SpectralLevel& b) { return a.energy < b.energy; });
    DensityOfStates dos;
    dos.kind_ = Kind::discrete;
    dos.size_ = static_cast<std::int64_t>(levels.size());
    dos.isolated_ = levels.front();
    dos.bulk_.assign(levels.begin() + 1, levels.end());
    dos.support_ = {dos.bulk_.front().energy, dos.bulk_.back().energy};
    return dos;
}

DensityOfStates DensityOfStates::two_level(double e0, double e1, std::int64_t n) {
    if (!(e0 < e1)) throw std::invalid_argument("two-level DOS needs e0 < e1");
    if (n < 0 || n == 1) throw std::invalid_argument("two-level DOS needs N >= 2 (or 0 for the limit)");
    DensityOfStates dos;
    dos.kind_ = Kind::two_level;
    dos.size_ = n;
    const double w0 = n == 0 ? 0.0 : 1.0 / static_cast<double>(n);
    dos.isolated_ = {e0, w0};
    dos.bulk_ = {{e1, 1.0 - w0}};
    dos.support_ = {e1, e1};
    return dos;
}

DensityOfStates DensityOfStates::semicircle(double J, double J0) {
    if (!(J > 0.0) || !(J0 > J) || !std::isfinite(J0)) {
        throw std::invalid_argument("semicircle DOS requires 0 < J < J0");
    }
    DensityOfStates dos;
    dos.kind_ = Kind::semicircle;
    dos.J_ = J;
    dos.J0_ = J0;
    dos.isolated_ = {-J0 - J * J / J0, 0.0};
    dos.support_ = {-2.0 * J, 2.0 * J};
    return dos;
}

double DensityOfStates::min_energy() const noexcept {
    return std::min(isolated_.energy, support_.first);
}

double DensityOfStates::bulk_average(const std::function<double(double)>& f, double tol) const {
    if (kind_ != Kind::semicircle) {
        CompensatedSum s;
        for (const auto& l : bulk_) s += l.weight * f(l.energy);
        return s.value();
    }
    // eps = -2J cos(theta) turns rho0(eps) d eps into (2/pi) sin^2(theta) d theta.
    const double J = J_;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        return (2.0 / pi) * s * s * f(-2.0 * J * std::cos(theta));
    };
    return integrate(integrand, 0.0, pi, tol, 0.0, 400000).value;
}

DensityOfStates dos_powerlaw(const spectra::CouplingSpec& spec, unsigned threads) {
    spec.validate();
    if (spec.d != 1) throw std::invalid_argument("dos_powerlaw is one-dimensional");
    const std::int64_t N = spec.size;
    const std::int64_t half = N / 2;
    const auto table = spectra::coefficient_table(spec, threads);
    const double norm = spectra::kac_norm(spec);
    const double antipode = std::pow(static_cast<double>(half), -spec.alpha) / (2.0 * norm);
    std::vector<SpectralLevel> levels;
    levels.reserve(static_cast<std::size_t>(half + 1));
    for (std::int64_t n = 0; n <= half; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const double energy = -spec.strength * (table.hopping[n] + sign * antipode);
        const double mult = (n == 0 || n == half) ? 1.0 : 2.0;
        levels.push_back({energy, mult / static_cast<double>(N)});
    }
    return DensityOfStates::discrete(std::move(levels));
}

DensityOfStates dos_flat(std::int64_t n, double J0) {
    if (!(J0 > 0.0)) throw std::invalid_argument("J0 must be positive");
    if (n == 0) return DensityOfStates::two_level(-J0, 0.0, 0);
    const double inv = 1.0 / static_cast<double>(n);
    return DensityOfStates::two_level(-J0 * (1.0 - inv), J0 * inv, n);
}

DensityOfStates dos_semicircle(double J, double J0) { return DensityOfStates::semicircle(J, J0); }

DensityOfStates dos_random_matrix(std::int64_t n, double J, double J0, std::uint64_t seed) {
    if (n < 2 || n > 4096) throw std::invalid_argument("random-matrix size must be in [2, 4096]");
    if (!(J > 0.0) || !(J0 > 0.0)) throw std::invalid_argument("J and J0 must be positive");
    const double nd = static_cast<double>(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, J / std::sqrt(nd));
    Eigen::MatrixXd U(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double x = gauss(rng) - J0 / nd;
            U(i, j) = x;
            U(j, i) = x;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(U, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("dos_random_matrix", "eigensolver did not converge");
    }
    std::vector<SpectralLevel> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) levels.push_back({solver.eigenvalues()(i), 1.0 / nd});
    return DensityOfStates::discrete(std::move(levels));
}

}  // namespace lrq::spherical
