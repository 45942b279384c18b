#pragma once

// Independent reference computations used only by the tests.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// c_alpha int_0^{1/2} trig(2 pi n s) s^-alpha ds through s = u^2, integrated
/// with boost's adaptive Gauss-Kronrod when the integrand is smooth (alpha = 1/2)
/// and with tanh-sinh otherwise (u^{1-2 alpha} is not smooth at u = 0).
template <class Trig>
double limit_coefficient(double alpha, std::int64_t n, Trig trig) {
    const double c = (1.0 - alpha) * std::pow(2.0, 1.0 - alpha);
    const double w = 2.0 * pi * static_cast<double>(n);
    auto f = [&](double u) { return 2.0 * std::pow(u, 1.0 - 2.0 * alpha) * trig(w * u * u); };
    const double upper = std::sqrt(0.5);
    if (alpha == 0.5) {
        double err = 0.0;
        return c * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 25,
                                                                                  1e-14, &err);
    }
    boost::math::quadrature::tanh_sinh<double> ts;
    return c * ts.integrate(f, 0.0, upper);
}

inline double hopping_limit(double alpha, std::int64_t n) {
    return limit_coefficient(alpha, n, [](double x) { return std::cos(x); });
}
inline double pairing_limit(double alpha, std::int64_t n) {
    return limit_coefficient(alpha, n, [](double x) { return std::sin(x); });
}

/// Eigenvalues of the explicitly assembled N x N coupling matrix
/// U_ij = -J0/(2 N_alpha) d(i,j)^-alpha, periodic distance d, zero diagonal.
inline std::vector<double> dense_powerlaw_eigenvalues(double alpha, int N, double J0) {
    double norm = 0.0;
    for (int r = 1; r <= N / 2; ++r) norm += std::pow(r, -alpha);
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            int d = std::abs(i - j);
            d = std::min(d, N - d);
            U(i, j) = -J0 / (2.0 * norm) * std::pow(d, -alpha);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(U, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + N);
    return out;
}

/// Real symmetric 2x2 [[a, b], [b, -a]]: eigenvector of the larger eigenvalue.
inline std::array<double, 2> upper_eigenvector(double a, double b) {
    Eigen::Matrix2d H;
    H << a, b, b, -a;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(H);
    Eigen::Vector2d v = es.eigenvectors().col(1);
    if (v(0) < 0.0 || (v(0) == 0.0 && v(1) < 0.0)) v = -v;
    return {v(0), v(1)};
}

using cvec2 = std::array<std::complex<double>, 2>;

/// Classical RK4 for i d/dt (u, v) = 2 [[eps, delta], [delta, -eps]] (u, v).
inline cvec2 rk4_mode(cvec2 y, double eps, double delta, double t, int steps) {
    const std::complex<double> mi(0.0, -2.0);
    auto rhs = [&](const cvec2& s) {
        return cvec2{mi * (eps * s[0] + delta * s[1]), mi * (delta * s[0] - eps * s[1])};
    };
    const double h = t / steps;
    for (int k = 0; k < steps; ++k) {
        auto k1 = rhs(y);
        auto k2 = rhs({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
        auto k3 = rhs({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
        auto k4 = rhs({y[0] + h * k3[0], y[1] + h * k3[1]});
        for (int c = 0; c < 2; ++c) y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
    return y;
}

/// RK4 for x'' + wf^2 x = 1/(4 x^3) with x(0) = 1/sqrt(2 w0), x'(0) = 0, returning
/// sqrt(2 w0) x(t) on the grid t_i = i * h_out (h_out a multiple of the step h).
inline std::vector<double> rk4_ermakov(double w0, double wf, double t_max, double h_out, int sub) {
    double x = 1.0 / std::sqrt(2.0 * w0);
    double p = 0.0;
    const double h = h_out / sub;
    auto acc = [&](double xx) { return -wf * wf * xx + 0.25 / (xx * xx * xx); };
    std::vector<double> out{x * std::sqrt(2.0 * w0)};
    const int n_out = static_cast<int>(std::llround(t_max / h_out));
    for (int i = 0; i < n_out; ++i) {
        for (int k = 0; k < sub; ++k) {
            const double k1x = p, k1p = acc(x);
            const double k2x = p + 0.5 * h * k1p, k2p = acc(x + 0.5 * h * k1x);
            const double k3x = p + 0.5 * h * k2p, k3p = acc(x + 0.5 * h * k2x);
            const double k4x = p + h * k3p, k4p = acc(x + h * k3x);
            x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
            p += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
        }
        out.push_back(x * std::sqrt(2.0 * w0));
    }
    return out;
}

/// Li_2(-1) through the alternating series sum (-1)^r / r^2 with Euler-style
/// averaging of consecutive partial sums.
inline double dilog_minus_one() {
    double s = 0.0;
    double prev = 0.0;
    const int R = 2000000;
    for (int r = 1; r <= R; ++r) {
        prev = s;
        s += ((r % 2) ? -1.0 : 1.0) / (static_cast<double>(r) * r);
    }
    return 0.5 * (s + prev);
}

}  // namespace oracle
