#include "lrq/numeric.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cstdint>

namespace lrq {

double find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 const std::string& operation) {
    if (!(lo < hi)) throw std::invalid_argument(operation + ": empty bracket");
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NumericalError(operation, "root is not bracketed");
    }
    std::uintmax_t iterations = 500;
    auto tol = [x_tol](double a, double b) { return std::abs(b - a) <= x_tol; };
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iterations);
    if (iterations >= 500) throw NumericalError(operation, "root bracket did not converge");
    return 0.5 * (a + b);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two paired samples");
    }
    const double n = static_cast<double>(x.size());
    CompensatedSum sx, sy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx.value() / n;
    const double my = sy.value() / n;
    CompensatedSum sxx, sxy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx.value() <= 0.0) throw std::invalid_argument("fit_line: abscissae are all equal");
    LineFit fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;
    CompensatedSum ss;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss.value() / n);
    return fit;
}

}  // namespace lrq
