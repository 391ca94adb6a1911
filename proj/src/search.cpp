#include "hilbert/search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hilbert::search {

ScalarMax golden_section_max(const std::function<double(double)>& f,
                             double a, double b, double tol_x, int max_iter) {
    if (!(a <= b)) throw std::invalid_argument("golden_section_max: a > b");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;

    double best_arg = fc >= fd ? c : d;
    double best_val = fc >= fd ? fc : fd;

    for (int i = 0; i < max_iter && (b - a) > tol_x; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
        if (fc > best_val) { best_val = fc; best_arg = c; }
        if (fd > best_val) { best_val = fd; best_arg = d; }
    }
    return {best_arg, best_val, evals};
}

ScalarMax refine_sampled_max(const std::function<double(double)>& f,
                             std::span<const double> xs,
                             std::span<const double> ys, double tol_x) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("refine_sampled_max: bad sample arrays");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (ys[i] > ys[best]) best = i;
    }
    const double lo = best == 0 ? xs[0] : xs[best - 1];
    const double hi = best + 1 == xs.size() ? xs[best] : xs[best + 1];
    ScalarMax refined = golden_section_max(f, lo, hi, tol_x);
    if (ys[best] > refined.value) {
        refined.arg = xs[best];
        refined.value = ys[best];
    }
    return refined;
}

double neville(std::span<const double> xs, std::span<const double> ys,
               double x) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("neville: bad sample arrays");
    }
    std::vector<double> p(ys.begin(), ys.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double x0 = xs[i];
            const double x1 = xs[i + level];
            p[i] = ((x - x1) * p[i] + (x0 - x) * p[i + 1]) / (x0 - x1);
        }
    }
    return p[0];
}

std::vector<double> chebyshev_points(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("chebyshev_points: need n >= 2");
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) {
        const double theta = std::numbers::pi * i / (n - 1);
        xs[i] = a + (b - a) * 0.5 * (1.0 - std::cos(theta));
    }
    xs.front() = a;
    xs.back() = b;
    return xs;
}

}  // namespace hilbert::search
