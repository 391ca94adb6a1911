#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hilbert::search {

struct ScalarMax {
    double arg = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

// Golden-section maximization on [a, b].  Assumes a single interior maximum
// within the bracket; returns the best point seen either way.
ScalarMax golden_section_max(const std::function<double(double)>& f,
                             double a, double b, double tol_x,
                             int max_iter = 200);

// Scan precomputed samples, then refine around the discrete argmax.
ScalarMax refine_sampled_max(const std::function<double(double)>& f,
                             std::span<const double> xs,
                             std::span<const double> ys,
                             double tol_x);

// Neville polynomial extrapolation of (xs, ys) to the point x.
double neville(std::span<const double> xs, std::span<const double> ys,
               double x);

// n Chebyshev points on [a, b] including both endpoints, clustered near them.
std::vector<double> chebyshev_points(double a, double b, int n);

}  // namespace hilbert::search
