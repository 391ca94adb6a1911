#include <cmath>
#include <vector>

#include "doctest.h"
#include "hilbert/search.hpp"

using namespace hilbert::search;

TEST_CASE("golden section finds an interior maximum") {
    auto f = [](double x) { return -(x - 1.234) * (x - 1.234) + 2.0; };
    auto m = golden_section_max(f, 0.0, 3.0, 1e-12);
    CHECK(m.arg == doctest::Approx(1.234).epsilon(1e-5));
    CHECK(m.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("refine_sampled_max improves on the discrete argmax") {
    auto f = [](double x) { return std::sin(x); };
    std::vector<double> xs, ys;
    for (int i = 0; i <= 20; ++i) {
        xs.push_back(i * 0.15);
        ys.push_back(f(xs.back()));
    }
    auto m = refine_sampled_max(f, xs, ys, 1e-12);
    CHECK(m.arg == doctest::Approx(std::asin(1.0)).epsilon(1e-8));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("neville reproduces polynomials exactly") {
    auto p = [](double x) { return 3.0 + 2.0 * x - 5.0 * x * x; };
    std::vector<double> xs = {0.4, 0.2, 0.1};
    std::vector<double> ys = {p(0.4), p(0.2), p(0.1)};
    CHECK(neville(xs, ys, 0.0) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(neville(xs, ys, 0.05) == doctest::Approx(p(0.05)).epsilon(1e-13));
}

TEST_CASE("chebyshev points include endpoints and cluster near them") {
    auto xs = chebyshev_points(0.0, 1.0, 33);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 1.0);
    CHECK(xs.size() == 33);
    // clustering: the last gap is much smaller than the central one
    const double edge_gap = xs[32] - xs[31];
    const double mid_gap = xs[17] - xs[16];
    CHECK(edge_gap < 0.2 * mid_gap);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
}
