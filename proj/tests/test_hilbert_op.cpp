#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "hilbert/hilbert_op.hpp"
#include "hilbert/verify.hpp"

using namespace hilbert;
using namespace hilbert::spaces;
using cd = std::complex<double>;

namespace {
constexpr double kLog2 = 0.6931471805599453;
}

TEST_CASE("kernel integral at reference points") {
    auto one = make_function("const", 0.0);
    CHECK(std::abs(op::apply_integral(one, cd{0.0, 0.0}) - cd{1.0, 0.0}) <=
          1e-12);
    CHECK(std::abs(op::apply_integral(one, cd{0.5, 0.0}, 1e-12) -
                   cd{2.0 * kLog2, 0.0}) <= 1e-11);
    auto t = make_function("monomial:1", 0.0);
    CHECK(std::abs(op::apply_integral(t, cd{0.0, 0.0}) - cd{0.5, 0.0}) <=
          1e-12);
}

TEST_CASE("closed form for the image of the constant") {
    auto one = make_function("const", 0.0);
    for (int i = 1; i <= 20; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 20.0;
        const cd z = std::polar(0.35 + 0.025 * i, theta);
        const cd direct = op::apply_integral(one, z, 1e-12);
        const cd closed = -std::log(1.0 - z) / z;
        CHECK(std::abs(direct - closed) <= 1e-10);
    }
    // z -> 0 limit is 1
    CHECK(std::abs(op::apply_integral(one, cd{1e-9, 0.0}, 1e-12) -
                   cd{1.0, 0.0}) <= 1e-8);
}

TEST_CASE("matrix action basics") {
    auto zero = make_polynomial({0.0, 0.0, 0.0}, "zero");
    CHECK(std::abs(op::apply_matrix(zero, cd{0.5, 0.2}).value) == 0.0);

    auto z1 = make_function("monomial:1", 0.0);
    CHECK(std::abs(op::apply_matrix(z1, cd{0.0, 0.0}).value - cd{0.5, 0.0}) <=
          1e-15);

    auto one = make_function("const", 0.0);
    auto m = op::apply_matrix(one, cd{0.5, 0.0}, 1e-12);
    auto i = op::apply_integral(one, cd{0.5, 0.0}, 1e-12);
    CHECK(std::abs(m.value - i) <= 1e-10);
    CHECK(m.tail_bound <= 1e-12);
}

TEST_CASE("weighted composition representation") {
    auto t = make_function("monomial:1", 0.0);
    // at z = 0 the average reduces to the plain integral of f
    CHECK(std::abs(op::apply_weighted_composition(t, cd{0.0, 0.0}) -
                   cd{0.5, 0.0}) <= 1e-12);
    auto one = make_function("const", 0.0);
    CHECK(std::abs(op::apply_weighted_composition(one, cd{0.5, 0.0}, 1e-12) -
                   cd{2.0 * kLog2, 0.0}) <= 1e-11);
    auto fa = make_function("f_alpha", 0.5);
    const cd z{0.3, 0.0};
    CHECK(std::abs(op::apply_weighted_composition(fa, z, 1e-11) -
                   op::apply_integral(fa, z, 1e-11)) <= 1e-9);
}

TEST_CASE("self-map property of the composition symbol") {
    for (double t : {0.05, 0.4, 0.9}) {
        op::WeightedComposition wc{t};
        CHECK(std::abs(wc.phi(cd{0.0, 0.0}) - cd{t, 0.0}) <= 1e-15);
        CHECK(std::abs(wc.w(cd{0.0, 0.0}) - cd{1.0, 0.0}) <= 1e-15);
        for (int i = 0; i < 32; ++i) {
            const cd z = std::polar(0.97, 2.0 * std::numbers::pi * i / 32.0);
            CHECK(std::abs(wc.phi(z)) < 1.0);
            CHECK(std::abs(wc.one_minus_phi(z) - (1.0 - wc.phi(z))) <= 1e-12);
        }
    }
}

TEST_CASE("derivative representations") {
    auto one = make_function("const", 0.0);
    auto t = make_function("monomial:1", 0.0);
    CHECK(std::abs(op::derivative(one, cd{0.0, 0.0}) - cd{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(op::derivative(t, cd{0.0, 0.0}) - cd{1.0 / 3.0, 0.0}) <=
          1e-12);
    const cd z{0.5, 0.0};
    const cd k = op::derivative(one, z, 1e-11, op::DerivForm::Kernel);
    const cd c = op::derivative(one, z, 1e-11, op::DerivForm::Composed);
    CHECK(std::abs(k - c) <= 1e-9);
    CHECK_THROWS_AS(
        op::derivative(one, cd{1.0, 0.0}, 1e-10, op::DerivForm::Composed),
        std::domain_error);
}

TEST_CASE("derivative agrees with a central difference of the integral") {
    auto f = make_polynomial({1.0, -0.5, 0.25, 0.6}, "p");
    for (cd z : {cd{0.4, 0.0}, cd{0.2, 0.55}, cd{-0.7, 0.1}}) {
        const double h = 1e-6;
        const cd fd = (op::apply_integral(f, z + h, 1e-12) -
                       op::apply_integral(f, z - h, 1e-12)) /
                      (2.0 * h);
        CHECK(std::abs(op::derivative(f, z, 1e-11) - fd) <= 1e-6);
    }
}

TEST_CASE("representation equivalence over random polynomials") {
    verify::CounterRng rng{12345};
    for (int trial = 0; trial < 12; ++trial) {
        const std::uint64_t base = trial * 128;
        const int deg = static_cast<int>(rng.uniform(base) * 21.0);
        std::vector<double> c(deg + 1);
        for (int k = 0; k <= deg; ++k) c[k] = rng.normal(base / 2 + 1 + k);
        auto f = make_polynomial(c, "p");
        for (int j = 0; j < 4; ++j) {
            const double rad = 0.9 * std::sqrt(rng.uniform(base + 64 + 2 * j));
            const double ang = 2.0 * std::numbers::pi *
                               rng.uniform(base + 65 + 2 * j);
            const cd z = std::polar(rad, ang);
            const cd m = op::apply_matrix(f, z, 1e-12).value;
            const cd i = op::apply_integral(f, z, 1e-11);
            const cd w = op::apply_weighted_composition(f, z, 1e-11);
            CHECK(std::abs(m - i) <= 1e-8);
            CHECK(std::abs(i - w) <= 1e-8);
        }
    }
}

TEST_CASE("linearity of the representations") {
    auto f = make_polynomial({0.5, 1.0, -0.25}, "f");
    auto g = make_polynomial({-1.0, 0.0, 2.0, 0.125}, "g");
    std::vector<double> combo = {2.0 * 0.5 - 0.5 * -1.0, 2.0 * 1.0,
                                 2.0 * -0.25 - 0.5 * 2.0, -0.5 * 0.125};
    // combo = 2 f - 0.5 g
    auto h = make_polynomial(combo, "h");
    const cd z{0.3, 0.4};
    const cd lhs = op::apply_integral(h, z, 1e-12);
    const cd rhs = 2.0 * op::apply_integral(f, z, 1e-12) -
                   0.5 * op::apply_integral(g, z, 1e-12);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
}

TEST_CASE("operator rejects out-of-domain requests") {
    auto one = make_function("const", 0.0);
    CHECK_THROWS_AS(op::apply_integral(one, cd{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(op::apply_matrix(one, cd{0.0, 1.2}), std::domain_error);

    // declared non-integrable growth mirrors the undefined image
    FunctionHandle bad;
    bad.name = "too_singular";
    bad.right_exponent = -1.2;
    bad.smooth = [](cd, cd) { return cd{1.0, 0.0}; };
    CHECK_THROWS_AS(op::apply_integral(bad, cd{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(op::apply_weighted_composition(bad, cd{0.0, 0.0}),
                    std::domain_error);
}
