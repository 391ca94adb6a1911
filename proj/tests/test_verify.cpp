#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "hilbert/norm_formulas.hpp"
#include "hilbert/search.hpp"
#include "hilbert/verify.hpp"

using namespace hilbert;
using namespace hilbert::spaces;
namespace F = hilbert::formulas;
namespace V = hilbert::verify;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("counter rng is deterministic and sane") {
    V::CounterRng a{42}, b{42}, c{43};
    CHECK(a.uniform(7) == b.uniform(7));
    CHECK(a.uniform(7) != c.uniform(7));
    double mean = 0.0;
    for (int i = 0; i < 4000; ++i) mean += a.normal(i);
    mean /= 4000.0;
    CHECK(std::abs(mean) < 0.1);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform(i);
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("certificates are deterministic under a fixed seed") {
    const auto s = SpaceSpec::hardy_inf();
    const auto t = SpaceSpec::bloch(1.0);
    const auto c1 = V::bound_certificate(s, t, 3.0, 8, 99);
    const auto c2 = V::bound_certificate(s, t, 3.0, 8, 99);
    CHECK(c1.worst_ratio == c2.worst_ratio);
    CHECK(c1.worst_function == c2.worst_function);
}

TEST_CASE("more trials never decrease the worst ratio") {
    const auto s = SpaceSpec::hardy_inf();
    const auto t = SpaceSpec::bloch(1.0);
    const auto small = V::bound_certificate(s, t, 3.0, 6, 1729);
    const auto big = V::bound_certificate(s, t, 3.0, 14, 1729);
    CHECK(big.worst_ratio >= small.worst_ratio);
}

TEST_CASE("random functions never beat the exact sup-to-Bloch norm") {
    const auto cert = V::bound_certificate(SpaceSpec::hardy_inf(),
                                           SpaceSpec::bloch(1.0), 3.0, 25, 7);
    CHECK(cert.passed);
    CHECK(cert.worst_ratio <= 3.0 + 1e-6);
    CHECK(cert.worst_ratio > 0.5);  // the ensemble is not degenerate
}

TEST_CASE("certificate honors the log-to-plain upper bound") {
    const double a = 0.5;
    const auto cert = V::bound_certificate(SpaceSpec::log_korenblum(a),
                                           SpaceSpec::korenblum(a),
                                           F::th34_upper(a), 20, 1729);
    CHECK(cert.passed);
}

TEST_CASE("unbounded pairs are rejected with direction to the probe") {
    CHECK_THROWS_AS(V::bound_certificate(SpaceSpec::bloch(2.5),
                                         SpaceSpec::bloch(2.5), 10.0, 5, 1),
                    std::domain_error);
    CHECK_THROWS_AS(V::bound_certificate(SpaceSpec::hardy_inf(),
                                         SpaceSpec::korenblum(0.5), 10.0, 5, 1),
                    std::domain_error);
}

TEST_CASE("extremal function realizes at least the lower bound") {
    const double a = 0.5;
    auto f = make_function("f_alpha", a);
    const double ratio = V::named_function_ratio(
        SpaceSpec::log_korenblum(a), SpaceSpec::korenblum(a), f);
    CHECK(ratio >= F::th31_lower(a) - 1e-6);
    CHECK(ratio <= F::th31_norm(a).value + 1e-6);
}

TEST_CASE("representation crosscheck over the sampled ensemble") {
    const auto deg0 = V::crosscheck_representations(0, 20, 5);
    CHECK(deg0.max_deviation <= 1e-10);
    const auto deg20 = V::crosscheck_representations(20, 50, 5);
    CHECK(deg20.max_deviation <= 1e-8);
}

TEST_CASE("attainment quantities approach the theorem values") {
    CHECK(std::abs(V::attainment_ratio("TH61", 0.0, 1.0 - 1e-6) - 3.0) <=
          1e-3);
    {
        std::vector<double> ss, vs;
        for (int k = 2; k <= 5; ++k) {
            const double s = std::pow(10.0, -k);
            ss.push_back(s);
            vs.push_back(V::attainment_ratio("TH71", 0.5, 1.0 - s));
        }
        const double ex = search::neville(ss, vs, 0.0);
        CHECK(std::abs(ex - 1.5 * kPi) <= 1e-4);
    }
    {
        std::vector<double> us, vs;
        for (int k = 2; k <= 5; ++k) {
            const double s = std::pow(10.0, -k);
            us.push_back(std::sqrt(s));  // leading correction power at a=1.5
            vs.push_back(V::attainment_ratio("TH52", 1.5, 1.0 - s));
        }
        const double ex = search::neville(us, vs, 0.0);
        CHECK(std::abs(ex - (1.5 * kPi - 1.0)) <= 1e-3);
    }
    CHECK_THROWS_AS(V::attainment_ratio("TH99", 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(V::attainment_ratio("TH61", 0.0, 1.5), std::domain_error);
}

TEST_CASE("radial reduction audit") {
    const auto single = V::radial_reduction_audit("TH31", 0.5, 1);
    CHECK(single.gap == 0.0);

    const auto constant = V::radial_reduction_audit("CONST", 0.5, 16);
    CHECK(constant.gap == 0.0);
    CHECK(constant.radial_sup == doctest::Approx(1.0).epsilon(1e-12));

    const auto polar = V::radial_reduction_audit("TH31", 0.5, 16);
    CHECK(polar.gap <= 1e-9);  // radial maximizer

    CHECK_THROWS_AS(V::radial_reduction_audit("XX", 0.5, 4),
                    std::domain_error);
}
