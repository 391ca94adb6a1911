#include "hilbert/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hilbert::special {

namespace {

// Rational series with g = 671/128; good to ~15 significant digits for x > 0.
constexpr double kCoef[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4,  0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

constexpr double kSqrtTwoPi = 2.5066282746310005;

// sin(pi*x) with the argument reduced before multiplying by pi, so the
// result stays accurate near x -> 0 and x -> 1.
double sin_pi(double x) {
    const double s = (x <= 0.5) ? x : 1.0 - x;
    return std::sin(std::numbers::pi * s);
}

}  // namespace

double lgamma_pos(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("lgamma_pos: argument must be positive");
    }
    double y = x;
    double tmp = x + 671.0 / 128.0;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : kCoef) {
        ser += c / ++y;
    }
    return tmp + std::log(kSqrtTwoPi * ser / x);
}

SpecialValue gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma: argument must be positive");
    }
    const double lg = lgamma_pos(x);
    const double v = std::exp(lg);
    const double err = std::abs(v) * 2e-16 * (2.0 + std::abs(lg));
    return {v, err};
}

SpecialValue beta(double s, double t) {
    if (!(s > 0.0) || !(t > 0.0)) {
        throw std::domain_error("beta: arguments must be positive");
    }
    const double lb = lgamma_pos(s) + lgamma_pos(t) - lgamma_pos(s + t);
    const double v = std::exp(lb);
    const double err = std::abs(v) * 2e-16 * (3.0 + std::abs(lb));
    return {v, err};
}

SpecialValue reflection(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("reflection: alpha must lie in (0,1)");
    }
    const double s = sin_pi(alpha);
    const double v = std::numbers::pi / s;
    const double err = std::abs(v) * 4e-16 / std::min(alpha, 1.0 - alpha);
    return {v, err};
}

}  // namespace hilbert::special
