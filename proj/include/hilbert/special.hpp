#pragma once

namespace hilbert::special {

// A computed value together with a crude absolute error bound.
struct SpecialValue {
    double value;
    double abs_error;
};

// log Gamma(x) for x > 0.
double lgamma_pos(double x);

// Gamma(x) for x > 0.  Relative accuracy ~1e-14 on (0, 50].
SpecialValue gamma(double x);

// B(s,t) = Gamma(s)Gamma(t)/Gamma(s+t), s,t > 0.
SpecialValue beta(double s, double t);

// pi / sin(alpha*pi) for alpha in (0,1); equals Gamma(alpha)Gamma(1-alpha)
// and the value of the integral of t^(alpha-1)(1-t)^(-alpha) over (0,1).
SpecialValue reflection(double alpha);

}  // namespace hilbert::special
