#pragma once

#include <complex>
#include <functional>

#include "hilbert/errors.hpp"

namespace hilbert::quad {

// Integrand evaluators receive both t and 1-t.  The complement is produced
// by the transformation itself, so callers can evaluate factors like
// log(1/(1-t)) or (1+t)(1-t) without catastrophic cancellation even when
// t is within 1e-300 of an endpoint.
using RealEvaluator = std::function<double(double t, double one_minus_t)>;
using ComplexEvaluator =
    std::function<std::complex<double>(double t, double one_minus_t)>;

// f(t) = smooth(t, 1-t) * t^left_exponent * (1-t)^right_exponent on (0,1).
// Both exponents must exceed -1; the smooth part must be finite on every
// closed subinterval of (0,1).
struct SingularIntegrand {
    RealEvaluator smooth;
    double left_exponent = 0.0;
    double right_exponent = 0.0;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

struct ComplexQuadResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
};

// TanhSinh is the default backend; GaussJacobi (adaptive panels with
// endpoint-matched rules) serves as the independent cross-check.
enum class Backend { TanhSinh, GaussJacobi };

inline constexpr double kDefaultAbsTol = 1e-12;
inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr long kEvaluationBudget = 2'000'000;

QuadResult integrate(const SingularIntegrand& f,
                     double tol_abs = kDefaultAbsTol,
                     double tol_rel = kDefaultRelTol,
                     Backend backend = Backend::TanhSinh);

// Integrates smooth * t^le * (1-t)^re / log_factor.  The log factor must be
// strictly positive on (0,1).
QuadResult integrate_with_log(const SingularIntegrand& f,
                              const RealEvaluator& log_factor,
                              double tol_abs = kDefaultAbsTol,
                              double tol_rel = kDefaultRelTol,
                              Backend backend = Backend::TanhSinh);

// Complex-valued variant (tanh-sinh only); used for operator evaluation at
// complex points.
ComplexQuadResult integrate_complex(const ComplexEvaluator& smooth,
                                    double left_exponent,
                                    double right_exponent,
                                    double tol_abs = kDefaultAbsTol,
                                    double tol_rel = kDefaultRelTol);

}  // namespace hilbert::quad
