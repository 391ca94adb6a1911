#pragma once

#include <complex>

#include "hilbert/quadrature.hpp"
#include "hilbert/spaces.hpp"

namespace hilbert::op {

using cplx = std::complex<double>;
using spaces::FunctionHandle;

// T_t f = w_t * (f o phi_t); averaging T_t over t in (0,1) gives the
// operator.  phi_t maps the disk into itself with phi_t(0) = t.
struct WeightedComposition {
    double t;

    cplx w(cplx z) const { return 1.0 / (1.0 - (1.0 - t) * z); }
    cplx phi(cplx z) const { return t / (1.0 - (1.0 - t) * z); }
    // (1-t)(1-z)/(1-(1-t)z); cancellation-free complement of phi
    cplx one_minus_phi(cplx z) const {
        return (1.0 - t) * (1.0 - z) / (1.0 - (1.0 - t) * z);
    }
};

// Hf(z) as the kernel integral of f(t)/(1-tz) over (0,1).
cplx apply_integral(const FunctionHandle& f, cplx z, double tol = 1e-10);

struct MatrixResult {
    cplx value;
    double tail_bound;  // bound on the dropped outer tail at this |z|
    int terms;
};

// Hf(z) through the coefficient action b_n = sum_k a_k/(n+k+1); the inner sum
// is exact for polynomials, the outer sum stops once the geometric tail bound
// drops below tol/2.
MatrixResult apply_matrix(const FunctionHandle& f, cplx z, double tol = 1e-12,
                          int max_terms = 200000);

// Hf(z) as the average of the weighted composition operators.
cplx apply_weighted_composition(const FunctionHandle& f, cplx z,
                                double tol = 1e-10);

enum class DerivForm { Kernel, Composed };

// (Hf)'(z), either as the kernel integral of t f(t)/(1-tz)^2 or through the
// composed form with f(phi_t(z)); the two agree within quadrature error.
cplx derivative(const FunctionHandle& f, cplx z, double tol = 1e-10,
                DerivForm form = DerivForm::Kernel);

}  // namespace hilbert::op
