#include "hilbert/hilbert_op.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace hilbert::op {

namespace {

void check_point(cplx z) {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error("hilbert operator: |z| must be < 1");
    }
}

void check_growth(const FunctionHandle& f) {
    if (!(f.right_exponent > -1.0)) {
        throw std::domain_error(
            "hilbert operator: declared growth exponent <= -1, Hf is not "
            "defined (integrand fails to be integrable)");
    }
}

}  // namespace

cplx apply_integral(const FunctionHandle& f, cplx z, double tol) {
    check_point(z);
    check_growth(f);
    auto g = [&f, z](double t, double tc) {
        const cplx denom = 1.0 - t * z;
        assert(denom.real() > 0.0);
        return f.smooth(cplx{t, 0.0}, cplx{tc, 0.0}) / denom;
    };
    auto r = quad::integrate_complex(g, 0.0, f.right_exponent, tol, tol);
    return r.value;
}

MatrixResult apply_matrix(const FunctionHandle& f, cplx z, double tol,
                          int max_terms) {
    check_point(z);
    if (!f.taylor) {
        throw std::invalid_argument(
            "apply_matrix: function carries no Taylor coefficients");
    }
    const auto& a = *f.taylor;
    const double rho = std::abs(z);
    double a_l1 = 0.0;
    for (double c : a) a_l1 += std::abs(c);

    cplx sum{0.0, 0.0};
    cplx zn{1.0, 0.0};
    int n = 0;
    double tail = a_l1;
    for (; n < max_terms; ++n) {
        double bn = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            bn += a[k] / (n + static_cast<double>(k) + 1.0);
        }
        sum += bn * zn;
        zn *= z;
        // |b_m| <= a_l1/(m+1) for m > n gives a geometric tail bound
        tail = a_l1 * std::pow(rho, n + 1) / ((n + 2.0) * (1.0 - rho));
        if (tail < tol / 2.0) {
            ++n;
            break;
        }
    }
    return {sum, tail, n};
}

cplx apply_weighted_composition(const FunctionHandle& f, cplx z, double tol) {
    check_point(z);
    check_growth(f);
    const double re = f.right_exponent;
    auto g = [&f, z, re](double t, double tc) {
        const cplx denom = 1.0 - (1.0 - t) * z;
        assert(denom.real() > 0.0);
        const cplx w = 1.0 / denom;
        const cplx phi = t * w;
        const cplx ratio = (1.0 - z) * w;  // one_minus_phi / (1-t)
        const cplx phic = tc * ratio;
        cplx v = w * f.smooth(phi, phic);
        if (re != 0.0) v *= std::pow(ratio, re);
        return v;
    };
    auto r = quad::integrate_complex(g, 0.0, re, tol, tol);
    return r.value;
}

cplx derivative(const FunctionHandle& f, cplx z, double tol, DerivForm form) {
    check_point(z);
    check_growth(f);
    if (form == DerivForm::Kernel) {
        auto g = [&f, z](double t, double tc) {
            const cplx denom = 1.0 - t * z;
            assert(denom.real() > 0.0);
            return t * f.smooth(cplx{t, 0.0}, cplx{tc, 0.0}) / (denom * denom);
        };
        auto r = quad::integrate_complex(g, 0.0, f.right_exponent, tol, tol);
        return r.value;
    }
    if (z == cplx{1.0, 0.0}) {
        throw std::domain_error("derivative(composed): z = 1 is excluded");
    }
    const double re = f.right_exponent;
    const cplx one_minus_z = 1.0 - z;
    auto g = [&f, z, re, one_minus_z](double t, double tc) {
        const cplx denom = 1.0 - (1.0 - t) * z;
        assert(denom.real() > 0.0);
        const cplx ratio = one_minus_z / denom;
        const cplx phi = t / denom;
        const cplx phic = tc * ratio;
        cplx v = t / (denom * one_minus_z) * f.smooth(phi, phic);
        if (re != 0.0) v *= std::pow(ratio, re);
        return v;
    };
    auto r = quad::integrate_complex(g, 0.0, re, tol, tol);
    return r.value;
}

}  // namespace hilbert::op
