#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hilbert::spaces {

using cplx = std::complex<double>;

enum class SpaceKind { HardyInf, Korenblum, LogKorenblum, BlochAlpha };

struct SpaceSpec {
    SpaceKind kind = SpaceKind::HardyInf;
    double alpha = 0.0;

    static SpaceSpec hardy_inf() { return {SpaceKind::HardyInf, 0.0}; }
    static SpaceSpec korenblum(double alpha) {
        return {SpaceKind::Korenblum, alpha};
    }
    static SpaceSpec log_korenblum(double alpha) {
        return {SpaceKind::LogKorenblum, alpha};
    }
    static SpaceSpec bloch(double alpha = 1.0) {
        return {SpaceKind::BlochAlpha, alpha};
    }

    // throws std::domain_error when alpha violates the kind's admissible range
    void validate() const;
    std::string label() const;
};

// log(2 e^{1/alpha} / x); the logarithmic factor of the weighted norms.
double log_weight_factor(double alpha, double x);

// Weight of `space` at radius r in [0,1): 1, (1-r^2)^a, (1-r^2)^a*log-factor,
// or (1-r^2)^a applied to the derivative for BlochAlpha.
double weight(const SpaceSpec& space, double r);

// g(x) = x^alpha log(2 e^{1/alpha}/x), nondecreasing on (0,2].
double g_aux(double alpha, double x);

// An analytic function on the unit disk, factored as
//   f(z) = smooth(z, 1-z) * (1-z)^{right_exponent}.
// The complement 1-z is always passed explicitly so radial evaluations
// arbitrarily close to 1 (quadrature abscissas) never lose precision.
struct FunctionHandle {
    std::string name;
    std::function<cplx(cplx z, cplx one_minus_z)> smooth;
    double right_exponent = 0.0;
    std::optional<std::vector<double>> taylor;
    std::optional<std::function<cplx(cplx z, cplx one_minus_z)>> deriv;
    bool radial_profile_known = false;
    bool real_on_real = true;

    cplx eval(cplx z) const;
    cplx eval(cplx z, cplx one_minus_z) const;
    double radial(double t, double one_minus_t) const;  // f(t), t in [0,1)
    // f'(z): taylor/analytic derivative when available, complex-step on the
    // real axis for real-coefficient handles, Richardson otherwise.
    cplx derivative_at(cplx z) const;
};

struct NormEstimate {
    double value = 0.0;
    std::string method;
    double argsup_radius = 0.0;
    double argsup_angle = 0.0;  // radians; 0 on the radial path
    bool boundary_attained = false;
};

// sup over the sampled region of weight * |f| (weight * |f'| plus |f(0)| for
// BlochAlpha).  Radial-only sampling when f.radial_profile_known, otherwise a
// polar grid (64 angles).  `refine` adds golden-section refinement around the
// discrete argmax.
NormEstimate norm_estimate(const SpaceSpec& space, const FunctionHandle& f,
                           int radial_samples = 512, bool refine = true);

// Polar-grid variant with explicit angle count (audit mode / general
// functions).
NormEstimate norm_estimate_polar(const SpaceSpec& space,
                                 const FunctionHandle& f, int radial_samples,
                                 int angles, bool refine = true);

// Registry ids: "const", "monomial:k", "poly:[c0,c1,...]", "f_alpha",
// "f_alpha_plain", "h_alpha", "h_one".
FunctionHandle make_function(const std::string& id, double alpha = 0.0);
FunctionHandle make_polynomial(std::vector<double> coeffs,
                               std::string name = "poly");

}  // namespace hilbert::spaces
