#include "hilbert/verify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hilbert/hilbert_op.hpp"
#include "hilbert/norm_formulas.hpp"
#include "hilbert/quadrature.hpp"
#include "hilbert/search.hpp"

namespace hilbert::verify {

namespace {

using cplx = std::complex<double>;
using spaces::FunctionHandle;
using spaces::SpaceKind;
using spaces::SpaceSpec;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Hf and (Hf)' of a polynomial in closed form through
//   I_k(z) = int t^k/(1-tz) dt,   z I_k = I_{k-1} - 1/k,  I_0 = -log(1-z)/z
//   J_k(z) = int t^{k+1}/(1-tz)^2 dt,  z J_k = J_{k-1} - I_k,  J_{-1} = 1/(1-z)
// The recurrence divides by z, so it is used only for |z| > 0.8; below that
// the coefficient series b_n = sum_k a_k/(n+k+1) converges fast.
struct HfValues {
    cplx value;
    cplx deriv;
};

HfValues hf_of_polynomial(const std::vector<double>& a, cplx z, cplx zc) {
    HfValues out{{0.0, 0.0}, {0.0, 0.0}};
    const std::size_t n = a.size();
    const double rho = std::abs(z);
    if (rho <= 0.8) {
        double a_l1 = 0.0;
        for (double c : a) a_l1 += std::abs(c);
        cplx zm{1.0, 0.0};   // z^m
        cplx zm1{0.0, 0.0};  // m z^{m-1}
        for (int m = 0;; ++m) {
            double bm = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                bm += a[k] / (m + static_cast<double>(k) + 1.0);
            }
            out.value += bm * zm;
            out.deriv += bm * zm1;
            zm1 = (m + 1.0) * zm;
            zm *= z;
            if (m > 4 && a_l1 * std::pow(rho, m + 1) < 1e-18) break;
            if (m > 4000) break;
        }
        return out;
    }
    cplx I = -std::log(zc) / z;
    cplx J = (1.0 / zc - I) / z;  // J_0
    for (std::size_t k = 0; k < n; ++k) {
        out.value += a[k] * I;
        out.deriv += a[k] * J;
        const cplx I_next = (I - 1.0 / (k + 1.0)) / z;
        J = (J - I_next) / z;
        I = I_next;
    }
    return out;
}

FunctionHandle hilbert_image_of_polynomial(std::vector<double> coeffs,
                                           std::string name) {
    FunctionHandle h;
    h.name = std::move(name);
    h.right_exponent = 0.0;
    h.radial_profile_known = false;
    h.real_on_real = true;
    auto c = std::make_shared<std::vector<double>>(std::move(coeffs));
    h.smooth = [c](cplx z, cplx zc) { return hf_of_polynomial(*c, z, zc).value; };
    h.deriv = [c](cplx z, cplx zc) { return hf_of_polynomial(*c, z, zc).deriv; };
    return h;
}

bool same_alpha(double a, double b) { return std::abs(a - b) < 1e-12; }

// The (source, target) pairs declared bounded, with their alpha hypotheses.
void require_bounded_pair(const SpaceSpec& src, const SpaceSpec& tgt) {
    src.validate();
    tgt.validate();
    const auto bad = [&](const char* regime) {
        throw std::domain_error(
            std::string("bound_certificate: the operator is unbounded in this "
                        "regime (") +
            regime + "); use unboundedness_probe instead");
    };
    if (src.kind == SpaceKind::HardyInf && tgt.kind == SpaceKind::BlochAlpha &&
        same_alpha(tgt.alpha, 1.0)) {
        return;
    }
    if (src.kind == SpaceKind::LogKorenblum &&
        (tgt.kind == SpaceKind::Korenblum ||
         tgt.kind == SpaceKind::LogKorenblum) &&
        same_alpha(src.alpha, tgt.alpha)) {
        return;
    }
    if (src.kind == SpaceKind::Korenblum && tgt.kind == SpaceKind::BlochAlpha &&
        same_alpha(tgt.alpha, src.alpha + 1.0)) {
        return;  // src.alpha < 1 enforced by validate()
    }
    if (src.kind == SpaceKind::BlochAlpha && tgt.kind == SpaceKind::BlochAlpha &&
        same_alpha(src.alpha, tgt.alpha)) {
        if (src.alpha > 1.0 && src.alpha < 2.0) return;
        bad("Bloch-to-Bloch needs 1 < alpha < 2");
    }
    throw std::domain_error(
        "bound_certificate: no boundedness claim covers this "
        "(source, target) pair");
}

int certificate_angles(int degree) {
    return std::clamp(8 * (degree + 1), 64, 256);
}

}  // namespace

double CounterRng::uniform(std::uint64_t c) const {
    const std::uint64_t r =
        splitmix64(splitmix64(seed) + c * 0x9E3779B97F4A7C15ULL);
    return ((r >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t c) const {
    const double u1 = uniform(2 * c);
    const double u2 = uniform(2 * c + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

BoundCertificate bound_certificate(const SpaceSpec& source,
                                   const SpaceSpec& target, double claimed,
                                   int trials, std::uint64_t seed) {
    require_bounded_pair(source, target);
    if (trials < 1) throw std::invalid_argument("bound_certificate: trials < 1");

    CounterRng rng{seed};
    BoundCertificate cert;
    cert.source = source;
    cert.target = target;
    cert.claimed = claimed;
    cert.trials = trials;
    cert.seed = seed;
    cert.worst_ratio = 0.0;

    for (int i = 0; i < trials; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * 128;
        const int degree =
            std::min(30, static_cast<int>(rng.uniform(base) * 31.0));
        std::vector<double> coeffs(degree + 1);
        for (int k = 0; k <= degree; ++k) {
            coeffs[k] = rng.normal(base / 2 + 1 + k);
        }
        auto f = spaces::make_polynomial(coeffs, "trial");
        const int angles = certificate_angles(degree);
        const double nsrc =
            spaces::norm_estimate_polar(source, f, 192, angles).value;
        if (!(nsrc > 1e-12)) continue;  // degenerate draw
        for (double& c : coeffs) c /= nsrc;

        auto hf = hilbert_image_of_polynomial(coeffs, "H(trial)");
        const double ratio =
            spaces::norm_estimate_polar(target, hf, 192, angles).value;
        if (ratio > cert.worst_ratio) {
            cert.worst_ratio = ratio;
            cert.worst_function =
                "trial_" + std::to_string(i) + "(deg=" + std::to_string(degree) +
                ")";
        }
    }
    cert.passed = cert.worst_ratio <= claimed * (1.0 + 1e-9) + 1e-9;
    return cert;
}

double named_function_ratio(const SpaceSpec& source, const SpaceSpec& target,
                            const FunctionHandle& f) {
    require_bounded_pair(source, target);
    const double nsrc = spaces::norm_estimate(source, f, 512).value;
    if (!(nsrc > 0.0)) {
        throw std::domain_error("named_function_ratio: zero source norm");
    }

    // image handle through the kernel integral; adaptive per evaluation
    FunctionHandle hf;
    hf.name = "H(" + f.name + ")";
    hf.right_exponent = 0.0;
    hf.radial_profile_known = f.radial_profile_known;
    hf.smooth = [f](cplx z, cplx) { return op::apply_integral(f, z, 1e-10); };
    hf.deriv = [f](cplx z, cplx) {
        return op::derivative(f, z, 1e-10, op::DerivForm::Kernel);
    };
    const double ntgt = spaces::norm_estimate(target, hf, 256).value;
    return ntgt / nsrc;
}

double attainment_ratio(const std::string& theorem, double alpha,
                        double r_probe) {
    if (!(r_probe > 0.0 && r_probe < 1.0)) {
        throw std::domain_error("attainment_ratio: r_probe must lie in (0,1)");
    }
    const double r = r_probe;
    if (theorem == "TH61") {
        const double om = 1.0 - r;
        return 1.0 + (1.0 + r) / r -
               om * (1.0 + r) / (r * r) * std::log(1.0 / om);
    }
    if (theorem == "TH71") {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("attainment_ratio(TH71): alpha in (0,1)");
        }
        quad::SingularIntegrand f;
        f.left_exponent = 0.0;
        f.right_exponent = -alpha;
        f.smooth = [alpha, r](double t, double) {
            const double a_lin = (1.0 - r) + t * r;
            const double b_lin = (1.0 - r) + t * (1.0 + r);
            return t * std::pow(a_lin, 2.0 * alpha - 1.0) /
                   std::pow(b_lin, alpha);
        };
        const double sup_term =
            std::pow(1.0 + r, alpha + 1.0) * quad::integrate(f).value;
        return formulas::th71_first_term(alpha) + sup_term;
    }
    if (theorem == "TH52") {
        if (!(alpha > 1.0 && alpha < 2.0)) {
            throw std::domain_error("attainment_ratio(TH52): alpha in (1,2)");
        }
        quad::SingularIntegrand base;
        base.left_exponent = 0.0;
        base.right_exponent = 1.0 - alpha;
        base.smooth = [alpha](double t, double) {
            return std::pow(1.0 + t, 1.0 - alpha);
        };
        const double h0_term =
            (quad::integrate(base).value - 1.0) / (2.0 * (alpha - 1.0));

        const double a_closed =
            (1.0 / r + (1.0 - r) * std::log(1.0 - r) / (r * r)) / (1.0 - r);
        quad::SingularIntegrand f;
        f.left_exponent = 0.0;
        f.right_exponent = 1.0 - alpha;
        f.smooth = [alpha, r](double t, double) {
            const double a_lin = (1.0 - r) + t * r;
            const double b_lin = (1.0 - r) + t * (1.0 + r);
            return t * std::pow(b_lin, 1.0 - alpha) /
                   (std::pow(1.0 - r, alpha) *
                    std::pow(a_lin, 3.0 - 2.0 * alpha));
        };
        const double i2 = quad::integrate(f).value;
        const double om2 = (1.0 - r) * (1.0 + r);
        return h0_term + std::pow(om2, alpha) * std::abs(i2 - a_closed) /
                             (2.0 * std::abs(alpha - 1.0));
    }
    throw std::domain_error("attainment_ratio: unknown theorem id '" + theorem +
                            "'");
}

CrosscheckReport crosscheck_representations(int degree, int samples,
                                            std::uint64_t seed) {
    if (degree < 0 || degree > 50) {
        throw std::invalid_argument("crosscheck_representations: degree <= 50");
    }
    CounterRng rng{seed};
    CrosscheckReport rep;
    rep.degree = degree;
    rep.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * 128;
        const int d = std::min(
            degree, static_cast<int>(rng.uniform(base) * (degree + 1.0)));
        std::vector<double> coeffs(d + 1);
        for (int k = 0; k <= d; ++k) coeffs[k] = rng.normal(base / 2 + 1 + k);
        auto f = spaces::make_polynomial(coeffs, "xcheck");

        const double rad = 0.9 * std::sqrt(rng.uniform(base + 100));
        const double ang =
            2.0 * std::numbers::pi * rng.uniform(base + 101);
        const cplx z = std::polar(rad, ang);

        const cplx m = op::apply_matrix(f, z, 1e-12).value;
        const cplx ii = op::apply_integral(f, z, 1e-11);
        const cplx w = op::apply_weighted_composition(f, z, 1e-11);
        rep.max_deviation = std::max(
            {rep.max_deviation, std::abs(m - ii), std::abs(ii - w),
             std::abs(m - w)});
    }
    return rep;
}

RadialAuditReport radial_reduction_audit(const std::string& kernel_id,
                                         double alpha, int angles) {
    if (angles < 1) {
        throw std::invalid_argument("radial_reduction_audit: angles >= 1");
    }
    std::function<double(cplx, double)> quantity;
    if (kernel_id == "TH31" || kernel_id == "TH41") {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("radial_reduction_audit: alpha in (0,1)");
        }
        auto f = spaces::make_function("f_alpha", alpha);
        const bool with_log = kernel_id == "TH41";
        quantity = [f, alpha, with_log](cplx z, double r) {
            const double om = (1.0 - r) * (1.0 + r);
            double q = std::pow(om, alpha) * std::abs(op::apply_integral(f, z, 1e-9));
            if (with_log) q *= spaces::log_weight_factor(alpha, om);
            return q;
        };
    } else if (kernel_id == "CONST") {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("radial_reduction_audit: alpha in (0,1)");
        }
        quantity = [alpha](cplx, double r) {
            const double om = (1.0 - r) * (1.0 + r);
            return std::pow(om, alpha);
        };
    } else {
        throw std::domain_error("radial_reduction_audit: unknown kernel id '" +
                                kernel_id + "'");
    }

    const auto rs = search::chebyshev_points(0.0, 1.0 - 1e-6, 64);
    RadialAuditReport rep;
    rep.angles = angles;
    for (double r : rs) {
        rep.radial_sup = std::max(rep.radial_sup, quantity(cplx{r, 0.0}, r));
    }
    for (int j = 0; j < angles; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / angles;
        for (double r : rs) {
            rep.polar_sup =
                std::max(rep.polar_sup, quantity(std::polar(r, theta), r));
        }
    }
    rep.gap = rep.polar_sup - rep.radial_sup;
    return rep;
}

}  // namespace hilbert::verify
