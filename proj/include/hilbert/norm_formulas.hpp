#pragma once

#include <string>
#include <vector>

#include "hilbert/quadrature.hpp"

namespace hilbert::formulas {

enum class BoundKind { Exact, Lower, Upper };

// Catalogue of the bound formulas with their validity regions in alpha.
struct BoundFormulaInfo {
    const char* id;
    BoundKind kind;
    double alpha_min;
    double alpha_max;
};

const std::vector<BoundFormulaInfo>& bound_formulas();
// throws std::domain_error when alpha lies outside the formula's region
void require_alpha(const std::string& id, double alpha);

struct SupSearchResult {
    double value = 0.0;
    double arg_r = 0.0;  // in [0,1]; 1 means the sup was attained as r -> 1
    bool boundary_attained = false;
    long samples_used = 0;
};

// --- operator norm from the log-weighted space into the plain one ---------

// Integrand of the sup/integral expression at (r, t).
double th31_kernel(double alpha, double r, double t);
// Integral of the kernel over t at fixed radius.
quad::QuadResult th31_integral(double alpha, double r,
                               quad::Backend backend = quad::Backend::TanhSinh);
// sup over r of the kernel integral, with an r -> 1 extrapolation probe.
SupSearchResult th31_norm(double alpha, int grid = 64);
// r = 0 reduction: integral of (1-t^2)^{-a} / log(2e^{1/a}/(1-t^2)).
double th31_lower(double alpha,
                  quad::Backend backend = quad::Backend::TanhSinh);

// --- supremum lemma for the composition factor ------------------------------

// threshold t* = (3a-2)/(4a-2) separating the two branches (positive only
// for a > 2/3)
double le32_threshold(double alpha);
// interior critical point of the second branch
double le32_x0(double alpha, double t);
// sup over the disk of |1-(1-t)z|^{2a-1} ((1-|z|^2)/(|1-(1-t)z|^2-t^2))^a,
// for a in (1/2, 1)
double le32_sup(double alpha, double t);
// per-operator bound of the T_t family, for a in (0,1)
double le33_tt_bound(double alpha, double t);
// integral of the T_t bound over t (split at t* when the second branch is
// active)
double th34_upper(double alpha,
                  quad::Backend backend = quad::Backend::TanhSinh);

// --- operator norm on the log-weighted space --------------------------------

// kernel integral including the log ratio in r
double th41_psi(double alpha, double r,
                quad::Backend backend = quad::Backend::TanhSinh);
SupSearchResult th41_norm(double alpha, int grid = 64);
double th41_lower(double alpha);  // pi / sin(alpha pi)

// --- Bloch-to-Bloch bounds for 1 < alpha < 2 --------------------------------

double th52_lower(double alpha);
double th53_upper(double alpha);

// --- Hardy-inf to Bloch: exact value 3 ---------------------------------------

double th61_value();

struct Th61Certificate {
    double upper_sup = 0.0;     // numeric sup of 1 + (1-r^2) I(r)
    double upper_arg_r = 0.0;
    double lower_probe = 0.0;   // f = 1 lower-bound quantity at probe radius
    double lower_probe_r = 0.0;
    bool passed = false;
};
Th61Certificate th61_certificate(double tol = 1e-8);

// --- Korenblum into the (alpha+1)-Bloch space --------------------------------

struct BoundReport {
    enum class Kind { Exact, Bracket, Unbounded } kind;
    double exact = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// exact two-term value for alpha <= 2/3, bracket for 2/3 < alpha < 1, typed
// unbounded verdict for alpha >= 1
BoundReport th71_value(double alpha);
// integral of (1-t^2)^{-alpha}
double th71_first_term(double alpha,
                       quad::Backend backend = quad::Backend::TanhSinh);
// (1+r)^{a+1} * integral of (1-t)(1-rt)^{2a-1} / (t^a (2-(1+r)t)^a)
double th71_sup_integral(double alpha, double r);
// the r -> 1 limit of the above, evaluated directly at r = 1
double th71_limit_term(double alpha);
// sup over r of the sup integral (grid + golden + exact limit candidate)
SupSearchResult th71_sup_search(double alpha);

// g(r,t) = (1-rt)^{2a-1} / (2-(1+r)t)^a and the minimum of its centered
// finite-difference slope in r over an (nr x nt) grid in (0,1)^2
double g_rt(double alpha, double r, double t);
double th71_monotonicity_min(double alpha, int nr, int nt);

// --- divergence probes for the unbounded regimes ------------------------------

enum class DivergenceCase {
    BlochAlphaBelowOne,     // 0 < alpha < 1
    BlochAlphaEqualOne,     // alpha = 1 (log-function probe)
    BlochAlphaAtLeastTwo,   // alpha >= 2
    KorenblumToBlochAlphaGeOne  // alpha >= 1
};

struct DivergenceReport {
    DivergenceCase probe_case;
    double alpha = 0.0;
    std::vector<double> radii;
    std::vector<double> values;
    bool diverges = false;           // last/first >= 10
    bool pointwise_undefined = false;  // image already undefined at a point
    std::string quantity;
};

DivergenceReport unboundedness_probe(DivergenceCase probe_case, double alpha);

}  // namespace hilbert::formulas
