#include "hilbert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hilbert/special.hpp"

namespace hilbert::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMaxLevel = 13;

void check_integrand(double le, double re, double tol_abs, double tol_rel) {
    if (!(le > -1.0) || !(re > -1.0)) {
        throw std::domain_error(
            "integrate: endpoint exponents must exceed -1 (integrability)");
    }
    if (!(tol_abs > 0.0) || !(tol_rel > 0.0)) {
        throw std::invalid_argument("integrate: tolerances must be positive");
    }
}

// ---------------------------------------------------------------------------
// tanh-sinh transformation.  Abscissas are generated as (t, 1-t) pairs so the
// complement is exact down to ~1e-300; the algebraic endpoint weights are
// applied here, never inside the caller's smooth part.
// ---------------------------------------------------------------------------

template <class T>
struct CoreResult {
    T value{};
    double abs_error = 0.0;
    long evaluations = 0;
};

template <class T, class G>
CoreResult<T> tanh_sinh_core(G&& g, double le, double re, double tol_abs,
                             double tol_rel, long budget) {
    long evals = 0;

    // When an exponent sits very close to -1, a non-negligible share of the
    // singular mass lives at complements below the smallest representable
    // double.  The nodes can never reach it, so its bound is carried in the
    // reported error instead of being silently dropped.
    double truncation_tail = 0.0;

    // Sum of the node pair at +-u; ok=false once the complement underflows.
    auto node_pair = [&](double u, T& out) -> bool {
        const double sigma = kHalfPi * std::sinh(u);
        const double e2 = std::exp(2.0 * sigma);
        double tc = 0.0, t = 1.0, w = 0.0;
        bool capped = std::isfinite(e2) ? false : true;
        if (!capped) {
            tc = 1.0 / (1.0 + e2);
            t = 1.0 / (1.0 + std::exp(-2.0 * sigma));
            const double ch = std::cosh(sigma);
            w = kHalfPi * std::cosh(u) / (ch * ch);
            capped = tc == 0.0 || w == 0.0;
        }
        if (capped) {
            // bound the mass beyond the last representable complement
            const double cap = 1.3e-308;
            const T g_right = g(1.0 - cap, cap);
            const T g_left = g(cap, 1.0 - cap);
            evals += 2;
            truncation_tail = std::max(
                truncation_tail,
                std::abs(g_right) * std::pow(cap, 1.0 + re) / (1.0 + re) +
                    std::abs(g_left) * std::pow(cap, 1.0 + le) / (1.0 + le));
            return false;
        }
        const T g_p = g(t, tc);
        const T g_m = g(tc, t);
        evals += 2;
        double sw_p = 1.0, sw_m = 1.0;
        if (le != 0.0) {
            sw_p *= std::pow(t, le);
            sw_m *= std::pow(tc, le);
        }
        if (re != 0.0) {
            sw_p *= std::pow(tc, re);
            sw_m *= std::pow(t, re);
        }
        out = w * (g_p * sw_p + g_m * sw_m);
        return true;
    };

    auto level_sum = [&](double h, int k0, int step, double scale_hint) -> T {
        T acc{};
        int negligible = 0;
        for (int k = k0;; k += step) {
            T term{};
            if (!node_pair(k * h, term)) break;
            acc += term;
            if (evals > budget) {
                throw convergence_error("integrate: evaluation budget exceeded",
                                        0.0, std::numeric_limits<double>::max(),
                                        evals);
            }
            const double scale = std::max(std::abs(acc), scale_hint);
            if (k * h >= 2.0 && std::abs(term) <= 1e-17 * scale) {
                if (++negligible >= 2) break;
            } else {
                negligible = 0;
            }
        }
        return acc;
    };

    double h = 1.0;
    const double center_weight =
        std::pow(0.5, le) * std::pow(0.5, re) * kHalfPi;
    ++evals;
    T center = g(0.5, 0.5) * center_weight;  // u = 0 node
    T I = (center + level_sum(h, 1, 1, 0.0)) * (h / 2.0);

    double err = std::numeric_limits<double>::max();
    double reported = err;
    double prev_delta = err;
    T best = I;

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        const double hint = 2.0 * std::abs(I) / h;
        T fresh{};
        try {
            fresh = level_sum(h, 1, 2, hint);
        } catch (const convergence_error&) {
            throw convergence_error("integrate: evaluation budget exceeded",
                                    std::abs(best), reported, evals);
        }
        const T I_new = I * 0.5 + fresh * (h / 2.0);
        const double delta = std::abs(I_new - I);
        I = I_new;
        best = I;

        const double scale = std::max(1.0, std::abs(I));
        if (delta == 0.0) {
            err = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(I);
            reported = std::min(reported, err);
            break;
        }
        if (level >= 2) {
            const double dn = delta / scale;
            const double dp = prev_delta / scale;
            if (dn < 1.0 && dp < 1.0 && dp > 0.0) {
                const double rate = std::log(dn) / std::log(dp);
                // in the double-exponential convergence regime consecutive
                // deltas square; outside it assume plain decrease
                err = (rate > 1.8 && rate < 2.2) ? delta * dn : delta;
            } else {
                err = delta;
            }
        } else {
            err = delta;
        }
        err = std::max(err,
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(I));
        reported = std::min(reported, err);
        prev_delta = delta;

        if (reported + truncation_tail <=
            std::max(tol_abs, tol_rel * std::abs(I))) {
            return {I, reported + truncation_tail, evals};
        }
    }

    const double total_err = reported + truncation_tail;
    if (total_err <= std::max(tol_abs, tol_rel * std::abs(I)) ||
        total_err <= 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(I))) {
        return {I, total_err, evals};
    }
    throw convergence_error("integrate: tanh-sinh failed to converge",
                            std::abs(best), total_err, evals);
}

// ---------------------------------------------------------------------------
// Gauss-Jacobi backend: split [0,1] at 1/2 into two regions, each handled in
// its own coordinate measured from the singular endpoint.  The panel touching
// the endpoint uses a rule matched to the algebraic weight; inner panels use
// Gauss-Legendre.  Panels are bisected worst-first.
// ---------------------------------------------------------------------------

struct Rule01 {
    std::vector<double> x;  // nodes in (0,1)
    std::vector<double> w;
};

// Symmetric tridiagonal QL with implicit shifts, accumulating only the first
// row of the eigenvector matrix (all that Golub-Welsch needs).
void tridiag_eigen_first(std::vector<double>& d, std::vector<double>& e,
                         std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.resize(n, 0.0);
    z.assign(n, 0.0);
    z[0] = 1.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <=
                    std::numeric_limits<double>::epsilon() * dd) {
                    break;
                }
            }
            if (m != l) {
                if (iter++ == 60) {
                    throw std::runtime_error(
                        "gauss rule: tridiagonal eigensolve failed");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// n-point rule for int_0^1 v^beta f(v) dv via the Jacobi weight
// (1+x)^beta on [-1,1].
Rule01 jacobi_rule_01(int n, double beta) {
    const double p = 0.0;
    const double q = beta;
    std::vector<double> d(n);
    std::vector<double> e(n, 0.0);
    d[0] = (q - p) / (p + q + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + p + q;
        d[k] = (q * q - p * p) / (s * (s + 2.0));
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + p) * (1.0 + q) /
                 ((2.0 + p + q) * (2.0 + p + q) * (3.0 + p + q));
        } else {
            const double kk = k;
            b2 = 4.0 * kk * (kk + p) * (kk + q) * (kk + p + q) /
                 (s * s * (s + 1.0) * (s - 1.0));
        }
        e[k - 1] = std::sqrt(b2);
    }
    std::vector<double> z;
    tridiag_eigen_first(d, e, z);

    const double mu0 = std::pow(2.0, p + q + 1.0) *
                       special::beta(p + 1.0, q + 1.0).value;
    Rule01 rule;
    rule.x.resize(n);
    rule.w.resize(n);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return d[a] < d[b]; });
    const double scale = std::pow(2.0, -(beta + 1.0));
    for (int i = 0; i < n; ++i) {
        rule.x[i] = 0.5 * (1.0 + d[idx[i]]);
        rule.w[i] = scale * mu0 * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

struct Panel {
    double lo, hi;
    bool right_region;  // coordinate measured from t = 1
    double value;
    double err;
};

struct PanelOrder {
    bool operator()(const Panel& a, const Panel& b) const {
        return a.err < b.err;
    }
};

struct GjRules {
    Rule01 sing_lo, sing_hi;  // matched to the region's endpoint exponent
    Rule01 leg_lo, leg_hi;
};

template <class S>
Panel eval_panel(const S& s, double beta, const GjRules& rules, double lo,
                 double hi, bool right_region, long& evals) {
    auto apply = [&](const Rule01& rule) -> double {
        double acc = 0.0;
        if (lo == 0.0) {
            // matched endpoint rule, scaled to [0, hi]
            const double scale = std::pow(hi, beta + 1.0);
            for (std::size_t i = 0; i < rule.x.size(); ++i) {
                acc += rule.w[i] * s(hi * rule.x[i]);
            }
            acc *= scale;
        } else {
            const double len = hi - lo;
            for (std::size_t i = 0; i < rule.x.size(); ++i) {
                const double u = lo + len * rule.x[i];
                acc += rule.w[i] * std::pow(u, beta) * s(u);
            }
            acc *= len;
        }
        evals += static_cast<long>(rule.x.size());
        return acc;
    };
    const bool singular = lo == 0.0;
    const double coarse = apply(singular ? rules.sing_lo : rules.leg_lo);
    const double fine = apply(singular ? rules.sing_hi : rules.leg_hi);
    return {lo, hi, right_region, fine, std::abs(fine - coarse)};
}

CoreResult<double> gauss_jacobi_core(const RealEvaluator& g, double le,
                                     double re, double tol_abs, double tol_rel,
                                     long budget) {
    long evals = 0;
    auto s_left = [&](double u) {
        return g(u, 1.0 - u) * (re != 0.0 ? std::pow(1.0 - u, re) : 1.0);
    };
    auto s_right = [&](double v) {
        return g(1.0 - v, v) * (le != 0.0 ? std::pow(1.0 - v, le) : 1.0);
    };

    GjRules left_rules{jacobi_rule_01(15, le), jacobi_rule_01(31, le),
                       jacobi_rule_01(15, 0.0), jacobi_rule_01(31, 0.0)};
    GjRules right_rules{jacobi_rule_01(15, re), jacobi_rule_01(31, re),
                        left_rules.leg_lo, left_rules.leg_hi};

    auto eval_any = [&](double lo, double hi, bool right) {
        return right ? eval_panel(s_right, re, right_rules, lo, hi, true, evals)
                     : eval_panel(s_left, le, left_rules, lo, hi, false, evals);
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    double total = 0.0;
    double total_err = 0.0;
    auto push = [&](const Panel& p) {
        total += p.value;
        total_err += p.err;
        queue.push(p);
    };
    push(eval_any(0.0, 0.5, false));
    push(eval_any(0.0, 0.5, true));

    const int kPanelCap = 8000;
    int panels = 2;
    while (total_err > std::max(tol_abs, tol_rel * std::abs(total)) * 0.5) {
        if (panels >= kPanelCap || evals > budget) {
            throw convergence_error("integrate: gauss-jacobi failed to converge",
                                    total, total_err, evals);
        }
        Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.err;
        if (worst.hi - worst.lo < 1e-220) {
            // panel cannot be meaningfully narrowed; keep its estimate
            total += worst.value;
            total_err += worst.err * 1e-3;
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        push(eval_any(worst.lo, mid, worst.right_region));
        push(eval_any(mid, worst.hi, worst.right_region));
        ++panels;
    }
    total_err += 4.0 * std::numeric_limits<double>::epsilon() * std::abs(total);
    return {total, total_err, evals};
}

}  // namespace

QuadResult integrate(const SingularIntegrand& f, double tol_abs,
                     double tol_rel, Backend backend) {
    check_integrand(f.left_exponent, f.right_exponent, tol_abs, tol_rel);
    if (backend == Backend::TanhSinh) {
        auto r = tanh_sinh_core<double>(
            [&](double t, double tc) { return f.smooth(t, tc); },
            f.left_exponent, f.right_exponent, tol_abs, tol_rel,
            kEvaluationBudget);
        return {r.value, r.abs_error, r.evaluations};
    }
    auto r = gauss_jacobi_core([&](double t, double tc) { return f.smooth(t, tc); },
                               f.left_exponent, f.right_exponent, tol_abs,
                               tol_rel, kEvaluationBudget);
    return {r.value, r.abs_error, r.evaluations};
}

QuadResult integrate_with_log(const SingularIntegrand& f,
                              const RealEvaluator& log_factor, double tol_abs,
                              double tol_rel, Backend backend) {
    check_integrand(f.left_exponent, f.right_exponent, tol_abs, tol_rel);
    SingularIntegrand g;
    g.left_exponent = f.left_exponent;
    g.right_exponent = f.right_exponent;
    g.smooth = [&f, &log_factor](double t, double tc) {
        const double lf = log_factor(t, tc);
        if (!(lf > 0.0)) {
            throw std::domain_error(
                "integrate_with_log: log factor must be strictly positive");
        }
        return f.smooth(t, tc) / lf;
    };
    return integrate(g, tol_abs, tol_rel, backend);
}

ComplexQuadResult integrate_complex(const ComplexEvaluator& smooth,
                                    double left_exponent,
                                    double right_exponent, double tol_abs,
                                    double tol_rel) {
    check_integrand(left_exponent, right_exponent, tol_abs, tol_rel);
    auto r = tanh_sinh_core<std::complex<double>>(
        [&](double t, double tc) { return smooth(t, tc); }, left_exponent,
        right_exponent, tol_abs, tol_rel, kEvaluationBudget);
    return {r.value, r.abs_error, r.evaluations};
}

}  // namespace hilbert::quad
