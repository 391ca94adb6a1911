// hnorm: operator norms, bounds and verification suites for the Hilbert
// matrix operator acting between weighted spaces of analytic functions.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
// 3 unbounded-regime request, 4 numerical convergence failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilbert/errors.hpp"
#include "hilbert/hilbert_op.hpp"
#include "hilbert/norm_formulas.hpp"
#include "hilbert/search.hpp"
#include "hilbert/special.hpp"
#include "hilbert/spaces.hpp"
#include "hilbert/verify.hpp"

namespace {

namespace F = hilbert::formulas;
namespace S = hilbert::spaces;
namespace V = hilbert::verify;
using hilbert::convergence_error;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1729;

struct UnboundedRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open output file " + out_path);
        os << text;
    }
}

// ---------------------------------------------------------------------------
// space selectors and norm resolution
// ---------------------------------------------------------------------------

struct NormResolution {
    std::string theorem;
    std::string kind;  // exact | bracket
    std::optional<double> value;
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<double> arg_r;
    std::optional<bool> boundary_attained;
    std::string note;
};

NormResolution resolve_norm(const std::string& from, const std::string& to,
                            double alpha) {
    NormResolution res;
    if (from == "hardy-inf" && (to == "bloch" || to == "bloch-alpha")) {
        res.theorem = "TH61_EXACT";
        res.kind = "exact";
        res.value = F::th61_value();
        res.lower = res.value;
        res.upper = res.value;
        res.note = "norm from the sup space into the Bloch space";
        return res;
    }
    if (from == "log-korenblum" && to == "korenblum") {
        F::require_alpha("TH31_EXACT", alpha);
        auto sup = F::th31_norm(alpha);
        res.theorem = "TH31_EXACT";
        res.kind = "exact";
        res.value = sup.value;
        res.arg_r = sup.arg_r;
        res.boundary_attained = sup.boundary_attained;
        res.lower = F::th31_lower(alpha);
        res.upper = F::th34_upper(alpha);
        return res;
    }
    if (from == "log-korenblum" && to == "log-korenblum") {
        F::require_alpha("TH41_EXACT", alpha);
        auto sup = F::th41_norm(alpha);
        res.theorem = "TH41_EXACT";
        res.kind = "exact";
        res.value = sup.value;
        res.arg_r = sup.arg_r;
        res.boundary_attained = sup.boundary_attained;
        res.lower = F::th41_lower(alpha);
        return res;
    }
    if ((from == "bloch" || from == "bloch-alpha") &&
        (to == "bloch" || to == "bloch-alpha")) {
        const double a = from == "bloch" ? 1.0 : alpha;
        if (a > 1.0 && a < 2.0) {
            res.theorem = "TH52_LOWER/TH53_UPPER";
            res.kind = "bracket";
            res.lower = F::th52_lower(a);
            res.upper = F::th53_upper(a);
            return res;
        }
        throw UnboundedRequest(
            "unbounded regime: the operator is not bounded on the alpha-Bloch "
            "space for 0 < alpha <= 1 or alpha >= 2 (requested alpha = " +
            fmt15(a) + ")");
    }
    if (from == "korenblum" &&
        (to == "bloch-plus-one" || to == "bloch-alpha")) {
        if (alpha >= 1.0) {
            throw UnboundedRequest(
                "unbounded regime: the operator does not map the Korenblum "
                "space into the (alpha+1)-Bloch space for alpha >= 1 "
                "(requested alpha = " +
                fmt15(alpha) + ")");
        }
        auto rep = F::th71_value(alpha);
        if (rep.kind == F::BoundReport::Kind::Exact) {
            res.theorem = "TH71_EXACT";
            res.kind = "exact";
            res.value = rep.exact;
            res.lower = rep.exact;
            res.upper = rep.exact;
        } else {
            res.theorem = "TH71_LOWER/TH71_UPPER";
            res.kind = "bracket";
            res.lower = rep.lower;
            res.upper = rep.upper;
        }
        return res;
    }
    throw std::invalid_argument(
        "no theorem covers the pair (" + from + " -> " + to +
        "); supported: hardy-inf->bloch, log-korenblum->korenblum, "
        "log-korenblum->log-korenblum, bloch-alpha->bloch-alpha, "
        "korenblum->bloch-plus-one");
}

json resolution_to_json(const NormResolution& r, double alpha) {
    json j;
    j["theorem"] = r.theorem;
    j["kind"] = r.kind;
    j["alpha"] = alpha;
    if (r.value) j["value"] = *r.value;
    if (r.lower) j["lower"] = *r.lower;
    if (r.upper) j["upper"] = *r.upper;
    if (r.arg_r) j["arg_r"] = *r.arg_r;
    if (r.boundary_attained) j["boundary_attained"] = *r.boundary_attained;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string resolution_to_text(const NormResolution& r, double alpha,
                               bool bounds_style) {
    std::ostringstream os;
    os << "theorem: " << r.theorem << "\n";
    os << "alpha: " << fmt15(alpha) << "\n";
    os << "kind: " << r.kind << "\n";
    if (r.value && !bounds_style) os << "value: " << fmt15(*r.value) << "\n";
    if (bounds_style && r.value) os << "value: " << fmt15(*r.value) << "\n";
    if (r.lower) os << "lower: " << fmt15(*r.lower) << "\n";
    if (r.upper) os << "upper: " << fmt15(*r.upper) << "\n";
    if (r.arg_r) os << "arg_r: " << fmt15(*r.arg_r) << "\n";
    if (r.boundary_attained) {
        os << "boundary_attained: " << (*r.boundary_attained ? "true" : "false")
           << "\n";
    }
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    return os.str();
}

std::string resolution_to_csv(const NormResolution& r, double alpha) {
    std::ostringstream os;
    os << "theorem,alpha,kind,value,lower,upper,arg_r,boundary_attained\n";
    os << r.theorem << ',' << fmt15(alpha) << ',' << r.kind << ','
       << (r.value ? fmt15(*r.value) : "") << ','
       << (r.lower ? fmt15(*r.lower) : "") << ','
       << (r.upper ? fmt15(*r.upper) : "") << ','
       << (r.arg_r ? fmt15(*r.arg_r) : "") << ','
       << (r.boundary_attained ? (*r.boundary_attained ? "true" : "false") : "")
       << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        return {std::stod(text.substr(0, comma)),
                std::stod(text.substr(comma + 1))};
    }
    // accept forms like 0.3+0.2i / 0.3-0.2i / 0.4i / 0.5
    std::string s = text;
    if (!s.empty() && (s.back() == 'i' || s.back() == 'I')) {
        s.pop_back();
        const auto pos = s.find_last_of("+-");
        if (pos == std::string::npos || pos == 0) {
            return {0.0, s.empty() || s == "+" || s == "-"
                             ? (s == "-" ? -1.0 : 1.0)
                             : std::stod(s)};
        }
        return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos))};
    }
    return {std::stod(s), 0.0};
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableRow {
    double alpha = 0.0;
    std::optional<double> th31_lower, th31_norm, th34_upper;
    std::optional<double> th41_lower, th41_norm;
    std::optional<double> th52_lower, th53_upper;
    double th61 = 3.0;
    std::optional<double> th71_lower, th71_exact_or_upper;
    std::string verdicts;
};

TableRow compute_row(double alpha) {
    TableRow row;
    row.alpha = alpha;
    row.th61 = F::th61_value();
    if (alpha > 0.0 && alpha < 1.0) {
        row.th31_lower = F::th31_lower(alpha);
        row.th31_norm = F::th31_norm(alpha).value;
        row.th34_upper = F::th34_upper(alpha);
        row.th41_lower = F::th41_lower(alpha);
        row.th41_norm = F::th41_norm(alpha).value;
        auto rep = F::th71_value(alpha);
        if (rep.kind == F::BoundReport::Kind::Exact) {
            row.th71_lower = rep.exact;
            row.th71_exact_or_upper = rep.exact;
        } else {
            row.th71_lower = rep.lower;
            row.th71_exact_or_upper = rep.upper;
        }
    }
    if (alpha > 1.0 && alpha < 2.0) {
        row.th52_lower = F::th52_lower(alpha);
        row.th53_upper = F::th53_upper(alpha);
    }
    std::string bloch_verdict =
        (alpha > 1.0 && alpha < 2.0) ? "bracket" : "unbounded";
    if (!(alpha > 0.0)) bloch_verdict = "n/a";
    std::string kor_verdict;
    if (alpha > 0.0 && alpha <= 2.0 / 3.0 + 1e-15) {
        kor_verdict = "exact";
    } else if (alpha < 1.0) {
        kor_verdict = "bracket";
    } else {
        kor_verdict = "unbounded";
    }
    if (!(alpha > 0.0)) kor_verdict = "n/a";
    row.verdicts =
        "bloch_alpha=" + bloch_verdict + "|kor_to_bloch_plus_one=" + kor_verdict;
    return row;
}

const char* kTableHeader =
    "alpha,th31_lower,th31_norm,th34_upper,th41_lower,th41_norm,th52_lower,"
    "th53_upper,th61,th71_lower,th71_exact_or_upper,verdicts";

std::string cell(const std::optional<double>& v) {
    return v ? fmt15(*v) : "";
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << kTableHeader << "\n";
    for (const auto& r : rows) {
        os << fmt15(r.alpha) << ',' << cell(r.th31_lower) << ','
           << cell(r.th31_norm) << ',' << cell(r.th34_upper) << ','
           << cell(r.th41_lower) << ',' << cell(r.th41_norm) << ','
           << cell(r.th52_lower) << ',' << cell(r.th53_upper) << ','
           << fmt15(r.th61) << ',' << cell(r.th71_lower) << ','
           << cell(r.th71_exact_or_upper) << ',' << r.verdicts << "\n";
    }
    return os.str();
}

json row_to_json(const TableRow& r) {
    json j;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) {
            j[key] = *v;
        } else {
            j[key] = nullptr;
        }
    };
    j["alpha"] = r.alpha;
    put("th31_lower", r.th31_lower);
    put("th31_norm", r.th31_norm);
    put("th34_upper", r.th34_upper);
    put("th41_lower", r.th41_lower);
    put("th41_norm", r.th41_norm);
    put("th52_lower", r.th52_lower);
    put("th53_upper", r.th53_upper);
    j["th61"] = r.th61;
    put("th71_lower", r.th71_lower);
    put("th71_exact_or_upper", r.th71_exact_or_upper);
    j["verdicts"] = r.verdicts;
    return j;
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
    std::vector<double> alphas;
    if (spec.find(':') != std::string::npos) {
        double a, b, step;
        char c1, c2;
        std::istringstream is(spec);
        if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
            !(step > 0.0)) {
            throw std::invalid_argument("bad --alphas range '" + spec +
                                        "' (want a:b:step)");
        }
        for (double x = a; x <= b + step * 0.5; x += step) {
            alphas.push_back(x);
        }
    } else {
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (!tok.empty()) alphas.push_back(std::stod(tok));
        }
    }
    if (alphas.empty()) throw std::invalid_argument("empty --alphas grid");
    return alphas;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

struct SuiteOutcome {
    int checks = 0;
    int failures = 0;

    void record(bool ok, const std::string& label, const std::string& detail) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "ok   " : "FAIL ") << label;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
    }
};

void suite_representations(SuiteOutcome& out, std::uint64_t seed) {
    auto rep = V::crosscheck_representations(20, 50, seed);
    out.record(rep.max_deviation <= 1e-8, "representations.crosscheck",
               "max deviation " + fmt15(rep.max_deviation));
}

void suite_certificates(SuiteOutcome& out, std::uint64_t seed, int trials) {
    const double a = 0.5;
    struct Setting {
        S::SpaceSpec src, tgt;
        double claimed;
        const char* label;
    };
    const std::vector<Setting> settings = {
        {S::SpaceSpec::hardy_inf(), S::SpaceSpec::bloch(1.0), 3.0,
         "certificates.hardy_to_bloch"},
        {S::SpaceSpec::log_korenblum(a), S::SpaceSpec::korenblum(a),
         F::th34_upper(a), "certificates.logkor_to_kor"},
        {S::SpaceSpec::log_korenblum(a), S::SpaceSpec::log_korenblum(a),
         F::th41_norm(a).value, "certificates.logkor_to_logkor"},
        {S::SpaceSpec::korenblum(a), S::SpaceSpec::bloch(a + 1.0),
         F::th71_value(a).exact, "certificates.kor_to_bloch_plus_one"},
    };
    for (const auto& s : settings) {
        auto cert = V::bound_certificate(s.src, s.tgt, s.claimed, trials, seed);
        out.record(cert.passed, s.label,
                   "worst " + fmt15(cert.worst_ratio) + " <= claimed " +
                       fmt15(s.claimed) + ", worst fn " + cert.worst_function);
    }
}

void suite_sandwich(SuiteOutcome& out) {
    bool ok31 = true, ok52 = true;
    std::string detail;
    for (int i = 1; i <= 17; ++i) {
        const double a = i / 18.0;
        const double lo = F::th31_lower(a);
        const double mid = F::th31_norm(a).value;
        const double hi = F::th34_upper(a);
        if (!(lo <= mid + 1e-9 && mid <= hi + 1e-7)) {
            ok31 = false;
            detail = "violated at alpha=" + fmt15(a);
        }
    }
    out.record(ok31, "sandwich.th31_th34", detail);
    detail.clear();
    for (int i = 1; i <= 17; ++i) {
        const double a = 1.0 + i / 18.0;
        if (!(F::th52_lower(a) <= F::th53_upper(a))) {
            ok52 = false;
            detail = "violated at alpha=" + fmt15(a);
        }
    }
    out.record(ok52, "sandwich.th52_th53", detail);
}

void suite_limits(SuiteOutcome& out) {
    // Richardson extrapolation of the log-space kernel integral toward
    // pi/sin(alpha pi).  At the probe radii below, the oracle run measured
    // relative residuals 0.107 / 0.099 / 0.063 (alpha = 0.3 / 0.5 / 0.7):
    // the approach is O(1/log(1/(1-r))) with large higher-order terms, so
    // the frozen tolerance is 0.12.
    const double kPinnedTol = 0.12;
    for (double a : {0.3, 0.5, 0.7}) {
        double ss[3], vs[3];
        const double probes[3] = {1.0 - 1e-2, 1.0 - 1e-4, 1.0 - 1e-6};
        for (int i = 0; i < 3; ++i) {
            ss[i] = 1.0 / std::log(1.0 / (1.0 - probes[i]));
            vs[i] = F::th41_psi(a, probes[i]);
        }
        const double cand = hilbert::search::neville(
            std::span<const double>(ss, 3), std::span<const double>(vs, 3),
            0.0);
        const double lim = F::th41_lower(a);
        const double rel = std::abs(cand - lim) / lim;
        out.record(rel <= kPinnedTol,
                   "limits.th41_extrapolation(alpha=" + fmt15(a) + ")",
                   "relative residual " + fmt15(rel));
    }
}

void suite_monotonic(SuiteOutcome& out) {
    bool ok = true;
    std::string detail;
    for (int ia = 1; ia <= 9 && ok; ++ia) {
        const double a = ia / 10.0;
        double prev = 0.0;
        const int n = 10000;
        for (int i = 0; i <= n; ++i) {
            const double x = 2.0 * (i + 0.5) / (n + 1);
            const double g = S::g_aux(a, std::min(x, 2.0));
            if (i > 0 && g - prev < -1e-12 * (2.0 / n) * 1e12) {
                // slope below -1e-12 given spacing 2/n
            }
            if (i > 0) {
                const double slope = (g - prev) / (2.0 / (n + 1));
                if (slope < -1e-12) {
                    ok = false;
                    detail = "alpha=" + fmt15(a) + " x=" + fmt15(x);
                    break;
                }
            }
            prev = g;
        }
    }
    out.record(ok, "monotonic.g_aux", detail);

    bool ok2 = true;
    std::string detail2;
    for (double a : {0.3, 0.5, 2.0 / 3.0}) {
        const double m = F::th71_monotonicity_min(a, 100, 100);
        if (m < -1e-10) {
            ok2 = false;
            detail2 = "alpha=" + fmt15(a) + " min slope " + fmt15(m);
        }
    }
    out.record(ok2, "monotonic.g_rt", detail2);
}

void suite_unbounded(SuiteOutcome& out) {
    using DC = F::DivergenceCase;
    struct Probe {
        DC c;
        double a;
        const char* label;
    };
    const std::vector<Probe> probes = {
        {DC::BlochAlphaBelowOne, 0.5, "unbounded.bloch(0.5)"},
        {DC::BlochAlphaEqualOne, 1.0, "unbounded.bloch(1)"},
        {DC::BlochAlphaAtLeastTwo, 2.0, "unbounded.bloch(2)"},
        {DC::BlochAlphaAtLeastTwo, 2.5, "unbounded.bloch(2.5)"},
        {DC::KorenblumToBlochAlphaGeOne, 1.0, "unbounded.kor_to_bloch(1)"},
    };
    for (const auto& p : probes) {
        auto rep = F::unboundedness_probe(p.c, p.a);
        out.record(rep.diverges, p.label,
                   "ratio " + fmt15(rep.values.back() / rep.values.front()));
    }
}

void suite_attainment(SuiteOutcome& out) {
    {
        const double v = V::attainment_ratio("TH61", 0.0, 1.0 - 1e-6);
        out.record(std::abs(v - 3.0) <= 1e-3, "attainment.th61",
                   "probe " + fmt15(v));
    }
    {
        std::vector<double> ss, vs;
        for (int k = 2; k <= 5; ++k) {
            const double s = std::pow(10.0, -k);
            ss.push_back(s);
            vs.push_back(V::attainment_ratio("TH71", 0.5, 1.0 - s));
        }
        const double ex = hilbert::search::neville(ss, vs, 0.0);
        const double target = 1.5 * std::numbers::pi;
        out.record(std::abs(ex - target) <= 1e-4, "attainment.th71",
                   "extrapolated " + fmt15(ex));
    }
    {
        // the leading correction carries the fractional power (1-r)^{2-a}at
        // alpha = 1.5, so extrapolate in that variable
        std::vector<double> us, vs;
        for (int k = 2; k <= 5; ++k) {
            const double s = std::pow(10.0, -k);
            us.push_back(std::sqrt(s));
            vs.push_back(V::attainment_ratio("TH52", 1.5, 1.0 - s));
        }
        const double ex = hilbert::search::neville(us, vs, 0.0);
        const double target = 1.5 * std::numbers::pi - 1.0;
        out.record(std::abs(ex - target) <= 1e-3, "attainment.th52",
                   "extrapolated " + fmt15(ex));
    }
}

void suite_audit(SuiteOutcome& out) {
    for (const char* id : {"TH31", "TH41"}) {
        auto rep = V::radial_reduction_audit(id, 0.5, 64);
        out.record(rep.gap <= 1e-9,
                   std::string("audit.") + id,
                   "gap " + fmt15(rep.gap));
    }
    auto rep = V::radial_reduction_audit("CONST", 0.5, 16);
    out.record(rep.gap == 0.0, "audit.const", "gap " + fmt15(rep.gap));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hnorm: norms of the Hilbert matrix operator between weighted spaces "
        "of analytic functions"};
    app.require_subcommand(1);
    app.fallthrough(true);  // let subcommands use the global options below
    app.set_config("--config", "", "optional key=value configuration file");

    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-10;
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "write output to file");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--tol", tol, "quadrature tolerance for eval");

    // norm ------------------------------------------------------------------
    auto* norm_cmd =
        app.add_subcommand("norm", "theorem-selected norm for (from, to, alpha)");
    norm_cmd->fallthrough();
    std::string from_str, to_str;
    double alpha = 0.5;
    norm_cmd->add_option("--from", from_str, "source space")->required();
    norm_cmd->add_option("--to", to_str, "target space")->required();
    norm_cmd->add_option("--alpha", alpha, "space parameter");

    // bounds ----------------------------------------------------------------
    auto* bounds_cmd =
        app.add_subcommand("bounds", "lower/upper bounds with argmax metadata");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--from", from_str, "source space")->required();
    bounds_cmd->add_option("--to", to_str, "target space")->required();
    bounds_cmd->add_option("--alpha", alpha, "space parameter");

    // eval ------------------------------------------------------------------
    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate Hf(z) or (Hf)'(z) for a registry "
                                   "function");
    eval_cmd->fallthrough();
    std::string fn_id = "const";
    std::string z_str = "0";
    std::string rep_str = "integral";
    std::string form_str = "kernel";
    bool deriv_flag = false;
    eval_cmd->add_option("--function", fn_id,
                         "const | monomial:k | poly:[c0,c1,...] | f_alpha | "
                         "f_alpha_plain | h_alpha | h_one");
    eval_cmd->add_option("--alpha", alpha, "parameter for f_alpha/h_alpha");
    eval_cmd->add_option("--z", z_str, "evaluation point (re, re,im or a+bi)");
    eval_cmd->add_flag("--deriv", deriv_flag, "evaluate (Hf)'(z)");
    eval_cmd->add_option("--rep", rep_str, "integral | matrix | wcomp")
        ->check(CLI::IsMember({"integral", "matrix", "wcomp"}));
    eval_cmd->add_option("--form", form_str, "kernel | composed (for --deriv)")
        ->check(CLI::IsMember({"kernel", "composed"}));

    // verify ----------------------------------------------------------------
    auto* verify_cmd =
        app.add_subcommand("verify", "run verification suites (exit 1 on "
                                     "failure)");
    verify_cmd->fallthrough();
    std::string suite = "all";
    int trials = 100;
    verify_cmd->add_option(
        "--suite", suite,
        "all | representations | certificates | sandwich | limits | "
        "monotonic | unbounded | attainment | audit");
    verify_cmd->add_option("--trials", trials, "certificate trials");

    // table -----------------------------------------------------------------
    auto* table_cmd = app.add_subcommand(
        "table", "one row per alpha with every theorem column");
    table_cmd->fallthrough();
    std::string alphas_spec = "0.1:0.9:0.1";
    table_cmd->add_option("--alphas", alphas_spec,
                          "grid a:b:step or comma list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (norm_cmd->parsed() || bounds_cmd->parsed() || eval_cmd->parsed()) {
            // blowup near the interval boundary is genuine (reflection and
            // weight factors grow like 1/alpha, 1/(1-alpha)); warn, don't stop
            const bool uses_alpha =
                from_str == "korenblum" || from_str == "log-korenblum" ||
                fn_id == "f_alpha" || fn_id == "f_alpha_plain";
            if (uses_alpha && (alpha < 0.01 || alpha > 0.99)) {
                std::cerr << "warning: alpha = " << fmt15(alpha)
                          << " is within 0.01 of the boundary of (0,1); "
                             "values blow up like 1/alpha or 1/(1-alpha)\n";
            }
        }
        if (norm_cmd->parsed() || bounds_cmd->parsed()) {
            auto res = resolve_norm(from_str, to_str, alpha);
            std::string text;
            if (format == "json") {
                text = resolution_to_json(res, alpha).dump(2) + "\n";
            } else if (format == "csv") {
                text = resolution_to_csv(res, alpha);
            } else {
                text = resolution_to_text(res, alpha, bounds_cmd->parsed());
            }
            emit(text, out_path);
            return 0;
        }

        if (eval_cmd->parsed()) {
            auto f = S::make_function(fn_id, alpha);
            const auto z = parse_complex(z_str);
            std::complex<double> value;
            if (deriv_flag) {
                value = hilbert::op::derivative(
                    f, z, tol,
                    form_str == "composed" ? hilbert::op::DerivForm::Composed
                                           : hilbert::op::DerivForm::Kernel);
            } else if (rep_str == "matrix") {
                value = hilbert::op::apply_matrix(f, z, tol).value;
            } else if (rep_str == "wcomp") {
                value = hilbert::op::apply_weighted_composition(f, z, tol);
            } else {
                value = hilbert::op::apply_integral(f, z, tol);
            }
            json j;
            j["function"] = fn_id;
            j["z"] = {z.real(), z.imag()};
            j["derivative"] = deriv_flag;
            j["representation"] = deriv_flag ? form_str : rep_str;
            j["value_re"] = value.real();
            j["value_im"] = value.imag();
            std::string text;
            if (format == "json") {
                text = j.dump(2) + "\n";
            } else if (format == "csv") {
                text = "function,z_re,z_im,deriv,value_re,value_im\n" + fn_id +
                       ',' + fmt15(z.real()) + ',' + fmt15(z.imag()) + ',' +
                       (deriv_flag ? "1" : "0") + ',' + fmt15(value.real()) +
                       ',' + fmt15(value.imag()) + "\n";
            } else {
                text = "value: " + fmt15(value.real()) +
                       (value.imag() != 0.0
                            ? " + " + fmt15(value.imag()) + "i"
                            : "") +
                       "\n";
            }
            emit(text, out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteOutcome out;
            const bool all = suite == "all";
            if (all || suite == "representations")
                suite_representations(out, seed);
            if (all || suite == "certificates")
                suite_certificates(out, seed, trials);
            if (all || suite == "sandwich") suite_sandwich(out);
            if (all || suite == "limits") suite_limits(out);
            if (all || suite == "monotonic") suite_monotonic(out);
            if (all || suite == "unbounded") suite_unbounded(out);
            if (all || suite == "attainment") suite_attainment(out);
            if (all || suite == "audit") suite_audit(out);
            if (out.checks == 0) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            std::cout << (out.failures == 0 ? "PASSED" : "FAILED") << " ("
                      << out.checks - out.failures << "/" << out.checks
                      << " checks)\n";
            return out.failures == 0 ? 0 : 1;
        }

        if (table_cmd->parsed()) {
            const auto alphas = parse_alpha_grid(alphas_spec);
            std::vector<std::future<TableRow>> futures;
            futures.reserve(alphas.size());
            for (double a : alphas) {
                futures.push_back(
                    std::async(std::launch::async, compute_row, a));
            }
            std::vector<TableRow> rows;
            rows.reserve(alphas.size());
            for (auto& f : futures) rows.push_back(f.get());

            std::string text;
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(row_to_json(r));
                text = arr.dump(2) + "\n";
            } else {
                // text and csv share the table layout
                text = table_to_csv(rows);
            }
            emit(text, out_path);
            return 0;
        }
    } catch (const UnboundedRequest& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "convergence failure: " << e.what()
                  << " (best estimate " << fmt15(e.best_estimate()) << ")\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
