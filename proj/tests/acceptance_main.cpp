// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exits nonzero when any
// criterion fails.
//
// Usage: acceptance --hnorm <path-to-cli> --golden <path-to-golden-csv>
//        [--only N] (repeatable)

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

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
namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::string g_hnorm;
std::string g_golden;

struct Criterion {
    int id;
    std::string description;
    std::function<bool(std::string&)> run;
    double time_limit_s;  // 0 = no limit
};

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_hnorm + "\" " + args + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -1;
}

fs::path temp_file(const std::string& stem) {
    return fs::temp_directory_path() /
           (stem + "_" + std::to_string(::getpid()) + ".tmp");
}

bool cli_available(std::string& detail) {
    if (g_hnorm.empty() || !fs::exists(g_hnorm)) {
        detail = "hnorm binary not found (pass --hnorm)";
        return false;
    }
    return true;
}

// --- criterion 1 -----------------------------------------------------------

bool criterion1(std::string& detail) {
    if (!cli_available(detail)) return false;
    const auto out = temp_file("acc1");
    const int rc = run_cli("norm --from hardy-inf --to bloch --format json --out " +
                           out.string());
    if (rc != 0) {
        detail = "CLI exited with " + std::to_string(rc);
        return false;
    }
    json j;
    std::ifstream(out) >> j;
    fs::remove(out);
    if (!j.contains("value") || j["value"].get<double>() != 3.0) {
        detail = "CLI value != 3";
        return false;
    }
    const auto cert = F::th61_certificate(1e-8);
    std::ostringstream os;
    os << "cli=3, upper_sup=" << cert.upper_sup
       << ", lower_probe=" << cert.lower_probe;
    detail = os.str();
    return std::abs(cert.upper_sup - 3.0) <= 1e-8 &&
           cert.lower_probe >= 3.0 - 1e-3;
}

// --- criterion 2 -----------------------------------------------------------

bool criterion2(std::string& detail) {
    const auto rep = F::th71_value(0.5);
    const double target = 1.5 * kPi;
    const double first = F::th71_first_term(0.5);
    const double assembled = kPi / 2.0 + kPi;
    std::ostringstream os;
    os << "value=" << rep.exact << " vs 3pi/2=" << target
       << ", first term=" << first;
    detail = os.str();
    bool ok = rep.kind == F::BoundReport::Kind::Exact &&
              std::abs(rep.exact - target) <= 1e-8 &&
              std::abs(rep.exact - assembled) <= 1e-8 &&
              std::abs(first - kPi / 2.0) <= 1e-9;
    if (ok && !g_hnorm.empty() && fs::exists(g_hnorm)) {
        const auto out = temp_file("acc2");
        if (run_cli("norm --from korenblum --to bloch-plus-one --alpha 0.5 "
                    "--format json --out " +
                    out.string()) == 0) {
            json j;
            std::ifstream(out) >> j;
            ok = ok && std::abs(j["value"].get<double>() - target) <= 1e-8;
        } else {
            ok = false;
            detail += "; CLI emission failed";
        }
        fs::remove(out);
    }
    return ok;
}

// --- criterion 3 -----------------------------------------------------------

bool criterion3(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i <= 16; ++i) {
        const double a = 0.1 + 0.05 * i;
        hilbert::quad::SingularIntegrand f;
        f.left_exponent = a - 1.0;
        f.right_exponent = -a;
        f.smooth = [](double, double) { return 1.0; };
        const double q = hilbert::quad::integrate(f).value;
        const double want = hilbert::special::reflection(a).value;
        worst = std::max(worst, std::abs(q - want) / want);
    }
    std::ostringstream os;
    os << "worst relative deviation " << worst;
    detail = os.str();
    return worst <= 1e-8;
}

// --- criterion 4 -----------------------------------------------------------

double lemma_raw_disk(double alpha, double t, std::complex<double> z) {
    const std::complex<double> w = 1.0 - (1.0 - t) * z;
    const double den = std::norm(w) - t * t;
    return std::pow(std::abs(w), 2.0 * alpha - 1.0) *
           std::pow((1.0 - std::norm(z)) / den, alpha);
}

double lemma_bruteforce(double alpha, double t) {
    const double lo = -(1.0 - t);
    const double hi = (1.0 - t) * (1.0 - 1e-9);
    auto g_raw = [&](double x) {
        const double zr = x / (1.0 - t);
        const double den = (1.0 - x) * (1.0 - x) - t * t;
        return std::pow(1.0 - x, 2.0 * alpha - 1.0) *
               std::pow((1.0 - zr * zr) / den, alpha);
    };
    const int n = 100000;
    double best = -1.0, best_x = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / (n + 1);
        const double v = g_raw(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    const double step = (hi - lo) / (n + 1);
    auto refined = hilbert::search::golden_section_max(
        g_raw, std::max(lo, best_x - step), std::min(hi, best_x + step),
        1e-12);
    return std::max(best, refined.value);
}

bool criterion4(std::string& detail) {
    V::CounterRng rng{20250811};
    double worst = 0.0;
    int checked = 0;
    auto check_pair = [&](double a, double t) {
        const double formula = F::le32_sup(a, t);
        const double brute = lemma_bruteforce(a, t);
        worst = std::max(worst, std::abs(formula - brute) /
                                    std::max(1.0, std::abs(brute)));
        // coarse 2-D disk audit: the raw expression never beats the
        // real-axis maximum beyond grid tolerance
        double disk = -1.0;
        for (int j = 0; j < 64; ++j) {
            const double theta = 2.0 * kPi * j / 64.0;
            for (int i = 0; i < 256; ++i) {
                const double r = (i + 0.5) / 256.0;
                disk = std::max(
                    disk, lemma_raw_disk(a, t, std::polar(r, theta)));
            }
        }
        if (disk > formula * (1.0 + 1e-6)) {
            worst = std::max(worst, 1.0);  // flag as failure
        }
        ++checked;
    };

    // 20 first-branch pairs
    for (int i = 0; i < 20; ++i) {
        const double a = 0.5 + 1e-3 + (0.5 - 2e-3) * rng.uniform(2 * i);
        double t;
        if (a <= 2.0 / 3.0) {
            t = 1e-3 + 0.997 * rng.uniform(2 * i + 1);
        } else {
            const double ts = F::le32_threshold(a);
            t = ts + (0.999 - ts) * rng.uniform(2 * i + 1);
        }
        check_pair(a, t);
    }
    // 20 second-branch pairs
    for (int i = 0; i < 20; ++i) {
        const double a =
            2.0 / 3.0 + 1e-3 + (1.0 / 3.0 - 2e-3) * rng.uniform(100 + 2 * i);
        const double ts = F::le32_threshold(a);
        const double t = ts * (0.02 + 0.96 * rng.uniform(101 + 2 * i));
        check_pair(a, t);
    }
    // 5 pairs within 1e-3 of the threshold, alternating sides
    for (int i = 0; i < 5; ++i) {
        const double a = 0.70 + 0.05 * i;
        const double ts = F::le32_threshold(a);
        const double delta = 1e-3 * (0.2 + 0.15 * i);
        const double t = (i % 2 == 0) ? ts - delta : ts + delta;
        check_pair(a, t);
    }
    std::ostringstream os;
    os << checked << " pairs, worst deviation " << worst;
    detail = os.str();
    return worst <= 1e-6;
}

// --- criterion 5 -----------------------------------------------------------

bool criterion5(std::string& detail) {
    for (int i = 1; i <= 17; ++i) {
        const double a = i / 18.0;
        const double lo = F::th31_lower(a);
        const double mid = F::th31_norm(a).value;
        const double hi = F::th34_upper(a);
        if (!(lo <= mid + 1e-9 && mid <= hi + 1e-7)) {
            std::ostringstream os;
            os << "violated at alpha=" << a << ": " << lo << " / " << mid
               << " / " << hi;
            detail = os.str();
            return false;
        }
    }
    for (int i = 1; i <= 17; ++i) {
        const double a = 1.0 + i / 18.0;
        if (!(F::th52_lower(a) <= F::th53_upper(a))) {
            detail = "Bloch bracket violated at alpha=" + std::to_string(a);
            return false;
        }
    }
    detail = "both 17-point grids ordered";
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool criterion6(std::string& detail) {
    // Tolerance calibrated from the oracle run: the three pinned radii give
    // relative residuals 0.107 / 0.099 / 0.063 (alpha = 0.3 / 0.5 / 0.7);
    // both quadrature backends agree on the underlying values to ~1e-12, so
    // the residuals reflect the genuinely slow O(1/log) approach to the
    // limit, not quadrature error.  Frozen tolerance: 0.12.
    const double kCalibratedTol = 0.12;
    std::ostringstream os;
    bool ok = true;
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
        os << "a=" << a << " rel=" << rel << "  ";
        ok = ok && rel <= kCalibratedTol;
    }
    detail = os.str();
    return ok;
}

// --- criterion 7 -----------------------------------------------------------

bool criterion7(std::string& detail) {
    const double a = 0.5;
    struct Setting {
        S::SpaceSpec src, tgt;
        double claimed;
        const char* label;
    };
    const std::vector<Setting> settings = {
        {S::SpaceSpec::hardy_inf(), S::SpaceSpec::bloch(1.0), 3.0, "H->B"},
        {S::SpaceSpec::log_korenblum(a), S::SpaceSpec::korenblum(a),
         F::th34_upper(a), "log->plain"},
        {S::SpaceSpec::log_korenblum(a), S::SpaceSpec::log_korenblum(a),
         F::th41_norm(a).value, "log->log"},
        {S::SpaceSpec::korenblum(a), S::SpaceSpec::bloch(a + 1.0), 1.5 * kPi,
         "kor->bloch+1"},
    };
    std::ostringstream os;
    for (const auto& s : settings) {
        const auto cert =
            V::bound_certificate(s.src, s.tgt, s.claimed, 100, 1729);
        os << s.label << " worst=" << cert.worst_ratio << "/" << s.claimed
           << "  ";
        if (!cert.passed) {
            detail = os.str() + "<- FAILED";
            return false;
        }
    }
    detail = os.str();
    return true;
}

// --- criterion 8 -----------------------------------------------------------

bool criterion8(std::string& detail) {
    const auto rep = V::crosscheck_representations(20, 50, 1729);
    std::ostringstream os;
    os << "max pairwise deviation " << rep.max_deviation;
    detail = os.str();
    return rep.max_deviation <= 1e-8;
}

// --- criterion 9 -----------------------------------------------------------

bool criterion9(std::string& detail) {
    for (int ia = 1; ia <= 9; ++ia) {
        const double a = ia / 10.0;
        const int n = 10000;
        double prev = S::g_aux(a, 2.0 * 0.5 / (n + 1));
        for (int i = 1; i <= n; ++i) {
            const double x = 2.0 * (i + 0.5) / (n + 1);
            const double g = S::g_aux(a, std::min(x, 2.0));
            const double slope = (g - prev) / (2.0 / (n + 1));
            if (slope < -1e-12) {
                detail = "g_aux slope violation at alpha=" + std::to_string(a);
                return false;
            }
            prev = g;
        }
    }
    for (double a : {0.3, 0.5, 2.0 / 3.0}) {
        const double m = F::th71_monotonicity_min(a, 100, 100);
        if (m < -1e-10) {
            detail = "derivative-kernel slope violation at alpha=" +
                     std::to_string(a);
            return false;
        }
    }
    detail = "g_aux on 9 alphas, derivative kernel on {0.3, 0.5, 2/3}";
    return true;
}

// --- criterion 10 ----------------------------------------------------------

bool criterion10(std::string& detail) {
    using DC = F::DivergenceCase;
    const std::vector<std::pair<DC, double>> probes = {
        {DC::BlochAlphaBelowOne, 0.5},
        {DC::BlochAlphaEqualOne, 1.0},
        {DC::BlochAlphaAtLeastTwo, 2.0},
        {DC::BlochAlphaAtLeastTwo, 2.5},
        {DC::KorenblumToBlochAlphaGeOne, 1.0},
    };
    for (const auto& [c, a] : probes) {
        const auto rep = F::unboundedness_probe(c, a);
        if (!rep.diverges) {
            detail = "probe did not certify divergence at alpha=" +
                     std::to_string(a);
            return false;
        }
    }
    if (!cli_available(detail)) return false;
    const std::vector<std::string> unbounded_requests = {
        "norm --from bloch-alpha --to bloch-alpha --alpha 0.5",
        "norm --from bloch-alpha --to bloch-alpha --alpha 1",
        "norm --from bloch-alpha --to bloch-alpha --alpha 2",
        "norm --from bloch-alpha --to bloch-alpha --alpha 2.5",
        "norm --from korenblum --to bloch-plus-one --alpha 1",
    };
    for (const auto& req : unbounded_requests) {
        const int rc = run_cli(req);
        if (rc != 3) {
            detail = "expected exit 3, got " + std::to_string(rc) + " for '" +
                     req + "'";
            return false;
        }
    }
    detail = "5 probes diverge; 5 CLI requests exit 3";
    return true;
}

// --- criterion 11 ----------------------------------------------------------

bool numbers_agree_10_digits(const std::string& a, const std::string& b) {
    if (a == b) return true;
    try {
        std::size_t ua = 0, ub = 0;
        const double da = std::stod(a, &ua);
        const double db = std::stod(b, &ub);
        if (ua != a.size() || ub != b.size()) return false;
        if (da == db) return true;
        return std::abs(da - db) <=
               5e-10 * std::max(std::abs(da), std::abs(db));
    } catch (...) {
        return false;
    }
}

bool criterion11(std::string& detail) {
    if (!cli_available(detail)) return false;
    if (g_golden.empty() || !fs::exists(g_golden)) {
        detail = "golden file not found (pass --golden)";
        return false;
    }
    const auto out = temp_file("acc11");
    const int rc =
        run_cli("table --alphas 0.1:0.9:0.1 --format csv --out " + out.string());
    if (rc != 0) {
        detail = "table run exited with " + std::to_string(rc);
        return false;
    }
    std::ifstream got_f(out), want_f(g_golden);
    std::string got_line, want_line;
    int line_no = 0;
    while (true) {
        const bool g = static_cast<bool>(std::getline(got_f, got_line));
        const bool w = static_cast<bool>(std::getline(want_f, want_line));
        if (g != w) {
            detail = "line count mismatch";
            fs::remove(out);
            return false;
        }
        if (!g) break;
        ++line_no;
        std::stringstream gs(got_line), ws(want_line);
        std::string gc, wc;
        int col = 0;
        while (true) {
            const bool gg = static_cast<bool>(std::getline(gs, gc, ','));
            const bool ww = static_cast<bool>(std::getline(ws, wc, ','));
            if (gg != ww) {
                detail = "column count mismatch on line " +
                         std::to_string(line_no);
                fs::remove(out);
                return false;
            }
            if (!gg) break;
            ++col;
            if (!numbers_agree_10_digits(gc, wc)) {
                detail = "cell mismatch at line " + std::to_string(line_no) +
                         " col " + std::to_string(col) + ": '" + gc +
                         "' vs '" + wc + "'";
                fs::remove(out);
                return false;
            }
        }
    }
    fs::remove(out);

    // the JSON emission must carry the same numbers to 12 significant digits
    const auto jout = temp_file("acc11j");
    if (run_cli("table --alphas 0.1:0.9:0.1 --format json --out " +
                jout.string()) != 0) {
        detail = "json table run failed";
        return false;
    }
    json rows;
    std::ifstream(jout) >> rows;
    fs::remove(jout);
    std::ifstream csv_f(g_golden);
    std::string header;
    std::getline(csv_f, header);
    std::size_t idx = 0;
    std::string csv_line;
    while (std::getline(csv_f, csv_line) && idx < rows.size()) {
        std::stringstream ls(csv_line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        const json& row = rows[idx];
        const std::vector<std::string> keys = {
            "alpha",      "th31_lower", "th31_norm",  "th34_upper",
            "th41_lower", "th41_norm",  "th52_lower", "th53_upper",
            "th61",       "th71_lower", "th71_exact_or_upper"};
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const bool json_null = row[keys[k]].is_null();
            const bool csv_blank = cells[k].empty();
            if (json_null != csv_blank) {
                detail = "blank-cell mismatch between formats";
                return false;
            }
            if (json_null) continue;
            const double jv = row[keys[k]].get<double>();
            const double cv = std::stod(cells[k]);
            if (std::abs(jv - cv) > 5e-12 * std::max(1.0, std::abs(jv))) {
                detail = "json/csv disagree beyond 12 digits at " + keys[k];
                return false;
            }
        }
        ++idx;
    }
    detail = std::to_string(line_no) +
             " lines agree to 10 significant digits; json/csv consistent";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--hnorm" && i + 1 < argc) {
            g_hnorm = argv[++i];
        } else if (arg == "--golden" && i + 1 < argc) {
            g_golden = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            only.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "unknown argument " << arg << "\n";
            return 2;
        }
    }

    std::vector<Criterion> criteria = {
        {1, "sup-space-to-Bloch exact value 3 (CLI + numeric certificate)",
         criterion1, 1.0},
        {2, "Korenblum-to-Bloch exact value 3pi/2 at alpha = 1/2", criterion2,
         1.0},
        {3, "reflection identity vs quadrature on the 17-point alpha grid",
         criterion3, 5.0},
        {4, "piecewise supremum formula vs brute-force maximization",
         criterion4, 30.0},
        {5, "sandwich orderings on 17-point grids", criterion5, 60.0},
        {6, "limit extrapolation of the log-space kernel (calibrated 0.12)",
         criterion6, 0.0},
        {7, "100-trial bound certificates in four bounded settings",
         criterion7, 120.0},
        {8, "representation equivalence within 1e-8", criterion8, 0.0},
        {9, "monotonicity suites (auxiliary g and derivative kernel)",
         criterion9, 0.0},
        {10, "unboundedness verdicts and CLI exit code 3", criterion10, 0.0},
        {11, "golden table reproduction to 10 significant digits", criterion11,
         0.0},
    };

    int failures = 0;
    for (auto& c : criteria) {
        if (!only.empty() && only.count(c.id) == 0) continue;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
            ok = false;
            detail += " [exceeded " + std::to_string(c.time_limit_s) +
                      " s limit]";
        }
        std::printf("%s criterion %2d: %s  (%.2f s) %s\n",
                    ok ? "PASS" : "FAIL", c.id, c.description.c_str(), secs,
                    detail.empty() ? "" : ("- " + detail).c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
