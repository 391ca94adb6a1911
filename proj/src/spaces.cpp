#include "hilbert/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hilbert/search.hpp"

namespace hilbert::spaces {

namespace {

cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx horner_derivative(const std::vector<double>& c, cplx z) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 1;) {
        acc = acc * z + static_cast<double>(k) * c[k];
    }
    return acc;
}

}  // namespace

void SpaceSpec::validate() const {
    switch (kind) {
        case SpaceKind::HardyInf:
            return;
        case SpaceKind::Korenblum:
        case SpaceKind::LogKorenblum:
            if (!(alpha > 0.0 && alpha < 1.0)) {
                throw std::domain_error(label() +
                                        ": alpha must lie in (0,1)");
            }
            return;
        case SpaceKind::BlochAlpha:
            if (!(alpha > 0.0)) {
                throw std::domain_error(label() + ": alpha must be positive");
            }
            return;
    }
    throw std::logic_error("SpaceSpec: unknown kind");
}

std::string SpaceSpec::label() const {
    switch (kind) {
        case SpaceKind::HardyInf:
            return "hardy-inf";
        case SpaceKind::Korenblum:
            return "korenblum(" + std::to_string(alpha) + ")";
        case SpaceKind::LogKorenblum:
            return "log-korenblum(" + std::to_string(alpha) + ")";
        case SpaceKind::BlochAlpha:
            return "bloch(" + std::to_string(alpha) + ")";
    }
    return "?";
}

double log_weight_factor(double alpha, double x) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("log_weight_factor: alpha must be positive");
    }
    if (!(x > 0.0)) {
        throw std::domain_error("log_weight_factor: x must be positive");
    }
    return std::log(2.0) + 1.0 / alpha - std::log(x);
}

double weight(const SpaceSpec& space, double r) {
    space.validate();
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("weight: radius must lie in [0,1)");
    }
    const double om = (1.0 - r) * (1.0 + r);  // 1 - r^2 without cancellation
    switch (space.kind) {
        case SpaceKind::HardyInf:
            return 1.0;
        case SpaceKind::Korenblum:
        case SpaceKind::BlochAlpha:
            return std::pow(om, space.alpha);
        case SpaceKind::LogKorenblum:
            return std::pow(om, space.alpha) *
                   log_weight_factor(space.alpha, om);
    }
    throw std::logic_error("weight: unknown kind");
}

double g_aux(double alpha, double x) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("g_aux: alpha must lie in (0,1)");
    }
    if (!(x > 0.0 && x <= 2.0)) {
        throw std::domain_error("g_aux: x must lie in (0,2]");
    }
    return std::pow(x, alpha) * log_weight_factor(alpha, x);
}

cplx FunctionHandle::eval(cplx z) const { return eval(z, 1.0 - z); }

cplx FunctionHandle::eval(cplx z, cplx one_minus_z) const {
    cplx v = smooth(z, one_minus_z);
    if (right_exponent != 0.0) v *= std::pow(one_minus_z, right_exponent);
    return v;
}

double FunctionHandle::radial(double t, double one_minus_t) const {
    double v = smooth(cplx{t, 0.0}, cplx{one_minus_t, 0.0}).real();
    if (right_exponent != 0.0) v *= std::pow(one_minus_t, right_exponent);
    return v;
}

cplx FunctionHandle::derivative_at(cplx z) const {
    if (deriv) return (*deriv)(z, 1.0 - z);
    if (taylor) return horner_derivative(*taylor, z);
    if (z.imag() == 0.0 && real_on_real && std::abs(z) < 1.0) {
        // complex-step differentiation; exact complement keeps the imaginary
        // part clean for the singular named functions
        const double h = 1e-20;
        const cplx zh{z.real(), h};
        const cplx zch{1.0 - z.real(), -h};
        return eval(zh, zch).imag() / h;
    }
    // Richardson-extrapolated central differences along the real direction
    const double room = (1.0 - std::abs(z)) / 8.0;
    const double h0 = std::min(6e-6, std::max(room, 1e-9));
    std::vector<double> h2s, dre, dim;
    double h = h0;
    for (int j = 0; j < 5; ++j, h *= 0.5) {
        const cplx d = (eval(z + h) - eval(z - h)) / (2.0 * h);
        h2s.push_back(h * h);
        dre.push_back(d.real());
        dim.push_back(d.imag());
    }
    return {search::neville(h2s, dre, 0.0), search::neville(h2s, dim, 0.0)};
}

namespace {

constexpr double kEdge = 1.0 - 1e-8;
constexpr double kGoldenTolR = 1e-10;

double profile_value(const SpaceSpec& space, const FunctionHandle& f,
                     bool bloch, double r, double theta) {
    const cplx z = std::polar(r, theta);
    const double m =
        bloch ? std::abs(f.derivative_at(z)) : std::abs(f.eval(z));
    return weight(space, r) * m;
}

NormEstimate radial_estimate(const SpaceSpec& space, const FunctionHandle& f,
                             int n, bool refine) {
    const bool bloch = space.kind == SpaceKind::BlochAlpha;
    auto prof = [&](double r) { return profile_value(space, f, bloch, r, 0.0); };
    const auto rs = search::chebyshev_points(0.0, kEdge, n);
    std::vector<double> ys(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) ys[i] = prof(rs[i]);

    NormEstimate est;
    if (refine) {
        auto m = search::refine_sampled_max(prof, rs, ys, kGoldenTolR);
        est.value = m.value;
        est.argsup_radius = m.arg;
    } else {
        std::size_t best = 0;
        for (std::size_t i = 1; i < ys.size(); ++i) {
            if (ys[i] > ys[best]) best = i;
        }
        est.value = ys[best];
        est.argsup_radius = rs[best];
    }
    if (bloch) est.value += std::abs(f.eval(cplx{0.0, 0.0}));
    est.boundary_attained = est.argsup_radius >= kEdge - 1e-6;
    est.method = "radial:" + std::to_string(n) + (refine ? ";golden" : "");
    return est;
}

NormEstimate polar_estimate(const SpaceSpec& space, const FunctionHandle& f,
                            int n, int angles, bool refine) {
    const bool bloch = space.kind == SpaceKind::BlochAlpha;
    const auto rs = search::chebyshev_points(0.0, kEdge, n);
    const double dtheta = 2.0 * std::numbers::pi / angles;

    double best_v = -1.0;
    double best_r = 0.0;
    double best_th = 0.0;
    for (int j = 0; j < angles; ++j) {
        const double theta = j * dtheta;
        for (double r : rs) {
            const double v = profile_value(space, f, bloch, r, theta);
            if (v > best_v) {
                best_v = v;
                best_r = r;
                best_th = theta;
            }
        }
    }

    if (refine) {
        // alternate golden refinements in r and theta around the grid argmax
        for (int round = 0; round < 3; ++round) {
            const double th = best_th;
            auto fr = [&](double r) {
                return profile_value(space, f, bloch, r, th);
            };
            auto mr = search::golden_section_max(
                fr, std::max(0.0, best_r - 2.0 * (kEdge / (n - 1.0))),
                std::min(kEdge, best_r + 2.0 * (kEdge / (n - 1.0))),
                kGoldenTolR);
            // chebyshev spacing is nonuniform; widen the bracket near 1
            auto mr2 = search::golden_section_max(
                fr, std::max(0.0, best_r * 0.98),
                std::min(kEdge, best_r * 1.02 + 1e-4), kGoldenTolR);
            if (mr2.value > mr.value) mr = mr2;
            if (mr.value > best_v) {
                best_v = mr.value;
                best_r = mr.arg;
            }
            const double r = best_r;
            auto ft = [&](double theta) {
                return profile_value(space, f, bloch, r, theta);
            };
            auto mt = search::golden_section_max(ft, best_th - dtheta,
                                                 best_th + dtheta, 1e-9);
            if (mt.value > best_v) {
                best_v = mt.value;
                best_th = mt.arg;
            }
        }
    }

    NormEstimate est;
    est.value = best_v + (bloch ? std::abs(f.eval(cplx{0.0, 0.0})) : 0.0);
    est.argsup_radius = best_r;
    est.argsup_angle = best_th;
    est.boundary_attained = best_r >= kEdge - 1e-6;
    est.method = "polar:" + std::to_string(angles) + "x" + std::to_string(n) +
                 (refine ? ";golden" : "");
    return est;
}

}  // namespace

NormEstimate norm_estimate(const SpaceSpec& space, const FunctionHandle& f,
                           int radial_samples, bool refine) {
    space.validate();
    if (radial_samples < 4) {
        throw std::invalid_argument("norm_estimate: need >= 4 radial samples");
    }
    if (f.radial_profile_known) {
        return radial_estimate(space, f, radial_samples, refine);
    }
    return polar_estimate(space, f, radial_samples, 64, refine);
}

NormEstimate norm_estimate_polar(const SpaceSpec& space,
                                 const FunctionHandle& f, int radial_samples,
                                 int angles, bool refine) {
    space.validate();
    if (radial_samples < 4 || angles < 1) {
        throw std::invalid_argument("norm_estimate_polar: bad grid sizes");
    }
    if (angles == 1) return radial_estimate(space, f, radial_samples, refine);
    return polar_estimate(space, f, radial_samples, angles, refine);
}

FunctionHandle make_polynomial(std::vector<double> coeffs, std::string name) {
    FunctionHandle h;
    h.name = std::move(name);
    bool nonneg = true;
    for (double c : coeffs) nonneg = nonneg && c >= 0.0;
    h.radial_profile_known = nonneg;
    h.taylor = coeffs;
    h.smooth = [coeffs](cplx z, cplx) { return horner(coeffs, z); };
    h.deriv = [coeffs](cplx z, cplx) { return horner_derivative(coeffs, z); };
    return h;
}

FunctionHandle make_function(const std::string& id, double alpha) {
    if (id == "const") {
        auto h = make_polynomial({1.0}, "const");
        return h;
    }
    if (id.rfind("monomial:", 0) == 0) {
        const int k = std::stoi(id.substr(9));
        if (k < 0) throw std::invalid_argument("monomial: degree must be >= 0");
        std::vector<double> c(k + 1, 0.0);
        c[k] = 1.0;
        return make_polynomial(std::move(c), id);
    }
    if (id.rfind("poly:", 0) == 0) {
        std::string body = id.substr(5);
        if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
            body = body.substr(1, body.size() - 2);
        }
        std::vector<double> c;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t used = 0;
            c.push_back(std::stod(body.substr(pos), &used));
            pos += used;
            while (pos < body.size() && (body[pos] == ',' || body[pos] == ' ')) {
                ++pos;
            }
        }
        if (c.empty()) throw std::invalid_argument("poly: empty coefficients");
        return make_polynomial(std::move(c), "poly");
    }
    if (id == "f_alpha") {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("f_alpha: alpha must lie in (0,1)");
        }
        FunctionHandle h;
        h.name = "f_alpha";
        h.right_exponent = -alpha;
        h.radial_profile_known = true;
        const double a = alpha;
        h.smooth = [a](cplx z, cplx zc) {
            const cplx lg = std::log(2.0) + 1.0 / a - std::log(zc) -
                            std::log(1.0 + z);
            return std::pow(1.0 + z, -a) / lg;
        };
        return h;
    }
    if (id == "f_alpha_plain") {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("f_alpha_plain: alpha must lie in (0,1)");
        }
        FunctionHandle h;
        h.name = "f_alpha_plain";
        h.right_exponent = -alpha;
        h.radial_profile_known = true;
        const double a = alpha;
        h.smooth = [a](cplx z, cplx) { return std::pow(1.0 + z, -a); };
        h.deriv = [a](cplx z, cplx zc) {
            return 2.0 * a * z * std::pow(zc * (1.0 + z), -a - 1.0);
        };
        return h;
    }
    if (id == "h_alpha") {
        if (!(alpha > 1.0 && alpha < 2.0)) {
            throw std::domain_error("h_alpha: alpha must lie in (1,2)");
        }
        FunctionHandle h;
        h.name = "h_alpha";
        h.right_exponent = 1.0 - alpha;
        h.radial_profile_known = true;
        const double a = alpha;
        h.smooth = [a](cplx z, cplx zc) {
            return (std::pow(1.0 + z, 1.0 - a) - std::pow(zc, a - 1.0)) /
                   (2.0 * (a - 1.0));
        };
        h.deriv = [a](cplx z, cplx zc) {
            return z * std::pow(zc * (1.0 + z), -a);
        };
        return h;
    }
    if (id == "h_one") {
        FunctionHandle h;
        h.name = "h_one";
        h.smooth = [](cplx, cplx zc) { return -std::log(zc); };
        h.deriv = [](cplx, cplx zc) { return 1.0 / zc; };
        h.radial_profile_known = false;
        return h;
    }
    throw std::invalid_argument("make_function: unknown id '" + id + "'");
}

}  // namespace hilbert::spaces
