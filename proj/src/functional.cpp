#include "tttest/functional.hpp"

#include "tttest/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ttt {

PhiR PhiR::finite(double r) {
    if (!(r >= 1.0)) throw Error(ErrorCode::InvalidR, "r must be >= 1");
    return PhiR(r);
}

PhiR PhiR::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    double r = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidR, "cannot parse r from '" + std::string(text) + "'");
    }
    return finite(r);
}

std::string PhiR::to_string() const {
    if (is_infinite()) return "inf";
    std::ostringstream out;
    out << r_;
    return out.str();
}

namespace {

// int_0^L (linear from lo to hi)^r dt with 0 <= lo <= hi, scaled by 1/hi^r
// so that large r cannot overflow: returns L * (1 - rho^{r+1}) / ((r+1)(1 - rho)).
double normalized_segment_power_integral(double lo, double hi, double length, double r) {
    if (hi <= 0.0) return 0.0;
    const double rho = lo / hi;
    if (r == 1.0) return length * 0.5 * (1.0 + rho);
    if (r == 2.0) return length * (1.0 + rho + rho * rho) / 3.0;
    if (rho == 1.0) return length;
    if (rho == 0.0) return length / (r + 1.0);
    const double u = std::log1p((lo - hi) / hi);  // log rho, accurate near rho = 1
    return length * std::expm1((r + 1.0) * u) / ((r + 1.0) * std::expm1(u));
}

double phi_linear(double r, std::span<const double> p, std::span<const double> v, double scale) {
    double total = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        const double a = v[k - 1];
        const double b = v[k];
        const double width = p[k] - p[k - 1];
        if (a <= 0.0 && b <= 0.0) continue;
        double lo = 0.0;
        double hi = 0.0;
        double length = width;
        if (a >= 0.0 && b >= 0.0) {
            lo = std::min(a, b);
            hi = std::max(a, b);
        } else {
            // One endpoint negative: keep the positive piece past the root.
            hi = std::max(a, b);
            length = width * hi / (std::abs(a) + std::abs(b));
        }
        const double h = hi / scale;
        total += std::pow(h, r) * normalized_segment_power_integral(lo / scale, h, length, r);
    }
    return scale * std::pow(total, 1.0 / r);
}

double phi_step(double r, std::span<const double> p, std::span<const double> v, double scale) {
    double total = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (v[k] <= 0.0) continue;
        total += std::pow(v[k] / scale, r) * (p[k] - p[k - 1]);
    }
    return scale * std::pow(total, 1.0 / r);
}

}  // namespace

double phi(const PhiR& functional, const PiecewiseCurve& curve) {
    const auto v = curve.values();
    const double sup = std::max(0.0, *std::max_element(v.begin(), v.end()));
    if (functional.is_infinite() || sup == 0.0) return sup;
    const double r = functional.order();
    if (curve.kind() == CurveKind::Linear) return phi_linear(r, curve.abscissae(), v, sup);
    return phi_step(r, curve.abscissae(), v, sup);
}

double sup_distance(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    const auto diff = curve_difference(a, b);
    double out = 0.0;
    for (double x : diff.values()) out = std::max(out, std::abs(x));
    return out;
}

namespace {

bool positive_somewhere(const PiecewiseCurve& c, bool infinite_order) {
    const auto v = c.values();
    // A lone positive value at p = 0 of a step curve has no length, so only
    // the sup-norm functional can see it.
    const std::size_t first = (c.kind() == CurveKind::Step && !infinite_order) ? 1 : 0;
    return std::any_of(v.begin() + static_cast<std::ptrdiff_t>(first), v.end(),
                       [](double x) { return x > 0.0; });
}

struct Checker {
    PhiPropertyReport& report;
    const PhiPropertyOptions& options;

    void at_most(int property, const std::string& what, double lhs, double rhs) {
        if (lhs > rhs + options.inequality_slack * std::max(1.0, std::abs(rhs))) {
            report.violations.push_back({property, what, lhs, rhs});
        }
    }
    void equal(int property, const std::string& what, double lhs, double rhs) {
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > options.equality_tolerance * scale) {
            report.violations.push_back({property, what, lhs, rhs});
        }
    }
};

}  // namespace

PhiPropertyReport check_phi_properties(const PiecewiseCurve& delta1, const PiecewiseCurve& delta2,
                                       double r, double s, PhiPropertyOptions options) {
    if (!(r >= 1.0) || !(s >= r)) throw Error(ErrorCode::InvalidR, "need 1 <= r <= s");
    const PhiR phi_r = std::isinf(r) ? PhiR::infinity() : PhiR::finite(r);
    const PhiR phi_s = std::isinf(s) ? PhiR::infinity() : PhiR::finite(s);

    PhiPropertyReport report;
    Checker check{report, options};

    const double f1 = phi(phi_r, delta1);
    const double f2 = phi(phi_r, delta2);

    const PiecewiseCurve zero = delta1.scaled(0.0);
    check.equal(1, "Phi_r(0) = 0", phi(phi_r, zero), 0.0);

    const auto v1 = delta1.values();
    report.domination_applicable =
        std::all_of(v1.begin(), v1.end(), [](double x) { return x <= 0.0; });
    if (report.domination_applicable) {
        check.at_most(2, "Phi_r(d2) <= Phi_r(d2 - d1) for d1 <= 0", f2,
                      phi(phi_r, curve_difference(delta2, delta1)));
    }

    for (const auto* d : {&delta1, &delta2}) {
        const bool expected = positive_somewhere(*d, phi_r.is_infinite());
        const double value = d == &delta1 ? f1 : f2;
        if (expected != (value > 0.0)) {
            report.violations.push_back(
                {3, "Phi_r(d) > 0 iff d > 0 somewhere", value, expected ? 1.0 : 0.0});
        }
    }

    check.at_most(4, "|Phi_r(d1) - Phi_r(d2)| <= ||d1 - d2||_inf", std::abs(f1 - f2),
                  sup_distance(delta1, delta2));

    const double c = options.homogeneity_factor;
    check.equal(5, "Phi_r(c d1) = c Phi_r(d1)", phi(phi_r, delta1.scaled(c)), c * f1);

    const auto midpoint = curve_sum(delta1, delta2).scaled(0.5);
    check.at_most(6, "Phi_r((d1 + d2)/2) <= (Phi_r(d1) + Phi_r(d2))/2", phi(phi_r, midpoint),
                  0.5 * (f1 + f2));

    check.at_most(7, "Phi_r(d1) <= Phi_s(d1)", f1, phi(phi_s, delta1));
    check.at_most(7, "Phi_r(d2) <= Phi_s(d2)", f2, phi(phi_s, delta2));
    return report;
}

}  // namespace ttt
