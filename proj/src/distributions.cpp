#include "tttest/distributions.hpp"

#include "tttest/error.hpp"
#include "tttest/special_functions.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace ttt {
namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidParameter, std::string(name) + " must be positive and finite");
    }
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::DomainError, "p must lie in [0,1]");
}

// "a=2,b=1" -> {a: 2, b: 1}
std::map<std::string, double> parse_parameters(std::string_view text) {
    std::map<std::string, double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
        }
        const auto key = std::string(item.substr(0, eq));
        const auto value_text = item.substr(eq + 1);
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
            throw Error(ErrorCode::ParseError, "bad number for '" + key + "'");
        }
        out[key] = value;
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

double take(std::map<std::string, double>& params, const std::string& key,
            std::optional<double> fallback) {
    const auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw Error(ErrorCode::ParseError, "missing parameter '" + key + "'");
    }
    const double v = it->second;
    params.erase(it);
    return v;
}

}  // namespace

Distribution Distribution::weibull(double shape, double scale) {
    require_positive(shape, "Weibull shape a");
    require_positive(scale, "Weibull scale b");
    return {Family::Weibull, shape, scale, 1.0};
}

Distribution Distribution::singh_maddala(double a, double b, double c) {
    require_positive(a, "Singh-Maddala a");
    require_positive(b, "Singh-Maddala b");
    require_positive(c, "Singh-Maddala c");
    return {Family::SinghMaddala, a, b, c};
}

Distribution Distribution::unit_exponential() noexcept {
    return {Family::UnitExponential, 1.0, 1.0, 1.0};
}

Distribution Distribution::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    auto params = parse_parameters(colon == std::string_view::npos ? std::string_view{}
                                                                    : spec.substr(colon + 1));
    Distribution out = unit_exponential();
    if (name == "exp" || name == "exponential") {
        // no parameters
    } else if (name == "weibull") {
        const double a = take(params, "a", std::nullopt);
        const double b = take(params, "b", 1.0);
        out = weibull(a, b);
    } else if (name == "sm" || name == "singh-maddala") {
        const double a = take(params, "a", std::nullopt);
        const double b = take(params, "b", std::nullopt);
        const double c = take(params, "c", 1.0);
        out = singh_maddala(a, b, c);
    } else {
        throw Error(ErrorCode::ParseError, "unknown distribution '" + std::string(name) + "'");
    }
    if (!params.empty()) {
        throw Error(ErrorCode::ParseError, "unexpected parameter '" + params.begin()->first + "'");
    }
    return out;
}

std::string Distribution::to_string() const {
    std::ostringstream out;
    switch (family_) {
        case Family::UnitExponential: out << "exp"; break;
        case Family::Weibull: out << "weibull:a=" << a_ << ",b=" << b_; break;
        case Family::SinghMaddala: out << "sm:a=" << a_ << ",b=" << b_ << ",c=" << c_; break;
    }
    return out.str();
}

double Distribution::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (family_) {
        case Family::UnitExponential: return -std::expm1(-x);
        case Family::Weibull: return -std::expm1(-std::pow(x / b_, a_));
        case Family::SinghMaddala: return 1.0 - std::pow(1.0 + std::pow(x / c_, b_), -a_);
    }
    return 0.0;
}

double Distribution::quantile(double u) const {
    if (!(u >= 0.0 && u < 1.0)) throw Error(ErrorCode::DomainError, "quantile needs u in [0,1)");
    const double e = -std::log1p(-u);  // -log(1 - u)
    switch (family_) {
        case Family::UnitExponential: return e;
        case Family::Weibull: return b_ * std::pow(e, 1.0 / a_);
        case Family::SinghMaddala: return c_ * std::pow(std::expm1(e / a_), 1.0 / b_);
    }
    return 0.0;
}

void Distribution::require_finite_mean() const {
    if (family_ == Family::SinghMaddala && !(a_ * b_ > 1.0)) {
        throw Error(ErrorCode::ParameterOutOfDomain,
                    "Singh-Maddala TTT transform needs a*b > 1");
    }
}

double Distribution::mean() const {
    require_finite_mean();
    switch (family_) {
        case Family::UnitExponential: return 1.0;
        case Family::Weibull: return b_ * std::tgamma(1.0 + 1.0 / a_);
        case Family::SinghMaddala:
            return c_ * std::exp(std::lgamma(1.0 + 1.0 / b_) + std::lgamma(a_ - 1.0 / b_) -
                                 std::lgamma(a_));
    }
    return 0.0;
}

Sample Distribution::sample(std::size_t n, Rng& rng) const {
    if (n < 2) throw Error(ErrorCode::InvalidParameter, "sample size must be at least 2");
    std::vector<double> draws(n);
    for (double& d : draws) d = quantile(rng.uniform01());
    return Sample::ingest(std::move(draws));
}

double Distribution::ttt(double p) const {
    require_probability(p);
    require_finite_mean();
    if (p == 0.0) return 0.0;
    if (p == 1.0) return mean();
    switch (family_) {
        case Family::UnitExponential: return p;
        case Family::Weibull:
            if (a_ == 1.0) return b_ * p;
            return b_ / a_ * special::lower_incomplete_gamma(1.0 / a_, -std::log1p(-p));
        case Family::SinghMaddala: {
            // (1-p)^{-1/a} - 1, without cancellation for small p
            const double t = std::expm1(-std::log1p(-p) / a_);
            const double q = c_ * std::pow(t, 1.0 / b_);
            return q * special::hyp2f1(a_, 1.0 / b_, 1.0 + 1.0 / b_, -t);
        }
    }
    return 0.0;
}

double Distribution::scaled_ttt(double p) const { return ttt(p) / mean(); }

}  // namespace ttt
