#include "tttest/special_functions.hpp"

#include "tttest/error.hpp"

#include <cmath>
#include <limits>

namespace ttt::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxGammaIterations = 100000;
constexpr long kMaxHypergeometricTerms = 5'000'000;

void check_gamma_domain(double s, double x) {
    if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::DomainError, "need s > 0");
    if (!(x >= 0.0)) throw Error(ErrorCode::DomainError, "need x >= 0");
}

// x^s e^{-x} / Gamma(s)
double gamma_prefactor(double s, double x) {
    return std::exp(s * std::log(x) - x - std::lgamma(s));
}

double p_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < kMaxGammaIterations; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) return sum * gamma_prefactor(s, x);
    }
    throw Error(ErrorCode::NonConvergence, "incomplete gamma series");
}

// Modified Lentz evaluation of the continued fraction for Q(s, x).
double q_continued_fraction(double s, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxGammaIterations; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) return h * gamma_prefactor(s, x);
    }
    throw Error(ErrorCode::NonConvergence, "incomplete gamma continued fraction");
}

double series_2f1(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    int small_terms = 0;
    for (long n = 0; n < kMaxHypergeometricTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;  // a or b is a nonpositive integer
        small_terms = std::abs(term) <= kEps * std::abs(sum) ? small_terms + 1 : 0;
        if (small_terms == 3) return sum;
    }
    throw Error(ErrorCode::NonConvergence, "2F1 series did not converge");
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

double regularized_gamma_p(double s, double x) {
    check_gamma_domain(s, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < s + 1.0) return p_series(s, x);
    return 1.0 - q_continued_fraction(s, x);
}

double regularized_gamma_q(double s, double x) {
    check_gamma_domain(s, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < s + 1.0) return 1.0 - p_series(s, x);
    return q_continued_fraction(s, x);
}

double lower_incomplete_gamma(double s, double x) {
    return std::tgamma(s) * regularized_gamma_p(s, x);
}

double upper_incomplete_gamma(double s, double x) {
    return std::tgamma(s) * regularized_gamma_q(s, x);
}

double hyp2f1(double a, double b, double c, double z) {
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z)) {
        throw Error(ErrorCode::DomainError, "2F1 argument is NaN");
    }
    if (is_nonpositive_integer(c)) {
        throw Error(ErrorCode::DomainError, "2F1 undefined for nonpositive integer c");
    }
    if (!(z < 1.0)) throw Error(ErrorCode::DomainError, "2F1 implemented for z < 1 only");
    if (z == 0.0) return 1.0;
    if (z > 0.0) return series_2f1(a, b, c, z);

    const double w = z / (z - 1.0);
    // Transformed terms decay like n^{kept - other - 1} w^n.
    if (b <= a) return std::pow(1.0 - z, -b) * series_2f1(c - a, b, c, w);
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
}

}  // namespace ttt::special
