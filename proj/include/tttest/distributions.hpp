#pragma once

#include "tttest/random.hpp"
#include "tttest/sample.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace ttt {

/**
 * Parametric lifetime families used as simulation references.
 *
 *   Weibull W(a, b):          F(x) = 1 - exp(-(x/b)^a)
 *   Singh-Maddala SM(a, b, c): F(x) = 1 - (1 + (x/c)^b)^{-a}
 *   Unit exponential:         W(1, 1)
 *
 * Each family knows its quantile function (for inverse-transform sampling),
 * its mean and its TTT transform in closed form.
 */
class Distribution {
public:
    enum class Family { Weibull, SinghMaddala, UnitExponential };

    /// Throws InvalidParameter unless shape, scale > 0.
    [[nodiscard]] static Distribution weibull(double shape, double scale);
    [[nodiscard]] static Distribution singh_maddala(double a, double b, double c);
    [[nodiscard]] static Distribution unit_exponential() noexcept;

    /// "weibull:a=2,b=1", "sm:a=1.5,b=1.5,c=1" or "exp". Omitted scales default to 1.
    [[nodiscard]] static Distribution parse(std::string_view spec);
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double c() const noexcept { return c_; }

    [[nodiscard]] double cdf(double x) const;
    [[nodiscard]] double quantile(double u) const;
    /// Throws ParameterOutOfDomain for Singh-Maddala with a*b <= 1 (infinite mean).
    [[nodiscard]] double mean() const;

    /// n >= 2 independent draws by inverse transform.
    [[nodiscard]] Sample sample(std::size_t n, Rng& rng) const;

    /**
     * TTT transform T(p) = int_0^{F^{-1}(p)} (1 - F(x)) dx for p in [0, 1].
     *
     * Weibull: (b/a) gamma(1/a, -log(1-p)), the lower incomplete gamma, which
     * equals (b/a)(Gamma(1/a, 0) - Gamma(1/a, -log(1-p))).
     * Singh-Maddala: F^{-1}(p) 2F1(a, 1/b; 1 + 1/b; 1 - (1-p)^{-1/a}); needs a*b > 1.
     * T(1) is the mean.
     */
    [[nodiscard]] double ttt(double p) const;

    /// ttt(p) / mean().
    [[nodiscard]] double scaled_ttt(double p) const;

private:
    Distribution(Family family, double a, double b, double c) noexcept
        : family_(family), a_(a), b_(b), c_(c) {}

    void require_finite_mean() const;

    Family family_;
    double a_;
    double b_;
    double c_;
};

}  // namespace ttt
