#pragma once

namespace ttt::special {

// Regularized incomplete gamma functions P(s, x) and Q(s, x) = 1 - P(s, x).
// Series for x < s + 1, continued fraction otherwise. Throws DomainError for
// s <= 0 or x < 0, NonConvergence if either expansion fails to settle.
[[nodiscard]] double regularized_gamma_p(double s, double x);
[[nodiscard]] double regularized_gamma_q(double s, double x);

/// gamma(s, x) = int_0^x t^{s-1} e^{-t} dt.
[[nodiscard]] double lower_incomplete_gamma(double s, double x);

/// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt; Gamma(s, 0) = Gamma(s).
[[nodiscard]] double upper_incomplete_gamma(double s, double x);

/**
 * Gauss hypergeometric function 2F1(a, b; c; z) for z < 1.
 *
 * 0 <= z < 1 sums the power series directly. z < 0 goes through the Pfaff
 * transformation
 *
 *   2F1(a, b; c; z) = (1 - z)^{-b} 2F1(c - a, b; c; z / (z - 1)),
 *
 * (or its a <-> b mirror, whichever keeps the smaller upper parameter), which
 * maps every negative z into [0, 1) where the series converges.
 * Throws DomainError for z >= 1 or c a nonpositive integer, NonConvergence
 * when the series needs more than a few million terms (z / (z - 1) -> 1).
 */
[[nodiscard]] double hyp2f1(double a, double b, double c, double z);

}  // namespace ttt::special
