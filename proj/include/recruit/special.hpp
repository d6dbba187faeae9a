#ifndef RECRUIT_SPECIAL_HPP
#define RECRUIT_SPECIAL_HPP

namespace recruit {

/// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative accuracy).
/// Throws std::domain_error for non-positive or non-finite x.
double log_gamma_fn(double x);

/// ln B(a, b) = lnG(a) + lnG(b) - lnG(a+b), a > 0, b > 0.
double log_beta_fn(double a, double b);

/// sum_{j=0}^{n-1} ln(a + j) = lnG(a+n) - lnG(a), computed term by term.
/// Exact cancellation-free form of a rising-factorial log; n >= 0, a > 0.
double log_rising_sum(double a, long n);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile, p in (0,1). Accurate to ~1e-15 after refinement.
double normal_quantile(double p);

/// Approximate chi-square upper quantile (Wilson-Hilferty), for GOF gates.
double chi_square_quantile(double p, int dof);

}  // namespace recruit

#endif
