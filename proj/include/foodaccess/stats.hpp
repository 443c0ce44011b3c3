#pragma once

namespace foodaccess {

/// Standard normal CDF, accurate in both tails (erfc-based).
double norm_cdf(double x);

/// Standard normal quantile (inverse CDF), Wichura's AS241 rational
/// approximation. Relative error below 1e-15 over (0, 1).
double norm_quantile(double p);

/// Quantile of N(mu, sigma).
double norm_quantile(double p, double mu, double sigma);

/// Two-sided z critical value for a confidence level in (0, 1).
double z_critical(double level);

/// Student-t quantile via Hill's iterative inversion of the incomplete
/// beta relation (used only by the Barnard-Rubin reference option).
double student_t_quantile(double p, double df);

}  // namespace foodaccess
