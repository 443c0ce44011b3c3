#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace foodaccess {

/// Design for the count model: log E[Y] = intercept + predictors * beta
/// + offset. The intercept is always included and is not listed in
/// `names`.
struct DesignSpec {
  Eigen::VectorXd y;            // nonnegative counts
  Eigen::VectorXd offset;       // log population
  Eigen::MatrixXd predictors;   // n x k, may have zero columns
  std::vector<std::string> names;
};

struct GlmFit {
  std::vector<std::string> names;  // "intercept" first
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;      // inverse Fisher information at the optimum
  int n_iter = 0;
  bool converged = false;
  double deviance = 0.0;

  double coefficient(const std::string& name) const;
  double standard_error(const std::string& name) const;
};

struct OlsFit {
  std::vector<std::string> names;  // "intercept" first
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;
  double residual_sd = 0.0;        // sqrt(RSS / (n - p))
  double r_squared_adj = 0.0;
  int df_residual = 0;

  double coefficient(const std::string& name) const;
};

/// Poisson log-likelihood maximized by iteratively reweighted least
/// squares (Cholesky of X'WX). Converges when the relative deviance
/// change drops below 1e-10, capped at 50 iterations; non-convergence is
/// reported through the flag, not an exception.
GlmFit fit_poisson(const DesignSpec& spec);

/// Ordinary least squares via column-pivoted QR.
OlsFit fit_ols(const Eigen::VectorXd& outcome, const Eigen::MatrixXd& predictors,
               const std::vector<std::string>& names);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Wald interval beta +/- z * SE on the coefficient scale.
Interval wald_interval(const GlmFit& fit, const std::string& coef_name, double level);

}  // namespace foodaccess
