#include "foodaccess/regress.hpp"

#include <algorithm>
#include <cmath>

#include "foodaccess/errors.hpp"
#include "foodaccess/stats.hpp"

namespace foodaccess {

namespace {

constexpr double kDevianceTol = 1e-10;
constexpr int kMaxIter = 50;
constexpr double kEtaCap = 700.0;  // exp overflow guard

std::ptrdiff_t index_of(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw_error(ErrorCode::InvalidInput, "unknown coefficient '" + name + "'");
  }
  return it - names.begin();
}

Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& predictors, Eigen::Index n) {
  Eigen::MatrixXd x(n, predictors.cols() + 1);
  x.col(0).setOnes();
  if (predictors.cols() > 0) x.rightCols(predictors.cols()) = predictors;
  return x;
}

void check_finite(const Eigen::MatrixXd& m, const std::string& what) {
  if (!m.allFinite()) {
    throw_error(ErrorCode::InvalidInput, what + " contains non-finite values");
  }
}

double poisson_deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double yi = y[i];
    dev += (yi > 0.0 ? yi * std::log(yi / mu[i]) : 0.0) - (yi - mu[i]);
  }
  return 2.0 * dev;
}

}  // namespace

double GlmFit::coefficient(const std::string& name) const {
  return coefficients[index_of(names, name)];
}

double GlmFit::standard_error(const std::string& name) const {
  const auto i = index_of(names, name);
  return std::sqrt(covariance(i, i));
}

double OlsFit::coefficient(const std::string& name) const {
  return coefficients[index_of(names, name)];
}

GlmFit fit_poisson(const DesignSpec& spec) {
  const Eigen::Index n = spec.y.size();
  const Eigen::Index p = spec.predictors.cols() + 1;
  if (spec.offset.size() != n || (spec.predictors.cols() > 0 && spec.predictors.rows() != n)) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: mismatched row counts");
  }
  if (static_cast<std::size_t>(spec.predictors.cols()) != spec.names.size()) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: one name per predictor column");
  }
  if (n <= p) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: need more rows than coefficients");
  }
  check_finite(spec.predictors, "predictors");
  check_finite(spec.offset, "offset");
  if ((spec.y.array() < 0.0).any() || !spec.y.allFinite()) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: outcome must be nonnegative counts");
  }

  const Eigen::MatrixXd x = with_intercept(spec.predictors, n);
  if (Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(x).rank() < p) {
    throw_error(ErrorCode::SingularDesign, "fit_poisson: design matrix is rank deficient");
  }

  const double y_sum = spec.y.sum();
  const double exposure = spec.offset.array().exp().sum();
  if (!(y_sum > 0.0)) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: outcome sums to zero");
  }

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  beta[0] = std::log(y_sum / exposure);

  const auto mean_of = [&](const Eigen::VectorXd& b, Eigen::VectorXd& mu) -> bool {
    const Eigen::VectorXd eta = spec.offset + x * b;
    if ((eta.array() > kEtaCap).any()) return false;
    mu = eta.array().exp();
    return mu.allFinite() && (mu.array() > 0.0).all();
  };

  Eigen::VectorXd mu;
  if (!mean_of(beta, mu)) {
    throw_error(ErrorCode::InvalidInput, "fit_poisson: starting mean overflows");
  }
  double dev = poisson_deviance(spec.y, mu);

  GlmFit fit;
  fit.names.reserve(p);
  fit.names.emplace_back("intercept");
  fit.names.insert(fit.names.end(), spec.names.begin(), spec.names.end());

  bool dev_converged = false;
  int iter = 0;
  for (; iter < kMaxIter; ++iter) {
    const Eigen::MatrixXd xtwx = x.transpose() * mu.asDiagonal() * x;
    const Eigen::VectorXd score = x.transpose() * (spec.y - mu);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(xtwx);
    if (ldlt.info() != Eigen::Success) {
      throw_error(ErrorCode::SingularDesign, "fit_poisson: weighted normal matrix not PD");
    }
    const Eigen::VectorXd step = ldlt.solve(score);

    // step halving on overflow or deviance increase
    double scale = 1.0;
    Eigen::VectorXd beta_new;
    Eigen::VectorXd mu_new;
    double dev_new = dev;
    bool accepted = false;
    for (int half = 0; half < 30; ++half) {
      beta_new = beta + scale * step;
      if (mean_of(beta_new, mu_new)) {
        dev_new = poisson_deviance(spec.y, mu_new);
        if (dev_new <= dev + 1e-8 * (std::abs(dev) + 1.0)) {
          accepted = true;
          break;
        }
      }
      scale *= 0.5;
    }
    if (!accepted) break;

    beta = beta_new;
    mu = mu_new;
    const double change = std::abs(dev_new - dev) / (std::abs(dev_new) + 0.1);
    dev = dev_new;
    if (change < kDevianceTol) {
      dev_converged = true;
      ++iter;
      break;
    }
  }

  const Eigen::VectorXd score = x.transpose() * (spec.y - mu);
  const bool score_ok = score.cwiseAbs().maxCoeff() <= 1e-8 * (y_sum + 1.0);

  const Eigen::MatrixXd xtwx = x.transpose() * mu.asDiagonal() * x;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(xtwx);
  if (ldlt.info() != Eigen::Success) {
    throw_error(ErrorCode::SingularDesign, "fit_poisson: information matrix not PD");
  }

  fit.coefficients = beta;
  fit.covariance = ldlt.solve(Eigen::MatrixXd::Identity(p, p));
  fit.covariance = 0.5 * (fit.covariance + fit.covariance.transpose().eval());
  fit.n_iter = iter;
  fit.converged = dev_converged && score_ok;
  fit.deviance = dev;
  return fit;
}

OlsFit fit_ols(const Eigen::VectorXd& outcome, const Eigen::MatrixXd& predictors,
               const std::vector<std::string>& names) {
  const Eigen::Index n = outcome.size();
  const Eigen::Index p = predictors.cols() + 1;
  if (predictors.cols() > 0 && predictors.rows() != n) {
    throw_error(ErrorCode::InvalidInput, "fit_ols: mismatched row counts");
  }
  if (static_cast<std::size_t>(predictors.cols()) != names.size()) {
    throw_error(ErrorCode::InvalidInput, "fit_ols: one name per predictor column");
  }
  if (n <= p) {
    throw_error(ErrorCode::InvalidInput, "fit_ols: need more rows than coefficients");
  }
  check_finite(predictors, "predictors");
  check_finite(outcome, "outcome");

  const Eigen::MatrixXd x = with_intercept(predictors, n);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < p) {
    throw_error(ErrorCode::SingularDesign, "fit_ols: design matrix is rank deficient");
  }

  OlsFit fit;
  fit.names.reserve(p);
  fit.names.emplace_back("intercept");
  fit.names.insert(fit.names.end(), names.begin(), names.end());
  fit.coefficients = qr.solve(outcome);

  const Eigen::VectorXd residuals = outcome - x * fit.coefficients;
  const double rss = residuals.squaredNorm();
  fit.df_residual = static_cast<int>(n - p);
  const double sigma2 = rss / fit.df_residual;
  fit.residual_sd = std::sqrt(sigma2);

  const Eigen::MatrixXd xtx_inv =
      (x.transpose() * x).ldlt().solve(Eigen::MatrixXd::Identity(p, p));
  fit.covariance = sigma2 * xtx_inv;

  const double mean_y = outcome.mean();
  const double tss = (outcome.array() - mean_y).square().sum();
  fit.r_squared_adj = tss > 0.0 ? 1.0 - sigma2 / (tss / (n - 1)) : 0.0;
  return fit;
}

Interval wald_interval(const GlmFit& fit, const std::string& coef_name, double level) {
  if (!(level > 0.0) || !(level < 1.0)) {
    throw_error(ErrorCode::InvalidInput, "wald_interval: level must lie in (0, 1)");
  }
  const double estimate = fit.coefficient(coef_name);
  const double se = fit.standard_error(coef_name);
  const double z = z_critical(level);
  return Interval{estimate - z * se, estimate + z * se};
}

}  // namespace foodaccess
