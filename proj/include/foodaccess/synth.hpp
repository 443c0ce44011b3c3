#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "foodaccess/dataset.hpp"
#include "foodaccess/rng.hpp"

namespace foodaccess {

/// Draw from Normal(mu, sigma) conditioned on [lower, upper], by inverse
/// CDF of a uniform restricted to the interval's probability mass.
/// Bounds may be infinite. Throws DegenerateTruncation when the interval
/// mass falls below 1e-300.
double sample_truncated_normal(double mu, double sigma, double lower, double upper, Rng& rng);

enum class ErrorMechanism { Additive, Multiplicative };

/// Scenario configuration for simulated two-phase data. Defaults are the
/// moderate additive setting: X ~ gamma(1, 2.5) miles, error
/// TN(-0.7, 0.8, -X, 0), Pop ~ Poisson(4095), 11% baseline prevalence.
struct SimConfig {
  int n = 387;
  double q = 0.1;  // queried fraction, (0, 1]
  ErrorMechanism mechanism = ErrorMechanism::Additive;
  double error_mu = -0.7;     // mu_U (additive, <= 0) or mu_W (multiplicative, in (0,1))
  double error_sigma = 0.8;   // sigma_U or sigma_W, > 0
  double beta0 = -2.2;        // log baseline prevalence
  double beta1 = 0.01;        // log prevalence ratio per mile
  double gamma_shape = 1.0;
  double gamma_scale = 2.5;
  double pop_mean = 4095.0;
  int b = 20;                 // imputations
  int replicates = 1000;
  std::uint64_t seed = 0;
  std::string label;

  void validate() const;
};

struct SimulatedDataset {
  Dataset data;             // x filled for every row; queried marks Phase II
  Eigen::VectorXd error;    // the U (additive) or W (multiplicative) draws
};

SimulatedDataset generate_additive(const SimConfig& config, Rng& rng);
SimulatedDataset generate_multiplicative(const SimConfig& config, Rng& rng);

/// Dispatches on config.mechanism.
SimulatedDataset generate(const SimConfig& config, Rng& rng);

/// Exactly nearest-integer(n * q) true entries placed uniformly at random.
std::vector<std::uint8_t> assign_queried(int n, double q, Rng& rng);

/// Uniform without-replacement sample of `per_stratum` ids from every
/// stratum (strata processed in sorted key order for determinism).
std::set<std::string> stratified_query_sample(const std::vector<std::string>& ids,
                                              const std::vector<std::string>& strata,
                                              int per_stratum, Rng& rng);

}  // namespace foodaccess
