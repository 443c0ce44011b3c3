#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace foodaccess {

/// A two-phase analysis dataset: straight-line proximity for every row,
/// map-based proximity only where queried. Simulated datasets carry the
/// true x everywhere; estimators other than the gold standard must only
/// read x through the queried flag.
struct Dataset {
  std::vector<std::string> ids;
  Eigen::VectorXd y;        // outcome counts
  Eigen::VectorXd pop;      // population offsets (counts)
  Eigen::VectorXd x_star;   // straight-line proximity, miles
  std::vector<std::optional<double>> x;  // map-based proximity where known
  std::vector<std::uint8_t> queried;
  std::vector<std::string> z_names;  // fully observed covariates, may be empty
  Eigen::MatrixXd z;                 // n x z_names.size()

  Eigen::Index size() const { return y.size(); }
  Eigen::Index n_queried() const;

  /// Throws InvalidInput when field lengths disagree, x presence does not
  /// match the queried flag, or proximities are negative/non-finite.
  void validate() const;
};

}  // namespace foodaccess
