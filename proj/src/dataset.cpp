#include "foodaccess/dataset.hpp"

#include <cmath>

#include "foodaccess/errors.hpp"

namespace foodaccess {

Eigen::Index Dataset::n_queried() const {
  Eigen::Index count = 0;
  for (const auto q : queried) count += q ? 1 : 0;
  return count;
}

void Dataset::validate() const {
  const auto n = static_cast<std::size_t>(y.size());
  if (ids.size() != n || static_cast<std::size_t>(pop.size()) != n ||
      static_cast<std::size_t>(x_star.size()) != n || x.size() != n || queried.size() != n) {
    throw_error(ErrorCode::InvalidInput, "dataset: field lengths disagree");
  }
  if (z_names.empty() ? z.size() != 0 : (static_cast<std::size_t>(z.rows()) != n ||
                                         static_cast<std::size_t>(z.cols()) != z_names.size())) {
    throw_error(ErrorCode::InvalidInput, "dataset: covariate block shape mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    // x present but unqueried is legal: simulated data keep the truth for
    // the gold standard while the two-phase flag hides it elsewhere.
    if (queried[i] && !x[i].has_value()) {
      throw_error(ErrorCode::InvalidInput, "dataset: queried row " + ids[i] + " missing x");
    }
    const auto idx = static_cast<Eigen::Index>(i);
    if (!(x_star[idx] >= 0.0) || !std::isfinite(x_star[idx]) ||
        (x[i] && (!(*x[i] >= 0.0) || !std::isfinite(*x[i])))) {
      throw_error(ErrorCode::InvalidInput, "dataset: bad proximity for row " + ids[i]);
    }
    if (!(y[idx] >= 0.0) || !(pop[idx] > 0.0)) {
      throw_error(ErrorCode::InvalidInput, "dataset: bad counts for row " + ids[i]);
    }
  }
}

}  // namespace foodaccess
