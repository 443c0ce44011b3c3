#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace foodaccess {

inline constexpr double kEarthRadiusMiles = 3958.8;
inline constexpr double kMetersPerMile = 1609.344;

/// Latitude/longitude in decimal degrees.
struct Coordinate {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

/// Throws InvalidInput unless both fields are finite and in range
/// ([-90, 90] latitude, [-180, 180] longitude).
void validate_coordinate(const Coordinate& c);

Coordinate make_coordinate(double lat_deg, double lon_deg);

/// Great-circle (shortest arc) distance between two points, in the units
/// of `radius_miles`. Symmetric, nonnegative, zero for identical points.
double haversine_distance(const Coordinate& a, const Coordinate& b,
                          double radius_miles = kEarthRadiusMiles);

struct Store {
  std::string id;
  Coordinate location;
  std::string category;
};

struct Neighborhood {
  std::string id;
  Coordinate center;     // population-weighted centroid, precomputed upstream
  double population = 0;
  double cases = 0;
  int metro = 0;         // 1 when the tract is metropolitan
  std::string county;
};

/// One neighborhood's two-phase proximity record: straight-line x_star for
/// everyone, map-based x only where queried.
struct ProximityPair {
  std::string neighborhood_id;
  double x_star = 0.0;
  std::optional<double> x;
  bool queried = false;
};

struct StraightLineProximity {
  double miles = 0.0;
  std::string nearest_store_id;
};

/// Minimum straight-line distance from `center` over all stores.
StraightLineProximity straight_line_proximity(const Coordinate& center,
                                              const std::vector<Store>& stores,
                                              double radius_miles = kEarthRadiusMiles);

/// The floor(M * percentile) nearest stores by straight-line distance
/// (at least one; ties broken by store input order), nearest first.
std::vector<std::string> candidate_stores(const Coordinate& center,
                                          const std::vector<Store>& stores,
                                          double percentile,
                                          double radius_miles = kEarthRadiusMiles);

class DistanceProvider;

struct MapProximity {
  double miles = 0.0;
  std::string nearest_store_id;
};

struct ProximityOptions {
  double percentile = 0.2;
  double radius_miles = kEarthRadiusMiles;
  /// Provider distances are expected to be >= straight-line minus this
  /// slack; smaller values are reported as warnings, never errors.
  double shortfall_tolerance_miles = 1e-6;
  int threads = 1;
};

/// Minimum provider distance over the candidate stores. Individual pair
/// distances are discarded; only the minimum is returned. Provider or
/// budget failures surface as PartialResult naming the neighborhood.
MapProximity map_proximity(const std::string& center_id, const Coordinate& center,
                           const std::vector<Store>& candidates,
                           DistanceProvider& provider,
                           const ProximityOptions& options,
                           std::vector<std::string>* warnings = nullptr);

struct ProximityTable {
  std::vector<ProximityPair> pairs;  // ordered by neighborhood id
  std::vector<std::string> warnings;
};

/// Fills x_star for every neighborhood and x for those in `query_set`
/// (via percentile-pruned candidates and the provider). `provider` may be
/// null when `query_set` is empty.
ProximityTable build_proximity_table(const std::vector<Neighborhood>& neighborhoods,
                                     const std::vector<Store>& stores,
                                     DistanceProvider* provider,
                                     const std::set<std::string>& query_set,
                                     const ProximityOptions& options = {});

}  // namespace foodaccess
