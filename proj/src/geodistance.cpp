#include "foodaccess/geodistance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "foodaccess/errors.hpp"
#include "foodaccess/io.hpp"
#include "foodaccess/parallel.hpp"
#include "foodaccess/providers.hpp"

namespace foodaccess {

namespace {
constexpr double kDegToRad = 0.017453292519943295;
}

void validate_coordinate(const Coordinate& c) {
  if (!std::isfinite(c.lat_deg) || !std::isfinite(c.lon_deg) ||
      c.lat_deg < -90.0 || c.lat_deg > 90.0 || c.lon_deg < -180.0 || c.lon_deg > 180.0) {
    throw_error(ErrorCode::InvalidInput,
                "coordinate out of range: lat=" + std::to_string(c.lat_deg) +
                    " lon=" + std::to_string(c.lon_deg));
  }
}

Coordinate make_coordinate(double lat_deg, double lon_deg) {
  Coordinate c{lat_deg, lon_deg};
  validate_coordinate(c);
  return c;
}

double haversine_distance(const Coordinate& a, const Coordinate& b, double radius_miles) {
  validate_coordinate(a);
  validate_coordinate(b);
  if (!(radius_miles > 0.0) || !std::isfinite(radius_miles)) {
    throw_error(ErrorCode::InvalidInput, "haversine_distance: radius must be positive");
  }
  const double lat1 = a.lat_deg * kDegToRad;
  const double lat2 = b.lat_deg * kDegToRad;
  const double dlat = (b.lat_deg - a.lat_deg) * kDegToRad;
  const double dlon = (b.lon_deg - a.lon_deg) * kDegToRad;
  const double sin_dlat = std::sin(0.5 * dlat);
  const double sin_dlon = std::sin(0.5 * dlon);
  const double h = sin_dlat * sin_dlat + std::cos(lat1) * std::cos(lat2) * sin_dlon * sin_dlon;
  // clamp guards rounding at antipodes
  return 2.0 * radius_miles * std::asin(std::min(1.0, std::sqrt(h)));
}

StraightLineProximity straight_line_proximity(const Coordinate& center,
                                              const std::vector<Store>& stores,
                                              double radius_miles) {
  if (stores.empty()) {
    throw_error(ErrorCode::InvalidInput, "straight_line_proximity: store list is empty");
  }
  StraightLineProximity best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& store : stores) {
    const double d = haversine_distance(center, store.location, radius_miles);
    if (d < best.miles) {
      best.miles = d;
      best.nearest_store_id = store.id;
    }
  }
  return best;
}

std::vector<std::string> candidate_stores(const Coordinate& center,
                                          const std::vector<Store>& stores,
                                          double percentile, double radius_miles) {
  if (stores.empty()) {
    throw_error(ErrorCode::InvalidInput, "candidate_stores: store list is empty");
  }
  if (!(percentile > 0.0) || percentile > 1.0) {
    throw_error(ErrorCode::InvalidInput, "candidate_stores: percentile must lie in (0, 1]");
  }
  const std::size_t m = stores.size();
  const std::size_t keep =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(percentile * static_cast<double>(m))));
  std::vector<double> dist(m);
  for (std::size_t j = 0; j < m; ++j) {
    dist[j] = haversine_distance(center, stores[j].location, radius_miles);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  // ties keep store input order
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return dist[i] < dist[j]; });
  std::vector<std::string> ids;
  ids.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) ids.push_back(stores[order[k]].id);
  return ids;
}

MapProximity map_proximity(const std::string& center_id, const Coordinate& center,
                           const std::vector<Store>& candidates, DistanceProvider& provider,
                           const ProximityOptions& options, std::vector<std::string>* warnings) {
  if (candidates.empty()) {
    throw_error(ErrorCode::InvalidInput, "map_proximity: candidate list is empty");
  }
  MapProximity best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& store : candidates) {
    double d = 0.0;
    try {
      d = provider.distance(center_id, center, store.id, store.location);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExhausted || e.code() == ErrorCode::ProviderFailure) {
        throw_error(ErrorCode::PartialResult,
                    "map_proximity: neighborhood " + center_id + " incomplete: " + e.what());
      }
      throw;
    }
    if (warnings != nullptr) {
      const double straight = haversine_distance(center, store.location, options.radius_miles);
      if (d < straight - options.shortfall_tolerance_miles) {
        warnings->push_back("provider distance " + csv::format_double(d) +
                            " mi below straight-line " + csv::format_double(straight) +
                            " mi for pair (" + center_id + "," + store.id + ")");
      }
    }
    if (d < best.miles) {
      best.miles = d;
      best.nearest_store_id = store.id;
    }
  }
  return best;
}

ProximityTable build_proximity_table(const std::vector<Neighborhood>& neighborhoods,
                                     const std::vector<Store>& stores,
                                     DistanceProvider* provider,
                                     const std::set<std::string>& query_set,
                                     const ProximityOptions& options) {
  if (neighborhoods.empty()) {
    throw_error(ErrorCode::InvalidInput, "build_proximity_table: no neighborhoods");
  }
  std::unordered_set<std::string> seen;
  for (const auto& nb : neighborhoods) {
    if (!seen.insert(nb.id).second) {
      throw_error(ErrorCode::InvalidInput, "duplicate neighborhood id: " + nb.id);
    }
  }
  for (const auto& id : query_set) {
    if (seen.find(id) == seen.end()) {
      throw_error(ErrorCode::InvalidInput, "query set id not in neighborhoods: " + id);
    }
  }
  if (!query_set.empty() && provider == nullptr) {
    throw_error(ErrorCode::InvalidInput, "build_proximity_table: query set given without provider");
  }

  std::vector<const Neighborhood*> ordered;
  ordered.reserve(neighborhoods.size());
  for (const auto& nb : neighborhoods) ordered.push_back(&nb);
  std::sort(ordered.begin(), ordered.end(),
            [](const Neighborhood* a, const Neighborhood* b) { return a->id < b->id; });

  std::unordered_map<std::string, const Store*> store_by_id;
  store_by_id.reserve(stores.size());
  for (const auto& store : stores) store_by_id.emplace(store.id, &store);

  std::vector<ProximityPair> pairs(ordered.size());
  std::vector<std::vector<std::string>> warn_slots(ordered.size());

  parallel_for(ordered.size(), options.threads, [&](std::size_t i) {
    const Neighborhood& nb = *ordered[i];
    ProximityPair pair;
    pair.neighborhood_id = nb.id;
    pair.x_star = straight_line_proximity(nb.center, stores, options.radius_miles).miles;
    if (query_set.count(nb.id) != 0) {
      std::vector<Store> candidates;
      for (const auto& id : candidate_stores(nb.center, stores, options.percentile, options.radius_miles)) {
        candidates.push_back(*store_by_id.at(id));
      }
      const MapProximity mp =
          map_proximity(nb.id, nb.center, candidates, *provider, options, &warn_slots[i]);
      pair.x = mp.miles;
      pair.queried = true;
      if (*pair.x < pair.x_star - options.shortfall_tolerance_miles) {
        warn_slots[i].push_back("neighborhood " + nb.id + ": map proximity " +
                                csv::format_double(*pair.x) + " mi below straight-line " +
                                csv::format_double(pair.x_star) + " mi");
      }
    }
    pairs[i] = std::move(pair);
  });

  ProximityTable table;
  table.pairs = std::move(pairs);
  for (auto& slot : warn_slots) {
    table.warnings.insert(table.warnings.end(), slot.begin(), slot.end());
  }
  return table;
}

}  // namespace foodaccess
