#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "foodaccess/geodistance.hpp"

namespace foodaccess {

/// Source of map-based (network) distances between a neighborhood center
/// and a store. Implementations must be safe to call from multiple
/// threads.
class DistanceProvider {
 public:
  virtual ~DistanceProvider() = default;

  /// Map distance in miles. Throws MissingDistance, BudgetExhausted or
  /// ProviderFailure depending on the backend.
  virtual double distance(const std::string& origin_id, const Coordinate& origin,
                          const std::string& store_id, const Coordinate& store) = 0;

  virtual std::string name() const = 0;
};

/// Precomputed pairwise distances keyed by (origin_id, store_id).
class FileProvider : public DistanceProvider {
 public:
  explicit FileProvider(std::map<std::pair<std::string, std::string>, double> distances)
      : distances_(std::move(distances)) {}

  /// Loads an `origin_id,store_id,miles` CSV.
  static FileProvider from_csv(const std::filesystem::path& path);

  double distance(const std::string& origin_id, const Coordinate& origin,
                  const std::string& store_id, const Coordinate& store) override;

  std::string name() const override { return "file"; }

 private:
  std::map<std::pair<std::string, std::string>, double> distances_;
};

/// Straight-line distance divided by a fixed factor in (0, 1]; stands in
/// for a routing engine in tests and bundled examples.
class SyntheticProvider : public DistanceProvider {
 public:
  explicit SyntheticProvider(double factor, double radius_miles = kEarthRadiusMiles);

  double distance(const std::string& origin_id, const Coordinate& origin,
                  const std::string& store_id, const Coordinate& store) override;

  std::string name() const override { return "synthetic"; }

 private:
  double factor_;
  double radius_miles_;
};

struct RemoteProviderConfig {
  std::string host;                 // e.g. "localhost"
  int port = 80;
  std::string route_path = "/route";
  std::int64_t budget = 0;          // hard cap on outbound requests
  int throttle_ms = 0;              // minimum spacing between requests
  std::filesystem::path cache_path; // append-only origin_id,store_id,miles CSV
  int timeout_s = 10;
};

/// Generic HTTP routing client. POSTs a JSON body
///   {"origin": {"lat": .., "lon": ..}, "destination": {"lat": .., "lon": ..}}
/// to `route_path` and expects {"distance_meters": <number>} back; meters
/// are converted to miles. Responses are cached on disk so repeated
/// queries never consume budget, and the budget is a hard cap.
class RemoteProvider : public DistanceProvider {
 public:
  explicit RemoteProvider(RemoteProviderConfig config);
  ~RemoteProvider() override;

  double distance(const std::string& origin_id, const Coordinate& origin,
                  const std::string& store_id, const Coordinate& store) override;

  std::string name() const override { return "remote"; }

  std::int64_t requests_issued() const;
  std::int64_t budget_remaining() const;

 private:
  double fetch(const Coordinate& origin, const Coordinate& store);

  RemoteProviderConfig config_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, double> cache_;
  std::int64_t issued_ = 0;
  std::chrono::steady_clock::time_point last_request_;
  struct HttpClient;
  std::unique_ptr<HttpClient> client_;
};

}  // namespace foodaccess
