#include "foodaccess/providers.hpp"

#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "foodaccess/errors.hpp"
#include "foodaccess/io.hpp"

namespace foodaccess {

FileProvider FileProvider::from_csv(const std::filesystem::path& path) {
  std::map<std::pair<std::string, std::string>, double> distances;
  const csv::Table table = csv::read(path, {"origin_id", "store_id", "miles"});
  for (const auto& row : table.rows) {
    distances[{row[0], row[1]}] = csv::parse_double(row[2], "distance cache miles");
  }
  return FileProvider(std::move(distances));
}

double FileProvider::distance(const std::string& origin_id, const Coordinate&,
                              const std::string& store_id, const Coordinate&) {
  const auto it = distances_.find({origin_id, store_id});
  if (it == distances_.end()) {
    throw_error(ErrorCode::MissingDistance,
                "no precomputed distance for pair (" + origin_id + "," + store_id + ")");
  }
  return it->second;
}

SyntheticProvider::SyntheticProvider(double factor, double radius_miles)
    : factor_(factor), radius_miles_(radius_miles) {
  if (!(factor > 0.0) || factor > 1.0) {
    throw_error(ErrorCode::InvalidConfig, "SyntheticProvider: factor must lie in (0, 1]");
  }
}

double SyntheticProvider::distance(const std::string&, const Coordinate& origin,
                                   const std::string&, const Coordinate& store) {
  return haversine_distance(origin, store, radius_miles_) / factor_;
}

struct RemoteProvider::HttpClient {
  explicit HttpClient(const RemoteProviderConfig& config)
      : impl(config.host, config.port) {
    impl.set_connection_timeout(config.timeout_s);
    impl.set_read_timeout(config.timeout_s);
  }
  httplib::Client impl;
};

RemoteProvider::RemoteProvider(RemoteProviderConfig config)
    : config_(std::move(config)),
      last_request_(std::chrono::steady_clock::now() -
                    std::chrono::milliseconds(config_.throttle_ms)),
      client_(std::make_unique<HttpClient>(config_)) {
  if (!config_.cache_path.empty() && std::filesystem::exists(config_.cache_path)) {
    const csv::Table table = csv::read(config_.cache_path, {"origin_id", "store_id", "miles"});
    for (const auto& row : table.rows) {
      cache_[{row[0], row[1]}] = csv::parse_double(row[2], "distance cache miles");
    }
  } else if (!config_.cache_path.empty()) {
    std::ofstream out(config_.cache_path, std::ios::binary);
    out << "origin_id,store_id,miles\n";
  }
}

RemoteProvider::~RemoteProvider() = default;

std::int64_t RemoteProvider::requests_issued() const {
  std::lock_guard lock(mutex_);
  return issued_;
}

std::int64_t RemoteProvider::budget_remaining() const {
  std::lock_guard lock(mutex_);
  return config_.budget - issued_;
}

double RemoteProvider::fetch(const Coordinate& origin, const Coordinate& store) {
  nlohmann::json request = {
      {"origin", {{"lat", origin.lat_deg}, {"lon", origin.lon_deg}}},
      {"destination", {{"lat", store.lat_deg}, {"lon", store.lon_deg}}},
  };
  const auto result = client_->impl.Post(config_.route_path, request.dump(), "application/json");
  if (!result || result->status != 200) {
    throw_error(ErrorCode::ProviderFailure,
                "routing request failed" +
                    (result ? " with status " + std::to_string(result->status)
                            : std::string(" (no response)")));
  }
  try {
    const nlohmann::json body = nlohmann::json::parse(result->body);
    return body.at("distance_meters").get<double>() / kMetersPerMile;
  } catch (const nlohmann::json::exception& e) {
    throw_error(ErrorCode::ProviderFailure, std::string("bad routing response: ") + e.what());
  }
}

double RemoteProvider::distance(const std::string& origin_id, const Coordinate& origin,
                                const std::string& store_id, const Coordinate& store) {
  // Single lock across lookup + fetch keeps the budget a hard cap and the
  // throttle a true minimum spacing; routing calls are slow anyway.
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(origin_id, store_id);
  const auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;  // cache hits never consume budget
  if (issued_ >= config_.budget) {
    throw_error(ErrorCode::BudgetExhausted,
                "query budget of " + std::to_string(config_.budget) + " exhausted");
  }
  if (config_.throttle_ms > 0) {
    const auto earliest = last_request_ + std::chrono::milliseconds(config_.throttle_ms);
    const auto now = std::chrono::steady_clock::now();
    if (now < earliest) std::this_thread::sleep_for(earliest - now);
  }
  const double miles = fetch(origin, store);
  last_request_ = std::chrono::steady_clock::now();
  ++issued_;
  cache_.emplace(key, miles);
  if (!config_.cache_path.empty()) {
    std::ofstream out(config_.cache_path, std::ios::binary | std::ios::app);
    out << origin_id << ',' << store_id << ',' << csv::format_double(miles) << '\n';
  }
  return miles;
}

}  // namespace foodaccess
