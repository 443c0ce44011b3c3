#include "foodaccess/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "foodaccess/errors.hpp"

namespace foodaccess {
namespace csv {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Table read(const std::filesystem::path& path, const std::vector<std::string>& expected_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorCode::IoError, "cannot open " + path.string());
  }
  Table table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (first) {
      table.header = std::move(fields);
      if (!expected_header.empty() && table.header != expected_header) {
        std::string want;
        for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
        throw_error(ErrorCode::InvalidInput,
                    path.string() + ": expected header '" + want + "', got '" + line + "'");
      }
      first = false;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw_error(ErrorCode::InvalidInput,
                  path.string() + ": row has " + std::to_string(fields.size()) +
                      " fields, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (first) {
    throw_error(ErrorCode::InvalidInput, path.string() + ": empty file");
  }
  return table;
}

double parse_double(const std::string& field, const std::string& context) {
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw_error(ErrorCode::InvalidInput, "bad numeric field '" + field + "' (" + context + ")");
  }
  return value;
}

long long parse_int(const std::string& field, const std::string& context) {
  long long value = 0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw_error(ErrorCode::InvalidInput, "bad integer field '" + field + "' (" + context + ")");
  }
  return value;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "NA";
  // round-trippable shortest representation
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

}  // namespace csv

std::vector<Neighborhood> load_neighborhoods(const std::filesystem::path& path) {
  const csv::Table table =
      csv::read(path, {"id", "lat", "lon", "population", "cases", "metro", "county"});
  std::vector<Neighborhood> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Neighborhood nb;
    nb.id = row[0];
    nb.center = make_coordinate(csv::parse_double(row[1], "neighborhood lat"),
                                csv::parse_double(row[2], "neighborhood lon"));
    nb.population = csv::parse_double(row[3], "neighborhood population");
    nb.cases = csv::parse_double(row[4], "neighborhood cases");
    const long long metro = csv::parse_int(row[5], "neighborhood metro");
    if (metro != 0 && metro != 1) {
      throw_error(ErrorCode::InvalidInput, "metro must be 0 or 1 for neighborhood " + nb.id);
    }
    nb.metro = static_cast<int>(metro);
    nb.county = row[6];
    if (!(nb.population > 0) || nb.cases < 0) {
      throw_error(ErrorCode::InvalidInput,
                  "neighborhood " + nb.id + " needs population > 0 and cases >= 0");
    }
    out.push_back(std::move(nb));
  }
  return out;
}

std::vector<Store> load_stores(const std::filesystem::path& path) {
  const csv::Table table = csv::read(path, {"id", "lat", "lon", "category"});
  std::vector<Store> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Store store;
    store.id = row[0];
    store.location = make_coordinate(csv::parse_double(row[1], "store lat"),
                                     csv::parse_double(row[2], "store lon"));
    store.category = row[3];
    out.push_back(std::move(store));
  }
  return out;
}

std::vector<ProximityPair> load_proximity(const std::filesystem::path& path) {
  const csv::Table table = csv::read(path, {"id", "x_star", "x", "queried"});
  std::vector<ProximityPair> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    ProximityPair pair;
    pair.neighborhood_id = row[0];
    pair.x_star = csv::parse_double(row[1], "x_star");
    const long long queried = csv::parse_int(row[3], "queried");
    if (queried != 0 && queried != 1) {
      throw_error(ErrorCode::InvalidInput, "queried must be 0 or 1 for " + pair.neighborhood_id);
    }
    pair.queried = queried == 1;
    if (row[2].empty()) {
      if (pair.queried) {
        throw_error(ErrorCode::InvalidInput,
                    "queried row missing x: " + pair.neighborhood_id);
      }
    } else {
      if (!pair.queried) {
        throw_error(ErrorCode::InvalidInput,
                    "unqueried row carries x: " + pair.neighborhood_id);
      }
      pair.x = csv::parse_double(row[2], "x");
    }
    if (!(pair.x_star >= 0) || (pair.x && !(*pair.x >= 0))) {
      throw_error(ErrorCode::InvalidInput,
                  "negative proximity for " + pair.neighborhood_id);
    }
    out.push_back(std::move(pair));
  }
  return out;
}

void save_proximity(const std::filesystem::path& path, const std::vector<ProximityPair>& pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << "id,x_star,x,queried\n";
  for (const auto& pair : pairs) {
    out << pair.neighborhood_id << ',' << csv::format_double(pair.x_star) << ',';
    if (pair.x) out << csv::format_double(*pair.x);
    out << ',' << (pair.queried ? '1' : '0') << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::filesystem::path& path) {
  const csv::Table table = csv::read(path, {"id_a", "id_b"});
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.emplace_back(row[0], row[1]);
  return out;
}

}  // namespace foodaccess
