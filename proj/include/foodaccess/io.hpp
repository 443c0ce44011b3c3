#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "foodaccess/geodistance.hpp"

namespace foodaccess {
namespace csv {

/// Splits a comma-separated line. The schemas here never quote fields.
std::vector<std::string> split(const std::string& line);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reads a CSV and checks the header matches `expected_header` exactly.
Table read(const std::filesystem::path& path, const std::vector<std::string>& expected_header);

double parse_double(const std::string& field, const std::string& context);
long long parse_int(const std::string& field, const std::string& context);

/// Fixed-precision decimal rendering (LF writers use this for bit-exact
/// reruns); trims trailing zeros.
std::string format_double(double value);

}  // namespace csv

// header: id,lat,lon,population,cases,metro,county
std::vector<Neighborhood> load_neighborhoods(const std::filesystem::path& path);

// header: id,lat,lon,category
std::vector<Store> load_stores(const std::filesystem::path& path);

// header: id,x_star,x,queried (x empty when not queried)
std::vector<ProximityPair> load_proximity(const std::filesystem::path& path);
void save_proximity(const std::filesystem::path& path, const std::vector<ProximityPair>& pairs);

// header: id_a,id_b (undirected edge list)
std::vector<std::pair<std::string, std::string>> load_edge_list(const std::filesystem::path& path);

}  // namespace foodaccess
