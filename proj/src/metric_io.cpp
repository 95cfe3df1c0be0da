#include "fbms/metric_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fbms {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

WarpProfile load_metric(const std::string& spec) {
  if (spec == "euclidean" || spec == "sphere" || spec == "gaussian-shrinker")
    return make_preset(preset_from_name(spec));

  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown metric: not a preset and not a readable file: " + spec);

  std::string kind, header;
  std::string line;
  std::vector<double> col0, col1;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (kind.empty()) {
      auto eq = line.find('=');
      if (eq == std::string::npos || strip(line.substr(0, eq)) != "kind")
        throw std::invalid_argument("metric config must start with 'kind = warp|conformal'");
      kind = strip(line.substr(eq + 1));
      if (kind != "warp" && kind != "conformal")
        throw std::invalid_argument("metric config kind must be warp or conformal");
      continue;
    }
    if (header.empty()) {
      header = line;
      std::string expect = kind == "warp" ? "r,h" : "s,rho";
      std::string squashed;
      for (char c : header)
        if (!std::isspace(static_cast<unsigned char>(c))) squashed += c;
      if (squashed != expect)
        throw std::invalid_argument("metric table header must be '" + expect + "'");
      continue;
    }
    std::istringstream ss(line);
    std::string f0, f1;
    if (!std::getline(ss, f0, ',') || !std::getline(ss, f1))
      throw std::invalid_argument("bad metric table row: " + line);
    col0.push_back(std::stod(strip(f0)));
    col1.push_back(std::stod(strip(f1)));
  }
  if (col0.size() < 4) throw std::invalid_argument("metric table needs at least 4 rows");
  if (kind == "warp") return from_warp_table(std::move(col0), std::move(col1));
  return from_conformal_table(std::move(col0), std::move(col1));
}

}  // namespace fbms
