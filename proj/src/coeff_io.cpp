// SPDX-License-Identifier: Apache-2.0

#include "sdtn/coeff_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sdtn/format.hpp"

namespace sdtn {

std::string coefficients_to_csv(const BoundaryCoefficients& coeffs) {
  std::string out = "# n=" + std::to_string(coeffs.n) + " R=" + format_double(coeffs.R) + "\n";
  out += "m,j,re,im\n";
  for (const auto& [idx, v] : coeffs.entries) {
    out += std::to_string(idx.m) + "," + std::to_string(idx.j) + "," + format_double(v.real()) +
           "," + format_double(v.imag()) + "\n";
  }
  return out;
}

BoundaryCoefficients coefficients_from_csv(std::istream& in) {
  BoundaryCoefficients coeffs;
  bool have_meta = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string token;
      while (meta >> token) {
        if (token.rfind("n=", 0) == 0) {
          coeffs.n = std::stoi(token.substr(2));
          have_meta = true;
        } else if (token.rfind("R=", 0) == 0) {
          coeffs.R = parse_double(token.substr(2));
        }
      }
      continue;
    }
    if (line.rfind("m,", 0) == 0) continue;  // header
    std::istringstream row(line);
    std::string field;
    int vals_i[2];
    double vals_d[2];
    for (int k = 0; k < 2; ++k) {
      if (!std::getline(row, field, ',')) throw std::runtime_error("coefficients csv: short row");
      vals_i[k] = std::stoi(field);
    }
    for (int k = 0; k < 2; ++k) {
      if (!std::getline(row, field, ',')) throw std::runtime_error("coefficients csv: short row");
      vals_d[k] = parse_double(field);
    }
    if (!have_meta) throw std::runtime_error("coefficients csv: missing '# n=.. R=..' metadata");
    coeffs.set(vals_i[0], vals_i[1], cplx(vals_d[0], vals_d[1]));
  }
  if (!have_meta) throw std::runtime_error("coefficients csv: missing '# n=.. R=..' metadata");
  return coeffs;
}

std::string coefficients_to_json(const BoundaryCoefficients& coeffs) {
  nlohmann::json j;
  j["n"] = coeffs.n;
  j["R"] = coeffs.R;
  j["entries"] = nlohmann::json::array();
  for (const auto& [idx, v] : coeffs.entries)
    j["entries"].push_back({{"m", idx.m}, {"j", idx.j}, {"re", v.real()}, {"im", v.imag()}});
  return j.dump(2) + "\n";
}

BoundaryCoefficients coefficients_from_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  BoundaryCoefficients coeffs;
  coeffs.n = j.at("n").get<int>();
  coeffs.R = j.at("R").get<double>();
  for (const auto& e : j.at("entries"))
    coeffs.set(e.at("m").get<int>(), e.at("j").get<int>(),
               cplx(e.at("re").get<double>(), e.at("im").get<double>()));
  return coeffs;
}

namespace {
bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

BoundaryCoefficients read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficients file: " + path);
  return has_suffix(path, ".json") ? coefficients_from_json(in) : coefficients_from_csv(in);
}

void write_coefficients_file(const std::string& path, const BoundaryCoefficients& coeffs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write coefficients file: " + path);
  out << (has_suffix(path, ".json") ? coefficients_to_json(coeffs) : coefficients_to_csv(coeffs));
}

}  // namespace sdtn
