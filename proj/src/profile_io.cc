#include "toppkit/profile_io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "toppkit/errors.h"

namespace toppkit {
namespace {

std::string_view Trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

double ParseDouble(std::string_view field, std::size_t line) {
  const std::string copy(Trim(field));
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || errno == ERANGE) {
    throw ContractViolation("line " + std::to_string(line) +
                            ": not a number: '" + copy + "'");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string ProfileToCsv(const SpeedProfile& profile) {
  std::string out = "s,h\n";
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    out += FormatDouble(profile.grid[i]);
    out += ',';
    out += FormatDouble(profile.values[i]);
    out += '\n';
  }
  return out;
}

SpeedProfile ProfileFromCsv(std::string_view text, Provenance provenance) {
  std::vector<double> s;
  std::vector<double> h;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "s,h") {
        throw ContractViolation("line 1: expected header 's,h'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ContractViolation("line " + std::to_string(line_no) +
                              ": expected two columns");
    }
    s.push_back(ParseDouble(line.substr(0, comma), line_no));
    h.push_back(ParseDouble(line.substr(comma + 1), line_no));
  }
  if (!header_seen) throw ContractViolation("empty profile CSV");
  return SpeedProfile(Discretization(std::move(s)), std::move(h), provenance);
}

nlohmann::json ProfileToJson(const SpeedProfile& profile) {
  nlohmann::json j;
  j["grid"] = std::vector<double>(profile.grid.points().begin(),
                                  profile.grid.points().end());
  j["values"] = profile.values;
  j["provenance"] = std::string(ProvenanceName(profile.provenance));
  if (profile.seed) j["seed"] = *profile.seed;
  return j;
}

SpeedProfile ProfileFromJson(const nlohmann::json& j) {
  try {
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    return SpeedProfile(
        Discretization(j.at("grid").get<std::vector<double>>()),
        j.at("values").get<std::vector<double>>(),
        ParseProvenance(j.at("provenance").get<std::string>()), seed);
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("profile JSON: ") + e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace toppkit
