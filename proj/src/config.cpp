#include "kron/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kron/error.hpp"

namespace kron {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string Config::serialize() const {
  std::ostringstream out;
  out << "subspace_bound = " << subspace_bound << "\n";
  out << "idempotent_bound = " << idempotent_bound << "\n";
  out << "iso_scan_bound = " << iso_scan_bound << "\n";
  out << "tree_search_bound = " << tree_search_bound << "\n";
  out << "census_full_bound = " << census_full_bound << "\n";
  out << "default_p = " << default_p << "\n";
  out << "default_k = " << default_k << "\n";
  out << "sample_size = " << sample_size << "\n";
  out << "sample_seed = " << sample_seed << "\n";
  out << "jobs = " << jobs << "\n";
  return out.str();
}

Config Config::parse(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    try {
      if (key == "subspace_bound") c.subspace_bound = std::stoull(val);
      else if (key == "idempotent_bound") c.idempotent_bound = std::stoull(val);
      else if (key == "iso_scan_bound") c.iso_scan_bound = std::stoull(val);
      else if (key == "tree_search_bound") c.tree_search_bound = std::stoull(val);
      else if (key == "census_full_bound") c.census_full_bound = std::stoull(val);
      else if (key == "default_p") c.default_p = std::stoi(val);
      else if (key == "default_k") c.default_k = std::stoi(val);
      else if (key == "sample_size") c.sample_size = std::stoull(val);
      else if (key == "sample_seed") c.sample_seed = std::stoull(val);
      else if (key == "jobs") c.jobs = std::stoi(val);
      else
        throw ParseError("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw ParseError("config: bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("config: value out of range for '" + key + "'");
    }
  }
  for (auto bound : {c.subspace_bound, c.idempotent_bound, c.iso_scan_bound,
                     c.tree_search_bound, c.census_full_bound})
    if (bound == 0) throw ParseError("config: bounds must be positive");
  if (c.jobs < 1) throw ParseError("config: jobs must be positive");
  return c;
}

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Config Config::from_environment() {
  const char* path = std::getenv("KRON3_CONFIG");
  if (path && *path) return load_file(path);
  return Config{};
}

}  // namespace kron
