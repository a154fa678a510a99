#pragma once

#include <cstdint>
#include <string>

namespace kron {

// Bounds and defaults shared by the CLI and the census engine. Loaded from
// a `key = value` text file; the KRON3_CONFIG environment variable names an
// alternative path.
struct Config {
  std::uint64_t subspace_bound = 1ull << 24;
  std::uint64_t idempotent_bound = 1ull << 20;
  std::uint64_t iso_scan_bound = 1ull << 20;
  std::uint64_t tree_search_bound = 10000000;
  std::uint64_t census_full_bound = 1ull << 28;
  int default_p = 2;
  int default_k = 1;
  std::uint64_t sample_size = 100000;
  std::uint64_t sample_seed = 42;
  int jobs = 1;

  std::string serialize() const;
  static Config parse(const std::string& text);
  static Config load_file(const std::string& path);
  // Default config, overridden by the file named in KRON3_CONFIG when set.
  static Config from_environment();
};

}  // namespace kron
