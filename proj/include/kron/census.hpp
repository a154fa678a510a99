#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kron/config.hpp"
#include "kron/rep.hpp"

namespace kron {

enum class CensusMode { Full, Sample };

struct CensusOptions {
  DimVec d;
  int p = 2, k = 1;
  CensusMode mode = CensusMode::Full;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  int jobs = 1;
  // Sample mode: also evaluate the full conjugation orbit of the expected
  // normal form at this dimension vector (classified via its representative).
  bool include_normal_form_orbit = true;
  bool check_elementary = true;
  bool check_a_equiv = true;   // honored at (1,1), (2,1), (2,2), (4,2)
  bool check_tree = true;      // honored at (2,2)
  bool check_nonelem_nf = true;  // honored at (2,2)
  Config limits;
};

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t decomposable = 0;
  std::uint64_t indecomposable = 0;
  std::uint64_t scalar_local = 0;
  // The remaining counts live inside the scalar-local stratum; over a
  // finite field the classification statements are asserted only there.
  std::uint64_t elementary = 0;
  std::uint64_t a_equiv_to_normal_form = 0;
  std::uint64_t tree_modules = 0;
};

struct CensusAnomaly {
  std::uint64_t index = 0;   // encoding of the representation
  std::uint64_t weight = 1;  // orbit size in full mode
  std::string kind;
  nlohmann::ordered_json rep;
};

struct CensusReport {
  DimVec d;
  int p = 2, k = 1;
  CensusMode mode = CensusMode::Full;
  std::uint64_t space_size = 0;
  std::uint64_t samples = 0, seed = 0;
  std::uint64_t forced_members = 0;
  std::uint64_t orbit_count = 0;
  CensusCounts counts;
  std::vector<CensusAnomaly> anomalies;
  std::vector<std::string> notes;
  std::string verdict;  // "pass" | "closure-gap" | "fail"
  double seconds = 0;   // excluded from determinism comparisons

  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string to_csv() const;
};

// q^(3 d1 d2); UINT64_MAX when it does not fit 64 bits.
std::uint64_t rep_space_size(DimVec d, int q);

// Index codec: entry (rho, r, c) is digit rho*d1*d2 + r*d1 + c of the index
// written base q, least significant digit first.
std::uint64_t encode_rep(const KronRep& m);
KronRep decode_rep(std::uint64_t index, DimVec d, const FieldPtr& f);

// Full-order enumeration of all triples; Refusal (naming the count) when
// the space exceeds `bound`.
void enumerate_reps(DimVec d, const FieldPtr& f,
                    const std::function<void(std::uint64_t, const KronRep&)>& fn,
                    std::uint64_t bound);

// GL_{d1} x GL_{d2} orbit of the given representation as encoded indices.
std::vector<std::uint64_t> conjugation_orbit(const KronRep& m);

CensusReport run_census(const CensusOptions& opts);

struct TheoremReport {
  int p = 2, k = 1;
  std::vector<CensusReport> censuses;
  bool corollary_ok = false;
  std::vector<std::string> corollary_notes;
  bool closure_gap = false;
  bool pass = false;
  double seconds = 0;

  nlohmann::ordered_json to_json(bool include_timing = true) const;
};

// Censuses at (1,1), (2,1), (2,2), (3,2), (3,3) (full where the space fits
// the configured bound, sampled otherwise) and (4,2) sampled, followed by
// the Tits-form cross-check on every regular dimension vector with
// x + y <= 8.
TheoremReport verify_theorem(int p, int k, const Config& limits, int jobs);

}  // namespace kron
