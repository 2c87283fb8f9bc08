#pragma once

// Randomized search for critical parity proofs with prescribed expanded
// symbols in systems whose full kernel is too large to enumerate. Each trial
// keeps a random set of bases (always including every basis of a few
// randomly chosen rays, so high multiplicities are reachable) just large
// enough for the kept columns to have a kernel of the requested dimension,
// then enumerates that kernel exhaustively.

#include <cstdint>
#include <string>
#include <vector>

#include "ks/io.hpp"
#include "ks/parity.hpp"

namespace ks {

/// Expanded symbols of the 19, 21, 23, 29 and 31 basis critical proofs
/// that the search looks for by default.
const std::vector<std::string> &default_profile_targets();

struct ProfileSearchOptions {
  std::vector<std::string> targets = default_profile_targets();
  std::vector<std::string> systems;  // addresses; empty means all 48-72, 48-60 and 60-105
  std::uint64_t seed = 20111;
  int kernel_dimension = 18;
  int max_forced_rays = 4;
  std::int64_t max_trials = 1'000'000;
  double time_budget_seconds = 600.0;
};

struct ProfileHit {
  std::string target;
  std::string system;
  std::vector<int> basis_ids;         // 1-based, in the system
  std::vector<int> full_basis_ids;    // 1-based, in the 60-105 system
  std::int64_t trial = 0;
};

struct ProfileSearchResult {
  std::vector<ProfileHit> hits;        // target order
  std::vector<std::string> missing;    // target order
  std::int64_t trials = 0;
  std::int64_t candidates_checked = 0;  // criticality tests run
  double seconds = 0.0;
};

ProfileSearchResult search_profiles(Catalog &catalog, const ProfileSearchOptions &options);

} // namespace ks
