#include "ks/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <unordered_set>

namespace ks {

const std::vector<std::string> &default_profile_targets() {
  static const std::vector<std::string> targets = {
      "35_2 1_6-19_4",      "33_2 1_4 1_6-19_4", "31_2 2_4 1_6-19_4", "29_2 3_4 1_6-19_4",
      "39_2 1_6-21_4",      "37_2 1_4 1_6-21_4", "35_2 2_4 1_6-21_4", "33_2 3_4 1_6-21_4",
      "31_2 4_4 1_6-21_4",  "29_2 5_4 1_6-21_4", "43_2 1_6-23_4",     "41_2 1_4 1_6-23_4",
      "39_2 2_4 1_6-23_4",  "37_2 3_4 1_6-23_4", "35_2 4_4 1_6-23_4", "29_2 7_4 1_6-23_4",
      "36_2 11_4-29_4",     "37_2 9_4 1_6-29_4", "38_2 7_4 2_6-29_4", "39_2 5_4 3_6-29_4",
      "40_2 3_4 4_6-29_4",  "42_2 10_4-31_4",    "43_2 8_4 1_6-31_4", "44_2 6_4 2_6-31_4",
      "45_2 4_4 3_6-31_4",  "46_2 2_4 4_6-31_4",
  };
  return targets;
}

namespace {

struct Target {
  std::string symbol;
  ProofProfile profile;
  bool found = false;
};

// Incremental GF(2) column basis: each pivot row remembers which kept
// columns combine to it, so a dependent column yields a kernel vector.
class ColumnEliminator {
public:
  bool add(int column, RayMask mask, std::vector<BasisSet> &kernel) {
    BasisSet combo;
    combo.set(column);
    for (const auto &[pivot, row] : rows_) {
      if ((mask >> pivot) & 1) {
        mask ^= row.first;
        combo ^= row.second;
      }
    }
    if (mask == 0) {
      kernel.push_back(combo);
      return false;
    }
    rows_.push_back({std::countr_zero(mask), {mask, combo}});
    return true;
  }

private:
  std::vector<std::pair<int, std::pair<RayMask, BasisSet>>> rows_;
};

} // namespace

ProfileSearchResult search_profiles(Catalog &catalog, const ProfileSearchOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  std::vector<std::string> addresses = options.systems;
  if (addresses.empty()) {
    for (const char *kind : {"48-72", "48-60"})
      for (int c = 1; c <= 6; ++c)
        for (int k = 1; k <= 5; ++k)
          addresses.push_back(std::string(kind) + ":" + std::to_string(c) + "," + std::to_string(k));
    addresses.push_back("60-105");
  }

  std::vector<Target> targets;
  std::map<int, std::vector<int>> by_size;  // basis count -> target indices
  for (const auto &s : options.targets) {
    targets.push_back({s, parse_expanded_symbol(s), false});
    by_size[targets.back().profile.bases].push_back(static_cast<int>(targets.size()) - 1);
  }
  std::vector<ProfileHit> hits(targets.size());

  std::mt19937_64 rng(options.seed);
  std::unordered_set<BasisSet, BasisSetHash> tested;
  ProfileSearchResult result;
  int remaining = static_cast<int>(targets.size());

  while (remaining > 0 && result.trials < options.max_trials &&
         elapsed() < options.time_budget_seconds) {
    // The whole system gets every other trial; subsystems share the rest.
    const bool has_full = addresses.back() == "60-105";
    const std::size_t slot = has_full && addresses.size() > 1
                                 ? (result.trials % 2 ? addresses.size() - 1
                                                      : (result.trials / 2) % (addresses.size() - 1))
                                 : result.trials % addresses.size();
    const std::string &address = addresses[slot];
    const RaySystem &sys = catalog.system(address);
    const std::int64_t trial = result.trials++;

    std::vector<int> order;
    std::vector<char> taken(sys.basis_count(), 0);
    // Forced rays: all their bases are kept.
    // Either random rays, or the rays of one pure basis followed by random
    // ones (four multiplicity-6 rays tend to share a pure basis).
    std::vector<int> rays(sys.ray_count());
    for (int r = 0; r < sys.ray_count(); ++r) rays[r] = r;
    std::shuffle(rays.begin(), rays.end(), rng);
    int forced = std::uniform_int_distribution<int>(0, options.max_forced_rays)(rng);
    const int pure = sys.count_kind(BasisKind::Pure);
    if (pure > 0 && (rng() & 1)) {
      const auto &basis = sys.basis(std::uniform_int_distribution<int>(0, pure - 1)(rng));
      std::vector<int> front(basis.rays.begin(), basis.rays.end());
      for (int r : rays)
        if (std::find(front.begin(), front.end(), r) == front.end()) front.push_back(r);
      rays = front;
      forced = std::max(forced, 4);
    }
    for (int i = 0; i < forced && i < sys.ray_count(); ++i)
      sys.bases_of_ray(rays[i]).for_each([&](int b) {
        if (!taken[b]) {
          taken[b] = 1;
          order.push_back(b);
        }
      });
    std::vector<int> rest;
    for (int b = 0; b < sys.basis_count(); ++b)
      if (!taken[b]) rest.push_back(b);
    std::shuffle(rest.begin(), rest.end(), rng);
    order.insert(order.end(), rest.begin(), rest.end());

    ColumnEliminator elim;
    KernelBasis kernel;
    for (int b : order) {
      if (kernel.dimension() >= options.kernel_dimension) break;
      elim.add(b, sys.basis_mask(b), kernel.vectors);
    }

    std::vector<int> mult(sys.ray_count());
    for_each_odd_kernel_vector(kernel, 62, [&](const BasisSet &v) {
      auto it = by_size.find(v.count());
      if (it == by_size.end()) return;
      std::fill(mult.begin(), mult.end(), 0);
      v.for_each([&](int b) {
        for (int r : sys.basis(b).rays) ++mult[r];
      });
      std::map<int, int> hist;
      int ray_total = 0;
      for (int m : mult)
        if (m) {
          ++hist[m];
          ++ray_total;
        }
      for (int ti : it->second) {
        Target &t = targets[ti];
        if (t.found || t.profile.rays != ray_total) continue;
        if (!std::equal(t.profile.terms.begin(), t.profile.terms.end(), hist.begin(), hist.end(),
                        [](const std::pair<int, int> &a, const auto &b) {
                          return a.first == b.first && a.second == b.second;
                        }))
          continue;
        if (!tested.insert(v).second) continue;
        ++result.candidates_checked;
        if (!is_basis_critical(sys, v)) continue;
        t.found = true;
        --remaining;
        ProfileHit &h = hits[ti];
        h.target = t.symbol;
        h.system = address;
        h.trial = trial;
        for (int b : v.ids()) {
          h.basis_ids.push_back(b + 1);
          h.full_basis_ids.push_back(sys.parent_basis(b) + 1);
        }
        std::sort(h.full_basis_ids.begin(), h.full_basis_ids.end());
      }
    });
  }

  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].found) result.hits.push_back(hits[i]);
    else result.missing.push_back(targets[i].symbol);
  }
  result.seconds = elapsed();
  return result;
}

} // namespace ks
