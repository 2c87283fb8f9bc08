#include "ks/subsystems.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "ks/parity.hpp"
#include "ks/pauli.hpp"
#include "ks/symmetry.hpp"

namespace ks {

namespace {

RayMask triad_mask(const RaySystem &full, int triad) {
  RayMask m = 0;
  for (int r = 0; r < full.ray_count(); ++r)
    if (full.ray_triad(r) == triad) m |= RayMask{1} << r;
  return m;
}

RayMask all_rays(const RaySystem &s) {
  return s.ray_count() == 64 ? ~RayMask{0} : (RayMask{1} << s.ray_count()) - 1;
}

} // namespace

RaySystem drop_mub_row(const RaySystem &full, int row) {
  const auto &rows = mub_partitions();
  if (row < 1 || row > static_cast<int>(rows.size()))
    throw std::out_of_range("MUB row must be in 1.." + std::to_string(rows.size()));
  RayMask dropped = 0;
  for (int t : rows[row - 1]) dropped |= triad_mask(full, t);
  return restrict_system(full, "40-40:" + std::to_string(row), all_rays(full) & ~dropped);
}

std::vector<Dodecagon> find_dodecagons(const RaySystem &full) {
  const auto &triads = enumerate_triads();
  const auto &observables = enumerate_observables();
  const int nt = static_cast<int>(triads.size());

  std::vector<RayMask> orth(full.ray_count(), 0);
  for (int a = 0; a < full.ray_count(); ++a)
    for (int b = 0; b < full.ray_count(); ++b)
      if (a != b && is_orthogonal(full.ray(a), full.ray(b))) orth[a] |= RayMask{1} << b;

  std::vector<Dodecagon> out;
  std::set<RayMask> seen;
  for (int a = 0; a < nt; ++a)
    for (int b = a + 1; b < nt; ++b)
      for (int c = b + 1; c < nt; ++c) {
        if (shared_observables(triads[a], triads[b]) != 1 ||
            shared_observables(triads[a], triads[c]) != 1 ||
            shared_observables(triads[b], triads[c]) != 1)
          continue;
        RayMask rays = triad_mask(full, a) | triad_mask(full, b) | triad_mask(full, c);
        bool uniform = true;
        for_each_bit(rays, [&](int r) { uniform = uniform && std::popcount(orth[r] & rays) == 7; });
        if (!uniform || !seen.insert(rays).second) continue;

        Dodecagon d;
        d.triads = {a, b, c};
        d.rays = rays;
        for (int o : triads[a].observable_ids)
          if (triads[b].contains_observable(o) && triads[c].contains_observable(o)) d.observable = o;
        int slot = 0;
        for (int t : d.triads) {
          std::vector<int> plus, minus;
          for_each_bit(triad_mask(full, t), [&](int r) {
            int ev = d.observable >= 0 ? observable_eigenvalue(observables[d.observable], full.ray(r)) : 1;
            (ev > 0 ? plus : minus).push_back(r);
          });
          if (plus.size() == 2 && minus.size() == 2) {
            for (int k = 0; k < 2; ++k) {
              d.vertices[slot++] = plus[k];
              d.vertices[slot++] = minus[k];
            }
          } else {
            for_each_bit(triad_mask(full, t), [&](int r) { d.vertices[slot++] = r; });
          }
        }
        out.push_back(d);
      }
  std::stable_sort(out.begin(), out.end(), [](const Dodecagon &x, const Dodecagon &y) {
    unsigned ox = static_cast<unsigned>(x.observable), oy = static_cast<unsigned>(y.observable);
    return ox != oy ? ox < oy : x.triads < y.triads;
  });
  return out;
}

std::vector<Covering> find_coverings(const RaySystem &full, const std::vector<Dodecagon> &dodecagons) {
  const int n = static_cast<int>(dodecagons.size());
  std::vector<Covering> out;
  Covering cur{};
  auto rec = [&](auto &&self, int depth, int start, RayMask used) -> void {
    if (depth == 5) {
      if (used == all_rays(full)) out.push_back(cur);
      return;
    }
    for (int d = start; d < n; ++d) {
      if (dodecagons[d].rays & used) continue;
      cur[depth] = d;
      self(self, depth + 1, d + 1, used | dodecagons[d].rays);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

RaySystem dodecagon_system(const RaySystem &full, const Dodecagon &d, const std::string &label) {
  return restrict_system(full, label, d.rays);
}

int covering_subset_count(int k) {
  static constexpr int binom5[] = {1, 5, 10, 10, 5, 1};
  if (k < 0 || k > 5) throw std::out_of_range("subset size must be 0..5");
  return binom5[k];
}

std::vector<int> covering_subset(const Covering &c, int k, int index) {
  if (index < 1 || index > covering_subset_count(k))
    throw std::out_of_range("subset index must be in 1.." + std::to_string(covering_subset_count(k)));
  // Walk k-subsets of the five slots in lexicographic order.
  std::vector<int> slots(k);
  for (int i = 0; i < k; ++i) slots[i] = i;
  for (int seen = 1; seen < index; ++seen) {
    int i = k - 1;
    while (i >= 0 && slots[i] == 5 - k + i) --i;
    if (i < 0) throw std::logic_error("subset enumeration overran");
    ++slots[i];
    for (int j = i + 1; j < k; ++j) slots[j] = slots[j - 1] + 1;
  }
  std::vector<int> out;
  for (int s : slots) out.push_back(c[s]);
  return out;
}

RaySystem build_covering_system(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                                const Covering &covering, const std::vector<int> &chosen,
                                bool with_pure, const std::string &label) {
  RayMask rays = 0;
  std::set<int> distinct(chosen.begin(), chosen.end());
  if (distinct.size() != chosen.size()) throw std::invalid_argument("dodecagons must be distinct");
  for (int d : chosen) {
    if (std::find(covering.begin(), covering.end(), d) == covering.end())
      throw std::invalid_argument("dodecagon " + std::to_string(d + 1) + " is not in the covering");
    rays |= dodecagons.at(d).rays;
  }
  return restrict_system(full, label, rays, [with_pure](const Basis &b) {
    return b.kind == BasisKind::Hybrid || (with_pure && b.kind == BasisKind::Pure);
  });
}

RaySystem build_36_36(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                      const Covering &covering, std::array<int, 3> chosen) {
  return build_covering_system(full, dodecagons, covering, {chosen.begin(), chosen.end()}, false,
                               "36-36");
}

RaySystem build_36_45(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                      const Covering &covering, std::array<int, 3> chosen) {
  return build_covering_system(full, dodecagons, covering, {chosen.begin(), chosen.end()}, true,
                               "36-45");
}

std::pair<RaySystem, RaySystem> build_48_systems(const RaySystem &full,
                                                 const std::vector<Dodecagon> &dodecagons,
                                                 const Covering &covering, std::array<int, 4> chosen) {
  std::vector<int> ids(chosen.begin(), chosen.end());
  return {build_covering_system(full, dodecagons, covering, ids, false, "48-60"),
          build_covering_system(full, dodecagons, covering, ids, true, "48-72")};
}

RayMask real_rays(const RaySystem &full) {
  RayMask m = 0;
  for (int r = 0; r < full.ray_count(); ++r)
    if (full.ray(r).is_real()) m |= RayMask{1} << r;
  return m;
}

std::vector<RaySystem> find_peres_subsystems(const RaySystem &full, const SymmetryGroup &group) {
  std::vector<RayMask> images = group.ray_orbit(real_rays(full)).members;
  std::sort(images.begin(), images.end(), [](RayMask a, RayMask b) {
    // lexicographic on sorted id lists
    RayMask diff = a ^ b;
    return (a >> std::countr_zero(diff)) & 1u;
  });
  std::vector<RaySystem> out;
  for (std::size_t k = 0; k < images.size(); ++k)
    out.push_back(restrict_system(full, "peres:" + std::to_string(k + 1), images[k]));
  return out;
}

std::map<std::string, std::int64_t> census_36_36(const RaySystem &system) {
  if (system.ray_count() != 36 || system.basis_count() != 36)
    throw std::invalid_argument("census_36_36 needs a 36-36 system, got " + system.brief_symbol());
  return critical_brief_census(system);
}

} // namespace ks
