#pragma once

// Named subsystems of the 60-105 system.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ks/incidence.hpp"

namespace ks {

class SymmetryGroup;

/// 60 rays minus the 20 eigenrays of one row of mutually unbiased triads
/// (row 1..6), keeping the 40 bases inside the remaining rays.
RaySystem drop_mub_row(const RaySystem &full, int row);

/// Twelve rays: the eigenbases of the three triads sharing one observable.
struct Dodecagon {
  int observable = -1;            // shared observable id
  std::array<int, 3> triads{};    // ascending
  /// Vertex order of the orthogonality diagram: within each pure basis,
  /// (+a, -a, +b, -b) by the eigenvalue of the shared observable.
  std::array<int, 12> vertices{};
  RayMask rays = 0;
};

/// The 12-ray sets in which every ray is orthogonal to exactly seven others,
/// seeded by triples of pairwise-mating pure bases and ordered by the
/// shared observable.
std::vector<Dodecagon> find_dodecagons(const RaySystem &full);

using Covering = std::array<int, 5>;  // dodecagon indices, ascending

/// Five pairwise disjoint dodecagons covering all 60 rays, lexicographic.
std::vector<Covering> find_coverings(const RaySystem &full, const std::vector<Dodecagon> &dodecagons);

/// Dodecagon as a stand-alone 12-9 system (its 3 pure and 6 hybrid bases).
RaySystem dodecagon_system(const RaySystem &full, const Dodecagon &d, const std::string &label);

/// k-subsets of the five covering slots in lexicographic order; index is
/// 1-based ("36-36:<covering>,<index>").
std::vector<int> covering_subset(const Covering &c, int k, int index);
int covering_subset_count(int k);

/// Union of dodecagons from one covering with their hybrid bases, and
/// optionally their pure bases. Throws std::invalid_argument if a
/// dodecagon is not in the covering.
RaySystem build_covering_system(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                                const Covering &covering, const std::vector<int> &chosen,
                                bool with_pure, const std::string &label);

RaySystem build_36_36(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                      const Covering &covering, std::array<int, 3> chosen);
RaySystem build_36_45(const RaySystem &full, const std::vector<Dodecagon> &dodecagons,
                      const Covering &covering, std::array<int, 3> chosen);
std::pair<RaySystem, RaySystem> build_48_systems(const RaySystem &full,
                                                 const std::vector<Dodecagon> &dodecagons,
                                                 const Covering &covering, std::array<int, 4> chosen);

/// Rays of the 60-ray system whose components are all real.
RayMask real_rays(const RaySystem &full);

/// Distinct images of the real 24-24 subsystem under the symmetry group,
/// ordered lexicographically by ray ids. Labels are "peres:<n>".
std::vector<RaySystem> find_peres_subsystems(const RaySystem &full, const SymmetryGroup &group);

/// Critical parity-proof census of a 36-36 system keyed by brief symbol.
/// Throws std::invalid_argument unless the system is 36 rays by 36 bases.
std::map<std::string, std::int64_t> census_36_36(const RaySystem &system);

} // namespace ks
