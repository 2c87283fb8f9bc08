#pragma once

// Ray systems: rays plus every 4-element orthogonal basis among them.

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ks/bitset.hpp"
#include "ks/gf2.hpp"
#include "ks/ray.hpp"

namespace ks {

enum class BasisKind { Pure, Hybrid, Other };

const char *to_string(BasisKind k);

struct Basis {
  std::array<int, 4> rays{};  // sorted local ray ids
  BasisKind kind = BasisKind::Other;
  /// For hybrids, the two pure bases (triad indices) whose rays it mixes.
  std::array<int, 2> parents{-1, -1};

  friend bool operator==(const Basis &a, const Basis &b) { return a.rays == b.rays; }
};

/// A set of rays and bases. Ray and basis ids are 0-based and local; the
/// parent maps translate them into the ids of the 60-ray system.
class RaySystem {
public:
  RaySystem() = default;
  RaySystem(std::string label, std::vector<Ray> rays, std::vector<Basis> bases,
            std::vector<int> ray_triads, std::vector<int> parent_rays, std::vector<int> parent_bases);

  const std::string &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int ray_count() const { return static_cast<int>(rays_.size()); }
  int basis_count() const { return static_cast<int>(bases_.size()); }
  const std::vector<Ray> &rays() const { return rays_; }
  const std::vector<Basis> &bases() const { return bases_; }
  const Ray &ray(int id) const { return rays_.at(id); }
  const Basis &basis(int id) const { return bases_.at(id); }

  /// Triad (pure basis of the 60-ray system) the ray belongs to, or -1.
  int ray_triad(int id) const { return ray_triads_.at(id); }
  int parent_ray(int id) const { return parent_rays_.at(id); }
  int parent_basis(int id) const { return parent_bases_.at(id); }
  const std::vector<int> &parent_rays() const { return parent_rays_; }
  const std::vector<int> &parent_bases() const { return parent_bases_; }
  /// Local id of a parent ray id, or -1.
  int local_ray(int parent_id) const;
  /// Local id of the basis with these (local, any order) rays, or -1.
  int find_basis(std::array<int, 4> rays) const;

  /// Bases containing each ray, as a bit set over basis ids.
  const BasisSet &bases_of_ray(int id) const { return ray_bases_.at(id); }
  int ray_degree(int id) const { return ray_bases_.at(id).count(); }
  RayMask basis_mask(int id) const { return basis_masks_.at(id); }
  BasisSet all_bases() const { return BasisSet::first_n(basis_count()); }
  int count_kind(BasisKind k) const;

  IncidenceMatrixGF2 incidence() const;
  /// "60_7-105_4" when degrees are uniform, otherwise lists each degree.
  std::string expanded_symbol() const;
  std::string brief_symbol() const;

private:
  std::string label_;
  std::vector<Ray> rays_;
  std::vector<Basis> bases_;
  std::vector<int> ray_triads_;
  std::vector<int> parent_rays_;
  std::vector<int> parent_bases_;
  std::vector<BasisSet> ray_bases_;
  std::vector<RayMask> basis_masks_;
};

/// All 4-cliques of the orthogonality graph. Bases are classified with
/// ray_triads (pure: one triad; hybrid: two rays from each of two triads)
/// and ordered pure first, then hybrid, then other, each lexicographically.
/// Throws std::invalid_argument if five rays are mutually orthogonal or
/// rays repeat.
RaySystem build_bases(std::string label, std::vector<Ray> rays, std::vector<int> ray_triads = {});

/// The 60 eigenrays of the 15 triads (numbered triad by triad, signatures
/// ++, +-, -+, --) with their 105 bases.
const RaySystem &full_system();

/// Restriction of parent to the given parent ray ids, keeping the parent
/// bases that lie inside and satisfy keep. Rays are renumbered in
/// increasing parent order.
RaySystem restrict_system(const RaySystem &parent, std::string label, RayMask parent_rays,
                          const std::function<bool(const Basis &)> &keep = {});

/// Restriction to a subset of bases, keeping only the rays they use.
RaySystem basis_subsystem(const RaySystem &parent, std::string label, const BasisSet &bases);

struct DegreeProfile {
  int neighbors = 0;
  /// co-occurrence count -> number of orthogonal neighbours with that count
  std::map<int, int> cooccurrence;
};

DegreeProfile degree_profile(const RaySystem &system, int ray_id);

/// Every orthogonal pair of rays shares at least one basis.
bool is_saturated(const RaySystem &system);

struct Mating {
  int pure_a = -1;
  int pure_b = -1;
  int shared_observable = -1;
  std::array<int, 2> hybrids{-1, -1};
};

/// For each pair of triads sharing one observable: the two hybrid bases
/// pairing the +1 half of one pure basis with the -1 half of the other.
/// Requires the 60-ray system; throws std::logic_error if a predicted
/// hybrid is missing.
std::vector<Mating> hybrid_mating_rule(const RaySystem &system);

} // namespace ks
