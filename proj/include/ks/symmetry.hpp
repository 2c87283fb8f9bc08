#pragma once

// The unitary symmetry group of the 60-105 system, held as ray and basis
// permutations. Each element comes from
//   U = |x><1| + a|y><2| + b|z><3| + c|w><4|
// where x y z w is an arrangement of the normalized rays of one pure basis
// and a, b, c are in {+-1, +-i} with an even number of imaginary values.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ks/bitset.hpp"
#include "ks/exact.hpp"
#include "ks/incidence.hpp"

namespace ks {

struct UnitarySpec {
  int target_basis = 0;               // pure basis id, 0..14
  std::array<int, 4> arrangement{0, 1, 2, 3};  // positions within the target basis
  std::array<GaussInt, 3> phases{GaussInt{1}, GaussInt{1}, GaussInt{1}};

  /// Even number of imaginary phases.
  bool phase_rule_holds() const;
  std::string str() const;
};

/// 15 x 24 x 32 specs: target basis, then arrangement (lexicographic
/// permutations), then phases (each over 1, -1, i, -i).
std::vector<UnitarySpec> all_unitary_specs();

using ExactMatrix = std::array<std::array<ExactScalar, 4>, 4>;

/// Columns are the phased, normalized target rays.
ExactMatrix unitary_matrix(const RaySystem &full, const UnitarySpec &spec);
bool is_unitary(const ExactMatrix &u);

struct SpecImage {
  std::vector<int> ray_perm;  // filled when every ray maps into the system
  int escaping_ray = -1;
  std::string reason;
  bool ok() const { return escaping_ray < 0; }
};

/// Images of every ray of `full` under the spec's unitary, as ray ids.
SpecImage apply_spec(const RaySystem &full, const UnitarySpec &spec);

struct SymmetryElement {
  std::vector<std::uint8_t> rays;   // ray -> image ray
  std::vector<std::uint8_t> bases;  // basis -> image basis
  UnitarySpec spec;
  bool conjugating = false;
};

/// Ray permutation induced by complex conjugation of the components; throws
/// std::logic_error if a conjugate ray is missing from the system.
std::vector<std::uint8_t> conjugation_permutation(const RaySystem &system);

template <class T> struct Orbit {
  std::vector<T> members;
  std::int64_t stabilizer = 0;
  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

class SymmetryGroup {
public:
  /// Applies every spec; throws std::logic_error if any ray escapes the
  /// system or two specs give the same permutation.
  static SymmetryGroup build(const RaySystem &full);
  /// The unitary group together with its composites with complex
  /// conjugation of components (an antiunitary symmetry), 23040 elements.
  /// Antiunitary elements carry the spec of their unitary part.
  static SymmetryGroup build_with_conjugation(const RaySystem &full);
  /// Group from explicit ray permutations of `system` (closure is not
  /// assumed; see verify_group_axioms).
  static SymmetryGroup from_permutations(const RaySystem &system,
                                         const std::vector<std::vector<int>> &ray_perms);

  int order() const { return static_cast<int>(elements_.size()); }
  const SymmetryElement &element(int i) const { return elements_.at(i); }
  const std::vector<SymmetryElement> &elements() const { return elements_; }
  std::optional<int> index_of(const std::vector<std::uint8_t> &ray_perm) const;
  std::optional<int> identity() const;

  /// Ray permutation of x -> a(b(x)).
  std::vector<std::uint8_t> compose(int a, int b) const;
  std::vector<std::uint8_t> inverse(int a) const;

  RayMask apply(int g, RayMask rays) const;
  BasisSet apply(int g, const BasisSet &bases) const;

  Orbit<RayMask> ray_orbit(RayMask rays) const;
  Orbit<BasisSet> basis_orbit(const BasisSet &bases) const;
  /// Lexicographically least image of a basis set (orbit representative).
  BasisSet canonical_image(const BasisSet &bases) const;

  int ray_count() const { return ray_count_; }
  int basis_count() const { return basis_count_; }

private:
  void add(SymmetryElement e);
  static std::string key(const std::vector<std::uint8_t> &perm);

  int ray_count_ = 0;
  int basis_count_ = 0;
  std::vector<SymmetryElement> elements_;
  std::unordered_map<std::string, int> index_;
};

struct GroupReport {
  int order = 0;
  bool distinct = false;
  bool has_identity = false;
  bool closed = false;
  bool inverses = false;
  bool preserves_bases = false;
  bool preserves_orthogonality = false;
  bool preserves_unbiasedness = false;
  bool preserves_kinds = false;
  int generators = 0;
  std::string failure;

  bool ok() const {
    return distinct && has_identity && closed && inverses && preserves_bases &&
           preserves_orthogonality && preserves_unbiasedness && preserves_kinds;
  }
};

/// Closure is shown by generating the group from a few of its elements and
/// checking that the generated set is exactly the element set.
GroupReport verify_group_axioms(const SymmetryGroup &group, const RaySystem &system);

/// Number of ray permutations mapping the basis set onto itself (counting
/// stops at `limit`).
std::int64_t count_basis_automorphisms(const RaySystem &system, std::int64_t limit = 1'000'000);

} // namespace ks
