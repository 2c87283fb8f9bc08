#include <catch_amalgamated.hpp>

#include <set>

#include "ks/subsystems.hpp"
#include "ks/symmetry.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace ks;
using testing::shared_catalog;

namespace {

std::vector<int> as_ints(const std::vector<std::uint8_t> &p) { return {p.begin(), p.end()}; }

RayMask parent_mask(const RaySystem &s) {
  RayMask m = 0;
  for (int r : s.parent_rays()) m |= RayMask{1} << r;
  return m;
}

BasisSet lift(const RaySystem &s, const BasisSet &local) {
  BasisSet out;
  local.for_each([&](int b) { out.set(s.parent_basis(b)); });
  return out;
}

} // namespace

TEST_CASE("spec enumeration") {
  const auto specs = all_unitary_specs();
  REQUIRE(specs.size() == 15 * 24 * 32);
  CHECK(specs.front().target_basis == 0);
  CHECK(specs.front().arrangement == std::array<int, 4>{0, 1, 2, 3});
  CHECK(specs.front().phases == std::array<GaussInt, 3>{GaussInt{1}, GaussInt{1}, GaussInt{1}});
  for (const auto &s : specs) CHECK(s.phase_rule_holds());
  UnitarySpec odd;
  odd.phases = {kI, GaussInt{1}, GaussInt{1}};
  CHECK_FALSE(odd.phase_rule_holds());
}

TEST_CASE("spec matrices are unitary") {
  const RaySystem &full = full_system();
  const auto specs = all_unitary_specs();
  for (std::size_t i = 0; i < specs.size(); i += 97) CHECK(is_unitary(unitary_matrix(full, specs[i])));
}

TEST_CASE("an odd number of imaginary phases lets rays escape") {
  const RaySystem &full = full_system();
  UnitarySpec s;
  s.phases = {kI, GaussInt{1}, GaussInt{1}};
  CHECK(is_unitary(unitary_matrix(full, s)));
  const SpecImage img = apply_spec(full, s);
  CHECK_FALSE(img.ok());
  CHECK(img.escaping_ray >= 0);
  CHECK_FALSE(img.reason.empty());
}

TEST_CASE("identity spec maps every ray to itself") {
  const RaySystem &full = full_system();
  const SpecImage img = apply_spec(full, all_unitary_specs().front());
  REQUIRE(img.ok());
  for (int r = 0; r < 60; ++r) CHECK(img.ray_perm[r] == r);
}

TEST_CASE("the unitary group has 11520 elements and satisfies the group axioms") {
  auto &cat = shared_catalog();
  const SymmetryGroup &g = cat.group();
  CHECK(g.order() == 11520);
  REQUIRE(g.identity().has_value());
  CHECK(*g.identity() == 0);
  const GroupReport rep = verify_group_axioms(g, cat.full());
  INFO(rep.failure);
  CHECK(rep.ok());
  CHECK(rep.generators > 0);
}

TEST_CASE("composition and inverses stay in the group") {
  const SymmetryGroup &g = shared_catalog().group();
  for (int a = 1; a < g.order(); a += 1237)
    for (int b = 7; b < g.order(); b += 2741) {
      CHECK(g.index_of(g.compose(a, b)).has_value());
      const auto inv = g.index_of(g.inverse(a));
      REQUIRE(inv.has_value());
      CHECK(g.index_of(g.compose(a, *inv)) == g.identity());
    }
}

TEST_CASE("elements preserve orthogonality and basis kinds") {
  const RaySystem &full = full_system();
  const SymmetryGroup &g = shared_catalog().group();
  for (int e = 0; e < g.order(); e += 311) {
    const auto &el = g.element(e);
    for (int r = 0; r < 60; r += 7)
      for (int s = 0; s < 60; ++s)
        CHECK(is_orthogonal(full.ray(r), full.ray(s)) ==
              is_orthogonal(full.ray(el.rays[r]), full.ray(el.rays[s])));
    for (int b = 0; b < 105; ++b) CHECK(full.basis(b).kind == full.basis(el.bases[b]).kind);
  }
}

TEST_CASE("verify_group_axioms catches broken sets") {
  const RaySystem &full = full_system();
  std::vector<int> identity(60);
  for (int r = 0; r < 60; ++r) identity[r] = r;
  std::vector<int> swap = identity;
  std::swap(swap[0], swap[4]);
  const GroupReport bad = verify_group_axioms(SymmetryGroup::from_permutations(full, {identity, swap}), full);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.preserves_bases);

  // A group element of order above two without its powers is not closed.
  const SymmetryGroup &g = shared_catalog().group();
  int gen = -1;
  for (int e = 1; e < g.order() && gen < 0; ++e)
    if (g.index_of(g.compose(e, e)) != g.identity()) gen = e;
  REQUIRE(gen > 0);
  const auto partial = SymmetryGroup::from_permutations(full, {identity, as_ints(g.element(gen).rays)});
  const GroupReport open = verify_group_axioms(partial, full);
  CHECK_FALSE(open.closed);
  CHECK_FALSE(open.ok());
}

TEST_CASE("the 40-40 systems form one orbit of six") {
  auto &cat = shared_catalog();
  const auto orbit = cat.group().ray_orbit(parent_mask(cat.system("40-40:6")));
  CHECK(orbit.size() == 6);
  CHECK(orbit.stabilizer == 11520 / 6);
  std::set<RayMask> rows;
  for (int row = 1; row <= 6; ++row) rows.insert(parent_mask(cat.system("40-40:" + std::to_string(row))));
  CHECK(std::set<RayMask>(orbit.members.begin(), orbit.members.end()) == rows);
}

TEST_CASE("the real Peres rays have an orbit of ten") {
  const auto orbit = shared_catalog().group().ray_orbit(real_rays(full_system()));
  CHECK(orbit.size() == 10);
  CHECK(orbit.stabilizer == 1152);
}

TEST_CASE("orbit sizes of the 30-15 proofs") {
  auto &cat = shared_catalog();
  const RaySystem &s = cat.system("40-40:6");
  const BasisSet proof = lift(s, testing::bases_from_quads(s, ref::kProof30_15));
  const auto unitary = cat.group().basis_orbit(proof);
  const auto extended = cat.extended_group().basis_orbit(proof);
  CHECK(unitary.size() * unitary.stabilizer == 11520);
  CHECK(extended.size() * extended.stabilizer == 23040);
  CHECK(extended.size() == 192);
  CHECK((unitary.size() == 96 || unitary.size() == 192));
  CHECK(cat.group().canonical_image(proof) == unitary.members.front());
}

TEST_CASE("conjugation is a symmetry and extends the group to 23040") {
  auto &cat = shared_catalog();
  const auto conj = conjugation_permutation(cat.full());
  for (int r = 0; r < 60; ++r) CHECK(conj[conj[r]] == r);
  CHECK_FALSE(cat.group().index_of(conj).has_value());
  const SymmetryGroup &ext = cat.extended_group();
  CHECK(ext.order() == 23040);
  CHECK(verify_group_axioms(ext, cat.full()).ok());
  CHECK(ext.index_of(conj).has_value());
}

TEST_CASE("basis automorphism count equals the extended group order") {
  CHECK(count_basis_automorphisms(full_system()) == 23040);
  CHECK(count_basis_automorphisms(full_system(), 1000) == 1000);
}
