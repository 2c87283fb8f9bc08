#include <catch_amalgamated.hpp>

#include <set>

#include "ks/incidence.hpp"
#include "ks/pauli.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace ks;

TEST_CASE("the 60 rays are the reference rays in order") {
  const RaySystem &full = full_system();
  REQUIRE(full.ray_count() == 60);
  for (int r = 0; r < 60; ++r) {
    CHECK(full.ray(r) == testing::compact_ray(ref::kRays60[r]));
    CHECK(full.ray(r).compact() == ref::kRays60[r]);
    CHECK(full.ray_triad(r) == r / 4);
  }
}

TEST_CASE("105 bases, 15 pure and 90 hybrid, equal to the reference basis list") {
  const RaySystem &full = full_system();
  REQUIRE(full.basis_count() == 105);
  CHECK(full.count_kind(BasisKind::Pure) == 15);
  CHECK(full.count_kind(BasisKind::Hybrid) == 90);
  CHECK(full.count_kind(BasisKind::Other) == 0);
  for (int b = 0; b < 105; ++b) {
    const auto &q = ref::kBases60[b];
    INFO("basis " << b + 1);
    CHECK(full.basis(b).rays == std::array<int, 4>{q[0] - 1, q[1] - 1, q[2] - 1, q[3] - 1});
    CHECK(full.basis(b).kind == (b < 15 ? BasisKind::Pure : BasisKind::Hybrid));
  }
}

TEST_CASE("every basis is four mutually orthogonal rays") {
  const RaySystem &full = full_system();
  for (const auto &b : full.bases())
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(is_orthogonal(full.ray(b.rays[i]), full.ray(b.rays[j])));
}

TEST_CASE("each ray lies in seven bases") {
  const RaySystem &full = full_system();
  for (int r = 0; r < 60; ++r) CHECK(full.ray_degree(r) == 7);
  CHECK(full.expanded_symbol() == "60_7-105_4");
  CHECK(full.brief_symbol() == "60-105");
}

TEST_CASE("orthogonality profile: 15 neighbours, three shared thrice, twelve once") {
  const RaySystem &full = full_system();
  for (int r = 0; r < 60; ++r) {
    const DegreeProfile p = degree_profile(full, r);
    CHECK(p.neighbors == 15);
    CHECK(p.cooccurrence == std::map<int, int>{{1, 12}, {3, 3}});
  }
}

TEST_CASE("the 60-105 system is saturated") {
  CHECK(is_saturated(full_system()));
}

TEST_CASE("an unsaturated system is detected") {
  // Drop every basis: the orthogonal pairs no longer share a basis.
  const RaySystem &full = full_system();
  const RaySystem bare = restrict_system(full, "bare", testing::mask_of({0, 1, 2, 3, 4}),
                                         [](const Basis &) { return false; });
  CHECK(bare.basis_count() == 0);
  CHECK_FALSE(is_saturated(bare));
}

TEST_CASE("hybrid mating rule accounts for all 90 hybrids") {
  const RaySystem &full = full_system();
  const auto matings = hybrid_mating_rule(full);
  REQUIRE(matings.size() == 45);
  std::set<int> hybrids;
  const auto &triads = enumerate_triads();
  for (const auto &m : matings) {
    CHECK(shared_observables(triads[m.pure_a], triads[m.pure_b]) == 1);
    for (int h : m.hybrids) {
      CHECK(full.basis(h).kind == BasisKind::Hybrid);
      const auto parents = full.basis(h).parents;
      CHECK(std::set<int>(parents.begin(), parents.end()) == std::set<int>{m.pure_a, m.pure_b});
      hybrids.insert(h);
    }
  }
  CHECK(hybrids.size() == 90);
}

TEST_CASE("a hybrid mixes complementary halves of two pure bases") {
  const RaySystem &full = full_system();
  // 1 2 15 16 and 3 4 13 14 come from the pure bases 1 2 3 4 and 13 14 15 16.
  const int h1 = full.find_basis({0, 1, 14, 15});
  const int h2 = full.find_basis({2, 3, 12, 13});
  REQUIRE(h1 >= 0);
  REQUIRE(h2 >= 0);
  CHECK(full.basis(h1).parents == std::array<int, 2>{0, 3});
  CHECK(full.basis(h2).parents == std::array<int, 2>{0, 3});
}

TEST_CASE("build_bases rejects repeated rays") {
  std::vector<Ray> rays{parse_ray("1,0,0,0"), parse_ray("1,0,0,0")};
  CHECK_THROWS_AS(build_bases("dup", rays), std::invalid_argument);
}

TEST_CASE("build_bases finds bases by clique search alone") {
  std::vector<Ray> rays;
  std::vector<int> triads;
  for (int r = 0; r < 16; ++r) {
    rays.push_back(full_system().ray(r));
    triads.push_back(r / 4);
  }
  // Triads 1 and 4 share Z1, triads 2 and 4 share X2: two hybrids each.
  const RaySystem labelled = build_bases("first four triads", rays, triads);
  CHECK(labelled.basis_count() == 8);
  CHECK(labelled.count_kind(BasisKind::Pure) == 4);
  CHECK(labelled.count_kind(BasisKind::Hybrid) == 4);
  const RaySystem unlabelled = build_bases("unlabelled", rays);
  CHECK(unlabelled.basis_count() == 8);
}

TEST_CASE("incidence matrix rank and kernel of the full system") {
  const RaySystem &full = full_system();
  const auto m = full.incidence();
  CHECK(m.rows() == 60);
  CHECK(m.cols() == 105);
  CHECK(m.rank() == 40);
  CHECK(kernel_basis(m).dimension() == 65);
}

TEST_CASE("basis_subsystem keeps only used rays") {
  const RaySystem &full = full_system();
  const RaySystem s = basis_subsystem(full, "two", BasisSet{0, 15});
  CHECK(s.basis_count() == 2);
  CHECK(s.ray_count() == 6);
  for (int r = 0; r < s.ray_count(); ++r) CHECK(s.ray(r) == full.ray(s.parent_ray(r)));
  CHECK(s.parent_basis(1) == 15);
  CHECK(s.local_ray(14) >= 0);
  CHECK(s.local_ray(20) == -1);
}
