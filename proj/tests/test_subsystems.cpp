#include <catch_amalgamated.hpp>

#include <set>

#include "ks/pauli.hpp"
#include "ks/subsystems.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace ks;
using testing::shared_catalog;

TEST_CASE("six 40-40 systems, one per MUB row") {
  const RaySystem &full = full_system();
  for (int row = 1; row <= 6; ++row) {
    const RaySystem s = drop_mub_row(full, row);
    INFO("row " << row);
    CHECK(s.ray_count() == 40);
    CHECK(s.basis_count() == 40);
    CHECK(s.expanded_symbol() == "40_4-40_4");
    CHECK(s.count_kind(BasisKind::Pure) == 10);
    CHECK(s.count_kind(BasisKind::Hybrid) == 30);
    CHECK(kernel_basis(s).dimension() == 16);
    for (int t : mub_partitions()[row - 1])
      for (int k = 0; k < 4; ++k) CHECK(s.local_ray(4 * t + k) == -1);
  }
  CHECK_THROWS(drop_mub_row(full, 0));
  CHECK_THROWS(drop_mub_row(full, 7));
}

TEST_CASE("40-ray numbering of the last MUB row matches the reference") {
  const RaySystem s = drop_mub_row(full_system(), 6);
  for (int r = 0; r < 40; ++r) CHECK(s.ray(r).compact() == ref::kRays40[r]);
  for (int t = 0; t < 10; ++t)
    CHECK(enumerate_triads()[s.ray_triad(4 * t)].name() == ref::kTriads40[t]);
}

TEST_CASE("dodecagons equal the reference rows vertex for vertex") {
  const auto dodecagons = find_dodecagons(full_system());
  REQUIRE(dodecagons.size() == 15);
  for (std::size_t d = 0; d < dodecagons.size(); ++d) {
    std::array<int, 12> one_based{};
    for (int k = 0; k < 12; ++k) one_based[k] = dodecagons[d].vertices[k] + 1;
    INFO("dodecagon " << d + 1);
    CHECK(one_based == ref::kDodecagons[d]);
  }
}

TEST_CASE("each dodecagon is a 12_3-9_4 configuration") {
  const RaySystem &full = full_system();
  const auto &triads = enumerate_triads();
  for (const auto &d : find_dodecagons(full)) {
    CHECK(std::popcount(d.rays) == 12);
    // The three triads share the dodecagon's observable and nothing else.
    for (int i = 0; i < 3; ++i) {
      CHECK(triads[d.triads[i]].contains_observable(d.observable));
      for (int j = i + 1; j < 3; ++j) CHECK(shared_observables(triads[d.triads[i]], triads[d.triads[j]]) == 1);
    }
    for_each_bit(d.rays, [&](int r) {
      int orth = 0;
      for_each_bit(d.rays, [&](int s) { orth += is_orthogonal(full.ray(r), full.ray(s)); });
      CHECK(orth == 7);
    });
    const RaySystem sys = dodecagon_system(full, d, "d");
    CHECK(sys.expanded_symbol() == "12_3-9_4");
    CHECK(sys.count_kind(BasisKind::Pure) == 3);
    CHECK(sys.count_kind(BasisKind::Hybrid) == 6);
  }
}

TEST_CASE("dodecagon bases follow the diagram pattern") {
  // Pure bases are consecutive quadruples of vertices; hybrids pair vertex
  // positions (1 3 | 6 8), (1 3 | 10 12), (5 7 | 2 4), (5 7 | 10 12),
  // (9 11 | 2 4) and (9 11 | 6 8).
  const RaySystem &full = full_system();
  const std::array<std::array<int, 4>, 9> pattern{{{1, 2, 3, 4},
                                                   {5, 6, 7, 8},
                                                   {9, 10, 11, 12},
                                                   {1, 3, 6, 8},
                                                   {1, 3, 10, 12},
                                                   {5, 7, 2, 4},
                                                   {5, 7, 10, 12},
                                                   {9, 11, 2, 4},
                                                   {9, 11, 6, 8}}};
  for (const auto &d : find_dodecagons(full)) {
    for (const auto &q : pattern) {
      std::array<int, 4> rays{};
      for (int k = 0; k < 4; ++k) rays[k] = d.vertices[q[k] - 1];
      CHECK(full.find_basis(rays) >= 0);
    }
  }
}

TEST_CASE("six coverings equal the reference list") {
  const RaySystem &full = full_system();
  const auto dodecagons = find_dodecagons(full);
  const auto coverings = find_coverings(full, dodecagons);
  REQUIRE(coverings.size() == 6);
  for (std::size_t c = 0; c < coverings.size(); ++c) {
    Covering one_based{};
    RayMask all = 0;
    for (int k = 0; k < 5; ++k) {
      one_based[k] = coverings[c][k] + 1;
      CHECK((all & dodecagons[coverings[c][k]].rays) == 0);
      all |= dodecagons[coverings[c][k]].rays;
    }
    CHECK(one_based == ref::kCoverings[c]);
    CHECK(std::popcount(all) == 60);
  }
}

TEST_CASE("covering subsets are indexed lexicographically") {
  const Covering c{0, 3, 8, 11, 14};
  CHECK(covering_subset_count(3) == 10);
  CHECK(covering_subset_count(4) == 5);
  CHECK(covering_subset(c, 3, 1) == std::vector<int>{0, 3, 8});
  CHECK(covering_subset(c, 3, 10) == std::vector<int>{8, 11, 14});
  CHECK(covering_subset(c, 4, 5) == std::vector<int>{3, 8, 11, 14});
  CHECK_THROWS(covering_subset(c, 3, 11));
}

TEST_CASE("36-36 system of covering 1 matches the reference rays") {
  const RaySystem &s = shared_catalog().system("36-36:1,1");
  REQUIRE(s.ray_count() == 36);
  CHECK(s.basis_count() == 36);
  CHECK(s.expanded_symbol() == "36_4-36_4");
  CHECK(s.count_kind(BasisKind::Pure) == 0);
  for (int r = 0; r < 36; ++r) CHECK(s.ray(r).compact() == ref::kRays36[r]);
  for (int t = 0; t < 9; ++t) CHECK(enumerate_triads()[s.ray_triad(4 * t)].name() == ref::kTriads36[t]);
  CHECK(kernel_basis(s).dimension() == 14);
}

TEST_CASE("36-45, 48-60 and 48-72 shapes") {
  auto &cat = shared_catalog();
  const RaySystem &s45 = cat.system("36-45:1,1");
  CHECK(s45.ray_count() == 36);
  CHECK(s45.basis_count() == 45);
  CHECK(s45.count_kind(BasisKind::Pure) == 9);
  CHECK(kernel_basis(s45).dimension() == 23);
  const RaySystem &s60 = cat.system("48-60:1,1");
  CHECK(s60.ray_count() == 48);
  CHECK(s60.basis_count() == 60);
  CHECK(kernel_basis(s60).dimension() == 29);
  const RaySystem &s72 = cat.system("48-72:1,1");
  CHECK(s72.basis_count() == 72);
  CHECK(s72.count_kind(BasisKind::Pure) == 12);
  CHECK(kernel_basis(s72).dimension() == 41);
}

TEST_CASE("building from a dodecagon outside the covering fails") {
  const RaySystem &full = full_system();
  const auto dodecagons = find_dodecagons(full);
  const auto coverings = find_coverings(full, dodecagons);
  CHECK_THROWS_AS(build_36_36(full, dodecagons, coverings[0], {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("census_36_36 rejects other shapes") {
  CHECK_THROWS_AS(census_36_36(shared_catalog().system("40-40:1")), std::invalid_argument);
}

TEST_CASE("ten Peres subsystems with 512 proofs each") {
  auto &cat = shared_catalog();
  const RayMask real = real_rays(full_system());
  CHECK(std::popcount(real) == 24);
  for (int k = 1; k <= 10; ++k) {
    const RaySystem &p = cat.system("peres:" + std::to_string(k));
    INFO(p.label());
    CHECK(p.expanded_symbol() == "24_4-24_4");
    const KernelBasis kernel = kernel_basis(p);
    CHECK(kernel.dimension() == 10);
    CHECK(enumerate_parity_proofs(p, kernel).size() == 512);
  }
  CHECK(cat.system("peres:1").parent_rays() ==
        [&] {
          std::vector<int> ids;
          for_each_bit(real, [&](int r) { ids.push_back(r); });
          return ids;
        }());
  CHECK_THROWS(cat.system("peres:11"));
}
