#include <catch_amalgamated.hpp>

#include <set>

#include "ks/desargues.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace ks;
using testing::shared_catalog;

namespace {

const RaySystem &s40() { return shared_catalog().system("40-40:6"); }

Triple t1(int a, int b, int c) { return {a - 1, b - 1, c - 1}; }

// A line-type configuration in 40-ray numbering, 1-based.
TenThreeConfig example_config() {
  TenThreeConfig c;
  c.kind = BlockKind::Line;
  c.points = {4, 8, 11, 13, 18, 21, 28, 30, 35, 39};
  for (int &p : c.points) --p;
  const int blocks[10][3] = {{4, 8, 28},   {4, 11, 35},  {4, 18, 39},  {8, 11, 30},  {8, 21, 39},
                             {11, 13, 39}, {13, 18, 35}, {13, 21, 30}, {18, 21, 28}, {28, 30, 35}};
  for (const auto &b : blocks) c.blocks.push_back(t1(b[0], b[1], b[2]));
  return c;
}

} // namespace

TEST_CASE("lines and triangles") {
  const RaySystem &s = s40();
  CHECK(is_line(s, t1(4, 8, 28)));
  CHECK_FALSE(is_triangle(s, t1(4, 8, 28)));
  CHECK(is_triangle(s, t1(1, 5, 27)));
  CHECK_FALSE(is_line(s, t1(1, 5, 27)));
  CHECK_FALSE(is_line(s, t1(1, 2, 3)));
  CHECK_FALSE(is_triangle(s, t1(1, 2, 3)));
}

TEST_CASE("block scans agree with the predicates") {
  const RaySystem &s = s40();
  const auto lines = find_lines(s);
  const auto triangles = find_triangles(s);
  CHECK_FALSE(lines.empty());
  CHECK_FALSE(triangles.empty());
  for (const auto &t : lines) CHECK(is_line(s, t));
  for (const auto &t : triangles) CHECK(is_triangle(s, t));
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(find_blocks(s, BlockKind::Line) == lines);
  CHECK(find_blocks(s, BlockKind::Triangle) == triangles);
}

TEST_CASE("32 line-type and 32 triangle-type configurations") {
  const RaySystem &s = s40();
  for (BlockKind kind : {BlockKind::Line, BlockKind::Triangle}) {
    const auto configs = find_configs(s, kind);
    INFO(to_string(kind));
    CHECK(configs.size() == 32);
    for (const auto &c : configs) {
      CHECK(c.kind == kind);
      CHECK(c.blocks.size() == 10);
      CHECK(is_ten_three(s, c));
      CHECK(is_desarguesian(s, c));
    }
  }
}

TEST_CASE("bare incidence admits many more line-type configurations") {
  const auto configs = find_configs(s40(), BlockKind::Line, ConfigRule::Incidence);
  CHECK(configs.size() == 6032);
  std::size_t desarguesian = 0;
  for (const auto &c : configs) desarguesian += is_desarguesian(s40(), c);
  CHECK(desarguesian == 32);
}

TEST_CASE("the example configuration is found and yields the reference 30-15 proof") {
  const RaySystem &s = s40();
  const auto configs = find_configs(s, BlockKind::Line);
  const TenThreeConfig example = example_config();
  CHECK(is_ten_three(s, example));
  CHECK(is_desarguesian(s, example));
  const TenThreeConfig *found = nullptr;
  for (const auto &c : configs)
    if (c.points == example.points) found = &c;
  REQUIRE(found != nullptr);
  CHECK(*found == example);
  const ParityProof p = construct_30_15(s, *found);
  CHECK(p.bases == testing::bases_from_quads(s, ref::kProof30_15));
  CHECK(p.profile.expanded() == "30_2-15_4");
}

TEST_CASE("constructions are injective and equal the enumerated 30-15 proofs") {
  const RaySystem &s = s40();
  std::set<BasisSet> enumerated;
  for (const auto &p : enumerate_parity_proofs(s, kernel_basis(s)))
    if (p.profile.brief() == "30-15") enumerated.insert(p.bases);
  REQUIRE(enumerated.size() == 64);

  std::set<BasisSet> constructed;
  std::size_t configs = 0;
  for (BlockKind kind : {BlockKind::Line, BlockKind::Triangle})
    for (const auto &c : find_configs(s, kind)) {
      ++configs;
      const ParityProof p = construct_30_15(s, c);
      CHECK(is_basis_critical(s, p));
      constructed.insert(p.bases);
    }
  CHECK(configs == 64);
  CHECK(constructed.size() == 64);
  CHECK(constructed == enumerated);
}

TEST_CASE("construction rejects configurations that leave the wrong bases") {
  const RaySystem &s = s40();
  TenThreeConfig c;
  for (int k = 0; k < 10; ++k) c.points[k] = k;
  CHECK_FALSE(is_ten_three(s, c));
  CHECK_THROWS_AS(construct_30_15(s, c), std::logic_error);
}
