#pragma once

// 10_3 configurations inside a 40-40 system: ten rays ("points") and ten
// triples ("blocks") with three blocks through every point. Blocks are
// either dependent triples (lines) or unbiased independent triples
// (triangles).

#include <array>
#include <string>
#include <vector>

#include "ks/incidence.hpp"
#include "ks/parity.hpp"

namespace ks {

enum class BlockKind { Line, Triangle };
const char *to_string(BlockKind k);

using Triple = std::array<int, 3>;  // ascending local ray ids

bool is_line(const RaySystem &system, const Triple &t);
bool is_triangle(const RaySystem &system, const Triple &t);

/// Exhaustive scans over all triples of rays, lexicographic.
std::vector<Triple> find_lines(const RaySystem &system);
std::vector<Triple> find_triangles(const RaySystem &system);
std::vector<Triple> find_blocks(const RaySystem &system, BlockKind kind);

struct TenThreeConfig {
  BlockKind kind = BlockKind::Line;
  std::array<int, 10> points{};  // ascending
  std::vector<Triple> blocks;    // ascending

  friend bool operator==(const TenThreeConfig &, const TenThreeConfig &) = default;
};

/// Each of the ten points is in exactly three blocks, each block has three
/// of the points, and every block is of the stated kind.
bool is_ten_three(const RaySystem &system, const TenThreeConfig &config);

enum class ConfigRule {
  /// Bare incidence: every point on three blocks, every block through three
  /// points.
  Incidence,
  /// Incidence plus the Desargues shape (two blocks share at most one point
  /// and the three points off the blocks through any point form a block),
  /// with the off-block pairs being exactly the orthogonal pairs.
  Desarguesian,
};

/// Desargues shape and orthogonality rule on top of is_ten_three.
bool is_desarguesian(const RaySystem &system, const TenThreeConfig &config);

/// All configurations of the given kind obeying the rule, ordered by point
/// set and then by blocks. With ConfigRule::Incidence the triangle search
/// is far too large for a 40-40 system; it is meant for small systems.
std::vector<TenThreeConfig> find_configs(const RaySystem &system, BlockKind kind,
                                         ConfigRule rule = ConfigRule::Desarguesian);

/// Drops every basis that meets a configuration point. Throws
/// std::logic_error unless exactly 15 bases remain and form a parity proof.
ParityProof construct_30_15(const RaySystem &system, const TenThreeConfig &config);

} // namespace ks
