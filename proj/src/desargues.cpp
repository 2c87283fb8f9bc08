#include "ks/desargues.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ks {

const char *to_string(BlockKind k) { return k == BlockKind::Line ? "line" : "triangle"; }

bool is_line(const RaySystem &system, const Triple &t) {
  return is_dependent_triple(system.ray(t[0]), system.ray(t[1]), system.ray(t[2]));
}

bool is_triangle(const RaySystem &system, const Triple &t) {
  const Ray &a = system.ray(t[0]), &b = system.ray(t[1]), &c = system.ray(t[2]);
  return is_unbiased(a, b) && is_unbiased(a, c) && is_unbiased(b, c) && !is_dependent_triple(a, b, c);
}

std::vector<Triple> find_blocks(const RaySystem &system, BlockKind kind) {
  std::vector<Triple> out;
  const int n = system.ray_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Triple t{a, b, c};
        if (kind == BlockKind::Line ? is_line(system, t) : is_triangle(system, t)) out.push_back(t);
      }
  return out;
}

std::vector<Triple> find_lines(const RaySystem &system) { return find_blocks(system, BlockKind::Line); }
std::vector<Triple> find_triangles(const RaySystem &system) {
  return find_blocks(system, BlockKind::Triangle);
}

bool is_ten_three(const RaySystem &system, const TenThreeConfig &config) {
  if (config.blocks.size() != 10) return false;
  std::set<int> pts(config.points.begin(), config.points.end());
  if (pts.size() != 10) return false;
  std::vector<int> count(system.ray_count(), 0);
  std::set<Triple> distinct;
  for (const auto &b : config.blocks) {
    if (!distinct.insert(b).second) return false;
    bool ok = config.kind == BlockKind::Line ? is_line(system, b) : is_triangle(system, b);
    if (!ok) return false;
    for (int r : b) {
      if (!pts.count(r)) return false;
      ++count[r];
    }
  }
  return std::all_of(pts.begin(), pts.end(), [&](int p) { return count[p] == 3; });
}

namespace {

RayMask triple_mask(const Triple &t) {
  return (RayMask{1} << t[0]) | (RayMask{1} << t[1]) | (RayMask{1} << t[2]);
}

std::vector<RayMask> orthogonality_masks(const RaySystem &system) {
  std::vector<RayMask> m(system.ray_count(), 0);
  for (int a = 0; a < system.ray_count(); ++a)
    for (int b = 0; b < system.ray_count(); ++b)
      if (a != b && is_orthogonal(system.ray(a), system.ray(b))) m[a] |= RayMask{1} << b;
  return m;
}

class ConfigSearch {
public:
  ConfigSearch(const RaySystem &system, BlockKind kind, ConfigRule rule)
      : system_(system), kind_(kind), rule_(rule), orth_(orthogonality_masks(system)),
        through_(system.ray_count()), count_(system.ray_count(), 0), col_(system.ray_count(), 0) {
    for (const auto &t : find_blocks(system, kind)) {
      const RayMask m = triple_mask(t);
      const bool orth_pair = (orth_[t[0]] | orth_[t[1]]) & m;
      if (rule_ == ConfigRule::Desarguesian && orth_pair) continue;
      blocks_.push_back(t);
      masks_.push_back(m);
    }
    for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
      for (int r : blocks_[i]) through_[r].push_back(i);
    reach_ = orth_;
    for (const RayMask m : masks_)
      for_each_bit(m, [&](int r) { reach_[r] |= m; });
  }

  std::vector<TenThreeConfig> run() {
    for (int seed = 0; seed < static_cast<int>(through_.size()); ++seed) {
      seed_ = seed;
      extend(RayMask{1} << seed);
    }
    return {found_.begin(), found_.end()};
  }

private:
  struct Less {
    bool operator()(const TenThreeConfig &a, const TenThreeConfig &b) const {
      return a.points != b.points ? a.points < b.points : a.blocks < b.blocks;
    }
  };

  // In the Desarguesian rule every point meets its six block-mates and is
  // orthogonal to the remaining three, so a finished point fixes which
  // later points may join.
  bool admissible(RayMask points) const {
    if (rule_ != ConfigRule::Desarguesian) return true;
    bool ok = true;
    for_each_bit(points, [&](int p) {
      if (!ok) return;
      if (std::popcount(orth_[p] & points) > 3) ok = false;
      else if (points & ~reach_[p]) ok = false;
      else if (std::popcount(points & ~orth_[p]) > 7) ok = false;
      else if (count_[p] == 3 && (points & ~col_[p] & ~orth_[p]) != 0) ok = false;
    });
    return ok;
  }

  // Completes the lowest point that still lacks blocks; every block is
  // drawn from rays no lower than the seed, so the seed is the least point.
  void extend(RayMask points) {
    int deficient = -1;
    for_each_bit(points, [&](int p) {
      if (deficient < 0 && count_[p] < 3) deficient = p;
    });
    if (deficient < 0) {
      if (chosen_.size() == 10 && std::popcount(points) == 10) record(points);
      return;
    }
    if (chosen_.size() == 10) return;
    // Blocks added for the same point are taken in increasing order.
    int floor = -1;
    for (std::size_t k = 0; k < chosen_.size(); ++k)
      if (completing_[k] == deficient) floor = std::max(floor, chosen_[k]);
    for (int bi : through_[deficient]) {
      const Triple &b = blocks_[bi];
      if (bi <= floor || b[0] < seed_ || std::find(chosen_.begin(), chosen_.end(), bi) != chosen_.end()) continue;
      const RayMask next = points | masks_[bi];
      bool ok = std::popcount(next) <= 10;
      for (int r : b) ok = ok && count_[r] < 3;
      if (ok && rule_ == ConfigRule::Desarguesian)
        for (int ci : chosen_) ok = ok && std::popcount(masks_[ci] & masks_[bi]) <= 1;
      if (!ok) continue;

      std::array<RayMask, 3> saved{};
      for (int k = 0; k < 3; ++k) {
        saved[k] = col_[b[k]];
        col_[b[k]] |= masks_[bi];
        ++count_[b[k]];
      }
      chosen_.push_back(bi);
      completing_.push_back(deficient);
      if (admissible(next)) extend(next);
      completing_.pop_back();
      chosen_.pop_back();
      for (int k = 0; k < 3; ++k) {
        col_[b[k]] = saved[k];
        --count_[b[k]];
      }
    }
  }

  void record(RayMask points) {
    TenThreeConfig c;
    c.kind = kind_;
    int k = 0;
    for_each_bit(points, [&](int p) { c.points[k++] = p; });
    for (int bi : chosen_) c.blocks.push_back(blocks_[bi]);
    std::sort(c.blocks.begin(), c.blocks.end());
    if (rule_ == ConfigRule::Desarguesian && !is_desarguesian(system_, c)) return;
    found_.insert(std::move(c));
  }

  const RaySystem &system_;
  BlockKind kind_;
  ConfigRule rule_;
  std::vector<RayMask> orth_;
  std::vector<Triple> blocks_;
  std::vector<RayMask> masks_;
  std::vector<std::vector<int>> through_;
  std::vector<int> count_;
  std::vector<RayMask> col_;  // points sharing a chosen block, self included
  std::vector<RayMask> reach_;  // orthogonal or on a common candidate block
  std::vector<int> chosen_;
  std::vector<int> completing_;  // point each chosen block was added for
  int seed_ = 0;
  std::set<TenThreeConfig, Less> found_;
};

} // namespace

bool is_desarguesian(const RaySystem &system, const TenThreeConfig &config) {
  if (!is_ten_three(system, config)) return false;
  RayMask pts = 0;
  for (int p : config.points) pts |= RayMask{1} << p;
  std::vector<RayMask> col(system.ray_count(), 0);
  for (std::size_t i = 0; i < config.blocks.size(); ++i) {
    const RayMask m = triple_mask(config.blocks[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (std::popcount(m & triple_mask(config.blocks[j])) > 1) return false;
    for (int r : config.blocks[i]) col[r] |= m;
  }
  for (int p : config.points) {
    const RayMask off = pts & ~col[p];
    if (std::popcount(off) != 3) return false;
    std::vector<int> v;
    for_each_bit(off, [&](int r) { v.push_back(r); });
    if (std::find(config.blocks.begin(), config.blocks.end(), Triple{v[0], v[1], v[2]}) ==
        config.blocks.end())
      return false;
    for (int q : config.points)
      if (q != p && ((off >> q) & 1) != is_orthogonal(system.ray(p), system.ray(q))) return false;
  }
  return true;
}

std::vector<TenThreeConfig> find_configs(const RaySystem &system, BlockKind kind, ConfigRule rule) {
  if (system.ray_count() > kMaxRays) throw std::invalid_argument("system has too many rays");
  return ConfigSearch(system, kind, rule).run();
}

ParityProof construct_30_15(const RaySystem &system, const TenThreeConfig &config) {
  RayMask pts = 0;
  for (int p : config.points) pts |= RayMask{1} << p;
  BasisSet kept;
  for (int b = 0; b < system.basis_count(); ++b)
    if (!(system.basis_mask(b) & pts)) kept.set(b);
  if (kept.count() != 15)
    throw std::logic_error("configuration leaves " + std::to_string(kept.count()) +
                           " bases instead of 15");
  if (!is_parity_proof(system, kept))
    throw std::logic_error("bases left by the configuration are not a parity proof");
  return make_proof(system, kept);
}

} // namespace ks
