#include "ks/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

constexpr std::array<GaussInt, 4> kPhases{GaussInt{1}, GaussInt{-1}, GaussInt{0, 1}, GaussInt{0, -1}};

std::vector<std::uint8_t> basis_image(const RaySystem &system, const std::vector<std::uint8_t> &rays,
                                      bool *ok) {
  std::vector<std::uint8_t> out(system.basis_count());
  for (int b = 0; b < system.basis_count(); ++b) {
    std::array<int, 4> img{};
    for (int k = 0; k < 4; ++k) img[k] = rays[system.basis(b).rays[k]];
    int id = system.find_basis(img);
    if (id < 0) {
      *ok = false;
      return {};
    }
    out[b] = static_cast<std::uint8_t>(id);
  }
  *ok = true;
  return out;
}

std::vector<RayMask> relation_masks(const RaySystem &s, bool (*rel)(const Ray &, const Ray &)) {
  std::vector<RayMask> m(s.ray_count(), 0);
  for (int a = 0; a < s.ray_count(); ++a)
    for (int b = 0; b < s.ray_count(); ++b)
      if (a != b && rel(s.ray(a), s.ray(b))) m[a] |= RayMask{1} << b;
  return m;
}

RayMask permute_mask(const std::vector<std::uint8_t> &perm, RayMask m) {
  RayMask out = 0;
  for_each_bit(m, [&](int r) { out |= RayMask{1} << perm[r]; });
  return out;
}

} // namespace

bool UnitarySpec::phase_rule_holds() const {
  int imaginary = 0;
  for (auto p : phases) imaginary += p.im != 0;
  return imaginary % 2 == 0;
}

std::string UnitarySpec::str() const {
  std::ostringstream os;
  os << "basis " << target_basis + 1 << " order " << arrangement[0] + 1 << arrangement[1] + 1
     << arrangement[2] + 1 << arrangement[3] + 1 << " phases (" << unit_token(phases[0]) << ','
     << unit_token(phases[1]) << ',' << unit_token(phases[2]) << ')';
  return os.str();
}

std::vector<UnitarySpec> all_unitary_specs() {
  std::vector<UnitarySpec> out;
  out.reserve(15 * 24 * 32);
  for (int t = 0; t < 15; ++t) {
    std::array<int, 4> arr{0, 1, 2, 3};
    do {
      for (auto a : kPhases)
        for (auto b : kPhases)
          for (auto c : kPhases) {
            UnitarySpec s{t, arr, {a, b, c}};
            if (s.phase_rule_holds()) out.push_back(s);
          }
    } while (std::next_permutation(arr.begin(), arr.end()));
  }
  return out;
}

ExactMatrix unitary_matrix(const RaySystem &full, const UnitarySpec &spec) {
  if (spec.target_basis < 0 || spec.target_basis >= full.basis_count() ||
      full.basis(spec.target_basis).kind != BasisKind::Pure)
    throw std::invalid_argument("unitary target must be a pure basis");
  const Basis &target = full.basis(spec.target_basis);
  ExactMatrix u{};
  for (int col = 0; col < 4; ++col) {
    const Ray &x = full.ray(target.rays[spec.arrangement[col]]);
    ExactScalar scale = ExactScalar::inv_sqrt(x.norm2());
    if (col > 0) scale = scale * ExactScalar(spec.phases[col - 1]);
    for (int row = 0; row < 4; ++row) u[row][col] = ExactScalar(x[row]) * scale;
  }
  return u;
}

bool is_unitary(const ExactMatrix &u) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      ExactScalar dot;
      for (int k = 0; k < 4; ++k) dot = dot + u[k][a].conj() * u[k][b];
      if (!(dot == ExactScalar(GaussInt{a == b ? 1 : 0}))) return false;
    }
  return true;
}

SpecImage apply_spec(const RaySystem &full, const UnitarySpec &spec) {
  const ExactMatrix u = unitary_matrix(full, spec);
  std::map<Ray, int> lookup;
  for (int r = 0; r < full.ray_count(); ++r) lookup.emplace(full.ray(r), r);

  SpecImage out;
  out.ray_perm.resize(full.ray_count());
  for (int r = 0; r < full.ray_count(); ++r) {
    std::array<ExactScalar, kDim> v{};
    for (int row = 0; row < 4; ++row)
      for (int k = 0; k < 4; ++k) v[row] = v[row] + u[row][k] * ExactScalar(full.ray(r)[k]);
    try {
      auto it = lookup.find(canonicalize(v));
      if (it == lookup.end()) {
        out.escaping_ray = r;
        out.reason = "image " + canonicalize(v).compact() + " is not a system ray";
      } else {
        out.ray_perm[r] = it->second;
      }
    } catch (const std::invalid_argument &) {
      out.escaping_ray = r;
      out.reason = "image is not a {0,+-1,+-i} ray";
    }
    if (!out.ok()) {
      out.ray_perm.clear();
      break;
    }
  }
  return out;
}

std::string SymmetryGroup::key(const std::vector<std::uint8_t> &perm) {
  return {perm.begin(), perm.end()};
}

void SymmetryGroup::add(SymmetryElement e) {
  auto k = key(e.rays);
  if (!index_.emplace(std::move(k), order()).second)
    throw std::logic_error("duplicate group element");
  elements_.push_back(std::move(e));
}

SymmetryGroup SymmetryGroup::build(const RaySystem &full) {
  SymmetryGroup g;
  g.ray_count_ = full.ray_count();
  g.basis_count_ = full.basis_count();
  for (const auto &spec : all_unitary_specs()) {
    SpecImage img = apply_spec(full, spec);
    if (!img.ok())
      throw std::logic_error("unitary " + spec.str() + " moves ray " +
                             std::to_string(img.escaping_ray + 1) + " out of the system: " + img.reason);
    SymmetryElement e;
    e.rays.assign(img.ray_perm.begin(), img.ray_perm.end());
    bool ok = false;
    e.bases = basis_image(full, e.rays, &ok);
    if (!ok) throw std::logic_error("unitary " + spec.str() + " does not preserve the bases");
    e.spec = spec;
    g.add(std::move(e));
  }
  return g;
}

std::vector<std::uint8_t> conjugation_permutation(const RaySystem &system) {
  std::map<Ray, int> lookup;
  for (int r = 0; r < system.ray_count(); ++r) lookup.emplace(system.ray(r), r);
  std::vector<std::uint8_t> perm(system.ray_count());
  for (int r = 0; r < system.ray_count(); ++r) {
    std::array<GaussInt, kDim> v{};
    for (int k = 0; k < kDim; ++k) v[k] = system.ray(r)[k].conj();
    auto it = lookup.find(canonicalize(v));
    if (it == lookup.end())
      throw std::logic_error("conjugate of ray " + std::to_string(r + 1) + " is not in the system");
    perm[r] = static_cast<std::uint8_t>(it->second);
  }
  return perm;
}

SymmetryGroup SymmetryGroup::build_with_conjugation(const RaySystem &full) {
  SymmetryGroup g = build(full);
  const auto conj = conjugation_permutation(full);
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    SymmetryElement e;
    e.rays.resize(full.ray_count());
    for (int r = 0; r < full.ray_count(); ++r) e.rays[r] = g.elements_[i].rays[conj[r]];
    bool ok = false;
    e.bases = basis_image(full, e.rays, &ok);
    if (!ok) throw std::logic_error("antiunitary element does not preserve the bases");
    e.spec = g.elements_[i].spec;
    e.conjugating = true;
    g.add(std::move(e));
  }
  return g;
}

SymmetryGroup SymmetryGroup::from_permutations(const RaySystem &system,
                                               const std::vector<std::vector<int>> &ray_perms) {
  SymmetryGroup g;
  g.ray_count_ = system.ray_count();
  g.basis_count_ = system.basis_count();
  for (const auto &p : ray_perms) {
    if (static_cast<int>(p.size()) != system.ray_count())
      throw std::invalid_argument("permutation has the wrong length");
    SymmetryElement e;
    e.rays.assign(p.begin(), p.end());
    bool ok = false;
    e.bases = basis_image(system, e.rays, &ok);
    if (!ok) e.bases.clear();
    g.add(std::move(e));
  }
  return g;
}

std::optional<int> SymmetryGroup::index_of(const std::vector<std::uint8_t> &ray_perm) const {
  auto it = index_.find(key(ray_perm));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SymmetryGroup::identity() const {
  std::vector<std::uint8_t> id(ray_count_);
  for (int r = 0; r < ray_count_; ++r) id[r] = static_cast<std::uint8_t>(r);
  return index_of(id);
}

std::vector<std::uint8_t> SymmetryGroup::compose(int a, int b) const {
  const auto &pa = element(a).rays, &pb = element(b).rays;
  std::vector<std::uint8_t> out(ray_count_);
  for (int r = 0; r < ray_count_; ++r) out[r] = pa[pb[r]];
  return out;
}

std::vector<std::uint8_t> SymmetryGroup::inverse(int a) const {
  const auto &pa = element(a).rays;
  std::vector<std::uint8_t> out(ray_count_);
  for (int r = 0; r < ray_count_; ++r) out[pa[r]] = static_cast<std::uint8_t>(r);
  return out;
}

RayMask SymmetryGroup::apply(int g, RayMask rays) const { return permute_mask(element(g).rays, rays); }

BasisSet SymmetryGroup::apply(int g, const BasisSet &bases) const {
  const auto &pb = element(g).bases;
  if (pb.empty()) throw std::logic_error("group element does not act on bases");
  BasisSet out;
  bases.for_each([&](int b) { out.set(pb[b]); });
  return out;
}

Orbit<RayMask> SymmetryGroup::ray_orbit(RayMask rays) const {
  std::set<RayMask> seen;
  std::int64_t stab = 0;
  for (int g = 0; g < order(); ++g) {
    RayMask img = apply(g, rays);
    stab += img == rays;
    seen.insert(img);
  }
  return {{seen.begin(), seen.end()}, stab};
}

Orbit<BasisSet> SymmetryGroup::basis_orbit(const BasisSet &bases) const {
  std::unordered_map<BasisSet, char, BasisSetHash> seen;
  Orbit<BasisSet> out;
  for (int g = 0; g < order(); ++g) {
    BasisSet img = apply(g, bases);
    out.stabilizer += img == bases;
    if (seen.emplace(img, 1).second) out.members.push_back(img);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

BasisSet SymmetryGroup::canonical_image(const BasisSet &bases) const {
  BasisSet best = bases;
  for (int g = 0; g < order(); ++g) {
    BasisSet img = apply(g, bases);
    if (img < best) best = img;
  }
  return best;
}

GroupReport verify_group_axioms(const SymmetryGroup &group, const RaySystem &system) {
  GroupReport rep;
  rep.order = group.order();
  // Elements are keyed by their permutation, so construction already
  // rejected duplicates.
  rep.distinct = true;
  rep.has_identity = group.identity().has_value();

  rep.preserves_bases = true;
  rep.preserves_kinds = true;
  for (const auto &e : group.elements()) {
    if (static_cast<int>(e.bases.size()) != system.basis_count()) {
      rep.preserves_bases = false;
      rep.preserves_kinds = false;
      break;
    }
    std::vector<char> hit(system.basis_count(), 0);
    for (int b = 0; b < system.basis_count(); ++b) {
      hit[e.bases[b]] = 1;
      if (system.basis(e.bases[b]).kind != system.basis(b).kind) rep.preserves_kinds = false;
    }
    if (std::count(hit.begin(), hit.end(), 1) != system.basis_count()) rep.preserves_bases = false;
  }

  const auto orth = relation_masks(system, is_orthogonal);
  const auto unb = relation_masks(system, is_unbiased);
  rep.preserves_orthogonality = rep.preserves_unbiasedness = true;
  for (const auto &e : group.elements())
    for (int r = 0; r < system.ray_count(); ++r) {
      if (permute_mask(e.rays, orth[r]) != orth[e.rays[r]]) rep.preserves_orthogonality = false;
      if (permute_mask(e.rays, unb[r]) != unb[e.rays[r]]) rep.preserves_unbiasedness = false;
    }

  rep.inverses = true;
  for (int g = 0; g < group.order() && rep.inverses; ++g)
    rep.inverses = group.index_of(group.inverse(g)).has_value();

  // Grow a generating set until the generated subgroup covers every element.
  // Each product of a generated element with a generator must be an element.
  std::vector<int> gens;
  std::vector<char> reached(group.order(), 0);
  std::size_t reached_count = 0;
  rep.closed = rep.has_identity;
  std::deque<int> queue;
  if (rep.has_identity) {
    const int id = *group.identity();
    reached[id] = 1;
    reached_count = 1;
    queue.push_back(id);
  }
  auto rescan_all = [&] {
    queue.clear();
    for (int g = 0; g < group.order(); ++g)
      if (reached[g]) queue.push_back(g);
  };
  while (rep.closed && reached_count < static_cast<std::size_t>(group.order())) {
    int next = 0;
    while (reached[next]) ++next;
    gens.push_back(next);
    rescan_all();
    while (!queue.empty() && rep.closed) {
      const int x = queue.front();
      queue.pop_front();
      for (int gen : gens) {
        auto idx = group.index_of(
            [&] {
              std::vector<std::uint8_t> p(system.ray_count());
              const auto &px = group.element(x).rays, &pg = group.element(gen).rays;
              for (int r = 0; r < system.ray_count(); ++r) p[r] = px[pg[r]];
              return p;
            }());
        if (!idx) {
          rep.closed = false;
          rep.failure = "product of elements " + std::to_string(x) + " and " + std::to_string(gen) +
                        " is not in the group";
          break;
        }
        if (!reached[*idx]) {
          reached[*idx] = 1;
          ++reached_count;
          queue.push_back(*idx);
        }
      }
    }
  }
  rep.generators = static_cast<int>(gens.size());
  if (rep.failure.empty() && !rep.ok()) rep.failure = "group axiom or invariance check failed";
  return rep;
}

std::int64_t count_basis_automorphisms(const RaySystem &system, std::int64_t limit) {
  const int n = system.ray_count();
  const auto orth = relation_masks(system, is_orthogonal);

  // Breadth-first vertex order keeps each new vertex adjacent to earlier ones.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::deque<int> q{s};
    placed[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for_each_bit(orth[v], [&](int w) {
        if (!placed[w]) {
          placed[w] = 1;
          q.push_back(w);
        }
      });
    }
  }

  std::vector<int> image(n, -1);
  RayMask used = 0;
  const RayMask all = n == 64 ? ~RayMask{0} : (RayMask{1} << n) - 1;
  std::int64_t count = 0;
  auto rec = [&](auto &&self, int depth) -> void {
    if (count >= limit) return;
    if (depth == n) {
      std::vector<std::uint8_t> perm(image.begin(), image.end());
      bool ok = false;
      basis_image(system, perm, &ok);
      count += ok;
      return;
    }
    const int v = order[depth];
    RayMask cand = all & ~used;
    for (int d = 0; d < depth && cand; ++d) {
      const int w = order[d];
      cand &= ((orth[v] >> w) & 1) ? orth[image[w]] : ~orth[image[w]];
    }
    for (; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      if (system.ray_degree(u) != system.ray_degree(v)) continue;
      image[v] = u;
      used |= RayMask{1} << u;
      self(self, depth + 1);
      used &= ~(RayMask{1} << u);
      image[v] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

} // namespace ks
