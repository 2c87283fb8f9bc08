#include "ks/incidence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ks/pauli.hpp"

namespace ks {

const char *to_string(BasisKind k) {
  switch (k) {
  case BasisKind::Pure: return "pure";
  case BasisKind::Hybrid: return "hybrid";
  case BasisKind::Other: return "other";
  }
  return "?";
}

RaySystem::RaySystem(std::string label, std::vector<Ray> rays, std::vector<Basis> bases,
                     std::vector<int> ray_triads, std::vector<int> parent_rays,
                     std::vector<int> parent_bases)
    : label_(std::move(label)), rays_(std::move(rays)), bases_(std::move(bases)),
      ray_triads_(std::move(ray_triads)), parent_rays_(std::move(parent_rays)),
      parent_bases_(std::move(parent_bases)) {
  const int n = ray_count();
  if (n > kMaxRays) throw std::invalid_argument("ray systems are limited to 64 rays");
  if (basis_count() > BasisSet::kCapacity)
    throw std::invalid_argument("ray systems are limited to 128 bases");
  if (ray_triads_.empty()) ray_triads_.assign(n, -1);
  if (parent_rays_.empty())
    for (int r = 0; r < n; ++r) parent_rays_.push_back(r);
  if (parent_bases_.empty())
    for (int b = 0; b < basis_count(); ++b) parent_bases_.push_back(b);
  if (static_cast<int>(ray_triads_.size()) != n || static_cast<int>(parent_rays_.size()) != n ||
      static_cast<int>(parent_bases_.size()) != basis_count())
    throw std::invalid_argument("ray system side tables have the wrong length");

  ray_bases_.assign(n, BasisSet{});
  basis_masks_.assign(basis_count(), 0);
  for (int b = 0; b < basis_count(); ++b) {
    for (int r : bases_[b].rays) {
      if (r < 0 || r >= n) throw std::invalid_argument("basis references unknown ray");
      ray_bases_[r].set(b);
      basis_masks_[b] |= RayMask{1} << r;
    }
  }
}

int RaySystem::local_ray(int parent_id) const {
  auto it = std::find(parent_rays_.begin(), parent_rays_.end(), parent_id);
  return it == parent_rays_.end() ? -1 : static_cast<int>(it - parent_rays_.begin());
}

int RaySystem::find_basis(std::array<int, 4> rays) const {
  RayMask m = 0;
  for (int r : rays) {
    if (r < 0 || r >= ray_count()) return -1;
    m |= RayMask{1} << r;
  }
  for (int b = 0; b < basis_count(); ++b)
    if (basis_masks_[b] == m) return b;
  return -1;
}

int RaySystem::count_kind(BasisKind k) const {
  return static_cast<int>(
      std::count_if(bases_.begin(), bases_.end(), [k](const Basis &b) { return b.kind == k; }));
}

IncidenceMatrixGF2 RaySystem::incidence() const {
  IncidenceMatrixGF2 m(ray_count(), basis_count());
  for (int b = 0; b < basis_count(); ++b)
    for (int r : bases_[b].rays) m.set(r, b);
  return m;
}

std::string RaySystem::brief_symbol() const {
  return std::to_string(ray_count()) + "-" + std::to_string(basis_count());
}

std::string RaySystem::expanded_symbol() const {
  std::map<int, int> by_degree;
  for (int r = 0; r < ray_count(); ++r) ++by_degree[ray_degree(r)];
  std::ostringstream os;
  bool first = true;
  for (auto [deg, count] : by_degree) {
    if (!first) os << ' ';
    os << count << '_' << deg;
    first = false;
  }
  os << '-' << basis_count() << "_4";
  return os.str();
}

namespace {

Basis classify(std::array<int, 4> rays, const std::vector<int> &ray_triads) {
  Basis b;
  std::sort(rays.begin(), rays.end());
  b.rays = rays;
  std::map<int, int> counts;
  for (int r : rays) ++counts[ray_triads[r]];
  if (counts.count(-1)) return b;
  if (counts.size() == 1) {
    b.kind = BasisKind::Pure;
  } else if (counts.size() == 2 && counts.begin()->second == 2) {
    b.kind = BasisKind::Hybrid;
    b.parents = {counts.begin()->first, std::next(counts.begin())->first};
  }
  return b;
}

int kind_rank(BasisKind k) { return k == BasisKind::Pure ? 0 : k == BasisKind::Hybrid ? 1 : 2; }

} // namespace

RaySystem build_bases(std::string label, std::vector<Ray> rays, std::vector<int> ray_triads) {
  const int n = static_cast<int>(rays.size());
  if (n > kMaxRays) throw std::invalid_argument("build_bases supports at most 64 rays");
  if (ray_triads.empty()) ray_triads.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rays[a] == rays[b]) throw std::invalid_argument("duplicate ray " + rays[a].str());

  std::vector<RayMask> adj(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (is_orthogonal(rays[a], rays[b])) {
        adj[a] |= RayMask{1} << b;
        adj[b] |= RayMask{1} << a;
      }

  std::vector<Basis> bases;
  for (int a = 0; a < n; ++a) {
    RayMask after_a = adj[a] & ~((RayMask{2} << a) - 1);
    for_each_bit(after_a, [&](int b) {
      RayMask ab = after_a & adj[b] & ~((RayMask{2} << b) - 1);
      for_each_bit(ab, [&](int c) {
        RayMask abc = ab & adj[c] & ~((RayMask{2} << c) - 1);
        for_each_bit(abc, [&](int d) {
          if (abc & adj[d])
            throw std::invalid_argument("five mutually orthogonal rays: input is not a 4-d ray set");
          bases.push_back(classify({a, b, c, d}, ray_triads));
        });
      });
    });
  }
  std::stable_sort(bases.begin(), bases.end(), [](const Basis &x, const Basis &y) {
    if (kind_rank(x.kind) != kind_rank(y.kind)) return kind_rank(x.kind) < kind_rank(y.kind);
    return x.rays < y.rays;
  });
  return RaySystem(std::move(label), std::move(rays), std::move(bases), std::move(ray_triads), {}, {});
}

const RaySystem &full_system() {
  static const RaySystem sys = [] {
    std::vector<Ray> rays;
    std::vector<int> triads;
    const auto &all = enumerate_triads();
    for (int t = 0; t < static_cast<int>(all.size()); ++t) {
      for (const auto &er : triad_eigenbasis(all[t])) {
        rays.push_back(er.ray);
        triads.push_back(t);
      }
    }
    return build_bases("60-105", std::move(rays), std::move(triads));
  }();
  return sys;
}

RaySystem restrict_system(const RaySystem &parent, std::string label, RayMask parent_rays,
                          const std::function<bool(const Basis &)> &keep) {
  std::vector<int> local(parent.ray_count(), -1);
  std::vector<Ray> rays;
  std::vector<int> triads, root_rays;
  for (int r = 0; r < parent.ray_count(); ++r) {
    if (!((parent_rays >> r) & 1u)) continue;
    local[r] = static_cast<int>(rays.size());
    rays.push_back(parent.ray(r));
    triads.push_back(parent.ray_triad(r));
    root_rays.push_back(parent.parent_ray(r));
  }
  std::vector<Basis> bases;
  std::vector<int> root_bases;
  for (int b = 0; b < parent.basis_count(); ++b) {
    if ((parent.basis_mask(b) & ~parent_rays) != 0) continue;
    const Basis &pb = parent.basis(b);
    if (keep && !keep(pb)) continue;
    Basis nb = pb;
    for (auto &r : nb.rays) r = local[r];
    bases.push_back(nb);
    root_bases.push_back(parent.parent_basis(b));
  }
  return RaySystem(std::move(label), std::move(rays), std::move(bases), std::move(triads),
                   std::move(root_rays), std::move(root_bases));
}

RaySystem basis_subsystem(const RaySystem &parent, std::string label, const BasisSet &bases) {
  RayMask used = 0;
  bases.for_each([&](int b) { used |= parent.basis_mask(b); });
  return restrict_system(parent, std::move(label), used, [&](const Basis &b) {
    return bases.test(parent.find_basis(b.rays));
  });
}

DegreeProfile degree_profile(const RaySystem &system, int ray_id) {
  if (ray_id < 0 || ray_id >= system.ray_count())
    throw std::out_of_range("unknown ray id " + std::to_string(ray_id));
  DegreeProfile p;
  const Ray &r = system.ray(ray_id);
  for (int s = 0; s < system.ray_count(); ++s) {
    if (s == ray_id || !is_orthogonal(r, system.ray(s))) continue;
    ++p.neighbors;
    int together = (system.bases_of_ray(ray_id) & system.bases_of_ray(s)).count();
    ++p.cooccurrence[together];
  }
  return p;
}

bool is_saturated(const RaySystem &system) {
  for (int a = 0; a < system.ray_count(); ++a)
    for (int b = a + 1; b < system.ray_count(); ++b)
      if (is_orthogonal(system.ray(a), system.ray(b)) &&
          !system.bases_of_ray(a).intersects(system.bases_of_ray(b)))
        return false;
  return true;
}

std::vector<Mating> hybrid_mating_rule(const RaySystem &system) {
  const auto &triads = enumerate_triads();
  const auto &observables = enumerate_observables();
  std::vector<std::vector<int>> triad_rays(triads.size());
  for (int r = 0; r < system.ray_count(); ++r)
    if (system.ray_triad(r) >= 0) triad_rays[system.ray_triad(r)].push_back(r);

  std::vector<Mating> out;
  for (int a = 0; a < static_cast<int>(triads.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(triads.size()); ++b) {
      if (shared_observables(triads[a], triads[b]) != 1) continue;
      if (triad_rays[a].size() != 4 || triad_rays[b].size() != 4)
        throw std::logic_error("hybrid_mating_rule needs complete pure bases");
      int shared = -1;
      for (int o : triads[a].observable_ids)
        if (triads[b].contains_observable(o)) shared = o;
      Mating m{a, b, shared, {-1, -1}};
      // half[t][0] holds the +1 eigenrays of the shared observable
      std::array<std::array<std::vector<int>, 2>, 2> half;
      for (int side = 0; side < 2; ++side)
        for (int r : triad_rays[side == 0 ? a : b])
          half[side][observable_eigenvalue(observables[shared], system.ray(r)) > 0 ? 0 : 1]
              .push_back(r);
      for (int k = 0; k < 2; ++k) {
        const auto &x = half[0][k];
        const auto &y = half[1][1 - k];
        if (x.size() != 2 || y.size() != 2) throw std::logic_error("eigenvalue split is not 2+2");
        int id = system.find_basis({x[0], x[1], y[0], y[1]});
        if (id < 0) throw std::logic_error("predicted hybrid basis is missing");
        m.hybrids[k] = id;
      }
      out.push_back(m);
    }
  }
  return out;
}

} // namespace ks
