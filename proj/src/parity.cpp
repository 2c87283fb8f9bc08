#include "ks/parity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace ks {

std::string ProofProfile::brief() const {
  return std::to_string(rays) + "-" + std::to_string(bases);
}

std::string ProofProfile::expanded() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << ' ';
    os << terms[k].second << '_' << terms[k].first;
  }
  os << '-' << bases << "_4";
  return os.str();
}

int ProofProfile::weighted_total() const {
  int total = 0;
  for (auto [m, count] : terms) total += m * count;
  return total;
}

std::vector<int> ray_multiplicities(const RaySystem &system, const BasisSet &bases) {
  std::vector<int> mult(system.ray_count(), 0);
  bases.for_each([&](int b) {
    for (int r : system.basis(b).rays) ++mult[r];
  });
  return mult;
}

ProofProfile profile(const RaySystem &system, const BasisSet &bases) {
  ProofProfile p;
  p.bases = bases.count();
  std::map<int, int> hist;
  for (int m : ray_multiplicities(system, bases)) {
    if (m == 0) continue;
    ++p.rays;
    ++hist[m];
  }
  p.terms.assign(hist.begin(), hist.end());
  return p;
}

bool is_parity_proof(const RaySystem &system, const BasisSet &bases) {
  if (bases.count() % 2 == 0) return false;
  RayMask parity = 0;
  bool in_range = true;
  bases.for_each([&](int b) {
    if (b >= system.basis_count()) in_range = false;
    else parity ^= system.basis_mask(b);
  });
  return in_range && parity == 0;
}

ParityProof make_proof(const RaySystem &system, const BasisSet &bases) {
  if (!is_parity_proof(system, bases))
    throw std::invalid_argument("basis set is not a parity proof in " + system.label());
  ParityProof p;
  p.system_label = system.label();
  p.bases = bases;
  p.multiplicities = ray_multiplicities(system, bases);
  p.profile = profile(system, bases);
  return p;
}

KernelBasis kernel_basis(const RaySystem &system) { return kernel_basis(system.incidence()); }

CapExceeded::CapExceeded(int dimension, int cap)
    : std::runtime_error("kernel dimension " + std::to_string(dimension) +
                         " exceeds the enumeration cap of " + std::to_string(cap) +
                         "; enumerate a subsystem instead"),
      dimension_(dimension) {}

void for_each_odd_kernel_vector(const KernelBasis &kernel, int cap,
                                const std::function<void(const BasisSet &)> &visit) {
  const int k = kernel.dimension();
  if (k > cap || k > 62) throw CapExceeded(k, cap);
  BasisSet v;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    v ^= kernel.vectors[std::countr_zero(i)];
    if (v.count() & 1) visit(v);
  }
}

std::vector<ParityProof> enumerate_parity_proofs(const RaySystem &system, const KernelBasis &kernel,
                                                 int cap) {
  std::vector<BasisSet> sets;
  for_each_odd_kernel_vector(kernel, cap, [&](const BasisSet &v) { sets.push_back(v); });
  std::sort(sets.begin(), sets.end(), [](const BasisSet &a, const BasisSet &b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<ParityProof> out;
  out.reserve(sets.size());
  for (const auto &s : sets) {
    ParityProof p;
    p.system_label = system.label();
    p.bases = s;
    p.multiplicities = ray_multiplicities(system, s);
    p.profile = profile(system, s);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

class ExactOneSolver {
public:
  ExactOneSolver(const RaySystem &system, const BasisSet &selected)
      : system_(system), selected_(selected), ray_sel_(system.ray_count()) {
    for (int r = 0; r < system.ray_count(); ++r) ray_sel_[r] = system.bases_of_ray(r) & selected;
  }

  bool solve(std::vector<int> &chosen) { return search(BasisSet{}, chosen); }

private:
  bool search(const BasisSet &covered, std::vector<int> &chosen) {
    const BasisSet open = minus(selected_, covered);
    if (open.none()) return true;

    int best_count = 5;
    std::array<int, 4> best{};
    for (int word = 0; word < 2 && best_count > 1; ++word) {
      std::uint64_t bits = open.word(word);
      while (bits && best_count > 1) {
        const int b = word * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        std::array<int, 4> cand{};
        int n = 0;
        for (int r : system_.basis(b).rays)
          if (!ray_sel_[r].intersects(covered)) cand[n++] = r;
        if (n == 0) return false;
        if (n < best_count) {
          best_count = n;
          best = cand;
        }
      }
    }
    for (int k = 0; k < best_count; ++k) {
      const int r = best[k];
      chosen.push_back(r);
      if (search(covered | ray_sel_[r], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const RaySystem &system_;
  BasisSet selected_;
  std::vector<BasisSet> ray_sel_;
};

} // namespace

Coloring is_colorable(const RaySystem &system, const BasisSet &bases) {
  ExactOneSolver solver(system, bases);
  Coloring c;
  c.colorable = solver.solve(c.true_rays);
  if (!c.colorable) c.true_rays.clear();
  std::sort(c.true_rays.begin(), c.true_rays.end());
  return c;
}

bool is_basis_critical(const RaySystem &system, const BasisSet &bases) {
  bool critical = true;
  for (int b : bases.ids()) {
    BasisSet rest = bases;
    rest.reset(b);
    if (!is_colorable(system, rest).colorable) {
      critical = false;
      break;
    }
  }
  return critical;
}

ParityProof complement(const RaySystem &system, const ParityProof &proof) {
  if (system.basis_count() % 2 != 0)
    throw std::invalid_argument("complement needs a system with an even number of bases");
  return make_proof(system, minus(system.all_bases(), proof.bases));
}

BasisSet reduce_to_critical(const RaySystem &system, const BasisSet &bases) {
  if (is_colorable(system, bases).colorable)
    throw std::invalid_argument("reduce_to_critical needs an uncolorable basis set");
  BasisSet current = bases;
  // One pass suffices: a deletion refused now stays refused on subsets.
  for (int b : bases.ids()) {
    BasisSet trial = current;
    trial.reset(b);
    if (!is_colorable(system, trial).colorable) current = trial;
  }
  return current;
}

bool CriticalityCache::is_critical(const RaySystem &system, const BasisSet &bases) {
  {
    std::lock_guard lock(mu_);
    if (auto it = verdicts_.find(bases); it != verdicts_.end()) return it->second;
  }
  bool v = is_basis_critical(system, bases);
  std::lock_guard lock(mu_);
  verdicts_.emplace(bases, v);
  return v;
}

std::size_t CriticalityCache::size() const {
  std::lock_guard lock(mu_);
  return verdicts_.size();
}

int worker_threads() {
  if (const char *env = std::getenv("KS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<bool> criticality(const RaySystem &system, const std::vector<ParityProof> &proofs,
                              CriticalityCache *cache) {
  std::vector<char> verdict(proofs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < proofs.size(); i = next++)
      verdict[i] = cache ? cache->is_critical(system, proofs[i].bases)
                         : is_basis_critical(system, proofs[i].bases);
  };
  const int threads = std::min<int>(worker_threads(), std::max<std::size_t>(1, proofs.size() / 64));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return {verdict.begin(), verdict.end()};
}

std::vector<CensusRow> census(const std::vector<ParityProof> &proofs,
                              const std::vector<bool> &critical) {
  std::map<std::pair<int, std::string>, CensusRow> rows;
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    const auto &p = proofs[i].profile;
    auto &row = rows[{p.bases, p.expanded()}];
    row.brief = p.brief();
    row.expanded = p.expanded();
    row.bases = p.bases;
    ++row.count;
    if (i < critical.size() && critical[i]) ++row.critical;
  }
  std::vector<CensusRow> out;
  for (auto &[key, row] : rows) out.push_back(row);
  return out;
}

std::map<std::string, std::int64_t> critical_brief_census(const RaySystem &system, int cap) {
  auto proofs = enumerate_parity_proofs(system, kernel_basis(system), cap);
  auto crit = criticality(system, proofs);
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < proofs.size(); ++i)
    if (crit[i]) ++out[proofs[i].profile.brief()];
  return out;
}

std::map<std::string, std::map<std::string, std::int64_t>>
classify_isomers(const std::vector<ParityProof> &proofs) {
  std::map<std::string, std::map<std::string, std::int64_t>> out;
  for (const auto &p : proofs) ++out[p.profile.brief()][p.profile.expanded()];
  return out;
}

ProofProfile parse_expanded_symbol(const std::string &symbol) {
  auto dash = symbol.rfind('-');
  if (dash == std::string::npos) throw std::invalid_argument("expanded symbol needs '-': " + symbol);
  ProofProfile p;
  std::string left = symbol.substr(0, dash), right = symbol.substr(dash + 1);
  auto us = right.find('_');
  p.bases = std::stoi(right.substr(0, us));
  std::map<int, int> hist;
  std::istringstream in(left);
  std::string term;
  while (in >> term) {
    auto u = term.find('_');
    if (u == std::string::npos) throw std::invalid_argument("bad symbol term '" + term + "'");
    int count = std::stoi(term.substr(0, u));
    int mult = std::stoi(term.substr(u + 1));
    hist[mult] += count;
    p.rays += count;
  }
  p.terms.assign(hist.begin(), hist.end());
  if (p.terms.empty() || p.weighted_total() != 4 * p.bases)
    throw std::invalid_argument("ray multiplicities do not add up to 4 per basis: " + symbol);
  return p;
}

} // namespace ks
