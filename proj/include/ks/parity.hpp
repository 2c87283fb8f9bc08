#pragma once

// Parity proofs: odd sets of bases covering every ray an even number of
// times. Enumeration goes through the GF(2) kernel of the incidence matrix;
// colorability and basis-criticality are decided by exact search.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ks/bitset.hpp"
#include "ks/gf2.hpp"
#include "ks/incidence.hpp"

namespace ks {

/// Ray-multiplicity histogram of a set of bases.
struct ProofProfile {
  int rays = 0;   // rays with nonzero multiplicity
  int bases = 0;
  /// (multiplicity m, number of rays R_m), ascending m, m > 0.
  std::vector<std::pair<int, int>> terms;

  /// "30-15"
  std::string brief() const;
  /// "30_2 2_4-17_4"
  std::string expanded() const;
  /// Multiplicity-weighted ray count; equals 4 * bases.
  int weighted_total() const;

  friend bool operator==(const ProofProfile &, const ProofProfile &) = default;
};

struct ParityProof {
  std::string system_label;
  BasisSet bases;
  std::vector<int> multiplicities;  // per system ray
  ProofProfile profile;

  int basis_count() const { return bases.count(); }
};

std::vector<int> ray_multiplicities(const RaySystem &system, const BasisSet &bases);
ProofProfile profile(const RaySystem &system, const BasisSet &bases);

/// Odd number of bases and every ray covered an even number of times.
bool is_parity_proof(const RaySystem &system, const BasisSet &bases);

/// Materializes a proof; throws std::invalid_argument if bases is not one.
ParityProof make_proof(const RaySystem &system, const BasisSet &bases);

KernelBasis kernel_basis(const RaySystem &system);

inline constexpr int kDefaultKernelCap = 26;

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(int dimension, int cap);
  int dimension() const { return dimension_; }

private:
  int dimension_;
};

/// Visits every odd-weight vector of span(kernel) in Gray-code order.
/// Throws CapExceeded when the kernel dimension is above cap.
void for_each_odd_kernel_vector(const KernelBasis &kernel, int cap,
                                const std::function<void(const BasisSet &)> &visit);

/// All parity proofs of the system, ordered by basis count and then
/// lexicographically by basis ids.
std::vector<ParityProof> enumerate_parity_proofs(const RaySystem &system, const KernelBasis &kernel,
                                                 int cap = kDefaultKernelCap);

struct Coloring {
  bool colorable = false;
  /// Rays valued 1 (local ids) when colorable.
  std::vector<int> true_rays;
};

/// Is there a 0/1 valuation of the rays with exactly one 1 in each listed
/// basis? Depth-first exact cover, most constrained basis first.
Coloring is_colorable(const RaySystem &system, const BasisSet &bases);

/// Every single-basis deletion is colorable.
bool is_basis_critical(const RaySystem &system, const BasisSet &bases);
inline bool is_basis_critical(const RaySystem &system, const ParityProof &proof) {
  return is_basis_critical(system, proof.bases);
}

/// Basis complement within the system; throws std::invalid_argument if the
/// system has an odd number of bases. The result is a parity proof but its
/// criticality is not implied.
ParityProof complement(const RaySystem &system, const ParityProof &proof);

/// Greedily drops bases whose removal keeps the set uncolorable, in
/// increasing id order, until no such basis exists. Throws
/// std::invalid_argument if the input is colorable.
BasisSet reduce_to_critical(const RaySystem &system, const BasisSet &bases);

/// Thread-safe memo of criticality verdicts keyed by basis set.
class CriticalityCache {
public:
  bool is_critical(const RaySystem &system, const BasisSet &bases);
  std::size_t size() const;

private:
  mutable std::mutex mu_;
  std::unordered_map<BasisSet, bool, BasisSetHash> verdicts_;
};

/// Number of worker threads: KS_THREADS if set (>= 1), otherwise hardware
/// concurrency.
int worker_threads();

/// Criticality verdict for each proof, computed in parallel.
std::vector<bool> criticality(const RaySystem &system, const std::vector<ParityProof> &proofs,
                              CriticalityCache *cache = nullptr);

struct CensusRow {
  std::string brief;
  std::string expanded;
  int bases = 0;
  std::int64_t count = 0;
  std::int64_t critical = 0;
};

/// Counts grouped by expanded symbol, ordered by basis count then symbol.
std::vector<CensusRow> census(const std::vector<ParityProof> &proofs,
                              const std::vector<bool> &critical);

/// Brief symbols of the critical proofs of a system with their counts.
std::map<std::string, std::int64_t> critical_brief_census(const RaySystem &system,
                                                          int cap = kDefaultKernelCap);

/// brief symbol -> expanded symbol -> number of proofs.
std::map<std::string, std::map<std::string, std::int64_t>>
classify_isomers(const std::vector<ParityProof> &proofs);

/// Parses "30_2 2_4-17_4" (terms separated by whitespace, any order) into
/// a profile. Throws std::invalid_argument when the multiplicities do not
/// add up to four per basis.
ProofProfile parse_expanded_symbol(const std::string &symbol);

} // namespace ks
