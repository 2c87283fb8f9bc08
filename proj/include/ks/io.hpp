#pragma once

// Named systems, text/JSON tables, ledger records and proof files.
// Ray and basis ids in every external format are 1-based.

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ks/desargues.hpp"
#include "ks/incidence.hpp"
#include "ks/parity.hpp"
#include "ks/subsystems.hpp"
#include "ks/symmetry.hpp"

namespace ks {

using Json = nlohmann::json;

class AddressError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Resolves system addresses and caches the shared structures. Addresses:
///   60-105
///   40-40:<row 1..6>
///   36-36:<covering 1..6>,<3-subset 1..10>    (also 36-45)
///   48-60:<covering 1..6>,<4-subset 1..5>     (also 48-72)
///   peres:<1..10>
///   dodecagon:<1..15>
class Catalog {
public:
  Catalog();

  const RaySystem &full() const { return full_; }
  const SymmetryGroup &group();
  /// group() plus complex conjugation.
  const SymmetryGroup &extended_group();
  const std::vector<Dodecagon> &dodecagons();
  const std::vector<Covering> &coverings();

  /// Throws AddressError for malformed or out-of-range addresses.
  const RaySystem &system(const std::string &address);

  static const char *address_help();

private:
  RaySystem build(const std::string &address);

  const RaySystem &full_;
  std::unique_ptr<SymmetryGroup> group_;
  std::unique_ptr<SymmetryGroup> extended_group_;
  std::optional<std::vector<Dodecagon>> dodecagons_;
  std::optional<std::vector<Covering>> coverings_;
  std::vector<std::pair<std::string, std::unique_ptr<RaySystem>>> cache_;
};

// ---- tables ---------------------------------------------------------------

std::string rays_table(const RaySystem &full);
std::string bases_table(const RaySystem &system);
std::string mubs_table();
std::string dodecagons_table(const std::vector<Dodecagon> &dodecagons);
std::string coverings_table(const std::vector<Covering> &coverings);

Json rays_json(const RaySystem &full);
Json bases_json(const RaySystem &system);
Json mubs_json();
Json dodecagons_json(const std::vector<Dodecagon> &dodecagons);
Json coverings_json(const std::vector<Covering> &coverings);

/// One of rays, bases, mubs, dodecagons, coverings; throws
/// std::invalid_argument otherwise.
std::string generate_text(Catalog &catalog, const std::string &target);
Json generate_json(Catalog &catalog, const std::string &target);

/// Fixed-width census listing: expanded symbol, brief symbol, count,
/// critical count.
std::string census_table(const std::vector<CensusRow> &rows);

// ---- ledger ---------------------------------------------------------------

struct LedgerRecord {
  std::string system;
  std::vector<int> basis_ids;  // 1-based, ascending
  std::string brief;
  std::string expanded;
  bool critical = false;
  std::optional<int> orbit;

  friend bool operator==(const LedgerRecord &, const LedgerRecord &) = default;
};

void to_json(Json &j, const LedgerRecord &r);
void from_json(const Json &j, LedgerRecord &r);

LedgerRecord make_record(const ParityProof &proof, bool critical);
BasisSet record_bases(const LedgerRecord &record);

/// JSON Lines; blank lines are skipped. Throws std::runtime_error with the
/// line number on malformed input.
std::vector<LedgerRecord> read_ledger(std::istream &in);
std::vector<LedgerRecord> read_ledger_file(const std::string &path);
void write_record(std::ostream &out, const LedgerRecord &record);
void write_ledger_file(const std::string &path, const std::vector<LedgerRecord> &records);

// ---- proof files and verification ------------------------------------------

/// Parses "1,i,i,-1", or the compact table form "1ii-1".
Ray parse_ray_text(const std::string &text);

struct ProofInput {
  std::string system;
  BasisSet bases;
};

/// {"system": ..., "basisIds": [..]} or {"system": ..., "bases": [[r,r,r,r],..]}
/// where each r is a 1-based ray id or a ray string. Throws
/// std::invalid_argument on malformed input, unknown rays or non-bases.
ProofInput parse_proof(Catalog &catalog, const Json &j);

struct Verdict {
  bool odd = false;
  bool even_cover = false;
  bool parity = false;
  bool critical = false;
  ProofProfile profile;
  std::vector<int> uncolorable_without;  // 1-based bases whose removal stays uncolorable
};

/// Recomputes multiplicities, parity and basis-criticality from scratch.
Verdict verify_proof(const RaySystem &system, const BasisSet &bases);
Json verdict_json(const Verdict &v);

// ---- orbits ---------------------------------------------------------------

struct OrbitSummary {
  int id = 0;              // 1-based, in order of first appearance
  std::string expanded;
  std::int64_t size = 0;   // orbit size in the 60-105 system
  std::int64_t records = 0;
};

/// Assigns orbit ids (under the unitary symmetry group of the 60-105 system,
/// or the group extended by conjugation) to each record, lifting basis ids
/// into the 60-105 numbering first.
std::vector<OrbitSummary> assign_orbits(Catalog &catalog, std::vector<LedgerRecord> &records,
                                        bool with_conjugation = false);
std::string orbit_table(const std::vector<OrbitSummary> &orbits);

// ---- configurations --------------------------------------------------------

Json config_json(const TenThreeConfig &config);

} // namespace ks
