#include "ks/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "ks/pauli.hpp"

namespace ks {

namespace {

int parse_index(const std::string &text, int lo, int hi, const std::string &what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception &) {
    throw AddressError(what + " must be a number, got '" + text + "'");
  }
  if (used != text.size()) throw AddressError(what + " must be a number, got '" + text + "'");
  if (v < lo || v > hi)
    throw AddressError(what + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

std::pair<int, int> parse_pair(const std::string &text, int k_max) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw AddressError("expected <covering>,<subset>, got '" + text + "'");
  return {parse_index(text.substr(0, comma), 1, 6, "covering"),
          parse_index(text.substr(comma + 1), 1, k_max, "subset index")};
}

std::string join_ids(const std::vector<int> &ids, int width = 0) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) os << ' ';
    os << std::setw(width) << ids[k];
  }
  return os.str();
}

} // namespace

// ---- catalog --------------------------------------------------------------

Catalog::Catalog() : full_(full_system()) {}

const SymmetryGroup &Catalog::group() {
  if (!group_) group_ = std::make_unique<SymmetryGroup>(SymmetryGroup::build(full_));
  return *group_;
}

const SymmetryGroup &Catalog::extended_group() {
  if (!extended_group_)
    extended_group_ = std::make_unique<SymmetryGroup>(SymmetryGroup::build_with_conjugation(full_));
  return *extended_group_;
}

const std::vector<Dodecagon> &Catalog::dodecagons() {
  if (!dodecagons_) dodecagons_ = find_dodecagons(full_);
  return *dodecagons_;
}

const std::vector<Covering> &Catalog::coverings() {
  if (!coverings_) coverings_ = find_coverings(full_, dodecagons());
  return *coverings_;
}

const char *Catalog::address_help() {
  return "60-105 | 40-40:<1..6> | 36-36:<c>,<1..10> | 36-45:<c>,<1..10> | "
         "48-60:<c>,<1..5> | 48-72:<c>,<1..5> | peres:<1..10> | dodecagon:<1..15> "
         "(c = covering 1..6)";
}

const RaySystem &Catalog::system(const std::string &address) {
  for (const auto &[key, sys] : cache_)
    if (key == address) return *sys;
  auto sys = std::make_unique<RaySystem>(build(address));
  sys->set_label(address);
  cache_.emplace_back(address, std::move(sys));
  return *cache_.back().second;
}

RaySystem Catalog::build(const std::string &address) {
  if (address == "60-105") return full_;
  auto colon = address.find(':');
  if (colon == std::string::npos)
    throw AddressError("unknown system '" + address + "'; expected " + address_help());
  const std::string kind = address.substr(0, colon), arg = address.substr(colon + 1);

  if (kind == "40-40") return drop_mub_row(full_, parse_index(arg, 1, 6, "MUB row"));
  if (kind == "peres") {
    auto systems = find_peres_subsystems(full_, group());
    return systems.at(parse_index(arg, 1, static_cast<int>(systems.size()), "Peres index") - 1);
  }
  if (kind == "dodecagon") {
    const auto &d = dodecagons();
    int n = parse_index(arg, 1, static_cast<int>(d.size()), "dodecagon index");
    return dodecagon_system(full_, d[n - 1], address);
  }
  if (kind == "36-36" || kind == "36-45" || kind == "48-60" || kind == "48-72") {
    const int k = kind[0] == '3' ? 3 : 4;
    auto [c, idx] = parse_pair(arg, covering_subset_count(k));
    const Covering &cov = coverings().at(c - 1);
    const bool with_pure = kind == "36-45" || kind == "48-72";
    return build_covering_system(full_, dodecagons(), cov, covering_subset(cov, k, idx), with_pure,
                                 address);
  }
  throw AddressError("unknown system '" + address + "'; expected " + address_help());
}

// ---- tables ---------------------------------------------------------------

std::string rays_table(const RaySystem &full) {
  std::ostringstream os;
  const auto &triads = enumerate_triads();
  os << std::left << std::setw(22) << "Operators" << "++        +-        -+        --\n";
  for (std::size_t t = 0; t < triads.size(); ++t) {
    os << std::setw(22) << triads[t].name();
    for (int k = 0; k < 4; ++k) {
      const int r = static_cast<int>(4 * t) + k;
      std::string cell = std::to_string(r + 1) + "=" + full.ray(r).compact();
      os << (k < 3 ? std::setw(10) : std::setw(0)) << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string bases_table(const RaySystem &system) {
  std::ostringstream os;
  for (int b = 0; b < system.basis_count(); ++b) {
    const auto &basis = system.basis(b);
    std::vector<int> ids;
    for (int r : basis.rays) ids.push_back(r + 1);
    os << std::right << std::setw(3) << b + 1 << ": " << join_ids(ids, 2) << "  "
       << to_string(basis.kind) << '\n';
  }
  return os.str();
}

std::string mubs_table() {
  std::ostringstream os;
  const auto &rows = mub_partitions();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> ids;
    for (int t : rows[i]) ids.push_back(t + 1);
    os << i + 1 << ": " << join_ids(ids, 2) << '\n';
  }
  return os.str();
}

std::string dodecagons_table(const std::vector<Dodecagon> &dodecagons) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dodecagons.size(); ++i) {
    std::vector<int> ids;
    for (int r : dodecagons[i].vertices) ids.push_back(r + 1);
    os << std::setw(2) << i + 1 << ": " << join_ids(ids, 2) << '\n';
  }
  return os.str();
}

std::string coverings_table(const std::vector<Covering> &coverings) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coverings.size(); ++i) {
    std::vector<int> ids;
    for (int d : coverings[i]) ids.push_back(d + 1);
    os << i + 1 << ": " << join_ids(ids, 2) << '\n';
  }
  return os.str();
}

Json rays_json(const RaySystem &full) {
  Json out = Json::array();
  for (int r = 0; r < full.ray_count(); ++r)
    out.push_back({{"id", r + 1},
                   {"components", full.ray(r).str()},
                   {"triad", full.ray_triad(r) + 1},
                   {"observables", enumerate_triads().at(full.ray_triad(r)).name()}});
  return out;
}

Json bases_json(const RaySystem &system) {
  Json out = Json::array();
  for (int b = 0; b < system.basis_count(); ++b) {
    std::vector<int> ids;
    for (int r : system.basis(b).rays) ids.push_back(r + 1);
    out.push_back({{"id", b + 1}, {"rays", ids}, {"kind", to_string(system.basis(b).kind)}});
  }
  return out;
}

Json mubs_json() {
  Json out = Json::array();
  for (const auto &row : mub_partitions()) {
    std::vector<int> ids;
    for (int t : row) ids.push_back(t + 1);
    out.push_back(ids);
  }
  return out;
}

Json dodecagons_json(const std::vector<Dodecagon> &dodecagons) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dodecagons.size(); ++i) {
    const auto &d = dodecagons[i];
    std::vector<int> vertices, triads;
    for (int r : d.vertices) vertices.push_back(r + 1);
    for (int t : d.triads) triads.push_back(t + 1);
    out.push_back({{"id", i + 1},
                   {"vertices", vertices},
                   {"triads", triads},
                   {"observable", enumerate_observables().at(d.observable).name()}});
  }
  return out;
}

Json coverings_json(const std::vector<Covering> &coverings) {
  Json out = Json::array();
  for (const auto &c : coverings) {
    std::vector<int> ids;
    for (int d : c) ids.push_back(d + 1);
    out.push_back(ids);
  }
  return out;
}

std::string generate_text(Catalog &catalog, const std::string &target) {
  if (target == "rays") return rays_table(catalog.full());
  if (target == "bases") return bases_table(catalog.full());
  if (target == "mubs") return mubs_table();
  if (target == "dodecagons") return dodecagons_table(catalog.dodecagons());
  if (target == "coverings") return coverings_table(catalog.coverings());
  throw std::invalid_argument("unknown table '" + target +
                              "'; expected rays, bases, mubs, dodecagons or coverings");
}

Json generate_json(Catalog &catalog, const std::string &target) {
  if (target == "rays") return rays_json(catalog.full());
  if (target == "bases") return bases_json(catalog.full());
  if (target == "mubs") return mubs_json();
  if (target == "dodecagons") return dodecagons_json(catalog.dodecagons());
  if (target == "coverings") return coverings_json(catalog.coverings());
  throw std::invalid_argument("unknown table '" + target +
                              "'; expected rays, bases, mubs, dodecagons or coverings");
}

std::string census_table(const std::vector<CensusRow> &rows) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "expanded" << std::setw(8) << "brief" << std::right
     << std::setw(10) << "count" << std::setw(10) << "critical" << '\n';
  std::int64_t total = 0, crit = 0;
  for (const auto &r : rows) {
    os << std::left << std::setw(26) << r.expanded << std::setw(8) << r.brief << std::right
       << std::setw(10) << r.count << std::setw(10) << r.critical << '\n';
    total += r.count;
    crit += r.critical;
  }
  os << std::left << std::setw(34) << "total" << std::right << std::setw(10) << total
     << std::setw(10) << crit << '\n';
  return os.str();
}

// ---- ledger ---------------------------------------------------------------

void to_json(Json &j, const LedgerRecord &r) {
  j = Json{{"system", r.system},
           {"basisIds", r.basis_ids},
           {"brief", r.brief},
           {"expanded", r.expanded},
           {"critical", r.critical}};
  if (r.orbit) j["orbit"] = *r.orbit;
}

void from_json(const Json &j, LedgerRecord &r) {
  r.system = j.at("system").get<std::string>();
  r.basis_ids = j.at("basisIds").get<std::vector<int>>();
  r.brief = j.at("brief").get<std::string>();
  r.expanded = j.at("expanded").get<std::string>();
  r.critical = j.at("critical").get<bool>();
  r.orbit.reset();
  if (j.contains("orbit") && !j["orbit"].is_null()) r.orbit = j["orbit"].get<int>();
}

LedgerRecord make_record(const ParityProof &proof, bool critical) {
  LedgerRecord r;
  r.system = proof.system_label;
  for (int b : proof.bases.ids()) r.basis_ids.push_back(b + 1);
  r.brief = proof.profile.brief();
  r.expanded = proof.profile.expanded();
  r.critical = critical;
  return r;
}

BasisSet record_bases(const LedgerRecord &record) {
  BasisSet out;
  for (int id : record.basis_ids) {
    if (id < 1 || id > kMaxBases) throw std::out_of_range("basis id " + std::to_string(id) + " out of range");
    out.set(id - 1);
  }
  return out;
}

std::vector<LedgerRecord> read_ledger(std::istream &in) {
  std::vector<LedgerRecord> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line).get<LedgerRecord>());
    } catch (const Json::exception &e) {
      throw std::runtime_error("ledger line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::vector<LedgerRecord> read_ledger_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ledger " + path);
  return read_ledger(in);
}

void write_record(std::ostream &out, const LedgerRecord &record) {
  out << Json(record).dump() << '\n';
}

void write_ledger_file(const std::string &path, const std::vector<LedgerRecord> &records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write ledger " + path);
  for (const auto &r : records) write_record(out, r);
}

// ---- proof files ----------------------------------------------------------

Ray parse_ray_text(const std::string &text) {
  if (text.find(',') != std::string::npos) return parse_ray(text);
  std::array<GaussInt, kDim> v{};
  int k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ' ') continue;
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      if (++i == text.size()) break;
    }
    if (k == kDim) throw std::invalid_argument("too many components in ray '" + text + "'");
    switch (text[i]) {
    case '0': v[k++] = GaussInt{0}; break;
    case '1': v[k++] = GaussInt{sign}; break;
    case 'i': v[k++] = GaussInt{0, sign}; break;
    default: throw std::invalid_argument("bad component in ray '" + text + "'");
    }
  }
  if (k != kDim) throw std::invalid_argument("ray '" + text + "' needs 4 components");
  return canonicalize(v);
}

ProofInput parse_proof(Catalog &catalog, const Json &j) {
  if (!j.is_object() || !j.contains("system"))
    throw std::invalid_argument("proof file needs a \"system\" field");
  ProofInput in;
  in.system = j["system"].get<std::string>();
  const RaySystem &sys = catalog.system(in.system);

  if (j.contains("basisIds")) {
    for (const auto &v : j["basisIds"]) {
      int id = v.get<int>();
      if (id < 1 || id > sys.basis_count())
        throw std::invalid_argument("basis id " + std::to_string(id) + " out of range for " + in.system);
      in.bases.set(id - 1);
    }
    return in;
  }
  if (!j.contains("bases")) throw std::invalid_argument("proof file needs \"basisIds\" or \"bases\"");
  for (const auto &entry : j["bases"]) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument("each basis must list four rays");
    std::array<int, 4> rays{};
    for (int k = 0; k < 4; ++k) {
      const auto &v = entry[k];
      int id = -1;
      if (v.is_number_integer()) {
        id = v.get<int>() - 1;
        if (id < 0 || id >= sys.ray_count())
          throw std::invalid_argument("ray id " + std::to_string(id + 1) + " out of range for " + in.system);
      } else {
        Ray r = parse_ray_text(v.get<std::string>());
        const auto &all = sys.rays();
        auto it = std::find(all.begin(), all.end(), r);
        if (it == all.end())
          throw std::invalid_argument("ray " + r.str() + " is not in " + in.system);
        id = static_cast<int>(it - all.begin());
      }
      rays[k] = id;
    }
    int b = sys.find_basis(rays);
    if (b < 0) throw std::invalid_argument("rays " + entry.dump() + " are not a basis of " + in.system);
    in.bases.set(b);
  }
  return in;
}

Verdict verify_proof(const RaySystem &system, const BasisSet &bases) {
  Verdict v;
  v.odd = bases.count() % 2 == 1;
  std::vector<int> mult(system.ray_count(), 0);
  bases.for_each([&](int b) {
    if (b >= system.basis_count()) throw std::out_of_range("basis id out of range");
    for (int r : system.basis(b).rays) ++mult[r];
  });
  v.even_cover = std::all_of(mult.begin(), mult.end(), [](int m) { return m % 2 == 0; });
  v.parity = v.odd && v.even_cover;
  v.profile = profile(system, bases);
  if (!is_colorable(system, bases).colorable) {
    for (int b : bases.ids()) {
      BasisSet rest = bases;
      rest.reset(b);
      if (!is_colorable(system, rest).colorable) v.uncolorable_without.push_back(b + 1);
    }
    v.critical = v.uncolorable_without.empty();
  }
  return v;
}

Json verdict_json(const Verdict &v) {
  return Json{{"parity", v.parity},
              {"oddBasisCount", v.odd},
              {"evenMultiplicities", v.even_cover},
              {"critical", v.critical},
              {"brief", v.profile.brief()},
              {"expanded", v.profile.expanded()},
              {"redundantBases", v.uncolorable_without}};
}

// ---- orbits ---------------------------------------------------------------

std::vector<OrbitSummary> assign_orbits(Catalog &catalog, std::vector<LedgerRecord> &records,
                                        bool with_conjugation) {
  std::vector<OrbitSummary> out;
  if (records.empty()) return out;
  const SymmetryGroup &group = with_conjugation ? catalog.extended_group() : catalog.group();
  std::unordered_map<BasisSet, int, BasisSetHash> orbit_of;
  for (auto &rec : records) {
    const RaySystem &sys = catalog.system(rec.system);
    BasisSet lifted;
    for (int id : rec.basis_ids) {
      if (id < 1 || id > sys.basis_count())
        throw std::invalid_argument("record basis id " + std::to_string(id) + " out of range for " +
                                    rec.system);
      lifted.set(sys.parent_basis(id - 1));
    }
    auto it = orbit_of.find(lifted);
    if (it == orbit_of.end()) {
      const int id = static_cast<int>(out.size()) + 1;
      auto orbit = group.basis_orbit(lifted);
      for (const auto &m : orbit.members) orbit_of.emplace(m, id);
      out.push_back({id, rec.expanded, orbit.size(), 0});
      it = orbit_of.find(lifted);
    }
    rec.orbit = it->second;
    ++out[it->second - 1].records;
  }
  return out;
}

std::string orbit_table(const std::vector<OrbitSummary> &orbits) {
  std::ostringstream os;
  os << std::left << std::setw(7) << "orbit" << std::setw(26) << "expanded" << std::right
     << std::setw(8) << "size" << std::setw(10) << "records" << '\n';
  for (const auto &o : orbits)
    os << std::left << std::setw(7) << o.id << std::setw(26) << o.expanded << std::right
       << std::setw(8) << o.size << std::setw(10) << o.records << '\n';
  return os.str();
}

Json config_json(const TenThreeConfig &config) {
  std::vector<int> points;
  for (int p : config.points) points.push_back(p + 1);
  Json blocks = Json::array();
  for (const auto &b : config.blocks) blocks.push_back({b[0] + 1, b[1] + 1, b[2] + 1});
  return Json{{"kind", to_string(config.kind)}, {"points", points}, {"blocks", blocks}};
}

} // namespace ks
