// Command-line front end: table generation, enumeration, verification,
// orbit assignment, Desargues constructions and the larger-proof search.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "ks/desargues.hpp"
#include "ks/io.hpp"
#include "ks/search.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapExceeded = 3 };

using namespace ks;

int cmd_generate(Catalog &catalog, const std::string &target, bool json) {
  if (json) std::cout << generate_json(catalog, target).dump(2) << '\n';
  else std::cout << generate_text(catalog, target);
  return kOk;
}

int cmd_enumerate(Catalog &catalog, const std::string &address, bool critical_only, bool census_only,
                  const std::string &ledger, int cap) {
  const RaySystem &sys = catalog.system(address);
  const KernelBasis kernel = kernel_basis(sys);
  std::cerr << sys.label() << ": " << sys.expanded_symbol() << ", kernel dimension "
            << kernel.dimension() << '\n';
  auto proofs = enumerate_parity_proofs(sys, kernel, cap);
  auto crit = criticality(sys, proofs);

  if (!ledger.empty()) {
    std::ofstream out(ledger, std::ios::app);
    if (!out) throw std::runtime_error("cannot open ledger " + ledger);
    for (std::size_t i = 0; i < proofs.size(); ++i)
      if (!critical_only || crit[i]) write_record(out, make_record(proofs[i], crit[i]));
  }

  auto rows = census(proofs, crit);
  if (critical_only) {
    std::vector<CensusRow> kept;
    for (auto r : rows)
      if (r.critical) {
        r.count = r.critical;
        kept.push_back(r);
      }
    rows = kept;
  }
  std::cout << census_table(rows);
  if (census_only) {
    std::cout << "critical brief symbols:";
    std::set<std::pair<int, std::string>> briefs;
    for (const auto &r : rows)
      if (r.critical) briefs.insert({r.bases * 1000 + std::stoi(r.brief), r.brief});
    for (const auto &[key, b] : briefs) std::cout << ' ' << b;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_verify(Catalog &catalog, const std::string &path, bool json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return kUsage;
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception &e) {
    std::cerr << "malformed proof file: " << e.what() << '\n';
    return kUsage;
  }
  const ProofInput input = parse_proof(catalog, j);
  const Verdict v = verify_proof(catalog.system(input.system), input.bases);
  if (json) {
    Json out = verdict_json(v);
    out["system"] = input.system;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "system    " << input.system << '\n'
              << "bases     " << input.bases.count() << '\n'
              << "parity    " << (v.parity ? "yes" : "no") << '\n'
              << "critical  " << (v.critical ? "yes" : "no") << '\n'
              << "symbol    " << v.profile.expanded() << '\n';
  }
  return v.parity && v.critical ? kOk : kVerifyFailed;
}

int cmd_orbits(Catalog &catalog, const std::string &ledger, const std::string &out_path,
               bool with_conjugation) {
  auto records = read_ledger_file(ledger);
  auto orbits = assign_orbits(catalog, records, with_conjugation);
  write_ledger_file(out_path.empty() ? ledger : out_path, records);
  std::cout << orbit_table(orbits);
  return kOk;
}

int cmd_desargues(Catalog &catalog, const std::string &address, bool json) {
  const RaySystem &sys = catalog.system(address);
  if (sys.ray_count() != 40 || sys.basis_count() != 40)
    throw std::invalid_argument("desargues needs a 40-40 system, got " + sys.brief_symbol());

  std::set<BasisSet> enumerated;
  for (const auto &p : enumerate_parity_proofs(sys, kernel_basis(sys)))
    if (p.profile.rays == 30 && p.profile.bases == 15) enumerated.insert(p.bases);

  Json report = Json::array();
  std::set<BasisSet> constructed;
  for (BlockKind kind : {BlockKind::Line, BlockKind::Triangle}) {
    const auto configs = find_configs(sys, kind);
    for (const auto &c : configs) {
      const ParityProof p = construct_30_15(sys, c);
      constructed.insert(p.bases);
      Json entry = config_json(c);
      std::vector<int> ids;
      for (int b : p.bases.ids()) ids.push_back(b + 1);
      entry["proof"] = ids;
      entry["expanded"] = p.profile.expanded();
      report.push_back(entry);
    }
    if (!json) std::cout << to_string(kind) << "-type configurations: " << configs.size() << '\n';
  }
  const bool match = constructed == enumerated;
  if (json) {
    std::cout << Json{{"system", address}, {"configs", report}, {"matchesEnumeration", match}}.dump(2)
              << '\n';
  } else {
    for (const auto &e : report)
      std::cout << e["kind"].get<std::string>() << " points " << e["points"].dump() << " -> bases "
                << e["proof"].dump() << '\n';
    std::cout << "constructed 30-15 proofs: " << constructed.size()
              << ", enumerated: " << enumerated.size() << (match ? ", identical" : ", DIFFERENT")
              << '\n';
  }
  return match ? kOk : kVerifyFailed;
}

int cmd_search(Catalog &catalog, ProfileSearchOptions opts, bool json) {
  const auto result = search_profiles(catalog, opts);
  if (json) {
    Json hits = Json::array();
    for (const auto &h : result.hits)
      hits.push_back({{"symbol", h.target},
                      {"system", h.system},
                      {"basisIds", h.basis_ids},
                      {"fullBasisIds", h.full_basis_ids},
                      {"trial", h.trial}});
    std::cout << Json{{"hits", hits},
                      {"missing", result.missing},
                      {"trials", result.trials},
                      {"seconds", result.seconds}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto &h : result.hits)
      std::cout << "found    " << h.target << "  in " << h.system << " (trial " << h.trial << ")\n";
    for (const auto &m : result.missing) std::cout << "missing  " << m << '\n';
    std::cout << result.trials << " trials, " << result.seconds << " s\n";
  }
  return result.missing.empty() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Parity proofs in the two-qubit 60-ray system"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string target;
  auto *gen = app.add_subcommand("generate", "Print a table: rays, bases, mubs, dodecagons, coverings");
  gen->add_option("target", target)->required()->check(
      CLI::IsMember({"rays", "bases", "mubs", "dodecagons", "coverings"}));

  std::string system = "40-40:6", ledger;
  bool critical_only = false, census_only = false;
  int cap = kDefaultKernelCap;
  auto *en = app.add_subcommand("enumerate", "Enumerate every parity proof of a system");
  en->add_option("--system", system, Catalog::address_help())->required();
  en->add_flag("--critical-only", critical_only, "Keep only basis-critical proofs");
  en->add_flag("--census", census_only, "Also list the brief symbols of critical proofs");
  en->add_option("--ledger", ledger, "Append proofs to this JSON Lines ledger");
  en->add_option("--cap", cap, "Largest kernel dimension to enumerate")->capture_default_str();

  std::string proof_path;
  auto *ver = app.add_subcommand("verify", "Check a proof file");
  ver->add_option("proof", proof_path)->required();

  std::string orbit_ledger, orbit_out;
  auto *orb = app.add_subcommand("orbits", "Assign symmetry orbit ids to ledger records");
  orb->add_option("ledger", orbit_ledger)->required();
  orb->add_option("--out", orbit_out, "Write the annotated ledger here instead of in place");
  bool conjugation = false;
  orb->add_flag("--with-conjugation", conjugation, "Also use complex conjugation as a symmetry");

  std::string des_system = "40-40:6";
  auto *des = app.add_subcommand("desargues", "Desarguesian configurations and their 30-15 proofs");
  des->add_option("--system", des_system)->capture_default_str();

  ProfileSearchOptions sopts;
  auto *srch = app.add_subcommand("search", "Look for critical proofs with given expanded symbols");
  srch->add_option("--symbol", sopts.targets, "Target expanded symbol (repeatable)");
  srch->add_option("--system", sopts.systems, "Restrict to these systems (repeatable)");
  srch->add_option("--seed", sopts.seed)->capture_default_str();
  srch->add_option("--kernel-dim", sopts.kernel_dimension)->capture_default_str();
  srch->add_option("--budget", sopts.time_budget_seconds, "Seconds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Catalog catalog;
  try {
    if (*gen) return cmd_generate(catalog, target, json);
    if (*en) return cmd_enumerate(catalog, system, critical_only, census_only, ledger, cap);
    if (*ver) return cmd_verify(catalog, proof_path, json);
    if (*orb) return cmd_orbits(catalog, orbit_ledger, orbit_out, conjugation);
    if (*des) return cmd_desargues(catalog, des_system, json);
    if (*srch) return cmd_search(catalog, sopts, json);
  } catch (const CapExceeded &e) {
    std::cerr << e.what() << '\n';
    return kCapExceeded;
  } catch (const AddressError &e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
