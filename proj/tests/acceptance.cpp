// Acceptance runner: prints one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so known failures stay visible in the
// output without breaking the test suite, and any change in either
// direction is caught.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "ks/desargues.hpp"
#include "ks/io.hpp"
#include "ks/pauli.hpp"
#include "ks/search.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace ks;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

BasisSet lift(const RaySystem &s, const BasisSet &local) {
  BasisSet out;
  local.for_each([&](int b) { out.set(s.parent_basis(b)); });
  return out;
}

RayMask parent_mask(const RaySystem &s) {
  RayMask m = 0;
  for (int r : s.parent_rays()) m |= RayMask{1} << r;
  return m;
}

void c1_triads_and_rays(Catalog &cat, Outcome &o) {
  const auto &triads = enumerate_triads();
  bool names = triads.size() == 15;
  for (std::size_t t = 0; names && t < triads.size(); ++t) names = triads[t].name() == ref::kTriadNames[t];
  bool rays = cat.full().ray_count() == 60;
  for (int r = 0; rays && r < 60; ++r) rays = cat.full().ray(r) == testing::compact_ray(ref::kRays60[r]);
  o.require(names, "triad listing");
  o.require(rays, "ray listing");
  o.detail << "15 triads, 60 rays compared with the reference listing";
}

void c2_bases(Catalog &cat, Outcome &o) {
  const RaySystem &full = cat.full();
  o.require(full.basis_count() == 105, "105 bases");
  o.require(full.count_kind(BasisKind::Pure) == 15 && full.count_kind(BasisKind::Hybrid) == 90,
            "15 pure + 90 hybrid");
  bool listing = full.basis_count() == 105;
  for (int b = 0; listing && b < 105; ++b) {
    const auto &q = ref::kBases60[b];
    listing = full.basis(b).rays == std::array<int, 4>{q[0] - 1, q[1] - 1, q[2] - 1, q[3] - 1};
  }
  o.require(listing, "basis listing");
  bool degree = true, prof = true;
  for (int r = 0; r < full.ray_count(); ++r) {
    degree = degree && full.ray_degree(r) == 7;
    const auto p = degree_profile(full, r);
    prof = prof && p.neighbors == 15 && p.cooccurrence == std::map<int, int>{{1, 12}, {3, 3}};
  }
  o.require(degree, "degree 7");
  o.require(prof, "orthogonality profile");
  o.require(is_saturated(full), "saturation");
  o.detail << full.expanded_symbol() << ", " << full.count_kind(BasisKind::Pure) << " pure + "
           << full.count_kind(BasisKind::Hybrid) << " hybrid, profile {3x3, 12x1}, saturated";
}

void c3_mubs(Catalog &, Outcome &o) {
  const auto &rows = mub_partitions();
  const auto &triads = enumerate_triads();
  o.require(rows.size() == 6, "6 partitions");
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      int shared = 0;
      for (int a : rows[i])
        for (int b : rows[j]) shared += a == b;
      o.require(shared == 1, "one shared triad per pair of partitions");
    }
  bool unbiased = true;
  for (const auto &row : rows)
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) unbiased = unbiased && eigenbases_unbiased(triads[row[i]], triads[row[j]]);
  o.require(unbiased, "intra-partition unbiasedness");
  bool listing = rows.size() == 6;
  for (std::size_t r = 0; listing && r < rows.size(); ++r) {
    std::set<std::string> got, want;
    for (int t : rows[r]) got.insert(triads[t].name());
    for (auto n : ref::kMubRows[r]) want.insert(std::string(n));
    listing = got == want;
  }
  o.require(listing, "rows match the reference listing");
  o.detail << rows.size() << " partitions, pairwise one shared triad, eigenbases unbiased";
}

void c4_census_40(Catalog &cat, Outcome &o) {
  const std::map<std::string, std::int64_t> expected{
      {"30_2-15_4", 64},       {"30_2 2_4-17_4", 2880}, {"30_2 4_4-19_4", 13440},
      {"30_2 6_4-21_4", 13440}, {"30_2 8_4-23_4", 2880}, {"30_2 10_4-25_4", 64}};
  for (int row = 1; row <= 6; ++row) {
    const std::string addr = "40-40:" + std::to_string(row);
    const RaySystem &s = cat.system(addr);
    const KernelBasis k = kernel_basis(s);
    o.require(k.dimension() == 16, addr + " kernel dimension");
    const auto proofs = enumerate_parity_proofs(s, k);
    o.require(proofs.size() == 32768, addr + " proof count");
    const auto crit = criticality(s, proofs);
    std::map<std::string, std::int64_t> counts;
    std::int64_t critical = 0;
    for (const auto &r : census(proofs, crit)) {
      counts[r.expanded] = r.count;
      critical += r.critical;
    }
    o.require(counts == expected, addr + " census");
    o.require(critical == static_cast<std::int64_t>(proofs.size()), addr + " criticality");

    std::set<BasisSet> all;
    for (const auto &p : proofs) all.insert(p.bases);
    std::map<std::string, std::int64_t> complemented;
    bool closed = true;
    for (const auto &p : proofs) {
      const ParityProof c = complement(s, p);
      closed = closed && all.count(c.bases);
      ++complemented[c.profile.expanded()];
    }
    o.require(closed && complemented == counts, addr + " complement symmetry");
  }
  o.detail << "6 systems: kernel 16, 32768 proofs, census {64, 2880, 13440, 13440, 2880, 64}, all "
              "critical, complement-closed";
}

void c5_peres(Catalog &cat, Outcome &o) {
  const auto orbit = cat.group().ray_orbit(real_rays(cat.full()));
  o.require(orbit.size() == 10, "10 Peres subsystems");
  std::vector<std::size_t> counts;
  for (int k = 1; k <= orbit.size(); ++k) {
    const RaySystem &p = cat.system("peres:" + std::to_string(k));
    counts.push_back(enumerate_parity_proofs(p, kernel_basis(p)).size());
    o.require(counts.back() == 512, p.label() + " proof count");
  }
  o.detail << orbit.size() << " subsystems in the orbit, each with " << (counts.empty() ? 0 : counts[0])
           << " proofs";
}

void c6_symmetry(Catalog &cat, Outcome &o) {
  const SymmetryGroup &g = cat.group();
  const GroupReport rep = verify_group_axioms(g, cat.full());
  o.require(g.order() == 11520, "11520 permutations");
  o.require(rep.ok(), "group axioms " + rep.failure);

  std::set<BasisSet> proofs;
  for (int row = 1; row <= 6; ++row) {
    const RaySystem &s = cat.system("40-40:" + std::to_string(row));
    for (const auto &p : enumerate_parity_proofs(s, kernel_basis(s)))
      if (p.profile.brief() == "30-15") proofs.insert(lift(s, p.bases));
  }
  auto orbit_sizes = [&](const SymmetryGroup &group) {
    std::set<BasisSet> seen;
    std::vector<std::int64_t> sizes;
    for (const auto &p : proofs)
      if (!seen.count(p)) {
        const auto orbit = group.basis_orbit(p);
        seen.insert(orbit.members.begin(), orbit.members.end());
        sizes.push_back(orbit.size());
      }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  const auto unitary = orbit_sizes(g);
  const auto extended = orbit_sizes(cat.extended_group());
  o.require(unitary == std::vector<std::int64_t>{192, 192}, "30-15 proofs in 2 orbits of 192");

  const auto orbit40 = g.ray_orbit(parent_mask(cat.system("40-40:1")));
  o.require(orbit40.size() == 6, "40-40 orbit of 6");

  auto list = [](const std::vector<std::int64_t> &v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "+" : "") << v[i];
    return s.str();
  };
  o.detail << "order " << g.order() << ", closure " << (rep.closed ? "verified" : "FAILED") << " from "
           << rep.generators << " generators; " << proofs.size() << " 30-15 proofs form "
           << unitary.size() << " unitary orbits (" << list(unitary) << "), " << extended.size()
           << " orbits with conjugation (" << list(extended) << "); 40-40 orbit " << orbit40.size();
}

void c7_desargues(Catalog &cat, Outcome &o) {
  const RaySystem &s = cat.system("40-40:6");
  std::set<BasisSet> enumerated, constructed;
  for (const auto &p : enumerate_parity_proofs(s, kernel_basis(s)))
    if (p.profile.brief() == "30-15") enumerated.insert(p.bases);
  std::size_t counts[2] = {0, 0};
  bool example_ok = false;
  const std::array<int, 10> example{3, 7, 10, 12, 17, 20, 27, 29, 34, 38};
  const BasisSet reference = testing::bases_from_quads(s, ref::kProof30_15);
  for (BlockKind kind : {BlockKind::Line, BlockKind::Triangle}) {
    const auto configs = find_configs(s, kind);
    counts[kind == BlockKind::Triangle] = configs.size();
    for (const auto &c : configs) {
      const ParityProof p = construct_30_15(s, c);
      constructed.insert(p.bases);
      if (kind == BlockKind::Line && c.points == example) example_ok = p.bases == reference;
    }
  }
  o.require(counts[0] == 32, "32 line-type configurations");
  o.require(counts[1] == 32, "32 triangle-type configurations");
  o.require(example_ok, "example configuration reproduces the reference 30-15 proof");
  o.require(constructed == enumerated && enumerated.size() == 64, "constructions equal enumeration");
  o.detail << counts[0] << " line-type, " << counts[1] << " triangle-type; example construction "
           << (example_ok ? "matches" : "differs") << "; " << constructed.size() << " constructed = "
           << enumerated.size() << " enumerated";
}

void c8_census_36(Catalog &cat, Outcome &o) {
  const RaySystem &s = cat.system("36-36:1,1");
  std::set<std::string> got;
  for (const auto &[brief, n] : critical_brief_census(s)) got.insert(brief);
  const std::set<std::string> want{"18-9",  "22-11", "24-13", "26-13", "26-15", "28-15",
                                   "29-15", "30-15", "30-17", "31-17", "32-17", "32-19",
                                   "33-19", "34-19", "34-21", "35-21", "36-21"};
  o.require(got == want, "critical brief symbol set");
  const BasisSet bold = testing::bases_from_quads(s, ref::kProof36_15);
  const BasisSet rest = testing::bases_from_quads(s, ref::kProof36_15Rest);
  const Verdict vb = verify_proof(s, bold), vr = verify_proof(s, rest);
  o.require(vb.parity && vb.critical && vb.profile.expanded() == "26_2 2_4-15_4", "bold proof");
  o.require(vr.parity && vr.critical && vr.profile.expanded() == "26_2 8_4-21_4", "complement");
  o.detail << got.size() << " critical brief symbols (18-9 .. 36-21) as listed; "
           << vb.profile.expanded() << " and " << vr.profile.expanded() << " verify";
}

void c9_reference_proofs(Catalog &cat, Outcome &o) {
  struct Case {
    const char *system;
    const std::vector<std::array<int, 4>> *bases;
    const char *symbol;
  };
  const Case cases[] = {{"40-40:6", &ref::kProof30_15, "30_2-15_4"},
                        {"40-40:6", &ref::kProof32_17, "30_2 2_4-17_4"},
                        {"40-40:6", &ref::kProof34_19, "30_2 4_4-19_4"},
                        {"36-36:1,1", &ref::kProof36_15, "26_2 2_4-15_4"},
                        {"60-105", &ref::kProof60_29, "40_2 3_4 4_6-29_4"}};
  int ok = 0;
  for (const auto &c : cases) {
    const RaySystem &s = cat.system(c.system);
    const Verdict v = verify_proof(s, testing::bases_from_quads(s, *c.bases));
    const bool good = v.parity && v.critical && v.profile.expanded() == c.symbol;
    o.require(good, std::string(c.system) + " " + c.symbol);
    ok += good;
  }
  o.detail << ok << "/5 listed proofs pass parity and criticality with their symbols";
}

void c10_dodecagons(Catalog &cat, Outcome &o) {
  const auto &dodecagons = cat.dodecagons();
  const auto &triads = enumerate_triads();
  o.require(dodecagons.size() == 15, "15 dodecagons");
  bool shape = true, unbiased = true;
  for (std::size_t d = 0; d < dodecagons.size(); ++d) {
    const RaySystem &s = cat.system("dodecagon:" + std::to_string(d + 1));
    shape = shape && s.expanded_symbol() == "12_3-9_4" && s.count_kind(BasisKind::Pure) == 3;
    const auto &t = dodecagons[d].triads;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) unbiased = unbiased && eigenbases_unbiased(triads[t[i]], triads[t[j]]);
  }
  o.require(shape, "each a 12_3-9_4 configuration with 3 pure bases");
  o.require(unbiased, "3 mutually unbiased pure bases");
  const auto &coverings = cat.coverings();
  bool listing = coverings.size() == 6;
  for (std::size_t c = 0; listing && c < coverings.size(); ++c)
    for (int k = 0; k < 5; ++k) listing = listing && coverings[c][k] + 1 == ref::kCoverings[c][k];
  o.require(listing, "6 coverings matching the reference listing");
  o.detail << dodecagons.size() << " dodecagons, all 12_3-9_4; pure bases "
           << (unbiased ? "mutually unbiased" : "NOT mutually unbiased (each pair shares one observable)")
           << "; " << coverings.size() << " coverings match";
}

void c11_profiles(Catalog &cat, Outcome &o) {
  ProfileSearchOptions opts;
  opts.time_budget_seconds = 1800;
  const auto result = search_profiles(cat, opts);
  o.require(result.missing.empty(), "every listed symbol found");
  const RaySystem &full = cat.full();
  const Verdict witness = verify_proof(full, testing::bases_from_quads(full, ref::kProof60_29));
  o.require(witness.parity && witness.critical, "reference 29-basis witness");
  bool genuine = true;
  for (const auto &h : result.hits) {
    BasisSet b;
    for (int id : h.full_basis_ids) b.set(id - 1);
    genuine = genuine && is_parity_proof(full, b) && is_basis_critical(full, b) &&
              profile(full, b).expanded() == h.target;
  }
  o.require(genuine, "hits re-verified in the 60-105 system");
  o.detail << result.hits.size() << "/" << opts.targets.size() << " symbols found in "
           << result.trials << " trials";
  for (const auto &m : result.missing) o.detail << "; missing " << m;
}

void c12_oracles(Catalog &cat, Outcome &o) {
  int systems = 0, agree = 0;
  std::size_t proofs = 0;
  auto check = [&](const RaySystem &s) {
    ++systems;
    const auto brute = oracle::brute_force_proofs(s);
    const bool same = brute == oracle::kernel_proofs(s);
    agree += same;
    proofs += brute.size();
    o.require(same, s.label());
  };
  for (int d = 1; d <= 15; ++d) check(cat.system("dodecagon:" + std::to_string(d)));
  for (const char *parent : {"60-105", "40-40:6", "36-36:1,1", "peres:1"})
    for (const auto &s : oracle::truncated_systems(cat.system(parent), 3, 12)) check(s);
  for (const char *parent : {"40-40:6", "36-36:1,1", "peres:1", "peres:7"})
    for (const auto &s : oracle::padded_systems(cat.system(parent), 4, 12)) check(s);
  o.detail << agree << "/" << systems << " systems with at most 20 bases agree (" << proofs
           << " proofs in total)";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> expect_fail, only;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char *, std::function<void(Catalog &, Outcome &)>>> criteria{
      {"triads and rays", c1_triads_and_rays},
      {"basis table", c2_bases},
      {"MUB partitions", c3_mubs},
      {"40-40 census", c4_census_40},
      {"Peres subsystems", c5_peres},
      {"symmetry group", c6_symmetry},
      {"Desargues configurations", c7_desargues},
      {"36-36 census", c8_census_36},
      {"explicit proofs", c9_reference_proofs},
      {"dodecagons and coverings", c10_dodecagons},
      {"larger-proof profiles", c11_profiles},
      {"brute-force cross-check", c12_oracles},
  };

  Catalog catalog;
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(catalog, o);
    } catch (const std::exception &e) {
      o.pass = false;
      o.failures += std::string(" [exception: ") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(n);
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << ": " << o.detail.str() << o.failures << " (" << std::fixed << std::setprecision(1) << secs << " s)"
              << std::endl;
  }

  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (!only.empty()) {
    std::set<int> selected(only.begin(), only.end());
    std::erase_if(expected, [&](int n) { return !selected.count(n); });
  }
  if (failed != expected) {
    std::cout << "failing criteria differ from the expected set" << std::endl;
    return 1;
  }
  return 0;
}
