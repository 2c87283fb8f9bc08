#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ks/desargues.hpp"
#include "ks/io.hpp"
#include "ks/search.hpp"

namespace py = pybind11;
using namespace ks;

namespace {

py::object to_python(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<int> one_based(const BasisSet &s) {
  std::vector<int> ids;
  s.for_each([&](int b) { ids.push_back(b + 1); });
  return ids;
}

BasisSet from_one_based(const RaySystem &sys, const std::vector<int> &ids) {
  BasisSet s;
  for (int id : ids) {
    if (id < 1 || id > sys.basis_count())
      throw py::value_error("basis id " + std::to_string(id) + " out of range for " + sys.label());
    s.set(id - 1);
  }
  return s;
}

py::dict proof_dict(const RaySystem &sys, const ParityProof &p, bool critical) {
  py::dict d;
  d["system"] = sys.label();
  d["basis_ids"] = one_based(p.bases);
  d["brief"] = p.profile.brief();
  d["expanded"] = p.profile.expanded();
  d["critical"] = critical;
  return d;
}

// Systems are owned by the catalog; the Python wrapper keeps the catalog alive.
struct SystemRef {
  std::shared_ptr<Catalog> catalog;
  const RaySystem *system;
  const RaySystem &operator*() const { return *system; }
};

} // namespace

PYBIND11_MODULE(ksparity, m) {
  m.doc() = "Parity proofs of the Kochen-Specker theorem in the two-qubit 60-ray system";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<AddressError>(m, "AddressError", PyExc_ValueError);

  py::class_<SystemRef>(m, "System")
      .def_property_readonly("label", [](const SystemRef &s) { return (*s).label(); })
      .def_property_readonly("ray_count", [](const SystemRef &s) { return (*s).ray_count(); })
      .def_property_readonly("basis_count", [](const SystemRef &s) { return (*s).basis_count(); })
      .def_property_readonly("expanded_symbol", [](const SystemRef &s) { return (*s).expanded_symbol(); })
      .def_property_readonly("brief_symbol", [](const SystemRef &s) { return (*s).brief_symbol(); })
      .def("rays", [](const SystemRef &s) {
        std::vector<std::string> out;
        for (const auto &r : (*s).rays()) out.push_back(r.str());
        return out;
      }, "Ray components as '1,i,-1,0' strings, in id order.")
      .def("bases", [](const SystemRef &s) {
        std::vector<std::array<int, 4>> out;
        for (const auto &b : (*s).bases()) out.push_back({b.rays[0] + 1, b.rays[1] + 1, b.rays[2] + 1, b.rays[3] + 1});
        return out;
      }, "Bases as 1-based ray id quadruples.")
      .def("parent_rays", [](const SystemRef &s) {
        std::vector<int> out;
        for (int r : (*s).parent_rays()) out.push_back(r + 1);
        return out;
      })
      .def("kernel_dimension", [](const SystemRef &s) { return kernel_basis(*s).dimension(); })
      .def("enumerate", [](const SystemRef &s, int cap, bool critical_only) {
        const RaySystem &sys = *s;
        std::vector<ParityProof> proofs;
        std::vector<bool> crit;
        {
          py::gil_scoped_release release;
          proofs = enumerate_parity_proofs(sys, kernel_basis(sys), cap);
          crit = criticality(sys, proofs);
        }
        py::list out;
        for (std::size_t i = 0; i < proofs.size(); ++i)
          if (!critical_only || crit[i]) out.append(proof_dict(sys, proofs[i], crit[i]));
        return out;
      }, py::arg("cap") = kDefaultKernelCap, py::arg("critical_only") = false,
         "Every parity proof, as dicts with basis_ids, brief, expanded and critical.")
      .def("census", [](const SystemRef &s, int cap) {
        const RaySystem &sys = *s;
        std::vector<CensusRow> rows;
        {
          py::gil_scoped_release release;
          const auto proofs = enumerate_parity_proofs(sys, kernel_basis(sys), cap);
          rows = census(proofs, criticality(sys, proofs));
        }
        py::dict out;
        for (const auto &r : rows) out[py::str(r.expanded)] = py::make_tuple(r.count, r.critical);
        return out;
      }, py::arg("cap") = kDefaultKernelCap,
         "expanded symbol -> (proofs, critical proofs)")
      .def("verify", [](const SystemRef &s, const std::vector<int> &basis_ids) {
        return to_python(verdict_json(verify_proof(*s, from_one_based(*s, basis_ids))));
      }, py::arg("basis_ids"))
      .def("desargues_configs", [](const SystemRef &s, const std::string &kind) {
        if (kind != "line" && kind != "triangle") throw py::value_error("kind must be 'line' or 'triangle'");
        const RaySystem &sys = *s;
        py::list out;
        for (const auto &c : find_configs(sys, kind == "line" ? BlockKind::Line : BlockKind::Triangle)) {
          py::dict d = to_python(config_json(c));
          d["proof"] = one_based(construct_30_15(sys, c).bases);
          out.append(d);
        }
        return out;
      }, py::arg("kind"))
      .def("__repr__", [](const SystemRef &s) {
        return "<System " + (*s).label() + " " + (*s).expanded_symbol() + ">";
      });

  py::class_<Catalog, std::shared_ptr<Catalog>>(m, "Catalog")
      .def(py::init([] { return std::make_shared<Catalog>(); }))
      .def("system", [](std::shared_ptr<Catalog> c, const std::string &address) {
        return SystemRef{c, &c->system(address)};
      }, py::arg("address"))
      .def("group_order", [](Catalog &c, bool with_conjugation) {
        return with_conjugation ? c.extended_group().order() : c.group().order();
      }, py::arg("with_conjugation") = false)
      .def("generate", [](Catalog &c, const std::string &target) { return to_python(generate_json(c, target)); },
           py::arg("target"), "rays, bases, mubs, dodecagons or coverings as JSON-like data")
      .def("generate_text", &generate_text, py::arg("target"))
      .def("search", [](Catalog &c, std::vector<std::string> targets, std::vector<std::string> systems,
                        std::uint64_t seed, int kernel_dimension, std::int64_t max_trials, double budget) {
        ProfileSearchOptions o;
        if (!targets.empty()) o.targets = std::move(targets);
        o.systems = std::move(systems);
        o.seed = seed;
        o.kernel_dimension = kernel_dimension;
        o.max_trials = max_trials;
        o.time_budget_seconds = budget;
        ProfileSearchResult r;
        {
          py::gil_scoped_release release;
          r = search_profiles(c, o);
        }
        py::list hits;
        for (const auto &h : r.hits) {
          py::dict d;
          d["symbol"] = h.target;
          d["system"] = h.system;
          d["basis_ids"] = h.basis_ids;
          d["full_basis_ids"] = h.full_basis_ids;
          d["trial"] = h.trial;
          hits.append(d);
        }
        py::dict out;
        out["hits"] = hits;
        out["missing"] = r.missing;
        out["trials"] = r.trials;
        return out;
      }, py::arg("targets") = std::vector<std::string>{}, py::arg("systems") = std::vector<std::string>{},
         py::arg("seed") = 20111, py::arg("kernel_dimension") = 18, py::arg("max_trials") = 1'000'000,
         py::arg("budget") = 600.0);

  m.def("parse_expanded_symbol", [](const std::string &s) {
    const ProofProfile p = parse_expanded_symbol(s);
    return py::make_tuple(p.rays, p.bases, p.terms);
  }, "(rays, bases, [(multiplicity, count), ...])");
  m.def("default_profile_targets", &default_profile_targets);
  m.attr("DEFAULT_KERNEL_CAP") = kDefaultKernelCap;
}
