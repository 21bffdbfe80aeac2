// Python bindings for the open Petri net library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opn/cmc.hpp"
#include "opn/io.hpp"
#include "opn/laws.hpp"
#include "opn/reach.hpp"

namespace py = pybind11;
using namespace opn;

namespace {

using Arcs = std::map<Atom, std::pair<AtomCounts, AtomCounts>>;

OpenPetriNet make_open(const std::vector<Atom>& places, const Arcs& transitions,
                       const std::map<Atom, Atom>& inputs, const std::map<Atom, Atom>& outputs) {
  std::vector<Atom> names;
  std::map<Atom, AtomCounts> src, tgt;
  for (const auto& [t, arcs] : transitions) {
    names.push_back(t);
    src[t] = arcs.first;
    tgt[t] = arcs.second;
  }
  return OpenPetriNet::make(PetriNet::make(names, places, src, tgt), inputs, outputs);
}

std::map<Atom, Atom> table(const FinFunction& f) { return f.table(); }

ExplorationCaps caps_of(Count max_tokens, std::size_t max_depth, std::size_t max_states) {
  ExplorationCaps c{max_tokens, max_depth, max_states};
  c.validate();
  return c;
}

py::list relation_rows(const BoundedRelation& r) {
  py::list out;
  for (const auto& [x, complete] : r.rows())
    for (const auto& y : r.row(x)) out.append(py::make_tuple(x.to_counts(), y.to_counts(), complete));
  return out;
}

py::dict tallies(const LawSuiteReport& r) {
  py::dict out;
  for (const auto& t : r.tallies)
    out[py::str(t.law)] = py::dict(py::arg("instances") = t.instances, py::arg("failures") = t.failures,
                                   py::arg("first_failure") = t.first_failure);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Open Petri nets: composition, reachability semantics and law checks";

  py::register_exception<Error>(m, "OpenNetError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<OpenPetriNet>(m, "OpenNet")
      .def(py::init(&make_open), py::arg("places"), py::arg("transitions"), py::arg("inputs"),
           py::arg("outputs"),
           "transitions maps a name to (source, target), each a dict place -> count")
      .def_property_readonly("places", [](const OpenPetriNet& n) { return n.net().places()->atoms(); })
      .def_property_readonly("transitions", [](const OpenPetriNet& n) { return n.net().transitions()->atoms(); })
      .def_property_readonly("inputs", [](const OpenPetriNet& n) { return table(n.input_map()); })
      .def_property_readonly("outputs", [](const OpenPetriNet& n) { return table(n.output_map()); })
      .def("source", [](const OpenPetriNet& n, const std::string& t) { return n.net().source(t).to_counts(); })
      .def("target", [](const OpenPetriNet& n, const std::string& t) { return n.net().target(t).to_counts(); })
      .def("then", &compose_open, py::arg("second"), "Compose along the shared boundary, this net first")
      .def("tensor", &tensor_open, py::arg("other"))
      .def("is_one_way", &is_one_way)
      .def("is_isomorphic", [](const OpenPetriNet& a, const OpenPetriNet& b) {
        return iso_open(a, b).status == IsoSearch::Status::found;
      })
      .def("to_dot", &export_dot, py::arg("name") = "net")
      .def("__eq__", [](const OpenPetriNet& a, const OpenPetriNet& b) { return a == b; })
      .def("__repr__", [](const OpenPetriNet& n) {
        return "<OpenNet " + std::to_string(n.net().num_places()) + " places, " +
               std::to_string(n.net().num_transitions()) + " transitions>";
      });

  m.def("identity", [](const std::vector<Atom>& boundary) { return identity_open(make_carrier(boundary)); },
        py::arg("boundary"));

  m.def("parse",
        [](const std::string& text) {
          auto doc = parse(text);
          return py::make_tuple(doc.nets, doc.markings);
        },
        py::arg("text"), "Returns (nets, markings) dictionaries");
  m.def("serialize",
        [](const std::map<std::string, OpenPetriNet>& nets, const std::map<std::string, AtomCounts>& markings) {
          NetDocument doc;
          doc.nets = nets;
          doc.markings = markings;
          return serialize(doc);
        },
        py::arg("nets"), py::arg("markings") = std::map<std::string, AtomCounts>{});

  m.def("reach",
        [](const OpenPetriNet& n, const AtomCounts& from, const AtomCounts& to, Count max_tokens,
           std::size_t max_depth, std::size_t max_states) {
          auto ans = is_reachable(n.net(), n.net().marking(from), n.net().marking(to),
                                  caps_of(max_tokens, max_depth, max_states));
          return py::make_tuple(to_string(ans.verdict), transition_names(n.net(), ans.witness));
        },
        py::arg("net"), py::arg("source"), py::arg("target"), py::arg("max_tokens") = 8, py::arg("max_depth") = 64,
        py::arg("max_states") = 100000, "Returns (verdict, witness) with verdict 'yes', 'no' or 'unknown'");

  m.def("hom_nonempty",
        [](const OpenPetriNet& n, const AtomCounts& from, const AtomCounts& to, Count max_tokens,
           std::size_t max_depth, std::size_t max_states) {
          return to_string(hom_nonempty(n.net(), n.net().marking(from), n.net().marking(to),
                                        caps_of(max_tokens, max_depth, max_states))
                               .verdict);
        },
        py::arg("net"), py::arg("source"), py::arg("target"), py::arg("max_tokens") = 8, py::arg("max_depth") = 64,
        py::arg("max_states") = 100000);

  m.def("reachable",
        [](const OpenPetriNet& n, const AtomCounts& from, Count max_tokens, std::size_t max_depth,
           std::size_t max_states) {
          auto r = reachable_set(n.net(), n.net().marking(from), caps_of(max_tokens, max_depth, max_states));
          std::vector<AtomCounts> markings;
          for (const auto& x : r.markings) markings.push_back(x.to_counts());
          return py::make_tuple(markings, r.exact);
        },
        py::arg("net"), py::arg("source"), py::arg("max_tokens") = 8, py::arg("max_depth") = 64,
        py::arg("max_states") = 100000, "Returns (markings, exact)");

  m.def("relation",
        [](const OpenPetriNet& n, Count bound, std::size_t max_depth, std::size_t max_states) {
          return relation_rows(reach_relation(n, caps_of(bound, max_depth, max_states)));
        },
        py::arg("net"), py::arg("bound"), py::arg("max_depth") = 64, py::arg("max_states") = 100000,
        "List of (input marking, output marking, row complete)");

  m.def("check_lax",
        [](const OpenPetriNet& p, const OpenPetriNet& q, Count max_tokens, std::size_t max_depth,
           std::size_t max_states) {
          auto r = check_lax_composition(p, q, caps_of(max_tokens, max_depth, max_states));
          auto pairs = [](const std::vector<BoundedRelation::Pair>& v) {
            std::vector<std::pair<AtomCounts, AtomCounts>> out;
            for (const auto& [x, y] : v) out.emplace_back(x.to_counts(), y.to_counts());
            return out;
          };
          return py::dict(py::arg("holds") = r.holds(), py::arg("strict") = r.strict(),
                          py::arg("violations") = pairs(r.violations),
                          py::arg("strict_witnesses") = pairs(r.strict_witnesses),
                          py::arg("rows_checked") = r.rows_checked);
        },
        py::arg("first"), py::arg("second"), py::arg("max_tokens") = 4, py::arg("max_depth") = 64,
        py::arg("max_states") = 100000);

  m.def("check_laws",
        [](std::uint64_t seed, std::size_t instances, Count max_tokens, std::size_t max_depth,
           std::size_t max_states) {
          auto r = run_law_suite(seed, instances, caps_of(max_tokens, max_depth, max_states));
          return py::make_tuple(r.passed(), tallies(r));
        },
        py::arg("seed"), py::arg("instances"), py::arg("max_tokens") = 4, py::arg("max_depth") = 12,
        py::arg("max_states") = 20000, "Returns (passed, per-law tallies)");

  m.def("one_way_experiment",
        [](std::uint64_t seed, std::size_t instances, Count max_tokens, std::size_t max_depth,
           std::size_t max_states) {
          auto r = one_way_experiment(seed, instances, caps_of(max_tokens, max_depth, max_states));
          py::list rows;
          for (const auto& i : r.instances)
            rows.append(py::dict(py::arg("index") = i.index, py::arg("equal") = i.equal,
                                 py::arg("lax_inclusion_holds") = i.lax_inclusion_holds,
                                 py::arg("rows_compared") = i.rows_compared));
          return py::dict(py::arg("equalities") = r.equalities(), py::arg("lax_violations") = r.lax_violations(),
                          py::arg("rejected") = r.rejected, py::arg("instances") = rows);
        },
        py::arg("seed"), py::arg("instances"), py::arg("max_tokens") = 4, py::arg("max_depth") = 12,
        py::arg("max_states") = 20000);
}
