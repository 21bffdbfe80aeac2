// Command-line front end. Exit status: 0 success, 1 validation or law
// failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opn/cmc.hpp"
#include "opn/io.hpp"
#include "opn/laws.hpp"
#include "opn/reach.hpp"

using namespace opn;
using json = nlohmann::ordered_json;

namespace {

struct Failure {
  std::string message;
};

NetDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{path + ": cannot open file"};
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw Failure{path + ":" + e.what()};
  }
}

const OpenPetriNet& lookup(const NetDocument& doc, const std::string& path, const std::string& name) {
  auto it = doc.nets.find(name);
  if (it == doc.nets.end()) throw Failure{path + ": no net named '" + name + "'"};
  return it->second;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Failure{out_path + ": cannot write file"};
  out << text;
}

Multiset marking_arg(const PetriNet& net, const NetDocument& doc, const std::string& text) {
  // a marking name from the file, or an inline A:2,B
  if (auto it = doc.markings.find(text); it != doc.markings.end()) return net.marking(it->second);
  try {
    return net.marking(parse_marking(text));
  } catch (const ParseError& e) {
    throw Failure{"bad marking '" + text + "': " + e.what()};
  }
}

struct CapsArgs {
  Count max_tokens = 8;
  std::size_t max_depth = 64;
  std::size_t max_states = 100000;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-tokens", max_tokens, "Token cap per marking")->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", max_depth, "Firing depth cap")->check(CLI::PositiveNumber);
    cmd->add_option("--max-states", max_states, "Explored marking cap")->check(CLI::PositiveNumber);
  }
  ExplorationCaps caps() const { return {max_tokens, max_depth, max_states}; }
};

json caps_json(const ExplorationCaps& c) {
  return {{"max_tokens", c.max_tokens}, {"max_depth", c.max_depth}, {"max_states", c.max_states}};
}

std::string dense(const Multiset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.counts().size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out;
}

std::string carrier_text(const CarrierPtr& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c->size(); ++i) out += (i ? ", " : "") + (*c)[i];
  return out + "}";
}

std::string pair_text(const BoundedRelation::Pair& p) {
  return "(" + p.first.to_string() + ") -> (" + p.second.to_string() + ")";
}

int cmd_validate(const std::string& path) {
  auto doc = load(path);
  for (const auto& [name, net] : doc.nets)
    std::cout << "net " << name << ": " << net.net().num_places() << " places, " << net.net().num_transitions()
              << " transitions, " << net.inputs()->size() << " inputs, " << net.outputs()->size() << " outputs\n";
  for (const auto& [name, m] : doc.markings) std::cout << "marking " << name << "\n";
  std::cout << path << ": ok\n";
  return 0;
}

int cmd_combine(const std::string& path, const std::string& a, const std::string& b, std::string name,
                const std::string& out, bool tensor) {
  auto doc = load(path);
  const auto& p = lookup(doc, path, a);
  const auto& q = lookup(doc, path, b);
  OpenPetriNet result;
  if (tensor) {
    result = tensor_open(p, q);
  } else {
    if (!same_carrier(p.outputs(), q.inputs()))
      throw Failure{"cannot compose: outputs of '" + a + "' differ from inputs of '" + b + "'"};
    result = compose_open(p, q);
  }
  if (name.empty()) name = a + (tensor ? "_x_" : "_then_") + b;
  NetDocument outdoc;
  outdoc.nets.emplace(name, result);
  emit(serialize(outdoc), out);
  return 0;
}

int cmd_reach(const std::string& path, const std::string& net_name, const std::string& from, const std::string& to,
              const CapsArgs& caps_args) {
  auto doc = load(path);
  const auto& net = lookup(doc, path, net_name).net();
  auto caps = caps_args.caps();
  auto m = marking_arg(net, doc, from);
  if (!to.empty()) {
    auto n = marking_arg(net, doc, to);
    auto ans = is_reachable(net, m, n, caps);
    std::cout << to_string(ans.verdict) << "\n";
    if (ans.verdict == Verdict::yes) std::cout << Process::firing(net, m, ans.witness).to_string() << "\n";
    return 0;
  }
  auto set = reachable_set(net, m, caps);
  std::vector<Multiset> sorted = set.markings;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& x : sorted) std::cout << x.to_string() << "\n";
  std::cout << sorted.size() << " markings, " << (set.exact ? "exact" : "truncated") << "\n";
  return 0;
}

int cmd_relation(const std::string& path, const std::string& net_name, Count bound, const CapsArgs& caps_args) {
  auto doc = load(path);
  auto caps = caps_args.caps();
  caps.max_tokens = bound;
  auto rel = reach_relation(lookup(doc, path, net_name), caps);
  std::size_t incomplete = 0;
  std::cout << "# inputs " << carrier_text(rel.left()) << ", outputs " << carrier_text(rel.right()) << "\n";
  for (const auto& [x, complete] : rel.rows()) {
    incomplete += !complete;
    for (const auto& y : rel.row(x))
      std::cout << "(" << dense(x) << "; " << dense(y) << ")  " << pair_text({x, y})
                << (complete ? "" : "  # row truncated") << "\n";
  }
  std::cout << rel.pairs().size() << " pairs, " << rel.rows().size() << " rows, " << incomplete << " truncated\n";
  return 0;
}

json tallies_json(const LawSuiteReport& r) {
  json laws = json::array();
  for (const auto& t : r.tallies) {
    json entry{{"law", t.law}, {"instances", t.instances}, {"failures", t.failures}};
    if (t.failures) entry["first_failure"] = t.first_failure;
    laws.push_back(entry);
  }
  return laws;
}

void print_tallies(const char* title, const LawSuiteReport& r) {
  std::cout << title << "\n";
  for (const auto& t : r.tallies) {
    std::printf("  %-20s %4zu/%-4zu %s\n", t.law.c_str(), t.instances - t.failures, t.instances,
                t.failures ? "FAIL" : "ok");
    if (t.failures) std::cout << "    first failure: " << t.first_failure << "\n";
  }
}

int cmd_check_laws(const std::string& path, std::uint64_t seed, std::size_t instances, bool as_json,
                   const CapsArgs& caps_args) {
  auto doc = load(path);
  auto caps = caps_args.caps();
  std::vector<OpenPetriNet> nets;
  for (const auto& [name, net] : doc.nets) nets.push_back(net);
  auto on_file = run_law_suite_on(nets, caps);
  auto random = run_law_suite(seed, instances, caps);
  bool passed = on_file.passed() && random.passed();
  if (as_json) {
    json out{{"file", path},      {"seed", seed},
             {"instances", instances}, {"caps", caps_json(caps)},
             {"passed", passed},  {"file_laws", tallies_json(on_file)},
             {"random_laws", tallies_json(random)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_tallies(("laws on nets of " + path).c_str(), on_file);
    print_tallies(("laws on " + std::to_string(instances) + " random instances, seed " + std::to_string(seed)).c_str(),
                  random);
    std::cout << (passed ? "all laws hold" : "law failures found") << "\n";
  }
  return passed ? 0 : 1;
}

int cmd_one_way(std::uint64_t seed, std::size_t instances, bool as_json, const CapsArgs& caps_args) {
  auto caps = caps_args.caps();
  auto report = one_way_experiment(seed, instances, caps);
  auto doc_for = [](const OneWayInstance& i) {
    NetDocument d;
    d.nets.emplace("P", i.first);
    d.nets.emplace("Q", i.second);
    return serialize(d);
  };
  if (as_json) {
    json list = json::array();
    for (const auto& i : report.instances) {
      json entry{{"index", i.index},
                 {"lax_inclusion_holds", i.lax_inclusion_holds},
                 {"equal", i.equal},
                 {"rows_compared", i.rows_compared}};
      if (!i.equal) {
        json missing = json::array();
        for (const auto& p : i.missing) missing.push_back(pair_text(p));
        entry["missing_from_composite_of_relations"] = missing;
        entry["nets"] = doc_for(i);
      }
      list.push_back(entry);
    }
    json out{{"seed", seed},
             {"caps", caps_json(caps)},
             {"instances", report.instances.size()},
             {"equalities", report.equalities()},
             {"lax_violations", report.lax_violations()},
             {"rejected_candidates", report.rejected},
             {"results", list}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& i : report.instances) {
      std::printf("instance %3zu: %s, lax inclusion %s, %zu rows\n", i.index, i.equal ? "equal" : "STRICT",
                  i.lax_inclusion_holds ? "holds" : "FAILS", i.rows_compared);
      if (!i.equal) {
        for (const auto& p : i.missing) std::cout << "  only in the composite's relation: " << pair_text(p) << "\n";
        std::cout << doc_for(i);
      }
    }
    std::printf("%zu instances, %zu equal, %zu lax violations, %zu candidates rejected as not one-way\n",
                report.instances.size(), report.equalities(), report.lax_violations(), report.rejected);
  }
  return report.lax_violations() == 0 ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& net_name, const std::string& out) {
  auto doc = load(path);
  emit(export_dot(lookup(doc, path, net_name), net_name), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open Petri nets: composition, reachability and law checking"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "opn 1.0");

  std::string file, net_a, net_b, out, name, from, to;
  std::uint64_t seed = 1;
  std::size_t instances = 20;
  Count bound = 3;
  bool as_json = false;
  CapsArgs caps;

  auto* validate = app.add_subcommand("validate", "Parse and check a net file");
  validate->add_option("file", file)->required();

  auto* compose = app.add_subcommand("compose", "Compose two nets along their shared boundary");
  auto* tensor = app.add_subcommand("tensor", "Place two nets side by side");
  for (auto* cmd : {compose, tensor}) {
    cmd->add_option("file", file)->required();
    cmd->add_option("first", net_a)->required();
    cmd->add_option("second", net_b)->required();
    cmd->add_option("-o,--output", out, "Write the result here instead of stdout");
    cmd->add_option("--name", name, "Name of the resulting net");
  }

  auto* reach = app.add_subcommand("reach", "Reachable markings, or a witness for one target");
  reach->add_option("file", file)->required();
  reach->add_option("net", net_a)->required();
  reach->add_option("--from", from, "Start marking, e.g. A:2,B, or a marking name")->required();
  reach->add_option("--to", to, "Target marking");
  caps.add_to(reach);

  auto* relation = app.add_subcommand("relation", "Boundary reachability relation up to a token bound");
  relation->add_option("file", file)->required();
  relation->add_option("net", net_a)->required();
  relation->add_option("--bound", bound, "Token bound on each side")->check(CLI::PositiveNumber);
  relation->add_option("--max-depth", caps.max_depth)->check(CLI::PositiveNumber);
  relation->add_option("--max-states", caps.max_states)->check(CLI::PositiveNumber);

  auto* laws = app.add_subcommand("check-laws", "Check the algebraic laws on a file's nets and random instances");
  laws->add_option("file", file)->required();
  laws->add_option("--seed", seed);
  laws->add_option("--instances", instances);
  laws->add_flag("--json", as_json, "Machine-readable summary");
  caps.max_tokens = 4;
  caps.max_depth = 12;
  caps.max_states = 20000;
  caps.add_to(laws);

  auto* one_way = app.add_subcommand("one-way-experiment", "Compare the two sides of the one-way conjecture");
  one_way->add_option("--seed", seed);
  one_way->add_option("--instances", instances);
  one_way->add_flag("--json", as_json, "Machine-readable report");
  caps.add_to(one_way);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a net");
  dot->add_option("file", file)->required();
  dot->add_option("net", net_a)->required();
  dot->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // subcommands that explore default to larger caps unless told otherwise
  if (reach->parsed()) {
    if (reach->count("--max-tokens") == 0) caps.max_tokens = 8;
    if (reach->count("--max-depth") == 0) caps.max_depth = 64;
    if (reach->count("--max-states") == 0) caps.max_states = 100000;
  }
  if (relation->parsed()) {
    if (relation->count("--max-depth") == 0) caps.max_depth = 64;
    if (relation->count("--max-states") == 0) caps.max_states = 100000;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (compose->parsed()) return cmd_combine(file, net_a, net_b, name, out, false);
    if (tensor->parsed()) return cmd_combine(file, net_a, net_b, name, out, true);
    if (reach->parsed()) return cmd_reach(file, net_a, from, to, caps);
    if (relation->parsed()) return cmd_relation(file, net_a, bound, caps);
    if (laws->parsed()) return cmd_check_laws(file, seed, instances, as_json, caps);
    if (one_way->parsed()) return cmd_one_way(seed, instances, as_json, caps);
    if (dot->parsed()) return cmd_export_dot(file, net_a, out);
  } catch (const Failure& f) {
    std::cerr << "opn: " << f.message << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "opn: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
