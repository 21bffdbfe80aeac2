#include "opn/reach.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "opn/generate.hpp"

namespace opn {

void ExplorationCaps::validate() const {
  if (max_tokens == 0 || max_depth == 0 || max_states == 0)
    throw Error("exploration caps must be positive");
}

std::vector<std::size_t> enabled(const PetriNet& net, const Multiset& m) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < net.num_transitions(); ++t)
    if (leq(net.source(t), m)) out.push_back(t);
  return out;
}

Multiset fire(const PetriNet& net, std::size_t transition, const Multiset& m) {
  auto rest = subtract(m, net.source(transition));
  if (!rest)
    throw Error("transition '" + (*net.transitions())[transition] + "' is disabled at " + m.to_string());
  return add(*rest, net.target(transition));
}

Multiset fire(const PetriNet& net, std::string_view transition, const Multiset& m) {
  return fire(net, net.transitions()->index(transition, "transition"), m);
}

namespace {

struct Visit {
  std::size_t depth;
  std::size_t parent;      // index into order, or npos for the start
  std::size_t transition;  // fired to get here
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Breadth-first search from m. Stops early when `goal` is discovered.
struct Bfs {
  std::vector<Multiset> order;
  std::vector<Visit> visits;
  bool pruned = false;
  std::size_t goal_index = npos;

  Bfs(const PetriNet& net, const Multiset& m, const ExplorationCaps& caps, const Multiset* goal) {
    caps.validate();
    std::unordered_map<std::vector<Count>, std::size_t, CountsHash> index;
    order.push_back(m);
    visits.push_back({0, npos, npos});
    index.emplace(m.counts(), 0);
    if (goal && *goal == m) {
      goal_index = 0;
      return;
    }
    if (m.total() > caps.max_tokens) {
      pruned = true;
      return;
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::size_t depth = visits[head].depth;
      for (auto t : enabled(net, order[head])) {
        Multiset next = fire(net, t, order[head]);
        if (index.count(next.counts())) continue;
        if (next.total() > caps.max_tokens || depth + 1 > caps.max_depth ||
            order.size() >= caps.max_states) {
          pruned = true;
          continue;
        }
        index.emplace(next.counts(), order.size());
        visits.push_back({depth + 1, head, t});
        order.push_back(std::move(next));
        if (goal && order.back() == *goal) {
          goal_index = order.size() - 1;
          return;
        }
      }
    }
  }

  std::vector<std::size_t> path_to(std::size_t i) const {
    std::vector<std::size_t> out;
    for (; visits[i].parent != npos; i = visits[i].parent) out.push_back(visits[i].transition);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace

ReachableSet reachable_set(const PetriNet& net, const Multiset& m, const ExplorationCaps& caps) {
  if (!same_carrier(m.carrier(), net.places())) throw CarrierMismatch("marking is not over the net's places");
  Bfs bfs(net, m, caps, nullptr);
  return {std::move(bfs.order), !bfs.pruned};
}

ReachAnswer is_reachable(const PetriNet& net, const Multiset& m, const Multiset& n,
                         const ExplorationCaps& caps) {
  if (!same_carrier(m.carrier(), net.places()) || !same_carrier(n.carrier(), net.places()))
    throw CarrierMismatch("marking is not over the net's places");
  Bfs bfs(net, m, caps, &n);
  if (bfs.goal_index != npos) return {Verdict::yes, bfs.path_to(bfs.goal_index)};
  return {bfs.pruned ? Verdict::unknown : Verdict::no, {}};
}

std::vector<std::string> transition_names(const PetriNet& net, const std::vector<std::size_t>& ts) {
  std::vector<std::string> out;
  for (auto t : ts) out.push_back((*net.transitions())[t]);
  return out;
}

// BoundedRelation -----------------------------------------------------------

BoundedRelation::BoundedRelation(CarrierPtr left, CarrierPtr right, Count bound)
    : left_(std::move(left)), right_(std::move(right)), bound_(bound) {}

void BoundedRelation::insert(const Multiset& x, const Multiset& y) {
  if (!same_carrier(x.carrier(), left_) || !same_carrier(y.carrier(), right_))
    throw CarrierMismatch("relation pair over the wrong carriers");
  if (x.total() > bound_ || y.total() > bound_) throw Error("relation pair exceeds the token bound");
  pairs_.emplace(Multiset(left_, x.counts()), Multiset(right_, y.counts()));
  rows_.try_emplace(Multiset(left_, x.counts()), false);
}

void BoundedRelation::set_row_complete(const Multiset& x, bool complete) {
  if (!same_carrier(x.carrier(), left_)) throw CarrierMismatch("row over the wrong carrier");
  if (x.total() > bound_) throw Error("row exceeds the token bound");
  rows_[Multiset(left_, x.counts())] = complete;
}

bool BoundedRelation::contains(const Multiset& x, const Multiset& y) const {
  return pairs_.count({x, y}) != 0;
}

bool BoundedRelation::row_complete(const Multiset& x) const {
  auto it = rows_.find(x);
  return it != rows_.end() && it->second;
}

std::vector<Multiset> BoundedRelation::row(const Multiset& x) const {
  std::vector<Multiset> out;
  for (auto it = pairs_.lower_bound({x, Multiset(right_)}); it != pairs_.end() && it->first == x; ++it)
    out.push_back(it->second);
  return out;
}

BoundedRelation BoundedRelation::identity(const CarrierPtr& carrier, Count bound) {
  BoundedRelation r(carrier, carrier, bound);
  for (const auto& x : enumerate_bounded(carrier, bound)) {
    r.insert(x, x);
    r.set_row_complete(x, true);
  }
  return r;
}

bool operator==(const BoundedRelation& a, const BoundedRelation& b) {
  return a.bound_ == b.bound_ && same_carrier(a.left_, b.left_) && same_carrier(a.right_, b.right_) &&
         a.pairs_ == b.pairs_ && a.rows_ == b.rows_;
}

BoundedRelation reach_relation(const OpenPetriNet& net, const ExplorationCaps& caps) {
  caps.validate();
  const Count bound = caps.max_tokens;
  BoundedRelation rel(net.inputs(), net.outputs(), bound);

  std::unordered_map<std::vector<Count>, std::vector<Multiset>, CountsHash> outputs_landing_on;
  for (auto& y : enumerate_bounded(net.outputs(), bound))
    outputs_landing_on[map(net.output_map(), y).counts()].push_back(std::move(y));

  for (const auto& x : enumerate_bounded(net.inputs(), bound)) {
    ReachableSet rs = reachable_set(net.net(), map(net.input_map(), x), caps);
    for (const auto& r : rs.markings) {
      auto it = outputs_landing_on.find(r.counts());
      if (it == outputs_landing_on.end()) continue;
      for (const auto& y : it->second) rel.insert(x, y);
    }
    rel.set_row_complete(x, rs.exact);
  }
  return rel;
}

BoundedRelation rel_compose(const BoundedRelation& second, const BoundedRelation& first) {
  if (!same_carrier(first.right(), second.left()))
    throw CarrierMismatch("cannot compose relations: middle carriers differ");
  const Count bound = std::min(first.bound(), second.bound());
  BoundedRelation out(first.left(), second.right(), bound);
  for (const auto& [x, complete] : first.rows()) {
    if (x.total() > bound) continue;
    bool row_complete = complete;
    for (const auto& y : first.row(x)) {
      row_complete = row_complete && second.row_complete(y);
      for (const auto& z : second.row(y))
        if (z.total() <= bound) out.insert(x, z);
    }
    out.set_row_complete(x, row_complete);
  }
  return out;
}

namespace {

Multiset combine(const Glued& g, const Multiset& a, const Multiset& b) {
  std::vector<Count> counts(g.carrier->size(), 0);
  for (std::size_t i = 0; i < a.counts().size(); ++i) counts[g.from_left(i)] = a[i];
  for (std::size_t i = 0; i < b.counts().size(); ++i) counts[g.from_right(i)] = b[i];
  return Multiset(g.carrier, std::move(counts));
}

}  // namespace

BoundedRelation rel_product(const BoundedRelation& r1, const BoundedRelation& r2) {
  Glued left = glue(r1.left(), r2.left(), {});
  Glued right = glue(r1.right(), r2.right(), {});
  const Count bound = std::min(r1.bound(), r2.bound());
  BoundedRelation out(left.carrier, right.carrier, bound);
  for (const auto& [x1, c1] : r1.rows())
    for (const auto& [x2, c2] : r2.rows()) {
      if (x1.total() + x2.total() > bound) continue;
      Multiset x = combine(left, x1, x2);
      for (const auto& y1 : r1.row(x1))
        for (const auto& y2 : r2.row(x2))
          if (y1.total() + y2.total() <= bound) out.insert(x, combine(right, y1, y2));
      out.set_row_complete(x, c1 && c2);
    }
  return out;
}

InclusionReport rel_map_included(const FinFunction& f, const FinFunction& g, const BoundedRelation& r,
                                 const BoundedRelation& s) {
  InclusionReport report;
  for (const auto& [x, y] : r.pairs()) {
    Multiset fx = map(f, x);
    if (!s.row_complete(fx)) {
      ++report.pairs_skipped;
      continue;
    }
    ++report.pairs_checked;
    if (!s.contains(fx, map(g, y))) {
      report.included = false;
      report.counterexample = std::pair{x, y};
      return report;
    }
  }
  return report;
}

LaxCompositionReport check_lax_composition(const OpenPetriNet& p, const OpenPetriNet& q,
                                           const ExplorationCaps& caps) {
  BoundedRelation rp = reach_relation(p, caps);
  BoundedRelation rq = reach_relation(q, caps);
  LaxCompositionReport report{rel_compose(rq, rp), reach_relation(compose_open(p, q), caps), {}, {}, 0};
  const auto& lhs = report.composite_of_relations;
  const auto& rhs = report.relation_of_composite;
  for (const auto& [x, complete] : rhs.rows()) {
    if (!complete) continue;
    ++report.rows_checked;
    for (const auto& z : lhs.row(x))
      if (!rhs.contains(x, z)) report.violations.emplace_back(x, z);
    if (!lhs.row_complete(x)) continue;
    for (const auto& z : rhs.row(x))
      if (!lhs.contains(x, z)) report.strict_witnesses.emplace_back(x, z);
  }
  return report;
}

EqualityReport compare_on_complete_rows(const BoundedRelation& a, const BoundedRelation& b) {
  if (!same_carrier(a.left(), b.left()) || !same_carrier(a.right(), b.right()))
    throw CarrierMismatch("relations over different carriers");
  EqualityReport report;
  for (const auto& [x, complete] : a.rows()) {
    if (!complete || !b.row_complete(x)) continue;
    ++report.rows_checked;
    for (const auto& y : a.row(x))
      if (!b.contains(x, y)) report.only_left.emplace_back(x, y);
    for (const auto& y : b.row(x))
      if (!a.contains(x, y)) report.only_right.emplace_back(x, y);
  }
  report.equal = report.only_left.empty() && report.only_right.empty();
  return report;
}

EqualityReport check_identity_comparison(const CarrierPtr& boundary, const ExplorationCaps& caps) {
  BoundedRelation actual = reach_relation(identity_open(boundary), caps);
  BoundedRelation expected = BoundedRelation::identity(boundary, caps.max_tokens);
  EqualityReport report = compare_on_complete_rows(actual, expected);
  // exact: every row must be present and complete on both sides
  report.equal = report.equal && actual == expected;
  return report;
}

EqualityReport check_monoidality(const OpenPetriNet& p, const OpenPetriNet& p2, const ExplorationCaps& caps) {
  return compare_on_complete_rows(reach_relation(tensor_open(p, p2), caps),
                                  rel_product(reach_relation(p, caps), reach_relation(p2, caps)));
}

bool is_one_way(const OpenPetriNet& net) {
  const PetriNet& n = net.net();
  for (std::size_t t = 0; t < n.num_transitions(); ++t) {
    for (auto p : net.input_map().image())
      if (n.target(t)[p] != 0) return false;
    for (auto p : net.output_map().image())
      if (n.source(t)[p] != 0) return false;
  }
  return true;
}

std::size_t OneWayReport::equalities() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& i) { return i.equal; }));
}

std::size_t OneWayReport::lax_violations() const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [](const auto& i) { return !i.lax_inclusion_holds; }));
}

OneWayReport one_way_experiment(std::uint64_t seed, std::size_t count, const ExplorationCaps& caps) {
  caps.validate();
  OneWayReport report;
  report.seed = seed;
  report.caps = caps;
  Rng rng(seed);
  NetShape shape;
  shape.max_boundary = 2;
  // spontaneous transitions would truncate every row
  shape.allow_empty_source = false;
  for (std::size_t k = 0; k < count; ++k) {
    auto x = random_boundary(rng, shape, "x");
    auto y = random_boundary(rng, shape, "y");
    auto z = random_boundary(rng, shape, "z");
    auto candidate = [&](const CarrierPtr& in, const CarrierPtr& out) {
      return rng.chance(50) ? random_one_way(rng, shape, in, out) : random_open(rng, shape, in, out);
    };
    OpenPetriNet first = candidate(x, y);
    OpenPetriNet second = candidate(y, z);
    while (!is_one_way(first) || !is_one_way(second)) {
      ++report.rejected;
      first = candidate(x, y);
      second = candidate(y, z);
    }
    LaxCompositionReport lax = check_lax_composition(first, second, caps);
    EqualityReport eq = compare_on_complete_rows(lax.composite_of_relations, lax.relation_of_composite);
    OneWayInstance inst;
    inst.index = k;
    inst.first = std::move(first);
    inst.second = std::move(second);
    inst.lax_inclusion_holds = lax.holds();
    inst.equal = eq.equal;
    inst.rows_compared = eq.rows_checked;
    inst.missing = std::move(eq.only_right);
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace opn
