#include "opn/cmc.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace opn {

Process::Process(PetriNet net, Multiset dom, std::vector<Event> events)
    : net_(std::move(net)), dom_(std::move(dom)), events_(std::move(events)) {
  if (!same_carrier(dom_.carrier(), net_.places()))
    throw CarrierMismatch("process: domain is not a marking of the net");
  Multiset cur = dom_;
  for (std::size_t k = 0; k < events_.size(); ++k) {
    const Event& e = events_[k];
    if (e.transition >= net_.num_transitions()) throw InvalidNet("process: unknown transition index");
    if (!same_carrier(e.context.carrier(), net_.places()))
      throw CarrierMismatch("process: context is not a marking of the net");
    if (add(net_.source(e.transition), e.context) != cur)
      throw EndpointMismatch("process: slice " + std::to_string(k) + " (" +
                             (*net_.transitions())[e.transition] +
                             ") does not start where the previous one ends");
    cur = add(net_.target(e.transition), e.context);
  }
  cod_ = std::move(cur);
}

Process Process::identity(const PetriNet& net, const Multiset& marking) { return Process(net, marking, {}); }

Process Process::firing(const PetriNet& net, const Multiset& dom, const std::vector<std::size_t>& transitions) {
  std::vector<Event> events;
  Multiset cur = dom;
  for (auto t : transitions) {
    auto ctx = subtract(cur, net.source(t));
    if (!ctx) throw Error("transition '" + (*net.transitions())[t] + "' is not enabled at " + cur.to_string());
    cur = add(net.target(t), *ctx);
    events.push_back({t, std::move(*ctx)});
  }
  return Process(net, dom, std::move(events));
}

std::vector<std::size_t> Process::transition_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(events_.size());
  for (const auto& e : events_) out.push_back(e.transition);
  return out;
}

std::string Process::to_string() const {
  std::string names;
  for (const auto& e : events_) {
    if (!names.empty()) names += ',';
    names += (*net_.transitions())[e.transition];
  }
  return dom_.to_string() + " --" + names + "--> " + cod_.to_string();
}

bool operator==(const Process& a, const Process& b) {
  return a.dom_ == b.dom_ && a.events_ == b.events_ && a.net_ == b.net_;
}

std::size_t ObjectsDescription::count_with_coefficients_at_most(Count bound) const {
  std::size_t out = 1;
  for (std::size_t i = 0; i < generators->size(); ++i) out *= static_cast<std::size_t>(bound + 1);
  return out;
}

ObjectsDescription objects_of(const PetriNet& net) { return {net.places()}; }

Process compose_process(const Process& second, const Process& first) {
  if (!(first.net() == second.net())) throw EndpointMismatch("compose: processes live in different nets");
  if (first.cod() != second.dom())
    throw EndpointMismatch("compose: " + first.cod().to_string() + " is not " + second.dom().to_string());
  std::vector<Event> events = first.events();
  events.insert(events.end(), second.events().begin(), second.events().end());
  return Process(first.net(), first.dom(), std::move(events));
}

Process tensor_process(const Process& p1, const Process& p2) {
  if (!(p1.net() == p2.net())) throw EndpointMismatch("tensor: processes live in different nets");
  std::vector<Event> events;
  for (const auto& e : p1.events()) events.push_back({e.transition, add(e.context, p2.dom())});
  for (const auto& e : p2.events()) events.push_back({e.transition, add(e.context, p1.cod())});
  return Process(p1.net(), add(p1.dom(), p2.dom()), std::move(events));
}

bool can_swap(const Process& p, std::size_t k) {
  if (k + 1 >= p.size()) return false;
  return leq(p.net().source(p.events()[k + 1].transition), p.events()[k].context);
}

Process swap_events(const Process& p, std::size_t k) {
  if (!can_swap(p, k)) throw Error("slices are not independent");
  auto seq = p.transition_sequence();
  std::swap(seq[k], seq[k + 1]);
  return Process::firing(p.net(), p.dom(), seq);
}

namespace {

using Sequence = std::vector<std::size_t>;

// Orderings reachable from `start` by independent adjacent swaps.
// Returns false if the class outgrew `cap`.
bool swap_class(const PetriNet& net, const Multiset& dom, const Sequence& start, std::size_t cap,
                const Sequence* stop_at, std::set<Sequence>& seen) {
  std::deque<Sequence> queue{start};
  seen.insert(start);
  while (!queue.empty()) {
    Sequence cur = std::move(queue.front());
    queue.pop_front();
    if (stop_at && cur == *stop_at) return true;
    // contexts along the sequence
    Multiset m = dom;
    std::vector<Multiset> ctx;
    for (auto t : cur) {
      ctx.push_back(*subtract(m, net.source(t)));
      m = add(ctx.back(), net.target(t));
    }
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!leq(net.source(cur[k + 1]), ctx[k])) continue;
      Sequence next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return false;
        queue.push_back(std::move(next));
      }
    }
  }
  return true;
}

}  // namespace

Verdict process_equiv(const Process& p, const Process& q, std::size_t state_cap) {
  if (!(p.net() == q.net()) || p.dom() != q.dom() || p.cod() != q.cod() || p.size() != q.size())
    return Verdict::no;
  auto a = p.transition_sequence();
  auto b = q.transition_sequence();
  if (a == b) return Verdict::yes;
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return Verdict::no;
  std::set<Sequence> seen;
  if (!swap_class(p.net(), p.dom(), a, state_cap, &b, seen)) return Verdict::unknown;
  return seen.count(b) ? Verdict::yes : Verdict::no;
}

std::optional<Process> canonical_form(const Process& p, std::size_t state_cap) {
  std::set<Sequence> seen;
  if (!swap_class(p.net(), p.dom(), p.transition_sequence(), state_cap, nullptr, seen)) return std::nullopt;
  return Process::firing(p.net(), p.dom(), *seen.begin());
}

std::vector<Process> enumerate_hom(const PetriNet& net, const Multiset& m, const Multiset& n,
                                   std::size_t max_events, std::size_t sequence_cap) {
  std::vector<Sequence> found;
  std::size_t explored = 0;
  Sequence seq;
  auto dfs = [&](auto&& self, const Multiset& cur) -> void {
    if (++explored > sequence_cap) throw Error("enumerate_hom: sequence cap exceeded");
    if (cur == n) found.push_back(seq);
    if (seq.size() == max_events) return;
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      auto ctx = subtract(cur, net.source(t));
      if (!ctx) continue;
      seq.push_back(t);
      self(self, add(*ctx, net.target(t)));
      seq.pop_back();
    }
  };
  dfs(dfs, m);

  std::set<std::pair<std::size_t, Sequence>> classes;
  for (const auto& s : found) {
    std::set<Sequence> members;
    if (!swap_class(net, m, s, sequence_cap, nullptr, members))
      throw Error("enumerate_hom: swap class too large");
    classes.emplace(s.size(), *members.begin());
  }
  std::vector<Process> out;
  for (const auto& [_, s] : classes) out.push_back(Process::firing(net, m, s));
  return out;
}

HomAnswer hom_nonempty(const PetriNet& net, const Multiset& m, const Multiset& n,
                       const ExplorationCaps& caps) {
  caps.validate();
  struct Node {
    std::size_t depth;
    std::optional<std::pair<std::vector<Count>, std::size_t>> parent;  // (marking, transition)
  };
  std::unordered_map<std::vector<Count>, Node, CountsHash> seen;
  bool pruned = false;

  auto witness_for = [&](const std::vector<Count>& end) {
    std::vector<std::size_t> slices;
    const std::vector<Count>* cur = &end;
    while (auto& parent = seen.at(*cur).parent) {
      slices.push_back(parent->second);
      cur = &parent->first;
    }
    std::reverse(slices.begin(), slices.end());
    return Process::firing(net, m, slices);
  };

  if (m.total() > caps.max_tokens) return {Verdict::unknown, std::nullopt};
  seen.emplace(m.counts(), Node{0, std::nullopt});
  if (m == n) return {Verdict::yes, Process::identity(net, m)};

  std::vector<std::vector<Count>> stack{m.counts()};
  while (!stack.empty()) {
    std::vector<Count> counts = std::move(stack.back());
    stack.pop_back();
    const std::size_t depth = seen.at(counts).depth;
    Multiset cur(net.places(), counts);
    for (std::size_t t = net.num_transitions(); t-- > 0;) {
      auto context = subtract(cur, net.source(t));
      if (!context) continue;
      Multiset next = add(net.target(t), *context);
      auto it = seen.find(next.counts());
      if (it != seen.end() && it->second.depth <= depth + 1) continue;
      if (next.total() > caps.max_tokens || depth + 1 > caps.max_depth ||
          (it == seen.end() && seen.size() >= caps.max_states)) {
        pruned = true;
        continue;
      }
      Node node{depth + 1, std::pair{counts, t}};
      if (it == seen.end())
        seen.emplace(next.counts(), std::move(node));
      else
        it->second = std::move(node);
      if (next == n) return {Verdict::yes, witness_for(next.counts())};
      stack.push_back(next.counts());
    }
  }
  return {pruned ? Verdict::unknown : Verdict::no, std::nullopt};
}

Process apply_functor(const PetriMorphism& morphism, const Process& p) {
  if (!(p.net() == morphism.domain())) throw EndpointMismatch("apply_functor: process is not in the morphism's domain");
  std::vector<Event> events;
  for (const auto& e : p.events())
    events.push_back({morphism.on_transitions()(e.transition), map(morphism.on_places(), e.context)});
  return Process(morphism.codomain(), map(morphism.on_places(), p.dom()), std::move(events));
}

}  // namespace opn
