#include "opn/petri.hpp"

#include <algorithm>
#include <numeric>

namespace opn {

PetriNet::PetriNet()
    : transitions_(empty_carrier()), places_(empty_carrier()) {}

PetriNet::PetriNet(CarrierPtr transitions, CarrierPtr places, std::vector<Multiset> source,
                   std::vector<Multiset> target)
    : transitions_(std::move(transitions)),
      places_(std::move(places)),
      source_(std::move(source)),
      target_(std::move(target)) {
  if (source_.size() != transitions_->size() || target_.size() != transitions_->size())
    throw InvalidNet("every transition needs exactly one source and one target");
  for (std::size_t t = 0; t < transitions_->size(); ++t) {
    if (!same_carrier(source_[t].carrier(), places_) || !same_carrier(target_[t].carrier(), places_))
      throw InvalidNet("source/target of transition '" + (*transitions_)[t] +
                       "' is not a multiset over the places");
    // share the carrier pointer so downstream comparisons short-circuit
    source_[t] = Multiset(places_, source_[t].counts());
    target_[t] = Multiset(places_, target_[t].counts());
  }
}

PetriNet PetriNet::make(std::vector<Atom> transitions, std::vector<Atom> places,
                        const std::map<Atom, AtomCounts>& source,
                        const std::map<Atom, AtomCounts>& target) {
  auto ts = make_carrier(std::move(transitions));
  auto ps = make_carrier(std::move(places));
  for (const auto* side : {&source, &target})
    for (const auto& [t, _] : *side)
      if (!ts->contains(t)) throw InvalidNet("unknown transition '" + t + "'");
  std::vector<Multiset> s, t;
  for (const auto& name : *ts) {
    auto si = source.find(name);
    auto ti = target.find(name);
    if (si == source.end()) throw InvalidNet("transition '" + name + "' has no source");
    if (ti == target.end()) throw InvalidNet("transition '" + name + "' has no target");
    try {
      s.emplace_back(ps, si->second);
      t.emplace_back(ps, ti->second);
    } catch (const InvalidNet& e) {
      throw InvalidNet("transition '" + name + "': " + e.what());
    }
  }
  return PetriNet(ts, ps, std::move(s), std::move(t));
}

const Multiset& PetriNet::source(std::string_view t) const {
  return source_[transitions_->index(t, "transition")];
}

const Multiset& PetriNet::target(std::string_view t) const {
  return target_[transitions_->index(t, "transition")];
}

bool operator==(const PetriNet& a, const PetriNet& b) {
  return same_carrier(a.transitions_, b.transitions_) && same_carrier(a.places_, b.places_) &&
         a.source_ == b.source_ && a.target_ == b.target_;
}

PetriNet discrete(CarrierPtr places) { return PetriNet(empty_carrier(), std::move(places), {}, {}); }

// PetriMorphism -------------------------------------------------------------

PetriMorphism::PetriMorphism(PetriNet domain, PetriNet codomain, FinFunction on_transitions,
                             FinFunction on_places)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      on_transitions_(std::move(on_transitions)),
      on_places_(std::move(on_places)) {
  verify();
}

void PetriMorphism::verify() const {
  if (!same_carrier(on_transitions_.domain(), domain_.transitions()) ||
      !same_carrier(on_transitions_.codomain(), codomain_.transitions()))
    throw EndpointMismatch("morphism: transition map does not match the nets");
  if (!same_carrier(on_places_.domain(), domain_.places()) ||
      !same_carrier(on_places_.codomain(), codomain_.places()))
    throw EndpointMismatch("morphism: place map does not match the nets");
  for (std::size_t t = 0; t < domain_.num_transitions(); ++t) {
    const std::size_t ft = on_transitions_(t);
    if (codomain_.source(ft) != map(on_places_, domain_.source(t)))
      throw SquareViolation("source square fails at transition '" + (*domain_.transitions())[t] + "'");
    if (codomain_.target(ft) != map(on_places_, domain_.target(t)))
      throw SquareViolation("target square fails at transition '" + (*domain_.transitions())[t] + "'");
  }
}

PetriMorphism PetriMorphism::identity(const PetriNet& net) {
  return PetriMorphism(net, net, FinFunction::identity(net.transitions()),
                       FinFunction::identity(net.places()));
}

PetriMorphism PetriMorphism::from_empty(const PetriNet& codomain) {
  return PetriMorphism(PetriNet(), codomain, FinFunction::from_empty(codomain.transitions()),
                       FinFunction::from_empty(codomain.places()));
}

PetriMorphism PetriMorphism::from_places(const FinFunction& boundary, const PetriNet& codomain) {
  return PetriMorphism(discrete(boundary.domain()), codomain,
                       FinFunction::from_empty(codomain.transitions()), boundary);
}

bool PetriMorphism::is_isomorphism() const {
  return on_transitions_.is_bijective() && on_places_.is_bijective();
}

PetriMorphism PetriMorphism::inverse() const {
  return PetriMorphism(codomain_, domain_, on_transitions_.inverse(), on_places_.inverse());
}

bool operator==(const PetriMorphism& a, const PetriMorphism& b) {
  return a.on_transitions_ == b.on_transitions_ && a.on_places_ == b.on_places_ &&
         a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
}

PetriMorphism compose(const PetriMorphism& after, const PetriMorphism& before) {
  if (!(before.codomain() == after.domain()))
    throw EndpointMismatch("cannot compose morphisms: codomain of the first is not the domain of the second");
  return PetriMorphism(before.domain(), after.codomain(),
                       compose(after.on_transitions(), before.on_transitions()),
                       compose(after.on_places(), before.on_places()));
}

// Gluing --------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t longest_at_run(const Carrier& c) {
  std::size_t best = 0;
  for (const auto& a : c) {
    std::size_t run = 0;
    for (char ch : a) {
      run = ch == '@' ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

}  // namespace

Glued glue(const CarrierPtr& left, const CarrierPtr& right,
           const std::vector<std::pair<std::size_t, std::size_t>>& identify) {
  const std::size_t nl = left->size();
  const std::size_t n = nl + right->size();

  // Tagged names are unique: a tag with more '@' than any existing run cannot
  // coincide with an original name.
  const std::string at(std::max(longest_at_run(*left), longest_at_run(*right)) + 1, '@');
  std::vector<std::string> original(n), tagged(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_left = i < nl;
    const Atom& name = is_left ? (*left)[i] : (*right)[i - nl];
    const bool clash = is_left ? right->contains(name) : left->contains(name);
    original[i] = name;
    tagged[i] = clash ? name + at + (is_left ? "1" : "2") : name;
  }

  UnionFind uf(n);
  for (auto [l, r] : identify) uf.unite(l, nl + r);

  std::map<std::size_t, std::pair<std::string, std::string>> class_names;  // root -> (orig, tagged)
  for (std::size_t i = 0; i < n; ++i) {
    auto root = uf.find(i);
    auto [it, fresh] = class_names.try_emplace(root, original[i], tagged[i]);
    if (!fresh) {
      it->second.first = std::min(it->second.first, original[i]);
      it->second.second = std::min(it->second.second, tagged[i]);
    }
  }

  std::map<std::string, int> preferred_uses;
  for (const auto& [_, names] : class_names) ++preferred_uses[names.first];
  // Tagged names are unique per atom; an untagged one names an atom whose
  // original name occurs on one side only, so no other class can prefer it.
  std::map<std::size_t, std::string> chosen;
  for (const auto& [root, names] : class_names)
    chosen[root] = preferred_uses[names.first] == 1 ? names.first : names.second;

  std::vector<Atom> atoms;
  atoms.reserve(chosen.size());
  for (const auto& [_, name] : chosen) atoms.push_back(name);
  auto carrier = make_carrier(std::move(atoms));

  std::vector<std::size_t> from_left(nl), from_right(right->size());
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = carrier->index(chosen[uf.find(i)]);
    if (i < nl)
      from_left[i] = idx;
    else
      from_right[i - nl] = idx;
  }
  return {carrier, FinFunction(left, carrier, std::move(from_left)),
          FinFunction(right, carrier, std::move(from_right))};
}

Pushout pushout(const PetriMorphism& leg1, const PetriMorphism& leg2) {
  if (!(leg1.domain() == leg2.domain())) throw EndpointMismatch("pushout: legs have different domains");
  const PetriNet& a = leg1.codomain();
  const PetriNet& b = leg2.codomain();
  const PetriNet& base = leg1.domain();

  std::vector<std::pair<std::size_t, std::size_t>> tid, pid;
  for (std::size_t t = 0; t < base.num_transitions(); ++t)
    tid.emplace_back(leg1.on_transitions()(t), leg2.on_transitions()(t));
  for (std::size_t p = 0; p < base.num_places(); ++p)
    pid.emplace_back(leg1.on_places()(p), leg2.on_places()(p));

  Glued ts = glue(a.transitions(), b.transitions(), tid);
  Glued ps = glue(a.places(), b.places(), pid);

  std::vector<std::optional<Multiset>> src(ts.carrier->size()), tgt(ts.carrier->size());
  auto fill = [&](const PetriNet& net, const Glued& tg, bool left) {
    const FinFunction& tmap = left ? tg.from_left : tg.from_right;
    const FinFunction& pmap = left ? ps.from_left : ps.from_right;
    for (std::size_t t = 0; t < net.num_transitions(); ++t) {
      auto j = tmap(t);
      if (!src[j]) {
        src[j] = map(pmap, net.source(t));
        tgt[j] = map(pmap, net.target(t));
      }
    }
  };
  fill(a, ts, true);
  fill(b, ts, false);

  std::vector<Multiset> s, t;
  for (std::size_t j = 0; j < src.size(); ++j) {
    s.push_back(std::move(*src[j]));
    t.push_back(std::move(*tgt[j]));
  }
  PetriNet apex(ts.carrier, ps.carrier, std::move(s), std::move(t));
  PetriMorphism left(a, apex, ts.from_left, ps.from_left);
  PetriMorphism right(b, apex, ts.from_right, ps.from_right);
  return {leg1, leg2, std::move(apex), std::move(left), std::move(right)};
}

Pushout coproduct(const PetriNet& left, const PetriNet& right) {
  return pushout(PetriMorphism::from_empty(left), PetriMorphism::from_empty(right));
}

PetriMorphism factor_through_pushout(const Pushout& po, const PetriMorphism& to_left,
                                     const PetriMorphism& to_right) {
  if (!(to_left.domain() == po.left.domain()) || !(to_right.domain() == po.right.domain()))
    throw EndpointMismatch("cocone does not start at the pushout's inputs");
  if (!(to_left.codomain() == to_right.codomain()))
    throw EndpointMismatch("cocone morphisms have different codomains");
  if (!(compose(to_left, po.leg1) == compose(to_right, po.leg2)))
    throw SquareViolation("incoherent cocone: morphisms disagree on the shared domain");

  const PetriNet& target = to_left.codomain();
  const std::size_t nt = po.apex.num_transitions();
  const std::size_t np = po.apex.num_places();
  std::vector<std::optional<std::size_t>> tmap(nt), pmap(np);
  auto assign = [](std::vector<std::optional<std::size_t>>& out, std::size_t at, std::size_t value) {
    if (out[at] && *out[at] != value)
      throw SquareViolation("incoherent cocone: identified elements have different images");
    out[at] = value;
  };
  for (const auto* side : {&po.left, &po.right}) {
    const PetriMorphism& cocone = side == &po.left ? to_left : to_right;
    for (std::size_t t = 0; t < side->domain().num_transitions(); ++t)
      assign(tmap, side->on_transitions()(t), cocone.on_transitions()(t));
    for (std::size_t p = 0; p < side->domain().num_places(); ++p)
      assign(pmap, side->on_places()(p), cocone.on_places()(p));
  }
  std::vector<std::size_t> ti(nt), pi(np);
  for (std::size_t j = 0; j < nt; ++j) ti[j] = tmap[j].value();
  for (std::size_t j = 0; j < np; ++j) pi[j] = pmap[j].value();
  return PetriMorphism(po.apex, target, FinFunction(po.apex.transitions(), target.transitions(), std::move(ti)),
                       FinFunction(po.apex.places(), target.places(), std::move(pi)));
}

}  // namespace opn
