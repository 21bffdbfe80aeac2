#include "opn/generate.hpp"

#include <set>
#include <string>

namespace opn {

namespace {

const char* const kPlaceNames[] = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L"};
const char* const kTransitionNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

std::string fresh_name(const std::set<std::string>& used, const std::string& base) {
  std::string name = base;
  while (used.count(name)) name += '\'';
  return name;
}

Multiset random_multiset(Rng& rng, const NetShape& shape, const CarrierPtr& places,
                         const std::vector<bool>& allowed) {
  std::vector<Count> counts(places->size(), 0);
  for (std::size_t p = 0; p < counts.size(); ++p)
    if (allowed[p] && rng.chance(shape.arc_density)) counts[p] = rng.between(1, shape.max_coefficient);
  return Multiset(places, std::move(counts));
}

PetriNet random_net_with(Rng& rng, const NetShape& shape, const std::vector<bool>& may_source,
                         const std::vector<bool>& may_target, const CarrierPtr& places) {
  const std::size_t nt = rng.between(0, shape.max_transitions);
  std::vector<Atom> names(kTransitionNames, kTransitionNames + nt);
  auto ts = make_carrier(names);
  std::vector<Multiset> s, t;
  for (std::size_t i = 0; i < nt; ++i) {
    s.push_back(random_multiset(rng, shape, places, may_source));
    if (!shape.allow_empty_source && s.back().is_zero()) {
      std::vector<std::size_t> allowed;
      for (std::size_t p = 0; p < may_source.size(); ++p)
        if (may_source[p]) allowed.push_back(p);
      if (!allowed.empty()) {
        std::vector<Count> counts(places->size(), 0);
        counts[allowed[rng.below(allowed.size())]] = 1;
        s.back() = Multiset(places, std::move(counts));
      }
    }
    t.push_back(random_multiset(rng, shape, places, may_target));
  }
  return PetriNet(ts, places, std::move(s), std::move(t));
}

CarrierPtr random_places(Rng& rng, const NetShape& shape) {
  const std::size_t np = rng.between(shape.min_places, shape.max_places);
  return make_carrier(std::vector<Atom>(kPlaceNames, kPlaceNames + np));
}

FinFunction random_function(Rng& rng, const CarrierPtr& from, const CarrierPtr& to) {
  std::vector<std::size_t> image(from->size());
  for (auto& j : image) j = rng.below(to->size());
  return FinFunction(from, to, std::move(image));
}

struct Merge {
  FinFunction map;
  std::vector<bool> fresh;  // per codomain element: no preimage
};

// Random surjection-plus-fresh out of `carrier`: elements with equal keys may
// be merged; up to `max_fresh` fresh elements are added.
Merge random_merge(Rng& rng, const CarrierPtr& carrier, const std::vector<std::size_t>& keys,
                   std::size_t max_fresh, const std::string& fresh_base) {
  std::vector<std::size_t> cls(carrier->size());
  std::vector<std::pair<std::size_t, Atom>> classes;  // (key, name of first member)
  for (std::size_t i = 0; i < carrier->size(); ++i) {
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].first == keys[i]) candidates.push_back(c);
    if (!candidates.empty() && rng.chance(40)) {
      cls[i] = candidates[rng.below(candidates.size())];
    } else {
      cls[i] = classes.size();
      classes.emplace_back(keys[i], (*carrier)[i]);
    }
  }
  std::set<std::string> used(carrier->begin(), carrier->end());
  std::vector<Atom> names;
  for (const auto& [_, name] : classes) names.push_back(name);
  const std::size_t fresh = max_fresh == 0 ? 0 : rng.between(0, max_fresh);
  std::vector<Atom> fresh_names;
  for (std::size_t k = 0; k < fresh; ++k) {
    auto name = fresh_name(used, fresh_base + std::to_string(k));
    used.insert(name);
    names.push_back(name);
    fresh_names.push_back(name);
  }
  auto target = make_carrier(names);
  std::vector<std::size_t> image(carrier->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = target->index(classes[cls[i]].second);
  std::vector<bool> is_fresh(target->size(), false);
  for (const auto& n : fresh_names) is_fresh[target->index(n)] = true;
  return {FinFunction(carrier, target, std::move(image)), std::move(is_fresh)};
}

// Builds the target of a square out of `source` from a place map and the two
// boundary maps, adding up to one fresh transition.
OpenNetMorphism build_square(Rng& rng, const NetShape& shape, const OpenPetriNet& source,
                             const Merge& places, const Merge& inputs, const Merge& outputs) {
  const PetriNet& net = source.net();
  const CarrierPtr& new_places = places.map.codomain();

  std::vector<Atom> tnames(net.transitions()->begin(), net.transitions()->end());
  std::set<std::string> used(tnames.begin(), tnames.end());
  const bool extra = new_places->size() > 0 && rng.chance(30);
  Atom extra_name;
  if (extra) {
    extra_name = fresh_name(used, "new");
    tnames.push_back(extra_name);
  }
  auto ts = make_carrier(tnames);
  std::vector<std::optional<Multiset>> s(ts->size()), t(ts->size());
  std::vector<std::size_t> timage(net.num_transitions());
  for (std::size_t i = 0; i < net.num_transitions(); ++i) {
    auto j = ts->index((*net.transitions())[i]);
    timage[i] = j;
    s[j] = map(places.map, net.source(i));
    t[j] = map(places.map, net.target(i));
  }
  if (extra) {
    std::vector<bool> all(new_places->size(), true);
    auto j = ts->index(extra_name);
    s[j] = random_multiset(rng, shape, new_places, all);
    t[j] = random_multiset(rng, shape, new_places, all);
  }
  std::vector<Multiset> sv, tv;
  for (std::size_t j = 0; j < ts->size(); ++j) {
    sv.push_back(*s[j]);
    tv.push_back(*t[j]);
  }
  PetriNet target_net(ts, new_places, std::move(sv), std::move(tv));

  auto boundary = [&](const Merge& m, const FinFunction& old_map) {
    std::vector<std::size_t> image(m.map.codomain()->size());
    for (std::size_t x = 0; x < old_map.domain()->size(); ++x) image[m.map(x)] = places.map(old_map(x));
    for (std::size_t x = 0; x < image.size(); ++x)
      if (m.fresh[x]) image[x] = rng.below(new_places->size());
    return FinFunction(m.map.codomain(), new_places, std::move(image));
  };
  OpenPetriNet target(target_net, boundary(inputs, source.input_map()),
                      boundary(outputs, source.output_map()));
  PetriMorphism alpha(net, target_net, FinFunction(net.transitions(), ts, std::move(timage)), places.map);
  return OpenNetMorphism(source, std::move(target), inputs.map, outputs.map, std::move(alpha));
}

std::vector<std::size_t> keys_through(const FinFunction& boundary, const FinFunction& places) {
  std::vector<std::size_t> keys(boundary.domain()->size());
  for (std::size_t x = 0; x < keys.size(); ++x) keys[x] = places(boundary(x));
  return keys;
}

}  // namespace

CarrierPtr random_boundary(Rng& rng, const NetShape& shape, const std::string& prefix) {
  const std::size_t n = rng.between(0, shape.max_boundary);
  std::vector<Atom> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_carrier(std::move(names));
}

PetriNet random_net(Rng& rng, const NetShape& shape) {
  auto places = random_places(rng, shape);
  std::vector<bool> all(places->size(), true);
  return random_net_with(rng, shape, all, all, places);
}

OpenPetriNet random_open(Rng& rng, const NetShape& shape, CarrierPtr inputs, CarrierPtr outputs) {
  PetriNet net = random_net(rng, shape);
  auto in = random_function(rng, inputs, net.places());
  auto out = random_function(rng, outputs, net.places());
  return OpenPetriNet(std::move(net), std::move(in), std::move(out));
}

std::vector<OpenPetriNet> random_chain(Rng& rng, const NetShape& shape, std::size_t length) {
  std::vector<CarrierPtr> boundaries;
  for (std::size_t k = 0; k <= length; ++k)
    boundaries.push_back(random_boundary(rng, shape, std::string(1, static_cast<char>('u' + k % 6))));
  std::vector<OpenPetriNet> out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(random_open(rng, shape, boundaries[k], boundaries[k + 1]));
  return out;
}

OpenPetriNet random_one_way(Rng& rng, const NetShape& shape, CarrierPtr inputs, CarrierPtr outputs) {
  auto places = random_places(rng, shape);
  auto in = random_function(rng, inputs, places);
  auto out = random_function(rng, outputs, places);
  std::vector<bool> may_source(places->size(), true), may_target(places->size(), true);
  for (auto p : in.image()) may_target[p] = false;
  for (auto p : out.image()) may_source[p] = false;
  PetriNet net = random_net_with(rng, shape, may_source, may_target, places);
  return OpenPetriNet(std::move(net), std::move(in), std::move(out));
}

OpenNetMorphism random_square(Rng& rng, const NetShape& shape, const OpenPetriNet& source) {
  const auto& places = source.net().places();
  Merge pm = random_merge(rng, places, std::vector<std::size_t>(places->size(), 0), 1, "N");
  const std::size_t boundary_fresh = pm.map.codomain()->empty() ? 0 : 1;
  Merge im = random_merge(rng, source.inputs(), keys_through(source.input_map(), pm.map), boundary_fresh, "i");
  Merge om = random_merge(rng, source.outputs(), keys_through(source.output_map(), pm.map), boundary_fresh, "o");
  return build_square(rng, shape, source, pm, im, om);
}

std::pair<OpenNetMorphism, OpenNetMorphism> random_square_pair(Rng& rng, const NetShape& shape,
                                                               const OpenPetriNet& p,
                                                               const OpenPetriNet& q) {
  if (!same_carrier(p.outputs(), q.inputs()))
    throw EndpointMismatch("random_square_pair: open nets are not composable");
  const auto& pp = p.net().places();
  const auto& qp = q.net().places();
  Merge pm = random_merge(rng, pp, std::vector<std::size_t>(pp->size(), 0), 1, "N");
  Merge qm = random_merge(rng, qp, std::vector<std::size_t>(qp->size(), 0), 1, "N");

  auto left_keys = keys_through(p.output_map(), pm.map);
  auto right_keys = keys_through(q.input_map(), qm.map);
  std::vector<std::size_t> middle_keys(left_keys.size());
  for (std::size_t y = 0; y < middle_keys.size(); ++y)
    middle_keys[y] = left_keys[y] * (qm.map.codomain()->size() + 1) + right_keys[y];
  Merge middle = random_merge(rng, p.outputs(), middle_keys, 0, "m");

  Merge im = random_merge(rng, p.inputs(), keys_through(p.input_map(), pm.map),
                          pm.map.codomain()->empty() ? 0 : 1, "i");
  Merge om = random_merge(rng, q.outputs(), keys_through(q.output_map(), qm.map),
                          qm.map.codomain()->empty() ? 0 : 1, "o");
  auto alpha = build_square(rng, shape, p, pm, im, middle);
  auto beta = build_square(rng, shape, q, qm, middle, om);
  return {std::move(alpha), std::move(beta)};
}

}  // namespace opn
