#include "opn/open.hpp"

#include <algorithm>
#include <tuple>

namespace opn {

OpenPetriNet::OpenPetriNet()
    : input_map_(FinFunction::from_empty(net_.places())),
      output_map_(FinFunction::from_empty(net_.places())) {}

OpenPetriNet::OpenPetriNet(PetriNet net, FinFunction input_map, FinFunction output_map)
    : net_(std::move(net)), input_map_(std::move(input_map)), output_map_(std::move(output_map)) {
  if (!same_carrier(input_map_.codomain(), net_.places()))
    throw InvalidNet("input map does not land in the places of the net");
  if (!same_carrier(output_map_.codomain(), net_.places()))
    throw InvalidNet("output map does not land in the places of the net");
  input_map_ = FinFunction(input_map_.domain(), net_.places(), input_map_.image());
  output_map_ = FinFunction(output_map_.domain(), net_.places(), output_map_.image());
}

OpenPetriNet OpenPetriNet::make(PetriNet net, const std::map<Atom, Atom>& inputs,
                                const std::map<Atom, Atom>& outputs) {
  auto boundary = [&](const std::map<Atom, Atom>& table, const char* side) {
    std::vector<Atom> points;
    for (const auto& [point, place] : table) {
      if (!net.places()->contains(place))
        throw InvalidNet(std::string(side) + " point '" + point + "' maps to unknown place '" + place + "'");
      points.push_back(point);
    }
    auto carrier = make_carrier(std::move(points));
    return FinFunction::from_table(carrier, net.places(), table);
  };
  auto in = boundary(inputs, "input");
  auto out = boundary(outputs, "output");
  return OpenPetriNet(std::move(net), std::move(in), std::move(out));
}

OpenPetriNet identity_open(CarrierPtr boundary) {
  auto id = FinFunction::identity(boundary);
  return OpenPetriNet(discrete(boundary), id, id);
}

Composite compose_open_with_legs(const OpenPetriNet& first, const OpenPetriNet& second) {
  if (!same_carrier(first.outputs(), second.inputs()))
    throw EndpointMismatch("cannot compose open nets: output boundary of the first differs from "
                           "input boundary of the second");
  Pushout po = pushout(PetriMorphism::from_places(first.output_map(), first.net()),
                       PetriMorphism::from_places(second.input_map(), second.net()));
  auto in = compose(po.left.on_places(), first.input_map());
  auto out = compose(po.right.on_places(), second.output_map());
  OpenPetriNet net(po.apex, std::move(in), std::move(out));
  return {std::move(net), std::move(po)};
}

namespace {

// f1 + f2 : A1 + A2 -> B1 + B2 for glued (disjoint) carriers.
FinFunction sum_map(const Glued& src, const Glued& tgt, const FinFunction& f1, const FinFunction& f2) {
  std::vector<std::size_t> image(src.carrier->size());
  for (std::size_t i = 0; i < f1.domain()->size(); ++i) image[src.from_left(i)] = tgt.from_left(f1(i));
  for (std::size_t i = 0; i < f2.domain()->size(); ++i) image[src.from_right(i)] = tgt.from_right(f2(i));
  return FinFunction(src.carrier, tgt.carrier, std::move(image));
}

// Boundary map of a tensor: the sum of the two boundary maps followed by the
// coproduct injections of the nets.
FinFunction boundary_sum(const Glued& points, const Pushout& nets, const FinFunction& a,
                         const FinFunction& b) {
  std::vector<std::size_t> image(points.carrier->size());
  for (std::size_t i = 0; i < a.domain()->size(); ++i)
    image[points.from_left(i)] = nets.left.on_places()(a(i));
  for (std::size_t i = 0; i < b.domain()->size(); ++i)
    image[points.from_right(i)] = nets.right.on_places()(b(i));
  return FinFunction(points.carrier, nets.apex.places(), std::move(image));
}

}  // namespace

Tensor tensor_open_with_legs(const OpenPetriNet& a, const OpenPetriNet& b) {
  Pushout po = coproduct(a.net(), b.net());
  Glued in = glue(a.inputs(), b.inputs(), {});
  Glued out = glue(a.outputs(), b.outputs(), {});
  auto in_map = boundary_sum(in, po, a.input_map(), b.input_map());
  auto out_map = boundary_sum(out, po, a.output_map(), b.output_map());
  OpenPetriNet net(po.apex, std::move(in_map), std::move(out_map));
  return {std::move(net), std::move(po), std::move(in), std::move(out)};
}

// OpenNetMorphism -------------------------------------------------------------

OpenNetMorphism::OpenNetMorphism(OpenPetriNet source, OpenPetriNet target, FinFunction on_inputs,
                                 FinFunction on_outputs, PetriMorphism on_net)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_inputs_(std::move(on_inputs)),
      on_outputs_(std::move(on_outputs)),
      on_net_(std::move(on_net)) {
  if (!(on_net_.domain() == source_.net()) || !(on_net_.codomain() == target_.net()))
    throw EndpointMismatch("square: net morphism does not go between the two open nets");
  if (!same_carrier(on_inputs_.domain(), source_.inputs()) ||
      !same_carrier(on_inputs_.codomain(), target_.inputs()))
    throw EndpointMismatch("square: input map does not go between the input boundaries");
  if (!same_carrier(on_outputs_.domain(), source_.outputs()) ||
      !same_carrier(on_outputs_.codomain(), target_.outputs()))
    throw EndpointMismatch("square: output map does not go between the output boundaries");
  const auto& g = on_net_.on_places();
  for (std::size_t x = 0; x < source_.inputs()->size(); ++x)
    if (g(source_.input_map()(x)) != target_.input_map()(on_inputs_(x)))
      throw SquareViolation("input square fails at boundary point '" + (*source_.inputs())[x] + "'");
  for (std::size_t y = 0; y < source_.outputs()->size(); ++y)
    if (g(source_.output_map()(y)) != target_.output_map()(on_outputs_(y)))
      throw SquareViolation("output square fails at boundary point '" + (*source_.outputs())[y] + "'");
}

OpenNetMorphism OpenNetMorphism::identity(const OpenPetriNet& net) {
  return OpenNetMorphism(net, net, FinFunction::identity(net.inputs()),
                         FinFunction::identity(net.outputs()), PetriMorphism::identity(net.net()));
}

bool OpenNetMorphism::is_invertible() const {
  return on_inputs_.is_bijective() && on_outputs_.is_bijective() && on_net_.is_isomorphism();
}

OpenNetMorphism OpenNetMorphism::inverse() const {
  return OpenNetMorphism(target_, source_, on_inputs_.inverse(), on_outputs_.inverse(),
                         on_net_.inverse());
}

bool OpenNetMorphism::is_globular() const {
  return on_inputs_ == FinFunction::identity(source_.inputs()) &&
         on_outputs_ == FinFunction::identity(source_.outputs());
}

bool operator==(const OpenNetMorphism& a, const OpenNetMorphism& b) {
  return a.on_inputs_ == b.on_inputs_ && a.on_outputs_ == b.on_outputs_ && a.on_net_ == b.on_net_ &&
         a.source_ == b.source_ && a.target_ == b.target_;
}

OpenNetMorphism hcompose(const OpenNetMorphism& left, const OpenNetMorphism& right) {
  if (!(left.on_outputs() == right.on_inputs()))
    throw EndpointMismatch("horizontal composite: middle boundary maps differ");
  Composite src = compose_open_with_legs(left.source(), right.source());
  Composite tgt = compose_open_with_legs(left.target(), right.target());
  PetriMorphism mediating =
      factor_through_pushout(src.gluing, compose(tgt.gluing.left, left.on_net()),
                             compose(tgt.gluing.right, right.on_net()));
  return OpenNetMorphism(std::move(src.net), std::move(tgt.net), left.on_inputs(), right.on_outputs(),
                         std::move(mediating));
}

OpenNetMorphism vcompose(const OpenNetMorphism& bottom, const OpenNetMorphism& top) {
  if (!(top.target() == bottom.source()))
    throw EndpointMismatch("vertical composite: target of the top square is not the source of the bottom");
  return OpenNetMorphism(top.source(), bottom.target(), compose(bottom.on_inputs(), top.on_inputs()),
                         compose(bottom.on_outputs(), top.on_outputs()),
                         compose(bottom.on_net(), top.on_net()));
}

OpenNetMorphism tensor_squares(const OpenNetMorphism& a, const OpenNetMorphism& b) {
  Tensor src = tensor_open_with_legs(a.source(), b.source());
  Tensor tgt = tensor_open_with_legs(a.target(), b.target());
  PetriMorphism mediating = factor_through_pushout(src.gluing, compose(tgt.gluing.left, a.on_net()),
                                                   compose(tgt.gluing.right, b.on_net()));
  return OpenNetMorphism(src.net, tgt.net, sum_map(src.inputs, tgt.inputs, a.on_inputs(), b.on_inputs()),
                         sum_map(src.outputs, tgt.outputs, a.on_outputs(), b.on_outputs()),
                         std::move(mediating));
}

// Coherence -------------------------------------------------------------------

namespace {

PetriMorphism checked_inverse_pair(const PetriMorphism& forward, const PetriMorphism& backward) {
  if (!(compose(backward, forward) == PetriMorphism::identity(forward.domain())) ||
      !(compose(forward, backward) == PetriMorphism::identity(forward.codomain())))
    throw Error("canonical comparison maps are not mutually inverse");
  return forward;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::pair<OpenPetriNet, OpenPetriNet> coherence_sides(const CoherenceCase& witness) {
  return std::visit(
      overloaded{
          [](const coherence::Associator& w) {
            return std::pair{compose_open(compose_open(w.p, w.q), w.r),
                             compose_open(w.p, compose_open(w.q, w.r))};
          },
          [](const coherence::LeftUnitor& w) {
            return std::pair{compose_open(identity_open(w.p.inputs()), w.p), w.p};
          },
          [](const coherence::RightUnitor& w) {
            return std::pair{compose_open(w.p, identity_open(w.p.outputs())), w.p};
          },
          [](const coherence::Symmetry& w) {
            return std::pair{tensor_open(w.first, w.second), tensor_open(w.second, w.first)};
          },
      },
      witness);
}

OpenNetMorphism canonical_iso(const OpenPetriNet& lhs, const OpenPetriNet& rhs,
                              const CoherenceCase& witness) {
  auto [built_lhs, built_rhs] = coherence_sides(witness);
  if (!(built_lhs == lhs) || !(built_rhs == rhs))
    throw EndpointMismatch("coherence witness does not construct the given open nets");

  return std::visit(
      overloaded{
          [&](const coherence::Associator& w) {
            Composite pq = compose_open_with_legs(w.p, w.q);
            Composite pq_r = compose_open_with_legs(pq.net, w.r);
            Composite qr = compose_open_with_legs(w.q, w.r);
            Composite p_qr = compose_open_with_legs(w.p, qr.net);

            PetriMorphism pq_to_rhs = factor_through_pushout(
                pq.gluing, p_qr.gluing.left, compose(p_qr.gluing.right, qr.gluing.left));
            PetriMorphism forward = factor_through_pushout(
                pq_r.gluing, pq_to_rhs, compose(p_qr.gluing.right, qr.gluing.right));

            PetriMorphism qr_to_lhs = factor_through_pushout(
                qr.gluing, compose(pq_r.gluing.left, pq.gluing.right), pq_r.gluing.right);
            PetriMorphism backward = factor_through_pushout(
                p_qr.gluing, compose(pq_r.gluing.left, pq.gluing.left), qr_to_lhs);

            return OpenNetMorphism(lhs, rhs, FinFunction::identity(lhs.inputs()),
                                   FinFunction::identity(lhs.outputs()),
                                   checked_inverse_pair(forward, backward));
          },
          [&](const coherence::LeftUnitor& w) {
            Composite c = compose_open_with_legs(identity_open(w.p.inputs()), w.p);
            PetriMorphism forward =
                factor_through_pushout(c.gluing, PetriMorphism::from_places(w.p.input_map(), w.p.net()),
                                       PetriMorphism::identity(w.p.net()));
            return OpenNetMorphism(lhs, rhs, FinFunction::identity(lhs.inputs()),
                                   FinFunction::identity(lhs.outputs()),
                                   checked_inverse_pair(forward, c.gluing.right));
          },
          [&](const coherence::RightUnitor& w) {
            Composite c = compose_open_with_legs(w.p, identity_open(w.p.outputs()));
            PetriMorphism forward =
                factor_through_pushout(c.gluing, PetriMorphism::identity(w.p.net()),
                                       PetriMorphism::from_places(w.p.output_map(), w.p.net()));
            return OpenNetMorphism(lhs, rhs, FinFunction::identity(lhs.inputs()),
                                   FinFunction::identity(lhs.outputs()),
                                   checked_inverse_pair(forward, c.gluing.left));
          },
          [&](const coherence::Symmetry& w) {
            Tensor ab = tensor_open_with_legs(w.first, w.second);
            Tensor ba = tensor_open_with_legs(w.second, w.first);
            PetriMorphism forward =
                factor_through_pushout(ab.gluing, ba.gluing.right, ba.gluing.left);
            PetriMorphism backward =
                factor_through_pushout(ba.gluing, ab.gluing.right, ab.gluing.left);
            auto swap = [](const Glued& from, const Glued& to) {
              std::vector<std::size_t> image(from.carrier->size());
              for (std::size_t i = 0; i < from.from_left.domain()->size(); ++i)
                image[from.from_left(i)] = to.from_right(i);
              for (std::size_t i = 0; i < from.from_right.domain()->size(); ++i)
                image[from.from_right(i)] = to.from_left(i);
              return FinFunction(from.carrier, to.carrier, std::move(image));
            };
            return OpenNetMorphism(lhs, rhs, swap(ab.inputs, ba.inputs), swap(ab.outputs, ba.outputs),
                                   checked_inverse_pair(forward, backward));
          },
      },
      witness);
}

// Isomorphism search -----------------------------------------------------------

namespace {

using Signature = std::vector<std::tuple<Count, Count>>;

// Invariant of a place under isomorphism: sorted (in, out) arc weights over
// all transitions, and how many boundary points land on it.
std::vector<std::pair<Signature, std::pair<std::size_t, std::size_t>>> place_signatures(
    const OpenPetriNet& n) {
  const PetriNet& net = n.net();
  std::vector<std::pair<Signature, std::pair<std::size_t, std::size_t>>> out(net.num_places());
  for (std::size_t t = 0; t < net.num_transitions(); ++t)
    for (std::size_t p = 0; p < net.num_places(); ++p)
      out[p].first.emplace_back(net.source(t)[p], net.target(t)[p]);
  for (auto& s : out) std::sort(s.first.begin(), s.first.end());
  for (auto j : n.input_map().image()) ++out[j].second.first;
  for (auto j : n.output_map().image()) ++out[j].second.second;
  return out;
}

// Given a place bijection, pair up the remaining pieces (transitions and
// boundary points) whose images are forced up to permutation of identical
// elements. Returns nullopt if the place map does not extend.
std::optional<OpenNetMorphism> extend(const OpenPetriNet& a, const OpenPetriNet& b,
                                      const std::vector<std::size_t>& place_map) {
  const PetriNet& na = a.net();
  const PetriNet& nb = b.net();
  FinFunction g(na.places(), nb.places(), place_map);

  // transitions: match by mapped (source, target)
  std::map<std::pair<std::vector<Count>, std::vector<Count>>, std::vector<std::size_t>> pool;
  for (std::size_t t = 0; t < nb.num_transitions(); ++t)
    pool[{nb.source(t).counts(), nb.target(t).counts()}].push_back(t);
  for (auto& [_, v] : pool) std::reverse(v.begin(), v.end());
  std::vector<std::size_t> tmap(na.num_transitions());
  for (std::size_t t = 0; t < na.num_transitions(); ++t) {
    auto it = pool.find({map(g, na.source(t)).counts(), map(g, na.target(t)).counts()});
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    tmap[t] = it->second.back();
    it->second.pop_back();
  }

  auto match_boundary = [&](const FinFunction& fa, const FinFunction& fb) -> std::optional<FinFunction> {
    std::map<std::size_t, std::vector<std::size_t>> by_place;
    for (std::size_t y = fb.domain()->size(); y-- > 0;) by_place[fb(y)].push_back(y);
    std::vector<std::size_t> image(fa.domain()->size());
    for (std::size_t x = 0; x < image.size(); ++x) {
      auto& v = by_place[g(fa(x))];
      if (v.empty()) return std::nullopt;
      image[x] = v.back();
      v.pop_back();
    }
    return FinFunction(fa.domain(), fb.domain(), std::move(image));
  };
  auto f_in = match_boundary(a.input_map(), b.input_map());
  auto f_out = match_boundary(a.output_map(), b.output_map());
  if (!f_in || !f_out) return std::nullopt;
  PetriMorphism alpha(na, nb, FinFunction(na.transitions(), nb.transitions(), std::move(tmap)), g);
  return OpenNetMorphism(a, b, *f_in, *f_out, std::move(alpha));
}

}  // namespace

IsoSearch iso_open(const OpenPetriNet& a, const OpenPetriNet& b, std::size_t node_budget) {
  IsoSearch result;
  const PetriNet& na = a.net();
  const PetriNet& nb = b.net();
  if (na.num_places() != nb.num_places() || na.num_transitions() != nb.num_transitions() ||
      a.inputs()->size() != b.inputs()->size() || a.outputs()->size() != b.outputs()->size())
    return result;

  auto sa = place_signatures(a);
  auto sb = place_signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return result;
  }

  const std::size_t n = na.num_places();
  std::vector<std::size_t> place_map(n);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;
  bool aborted = false;

  auto search = [&](auto&& self, std::size_t p) -> bool {
    if (++nodes > node_budget) {
      aborted = true;
      return false;
    }
    if (p == n) {
      if (auto iso = extend(a, b, place_map)) {
        result.iso = std::move(iso);
        return true;
      }
      return false;
    }
    for (std::size_t q = 0; q < n && !aborted; ++q) {
      if (used[q] || sa[p] != sb[q]) continue;
      used[q] = true;
      place_map[p] = q;
      if (self(self, p + 1)) return true;
      used[q] = false;
    }
    return false;
  };

  if (search(search, 0))
    result.status = IsoSearch::Status::found;
  else
    result.status = aborted ? IsoSearch::Status::aborted : IsoSearch::Status::absent;
  return result;
}

}  // namespace opn
