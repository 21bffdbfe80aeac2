#pragma once

// Petri nets, their morphisms, and the finite colimits used to glue nets.

#include <map>
#include <string>
#include <vector>

#include "opn/multiset.hpp"

namespace opn {

/// A Petri net: source and target maps T -> N[S]. Transitions and places are
/// separate namespaces; both carriers are sorted, so transition index order is
/// lexicographic id order.
class PetriNet {
 public:
  /// The empty net (initial object).
  PetriNet();
  /// Validates that every multiset has carrier `places` and that there is one
  /// source and one target per transition.
  PetriNet(CarrierPtr transitions, CarrierPtr places, std::vector<Multiset> source,
           std::vector<Multiset> target);

  /// Named construction. Throws InvalidNet on a transition missing its source
  /// or target entry, on entries for undeclared transitions, and on
  /// references to unknown places.
  static PetriNet make(std::vector<Atom> transitions, std::vector<Atom> places,
                       const std::map<Atom, AtomCounts>& source,
                       const std::map<Atom, AtomCounts>& target);

  const CarrierPtr& transitions() const { return transitions_; }
  const CarrierPtr& places() const { return places_; }
  const Multiset& source(std::size_t t) const { return source_[t]; }
  const Multiset& target(std::size_t t) const { return target_[t]; }
  const Multiset& source(std::string_view t) const;
  const Multiset& target(std::string_view t) const;
  std::size_t num_transitions() const { return transitions_->size(); }
  std::size_t num_places() const { return places_->size(); }

  /// A multiset over this net's places.
  Multiset marking(const AtomCounts& counts) const { return Multiset(places_, counts); }

  friend bool operator==(const PetriNet& a, const PetriNet& b);

 private:
  CarrierPtr transitions_;
  CarrierPtr places_;
  std::vector<Multiset> source_;
  std::vector<Multiset> target_;
};

/// The discrete net on a set: no transitions, places X.
PetriNet discrete(CarrierPtr places);
/// The place set of a net.
inline const CarrierPtr& places_of(const PetriNet& net) { return net.places(); }

/// A pair (f on transitions, g on places) making both squares
/// s'∘f = N[g]∘s and t'∘f = N[g]∘t commute.
class PetriMorphism {
 public:
  /// Throws SquareViolation naming the first offending transition and side.
  PetriMorphism(PetriNet domain, PetriNet codomain, FinFunction on_transitions,
                FinFunction on_places);

  static PetriMorphism identity(const PetriNet& net);
  /// The unique morphism out of the empty net.
  static PetriMorphism from_empty(const PetriNet& codomain);
  /// The morphism L(X) -> P determined by a function X -> places(P).
  static PetriMorphism from_places(const FinFunction& boundary, const PetriNet& codomain);

  const PetriNet& domain() const { return domain_; }
  const PetriNet& codomain() const { return codomain_; }
  const FinFunction& on_transitions() const { return on_transitions_; }
  const FinFunction& on_places() const { return on_places_; }

  /// Re-evaluates both squares; throws SquareViolation if either fails.
  void verify() const;
  bool is_isomorphism() const;
  PetriMorphism inverse() const;

  friend bool operator==(const PetriMorphism& a, const PetriMorphism& b);

 private:
  PetriNet domain_;
  PetriNet codomain_;
  FinFunction on_transitions_;
  FinFunction on_places_;
};

/// `after ∘ before`; throws EndpointMismatch unless before.codomain == after.domain.
PetriMorphism compose(const PetriMorphism& after, const PetriMorphism& before);

/// Result of gluing two carriers: the glued carrier and the two inclusions.
struct Glued {
  CarrierPtr carrier;
  FinFunction from_left;
  FinFunction from_right;
};

/// Disjoint union of `left` and `right` quotiented by the equivalence
/// generated by `identify` (pairs of left index, right index), with
/// deterministic names:
///  - an atom keeps its name unless the other side has the same name, in which
///    case it is tagged "@1" (left) or "@2" (right);
///  - a class is named by the least original name among its members, unless
///    that clashes with another class, in which case the least tagged name is
///    used.
Glued glue(const CarrierPtr& left, const CarrierPtr& right,
           const std::vector<std::pair<std::size_t, std::size_t>>& identify);

/// Colimit of a span leg1: base -> left, leg2: base -> right.
struct Pushout {
  PetriMorphism leg1;
  PetriMorphism leg2;
  PetriNet apex;
  PetriMorphism left;   ///< leg1.codomain -> apex
  PetriMorphism right;  ///< leg2.codomain -> apex
};

/// Pointwise pushout of transitions and places.
Pushout pushout(const PetriMorphism& leg1, const PetriMorphism& leg2);

/// Coproduct as the pushout over the empty net.
Pushout coproduct(const PetriNet& left, const PetriNet& right);

/// The unique morphism apex -> R with m∘left = to_left and m∘right = to_right.
/// Throws SquareViolation if to_left∘leg1 != to_right∘leg2 (incoherent cocone),
/// EndpointMismatch if the cocone has the wrong domains or codomains.
PetriMorphism factor_through_pushout(const Pushout& po, const PetriMorphism& to_left,
                                     const PetriMorphism& to_right);

}  // namespace opn
