#pragma once

// Open Petri nets (cospans LX -> P <- LY stored as boundary functions into
// the places), their composition and tensor, 2-morphisms, and the coherence
// isomorphisms of the double category they form.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opn/petri.hpp"

namespace opn {

class OpenPetriNet {
 public:
  /// The empty open net ∅ ↛ ∅.
  OpenPetriNet();
  /// Throws InvalidNet unless both maps land in net.places().
  OpenPetriNet(PetriNet net, FinFunction input_map, FinFunction output_map);

  /// Named construction: boundary tables are point -> place.
  static OpenPetriNet make(PetriNet net, const std::map<Atom, Atom>& inputs,
                           const std::map<Atom, Atom>& outputs);

  const PetriNet& net() const { return net_; }
  const CarrierPtr& inputs() const { return input_map_.domain(); }
  const CarrierPtr& outputs() const { return output_map_.domain(); }
  const FinFunction& input_map() const { return input_map_; }
  const FinFunction& output_map() const { return output_map_; }

  friend bool operator==(const OpenPetriNet&, const OpenPetriNet&) = default;

 private:
  PetriNet net_;
  FinFunction input_map_;
  FinFunction output_map_;
};

/// discrete(X) with both boundary maps the identity.
OpenPetriNet identity_open(CarrierPtr boundary);

/// Composite with the pushout cocone that produced it.
struct Composite {
  OpenPetriNet net;
  Pushout gluing;  ///< pushout of first.net <- L(Y) -> second.net
};

/// Glue `first: X ↛ Y` and `second: Y ↛ Z` along Y. Throws EndpointMismatch
/// if the output set of `first` differs from the input set of `second`.
Composite compose_open_with_legs(const OpenPetriNet& first, const OpenPetriNet& second);
inline OpenPetriNet compose_open(const OpenPetriNet& first, const OpenPetriNet& second) {
  return compose_open_with_legs(first, second).net;
}

struct Tensor {
  OpenPetriNet net;
  Pushout gluing;  ///< coproduct of the two nets
  Glued inputs;    ///< X1 + X2
  Glued outputs;   ///< Y1 + Y2
};

/// Disjoint union of nets and of boundaries.
Tensor tensor_open_with_legs(const OpenPetriNet& a, const OpenPetriNet& b);
inline OpenPetriNet tensor_open(const OpenPetriNet& a, const OpenPetriNet& b) {
  return tensor_open_with_legs(a, b).net;
}

/// A square between open nets: boundary maps f: X -> X', g: Y -> Y' and a
/// net morphism with α∘i = i'∘f and α∘o = o'∘g.
class OpenNetMorphism {
 public:
  /// Throws SquareViolation naming the first boundary point where a square fails.
  OpenNetMorphism(OpenPetriNet source, OpenPetriNet target, FinFunction on_inputs,
                  FinFunction on_outputs, PetriMorphism on_net);

  static OpenNetMorphism identity(const OpenPetriNet& net);

  const OpenPetriNet& source() const { return source_; }
  const OpenPetriNet& target() const { return target_; }
  const FinFunction& on_inputs() const { return on_inputs_; }
  const FinFunction& on_outputs() const { return on_outputs_; }
  const PetriMorphism& on_net() const { return on_net_; }

  bool is_invertible() const;
  OpenNetMorphism inverse() const;
  /// Both boundary maps are identities.
  bool is_globular() const;

  friend bool operator==(const OpenNetMorphism& a, const OpenNetMorphism& b);

 private:
  OpenPetriNet source_;
  OpenPetriNet target_;
  FinFunction on_inputs_;
  FinFunction on_outputs_;
  PetriMorphism on_net_;
};

/// Horizontal composite of `left: P ⇒ P'` and `right: Q ⇒ Q'`, a square
/// P⊙Q ⇒ P'⊙Q' whose net part is the mediating map between the pushouts.
/// Throws EndpointMismatch unless left.on_outputs == right.on_inputs.
OpenNetMorphism hcompose(const OpenNetMorphism& left, const OpenNetMorphism& right);

/// Vertical composite `bottom ∘ top`; throws EndpointMismatch unless
/// top.target == bottom.source.
OpenNetMorphism vcompose(const OpenNetMorphism& bottom, const OpenNetMorphism& top);

/// Horizontal tensor of squares.
OpenNetMorphism tensor_squares(const OpenNetMorphism& a, const OpenNetMorphism& b);

/// Which coherence isomorphism to build, with the constituents it is built from.
namespace coherence {
/// (P⊙Q)⊙R ⇒ P⊙(Q⊙R).
struct Associator {
  OpenPetriNet p, q, r;
};
/// U_X⊙P ⇒ P.
struct LeftUnitor {
  OpenPetriNet p;
};
/// P⊙U_Y ⇒ P.
struct RightUnitor {
  OpenPetriNet p;
};
/// P1⊗P2 ⇒ P2⊗P1.
struct Symmetry {
  OpenPetriNet first, second;
};
}  // namespace coherence

using CoherenceCase =
    std::variant<coherence::Associator, coherence::LeftUnitor, coherence::RightUnitor,
                 coherence::Symmetry>;

/// Rebuilds the two sides of `witness` and returns the canonical invertible
/// square lhs ⇒ rhs, built from pushout universal properties. Throws
/// EndpointMismatch if `lhs`/`rhs` are not what the witness constructs.
OpenNetMorphism canonical_iso(const OpenPetriNet& lhs, const OpenPetriNet& rhs,
                              const CoherenceCase& witness);

/// The two sides a coherence case relates.
std::pair<OpenPetriNet, OpenPetriNet> coherence_sides(const CoherenceCase& witness);

struct IsoSearch {
  enum class Status { found, absent, aborted };
  Status status = Status::absent;
  std::optional<OpenNetMorphism> iso;
};

/// Backtracking search for an invertible square a ⇒ b with bijective
/// boundary maps. Gives up with `aborted` after `node_budget` search nodes.
IsoSearch iso_open(const OpenPetriNet& a, const OpenPetriNet& b, std::size_t node_budget = 200000);

}  // namespace opn
