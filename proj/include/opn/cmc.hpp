#pragma once

// The operational semantics: morphisms of the free commutative monoidal
// category on a Petri net, represented as sequences of single-transition
// slices τ + 1_c.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opn/petri.hpp"
#include "opn/reach.hpp"

namespace opn {

/// One slice τ + 1_context: dom = s(τ) + context, cod = t(τ) + context.
struct Event {
  std::size_t transition;
  Multiset context;

  friend bool operator==(const Event&, const Event&) = default;
};

class Process {
 public:
  /// Checks that consecutive slices compose and that the first starts at `dom`.
  Process(PetriNet net, Multiset dom, std::vector<Event> events);

  /// The identity on `marking`.
  static Process identity(const PetriNet& net, const Multiset& marking);
  /// Fires `transitions` in order from `dom`; throws Error if one is disabled.
  static Process firing(const PetriNet& net, const Multiset& dom,
                        const std::vector<std::size_t>& transitions);

  const PetriNet& net() const { return net_; }
  const Multiset& dom() const { return dom_; }
  const Multiset& cod() const { return cod_; }
  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  std::vector<std::size_t> transition_sequence() const;

  /// `m --τ1,τ2--> n`.
  std::string to_string() const;

  friend bool operator==(const Process& a, const Process& b);

 private:
  PetriNet net_;
  Multiset dom_;
  Multiset cod_;
  std::vector<Event> events_;
};

/// The objects of FP: multisets over the places.
struct ObjectsDescription {
  CarrierPtr generators;
  /// Number of objects a·S with every coefficient at most `bound`.
  std::size_t count_with_coefficients_at_most(Count bound) const;
};
ObjectsDescription objects_of(const PetriNet& net);

/// `second ∘ first`; throws EndpointMismatch unless cod(first) == dom(second).
Process compose_process(const Process& second, const Process& first);

/// p1 + p2, serialized as p1's slices widened by dom(p2) followed by p2's
/// slices widened by cod(p1). Throws EndpointMismatch on different nets.
Process tensor_process(const Process& p1, const Process& p2);

/// Adjacent slices k, k+1 may be swapped when s(τ_{k+1}) ≤ context_k.
bool can_swap(const Process& p, std::size_t k);
Process swap_events(const Process& p, std::size_t k);

/// Whether `q` is reachable from `p` by swaps of adjacent independent slices.
/// `unknown` if more than `state_cap` orderings had to be visited.
Verdict process_equiv(const Process& p, const Process& q, std::size_t state_cap = 100000);

/// Least representative (by transition-id sequence) of the swap class of `p`,
/// or nullopt if the class has more than `state_cap` members.
std::optional<Process> canonical_form(const Process& p, std::size_t state_cap = 100000);

/// All processes m -> n with at most `max_events` slices, one per swap class,
/// sorted by event count and then by transition ids. Throws Error if the
/// number of firing sequences explored exceeds `sequence_cap`.
std::vector<Process> enumerate_hom(const PetriNet& net, const Multiset& m, const Multiset& n,
                                   std::size_t max_events, std::size_t sequence_cap = 1000000);

struct HomAnswer {
  Verdict verdict = Verdict::unknown;
  std::optional<Process> witness;
};

/// Is there a morphism m -> n in FP? Searches depth-first over slices,
/// pruning markings above caps.max_tokens, deeper than caps.max_depth or past
/// caps.max_states visited markings. `no` only if nothing was pruned.
HomAnswer hom_nonempty(const PetriNet& net, const Multiset& m, const Multiset& n,
                       const ExplorationCaps& caps);

/// F(α): relabels slices along a Petri net morphism.
Process apply_functor(const PetriMorphism& morphism, const Process& p);

}  // namespace opn
