#pragma once

// The reachability semantics: firing, bounded marking-graph exploration, the
// reachability relation of an open net, bounded relations, and the checks of
// how the semantics interacts with composition and tensor.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opn/open.hpp"
#include "opn/petri.hpp"

namespace opn {

/// Limits on a marking-graph exploration. All must be positive.
struct ExplorationCaps {
  Count max_tokens = 8;
  std::size_t max_depth = 64;
  std::size_t max_states = 100000;

  /// Throws Error if a cap is zero.
  void validate() const;
};

/// Transitions with s(τ) ≤ m, in id order.
std::vector<std::size_t> enabled(const PetriNet& net, const Multiset& m);

/// (m - s(τ)) + t(τ); throws Error naming τ if it is not enabled.
Multiset fire(const PetriNet& net, std::size_t transition, const Multiset& m);
Multiset fire(const PetriNet& net, std::string_view transition, const Multiset& m);

struct ReachableSet {
  std::vector<Multiset> markings;  ///< breadth-first discovery order, start first
  bool exact = false;              ///< no marking was pruned by a cap
};

/// Breadth-first closure of {m} under firing.
ReachableSet reachable_set(const PetriNet& net, const Multiset& m, const ExplorationCaps& caps);

struct ReachAnswer {
  Verdict verdict = Verdict::unknown;
  /// Shortest firing sequence (ties broken by transition id) when `yes`.
  std::vector<std::size_t> witness;
};

ReachAnswer is_reachable(const PetriNet& net, const Multiset& m, const Multiset& n,
                         const ExplorationCaps& caps);

/// Names of a witness's transitions.
std::vector<std::string> transition_names(const PetriNet& net, const std::vector<std::size_t>& ts);

/// A truncation of a relation between N[X] and N[Y]: every pair has at most
/// `bound` tokens per side. Rows (left markings with at most `bound` tokens)
/// carry a completeness flag; a complete row lists every related right
/// marking within the bound.
class BoundedRelation {
 public:
  using Pair = std::pair<Multiset, Multiset>;

  BoundedRelation(CarrierPtr left, CarrierPtr right, Count bound);

  /// Adds a pair; throws Error if it violates the bound or the carriers.
  void insert(const Multiset& x, const Multiset& y);
  void set_row_complete(const Multiset& x, bool complete);

  const CarrierPtr& left() const { return left_; }
  const CarrierPtr& right() const { return right_; }
  Count bound() const { return bound_; }
  const std::set<Pair>& pairs() const { return pairs_; }
  bool contains(const Multiset& x, const Multiset& y) const;
  /// False for rows that were never explored.
  bool row_complete(const Multiset& x) const;
  const std::map<Multiset, bool>& rows() const { return rows_; }
  std::vector<Multiset> row(const Multiset& x) const;

  /// The identity relation on markings of `carrier` up to `bound`; all rows complete.
  static BoundedRelation identity(const CarrierPtr& carrier, Count bound);

  friend bool operator==(const BoundedRelation& a, const BoundedRelation& b);

 private:
  CarrierPtr left_;
  CarrierPtr right_;
  Count bound_;
  std::set<Pair> pairs_;
  std::map<Multiset, bool> rows_;
};

/// ■P truncated at caps.max_tokens: (x, y) with o(y) reachable from i(x).
BoundedRelation reach_relation(const OpenPetriNet& net, const ExplorationCaps& caps);

/// `second ∘ first`: (x, z) with (x, y) ∈ first and (y, z) ∈ second. A row is
/// complete when the first row and every second row it passes through are.
/// Throws CarrierMismatch unless first.right == second.left.
BoundedRelation rel_compose(const BoundedRelation& second, const BoundedRelation& first);

/// R1 × R2 over the disjoint-union carriers (named as in tensor_open), keeping
/// pairs with at most min(bound1, bound2) tokens per side.
BoundedRelation rel_product(const BoundedRelation& r1, const BoundedRelation& r2);

struct InclusionReport {
  bool included = true;
  std::optional<BoundedRelation::Pair> counterexample;
  std::size_t pairs_checked = 0;
  /// Pairs whose image row in the target relation is incomplete.
  std::size_t pairs_skipped = 0;
};

/// Whether (N[f] × N[g]) R ⊆ S, checked on pairs whose image row of S is
/// complete.
InclusionReport rel_map_included(const FinFunction& f, const FinFunction& g, const BoundedRelation& r,
                                 const BoundedRelation& s);

struct LaxCompositionReport {
  BoundedRelation composite_of_relations;  ///< ■Q ∘ ■P
  BoundedRelation relation_of_composite;   ///< ■(Q⊙P)
  std::vector<BoundedRelation::Pair> violations;  ///< in the first, missing from the second
  /// Pairs of ■(Q⊙P) missing from ■Q∘■P on rows complete in both.
  std::vector<BoundedRelation::Pair> strict_witnesses;
  std::size_t rows_checked = 0;
  bool holds() const { return violations.empty(); }
  bool strict() const { return !strict_witnesses.empty(); }
};

/// ■Q ∘ ■P ⊆ ■(Q⊙P) on complete rows of ■(Q⊙P).
LaxCompositionReport check_lax_composition(const OpenPetriNet& p, const OpenPetriNet& q,
                                           const ExplorationCaps& caps);

struct EqualityReport {
  bool equal = true;
  std::vector<BoundedRelation::Pair> only_left;
  std::vector<BoundedRelation::Pair> only_right;
  std::size_t rows_checked = 0;
};

/// Compares two relations on the rows complete in both.
EqualityReport compare_on_complete_rows(const BoundedRelation& a, const BoundedRelation& b);

/// ■(U_X) against the identity relation, exactly.
EqualityReport check_identity_comparison(const CarrierPtr& boundary, const ExplorationCaps& caps);

/// ■(P⊗P') against ■P × ■P' on complete rows.
EqualityReport check_monoidality(const OpenPetriNet& p, const OpenPetriNet& p2,
                                 const ExplorationCaps& caps);

/// No input-image place is a target of any transition and no output-image
/// place is a source of any transition.
bool is_one_way(const OpenPetriNet& net);

struct OneWayInstance {
  std::size_t index = 0;
  OpenPetriNet first;
  OpenPetriNet second;
  bool lax_inclusion_holds = true;
  bool equal = false;  ///< ■Q∘■P = ■(Q⊙P) on rows complete in both
  std::size_t rows_compared = 0;
  std::vector<BoundedRelation::Pair> missing;  ///< in ■(Q⊙P) only
};

struct OneWayReport {
  std::uint64_t seed = 0;
  ExplorationCaps caps;
  std::vector<OneWayInstance> instances;
  /// Generated candidate pairs that failed the one-way gate.
  std::size_t rejected = 0;
  std::size_t equalities() const;
  std::size_t lax_violations() const;
};

/// Generates `count` composable pairs of one-way open nets from `seed` and
/// compares both sides of the composition law. Reports, never asserts.
OneWayReport one_way_experiment(std::uint64_t seed, std::size_t count, const ExplorationCaps& caps);

}  // namespace opn
