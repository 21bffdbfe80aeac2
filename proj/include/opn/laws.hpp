#pragma once

// Executable law suites for the double category of open nets and for the
// reachability semantics. Each check returns a LawResult rather than
// throwing, so suites can tally and report.

#include <cstdint>
#include <string>
#include <vector>

#include "opn/generate.hpp"
#include "opn/open.hpp"
#include "opn/reach.hpp"

namespace opn {

struct LawResult {
  std::string law;
  bool passed = true;
  std::string detail;  ///< first failure, empty on success
};

/// Left and right unitors exist, are globular and invert to identities.
LawResult check_unitors(const OpenPetriNet& p);
/// The associator for (PQ)R ⇒ P(QR) is globular and invertible.
LawResult check_associator(const OpenPetriNet& p, const OpenPetriNet& q, const OpenPetriNet& r);
LawResult check_pentagon(const OpenPetriNet& p, const OpenPetriNet& q, const OpenPetriNet& r,
                         const OpenPetriNet& s);
/// (PU)Q ⇒ P(UQ) ⇒ PQ equals ρ_P ⊙ 1_Q, for P: X ↛ Y, Q: Y ↛ Z and U = U_Y.
LawResult check_triangle(const OpenPetriNet& p, const OpenPetriNet& q);
/// (β'∘β) ⊙ (α'∘α) against (β'⊙α') ∘ (β⊙α) on randomly generated squares.
LawResult check_interchange(Rng& rng, const NetShape& shape, const OpenPetriNet& p, const OpenPetriNet& q);
/// Unit laws of horizontal composition of squares with identity squares.
LawResult check_square_units(Rng& rng, const NetShape& shape, const OpenPetriNet& p);
/// The braiding P1⊗P2 ⇒ P2⊗P1 followed by its counterpart is the identity.
LawResult check_symmetry(const OpenPetriNet& p1, const OpenPetriNet& p2);

LawResult check_lax_law(const OpenPetriNet& p, const OpenPetriNet& q, const ExplorationCaps& caps);
LawResult check_monoidal_law(const OpenPetriNet& p, const OpenPetriNet& p2, const ExplorationCaps& caps);
LawResult check_identity_law(const CarrierPtr& boundary, const ExplorationCaps& caps);
/// (N[f] × N[g]) ■P ⊆ ■P' for a square P ⇒ P'.
LawResult check_square_semantics(const OpenNetMorphism& square, const ExplorationCaps& caps);

struct LawTally {
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct LawSuiteReport {
  std::uint64_t seed = 0;
  std::vector<LawTally> tallies;
  bool passed() const;
  void record(const LawResult& r);
};

/// Runs every law on `instances` random instances drawn from `seed`.
LawSuiteReport run_law_suite(std::uint64_t seed, std::size_t instances, const ExplorationCaps& caps);

/// Runs the laws that apply to the given nets: unitors for each, symmetry,
/// monoidality and identity comparison for each pair, associator, lax law
/// and triangle for each composable pair or triple.
LawSuiteReport run_law_suite_on(const std::vector<OpenPetriNet>& nets, const ExplorationCaps& caps);

}  // namespace opn
