#pragma once

// Seeded generators of small random nets, open nets and squares, used by the
// law suites, the one-way experiment and the CLI.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "opn/open.hpp"

namespace opn {

/// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct NetShape {
  std::size_t min_places = 1;
  std::size_t max_places = 4;
  std::size_t max_transitions = 3;
  Count max_coefficient = 2;
  std::size_t max_boundary = 3;
  /// Percentage of (transition, place) entries that are nonzero.
  unsigned arc_density = 35;
  bool allow_empty_source = true;  ///< transitions that fire from nothing
};

/// Boundary set {prefix0, prefix1, ...} with 0..max_boundary points.
CarrierPtr random_boundary(Rng& rng, const NetShape& shape, const std::string& prefix);

PetriNet random_net(Rng& rng, const NetShape& shape);

/// Random net with random boundary maps from the given boundary sets.
OpenPetriNet random_open(Rng& rng, const NetShape& shape, CarrierPtr inputs, CarrierPtr outputs);

/// Composable chain X0 ↛ X1 ↛ ... ↛ Xn of `length` open nets.
std::vector<OpenPetriNet> random_chain(Rng& rng, const NetShape& shape, std::size_t length);

/// Random one-way open net: input-image places are never targets and
/// output-image places are never sources.
OpenPetriNet random_one_way(Rng& rng, const NetShape& shape, CarrierPtr inputs, CarrierPtr outputs);

/// A random valid square out of `source`: places may be merged, boundary
/// points with equal images may be merged, and fresh places, transitions and
/// input points may be added to the target.
OpenNetMorphism random_square(Rng& rng, const NetShape& shape, const OpenPetriNet& source);

/// Squares α: P ⇒ P' and β: Q ⇒ Q' with α.on_outputs == β.on_inputs, so they
/// compose horizontally. P's outputs must equal Q's inputs.
std::pair<OpenNetMorphism, OpenNetMorphism> random_square_pair(Rng& rng, const NetShape& shape,
                                                               const OpenPetriNet& p,
                                                               const OpenPetriNet& q);

}  // namespace opn
