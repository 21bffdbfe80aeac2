#pragma once

// Finite carriers, functions between them, and the free commutative monoid
// N[X] over a carrier.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opn/error.hpp"

namespace opn {

using Atom = std::string;
using Count = std::uint64_t;

/// Sorted, duplicate-free finite set of atom names. Indices into a carrier
/// follow lexicographic byte order of the names.
class Carrier {
 public:
  Carrier() = default;
  /// Sorts the atoms; throws InvalidNet on duplicates.
  explicit Carrier(std::vector<Atom> atoms);
  Carrier(std::initializer_list<Atom> atoms) : Carrier(std::vector<Atom>(atoms)) {}

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  std::optional<std::size_t> find(std::string_view atom) const;
  bool contains(std::string_view atom) const { return find(atom).has_value(); }
  /// Index of `atom`; throws InvalidNet naming `what` if absent.
  std::size_t index(std::string_view atom, std::string_view what = "atom") const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<Atom> atoms_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<Atom> atoms);
CarrierPtr empty_carrier();

/// Structural equality, short-circuiting on pointer identity.
bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

/// A total function between two finite carriers.
class FinFunction {
 public:
  FinFunction();
  /// Throws InvalidNet if an image index is out of range.
  FinFunction(CarrierPtr domain, CarrierPtr codomain, std::vector<std::size_t> image);
  /// Builds from an atom -> atom table; the table must cover the domain exactly.
  static FinFunction from_table(CarrierPtr domain, CarrierPtr codomain,
                                const std::map<Atom, Atom>& table);
  static FinFunction identity(CarrierPtr carrier);
  /// The unique function out of the empty set.
  static FinFunction from_empty(CarrierPtr codomain);

  const CarrierPtr& domain() const { return domain_; }
  const CarrierPtr& codomain() const { return codomain_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const Atom& apply(std::string_view atom) const;
  const std::vector<std::size_t>& image() const { return image_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// Throws Error unless bijective.
  FinFunction inverse() const;

  std::map<Atom, Atom> table() const;

  friend bool operator==(const FinFunction& a, const FinFunction& b);

 private:
  CarrierPtr domain_;
  CarrierPtr codomain_;
  std::vector<std::size_t> image_;
};

/// `after ∘ before`. Throws EndpointMismatch if the middle carriers differ.
FinFunction compose(const FinFunction& after, const FinFunction& before);

/// Atom -> count table, the unresolved form of a multiset (zero counts are
/// dropped on construction of a Multiset).
using AtomCounts = std::map<Atom, Count>;

/// Element of N[X] for an explicit finite carrier X.
class Multiset {
 public:
  Multiset();
  /// The zero multiset over `carrier`.
  explicit Multiset(CarrierPtr carrier);
  Multiset(CarrierPtr carrier, std::vector<Count> counts);
  /// Throws InvalidNet if a key is not in the carrier.
  Multiset(CarrierPtr carrier, const AtomCounts& counts);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<Count>& counts() const { return counts_; }
  Count operator[](std::size_t i) const { return counts_[i]; }
  Count count(std::string_view atom) const;
  Count total() const;
  bool is_zero() const;
  /// Nonzero entries only.
  AtomCounts to_counts() const;

  /// `A:2,B` style, sorted, zero counts omitted; "0" for the zero multiset.
  std::string to_string() const;

  friend bool operator==(const Multiset& a, const Multiset& b);
  /// Arbitrary total order (carrier first, then counts); for sorted containers.
  friend bool operator<(const Multiset& a, const Multiset& b);

 private:
  CarrierPtr carrier_;
  std::vector<Count> counts_;
};

Multiset empty(CarrierPtr carrier);
Multiset add(const Multiset& a, const Multiset& b);
inline Multiset operator+(const Multiset& a, const Multiset& b) { return add(a, b); }
/// a - b, or nullopt when b is not below a.
std::optional<Multiset> subtract(const Multiset& a, const Multiset& b);
bool leq(const Multiset& a, const Multiset& b);
/// N[f](a): pushes counts forward along f.
Multiset map(const FinFunction& f, const Multiset& a);
/// `k * a`.
Multiset scale(Count k, const Multiset& a);

/// Every multiset over `carrier` with total count at most `max_total`, in a
/// fixed order (by total, then lexicographically descending on counts).
std::vector<Multiset> enumerate_bounded(const CarrierPtr& carrier, Count max_total);

struct MultisetHash {
  std::size_t operator()(const Multiset& m) const;
};

struct CountsHash {
  std::size_t operator()(const std::vector<Count>& v) const;
};

}  // namespace opn
