#pragma once

// Text format for documents of named open nets and markings, and dot export.
//
//   opn 1
//
//   # comments run to end of line
//   net P {
//     places A B C D
//     transition α [A, B] -> [C, D]
//     inputs 1=A 2=B 3=B
//     outputs 4=C 5=D
//   }
//
//   marking start [A:2, B]
//
// Identifiers are runs of letters, digits, non-ASCII bytes and any of
// _ . ' @ $ ! ? ~ ^ / |. Multisets are bracketed lists of `atom` or
// `atom:count`; repeated atoms add up.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opn/open.hpp"

namespace opn {

inline constexpr int kFormatVersion = 1;

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NetDocument {
  int version = kFormatVersion;
  std::map<std::string, OpenPetriNet> nets;
  std::map<std::string, AtomCounts> markings;

  const OpenPetriNet& net(const std::string& name) const;

  friend bool operator==(const NetDocument&, const NetDocument&) = default;
};

/// Throws ParseError (with 1-based line/column) on syntax errors, dangling
/// references and duplicate identifiers.
NetDocument parse(std::string_view text);

/// Canonical text: nets and markings sorted by name, places and transitions
/// in id order, boundary points in id order, zero counts omitted.
std::string serialize(const NetDocument& doc);

/// `A:2,B` (commas optional whitespace, `:1` optional); empty string or "0"
/// is the zero marking. Throws ParseError.
AtomCounts parse_marking(std::string_view text);

/// Graphviz dot: places as ellipses, transitions as boxes, one arc per
/// nonzero coefficient labelled with its weight, boundary points as point
/// nodes joined to their places by dashed edges.
std::string export_dot(const OpenPetriNet& net, const std::string& name = "net");

}  // namespace opn
