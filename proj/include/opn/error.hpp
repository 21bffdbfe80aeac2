#pragma once

#include <stdexcept>
#include <string>

namespace opn {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two multisets (or a multiset and a function) live over different carriers.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A net, function or boundary map references something that does not exist.
class InvalidNet : public Error {
 public:
  using Error::Error;
};

/// A pair of maps fails to commute with the structure it should preserve.
class SquareViolation : public Error {
 public:
  using Error::Error;
};

/// Endpoints of two things being composed do not line up.
class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

/// Three-valued answer for bounded searches. `unknown` means a cap truncated
/// the search before it could decide.
enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace opn
