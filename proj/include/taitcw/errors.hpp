#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taitcw {

/// Base of every domain error. `kind()` is the stable name printed by the CLI
/// as `<kind>: <message>`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TAITCW_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

TAITCW_DEFINE_ERROR(MalformedGraph);
TAITCW_DEFINE_ERROR(UnknownName);
TAITCW_DEFINE_ERROR(NotPlanar);
TAITCW_DEFINE_ERROR(Disconnected);
TAITCW_DEFINE_ERROR(SliceSearchExhausted);
TAITCW_DEFINE_ERROR(MalformedWord);
TAITCW_DEFINE_ERROR(InvalidPosition);
TAITCW_DEFINE_ERROR(WidthMismatch);
TAITCW_DEFINE_ERROR(NotClosed);
TAITCW_DEFINE_ERROR(InconsistentHolonomy);
TAITCW_DEFINE_ERROR(UnknownGenerator);
TAITCW_DEFINE_ERROR(CapacityExceeded);

#undef TAITCW_DEFINE_ERROR

/// Syntax error in one of the text formats; `line()` is 1-based, 0 when the
/// input is not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace taitcw
