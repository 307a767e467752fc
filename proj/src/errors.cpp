#include "taitcw/errors.hpp"

#include <utility>

namespace taitcw {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(message), kind_(std::move(kind)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("ParseError",
            line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace taitcw
