#pragma once

#include <stdexcept>
#include <string>

namespace wtd {

/// Malformed textual input. `where` is a 1-based line number (edge lists,
/// recipes) or a byte offset (graph6), whichever the format uses.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, std::size_t where)
      : std::runtime_error(std::move(what) + " (at " + std::to_string(where) + ")"),
        where_(where) {}

  std::size_t where() const noexcept { return where_; }

 private:
  std::size_t where_;
};

/// The graph has an isolated vertex, so no total dominating set exists.
class UndefinedDomination : public std::invalid_argument {
 public:
  UndefinedDomination() : std::invalid_argument("total domination undefined: graph has an isolated vertex") {}
};

/// The input is larger than a configured algorithmic bound.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wtd
