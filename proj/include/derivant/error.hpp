#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derivant {

/// Base class for all errors raised by the library.
struct group_error : std::runtime_error {
  explicit group_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (cycle notation, group spec files, data files).
struct parse_error : group_error {
  parse_error(const std::string &msg, std::size_t line, std::size_t col)
    : group_error(msg + " (line " + std::to_string(line) + ", column " +
                  std::to_string(col) + ")"),
      line(line), col(col) {}

  std::size_t line;
  std::size_t col;
};

/// A configured budget was exceeded.  Operations never guess: they fail
/// loudly with the violated budget named.
struct budget_error : group_error {
  budget_error(const std::string &budget, const std::string &detail)
    : group_error("budget '" + budget + "' exceeded: " + detail),
      budget(budget) {}

  std::string budget;
};

/// Raised when a claimed subgroup relation does not hold.
struct not_subgroup_error : group_error {
  explicit not_subgroup_error(const std::string &msg) : group_error(msg) {}
};

} // namespace derivant
