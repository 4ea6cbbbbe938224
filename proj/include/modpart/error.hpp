#pragma once

#include <stdexcept>
#include <string>

namespace modpart {

/// Raised when an exact identity that must hold by construction fails,
/// e.g. a division that has to be exact leaves a remainder.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised by enumeration oracles when the requested work exceeds the budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a request is above a configured ceiling (e.g. discovery k).
class CeilingExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

} // namespace modpart
