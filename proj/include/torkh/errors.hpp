#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torkh {

/// A parameter lies outside an operation's domain.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally bad input (malformed text, non-cycle, wrong table kind).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded its configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

/// An int64 fast path overflowed; callers retry with arbitrary precision.
class CoefficientOverflow : public std::overflow_error {
 public:
  CoefficientOverflow() : std::overflow_error("int64 coefficient overflow") {}
};

}  // namespace torkh
