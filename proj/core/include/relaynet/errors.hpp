#pragma once

#include <stdexcept>
#include <string>

namespace relaynet {

// Structural problem: mismatched vector/matrix dimensions, bad config values.
class dimension_error : public std::invalid_argument {
 public:
  explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// Runtime numeric failure: non-finite intermediates, diverging training,
// degenerate (all-zero) batches.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// File parsing / filesystem failure.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relaynet
