#pragma once

#include <stdexcept>
#include <string>

namespace rfw {

// Root of everything the library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 1-based index or length argument outside the valid range.
struct index_error : error {
  using error::error;
};

// A word would exceed the 64-symbol packing limit.
struct capacity_error : error {
  using error::error;
};

// Predicted |A_n| exceeds the caller's enumeration budget.
struct budget_error : error {
  using error::error;
};

// Projected number of candidate words exceeds the item cap.
struct memory_budget_error : error {
  using error::error;
};

struct numeric_error : error {
  using error::error;
};

// An exact division left a remainder. Always an implementation bug.
struct inexact_division_error : numeric_error {
  using numeric_error::numeric_error;
};

struct argument_error : error {
  using error::error;
};

// Malformed word text or RFW1 stream.
struct format_error : error {
  using error::error;
};

}  // namespace rfw
