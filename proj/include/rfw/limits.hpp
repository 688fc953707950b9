#pragma once

#include <cstdint>

#include "rfw/count.hpp"

namespace rfw {

// Resource guards shared by the enumeration and factor engines.
struct Limits {
  // Largest |A_n| that may be materialized.
  BigCount budget = 100'000'000;
  // Largest number of candidate words the windowed F_n construction may
  // generate before deduplication.
  std::uint64_t item_cap = std::uint64_t{1} << 26;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

}  // namespace rfw
