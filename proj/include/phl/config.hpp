#pragma once

#include <cstddef>
#include <cstdint>

namespace phl {

/// Default bounds used by the bounded checkers. Every bound is positive.
struct Config {
  std::size_t scan_bound = 5;            // connected posets scanned by check-gle / prop1
  std::size_t distributor_bound = 6;     // disjointness check of distributors
  std::size_t enumeration_ceiling = 7;   // largest n accepted by enumerate_connected
  std::uint64_t oracle_ceiling = 10'000'000;
  std::size_t ev_ceiling = std::size_t{1} << 16;

  /// Defaults, with every bound capped by $PHL_MAX_BOUND when it is set.
  static Config from_environment();

  /// Caps a requested bound by $PHL_MAX_BOUND (if set).
  static std::size_t cap_bound(std::size_t requested);
};

/// Process-wide configuration; starts as Config::from_environment().
Config& config();

}  // namespace phl
