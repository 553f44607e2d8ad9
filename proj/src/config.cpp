#include "phl/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace phl {

namespace {

std::size_t env_max_bound() {
  const char* raw = std::getenv("PHL_MAX_BOUND");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    const unsigned long long v = std::stoull(raw);
    return static_cast<std::size_t>(v);
  } catch (...) {
    return 0;
  }
}

}  // namespace

std::size_t Config::cap_bound(std::size_t requested) {
  const std::size_t cap = env_max_bound();
  return cap == 0 ? requested : std::min(requested, cap);
}

Config Config::from_environment() {
  Config c;
  const std::size_t cap = env_max_bound();
  if (cap != 0) {
    c.scan_bound = std::min(c.scan_bound, cap);
    c.distributor_bound = std::min(c.distributor_bound, cap);
    c.enumeration_ceiling = std::min(c.enumeration_ceiling, cap);
  }
  return c;
}

Config& config() {
  static Config instance = Config::from_environment();
  return instance;
}

}  // namespace phl
