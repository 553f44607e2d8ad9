#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phl/construction.hpp"
#include "phl/hom.hpp"
#include "phl/poset.hpp"

namespace phl {

using Rng = std::mt19937_64;

/// Random order on n elements: each pair i < j is related with probability
/// `density`, then closed transitively. Labels are prefix + index.
Poset random_poset(Rng& rng, std::size_t n, double density = 0.4, const std::string& prefix = "x");
/// Rejection-samples random_poset until connected.
Poset random_connected_poset(Rng& rng, std::size_t n, double density = 0.5, const std::string& prefix = "x");
/// Uniformly chosen homomorphism P -> T (EmptyPoset if either is empty).
HomMap random_hom(Rng& rng, const Poset& p, const Poset& t);
/// Valid construction input with 1 <= |P|, |Q| <= max_size and nonempty A.
ConstructionSpec random_spec(Rng& rng, std::size_t max_size = 4);

}  // namespace phl
