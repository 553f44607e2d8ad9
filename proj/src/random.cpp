#include "phl/random.hpp"

#include "phl/error.hpp"

namespace phl {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<ElementSet> convex_subsets(const Poset& p) {
  std::vector<ElementSet> out;
  for (ElementSet s = 1; s <= p.carrier(); ++s) {
    if (is_convex(p, s)) out.push_back(s);
  }
  return out;
}

}  // namespace

Poset random_poset(Rng& rng, std::size_t n, double density, const std::string& prefix) {
  if (n > 16) fail(ErrorKind::InvalidParameter, "random posets are limited to 16 elements");
  std::bernoulli_distribution coin(density);
  std::vector<std::string> labels;
  std::vector<ElementSet> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    rows[i] = singleton(i);
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) rows[i] |= rows[j];
    }
  }
  return Poset::from_relation(std::move(labels), std::move(rows));
}

Poset random_connected_poset(Rng& rng, std::size_t n, double density, const std::string& prefix) {
  if (n == 0) fail(ErrorKind::InvalidParameter, "connected posets are nonempty");
  for (;;) {
    Poset p = random_poset(rng, n, density, prefix);
    if (is_connected(p)) return p;
  }
}

HomMap random_hom(Rng& rng, const Poset& p, const Poset& t) {
  auto all = enumerate(HomKind::hom, p, t);
  return all[uniform(rng, 0, all.size() - 1)];
}

ConstructionSpec random_spec(Rng& rng, std::size_t max_size) {
  if (max_size == 0 || max_size > 8) fail(ErrorKind::InvalidParameter, "max_size must lie in 1..8");
  for (;;) {
    ConstructionSpec spec;
    spec.p = random_poset(rng, uniform(rng, 1, max_size), 0.45, "p");
    const auto pa = convex_subsets(spec.p);
    spec.a = pa[uniform(rng, 0, pa.size() - 1)];
    const std::size_t na = static_cast<std::size_t>(cardinality(spec.a));
    if (na > max_size) continue;
    spec.q = random_poset(rng, uniform(rng, na, max_size), 0.45, "q");
    std::vector<ElementSet> candidates;
    for (ElementSet b : convex_subsets(spec.q)) {
      if (static_cast<std::size_t>(cardinality(b)) == na && is_isomorphic(induced(spec.q, b), induced(spec.p, spec.a))) {
        candidates.push_back(b);
      }
    }
    if (candidates.empty()) continue;
    spec.b = candidates[uniform(rng, 0, candidates.size() - 1)];
    const auto isos = list_isomorphisms(spec.p, spec.a, spec.q, spec.b);
    spec.beta = isos[uniform(rng, 0, isos.size() - 1)];
    return spec;
  }
}

}  // namespace phl
