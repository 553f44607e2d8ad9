#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phl/error.hpp"
#include "phl/poset.hpp"
#include "phl/random.hpp"

using namespace phl;
using Pairs = std::vector<std::pair<std::string, std::string>>;

namespace {

bool is_order(const Poset& p) { return oracle::is_partial_order(oracle::relation_of(p)); }

ElementSet set_of(const Poset& p, std::initializer_list<const char*> labels) {
  ElementSet s = 0;
  for (const char* l : labels) s |= singleton(p.index(l));
  return s;
}

}  // namespace

TEST_CASE("from_pairs takes the hull of covers") {
  const Poset c3 = from_pairs({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}}, PairMode::covers);
  CHECK(c3.relation_size() == 6);
  CHECK(c3.leq(c3.index("a"), c3.index("c")));
  CHECK(is_isomorphic(c3, catalog("C3")));

  const Poset n = from_pairs({"a", "b", "c", "d"}, Pairs{{"a", "c"}, {"b", "c"}, {"b", "d"}}, PairMode::covers);
  CHECK(is_isomorphic(n, catalog("N")));
}

TEST_CASE("from_pairs rejects bad input") {
  CHECK_THROWS_AS(from_pairs({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}}, PairMode::covers), Error);
  try {
    from_pairs({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}}, PairMode::covers);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartialOrder);
  }
  try {
    from_pairs({"a", "a"}, Pairs{}, PairMode::covers);
    FAIL("expected DuplicateLabel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateLabel);
  }
  try {
    from_pairs({"a"}, Pairs{{"a", "z"}}, PairMode::covers);
    FAIL("expected UnknownLabel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownLabel);
  }
  // full mode demands transitivity
  CHECK_THROWS_AS(from_pairs({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}}, PairMode::full), Error);
}

TEST_CASE("covers hull is idempotent") {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    const Poset p = random_poset(rng, 1 + rng() % 7);
    Pairs full;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p.lt(i, j)) full.emplace_back(p.label(i), p.label(j));
    CHECK(from_pairs(p.labels(), full, PairMode::covers) == p);
    CHECK(from_pairs(p.labels(), full, PairMode::full) == p);
  }
}

TEST_CASE("catalog posets") {
  CHECK(catalog("C3").relation_size() == 6);
  CHECK(catalog("N2").size() == 4);
  CHECK(catalog("N2").relation_size() == 8);
  const Poset v3 = catalog("V3");
  CHECK(v3.minimal() == singleton(v3.index("0")));
  CHECK(cardinality(v3.maximal()) == 2);
  const Poset l3 = catalog("Lambda3");
  CHECK(cardinality(l3.minimal()) == 2);
  CHECK(cardinality(l3.maximal()) == 1);
  CHECK(catalog("A0").empty());
  CHECK(catalog(CatalogName::A, 3).relation_size() == 3);
  const Poset w = catalog("W");
  CHECK(w.size() == 5);
  CHECK(cardinality(w.maximal()) == 3);
  CHECK(cardinality(w.minimal()) == 2);
  CHECK_THROWS_AS(catalog("X9"), Error);
  for (const char* name : {"A1", "C2", "C4", "V4", "Lambda4", "N", "W", "N2", "A1+C3", "C2+C2"}) {
    CAPTURE(name);
    CHECK(is_order(catalog(name)));
  }
}

TEST_CASE("direct and ordinal sums") {
  const Poset a1c3 = catalog("A1+C3");
  CHECK(a1c3.size() == 4);
  CHECK(a1c3.relation_size() == 7);
  CHECK(direct_sum(catalog("C2"), catalog("C2")).relation_size() == 6);
  CHECK(is_isomorphic(direct_sum(catalog("N"), catalog("A0")), catalog("N")));

  CHECK(is_isomorphic(ordinal_sum(catalog("A2"), catalog("A2")), catalog("N2")));
  CHECK(is_isomorphic(ordinal_sum(catalog("A1"), catalog("A2")), catalog("V3")));
  CHECK(is_isomorphic(ordinal_sum(catalog("A2"), catalog("A1")), catalog("Lambda3")));
  CHECK(is_isomorphic(ordinal_sum(catalog("C1"), catalog("C1")), catalog("C2")));

  Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    const Poset p = random_poset(rng, rng() % 5, 0.4, "p");
    const Poset q = random_poset(rng, rng() % 5, 0.4, "q");
    const Poset s = direct_sum(p, q);
    const Poset o = ordinal_sum(p, q);
    CHECK(is_order(s));
    CHECK(is_order(o));
    CHECK(s.relation_size() == p.relation_size() + q.relation_size());
    CHECK(o.relation_size() == p.relation_size() + q.relation_size() + p.size() * q.size());
  }
}

TEST_CASE("sums namespace colliding labels") {
  const Poset s = direct_sum(catalog("C2"), catalog("C2"));
  CHECK(s.find("0/0").has_value());
  CHECK(s.find("1/1").has_value());
  CHECK(s.lt(s.index("0/0"), s.index("1/0")));
  CHECK_FALSE(s.comparable(s.index("0/0"), s.index("1/1")));
}

TEST_CASE("product") {
  const Poset c2c2 = product(catalog("C2"), catalog("C2"));
  CHECK(c2c2.size() == 4);
  // componentwise rule checked over all 16 ordered pairs
  std::size_t n = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (i <= k && j <= l) ++n;
  CHECK(c2c2.relation_size() == n);
  CHECK(n == 9);
  CHECK(is_isomorphic(product(catalog("A1"), catalog("N")), catalog("N")));
  const Poset cube = product(product(catalog("C2"), catalog("C2")), product(catalog("C2"), catalog("C2")));
  CHECK(cube.size() == 16);
  CHECK(is_order(cube));
  CHECK(cardinality(cube.minimal()) == 1);
}

TEST_CASE("induced subposets and convexity") {
  const Poset n = catalog("N");
  CHECK(is_isomorphic(induced(n, set_of(n, {"a", "c"})), catalog("C2")));
  const Poset w = catalog("W");
  CHECK(is_isomorphic(induced(w, w.minimal()), catalog("A2")));
  CHECK(induced(n, n.carrier()) == n);

  const Poset c3 = catalog("C3");
  CHECK_FALSE(is_convex(c3, set_of(c3, {"0", "2"})));
  CHECK(is_convex(c3, set_of(c3, {"0", "1"})));
  CHECK(is_convex(n, set_of(n, {"c", "d"})));
}

TEST_CASE("components and zigzag blocks") {
  const auto parts = components(catalog("A1+C3"));
  REQUIRE(parts.blocks.size() == 2);
  CHECK(cardinality(parts.blocks[0]) + cardinality(parts.blocks[1]) == 4);
  CHECK(std::min(cardinality(parts.blocks[0]), cardinality(parts.blocks[1])) == 1);

  const Poset n = catalog("N");
  const ElementSet ad = set_of(n, {"a", "d"});
  CHECK(gamma(n, ad, n.index("a")) == singleton(n.index("a")));
  CHECK(gamma(n, n.carrier(), n.index("a")) == n.carrier());
  CHECK(is_connected(catalog("W")));
  CHECK_FALSE(is_connected(catalog("A2")));
  CHECK_FALSE(is_connected(catalog("A0")));
}

TEST_CASE("every poset is the sum of its components") {
  Rng rng(5);
  for (int round = 0; round < 60; ++round) {
    const Poset p = random_poset(rng, 1 + rng() % 7, 0.25);
    Poset sum;
    for (ElementSet block : components(p).blocks) sum = direct_sum(sum, induced(p, block));
    CHECK(is_isomorphic(sum, p));
    CHECK(oracle::isomorphic(sum, p));
  }
}

TEST_CASE("canonical form agrees with brute-force isomorphism up to five elements") {
  std::vector<Poset> samples;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& r : oracle::all_relations(n)) samples.push_back(oracle::to_poset(r));
  // relabel every sample by a rotation so the check is not on identical inputs
  std::vector<Poset> shuffled;
  for (const auto& p : samples) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) order[k] = (k + 1) % p.size();
    shuffled.push_back(permuted(p, order));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const bool expected = i == j;  // the oracle list holds one per class
      if (is_isomorphic(samples[i], shuffled[j]) != expected) {
        FAIL("mismatch at " << i << ", " << j);
      }
    }
  }
  CHECK(samples.size() == 1 + 2 + 5 + 16 + 63);
}

TEST_CASE("poset enumeration matches the brute-force oracle") {
  const std::size_t totals[] = {1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 0; n <= 7; ++n) CHECK(all_posets(n).size() == totals[n]);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto brute = oracle::all_relations(n);
    REQUIRE(all_posets(n).size() == brute.size());
    for (const auto& r : brute) {
      std::size_t hits = 0;
      for (const auto& p : all_posets(n)) hits += oracle::isomorphic(oracle::relation_of(p), r) ? 1 : 0;
      CHECK(hits == 1);
    }
  }
  const auto conn = enumerate_connected(3);
  CHECK(conn.size() == 5);
  CHECK(enumerate_connected(1).size() == 1);
  const std::size_t connected_totals[] = {1, 3, 10, 44, 238};
  std::size_t running = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    running += n == 1 ? 1 : connected_totals[n - 2];
    CHECK(enumerate_connected(n).size() == running);
  }
  bool n_seen = false, c4 = false, v4 = false, l4 = false;
  for (const auto& p : enumerate_connected(4)) {
    n_seen |= is_isomorphic(p, catalog("N"));
    c4 |= is_isomorphic(p, catalog("C4"));
    v4 |= is_isomorphic(p, catalog("V4"));
    l4 |= is_isomorphic(p, catalog("Lambda4"));
    CHECK(is_connected(p));
  }
  CHECK((n_seen && c4 && v4 && l4));
  CHECK_THROWS_AS(enumerate_connected(99), Error);
}

TEST_CASE("isomorphism basics") {
  CHECK_FALSE(is_isomorphic(catalog("V3"), catalog("Lambda3")));
  const Poset relabel = from_pairs({"w", "x", "y", "z"}, Pairs{{"x", "w"}, {"z", "w"}, {"z", "y"}}, PairMode::covers);
  CHECK(is_isomorphic(relabel, catalog("N")));
  const auto three = enumerate_connected(3);
  for (std::size_t i = 2; i < three.size(); ++i)
    for (std::size_t j = i + 1; j < three.size(); ++j) CHECK_FALSE(oracle::isomorphic(three[i], three[j]));
  CHECK(canonical_representative(relabel) == canonical_representative(catalog("N")));
}

TEST_CASE("class names and DOT") {
  CHECK(class_name(catalog("N")) == "N");
  CHECK(class_name(catalog("A1+C3")) == "A1+C3");
  const std::string dot = to_dot(catalog("N"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank") != std::string::npos);
}
