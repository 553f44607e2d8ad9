#include <doctest.h>

#include <memory>

#include "phl/error.hpp"
#include "phl/ev_system.hpp"
#include "phl/hom.hpp"
#include "phl/random.hpp"

using namespace phl;

namespace {

std::size_t expected_size(const Poset& p) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    n += std::size_t{1} << (cardinality(p.strict_down(x)) + cardinality(p.strict_up(x)));
  }
  return n;
}

EVElement triple(const Poset& p, const char* x, std::initializer_list<const char*> down,
                 std::initializer_list<const char*> up) {
  EVElement e{p.index(x), 0, 0};
  for (const char* d : down) e.down |= singleton(p.index(d));
  for (const char* u : up) e.up |= singleton(p.index(u));
  return e;
}

std::shared_ptr<const EVSystem> shared_ev(const Poset& p) { return std::make_shared<const EVSystem>(build_ev(p)); }

}  // namespace

TEST_CASE("EV-system sizes") {
  CHECK(build_ev(catalog("C2")).size() == 4);
  CHECK(build_ev(catalog("C3")).size() == 12);
  CHECK(build_ev(catalog("A1+C3")).size() == 13);
  CHECK(build_ev(catalog("C2+C2")).size() == 8);
  for (const auto& p : enumerate_connected(5)) CHECK(build_ev(p).size() == expected_size(p));
  CHECK_THROWS_AS(build_ev(catalog("A0")), Error);
}

TEST_CASE("fibres") {
  const Poset c2 = catalog("C2");
  const auto e = build_ev(c2);
  const auto bottom = ev_at(e, "0");
  REQUIRE(bottom.size() == 2);
  CHECK(bottom[0] == triple(c2, "0", {}, {}));
  CHECK(bottom[1] == triple(c2, "0", {}, {"1"}));
  CHECK(ev_at(build_ev(catalog("C3")), "1").size() == 4);
  CHECK_THROWS_AS(ev_at(e, "7"), Error);

  const Poset w = catalog("W");
  const auto ew = build_ev(w);
  std::size_t total = 0;
  for (std::size_t x = 0; x < w.size(); ++x) {
    const auto [first, last] = ew.fiber_range(x);
    CHECK(first == total);
    for (std::size_t i = first; i < last; ++i) CHECK(ew.element(i).anchor == x);
    total = last;
  }
  CHECK(total == ew.size());
  for (std::size_t i = 0; i < ew.size(); ++i) CHECK(ew.find(ew.element(i)) == i);
  CHECK_FALSE(ew.find(EVElement{0, singleton(0), 0}).has_value());
}

TEST_CASE("the EV relation is reflexive and antisymmetric") {
  for (const auto& p : enumerate_connected(4)) {
    const auto e = build_ev(p);
    for (std::size_t a = 0; a < e.size(); ++a) {
      CHECK(e.leq_plus(a, a));
      CHECK_FALSE(e.lt_plus(a, a));
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (a != b && e.leq_plus(a, b)) CHECK_FALSE(e.leq_plus(b, a));
      }
      std::vector<std::size_t> succ;
      for (std::size_t b = 0; b < e.size(); ++b)
        if (e.lt_plus(a, b)) succ.push_back(b);
      CHECK(e.successors(a) == succ);
    }
  }
}

TEST_CASE("the EV relation on C3 is not transitive") {
  const Poset c3 = catalog("C3");
  const auto e = build_ev(c3);
  const auto a = e.index_of(triple(c3, "0", {}, {"1"}));
  const auto b = e.index_of(triple(c3, "1", {"0"}, {"2"}));
  const auto c = e.index_of(triple(c3, "2", {"1"}, {}));
  CHECK(e.lt_plus(a, b));
  CHECK(e.lt_plus(b, c));
  CHECK_FALSE(e.leq_plus(a, c));
}

TEST_CASE("projection to anchors is strict and the base point map is an embedding") {
  for (const auto& p : enumerate_connected(4)) {
    const auto e = build_ev(p);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b : e.successors(a)) CHECK(p.lt(e.element(a).anchor, e.element(b).anchor));
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        CHECK(e.leq_plus(e.base_point(x), e.base_point(y)) == p.leq(x, y));
  }
}

TEST_CASE("EV-system of a sum has no cross pairs") {
  Rng rng(9);
  for (int round = 0; round < 30; ++round) {
    const Poset p = random_poset(rng, 1 + rng() % 4, 0.4, "p");
    const Poset q = random_poset(rng, 1 + rng() % 4, 0.4, "q");
    const Poset s = direct_sum(p, q);
    const auto e = build_ev(s);
    CHECK(e.size() == build_ev(p).size() + build_ev(q).size());
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b : e.successors(a)) {
        CHECK((e.element(a).anchor < p.size()) == (e.element(b).anchor < p.size()));
      }
    }
  }
}

TEST_CASE("alpha") {
  const Poset c2 = catalog("C2");
  const HomMap id(c2, c2, {0, 1});
  const auto al = alpha(id);
  CHECK(al[0] == triple(c2, "0", {}, {"1"}));
  CHECK(al[1] == triple(c2, "1", {"0"}, {}));

  const Poset n = catalog("N");
  const Poset c3 = catalog("C3");
  std::vector<std::size_t> m(4);
  m[n.index("a")] = 1;
  m[n.index("b")] = 0;
  m[n.index("c")] = 2;
  m[n.index("d")] = 1;
  const HomMap tau3(n, c3, m);
  const auto at = alpha(tau3);
  CHECK(at[n.index("a")] == triple(c3, "1", {}, {"2"}));
  CHECK(at[n.index("d")] == triple(c3, "1", {"0"}, {}));

  const Poset a1c3 = catalog("A1+C3");
  const HomMap isolated(catalog("A1"), a1c3, {0});
  CHECK(alpha(isolated)[0] == EVElement{0, 0, 0});

  CHECK_THROWS_AS(alpha(HomMap(c2, c2, {0, 0})), Error);
}

TEST_CASE("alpha lands below the full down and up sets and composes") {
  Rng rng(15);
  std::size_t tested = 0;
  for (int round = 0; round < 200; ++round) {
    const Poset p = random_connected_poset(rng, 1 + rng() % 4);
    const Poset q = random_poset(rng, 1 + rng() % 4, 0.5, "q");
    const auto sigmas = enumerate(HomKind::strict, p, q);
    if (sigmas.empty()) continue;
    const HomMap& sigma = sigmas[rng() % sigmas.size()];
    for (const auto& a : alpha(sigma)) {
      CHECK((a.down & ~q.strict_down(a.anchor)) == 0);
      CHECK((a.up & ~q.strict_up(a.anchor)) == 0);
    }
    const Poset r = random_poset(rng, 1 + rng() % 4, 0.5, "r");
    const auto taus = enumerate(HomKind::strict, q, r);
    if (taus.empty()) continue;
    const HomMap& tau = taus[rng() % taus.size()];
    const auto outer = alpha(compose(tau, sigma));
    const auto inner = alpha(tau);
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK((outer[x].down & ~inner[sigma(x)].down) == 0);
      CHECK((outer[x].up & ~inner[sigma(x)].up) == 0);
      ++tested;
    }
    const auto e = build_ev(r);
    const auto idx = alpha_indices(tau, e);
    for (std::size_t y = 0; y < q.size(); ++y) CHECK(e.element(idx[y]) == inner[y]);
  }
  CHECK(tested > 0);
}

TEST_CASE("EV maps") {
  const auto e = shared_ev(catalog("N"));
  const auto id = identity_ev_map(e);
  CHECK(is_ev_hom(id));
  CHECK(is_strict_ev_hom(id));
  CHECK(is_injective(id));

  // collapse a <+ pair
  std::size_t a = 0;
  while (e->successors(a).empty()) ++a;
  const std::size_t b = e->successors(a).front();
  EVMap collapsed = id;
  collapsed.map[b] = a;
  CHECK_FALSE(is_strict_ev_hom(collapsed));
  CHECK_FALSE(is_injective(collapsed));

  const auto c2 = shared_ev(catalog("C2"));
  const auto c3 = shared_ev(catalog("C3"));
  const std::vector<std::size_t> f{0, 1};
  const auto push = pushforward(c2, c3, f);
  CHECK(is_strict_ev_hom(push));
  CHECK(is_injective(push));
  const std::vector<std::size_t> g{1, 0};
  CHECK_THROWS_AS(pushforward(c2, c3, g), Error);
}

TEST_CASE("bounded strong-scheme check for EV maps") {
  const auto e = shared_ev(catalog("N"));
  const auto id = check_prop1(identity_ev_map(e), e->base().carrier(), 4);
  CHECK(id.passed);
  CHECK(id.eta_injective);
  CHECK(id.posets_checked == enumerate_connected(4).size());

  const auto c2 = shared_ev(catalog("C2"));
  const auto c3 = shared_ev(catalog("C3"));
  const std::vector<std::size_t> f{0, 1};
  const auto report = check_prop1(pushforward(c2, c3, f), c2->base().carrier(), 4);
  CHECK(report.passed);
  CHECK(report.maps_checked > 0);

  // two fibres merged
  const auto a2 = shared_ev(catalog("A2"));
  const auto a1 = shared_ev(catalog("A1"));
  EVMap merge{a2, a1, {0, 0}};
  CHECK_THROWS_AS(check_prop1(merge, a2->base().carrier(), 3), Error);
}
