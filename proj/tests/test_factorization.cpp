#include <doctest.h>

#include "oracles.hpp"
#include "phl/error.hpp"
#include "phl/factorization.hpp"
#include "phl/fixtures.hpp"
#include "phl/hom.hpp"
#include "phl/random.hpp"

using namespace phl;

namespace {

bool same_classes(const IsoClassTable& table, std::initializer_list<const char*> names) {
  if (table.size() != names.size()) return false;
  for (const char* n : names)
    if (!table.find(catalog(n))) return false;
  return true;
}

}  // namespace

TEST_CASE("connected embeddable classes") {
  CHECK(same_classes(embeddable_connected(catalog("N")), {"A1", "C2", "V3", "Lambda3", "N"}));
  CHECK(same_classes(embeddable_connected(catalog("W")), {"A1", "C2", "V3", "Lambda3", "N", "W"}));
  CHECK(same_classes(embeddable_connected(catalog("A1")), {"A1"}));
  CHECK(same_classes(embeddable_connected(catalog("A1+C3")), {"A1", "C2", "C3"}));
  CHECK(same_classes(embeddable_connected(catalog("A1+N2")), {"A1", "C2", "V3", "Lambda3", "N2"}));
  const auto t = embeddable_connected(catalog("W"));
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.rep(i - 1).size() <= t.rep(i).size());
  CHECK_THROWS_AS(embeddable_connected(catalog("A0")), Error);
}

TEST_CASE("embeddable classes grow with induced superposets") {
  Rng rng(41);
  for (int round = 0; round < 40; ++round) {
    const Poset big = random_poset(rng, 2 + rng() % 5, 0.4);
    const ElementSet sub = (rng() & big.carrier()) | 1U;
    const auto small_classes = embeddable_connected(induced(big, sub));
    const auto big_classes = embeddable_connected(big);
    for (const auto& q : small_classes.reps()) CHECK(big_classes.find(q).has_value());
  }
}

TEST_CASE("strict onto representatives") {
  CHECK(count_sro(catalog("N"), catalog("C3")) == 5);
  CHECK(count_sro(catalog("W"), catalog("V3")) == 3);
  CHECK(count_sro(catalog("V3"), catalog("C3")) == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& q : all_posets(n)) CHECK(count_sro(q, q) == 1);
  }
  const auto conn = enumerate_connected(4);
  for (const auto& p : conn) {
    for (const auto& q : conn) {
      CHECK(count_sro(p, q) == oracle::sro_count(p, q));
      CHECK(count(HomKind::strict_onto, p, q) % count(HomKind::aut, q, q) == 0);
    }
  }
}

TEST_CASE("image class counts") {
  CHECK(iq_count(catalog("C3"), catalog("N"), catalog("A1+C3")) == 5);
  CHECK(iq_count(catalog("V3"), catalog("W"), catalog("W")) == 12);
  for (const char* t : {"C3", "N", "W"}) CHECK(iq_count(catalog("A1"), catalog("A1"), catalog(t)) == catalog(t).size());
  Rng rng(8);
  for (int round = 0; round < 60; ++round) {
    const Poset p = random_connected_poset(rng, 1 + rng() % 4);
    const Poset t = random_poset(rng, 1 + rng() % 4, 0.4, "t");
    const auto classes = embeddable_connected(t);
    for (const auto& q : classes.reps()) CHECK(iq_count(q, p, t) == oracle::iq_count(q, p, t));
  }
}

TEST_CASE("reference matrix triples") {
  for (const auto& fix : {fixtures::matrices_n_a1c3(), fixtures::matrices_w_a1n2()}) {
    const auto m = factor_matrices(fixtures::universe_of(fix), fixtures::targets_of(fix), fix.targets);
    CHECK(m.sro.cells == fix.sro);
    CHECK(m.emb.cells == fix.emb);
    CHECK(m.strict.cells == fix.strict);
    CHECK(m.strict.col_names == fix.targets);
  }
  const auto one = factor_matrices({catalog("A1")});
  CHECK(one.sro.cells == fixtures::Matrix{{1}});
  CHECK(one.emb.cells == fixtures::Matrix{{1}});
  CHECK(one.strict.cells == fixtures::Matrix{{1}});
}

TEST_CASE("sorted universe gives a unit lower-triangular strict onto matrix") {
  // rows are domains: S°(P,Q) is empty when |P| < |Q|
  Rng rng(17);
  for (int round = 0; round < 20; ++round) {
    const Poset t = random_poset(rng, 2 + rng() % 5, 0.4);
    const auto m = factor_matrices({t});
    const auto& c = m.sro.cells;
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i][i] == 1);
      for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(c[i][j] == 0);
    }
  }
}

TEST_CASE("universe must match the targets") {
  try {
    factor_matrices({catalog("A1"), catalog("C2")}, {catalog("N")});
    FAIL("expected UniverseMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UniverseMismatch);
  }
}

TEST_CASE("factorization identity") {
  const auto nn = verify_factorization(catalog("N"), catalog("N"));
  CHECK(nn.holds);
  CHECK(nn.sum == 8);
  CHECK(nn.strict_count == 8);
  const auto lw = verify_factorization(catalog("Lambda3"), catalog("W"));
  CHECK(lw.holds);
  CHECK(lw.sum == 6);
  CHECK(verify_factorization(catalog("A1"), catalog("W")).sum == 5);
  CHECK_THROWS_AS(verify_factorization(catalog("A2"), catalog("W")), Error);

  Rng rng(23);
  for (int round = 0; round < 80; ++round) {
    const Poset p = random_connected_poset(rng, 1 + rng() % 5);
    const Poset t = random_poset(rng, 1 + rng() % 6, 0.35, "t");
    const auto report = verify_factorization(p, t);
    CHECK(report.holds);
    CHECK(report.strict_count == oracle::count(HomKind::strict, p, t));
  }
}
