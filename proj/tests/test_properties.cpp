#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "phl/config.hpp"
#include "phl/error.hpp"
#include "phl/gscheme.hpp"
#include "phl/hom.hpp"
#include "phl/io.hpp"
#include "phl/random.hpp"

using namespace phl;

TEST_CASE("block class counts follow the strict count order") {
  // #S(P,R) <= #S(P,S) for all small connected P forces
  // #Gamma_{P,R}(xi) <= #Gamma_{P,S}(xi) for every xi in H(P,R).
  const char* names[] = {"A1", "C2", "A2", "V3", "Lambda3", "C3", "A1+C2", "N", "A1+C3", "C2+C2"};
  std::size_t compared = 0;
  for (const char* rn : names) {
    for (const char* sn : names) {
      const Poset r = catalog(rn);
      const Poset s = catalog(sn);
      if (bounded_gle_check(r, s, 4).verdict != WitnessReport::Verdict::holds_up_to_bound) continue;
      for (const auto& p : enumerate_connected(3)) {
        for (const auto& xi : enumerate(HomKind::hom, p, r)) {
          const auto on_r = oracle::gamma_count(p, xi.map(), r);
          CHECK(gamma_class_count(xi, r) == on_r);
          CHECK(on_r <= gamma_class_count(xi, s));
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("strict count vectors separate isomorphism classes") {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) posets.push_back(p);
  const auto probes = enumerate_connected(4);
  for (std::size_t i = 0; i < posets.size(); ++i) {
    for (std::size_t j = i + 1; j < posets.size(); ++j) {
      bool differ = false;
      for (const auto& p : probes) {
        if (p.size() > std::max(posets[i].size(), posets[j].size())) break;
        if (count(HomKind::strict, p, posets[i]) != count(HomKind::strict, p, posets[j])) {
          differ = true;
          break;
        }
      }
      CHECK(differ);
    }
  }
}

TEST_CASE("trivial certificates imply the bounded scan") {
  Rng rng(31);
  std::size_t certified = 0;
  for (int round = 0; round < 150; ++round) {
    const Poset r = random_poset(rng, 1 + rng() % 4, 0.4, "r");
    const Poset s = random_poset(rng, 1 + rng() % 5, 0.4, "s");
    TransportCertificate cert;
    try {
      cert = trivial_certificate(r, s);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PreconditionFailed);
      continue;
    }
    if (verify_certificate(cert, 4).verdict != CertificateReport::Verdict::certified) continue;
    ++certified;
    CHECK(bounded_gle_check(r, s, 5).verdict == WitnessReport::Verdict::holds_up_to_bound);
  }
  CHECK(certified > 10);
}

TEST_CASE("outputs are identical across repeated runs") {
  const auto a = io::format_csv(factor_matrices({catalog("W"), catalog("A1+N2")}));
  const auto b = io::format_csv(factor_matrices({catalog("W"), catalog("A1+N2")}));
  CHECK(a == b);
  const auto ca = io::certificate_to_json(trivial_certificate(catalog("C2+C2"), catalog("A1+C3"))).dump();
  const auto cb = io::certificate_to_json(trivial_certificate(catalog("C2+C2"), catalog("A1+C3"))).dump();
  CHECK(ca == cb);
  Rng r1(5), r2(5);
  CHECK(random_poset(r1, 6) == random_poset(r2, 6));
}

TEST_CASE("bound cap from the environment") {
  ::setenv("PHL_MAX_BOUND", "3", 1);
  CHECK(Config::cap_bound(6) == 3);
  CHECK(Config::cap_bound(2) == 2);
  CHECK(Config::from_environment().distributor_bound == 3);
  ::unsetenv("PHL_MAX_BOUND");
  CHECK(Config::cap_bound(6) == 6);
  const Config c = Config::from_environment();
  CHECK(c.scan_bound == 5);
  CHECK(c.distributor_bound == 6);
  CHECK(c.oracle_ceiling == 10'000'000);
  CHECK(c.ev_ceiling == 65536);
}
