// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "phl/construction.hpp"
#include "phl/error.hpp"
#include "phl/ev_system.hpp"
#include "phl/factorization.hpp"
#include "phl/fixtures.hpp"
#include "phl/gscheme.hpp"
#include "phl/hom.hpp"
#include "phl/random.hpp"

using namespace phl;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Matrix = fixtures::Matrix;

std::string column(const Matrix& m, std::size_t c) {
  std::string out = "(";
  for (std::size_t r = 0; r < m.size(); ++r) out += (r ? "," : "") + std::to_string(m[r][c]);
  return out + ")";
}

void matrices(Outcome& o, const std::vector<std::string>& universe, const std::vector<std::string>& targets,
              const Matrix& sro, const Matrix& emb, const Matrix& strict) {
  std::vector<Poset> u, t;
  for (const auto& n : universe) u.push_back(catalog(n));
  for (const auto& n : targets) t.push_back(catalog(n));
  const auto m = factor_matrices(u, t, targets);
  o.expect(m.sro.cells == sro, "sro matrix differs");
  o.expect(m.emb.cells == emb, "emb columns " + column(m.emb.cells, 0) + " " + column(m.emb.cells, 1));
  o.expect(m.strict.cells == strict,
           "strict columns " + column(m.strict.cells, 0) + " " + column(m.strict.cells, 1));
}

void criterion_1(Outcome& o) {
  const Matrix sro = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 2},
                      {0, 1, 0, 1, 0, 2}, {0, 1, 1, 1, 1, 5}, {0, 0, 0, 0, 0, 1}};
  const Matrix emb = {{4, 4}, {3, 3}, {2, 0}, {2, 0}, {1, 0}, {0, 1}};
  const Matrix strict = {{4, 4}, {3, 3}, {5, 5}, {5, 5}, {8, 8}, {0, 1}};
  matrices(o, {"A1", "C2", "V3", "Lambda3", "N", "C3"}, {"N", "A1+C3"}, sro, emb, strict);
  o.expect(count_sro(catalog("N"), catalog("C3")) == 5, "sro(N,C3) != 5");
  o.expect(count_sro(catalog("V3"), catalog("C3")) == 2, "sro(V3,C3) != 2");
}

void criterion_2(Outcome& o) {
  const Matrix sro = {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0},
                      {0, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 1}, {0, 1, 3, 1, 2, 1, 3},
                      {0, 1, 1, 1, 0, 0, 1}};
  const Matrix emb = {{5, 5}, {4, 4}, {4, 4}, {2, 4}, {2, 0}, {2, 0}, {0, 4}};
  const Matrix strict = {{5, 5}, {4, 4}, {8, 8}, {6, 8}, {12, 16}, {24, 32}, {10, 16}};
  matrices(o, {"A1", "C2", "V3", "Lambda3", "N", "W", "N2"}, {"W", "A1+N2"}, sro, emb, strict);
  o.expect(count_sro(catalog("W"), catalog("V3")) == 3, "sro(W,V3) != 3");
  o.expect(count_sro(catalog("W"), catalog("N")) == 2, "sro(W,N) != 2");
  o.expect(count_sro(catalog("W"), catalog("N2")) == 3, "sro(W,N2) != 3");
}

void criterion_3(Outcome& o) {
  const auto report = verify_certificate(fixtures::certificate_n_a1c3(), 6);
  o.expect(report.verdict == CertificateReport::Verdict::certified, "not certified: " + report.failure);
  std::size_t c3_terms = 0;
  for (const auto& t : report.terms) {
    if (t.qprime_name != "C3") continue;
    ++c3_terms;
    o.expect(t.emb_q == t.q_mult * t.r_mult * t.aut_q, "left ratio of " + t.q_name + " is not 1");
    o.expect(t.emb_qp == t.aut_qp, "right ratio is not 1");
  }
  o.expect(c3_terms == 3, "expected three terms for C3");
  const std::size_t all6 = enumerate_connected(6).size();
  for (const auto& d : report.distributors) {
    o.expect(d.passed && d.bound == 6 && d.posets_checked == all6, "distributor not checked on all P up to 6");
  }
}

void criterion_4(Outcome& o) {
  const auto cert = fixtures::certificate_w_a1n2();
  const auto report = verify_certificate(cert, 6);
  o.expect(report.verdict == CertificateReport::Verdict::certified, "not certified: " + report.failure);
  bool q_n = false;
  for (const auto& t : report.terms) {
    if (t.q_name == "N") q_n = t.q_mult == 2 && t.emb_q == 2 * t.aut_q;
  }
  o.expect(q_n, "q(N) = 2 term missing or ratio not 1");
  for (const auto& tau : cert.distributors.back().sources) {
    const auto found = suggest_distributing(tau.dom(), tau.cod());
    bool hit = false;
    for (const auto& f : found) hit |= f.map() == tau.map();
    o.expect(hit, "suggest scan misses a map from " + class_name(tau.dom()));
    o.expect(check_distributing(tau).verdict == DistributingReport::Verdict::proved, "map not proved distributing");
  }
}

void criterion_5(Outcome& o) {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) posets.push_back(p);
  std::size_t checked = 0;
  for (const auto& p : posets) {
    for (const auto& q : posets) {
      for (HomKind k : {HomKind::hom, HomKind::strict, HomKind::strict_onto, HomKind::emb, HomKind::aut}) {
        const auto fast = count(k, p, q);
        const auto slow = brute_force_count(k, p, q);
        o.expect(fast == slow, class_name(p) + " -> " + class_name(q) + " " + std::string(to_string(k)));
        ++checked;
      }
    }
  }
  o.expect(checked == 24 * 24 * 5, "wrong number of pairs");
}

void criterion_6(Outcome& o) {
  Rng rng(6);
  std::vector<Poset> targets;
  for (int i = 0; i < 500; ++i) targets.push_back(random_poset(rng, 1 + rng() % 6, 0.2 + 0.1 * (rng() % 5), "t"));
  for (const char* n : {"A1", "A2", "C2", "C3", "V3", "Lambda3", "N", "W", "N2", "A1+C3", "A1+N2", "C2+C2"})
    targets.push_back(catalog(n));
  const auto domains = enumerate_connected(5);
  for (const auto& t : targets) {
    for (const auto& p : domains) {
      const auto r = verify_factorization(p, t);
      if (!r.holds) {
        o.expect(false, class_name(p) + " into " + class_name(t));
        return;
      }
    }
  }
}

void criterion_7(Outcome& o) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poset p = random_poset(rng, 1 + rng() % 4, 0.4, "p");
    const Poset t = random_poset(rng, 1 + rng() % 3, 0.5, "t");
    const HomMap xi = random_hom(rng, p, t);
    const auto via_quotient = gamma_class_count(xi, t);
    o.expect(via_quotient == brute_force_gamma_class_count(xi, t), "library enumeration disagrees");
    o.expect(via_quotient == oracle::gamma_count(p, xi.map(), t), "oracle disagrees");
  }
}

void criterion_8(Outcome& o) {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) posets.push_back(p);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    for (std::size_t j = i + 1; j < posets.size(); ++j) {
      const Poset& r = posets[i];
      const Poset& s = posets[j];
      ++pairs;
      try {
        const auto w = witness_search(r, s);
        o.expect(is_connected(w.p), "witness not connected");
        o.expect(w.p.size() <= std::max(r.size(), s.size()), "witness above the size bound");
        o.expect(w.r_count == count(HomKind::strict, w.p, r) && w.s_count == count(HomKind::strict, w.p, s),
                 "witness counts wrong");
        o.expect(w.r_count != w.s_count, "witness counts equal");
      } catch (const Error& e) {
        o.expect(false, class_name(r) + " vs " + class_name(s) + ": " + e.what());
      }
    }
  }
  o.expect(pairs == 24 * 23 / 2, "wrong number of pairs");
}

void criterion_9(Outcome& o) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto spec = random_spec(rng, 4);
    try {
      const auto report = theorem3_pipeline(spec, 4);
      o.expect(oracle::is_partial_order(oracle::relation_of(report.result.t)), "T is not a partial order");
      for (const auto& ob : report.obligations) o.expect(ob.holds, "obligation fails for " + ob.name);
    } catch (const Error& e) {
      o.expect(false, std::string("random spec: ") + e.what());
      return;
    }
  }
  const auto spec = fixtures::spec_c2c2();
  const auto report = theorem3_pipeline(spec, 5);
  o.expect(is_isomorphic(report.result.t, catalog("C3")), "C2+C2 fixture does not give C3");
  o.expect(is_isomorphic(report.result.s, catalog("A1+C3")), "A'+T is not A1+C3");
  o.expect(report.scan.verdict == WitnessReport::Verdict::holds_up_to_bound, "C2+C2 vs A1+C3 scan fails");
  o.expect(verify_certificate(fixtures::certificate_c2c2_a1c3(), 6).verdict == CertificateReport::Verdict::certified,
           "C2+C2 vs A1+C3 certificate fails");
  const auto eps = build_epsilon_antichain(spec);
  o.expect(eps.injective && eps.homomorphism, "epsilon map is not an injective homomorphism");
}

void criterion_10(Outcome& o) {
  const Poset c3 = catalog("C3");
  const auto e = build_ev(c3);
  o.expect(e.size() == 12, "|E(C3)| != 12");
  const auto a = e.index_of(EVElement{0, 0, singleton(1)});
  const auto b = e.index_of(EVElement{1, singleton(0), singleton(2)});
  const auto c = e.index_of(EVElement{2, singleton(1), 0});
  o.expect(e.lt_plus(a, b) && e.lt_plus(b, c) && !e.leq_plus(a, c), "non-transitivity pin on C3 lost");
  for (const char* name : {"A1+C3", "C2+C2", "A1+N2", "N+W"}) {
    const Poset s = catalog(name);
    const auto parts = components(s);
    const auto es = build_ev(s);
    std::size_t sum = 0;
    for (ElementSet block : parts.blocks) sum += build_ev(induced(s, block)).size();
    o.expect(es.size() == sum, std::string("size of E(") + name + ") is not additive");
    for (std::size_t x = 0; x < es.size(); ++x) {
      for (std::size_t y : es.successors(x)) {
        const std::size_t ax = es.element(x).anchor;
        const std::size_t ay = es.element(y).anchor;
        o.expect(gamma(s, s.carrier(), ax) == gamma(s, s.carrier(), ay), std::string("cross pair in E(") + name + ")");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<void(Outcome&)>>> criteria = {
      {1, "matrices for N | A1+C3", 5.0, criterion_1},
      {2, "matrices for W | A1+N2", 10.0, criterion_2},
      {3, "certificate N below A1+C3", 0.0, criterion_3},
      {4, "certificate W below A1+N2 and suggested maps", 0.0, criterion_4},
      {5, "count equals brute force on all pairs up to 4 elements", 120.0, criterion_5},
      {6, "factorization identity", 0.0, criterion_6},
      {7, "block class count via quotient", 0.0, criterion_7},
      {8, "witness within max(|R|,|S|) for all pairs up to 4 elements", 0.0, criterion_8},
      {9, "construction soundness", 0.0, criterion_9},
      {10, "EV-system pins", 0.0, criterion_10},
  };
  int failures = 0;
  for (const auto& [id, name, limit, body] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0) o.expect(secs < limit, "over the time limit");
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << std::setw(2) << id << "] " << name << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!o.ok) std::cout << ": " << o.why.str();
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
