#include "phl/fixtures.hpp"

#include <functional>

#include "phl/error.hpp"
#include "phl/factorization.hpp"
#include "phl/hom.hpp"

namespace phl::fixtures {

MatrixFixture matrices_n_a1c3() {
  MatrixFixture f;
  f.universe = {"A1", "C2", "V3", "Lambda3", "N", "C3"};
  f.targets = {"N", "A1+C3"};
  f.sro = {
      {1, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 2},
      {0, 1, 0, 1, 0, 2},
      {0, 1, 1, 1, 1, 5},
      {0, 0, 0, 0, 0, 1},
  };
  f.emb = {{4, 4}, {3, 3}, {2, 0}, {2, 0}, {1, 0}, {0, 1}};
  f.strict = {{4, 4}, {3, 3}, {5, 5}, {5, 5}, {8, 8}, {0, 1}};
  return f;
}

MatrixFixture matrices_w_a1n2() {
  MatrixFixture f;
  f.universe = {"A1", "C2", "V3", "Lambda3", "N", "W", "N2"};
  f.targets = {"W", "A1+N2"};
  f.sro = {
      {1, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 0, 0},
      {0, 1, 0, 1, 0, 0, 0},
      {0, 1, 1, 1, 1, 0, 1},
      {0, 1, 3, 1, 2, 1, 3},
      {0, 1, 1, 1, 0, 0, 1},
  };
  f.emb = {{5, 5}, {4, 4}, {4, 4}, {2, 4}, {2, 0}, {2, 0}, {0, 4}};
  f.strict = {{5, 5}, {4, 4}, {8, 8}, {6, 8}, {12, 16}, {24, 32}, {10, 16}};
  return f;
}

std::vector<Poset> universe_of(const MatrixFixture& f) {
  std::vector<Poset> out;
  for (const auto& n : f.universe) out.push_back(catalog(n));
  return out;
}

std::vector<Poset> targets_of(const MatrixFixture& f) {
  std::vector<Poset> out;
  for (const auto& n : f.targets) out.push_back(catalog(n));
  return out;
}

namespace {

HomMap by_labels(const Poset& dom, const Poset& cod, const std::vector<std::string>& images) {
  std::vector<std::size_t> m;
  for (const auto& l : images) m.push_back(cod.index(l));
  return HomMap(dom, cod, std::move(m));
}

HomMap identity(const Poset& p) {
  std::vector<std::size_t> m(p.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = x;
  return HomMap(p, p, std::move(m));
}

DistributorSpec trivial(const Poset& p) { return DistributorSpec{p, {identity(p)}}; }

}  // namespace

TransportCertificate certificate_n_a1c3() {
  TransportCertificate c;
  c.r = catalog("N");
  c.s = catalog("A1+C3");
  c.q_classes = std::vector<Poset>{catalog("A1"), catalog("C2"), catalog("V3"), catalog("Lambda3"), catalog("N")};
  c.qprime_classes = {catalog("A1"), catalog("C2"), catalog("C3")};
  c.nu = {1, 1, 3};
  c.lambda = {{0}, {1}, {2, 3, 4}};
  const Poset c3 = catalog("C3");
  c.distributors = {
      trivial(catalog("A1")),
      trivial(catalog("C2")),
      DistributorSpec{c3,
                      {by_labels(catalog("V3"), c3, {"0", "1", "2"}),
                       by_labels(catalog("Lambda3"), c3, {"0", "1", "2"}),
                       by_labels(catalog("N"), c3, {"1", "0", "2", "1"})}},
  };
  return c;
}

TransportCertificate certificate_w_a1n2() {
  TransportCertificate c;
  c.r = catalog("W");
  c.s = catalog("A1+N2");
  c.q_classes =
      std::vector<Poset>{catalog("A1"), catalog("C2"), catalog("V3"), catalog("Lambda3"), catalog("N"), catalog("W")};
  c.qprime_classes = {catalog("A1"), catalog("C2"), catalog("V3"), catalog("Lambda3"), catalog("N2")};
  c.nu = {1, 1, 1, 1, 3};
  c.lambda = {{0}, {1}, {2}, {3}, {4, 4, 5}};
  const Poset n = catalog("N");
  const Poset n2 = catalog("N2");
  c.distributors = {
      trivial(catalog("A1")),
      trivial(catalog("C2")),
      trivial(catalog("V3")),
      trivial(catalog("Lambda3")),
      DistributorSpec{n2,
                      {by_labels(n, n2, {"a", "b", "c", "d"}),
                       by_labels(n, n2, {"b", "a", "c", "d"}),
                       // W labels in order a, b, c, d, e
                       by_labels(catalog("W"), n2, {"c", "a", "d", "b", "c"})}},
  };
  return c;
}

TransportCertificate certificate_c2c2_a1c3() { return trivial_certificate(catalog("C2+C2"), catalog("A1+C3")); }

ConstructionSpec spec_c2c2() {
  ConstructionSpec s;
  s.p = from_pairs({"p0", "p1"}, std::vector<std::pair<std::string, std::string>>{{"p0", "p1"}}, PairMode::covers);
  s.q = from_pairs({"q0", "q1"}, std::vector<std::pair<std::string, std::string>>{{"q0", "q1"}}, PairMode::covers);
  s.a = singleton(1);
  s.b = singleton(0);
  s.beta = {{1, 0}};
  return s;
}

bool selftest(std::ostream& out, std::size_t distributor_bound) {
  bool all = true;
  auto run = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const Error& e) {
      note = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "PASS " : "FAIL ") << name << note << "\n";
    all = all && ok;
  };

  for (const auto& [name, fix] : {std::pair{"matrices N | A1+C3", matrices_n_a1c3()},
                                  std::pair{"matrices W | A1+N2", matrices_w_a1n2()}}) {
    run(name, [&, &fix = fix] {
      const auto m = factor_matrices(universe_of(fix), targets_of(fix), fix.targets);
      return m.sro.cells == fix.sro && m.emb.cells == fix.emb && m.strict.cells == fix.strict;
    });
  }
  run("count strict N -> N = 8", [] { return count(HomKind::strict, catalog("N"), catalog("N")) == 8; });
  run("count strict Lambda3 -> W = 6",
      [] { return count(HomKind::strict, catalog("Lambda3"), catalog("W")) == 6; });
  run("count strict Lambda3 -> A1+N2 = 8",
      [] { return count(HomKind::strict, catalog("Lambda3"), catalog("A1+N2")) == 8; });
  run("count strict_onto V3 -> C3 = 2",
      [] { return count(HomKind::strict_onto, catalog("V3"), catalog("C3")) == 2; });
  run("sro N -> C3 = 5", [] { return count_sro(catalog("N"), catalog("C3")) == 5; });
  run("sro W -> V3 = 3", [] { return count_sro(catalog("W"), catalog("V3")) == 3; });
  run("N below A1+C3 by certificate", [&] {
    return verify_certificate(certificate_n_a1c3(), distributor_bound).verdict == CertificateReport::Verdict::certified;
  });
  run("W below A1+N2 by certificate", [&] {
    return verify_certificate(certificate_w_a1n2(), distributor_bound).verdict == CertificateReport::Verdict::certified;
  });
  run("C2+C2 below A1+C3 by trivial distributors", [&] {
    return verify_certificate(certificate_c2c2_a1c3(), distributor_bound).verdict ==
           CertificateReport::Verdict::certified;
  });
  run("witness C3 separates N and A1+C3", [] {
    const auto w = witness_search(catalog("N"), catalog("A1+C3"));
    return is_isomorphic(w.p, catalog("C3")) && w.r_count == 0 && w.s_count == 1;
  });
  run("construction C2+C2 gives T = C3", [] {
    const auto r = build_T(spec_c2c2());
    return is_isomorphic(r.t, catalog("C3")) && r.leq_u.size() == 2 && r.leq_d.empty();
  });
  return all;
}

}  // namespace phl::fixtures
