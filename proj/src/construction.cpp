#include "phl/construction.hpp"

#include <set>

#include "phl/error.hpp"
#include "phl/factorization.hpp"
#include "phl/hom.hpp"

namespace phl {

namespace {

void validate(const ConstructionSpec& spec) {
  if ((spec.a & ~spec.p.carrier()) != 0) fail(ErrorKind::IndexOutOfRange, "A is not a subset of P");
  if ((spec.b & ~spec.q.carrier()) != 0) fail(ErrorKind::IndexOutOfRange, "B is not a subset of Q");
  if (!is_convex(spec.p, spec.a)) fail(ErrorKind::NotConvex, "A is not convex in P");
  if (!is_convex(spec.q, spec.b)) fail(ErrorKind::NotConvex, "B is not convex in Q");
  ElementSet dom = 0;
  ElementSet img = 0;
  for (const auto& [x, y] : spec.beta) {
    if (x >= spec.p.size() || y >= spec.q.size()) fail(ErrorKind::NotIsomorphism, "beta refers to a missing element");
    if (contains(img, y)) fail(ErrorKind::NotIsomorphism, "beta is not injective");
    dom |= singleton(x);
    img |= singleton(y);
  }
  if (dom != spec.a) fail(ErrorKind::NotIsomorphism, "beta is not defined exactly on A");
  if (img != spec.b) fail(ErrorKind::NotIsomorphism, "beta does not map onto B");
  for (const auto& [x1, y1] : spec.beta) {
    for (const auto& [x2, y2] : spec.beta) {
      if (spec.p.leq(x1, x2) != spec.q.leq(y1, y2)) {
        fail(ErrorKind::NotIsomorphism, "beta does not preserve and reflect the order between " + spec.p.label(x1) +
                                            " and " + spec.p.label(x2));
      }
    }
  }
}

void check(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::InternalInvariantViolation, what);
}

}  // namespace

ConstructionResult build_T(const ConstructionSpec& spec) {
  validate(spec);
  const Poset& p = spec.p;
  const Poset& q = spec.q;
  ConstructionResult res;
  res.w = members(p.carrier() & ~spec.a);
  const std::size_t nw = res.w.size();
  const std::size_t n = nw + q.size();
  if (n > kMaxElements) fail(ErrorKind::SizeOverflow, "T would exceed 64 elements");

  // labels, suffixed only on collision
  std::set<std::string> q_labels(q.labels().begin(), q.labels().end());
  bool collide = false;
  for (std::size_t x : res.w) collide = collide || q_labels.count(p.label(x)) > 0;
  std::vector<std::string> labels;
  for (std::size_t x : res.w) labels.push_back(collide ? p.label(x) + "/0" : p.label(x));
  for (const auto& l : q.labels()) labels.push_back(collide ? l + "/1" : l);

  std::vector<std::size_t> t_of_p(p.size(), 0);
  for (std::size_t k = 0; k < nw; ++k) t_of_p[res.w[k]] = k;
  auto yt = [&](std::size_t y) { return nw + y; };

  std::vector<ElementSet> rows(n, 0);
  for (std::size_t i = 0; i < nw; ++i) {
    for (std::size_t j = 0; j < nw; ++j) {
      if (p.leq(res.w[i], res.w[j])) res.leq_o.emplace_back(i, j);
    }
  }
  for (std::size_t y = 0; y < q.size(); ++y) {
    for (std::size_t z = 0; z < q.size(); ++z) {
      if (q.leq(y, z)) res.leq_q.emplace_back(yt(y), yt(z));
    }
  }
  for (std::size_t k = 0; k < nw; ++k) {
    const std::size_t w = res.w[k];
    ElementSet below = 0;
    ElementSet above = 0;
    for (const auto& [a, ba] : spec.beta) {
      if (p.leq(a, w)) below |= q.down(ba);
      if (p.leq(w, a)) above |= q.up(ba);
    }
    for (std::size_t y : members(below)) res.leq_d.emplace_back(yt(y), k);
    for (std::size_t y : members(above)) res.leq_u.emplace_back(k, yt(y));
  }
  for (const RelationPart* part : {&res.leq_o, &res.leq_q, &res.leq_d, &res.leq_u}) {
    for (const auto& [i, j] : *part) {
      check(!contains(rows[i], j), "relation parts overlap");
      rows[i] |= singleton(j);
    }
  }
  try {
    res.t = Poset::from_relation(std::move(labels), std::move(rows));
  } catch (const Error& e) {
    fail(ErrorKind::InternalInvariantViolation, std::string("assembled relation is not a partial order: ") + e.what());
  }

  res.a_prime = induced(p, spec.a);
  res.s = direct_sum(res.a_prime, res.t);
  const std::size_t na = res.a_prime.size();
  res.psi.assign(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    res.psi[x] = contains(spec.a, x) ? na + yt(spec.beta.at(x)) : na + t_of_p[x];
  }

  // P ~ T|(W+B), Q = T|Y, psi an embedding
  ElementSet wb = full_set(nw);
  for (std::size_t y : members(spec.b)) wb |= singleton(yt(y));
  check(is_isomorphic(induced(res.t, wb), p), "T restricted to W and B is not isomorphic to P");
  const Poset ty = induced(res.t, res.t.carrier() & ~full_set(nw));
  for (std::size_t y = 0; y < q.size(); ++y) {
    for (std::size_t z = 0; z < q.size(); ++z) check(ty.leq(y, z) == q.leq(y, z), "T restricted to Y differs from Q");
  }
  check(HomMap(p, res.s, res.psi).is_embedding(), "psi is not an embedding");
  return res;
}

Theorem3Report theorem3_pipeline(const ConstructionSpec& spec, std::size_t n_max) {
  Theorem3Report report;
  report.result = build_T(spec);
  report.r = direct_sum(spec.p, spec.q);
  const Poset& s = report.result.s;
  const IsoClassTable er = embeddable_connected(report.r);
  for (const Poset& e : er.reps()) {
    EmbObligation ob{class_name(e), e, count(HomKind::emb, e, report.r), count(HomKind::emb, e, s), false};
    ob.holds = ob.emb_r <= ob.emb_s;
    report.obligations.push_back(ob);
    if (!ob.holds) {
      fail(ErrorKind::ProofObligationFailed, "#Emb(" + ob.name + ", P+Q) = " + std::to_string(ob.emb_r) +
                                                 " exceeds #Emb(" + ob.name + ", A'+T) = " + std::to_string(ob.emb_s));
    }
  }
  report.scan = bounded_gle_check(report.r, s, n_max);
  if (report.scan.verdict == WitnessReport::Verdict::counterexample) {
    fail(ErrorKind::ProofObligationFailed, "strict counts exceed at P = " + class_name(report.scan.witness->p));
  }
  return report;
}

EpsilonReport build_epsilon_antichain(const ConstructionSpec& spec) {
  if (spec.a == 0) fail(ErrorKind::EmptyPoset, "A is empty");
  if (!spec.p.is_antichain(spec.a)) fail(ErrorKind::NotAntichain, "A is not an antichain in P");
  EpsilonReport report;
  report.result = build_T(spec);
  report.r = direct_sum(spec.p, spec.q);
  const ConstructionResult& res = report.result;
  const std::size_t np = spec.p.size();
  const std::size_t na = res.a_prime.size();
  const std::size_t nw = res.w.size();

  // base map P+Q -> A'+T used for anchors and sets
  std::vector<std::size_t> base(report.r.size());
  for (std::size_t x = 0; x < np; ++x) base[x] = res.psi[x];
  for (std::size_t y = 0; y < spec.q.size(); ++y) base[np + y] = na + nw + y;
  std::vector<std::size_t> a_slot(np, 0);
  {
    std::size_t k = 0;
    for (std::size_t a : members(spec.a)) a_slot[a] = k++;
  }

  auto src = std::make_shared<const EVSystem>(build_ev(report.r));
  auto tgt = std::make_shared<const EVSystem>(build_ev(res.s));
  std::vector<std::size_t> map(src->size());
  report.anchors_preserved = true;
  for (std::size_t i = 0; i < src->size(); ++i) {
    const EVElement& e = src->element(i);
    EVElement img;
    const bool isolated_a = e.anchor < np && contains(spec.a, e.anchor) && e.down == 0 && e.up == 0;
    if (isolated_a) {
      img = EVElement{a_slot[e.anchor], 0, 0};
    } else {
      img.anchor = base[e.anchor];
      for (std::size_t x : members(e.down)) img.down |= singleton(base[x]);
      for (std::size_t x : members(e.up)) img.up |= singleton(base[x]);
    }
    map[i] = tgt->index_of(img);
    const std::size_t expected_anchor = isolated_a ? a_slot[e.anchor] : base[e.anchor];
    report.anchors_preserved = report.anchors_preserved && tgt->element(map[i]).anchor == expected_anchor;
  }
  report.eps = EVMap{src, tgt, std::move(map)};
  report.injective = is_injective(report.eps);
  report.homomorphism = is_ev_hom(report.eps);
  report.strict = is_strict_ev_hom(report.eps);
  return report;
}

std::vector<std::map<std::size_t, std::size_t>> list_isomorphisms(const Poset& p, ElementSet a, const Poset& q,
                                                                  ElementSet b) {
  const auto am = members(a);
  const auto bm = members(b);
  std::vector<std::map<std::size_t, std::size_t>> out;
  if (am.size() != bm.size()) return out;
  if (am.empty()) return {std::map<std::size_t, std::size_t>{}};
  for (const HomMap& f : enumerate(HomKind::aut, induced(p, a), induced(q, b))) {
    std::map<std::size_t, std::size_t> m;
    for (std::size_t k = 0; k < am.size(); ++k) m[am[k]] = bm[f(k)];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace phl
