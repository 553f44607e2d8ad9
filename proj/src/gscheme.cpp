#include "phl/gscheme.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "phl/error.hpp"
#include "phl/ev_system.hpp"
#include "phl/factorization.hpp"

namespace phl {

std::string_view to_string(WitnessReport::Verdict v) {
  return v == WitnessReport::Verdict::holds_up_to_bound ? "holds_up_to_bound" : "counterexample";
}

std::string_view to_string(DistributingReport::Verdict v) {
  return v == DistributingReport::Verdict::proved ? "proved" : "inconclusive";
}

std::string_view to_string(CertificateReport::Verdict v) {
  return v == CertificateReport::Verdict::certified ? "certified" : "failed";
}

WitnessReport bounded_gle_check(const Poset& r, const Poset& s, std::size_t n_max) {
  if (r.empty() || s.empty()) fail(ErrorKind::EmptyPoset, "comparison needs nonempty posets");
  WitnessReport report;
  report.bound = n_max;
  for (const Poset& p : enumerate_connected(n_max)) {
    ++report.checked_classes;
    const std::uint64_t a = count(HomKind::strict, p, r);
    const std::uint64_t b = count(HomKind::strict, p, s);
    if (a > b) {
      report.verdict = WitnessReport::Verdict::counterexample;
      report.witness = CountWitness{p, a, b};
      break;
    }
  }
  return report;
}

DistributingReport check_distributing(const HomMap& tau) {
  if (!tau.is_strict() || !tau.is_onto()) fail(ErrorKind::NotStrictOnto, "distributing test needs a strict onto map");
  DistributingReport report;
  const auto a = alpha(tau);
  std::vector<EVElement> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  report.alpha_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  for (std::size_t v = 0; v < a.size() && !report.collision; ++v) {
    for (std::size_t w = v + 1; w < a.size(); ++w) {
      if (tau(v) != tau(w)) continue;
      if ((a[v].down & a[w].down) != 0 || (a[v].up & a[w].up) != 0) {
        report.collision = std::make_pair(v, w);
        break;
      }
    }
  }
  report.verdict = report.alpha_injective && !report.collision ? DistributingReport::Verdict::proved
                                                                : DistributingReport::Verdict::inconclusive;
  return report;
}

namespace {

void run_distributor(const DistributorSpec& spec, std::size_t n_max, DistributorReport& report) {
  report.bound = n_max;
  const std::size_t count_sources = spec.sources.size();
  for (const HomMap& tau : spec.sources) {
    if (!(tau.cod() == spec.target)) fail(ErrorKind::DomainMismatch, "source map does not land in the target");
  }
  auto failed = [&](std::string reason, std::optional<Poset> p, std::size_t source, std::size_t other,
                    std::vector<std::size_t> common) {
    report.failure.emplace();
    report.failure->reason = std::move(reason);
    report.failure->p = std::move(p);
    report.failure->source = source;
    report.failure->other = other;
    report.failure->common_map = std::move(common);
  };
  for (std::size_t l = 0; l < count_sources; ++l) {
    report.sources.push_back(check_distributing(spec.sources[l]));
    if (report.sources.back().verdict != DistributingReport::Verdict::proved) {
      failed("source " + std::to_string(l) + " is not proved distributing", std::nullopt, l, l, {});
      return;
    }
  }
  if (count_sources >= 2) {
    for (std::size_t l = 0; l < count_sources; ++l) {
      if (is_isomorphic(spec.sources[l].dom(), spec.target)) {
        failed("source " + std::to_string(l) + " is isomorphic to the target", std::nullopt, l, l, {});
        return;
      }
    }
  }
  if (count_sources == 0) {
    report.passed = true;
    return;
  }
  for (const Poset& p : enumerate_connected(n_max)) {
    ++report.posets_checked;
    std::map<std::vector<std::size_t>, std::size_t> owner;
    for (std::size_t l = 0; l < count_sources; ++l) {
      const HomMap& tau = spec.sources[l];
      if (p.size() < tau.dom().size()) continue;
      bool clash = false;
      std::string why;
      std::size_t first_owner = 0;
      std::vector<std::size_t> common;
      for_each_map(HomKind::strict_onto, p, tau.dom(), [&](std::span<const std::size_t> sigma) {
        std::vector<std::size_t> composed(sigma.size());
        for (std::size_t x = 0; x < sigma.size(); ++x) composed[x] = tau(sigma[x]);
        auto [it, fresh] = owner.emplace(composed, l);
        if (!fresh) {
          why = it->second == l ? "composition with source " + std::to_string(l) + " is not injective"
                                : "composed sets of two sources meet";
          clash = true;
          first_owner = it->second;
          common = composed;
          return false;
        }
        return true;
      });
      if (clash) {
        failed(why, p, first_owner, l, common);
        return;
      }
    }
  }
  report.passed = true;
}

}  // namespace

DistributorReport check_distributor(const DistributorSpec& spec, std::size_t n_max) {
  DistributorReport report;
  run_distributor(spec, n_max, report);
  return report;
}

void require_distributor(const DistributorSpec& spec, std::size_t n_max) {
  const auto report = check_distributor(spec, n_max);
  if (report.passed) return;
  const auto& f = *report.failure;
  std::string msg = f.reason;
  if (f.p) msg += " at P = " + class_name(*f.p);
  fail(ErrorKind::NotADistributor, msg);
}

bool ratio_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  if (b == 0 || d == 0) fail(ErrorKind::InvalidParameter, "ratio with zero denominator");
  using wide = unsigned __int128;
  return static_cast<wide>(a) * d <= static_cast<wide>(c) * b;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedCertificate, what); }

bool same_classes(const std::vector<Poset>& given, const IsoClassTable& expected, std::string& why,
                  const char* side) {
  IsoClassTable seen;
  for (const Poset& q : given) {
    if (!is_connected(q)) {
      why = std::string(side) + " class " + class_name(q) + " is not connected";
      return false;
    }
    if (seen.find(q)) {
      why = std::string(side) + " class " + class_name(q) + " is listed twice";
      return false;
    }
    seen.add(q);
    if (!expected.find(q)) {
      why = std::string(side) + " class " + class_name(q) + " does not embed";
      return false;
    }
  }
  if (seen.size() != expected.size()) {
    for (const Poset& q : expected.reps()) {
      if (!seen.find(q)) {
        why = std::string(side) + " list lacks " + class_name(q);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string CertificateReport::summary() const {
  std::ostringstream out;
  if (verdict == Verdict::certified) {
    out << "certified (distributors machine-checked to n=" << bound << ")";
  } else {
    out << "failed: " << failure;
  }
  return out.str();
}

CertificateReport verify_certificate(const TransportCertificate& cert, std::size_t n_max) {
  if (cert.r.empty() || cert.s.empty()) malformed("R and S must be nonempty");
  const std::size_t J = cert.qprime_classes.size();
  if (cert.nu.size() != J) malformed("nu has " + std::to_string(cert.nu.size()) + " entries, expected " + std::to_string(J));
  std::vector<std::size_t> jstar;
  for (std::size_t j = 0; j < J; ++j) {
    if (cert.nu[j] >= 1) jstar.push_back(j);
  }
  if (cert.lambda.size() != jstar.size()) malformed("lambda needs one entry per j with nu_j >= 1");
  if (cert.distributors.size() != jstar.size()) malformed("distributors needs one entry per j with nu_j >= 1");

  CertificateReport report;
  report.bound = n_max;
  const IsoClassTable er = embeddable_connected(cert.r);
  const IsoClassTable es = embeddable_connected(cert.s);
  report.q_classes = cert.q_classes ? *cert.q_classes : er.reps();
  const auto& q = report.q_classes;
  const std::size_t I = q.size();

  for (std::size_t t = 0; t < jstar.size(); ++t) {
    const std::size_t j = jstar[t];
    const auto& lam = cert.lambda[t];
    const auto& dist = cert.distributors[t];
    if (lam.size() != cert.nu[j]) malformed("lambda for j=" + std::to_string(j) + " has the wrong length");
    if (dist.sources.size() != cert.nu[j]) malformed("distributor for j=" + std::to_string(j) + " has the wrong length");
    if (!is_isomorphic(dist.target, cert.qprime_classes[j])) {
      malformed("distributor target for j=" + std::to_string(j) + " is not Q'_j");
    }
    for (std::size_t k = 0; k < lam.size(); ++k) {
      if (lam[k] >= I) malformed("lambda value " + std::to_string(lam[k]) + " out of range");
      if (!is_isomorphic(dist.sources[k].dom(), q[lam[k]])) {
        malformed("distributor source " + std::to_string(k) + " for j=" + std::to_string(j) + " is not Q_lambda(k)");
      }
    }
  }

  auto finish_failed = [&](std::string why) {
    report.verdict = CertificateReport::Verdict::failed;
    report.failure = std::move(why);
    report.sanity = bounded_gle_check(cert.r, cert.s, n_max);
    return report;
  };

  std::string why;
  if (!same_classes(q, er, why, "Q")) return finish_failed("(i) " + why);
  if (!same_classes(cert.qprime_classes, es, why, "Q'")) return finish_failed("(i) " + why);

  report.r.assign(I, 0);
  for (const auto& lam : cert.lambda) {
    std::vector<bool> hit(I, false);
    for (std::size_t i : lam) hit[i] = true;
    for (std::size_t i = 0; i < I; ++i) report.r[i] += hit[i] ? 1 : 0;
  }
  for (std::size_t i = 0; i < I; ++i) {
    if (report.r[i] == 0) return finish_failed("(iii) class " + class_name(q[i]) + " is covered by no distributor");
  }

  bool all_hold = true;
  for (std::size_t t = 0; t < jstar.size(); ++t) {
    const std::size_t j = jstar[t];
    const Poset& qp = cert.qprime_classes[j];
    const std::uint64_t emb_qp = count(HomKind::emb, qp, cert.s);
    const std::uint64_t aut_qp = count(HomKind::aut, qp, qp);
    std::map<std::size_t, std::uint64_t> mult;
    for (std::size_t i : cert.lambda[t]) ++mult[i];
    for (const auto& [i, qm] : mult) {
      CertificateTerm term;
      term.j = j;
      term.i = i;
      term.q_name = class_name(q[i]);
      term.qprime_name = class_name(qp);
      term.emb_q = count(HomKind::emb, q[i], cert.r);
      term.q_mult = qm;
      term.r_mult = report.r[i];
      term.aut_q = count(HomKind::aut, q[i], q[i]);
      term.emb_qp = emb_qp;
      term.aut_qp = aut_qp;
      using wide = unsigned __int128;
      const wide denom = static_cast<wide>(term.q_mult) * term.r_mult * term.aut_q;
      term.holds = static_cast<wide>(term.emb_q) * term.aut_qp <= static_cast<wide>(term.emb_qp) * denom;
      all_hold = all_hold && term.holds;
      report.terms.push_back(term);
    }
  }

  for (std::size_t t = 0; t < jstar.size(); ++t) {
    report.distributors.push_back(check_distributor(cert.distributors[t], n_max));
  }
  for (std::size_t t = 0; t < jstar.size(); ++t) {
    if (!report.distributors[t].passed) {
      return finish_failed("(v) distributor for Q'_" + std::to_string(jstar[t]) + " (" +
                           class_name(cert.qprime_classes[jstar[t]]) + "): " + report.distributors[t].failure->reason);
    }
  }
  if (!all_hold) {
    for (const auto& term : report.terms) {
      if (!term.holds) {
        return finish_failed("inequality fails for Q_" + std::to_string(term.i) + " (" + term.q_name + ") against " +
                             term.qprime_name);
      }
    }
  }
  report.verdict = CertificateReport::Verdict::certified;
  report.sanity = bounded_gle_check(cert.r, cert.s, n_max);
  if (report.sanity.verdict == WitnessReport::Verdict::counterexample) {
    fail(ErrorKind::InternalInvariantViolation, "certified pair has a counting counterexample");
  }
  return report;
}

CountWitness witness_search(const Poset& r, const Poset& s, std::size_t n_max) {
  if (r.empty() || s.empty()) fail(ErrorKind::EmptyPoset, "witness search needs nonempty posets");
  if (is_isomorphic(r, s)) fail(ErrorKind::PreconditionFailed, "R and S are isomorphic");
  if (n_max == 0) n_max = std::max(r.size(), s.size());
  for (const Poset& p : enumerate_connected(n_max)) {
    const std::uint64_t a = count(HomKind::strict, p, r);
    const std::uint64_t b = count(HomKind::strict, p, s);
    if (a != b) return CountWitness{p, a, b};
  }
  fail(ErrorKind::NoWitnessFound, "no connected P with at most " + std::to_string(n_max) + " elements separates R and S");
}

std::vector<HomMap> suggest_distributing(const Poset& q, const Poset& qprime) {
  std::vector<HomMap> out;
  for (HomMap& tau : enumerate(HomKind::strict_onto, q, qprime)) {
    if (check_distributing(tau).verdict == DistributingReport::Verdict::proved) out.push_back(std::move(tau));
  }
  return out;
}

TransportCertificate trivial_certificate(const Poset& r, const Poset& s) {
  const IsoClassTable er = embeddable_connected(r);
  const IsoClassTable es = embeddable_connected(s);
  TransportCertificate cert;
  cert.r = r;
  cert.s = s;
  cert.q_classes = er.reps();
  cert.qprime_classes = es.reps();
  cert.nu.assign(es.size(), 0);
  std::vector<std::optional<std::size_t>> source_of(es.size());
  for (std::size_t i = 0; i < er.size(); ++i) {
    auto j = es.find(er.rep(i));
    if (!j) fail(ErrorKind::PreconditionFailed, class_name(er.rep(i)) + " does not embed in S");
    source_of[*j] = i;
    cert.nu[*j] = 1;
  }
  for (std::size_t j = 0; j < es.size(); ++j) {
    if (!source_of[j]) continue;
    const Poset& qj = es.rep(j);
    std::vector<std::size_t> id(qj.size());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
    cert.lambda.push_back({*source_of[j]});
    cert.distributors.push_back(DistributorSpec{qj, {HomMap(qj, qj, id)}});
  }
  return cert;
}

}  // namespace phl
