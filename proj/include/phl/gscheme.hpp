#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phl/hom.hpp"
#include "phl/poset.hpp"

namespace phl {

struct CountWitness {
  Poset p;
  std::uint64_t r_count = 0;
  std::uint64_t s_count = 0;
};

struct WitnessReport {
  enum class Verdict { holds_up_to_bound, counterexample };
  Verdict verdict = Verdict::holds_up_to_bound;
  std::size_t bound = 0;
  std::optional<CountWitness> witness;
  std::size_t checked_classes = 0;
};

std::string_view to_string(WitnessReport::Verdict v);

/// Scans connected P with at most n_max elements for #S(P,R) > #S(P,S).
/// Only a counterexample is conclusive.
WitnessReport bounded_gle_check(const Poset& r, const Poset& s, std::size_t n_max);

struct DistributingReport {
  enum class Verdict { proved, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  bool alpha_injective = false;
  /// First pair v != w with tau(v) == tau(w) whose down or up parts meet.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

std::string_view to_string(DistributingReport::Verdict v);

/// Sufficient test: alpha_tau injective and colliding points have disjoint
/// down parts and disjoint up parts. NotStrictOnto unless tau is strict and onto.
DistributingReport check_distributing(const HomMap& tau);

struct DistributorSpec {
  Poset target;
  std::vector<HomMap> sources;  // each a strict onto map into target
};

struct DistributorFailure {
  std::string reason;
  std::optional<Poset> p;
  std::size_t source = 0;
  std::size_t other = 0;
  std::vector<std::size_t> common_map;  // P -> target
};

struct DistributorReport {
  bool passed = false;
  std::size_t bound = 0;
  std::size_t posets_checked = 0;
  std::vector<DistributingReport> sources;
  std::optional<DistributorFailure> failure;
};

/// Checks each source map with check_distributing, then materializes the
/// composed sets for every connected P up to n_max and tests pairwise
/// disjointness. DomainMismatch if a source map does not land in the target.
DistributorReport check_distributor(const DistributorSpec& spec, std::size_t n_max);
/// Same, raising NotADistributor on failure.
void require_distributor(const DistributorSpec& spec, std::size_t n_max);

/// Data for a transport certificate. Indices are 0-based. `lambda` and
/// `distributors` hold one entry per j with nu[j] >= 1, in increasing j.
struct TransportCertificate {
  Poset r;
  Poset s;
  std::optional<std::vector<Poset>> q_classes;  // default: embeddable_connected(r)
  std::vector<Poset> qprime_classes;
  std::vector<std::size_t> nu;
  std::vector<std::vector<std::size_t>> lambda;
  std::vector<DistributorSpec> distributors;
};

struct CertificateTerm {
  std::size_t j = 0;
  std::size_t i = 0;
  std::string q_name;
  std::string qprime_name;
  std::uint64_t emb_q = 0;     // #Emb(Q_i, R)
  std::uint64_t q_mult = 0;    // q_j(i)
  std::uint64_t r_mult = 0;    // r(i)
  std::uint64_t aut_q = 0;     // #Aut(Q_i)
  std::uint64_t emb_qp = 0;    // #Emb(Q'_j, S)
  std::uint64_t aut_qp = 0;    // #Aut(Q'_j)
  bool holds = false;
};

struct CertificateReport {
  enum class Verdict { certified, failed };
  Verdict verdict = Verdict::failed;
  std::string failure;
  std::size_t bound = 0;
  std::vector<Poset> q_classes;
  std::vector<std::uint64_t> r;
  std::vector<CertificateTerm> terms;
  std::vector<DistributorReport> distributors;
  WitnessReport sanity;
  std::string summary() const;
};

std::string_view to_string(CertificateReport::Verdict v);

/// a/b <= c/d for positive b, d, by cross-multiplication.
bool ratio_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

/// MalformedCertificate on inconsistent shapes or sources that do not match
/// the classes selected by lambda.
CertificateReport verify_certificate(const TransportCertificate& cert, std::size_t n_max);

/// Connected P with #S(P,R) != #S(P,S), |P| <= n_max (0 means max(|R|,|S|)).
/// PreconditionFailed if R and S are isomorphic; NoWitnessFound if the scan
/// comes up empty.
CountWitness witness_search(const Poset& r, const Poset& s, std::size_t n_max = 0);

/// Strict onto maps Q -> Q' proved distributing, in lexicographic order.
std::vector<HomMap> suggest_distributing(const Poset& q, const Poset& qprime);

/// Certificate with one trivial distributor per connected class of R.
/// PreconditionFailed unless every such class also embeds in S.
TransportCertificate trivial_certificate(const Poset& r, const Poset& s);

}  // namespace phl
