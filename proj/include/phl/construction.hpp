#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phl/ev_system.hpp"
#include "phl/gscheme.hpp"
#include "phl/poset.hpp"

namespace phl {

/// Inputs of the grafting construction: A convex in P, B convex in Q and
/// beta an isomorphism P|A -> Q|B given as P index -> Q index.
struct ConstructionSpec {
  Poset p;
  Poset q;
  ElementSet a = 0;
  ElementSet b = 0;
  std::map<std::size_t, std::size_t> beta;
};

using RelationPart = std::vector<std::pair<std::size_t, std::size_t>>;

/// T lives on W = P \ A followed by the carrier of Q. Labels are suffixed
/// with "/0" (from P) and "/1" (from Q) only when they collide.
struct ConstructionResult {
  Poset t;
  Poset a_prime;                   // P|A
  Poset s;                         // A' + T, A' first
  RelationPart leq_o, leq_q, leq_d, leq_u;  // pairs of T indices
  std::vector<std::size_t> w;      // P indices of W in T order
  std::vector<std::size_t> psi;    // P index -> index in s
};

/// NotConvex for A or B, NotIsomorphism for beta. The assembled relation is
/// validated as a partial order; the four parts are checked to be disjoint.
ConstructionResult build_T(const ConstructionSpec& spec);

struct EmbObligation {
  std::string name;
  Poset e;
  std::uint64_t emb_r = 0;  // #Emb(E, P+Q)
  std::uint64_t emb_s = 0;  // #Emb(E, A'+T)
  bool holds = false;
};

struct Theorem3Report {
  ConstructionResult result;
  Poset r;  // P + Q
  std::vector<EmbObligation> obligations;
  WitnessReport scan;
};

/// Builds T, then checks that every connected class embedding in P+Q also
/// embeds in A'+T at least as often, and scans strict counts up to n_max.
/// ProofObligationFailed names the first violating class.
Theorem3Report theorem3_pipeline(const ConstructionSpec& spec, std::size_t n_max);

struct EpsilonReport {
  ConstructionResult result;
  Poset r;  // P + Q
  EVMap eps;
  bool injective = false;
  bool homomorphism = false;
  bool strict = false;
  bool anchors_preserved = false;
  bool passed() const { return injective && homomorphism && strict && anchors_preserved; }
};

/// The map E(P+Q) -> E(A'+T): identity on E(Q) and on the isolated triples
/// (a, {}, {}) with a in A, pushforward along psi elsewhere.
/// EmptyPoset for empty A; NotAntichain unless A is an antichain.
EpsilonReport build_epsilon_antichain(const ConstructionSpec& spec);

/// All isomorphisms P|A -> Q|B as P index -> Q index maps, lexicographic.
std::vector<std::map<std::size_t, std::size_t>> list_isomorphisms(const Poset& p, ElementSet a, const Poset& q,
                                                                  ElementSet b);

}  // namespace phl
