#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "phl/poset.hpp"

namespace phl {

/// Homomorphism classes: all homomorphisms, strict, strict and onto,
/// embeddings, and isomorphisms (automorphisms when both sides coincide).
enum class HomKind { hom, strict, strict_onto, emb, aut };

std::string_view to_string(HomKind kind);
/// Parses "hom", "strict", "strict_onto" (or "strict-onto"), "emb", "aut".
HomKind parse_hom_kind(std::string_view name);

struct HomFlags {
  bool is_hom = false;
  bool is_strict = false;
  bool is_onto = false;
  bool is_injective = false;
  bool is_embedding = false;
  bool is_automorphism = false;
};

/// Classifies a total map straight from the definitions (no pruning).
HomFlags classify(const Poset& dom, const Poset& cod, std::span<const std::size_t> map);
bool has_kind(const HomFlags& flags, HomKind kind);

/// Total map between two carriers with its class flags computed on construction.
class HomMap {
 public:
  HomMap(std::shared_ptr<const Poset> dom, std::shared_ptr<const Poset> cod, std::vector<std::size_t> map);
  HomMap(const Poset& dom, const Poset& cod, std::vector<std::size_t> map);

  const Poset& dom() const { return *dom_; }
  const Poset& cod() const { return *cod_; }
  const std::shared_ptr<const Poset>& dom_ptr() const { return dom_; }
  const std::shared_ptr<const Poset>& cod_ptr() const { return cod_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const HomFlags& flags() const { return flags_; }

  bool is_hom() const { return flags_.is_hom; }
  bool is_strict() const { return flags_.is_strict; }
  bool is_onto() const { return flags_.is_onto; }
  bool is_embedding() const { return flags_.is_embedding; }
  bool is_automorphism() const { return flags_.is_automorphism; }

 private:
  std::shared_ptr<const Poset> dom_;
  std::shared_ptr<const Poset> cod_;
  std::vector<std::size_t> map_;
  HomFlags flags_;
};

/// g after f; DomainMismatch unless f.cod() == g.dom().
HomMap compose(const HomMap& g, const HomMap& f);

/// Called once per qualifying map in lexicographic order; return false to stop.
using MapVisitor = std::function<bool(std::span<const std::size_t>)>;

/// Backtracking enumeration along P's index order with prefix pruning.
/// EmptyPoset if either side is empty.
void for_each_map(HomKind kind, const Poset& p, const Poset& q, const MapVisitor& visit);
std::vector<HomMap> enumerate(HomKind kind, const Poset& p, const Poset& q);
std::uint64_t count(HomKind kind, const Poset& p, const Poset& q);

/// Filters all |Q|^|P| maps by definition. OracleTooLarge above `ceiling`
/// (0 means the configured oracle ceiling).
std::uint64_t brute_force_count(HomKind kind, const Poset& p, const Poset& q, std::uint64_t ceiling = 0);

/// f(x) <= g(x) for all x; DomainMismatch unless both share dom and cod.
bool pointwise_leq(const HomMap& f, const HomMap& g);

struct GammaBlock {
  std::size_t anchor;
  ElementSet members;
};

/// Zigzag component of x inside the fibre of xi(x).
GammaBlock gamma_block(const HomMap& xi, std::size_t x);
/// Same for a bare map on P's carrier.
ElementSet gamma_block(const Poset& p, std::span<const std::size_t> map, std::size_t x);
/// The partition {G_xi(x)}, blocks ordered by least member.
Partition gamma_partition(const Poset& p, std::span<const std::size_t> map);

/// Factorization xi = iota o pi through the block poset.
struct QuotientFactorization {
  Partition blocks;
  std::shared_ptr<const Poset> quotient;
  HomMap pi;
  HomMap iota;
};

/// Requires xi to be a homomorphism. Throws InternalInvariantViolation if the
/// hull of the block relation is not antisymmetric.
QuotientFactorization quotient(const HomMap& xi);

/// Number of zeta in H(P,T) with the same block partition as xi, computed as
/// the strict count from the quotient poset into T.
std::uint64_t gamma_class_count(const HomMap& xi, const Poset& t);
/// The same number by enumerating H(P,T) and comparing partitions.
std::uint64_t brute_force_gamma_class_count(const HomMap& xi, const Poset& t);

}  // namespace phl
