#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phl {

/// Subset of a poset's carrier, bit i set iff element i is a member.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr ElementSet singleton(std::size_t i) { return ElementSet{1} << i; }
constexpr bool contains(ElementSet s, std::size_t i) { return ((s >> i) & 1U) != 0; }
int cardinality(ElementSet s);
ElementSet full_set(std::size_t n);
std::vector<std::size_t> members(ElementSet s);

/// Builds a set from explicit indices; IndexOutOfRange if any index >= n.
ElementSet make_set(std::span<const std::size_t> indices, std::size_t n);

/// Finite poset: distinct labels plus a closed reflexive, antisymmetric and
/// transitive relation. Immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Validates the three order axioms and label distinctness.
  /// leq_rows[i] holds {j : i <= j}.
  static Poset from_relation(std::vector<std::string> labels, std::vector<ElementSet> leq_rows);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of a label; UnknownLabel if absent.
  std::size_t index(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return contains(up_[i], j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  ElementSet up(std::size_t i) const { return up_[i]; }
  ElementSet down(std::size_t i) const { return down_[i]; }
  ElementSet strict_up(std::size_t i) const { return up_[i] & ~singleton(i); }
  ElementSet strict_down(std::size_t i) const { return down_[i] & ~singleton(i); }
  ElementSet carrier() const { return full_set(size()); }

  /// Number of pairs (i, j) with i <= j.
  std::size_t relation_size() const;
  /// Cover pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  ElementSet minimal() const;
  ElementSet maximal() const;
  /// Length of the longest chain ending in each element (minimal elements: 0).
  std::vector<std::size_t> levels() const;
  bool is_antichain(ElementSet s) const;

  bool operator==(const Poset& other) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

enum class PairMode { full, covers };

/// covers mode takes the reflexive-transitive hull; full mode requires the
/// pairs to already form a partial order (reflexive pairs may be omitted).
Poset from_pairs(std::vector<std::string> labels,
                 std::span<const std::pair<std::string, std::string>> pairs, PairMode mode);

enum class CatalogName { A, C, V, Lambda, N, W, N2 };

Poset catalog(CatalogName name, std::size_t k = 0);
/// Parses "A1", "C3", "V3", "Lambda3" (also "L3"), "N", "W", "N2", and sums
/// of these joined by '+', e.g. "A1+C3".
Poset catalog(std::string_view spec);

Poset direct_sum(const Poset& p, const Poset& q);
Poset ordinal_sum(const Poset& p, const Poset& q);
Poset product(const Poset& p, const Poset& q);
/// Poset induced on `subset`, elements kept in ascending index order.
Poset induced(const Poset& p, ElementSet subset);
/// Same poset with elements reordered: element k of the result is order[k].
Poset permuted(const Poset& p, std::span<const std::size_t> order);

bool is_convex(const Poset& p, ElementSet subset);

/// Disjoint nonempty blocks covering the carrier; blocks sorted by their least
/// member, members ascending.
struct Partition {
  std::vector<ElementSet> blocks;
  bool operator==(const Partition&) const = default;
};

/// Elements connected with x by a zigzag line inside `subset`.
ElementSet gamma(const Poset& p, ElementSet subset, std::size_t x);
Partition components(const Poset& p);
/// False for the empty poset.
bool is_connected(const Poset& p);
bool is_connected_subset(const Poset& p, ElementSet subset);

/// Byte code identifying the isomorphism class. Leading bytes are the size and
/// the complement of the relation size, so sorting codes sorts by
/// (size ascending, relation size descending) first.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
  std::string hex() const;
};

CanonicalForm canonical_form(const Poset& p);
/// Element order realizing the canonical code: result[k] is the element placed at position k.
std::vector<std::size_t> canonical_order(const Poset& p);
bool is_isomorphic(const Poset& p, const Poset& q);
/// Same class as p, elements in canonical order and labelled "0".."n-1".
Poset canonical_representative(const Poset& p);

/// All isomorphism classes with exactly n elements, as canonical
/// representatives sorted by canonical code. Cached; n <= ceiling.
const std::vector<Poset>& all_posets(std::size_t n);
/// One representative per class of connected posets with 1..n_max elements,
/// ordered by (size, canonical code). BoundTooLarge if n_max exceeds the
/// configured ceiling.
std::vector<Poset> enumerate_connected(std::size_t n_max);

/// Hasse diagram in DOT, nodes in label order, ranked by level.
std::string to_dot(const Poset& p, std::string_view graph_name = "P");

/// Name of a recognised catalog class ("A1", "C3", "V3", "Lambda3", "N",
/// "W", "N2", sums joined with '+'), or "P<n>_<hex>" otherwise.
std::string class_name(const Poset& p);

}  // namespace phl
