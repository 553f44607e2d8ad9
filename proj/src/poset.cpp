#include "phl/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "phl/config.hpp"
#include "phl/error.hpp"

namespace phl {

int cardinality(ElementSet s) { return std::popcount(s); }

ElementSet full_set(std::size_t n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

std::vector<std::size_t> members(ElementSet s) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

ElementSet make_set(std::span<const std::size_t> indices, std::size_t n) {
  ElementSet s = 0;
  for (std::size_t i : indices) {
    if (i >= n) fail(ErrorKind::IndexOutOfRange, "element index " + std::to_string(i) + " >= " + std::to_string(n));
    s |= singleton(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<ElementSet> leq_rows) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) fail(ErrorKind::InvalidParameter, "posets are limited to 64 elements");
  if (leq_rows.size() != n) fail(ErrorKind::InvalidParameter, "relation rows do not match label count");
  {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) fail(ErrorKind::DuplicateLabel, "label '" + l + "' appears twice");
    }
  }
  const ElementSet all = full_set(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((leq_rows[i] & ~all) != 0) fail(ErrorKind::IndexOutOfRange, "relation row refers to a missing element");
    if (!contains(leq_rows[i], i)) {
      fail(ErrorKind::NotAPartialOrder, "reflexivity violated at '" + labels[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : members(leq_rows[i] & ~singleton(i))) {
      if (contains(leq_rows[j], i)) {
        fail(ErrorKind::NotAPartialOrder,
             "antisymmetry violated by ('" + labels[i] + "','" + labels[j] + "')");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : members(leq_rows[i])) {
      const ElementSet missing = leq_rows[j] & ~leq_rows[i];
      if (missing != 0) {
        const std::size_t k = static_cast<std::size_t>(std::countr_zero(missing));
        fail(ErrorKind::NotAPartialOrder, "transitivity violated: '" + labels[i] + "' <= '" + labels[j] +
                                              "' <= '" + labels[k] + "' but not '" + labels[i] + "' <= '" +
                                              labels[k] + "'");
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(leq_rows);
  p.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : members(p.up_[i])) p.down_[j] |= singleton(i);
  }
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Poset::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorKind::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (ElementSet row : up_) total += static_cast<std::size_t>(std::popcount(row));
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : members(strict_up(i))) {
      // j covers i iff no k with i < k < j
      if ((strict_up(i) & strict_down(j)) == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

ElementSet Poset::minimal() const {
  ElementSet s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (strict_down(i) == 0) s |= singleton(i);
  }
  return s;
}

ElementSet Poset::maximal() const {
  ElementSet s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (strict_up(i) == 0) s |= singleton(i);
  }
  return s;
}

std::vector<std::size_t> Poset::levels() const {
  // elements sorted by |down| form a linear extension
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(down_[a]) < std::popcount(down_[b]);
  });
  std::vector<std::size_t> level(size(), 0);
  for (std::size_t x : order) {
    for (std::size_t y : members(strict_down(x))) level[x] = std::max(level[x], level[y] + 1);
  }
  return level;
}

bool Poset::is_antichain(ElementSet s) const {
  for (std::size_t i : members(s)) {
    if ((strict_up(i) & s) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

std::vector<ElementSet> reflexive_transitive_hull(std::vector<ElementSet> rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) rows[i] |= singleton(i);
  // Warshall on bit rows
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(rows[i], k)) rows[i] |= rows[k];
    }
  }
  return rows;
}

}  // namespace

Poset from_pairs(std::vector<std::string> labels,
                 std::span<const std::pair<std::string, std::string>> pairs, PairMode mode) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) fail(ErrorKind::InvalidParameter, "posets are limited to 64 elements");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) {
      fail(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    }
  }
  std::vector<ElementSet> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) rows[i] = singleton(i);
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorKind::UnknownLabel, "pair endpoint '" + a + "' is not a label");
    if (ib == index.end()) fail(ErrorKind::UnknownLabel, "pair endpoint '" + b + "' is not a label");
    rows[ia->second] |= singleton(ib->second);
  }
  if (mode == PairMode::covers) rows = reflexive_transitive_hull(std::move(rows));
  return Poset::from_relation(std::move(labels), std::move(rows));
}

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Poset from_cover_indices(std::vector<std::string> labels,
                         std::initializer_list<std::pair<std::size_t, std::size_t>> covers) {
  std::vector<ElementSet> rows(labels.size(), 0);
  for (auto [a, b] : covers) rows[a] |= singleton(b);
  return Poset::from_relation(std::move(labels), reflexive_transitive_hull(std::move(rows)));
}

}  // namespace

Poset catalog(CatalogName name, std::size_t k) {
  switch (name) {
    case CatalogName::A: {
      if (k > kMaxElements) fail(ErrorKind::InvalidParameter, "A_k needs k <= 64");
      std::vector<ElementSet> rows(k);
      for (std::size_t i = 0; i < k; ++i) rows[i] = singleton(i);
      return Poset::from_relation(numbered_labels(k), std::move(rows));
    }
    case CatalogName::C: {
      if (k < 1 || k > kMaxElements) fail(ErrorKind::InvalidParameter, "C_k needs 1 <= k <= 64");
      std::vector<ElementSet> rows(k);
      for (std::size_t i = 0; i < k; ++i) rows[i] = full_set(k) & ~full_set(i);
      return Poset::from_relation(numbered_labels(k), std::move(rows));
    }
    case CatalogName::V: {
      if (k < 1 || k > kMaxElements) fail(ErrorKind::InvalidParameter, "V_k needs 1 <= k <= 64");
      std::vector<ElementSet> rows(k);
      rows[0] = full_set(k);
      for (std::size_t i = 1; i < k; ++i) rows[i] = singleton(i);
      return Poset::from_relation(numbered_labels(k), std::move(rows));
    }
    case CatalogName::Lambda: {
      if (k < 1 || k > kMaxElements) fail(ErrorKind::InvalidParameter, "Lambda_k needs 1 <= k <= 64");
      std::vector<ElementSet> rows(k);
      for (std::size_t i = 0; i + 1 < k; ++i) rows[i] = singleton(i) | singleton(k - 1);
      rows[k - 1] = singleton(k - 1);
      return Poset::from_relation(numbered_labels(k), std::move(rows));
    }
    case CatalogName::N:
      // a < c > b < d
      return from_cover_indices({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {1, 3}});
    case CatalogName::W:
      // tops a, c, e over bottoms b, d
      return from_cover_indices({"a", "b", "c", "d", "e"}, {{1, 0}, {1, 2}, {3, 2}, {3, 4}});
    case CatalogName::N2:
      return from_cover_indices({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }
  fail(ErrorKind::InvalidParameter, "unknown catalog name");
}

namespace {

Poset catalog_term(std::string_view term) {
  auto number = [&](std::string_view digits) -> std::size_t {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      fail(ErrorKind::InvalidParameter, "bad catalog term '" + std::string(term) + "'");
    }
    return value;
  };
  if (term == "N") return catalog(CatalogName::N);
  if (term == "W") return catalog(CatalogName::W);
  if (term == "N2") return catalog(CatalogName::N2);
  if (term.starts_with("Lambda")) return catalog(CatalogName::Lambda, number(term.substr(6)));
  if (term.starts_with("\xCE\x9B")) return catalog(CatalogName::Lambda, number(term.substr(2)));
  if (term.starts_with("L")) return catalog(CatalogName::Lambda, number(term.substr(1)));
  if (term.starts_with("A")) return catalog(CatalogName::A, number(term.substr(1)));
  if (term.starts_with("C")) return catalog(CatalogName::C, number(term.substr(1)));
  if (term.starts_with("V")) return catalog(CatalogName::V, number(term.substr(1)));
  fail(ErrorKind::InvalidParameter, "unknown catalog term '" + std::string(term) + "'");
}

std::pair<std::vector<std::string>, std::vector<std::string>> disjoint_labels(const Poset& p, const Poset& q) {
  std::set<std::string_view> left(p.labels().begin(), p.labels().end());
  bool collide = false;
  for (const auto& l : q.labels()) {
    if (left.contains(l)) {
      collide = true;
      break;
    }
  }
  std::vector<std::string> lp = p.labels();
  std::vector<std::string> lq = q.labels();
  if (collide) {
    for (auto& l : lp) l += "/0";
    for (auto& l : lq) l += "/1";
  }
  return {std::move(lp), std::move(lq)};
}

Poset glue(const Poset& p, const Poset& q, bool ordinal) {
  if (p.size() + q.size() > kMaxElements) fail(ErrorKind::InvalidParameter, "sum exceeds 64 elements");
  auto [lp, lq] = disjoint_labels(p, q);
  std::vector<std::string> labels = std::move(lp);
  labels.insert(labels.end(), lq.begin(), lq.end());
  const std::size_t offset = p.size();
  const ElementSet q_part = full_set(p.size() + q.size()) & ~full_set(offset);
  std::vector<ElementSet> rows;
  rows.reserve(labels.size());
  for (std::size_t i = 0; i < p.size(); ++i) rows.push_back(p.up(i) | (ordinal ? q_part : 0));
  for (std::size_t j = 0; j < q.size(); ++j) rows.push_back(q.up(j) << offset);
  return Poset::from_relation(std::move(labels), std::move(rows));
}

}  // namespace

Poset catalog(std::string_view spec) {
  std::optional<Poset> result;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t plus = spec.find('+', start);
    if (plus == std::string_view::npos) plus = spec.size();
    Poset term = catalog_term(spec.substr(start, plus - start));
    result = result ? direct_sum(*result, term) : std::move(term);
    start = plus + 1;
  }
  return *result;
}

Poset direct_sum(const Poset& p, const Poset& q) { return glue(p, q, false); }

Poset ordinal_sum(const Poset& p, const Poset& q) { return glue(p, q, true); }

Poset product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  if (n > kMaxElements) fail(ErrorKind::InvalidParameter, "product exceeds 64 elements");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  }
  std::vector<ElementSet> rows(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      for (std::size_t k : members(p.up(i))) {
        rows[i * q.size() + j] |= q.up(j) << (k * q.size());
      }
    }
  }
  return Poset::from_relation(std::move(labels), std::move(rows));
}

Poset induced(const Poset& p, ElementSet subset) {
  if ((subset & ~p.carrier()) != 0) fail(ErrorKind::IndexOutOfRange, "subset exceeds the carrier");
  return permuted(p, members(subset));
}

Poset permuted(const Poset& p, std::span<const std::size_t> order) {
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t x : order) {
    if (x >= p.size()) fail(ErrorKind::IndexOutOfRange, "element index out of range");
    labels.push_back(p.label(x));
  }
  std::vector<ElementSet> rows(order.size(), 0);
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (p.leq(order[a], order[b])) rows[a] |= singleton(b);
    }
  }
  return Poset::from_relation(std::move(labels), std::move(rows));
}

bool is_convex(const Poset& p, ElementSet subset) {
  if ((subset & ~p.carrier()) != 0) fail(ErrorKind::IndexOutOfRange, "subset exceeds the carrier");
  for (std::size_t x : members(subset)) {
    for (std::size_t y : members(subset & p.strict_up(x))) {
      if ((p.up(x) & p.down(y) & ~subset) != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connectivity

ElementSet gamma(const Poset& p, ElementSet subset, std::size_t x) {
  if ((subset & ~p.carrier()) != 0) fail(ErrorKind::IndexOutOfRange, "subset exceeds the carrier");
  if (x >= p.size() || !contains(subset, x)) fail(ErrorKind::IndexOutOfRange, "anchor not in subset");
  ElementSet reached = singleton(x);
  ElementSet frontier = reached;
  while (frontier != 0) {
    ElementSet next = 0;
    for (std::size_t y : members(frontier)) next |= (p.up(y) | p.down(y)) & subset;
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

Partition components(const Poset& p) {
  Partition out;
  ElementSet rest = p.carrier();
  while (rest != 0) {
    const auto x = static_cast<std::size_t>(std::countr_zero(rest));
    const ElementSet block = gamma(p, p.carrier(), x);
    out.blocks.push_back(block);
    rest &= ~block;
  }
  return out;
}

bool is_connected(const Poset& p) { return !p.empty() && gamma(p, p.carrier(), 0) == p.carrier(); }

bool is_connected_subset(const Poset& p, ElementSet subset) {
  if (subset == 0) return false;
  return gamma(p, subset, static_cast<std::size_t>(std::countr_zero(subset))) == subset;
}

// ---------------------------------------------------------------------------
// Canonical form

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (std::uint8_t b : code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

namespace {

// Isomorphism-invariant colouring refined from (|down|, |up|) by the colour
// multisets of strict lower and upper neighbours.
std::vector<std::uint32_t> refined_colors(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> color(n, 0);
  std::size_t classes = 0;
  std::vector<std::vector<std::uint32_t>> sig(n);
  for (std::size_t round = 0;; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = sig[i];
      s.clear();
      if (round == 0) {
        s.push_back(static_cast<std::uint32_t>(cardinality(p.strict_down(i))));
        s.push_back(static_cast<std::uint32_t>(cardinality(p.strict_up(i))));
        continue;
      }
      s.push_back(color[i]);
      std::vector<std::uint32_t> below;
      std::vector<std::uint32_t> above;
      for (std::size_t j : members(p.strict_down(i))) below.push_back(color[j]);
      for (std::size_t j : members(p.strict_up(i))) above.push_back(color[j]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      s.insert(s.end(), below.begin(), below.end());
      s.push_back(UINT32_MAX);
      s.insert(s.end(), above.begin(), above.end());
    }
    std::vector<std::vector<std::uint32_t>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i) {
      color[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    if (round > 0 && distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()) {
    color_ = refined_colors(p);
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    // twins share their strict down- and up-sets and are interchangeable
    twin_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      twin_[i] = i;
      for (std::size_t j = 0; j < i; ++j) {
        if (p.strict_down(i) == p.strict_down(j) && p.strict_up(i) == p.strict_up(j)) {
          twin_[i] = twin_[j];
          break;
        }
      }
    }
    placed_.reserve(n_);
  }

  void run() {
    if (n_ == 0) return;
    place(0, false);
  }

  const std::vector<std::size_t>& best_order() const { return best_order_; }
  const std::vector<std::uint8_t>& best_bits() const { return best_bits_; }

 private:
  // `smaller` is true once the current prefix is already below the best one.
  void place(std::size_t k, bool smaller) {
    if (k == n_) {
      if (!have_best_ || smaller) {
        best_bits_ = bits_;
        best_order_ = placed_;
        have_best_ = true;
        ++updates_;
      }
      return;
    }
    std::vector<std::size_t> tried_twins;
    const std::size_t updates_on_entry = updates_;
    for (std::size_t e = 0; e < n_; ++e) {
      // a new best found below this node shares the current prefix
      if (updates_ != updates_on_entry) smaller = false;
      if (contains(used_, e) || color_[e] != slot_color_[k]) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_[e]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_[e]);

      const std::size_t mark = bits_.size();
      for (std::size_t i = 0; i < k; ++i) {
        bits_.push_back(p_.lt(placed_[i], e) ? 1 : 0);
        bits_.push_back(p_.lt(e, placed_[i]) ? 1 : 0);
      }
      bool next_smaller = smaller || !have_best_;
      bool prune = false;
      if (!next_smaller) {
        for (std::size_t b = mark; b < bits_.size(); ++b) {
          if (bits_[b] != best_bits_[b]) {
            if (bits_[b] < best_bits_[b]) {
              next_smaller = true;
            } else {
              prune = true;
            }
            break;
          }
        }
      }
      if (!prune) {
        used_ |= singleton(e);
        placed_.push_back(e);
        place(k + 1, next_smaller);
        placed_.pop_back();
        used_ &= ~singleton(e);
      }
      bits_.resize(mark);
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> slot_color_;
  std::vector<std::size_t> twin_;
  std::vector<std::size_t> placed_;
  ElementSet used_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> best_bits_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
  std::size_t updates_ = 0;
};

}  // namespace

std::vector<std::size_t> canonical_order(const Poset& p) {
  CanonicalSearch search(p);
  search.run();
  return search.best_order();
}

CanonicalForm canonical_form(const Poset& p) {
  CanonicalSearch search(p);
  search.run();
  CanonicalForm form;
  const std::size_t rel = p.relation_size();
  const std::size_t complement = 0xFFFF - rel;
  form.code.push_back(static_cast<std::uint8_t>(p.size()));
  form.code.push_back(static_cast<std::uint8_t>(complement >> 8));
  form.code.push_back(static_cast<std::uint8_t>(complement & 0xFF));
  const auto& bits = search.best_bits();
  std::uint8_t acc = 0;
  std::size_t filled = 0;
  for (std::uint8_t b : bits) {
    acc = static_cast<std::uint8_t>((acc << 1) | b);
    if (++filled == 8) {
      form.code.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled != 0) form.code.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return form;
}

bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.relation_size() != q.relation_size()) return false;
  return canonical_form(p) == canonical_form(q);
}

Poset canonical_representative(const Poset& p) {
  const auto order = canonical_order(p);
  Poset reordered = permuted(p, order);
  std::vector<ElementSet> rows(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) rows[i] = reordered.up(i);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(std::to_string(i));
  return Poset::from_relation(std::move(labels), std::move(rows));
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

namespace {

std::mutex& enumeration_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::vector<Poset>>& enumeration_cache() {
  static std::vector<std::vector<Poset>> cache;
  return cache;
}

bool is_downset(const Poset& p, ElementSet s) {
  for (std::size_t i : members(s)) {
    if ((p.down(i) & ~s) != 0) return false;
  }
  return true;
}

// Every poset arises from a smaller one by adding a maximal element above a downset.
std::vector<Poset> extend_all(const std::vector<Poset>& smaller, std::size_t n) {
  std::map<CanonicalForm, Poset> found;
  for (const Poset& base : smaller) {
    const std::size_t m = base.size();
    for (ElementSet ideal = 0; ideal <= full_set(m); ++ideal) {
      if (!is_downset(base, ideal)) continue;
      std::vector<ElementSet> rows(n);
      for (std::size_t i = 0; i < m; ++i) rows[i] = base.up(i) | (contains(ideal, i) ? singleton(m) : 0);
      rows[m] = singleton(m);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
      Poset candidate = Poset::from_relation(std::move(labels), std::move(rows));
      CanonicalForm form = canonical_form(candidate);
      if (!found.contains(form)) found.emplace(std::move(form), canonical_representative(candidate));
      if (ideal == full_set(m)) break;
    }
  }
  std::vector<Poset> out;
  out.reserve(found.size());
  for (auto& [form, poset] : found) out.push_back(std::move(poset));
  return out;
}

}  // namespace

const std::vector<Poset>& all_posets(std::size_t n) {
  if (n > config().enumeration_ceiling) {
    fail(ErrorKind::BoundTooLarge, "poset enumeration is capped at n = " +
                                       std::to_string(config().enumeration_ceiling));
  }
  std::lock_guard lock(enumeration_mutex());
  auto& cache = enumeration_cache();
  if (cache.empty()) cache.push_back({Poset{}});
  while (cache.size() <= n) {
    const std::size_t size = cache.size();
    cache.push_back(extend_all(cache.back(), size));
  }
  return cache[n];
}

std::vector<Poset> enumerate_connected(std::size_t n_max) {
  if (n_max == 0) fail(ErrorKind::InvalidParameter, "n_max must be at least 1");
  if (n_max > config().enumeration_ceiling) {
    fail(ErrorKind::BoundTooLarge, "n_max = " + std::to_string(n_max) + " exceeds the ceiling " +
                                       std::to_string(config().enumeration_ceiling));
  }
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const Poset& p : all_posets(n)) {
      if (is_connected(p)) out.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DOT and names

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const Poset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n";
  for (const auto& l : p.labels()) out << "  " << quoted(l) << ";\n";
  const auto level = p.levels();
  const std::size_t height = p.empty() ? 0 : *std::max_element(level.begin(), level.end()) + 1;
  for (std::size_t h = 0; h < height; ++h) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (level[i] == h) out << ' ' << quoted(p.label(i)) << ';';
    }
    out << " }\n";
  }
  for (auto [a, b] : p.covers()) out << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

const std::map<CanonicalForm, std::string>& named_classes() {
  static const std::map<CanonicalForm, std::string> table = [] {
    std::map<CanonicalForm, std::string> t;
    auto add = [&](const Poset& p, std::string name) { t.emplace(canonical_form(p), std::move(name)); };
    add(catalog(CatalogName::A, 1), "A1");
    for (std::size_t k = 2; k <= 10; ++k) add(catalog(CatalogName::C, k), "C" + std::to_string(k));
    for (std::size_t k = 3; k <= 10; ++k) {
      add(catalog(CatalogName::V, k), "V" + std::to_string(k));
      add(catalog(CatalogName::Lambda, k), "Lambda" + std::to_string(k));
    }
    add(catalog(CatalogName::N), "N");
    add(catalog(CatalogName::W), "W");
    add(catalog(CatalogName::N2), "N2");
    return t;
  }();
  return table;
}

}  // namespace

std::string class_name(const Poset& p) {
  if (p.empty()) return "A0";
  if (!is_connected(p)) {
    std::vector<std::pair<CanonicalForm, std::string>> parts;
    for (ElementSet block : components(p).blocks) {
      Poset c = induced(p, block);
      parts.emplace_back(canonical_form(c), class_name(c));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& [form, name] : parts) {
      if (!out.empty()) out += "+";
      out += name;
    }
    return out;
  }
  const CanonicalForm form = canonical_form(p);
  const auto& table = named_classes();
  if (auto it = table.find(form); it != table.end()) return it->second;
  return "P" + std::to_string(p.size()) + "_" + form.hex().substr(6);
}

}  // namespace phl
