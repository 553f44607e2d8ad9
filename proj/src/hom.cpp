#include "phl/hom.hpp"

#include <algorithm>
#include <bit>

#include "phl/config.hpp"
#include "phl/error.hpp"

namespace phl {

std::string_view to_string(HomKind kind) {
  switch (kind) {
    case HomKind::hom: return "hom";
    case HomKind::strict: return "strict";
    case HomKind::strict_onto: return "strict_onto";
    case HomKind::emb: return "emb";
    case HomKind::aut: return "aut";
  }
  return "?";
}

HomKind parse_hom_kind(std::string_view name) {
  if (name == "hom") return HomKind::hom;
  if (name == "strict") return HomKind::strict;
  if (name == "strict_onto" || name == "strict-onto") return HomKind::strict_onto;
  if (name == "emb") return HomKind::emb;
  if (name == "aut") return HomKind::aut;
  fail(ErrorKind::InvalidParameter, "unknown homomorphism kind '" + std::string(name) + "'");
}

HomFlags classify(const Poset& dom, const Poset& cod, std::span<const std::size_t> map) {
  const std::size_t n = dom.size();
  if (map.size() != n) fail(ErrorKind::DomainMismatch, "map length differs from domain size");
  for (std::size_t v : map) {
    if (v >= cod.size()) fail(ErrorKind::IndexOutOfRange, "map value outside the codomain");
  }
  HomFlags f;
  f.is_hom = true;
  f.is_strict = true;
  f.is_injective = true;
  bool reflects = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (dom.leq(x, y) && !cod.leq(map[x], map[y])) f.is_hom = false;
      if (x != y && dom.leq(x, y) && map[x] == map[y]) f.is_strict = false;
      if (x != y && map[x] == map[y]) f.is_injective = false;
      if (cod.leq(map[x], map[y]) && !dom.leq(x, y)) reflects = false;
    }
  }
  f.is_strict = f.is_strict && f.is_hom;
  std::vector<bool> hit(cod.size(), false);
  for (std::size_t v : map) hit[v] = true;
  f.is_onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  f.is_embedding = f.is_hom && reflects;
  f.is_automorphism = f.is_embedding && f.is_onto && dom == cod;
  return f;
}

bool has_kind(const HomFlags& f, HomKind kind) {
  switch (kind) {
    case HomKind::hom: return f.is_hom;
    case HomKind::strict: return f.is_strict;
    case HomKind::strict_onto: return f.is_strict && f.is_onto;
    case HomKind::emb: return f.is_embedding;
    case HomKind::aut: return f.is_embedding && f.is_onto;
  }
  return false;
}

HomMap::HomMap(std::shared_ptr<const Poset> dom, std::shared_ptr<const Poset> cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  flags_ = classify(*dom_, *cod_, map_);
}

HomMap::HomMap(const Poset& dom, const Poset& cod, std::vector<std::size_t> map)
    : HomMap(std::make_shared<const Poset>(dom), std::make_shared<const Poset>(cod), std::move(map)) {}

HomMap compose(const HomMap& g, const HomMap& f) {
  if (!(f.cod() == g.dom())) fail(ErrorKind::DomainMismatch, "cannot compose: codomain and domain differ");
  std::vector<std::size_t> m(f.map().size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(x));
  return HomMap(f.dom_ptr(), g.cod_ptr(), std::move(m));
}

// ---------------------------------------------------------------------------
// Backtracking engine

namespace {

class Search {
 public:
  Search(HomKind kind, const Poset& p, const Poset& q) : kind_(kind), p_(p), q_(q) {
    const std::size_t n = p.size();
    map_.assign(n, 0);
    hits_.assign(q.size(), 0);
    below_.resize(n);
    above_.resize(n);
    apart_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const ElementSet earlier = full_set(k);
      below_[k] = p.strict_down(k) & earlier;
      above_[k] = p.strict_up(k) & earlier;
      apart_[k] = earlier & ~p.up(k) & ~p.down(k);
    }
    strict_ = kind != HomKind::hom;
    injective_ = kind == HomKind::emb || kind == HomKind::aut;
    onto_ = kind == HomKind::strict_onto || kind == HomKind::aut;
    missing_ = q.size();
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (kind_ == HomKind::aut && p_.size() != q_.size()) return;
    if (injective_ && p_.size() > q_.size()) return;
    if (onto_ && p_.size() < q_.size()) return;
    extend(0, visit);
  }

 private:
  template <class Visit>
  bool extend(std::size_t k, Visit& visit) {
    if (k == p_.size()) return visit(std::span<const std::size_t>(map_));
    ElementSet cand = q_.carrier();
    for (std::size_t y : members(below_[k])) cand &= strict_ ? q_.strict_up(map_[y]) : q_.up(map_[y]);
    for (std::size_t y : members(above_[k])) cand &= strict_ ? q_.strict_down(map_[y]) : q_.down(map_[y]);
    if (injective_) {
      for (std::size_t y : members(apart_[k])) cand &= ~(q_.up(map_[y]) | q_.down(map_[y]));
    }
    const std::size_t remaining_after = p_.size() - k - 1;
    while (cand != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      map_[k] = v;
      if (hits_[v]++ == 0) --missing_;
      const bool feasible = !onto_ || missing_ <= remaining_after;
      bool keep_going = true;
      if (feasible) keep_going = extend(k + 1, visit);
      if (--hits_[v] == 0) ++missing_;
      if (!keep_going) return false;
    }
    return true;
  }

  HomKind kind_;
  const Poset& p_;
  const Poset& q_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> hits_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> apart_;
  bool strict_ = false;
  bool injective_ = false;
  bool onto_ = false;
  std::size_t missing_ = 0;
};

void require_nonempty(const Poset& p, const Poset& q) {
  if (p.empty() || q.empty()) fail(ErrorKind::EmptyPoset, "homomorphism sets need nonempty posets");
}

}  // namespace

void for_each_map(HomKind kind, const Poset& p, const Poset& q, const MapVisitor& visit) {
  require_nonempty(p, q);
  Search search(kind, p, q);
  search.run([&](std::span<const std::size_t> m) { return visit(m); });
}

std::vector<HomMap> enumerate(HomKind kind, const Poset& p, const Poset& q) {
  require_nonempty(p, q);
  auto dom = std::make_shared<const Poset>(p);
  auto cod = std::make_shared<const Poset>(q);
  std::vector<HomMap> out;
  Search search(kind, p, q);
  search.run([&](std::span<const std::size_t> m) {
    out.emplace_back(dom, cod, std::vector<std::size_t>(m.begin(), m.end()));
    return true;
  });
  return out;
}

std::uint64_t count(HomKind kind, const Poset& p, const Poset& q) {
  require_nonempty(p, q);
  std::uint64_t total = 0;
  Search search(kind, p, q);
  search.run([&](std::span<const std::size_t>) {
    ++total;
    return true;
  });
  return total;
}

std::uint64_t brute_force_count(HomKind kind, const Poset& p, const Poset& q, std::uint64_t ceiling) {
  require_nonempty(p, q);
  if (ceiling == 0) ceiling = config().oracle_ceiling;
  std::uint64_t total_maps = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (total_maps > ceiling / q.size()) {
      fail(ErrorKind::OracleTooLarge, "|Q|^|P| exceeds the oracle ceiling " + std::to_string(ceiling));
    }
    total_maps *= q.size();
  }
  if (total_maps > ceiling) fail(ErrorKind::OracleTooLarge, "|Q|^|P| exceeds the oracle ceiling");
  std::vector<std::size_t> map(p.size(), 0);
  std::uint64_t hits = 0;
  for (std::uint64_t step = 0; step < total_maps; ++step) {
    if (has_kind(classify(p, q, map), kind)) ++hits;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (++map[i] < q.size()) break;
      map[i] = 0;
    }
  }
  return hits;
}

bool pointwise_leq(const HomMap& f, const HomMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorKind::DomainMismatch, "pointwise order needs maps with equal domain and codomain");
  }
  for (std::size_t x = 0; x < f.map().size(); ++x) {
    if (!f.cod().leq(f(x), g(x))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Blocks and quotient

ElementSet gamma_block(const Poset& p, std::span<const std::size_t> map, std::size_t x) {
  if (map.size() != p.size()) fail(ErrorKind::DomainMismatch, "map length differs from domain size");
  if (x >= p.size()) fail(ErrorKind::IndexOutOfRange, "anchor out of range");
  ElementSet fibre = 0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (map[y] == map[x]) fibre |= singleton(y);
  }
  return gamma(p, fibre, x);
}

GammaBlock gamma_block(const HomMap& xi, std::size_t x) {
  return GammaBlock{x, gamma_block(xi.dom(), xi.map(), x)};
}

Partition gamma_partition(const Poset& p, std::span<const std::size_t> map) {
  Partition out;
  ElementSet rest = p.carrier();
  while (rest != 0) {
    const auto x = static_cast<std::size_t>(std::countr_zero(rest));
    const ElementSet block = gamma_block(p, map, x);
    out.blocks.push_back(block);
    rest &= ~block;
  }
  return out;
}

QuotientFactorization quotient(const HomMap& xi) {
  if (!xi.is_hom()) fail(ErrorKind::PreconditionFailed, "quotient needs a homomorphism");
  const Poset& p = xi.dom();
  Partition blocks = gamma_partition(p, xi.map());
  const std::size_t m = blocks.blocks.size();
  std::vector<std::size_t> block_of(p.size());
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t x : members(blocks.blocks[b])) block_of[x] = b;
  }
  // base relation: some member of a lies below some member of b
  std::vector<ElementSet> rows(m, 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y : members(p.up(x))) rows[block_of[x]] |= singleton(block_of[y]);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (contains(rows[i], k)) rows[i] |= rows[k];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : members(rows[i] & ~singleton(i))) {
      if (contains(rows[j], i)) {
        fail(ErrorKind::InternalInvariantViolation, "block relation hull is not antisymmetric");
      }
    }
  }
  std::vector<std::string> labels;
  for (ElementSet block : blocks.blocks) {
    std::string l = "{";
    for (std::size_t x : members(block)) {
      if (l.size() > 1) l += ",";
      l += p.label(x);
    }
    labels.push_back(l + "}");
  }
  auto q = std::make_shared<const Poset>(Poset::from_relation(std::move(labels), std::move(rows)));
  std::vector<std::size_t> iota_map(m);
  for (std::size_t b = 0; b < m; ++b) iota_map[b] = xi(static_cast<std::size_t>(std::countr_zero(blocks.blocks[b])));
  HomMap pi(xi.dom_ptr(), q, block_of);
  HomMap iota(q, xi.cod_ptr(), std::move(iota_map));
  if (!pi.is_hom() || !iota.is_strict()) {
    fail(ErrorKind::InternalInvariantViolation, "quotient maps lost their homomorphism class");
  }
  return QuotientFactorization{std::move(blocks), std::move(q), std::move(pi), std::move(iota)};
}

std::uint64_t gamma_class_count(const HomMap& xi, const Poset& t) {
  if (t.empty()) fail(ErrorKind::EmptyPoset, "target poset is empty");
  const auto f = quotient(xi);
  return count(HomKind::strict, *f.quotient, t);
}

std::uint64_t brute_force_gamma_class_count(const HomMap& xi, const Poset& t) {
  if (t.empty()) fail(ErrorKind::EmptyPoset, "target poset is empty");
  const Partition target = gamma_partition(xi.dom(), xi.map());
  std::uint64_t total = 0;
  for_each_map(HomKind::hom, xi.dom(), t, [&](std::span<const std::size_t> zeta) {
    if (gamma_partition(xi.dom(), zeta) == target) ++total;
    return true;
  });
  return total;
}

}  // namespace phl
