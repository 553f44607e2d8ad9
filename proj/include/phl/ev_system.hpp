#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phl/hom.hpp"
#include "phl/poset.hpp"

namespace phl {

/// Triple (anchor, D, U) with D below and U above the anchor, both strict.
struct EVElement {
  std::size_t anchor = 0;
  ElementSet down = 0;
  ElementSet up = 0;
  auto operator<=>(const EVElement&) const = default;
  bool operator==(const EVElement&) const = default;
};

/// All triples over a base poset, ordered by (anchor, down, up) with the sets
/// compared as integers. The relation <+ is evaluated on demand.
class EVSystem {
 public:
  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<EVElement>& elements() const { return elements_; }
  const EVElement& element(std::size_t i) const { return elements_.at(i); }

  /// a <+ b iff a.anchor in b.down and b.anchor in a.up.
  bool lt_plus(std::size_t a, std::size_t b) const;
  bool leq_plus(std::size_t a, std::size_t b) const { return a == b || lt_plus(a, b); }
  /// Indices b with a <+ b, ascending.
  std::vector<std::size_t> successors(std::size_t a) const;

  /// Index range [first, last) of the fibre over x.
  std::pair<std::size_t, std::size_t> fiber_range(std::size_t x) const;
  /// Index of a triple; nullopt if it is not a valid triple of this system.
  std::optional<std::size_t> find(const EVElement& e) const;
  /// Same as find but UnknownElement when absent.
  std::size_t index_of(const EVElement& e) const;
  /// Index of (x, strict down of x, strict up of x).
  std::size_t base_point(std::size_t x) const;

  friend EVSystem build_ev(const Poset& p);

 private:
  std::shared_ptr<const Poset> base_;
  std::vector<EVElement> elements_;
  std::vector<std::size_t> offsets_;
};

/// EmptyPoset for an empty base; SizeOverflow above the configured ceiling.
EVSystem build_ev(const Poset& p);

/// The fibre over x; UnknownElement if x is not in the base.
std::vector<EVElement> ev_at(const EVSystem& e, std::size_t x);
std::vector<EVElement> ev_at(const EVSystem& e, std::string_view label);

/// (xi(x), xi(strict down x), xi(strict up x)) for each x; NotStrict unless xi is strict.
std::vector<EVElement> alpha(const HomMap& xi);
/// Same, as indices into the EV-system of xi's codomain.
std::vector<std::size_t> alpha_indices(const HomMap& xi, const EVSystem& cod_ev);

struct EVMap {
  std::shared_ptr<const EVSystem> source;
  std::shared_ptr<const EVSystem> target;
  std::vector<std::size_t> map;
};

/// a <+ b implies m(a) <=+ m(b).
bool is_ev_hom(const EVMap& m);
/// a <+ b implies m(a) <+ m(b) (so in particular m(a) != m(b)).
bool is_strict_ev_hom(const EVMap& m);
bool is_injective(const EVMap& m);

EVMap identity_ev_map(std::shared_ptr<const EVSystem> e);
/// (x, D, U) -> (f(x), f(D), f(U)); UnknownElement if some image is not a
/// triple of the target.
EVMap pushforward(std::shared_ptr<const EVSystem> source, std::shared_ptr<const EVSystem> target,
                  std::span<const std::size_t> f);

struct Prop1Violation {
  Poset p;
  std::vector<std::size_t> xi;
  std::size_t x = 0;
  std::string reason;
};

struct Prop1Report {
  bool passed = false;
  std::size_t bound = 0;
  std::size_t posets_checked = 0;
  std::size_t maps_checked = 0;
  bool eta_injective = true;
  std::optional<Prop1Violation> violation;
};

/// Bounded check of the sufficient condition for a strong scheme induced by
/// eps : E(R) -> E(S), over every connected P with at most n_max elements.
/// PreconditionFailed if eps is not strict, merges triples with different
/// anchors, or z_plus misses more than one element of R.
Prop1Report check_prop1(const EVMap& eps, ElementSet z_plus, std::size_t n_max);

}  // namespace phl
