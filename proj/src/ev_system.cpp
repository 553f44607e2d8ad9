#include "phl/ev_system.hpp"

#include <bit>
#include <set>

#include "phl/config.hpp"
#include "phl/error.hpp"

namespace phl {

namespace {

// Parallel bit extract: the bits of s selected by mask, packed to the right.
std::uint64_t extract(ElementSet s, ElementSet mask) {
  std::uint64_t out = 0;
  int pos = 0;
  while (mask != 0) {
    const int b = std::countr_zero(mask);
    if (contains(s, static_cast<std::size_t>(b))) out |= std::uint64_t{1} << pos;
    ++pos;
    mask &= mask - 1;
  }
  return out;
}

ElementSet deposit(std::uint64_t v, ElementSet mask) {
  ElementSet out = 0;
  int pos = 0;
  while (mask != 0) {
    const int b = std::countr_zero(mask);
    if ((v >> pos) & 1U) out |= singleton(static_cast<std::size_t>(b));
    ++pos;
    mask &= mask - 1;
  }
  return out;
}

ElementSet image(ElementSet s, std::span<const std::size_t> f) {
  ElementSet out = 0;
  for (std::size_t x : members(s)) out |= singleton(f[x]);
  return out;
}

}  // namespace

bool EVSystem::lt_plus(std::size_t a, std::size_t b) const {
  const EVElement& ea = elements_[a];
  const EVElement& eb = elements_[b];
  return contains(eb.down, ea.anchor) && contains(ea.up, eb.anchor);
}

std::vector<std::size_t> EVSystem::successors(std::size_t a) const {
  std::vector<std::size_t> out;
  const EVElement& ea = elements_[a];
  for (std::size_t y : members(ea.up)) {
    for (std::size_t b = offsets_[y]; b < offsets_[y + 1]; ++b) {
      if (contains(elements_[b].down, ea.anchor)) out.push_back(b);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> EVSystem::fiber_range(std::size_t x) const {
  if (x >= base_->size()) fail(ErrorKind::UnknownElement, "element index " + std::to_string(x) + " not in base");
  return {offsets_[x], offsets_[x + 1]};
}

std::optional<std::size_t> EVSystem::find(const EVElement& e) const {
  if (e.anchor >= base_->size()) return std::nullopt;
  const ElementSet dmask = base_->strict_down(e.anchor);
  const ElementSet umask = base_->strict_up(e.anchor);
  if ((e.down & ~dmask) != 0 || (e.up & ~umask) != 0) return std::nullopt;
  const int ubits = cardinality(umask);
  return offsets_[e.anchor] + (extract(e.down, dmask) << ubits) + extract(e.up, umask);
}

std::size_t EVSystem::index_of(const EVElement& e) const {
  auto i = find(e);
  if (!i) fail(ErrorKind::UnknownElement, "triple is not an element of the EV-system");
  return *i;
}

std::size_t EVSystem::base_point(std::size_t x) const {
  if (x >= base_->size()) fail(ErrorKind::UnknownElement, "element index not in base");
  return index_of(EVElement{x, base_->strict_down(x), base_->strict_up(x)});
}

EVSystem build_ev(const Poset& p) {
  if (p.empty()) fail(ErrorKind::EmptyPoset, "EV-system of the empty poset");
  const std::size_t ceiling = config().ev_ceiling;
  std::size_t total = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const int bits = cardinality(p.strict_down(x)) + cardinality(p.strict_up(x));
    if (bits >= 63 || (std::size_t{1} << bits) > ceiling || total + (std::size_t{1} << bits) > ceiling) {
      fail(ErrorKind::SizeOverflow, "EV-system exceeds " + std::to_string(ceiling) + " elements");
    }
    total += std::size_t{1} << bits;
  }
  EVSystem e;
  e.base_ = std::make_shared<const Poset>(p);
  e.elements_.reserve(total);
  e.offsets_.push_back(0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const ElementSet dmask = p.strict_down(x);
    const ElementSet umask = p.strict_up(x);
    const std::uint64_t dn = std::uint64_t{1} << cardinality(dmask);
    const std::uint64_t un = std::uint64_t{1} << cardinality(umask);
    for (std::uint64_t d = 0; d < dn; ++d) {
      for (std::uint64_t u = 0; u < un; ++u) {
        e.elements_.push_back(EVElement{x, deposit(d, dmask), deposit(u, umask)});
      }
    }
    e.offsets_.push_back(e.elements_.size());
  }
  return e;
}

std::vector<EVElement> ev_at(const EVSystem& e, std::size_t x) {
  const auto [first, last] = e.fiber_range(x);
  return {e.elements().begin() + static_cast<std::ptrdiff_t>(first),
          e.elements().begin() + static_cast<std::ptrdiff_t>(last)};
}

std::vector<EVElement> ev_at(const EVSystem& e, std::string_view label) {
  auto x = e.base().find(label);
  if (!x) fail(ErrorKind::UnknownElement, "no element labelled '" + std::string(label) + "'");
  return ev_at(e, *x);
}

std::vector<EVElement> alpha(const HomMap& xi) {
  if (!xi.is_strict()) fail(ErrorKind::NotStrict, "alpha needs a strict homomorphism");
  const Poset& p = xi.dom();
  const Poset& q = xi.cod();
  std::vector<EVElement> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[x] = EVElement{xi(x), image(p.strict_down(x), xi.map()), image(p.strict_up(x), xi.map())};
    if ((out[x].down & ~q.strict_down(out[x].anchor)) != 0 || (out[x].up & ~q.strict_up(out[x].anchor)) != 0) {
      fail(ErrorKind::InternalInvariantViolation, "alpha left the EV-system of the codomain");
    }
  }
  return out;
}

std::vector<std::size_t> alpha_indices(const HomMap& xi, const EVSystem& cod_ev) {
  if (!(xi.cod() == cod_ev.base())) fail(ErrorKind::DomainMismatch, "EV-system is not over the codomain");
  const auto triples = alpha(xi);
  std::vector<std::size_t> out(triples.size());
  for (std::size_t x = 0; x < triples.size(); ++x) out[x] = cod_ev.index_of(triples[x]);
  return out;
}

namespace {

template <class Pred>
bool all_related_pairs(const EVMap& m, Pred pred) {
  const EVSystem& s = *m.source;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b : s.successors(a)) {
      if (!pred(m.map[a], m.map[b])) return false;
    }
  }
  return true;
}

void check_shape(const EVMap& m) {
  if (!m.source || !m.target || m.map.size() != m.source->size()) {
    fail(ErrorKind::DomainMismatch, "EV map length differs from its source");
  }
  for (std::size_t v : m.map) {
    if (v >= m.target->size()) fail(ErrorKind::IndexOutOfRange, "EV map value outside the target");
  }
}

}  // namespace

bool is_ev_hom(const EVMap& m) {
  check_shape(m);
  return all_related_pairs(m, [&](std::size_t a, std::size_t b) { return m.target->leq_plus(a, b); });
}

bool is_strict_ev_hom(const EVMap& m) {
  check_shape(m);
  return all_related_pairs(m, [&](std::size_t a, std::size_t b) { return m.target->lt_plus(a, b); });
}

bool is_injective(const EVMap& m) {
  check_shape(m);
  std::vector<bool> hit(m.target->size(), false);
  for (std::size_t v : m.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

EVMap identity_ev_map(std::shared_ptr<const EVSystem> e) {
  std::vector<std::size_t> map(e->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return EVMap{e, e, std::move(map)};
}

EVMap pushforward(std::shared_ptr<const EVSystem> source, std::shared_ptr<const EVSystem> target,
                  std::span<const std::size_t> f) {
  if (f.size() != source->base().size()) fail(ErrorKind::DomainMismatch, "base map length differs from source");
  for (std::size_t v : f) {
    if (v >= target->base().size()) fail(ErrorKind::IndexOutOfRange, "base map value outside target");
  }
  std::vector<std::size_t> map(source->size());
  for (std::size_t i = 0; i < source->size(); ++i) {
    const EVElement& e = source->element(i);
    map[i] = target->index_of(EVElement{f[e.anchor], image(e.down, f), image(e.up, f)});
  }
  return EVMap{std::move(source), std::move(target), std::move(map)};
}

Prop1Report check_prop1(const EVMap& eps, ElementSet z_plus, std::size_t n_max) {
  check_shape(eps);
  const Poset& r = eps.source->base();
  if ((z_plus & ~r.carrier()) != 0) fail(ErrorKind::PreconditionFailed, "Z+ is not a subset of R");
  if (cardinality(r.carrier() & ~z_plus) > 1) {
    fail(ErrorKind::PreconditionFailed, "more than one element of R lies outside Z+");
  }
  if (!is_strict_ev_hom(eps)) fail(ErrorKind::PreconditionFailed, "eps is not a strict homomorphism");
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  // anchor in R of the preimages of each target triple
  std::vector<std::size_t> pre_anchor(eps.target->size(), none);
  for (std::size_t a = 0; a < eps.source->size(); ++a) {
    const std::size_t anchor = eps.source->element(a).anchor;
    std::size_t& slot = pre_anchor[eps.map[a]];
    if (slot != none && slot != anchor) {
      fail(ErrorKind::PreconditionFailed, "eps identifies triples with different anchors");
    }
    slot = anchor;
  }

  Prop1Report report;
  report.bound = n_max;
  auto record = [&](const Poset& p, std::span<const std::size_t> xi, std::size_t x, std::string reason) {
    if (!report.violation) {
      report.violation = Prop1Violation{p, {xi.begin(), xi.end()}, x, std::move(reason)};
    }
  };
  auto r_ptr = eps.source->base_ptr();
  auto s_ptr = eps.target->base_ptr();
  for (const Poset& p : enumerate_connected(n_max)) {
    ++report.posets_checked;
    auto p_ptr = std::make_shared<const Poset>(p);
    std::set<std::vector<std::size_t>> etas;
    for_each_map(HomKind::strict, p, r, [&](std::span<const std::size_t> xi_map) {
      ++report.maps_checked;
      HomMap xi(p_ptr, r_ptr, {xi_map.begin(), xi_map.end()});
      const auto a_xi = alpha_indices(xi, *eps.source);
      std::vector<std::size_t> eta(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) eta[x] = eps.target->element(eps.map[a_xi[x]]).anchor;
      HomMap eta_map(p_ptr, s_ptr, eta);
      if (!eta_map.is_strict()) {
        record(p, xi_map, 0, "induced map is not strict");
        return true;
      }
      if (!etas.insert(eta).second) report.eta_injective = false;
      const auto a_eta = alpha_indices(eta_map, *eps.target);
      for (std::size_t x = 0; x < p.size(); ++x) {
        const std::size_t anchor = pre_anchor[a_eta[x]];
        if (anchor != none && anchor != xi_map[x]) {
          record(p, xi_map, x, "image triple lies over the wrong fibre");
        }
        if (anchor == none && contains(z_plus, xi_map[x])) {
          record(p, xi_map, x, "triple outside the image over an element of Z+");
        }
      }
      for (std::size_t v : members(z_plus)) {
        for (std::size_t x = 0; x < p.size(); ++x) {
          if ((xi_map[x] == v) != (pre_anchor[a_eta[x]] == v)) {
            record(p, xi_map, x, "fibre of " + r.label(v) + " not recovered");
          }
        }
      }
      return true;
    });
  }
  report.passed = !report.violation && report.eta_injective;
  return report;
}

}  // namespace phl
