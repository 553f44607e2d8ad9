#include "phl/factorization.hpp"

#include <algorithm>
#include <numeric>

#include "phl/error.hpp"
#include "phl/hom.hpp"

namespace phl {

std::size_t IsoClassTable::add(const Poset& p) {
  CanonicalForm f = canonical_form(p);
  auto it = index_.find(f);
  if (it != index_.end()) return it->second;
  const std::size_t i = reps_.size();
  index_.emplace(f, i);
  forms_.push_back(std::move(f));
  reps_.push_back(p);
  return i;
}

std::optional<std::size_t> IsoClassTable::find(const Poset& p) const {
  auto it = index_.find(canonical_form(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void IsoClassTable::sort() {
  std::vector<std::size_t> order(reps_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return forms_[a] < forms_[b]; });
  IsoClassTable sorted;
  for (std::size_t i : order) sorted.add(reps_[i]);
  *this = std::move(sorted);
}

IsoClassTable embeddable_connected(const Poset& t) {
  if (t.empty()) fail(ErrorKind::EmptyPoset, "embeddable classes of the empty poset");
  if (t.size() > 24) fail(ErrorKind::SizeOverflow, "subset scan limited to 24 elements");
  IsoClassTable table;
  const ElementSet last = full_set(t.size());
  for (ElementSet s = 1; s != 0 && s <= last; ++s) {
    if (is_connected_subset(t, s)) table.add(canonical_representative(induced(t, s)));
  }
  table.sort();
  return table;
}

std::uint64_t count_sro(const Poset& p, const Poset& q) {
  const std::uint64_t onto = count(HomKind::strict_onto, p, q);
  const std::uint64_t aut = count(HomKind::aut, q, q);
  if (onto % aut != 0) {
    fail(ErrorKind::NonIntegralQuotient,
         std::to_string(onto) + " strict onto maps not divisible by " + std::to_string(aut) + " automorphisms");
  }
  return onto / aut;
}

std::uint64_t iq_count(const Poset& q, const Poset& p, const Poset& t) {
  return count_sro(p, q) * count(HomKind::emb, q, t);
}

namespace {

std::vector<std::string> names_of(const std::vector<Poset>& ps) {
  std::vector<std::string> out;
  for (const Poset& p : ps) out.push_back(class_name(p));
  return out;
}

}  // namespace

FactorMatrices factor_matrices(const std::vector<Poset>& universe, const std::vector<Poset>& targets,
                               const std::vector<std::string>& target_names) {
  if (targets.empty()) fail(ErrorKind::InvalidParameter, "no target posets");
  if (!target_names.empty() && target_names.size() != targets.size()) {
    fail(ErrorKind::InvalidParameter, "target name count differs from target count");
  }
  IsoClassTable expected;
  for (const Poset& t : targets) {
    const IsoClassTable classes = embeddable_connected(t);
    for (const Poset& q : classes.reps()) expected.add(q);
  }
  IsoClassTable given;
  for (const Poset& q : universe) {
    if (given.find(q)) fail(ErrorKind::UniverseMismatch, "class " + class_name(q) + " listed twice");
    given.add(q);
    if (!expected.find(q)) fail(ErrorKind::UniverseMismatch, class_name(q) + " embeds in no target as a connected class");
  }
  if (given.size() != expected.size()) {
    for (const Poset& q : expected.reps()) {
      if (!given.find(q)) fail(ErrorKind::UniverseMismatch, "universe lacks " + class_name(q));
    }
  }

  FactorMatrices m;
  m.universe = universe;
  m.targets = targets;
  const auto row_names = names_of(universe);
  const auto col_names = target_names.empty() ? names_of(targets) : target_names;
  const std::size_t n = universe.size();
  m.sro = CountMatrix{row_names, row_names, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n))};
  m.emb = CountMatrix{row_names, col_names, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(targets.size()))};
  m.strict = m.emb;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.sro.cells[i][j] = count_sro(universe[i], universe[j]);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      m.emb.cells[i][k] = count(HomKind::emb, universe[i], targets[k]);
      m.strict.cells[i][k] = count(HomKind::strict, universe[i], targets[k]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < targets.size(); ++k) {
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < n; ++j) sum += m.sro.cells[i][j] * m.emb.cells[j][k];
      if (sum != m.strict.cells[i][k]) {
        fail(ErrorKind::InternalInvariantViolation, "factorization fails at row " + row_names[i] + ", column " + col_names[k]);
      }
    }
  }
  return m;
}

FactorMatrices factor_matrices(const std::vector<Poset>& targets, const std::vector<std::string>& target_names) {
  IsoClassTable all;
  for (const Poset& t : targets) {
    const IsoClassTable classes = embeddable_connected(t);
    for (const Poset& q : classes.reps()) all.add(q);
  }
  all.sort();
  return factor_matrices(all.reps(), targets, target_names);
}

FactorizationReport verify_factorization(const Poset& p, const Poset& t) {
  if (p.empty() || t.empty()) fail(ErrorKind::EmptyPoset, "factorization needs nonempty posets");
  if (!is_connected(p)) fail(ErrorKind::PreconditionFailed, "factorization identity needs a connected P");
  FactorizationReport report;
  const IsoClassTable classes = embeddable_connected(t);
  for (const Poset& q : classes.reps()) {
    FactorTerm term{class_name(q), q, 0, 0};
    if (q.size() <= p.size()) term.sro = count_sro(p, q);
    term.emb = count(HomKind::emb, q, t);
    report.sum += term.sro * term.emb;
    report.terms.push_back(std::move(term));
  }
  report.strict_count = count(HomKind::strict, p, t);
  report.holds = report.sum == report.strict_count;
  return report;
}

}  // namespace phl
