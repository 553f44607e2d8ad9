#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phl/poset.hpp"

namespace phl {

/// Isomorphism classes with one representative each, in insertion order.
class IsoClassTable {
 public:
  /// Adds the class of p unless present; returns its position.
  std::size_t add(const Poset& p);
  std::optional<std::size_t> find(const Poset& p) const;
  std::size_t size() const { return reps_.size(); }
  const Poset& rep(std::size_t i) const { return reps_.at(i); }
  const std::vector<Poset>& reps() const& { return reps_; }
  std::vector<Poset> reps() && { return std::move(reps_); }
  const CanonicalForm& form(std::size_t i) const { return forms_.at(i); }
  /// Reorders the classes by canonical code.
  void sort();

 private:
  std::vector<Poset> reps_;
  std::vector<CanonicalForm> forms_;
  std::map<CanonicalForm, std::size_t> index_;
};

/// Classes of connected induced subposets of t, sorted by canonical code
/// (hence by size first). EmptyPoset for empty t; SizeOverflow above 24 elements.
IsoClassTable embeddable_connected(const Poset& t);

/// #S°(P,Q) / #Aut(Q). NonIntegralQuotient if the division leaves a remainder.
std::uint64_t count_sro(const Poset& p, const Poset& q);
/// #S°_r(P,Q) * #Emb(Q,T): strict maps P -> T whose image is isomorphic to Q.
std::uint64_t iq_count(const Poset& q, const Poset& p, const Poset& t);

struct CountMatrix {
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  std::vector<std::vector<std::uint64_t>> cells;
};

struct FactorMatrices {
  std::vector<Poset> universe;
  std::vector<Poset> targets;
  CountMatrix sro;     // universe x universe
  CountMatrix emb;     // universe x targets
  CountMatrix strict;  // universe x targets
};

/// Rows follow `universe` as given. UniverseMismatch unless the universe is,
/// up to isomorphism and without repeats, the union of the connected
/// embeddable classes of the targets. Target names are taken from
/// `target_names` when given, else from class_name.
FactorMatrices factor_matrices(const std::vector<Poset>& universe, const std::vector<Poset>& targets,
                               const std::vector<std::string>& target_names = {});
/// Universe computed from the targets, sorted by canonical code.
FactorMatrices factor_matrices(const std::vector<Poset>& targets, const std::vector<std::string>& target_names = {});

struct FactorTerm {
  std::string name;
  Poset q;
  std::uint64_t sro = 0;
  std::uint64_t emb = 0;
};

struct FactorizationReport {
  std::vector<FactorTerm> terms;
  std::uint64_t sum = 0;
  std::uint64_t strict_count = 0;
  bool holds = false;
};

/// Compares sum over Q of #S°_r(P,Q) * #Emb(Q,T) with #S(P,T).
/// PreconditionFailed unless P is connected.
FactorizationReport verify_factorization(const Poset& p, const Poset& t);

}  // namespace phl
