#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "phl/construction.hpp"
#include "phl/gscheme.hpp"
#include "phl/poset.hpp"

namespace phl::fixtures {

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// A printed matrix triple: universe rows in printed order and two targets.
struct MatrixFixture {
  std::vector<std::string> universe;  // catalog names
  std::vector<std::string> targets;   // catalog names
  Matrix sro;
  Matrix emb;
  Matrix strict;
};

/// R = N, S = A1 + C3.
MatrixFixture matrices_n_a1c3();
/// R = W, S = A1 + N2.
MatrixFixture matrices_w_a1n2();

std::vector<Poset> universe_of(const MatrixFixture& f);
std::vector<Poset> targets_of(const MatrixFixture& f);

/// Trivial distributors on A1 and C2, and (V3, Lambda3, N) -> C3.
TransportCertificate certificate_n_a1c3();
/// Trivial distributors on A1, C2, V3, Lambda3, and (N, N, W) -> N2.
TransportCertificate certificate_w_a1n2();
/// All-trivial certificate for C2 + C2 against A1 + C3.
TransportCertificate certificate_c2c2_a1c3();

/// P = C2 (p0 < p1), A = {p1}; Q = C2 (q0 < q1), B = {q0}; beta(p1) = q0.
ConstructionSpec spec_c2c2();

/// Replays every fixture and prints one line per check; true if all pass.
bool selftest(std::ostream& out, std::size_t distributor_bound = 6);

}  // namespace phl::fixtures
