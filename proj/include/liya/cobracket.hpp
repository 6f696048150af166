#ifndef LIYA_COBRACKET_HPP
#define LIYA_COBRACKET_HPP

#include <optional>

#include "liya/ly_algebra.hpp"

namespace liya {

/// Cobracket data on an algebra of dimension n:
///   delta[i][a][b]    = e_a (x) e_b coefficient of delta(e_i)
///   omega[i][a][b][c] = e_a (x) e_b (x) e_c coefficient of omega(e_i)
/// Splits, when present, must sum to the totals.
struct Cobracket {
  LYAlgebra alg;
  Tensor delta;  // [n,n,n]
  Tensor omega;  // [n,n,n,n]
  std::optional<Tensor> delta1, delta2;           // [n,n,n]
  std::optional<Tensor> omega1, omega2, omega3;   // [n,n,n,n]

  Cobracket() = default;
  explicit Cobracket(LYAlgebra a)
      : alg(std::move(a)),
        delta(Index{alg.dim, alg.dim, alg.dim}),
        omega(Index{alg.dim, alg.dim, alg.dim, alg.dim}) {}

  bool has_splits() const { return delta1 && delta2 && omega1 && omega2 && omega3; }
  /// True iff the stored splits sum to delta and omega.
  bool splits_consistent() const;
};

} // namespace liya

#endif
