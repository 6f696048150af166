#ifndef LIYA_PRE_LY_HPP
#define LIYA_PRE_LY_HPP

#include "liya/yang_baxter.hpp"

namespace liya {

/// Pre-Lie-Yamaguti algebra: a binary product * and a ternary product
/// {.,.,.} with no symmetry assumed.
///   star[i][j][k]      = e_k coefficient of e_i * e_j
///   triple[i][j][k][l] = e_l coefficient of {e_i, e_j, e_k}
struct PreLYAlgebra {
  int dim = 0;
  Tensor star;    // [n,n,n]
  Tensor triple;  // [n,n,n,n]

  PreLYAlgebra() = default;
  explicit PreLYAlgebra(int n)
      : dim(n), star(Index{n, n, n}), triple(Index{n, n, n, n}) {}

  std::vector<Rational> product(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  std::vector<Rational> triple_of(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y,
                                  const std::vector<Rational>& z) const;
  /// Commutator x*y - y*x.
  std::vector<Rational> commutator_of(const std::vector<Rational>& x,
                                      const std::vector<Rational>& y) const;
  /// Associator (x,y,z) = (x*y)*z - x*(y*z).
  std::vector<Rational> associator(const std::vector<Rational>& x,
                                   const std::vector<Rational>& y,
                                   const std::vector<Rational>& z) const;
  /// {x,y,z}_D = {z,y,x} - {z,x,y} + (y,x,z) - (x,y,z); computed, never stored.
  std::vector<Rational> triple_d(const std::vector<Rational>& x,
                                 const std::vector<Rational>& y,
                                 const std::vector<Rational>& z) const;
};

/// The five defining identities, evaluated on all basis tuples.
AxiomReport check_pre_ly_axioms(const PreLYAlgebra& a);
bool pre_ly_axioms_hold(const PreLYAlgebra& a);

/// Sub-adjacent algebra: [x,y] = x*y - y*x and
/// <<x,y,z>> = {x,y,z}_D + {x,y,z} - {y,x,z}.
LYAlgebra sub_adjacent(const PreLYAlgebra& a);

/// The action Ad_x z = x*z, R(x,y)z = {z,x,y} of the sub-adjacent algebra on
/// the underlying space; its derived operator is {x,y,.}_D, and the identity
/// map is a relative Rota-Baxter operator for it.
Representation ad_r_representation(const PreLYAlgebra& a);

struct CanonicalRMatrix {
  TwoTensor r;   // on the semidirect product A^c x| A*
  Mat sym_part;  // Tbar + sigma12(Tbar): the hyperbolic pairing of A with A*
};

/// r = Tbar - sigma12(Tbar) = sum_i e_i (x) e_i* - e_i* (x) e_i on
/// A^c x|_{Ad*, -R* tau} A*, together with the symmetric counterpart of the
/// identity operator's tensor.
CanonicalRMatrix canonical_rmatrix(const PreLYAlgebra& a);

/// Deterministic exhaustive search over sparse structure constants: all
/// pre-Lie-Yamaguti algebras of the given dimension whose nonzero star/triple
/// entries (at most max_support of them in total) take values in `values`.
std::vector<PreLYAlgebra> search_pre_ly(int dim, const std::vector<Rational>& values,
                                        int max_support, std::size_t limit = 0);

} // namespace liya

#endif
