#ifndef LIYA_REPRESENTATION_HPP
#define LIYA_REPRESENTATION_HPP

#include "liya/ly_algebra.hpp"

namespace liya {

/// Representation (rho, mu) of a Lie-Yamaguti algebra on a module of
/// dimension vdim. rho[i] is the action of e_i; mu[i][j] the action of the
/// ordered pair (e_i, e_j). Matrices act on coordinate columns.
struct Representation {
  LYAlgebra base;
  int vdim = 0;
  std::vector<Mat> rho;               // n matrices, vdim x vdim
  std::vector<std::vector<Mat>> mu;   // n x n matrices

  Representation() = default;
  Representation(LYAlgebra alg, int m);

  /// Multilinear extensions to arbitrary coefficient vectors over the base.
  Mat rho_of(const std::vector<Rational>& x) const;
  Mat mu_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  Mat derived_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  /// D(e_i,e_j) = mu(e_j,e_i) - mu(e_i,e_j) + [rho(e_i),rho(e_j)] - rho([e_i,e_j]).
  Mat derived(int i, int j) const;

  static Representation zero(const LYAlgebra& alg, int m) { return Representation(alg, m); }
};

/// All D(e_i,e_j) as a matrix grid.
std::vector<std::vector<Mat>> derived_D(const Representation& rep);

/// The five defining conditions plus the three derived identities (reported
/// separately as consequences); pass iff every residual is identically zero.
AxiomReport check_representation(const Representation& rep);
bool representation_holds(const Representation& rep);

/// rho = ad, mu(x,y) = <<., x, y>>; the derived operator is <<x, y, .>>.
Representation adjoint_rep(const LYAlgebra& alg);

/// (V*; rho*, -mu* tau): rho*(x) = -rho(x)^T, new mu(x,y) = mu(y,x)^T.
Representation dual_rep(const Representation& rep);

/// Dual of the adjoint representation.
Representation coadjoint_rep(const LYAlgebra& alg);

/// Structure constants of g (+) V per the semidirect bracket formulas; the
/// result satisfies the Lie-Yamaguti axioms iff rep is a representation.
LYAlgebra semidirect_product(const LYAlgebra& alg, const Representation& rep);

} // namespace liya

#endif
