#ifndef LIYA_COHOMOLOGY_HPP
#define LIYA_COHOMOLOGY_HPP

#include "liya/representation.hpp"

namespace liya {

/// Cochain of the Yamaguti complex with coefficients in a module of
/// dimension vdim over an algebra of dimension dim.
///
/// Degree 1: a single linear map g -> V stored as `linear` (vdim x dim).
/// Degree p = n+1 >= 2: a pair (f, g) with
///   f : (wedge^2 g)^n -> V        stored densely over basis tuples
///       fpart shape [dim,dim]*n + [vdim], skew in each adjacent (a,b) pair;
///   g : (wedge^2 g)^n (x) g -> V  gpart shape [dim,dim]*n + [dim, vdim].
struct Cochain {
  int degree = 1;
  int dim = 0;
  int vdim = 0;
  Mat linear;     // degree 1 only
  Tensor fpart;   // degree >= 2
  Tensor gpart;   // degree >= 2

  static Cochain one(const Mat& f);
  static Cochain pair(int degree, int dim, int vdim);

  bool is_zero() const;

  /// Multilinear evaluation of the f-component on degree-1 wedge arguments
  /// given as 2(n) coefficient vectors (x1,y1,...,xn,yn).
  std::vector<Rational> eval_f(const std::vector<std::vector<Rational>>& args) const;
  /// Same for the g-component, with a trailing plain vector z.
  std::vector<Rational> eval_g(const std::vector<std::vector<Rational>>& args,
                               const std::vector<Rational>& z) const;
};

/// Coboundary map of the Yamaguti complex. Degree 1 uses the two displayed
/// low-degree formulas; higher degrees use the general pair formula with the
/// slot action X_k o X_l = <<x_k,y_k,x_l>> ^ y_l + x_l ^ <<x_k,y_k,y_l>>.
Cochain coboundary(const Cochain& c, const Representation& rep);

/// True iff both 1-cocycle conditions hold, equivalently coboundary(f) = 0.
bool is_one_cocycle(const Mat& f, const Representation& rep);

/// Both Leibniz rules for the two brackets; equals is_one_cocycle with
/// respect to the adjoint representation.
bool is_derivation(const Mat& d, const LYAlgebra& alg);

} // namespace liya

#endif
