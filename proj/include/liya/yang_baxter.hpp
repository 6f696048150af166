#ifndef LIYA_YANG_BAXTER_HPP
#define LIYA_YANG_BAXTER_HPP

#include "liya/cobracket.hpp"
#include "liya/representation.hpp"

namespace liya {

/// An element r of g (x) g: r = sum coeffs(i,j) e_i (x) e_j.
struct TwoTensor {
  LYAlgebra alg;
  Mat coeffs;

  TwoTensor() = default;
  TwoTensor(LYAlgebra a, Mat c) : alg(std::move(a)), coeffs(std::move(c)) {}

  bool is_skew() const;
};

/// Matrix of the map g* -> g with <r#(xi), eta> = <r, xi (x) eta>;
/// column i is the image of e_i*.
Mat r_sharp(const TwoTensor& r);

/// The double sum [r12,r13] + [r12,r23] + [r13,r23] expanded over the
/// binary structure constants; an element of (x)^3 g.
Tensor bracket_rr(const TwoTensor& r);

/// The triple self-bracket of r as an element of (x)^4 g, in the form the
/// transfer theorem's proof computations pin down:
///   sum_{ijk}  -<<y_k,x_i,x_j>> (x) y_j (x) y_i (x) x_k
///              + y_j (x) <<y_k,x_i,x_j>> (x) y_i (x) x_k
///              + y_i (x) y_j (x) <<x_i,x_j,y_k>> (x) x_k
///              + y_i (x) y_j (x) y_k (x) <<x_i,x_j,x_k>>.
Tensor triple_rrr(const TwoTensor& r);

struct CybeReport {
  Tensor binary_residual;   // bracket_rr
  Tensor ternary_residual;  // triple_rrr
  bool pass = false;
};

/// Both tensor equations of the classical Yang-Baxter equation.
CybeReport is_cybe_solution(const TwoTensor& r);

/// Residuals of the two relative Rota-Baxter identities for T : V -> g
/// (columns of T indexed by the module basis), on all basis tuples of V.
AxiomReport check_relative_rb(const Mat& T, const Representation& rep);
bool relative_rb_holds(const Mat& T, const Representation& rep);

struct EquivalenceReport {
  bool lhs = false;
  bool rhs = false;
  bool agree() const { return lhs == rhs; }
};

/// is_cybe_solution(r) vs check_relative_rb(r_sharp(r), coadjoint); the two
/// booleans must coincide for skew r.
EquivalenceReport cybe_rb_equivalence(const TwoTensor& r);

/// delta(x) = sum_i [x,x_i] (x) y_i + x_i (x) [x,y_i] and the matching omega,
/// with the splits delta1/delta2 and omega1/omega2/omega3 populated.
Cobracket induced_cobrackets(const TwoTensor& r);

/// Structure constants on g* from the coadjoint formulas
///   [xi,eta]_* = ad*_{r#xi} eta - ad*_{r#eta} xi
///   <<xi,eta,zeta>>_* = L*(r#xi,r#eta)zeta - R*(r#zeta,r#eta)xi + R*(r#zeta,r#xi)eta.
/// For skew r this coincides with the dualization of induced_cobrackets.
LYAlgebra induced_dual_brackets(const TwoTensor& r);

/// For nondegenerate skew r: whether omega(x,y) = <(r#)^{-1} x, y> satisfies
/// both closedness identities. Throws std::domain_error if r# is singular.
bool symplectic_check(const TwoTensor& r);

/// r = Tbar - sigma12(Tbar) on g x|_{rho*, -mu* tau} V*, with
/// Tbar = sum_i v_i* (x) T(v_i); g coordinates first, then V*.
TwoTensor lift_rb_to_rmatrix(const Mat& T, const Representation& rep);

/// Quadratic structure: symmetric invariant bilinear form on an algebra.
struct QuadraticLY {
  LYAlgebra alg;
  Mat form;  // n x n, symmetric

  QuadraticLY() = default;
  QuadraticLY(LYAlgebra a, Mat b) : alg(std::move(a)), form(std::move(b)) {}
};

/// Symmetry, nondegeneracy, and the two invariance identities.
AxiomReport check_quadratic(const QuadraticLY& q);
bool quadratic_holds(const QuadraticLY& q);

/// Matrix of the induced map g -> g*, <Bnat(x), y> = B(x,y).
Mat b_natural(const QuadraticLY& q);

/// The intertwiner identities of Bnat between the adjoint and coadjoint
/// representations, plus the derived-operator identity.
AxiomReport b_natural_intertwiners(const QuadraticLY& q);

struct StsReport {
  bool coadjoint_rb = false;  // T relative RB wrt coadjoint
  bool adjoint_rb = false;    // T o Bnat relative RB wrt adjoint
  bool agree() const { return coadjoint_rb == adjoint_rb; }
};

/// Transfer across the form: T : g* -> g against T o Bnat : g -> g.
StsReport sts_transfer(const QuadraticLY& q, const Mat& T);

/// Deterministic enumeration of all skew two-tensors whose strictly-upper
/// entries take values from `values` with at most max_support of them
/// nonzero, filtered through is_cybe_solution.
std::vector<TwoTensor> search_rmatrix(const LYAlgebra& alg, const std::vector<Rational>& values,
                                      int max_support);

} // namespace liya

#endif
