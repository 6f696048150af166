#ifndef LIYA_LY_ALGEBRA_HPP
#define LIYA_LY_ALGEBRA_HPP

#include <string>
#include <vector>

#include "liya/tensor.hpp"

namespace liya {

/// One verified identity: residual tensor indexed by (basis tuple, output
/// coordinate); pass means the residual vanishes identically.
struct CheckResult {
  std::string name;
  bool pass = false;
  Tensor residual;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Lie-Yamaguti algebra as structure constants:
///   binary[i][j][k]  = e_k coefficient of [e_i, e_j]
///   ternary[i][j][k][l] = e_l coefficient of <<e_i, e_j, e_k>>
/// The binary bracket is skew; the ternary bracket is skew in its first two
/// arguments. Validity beyond shape is reported by check_ly_axioms.
struct LYAlgebra {
  int dim = 0;
  Tensor binary;   // [n,n,n]
  Tensor ternary;  // [n,n,n,n]

  LYAlgebra() = default;
  explicit LYAlgebra(int n)
      : dim(n), binary(Index{n, n, n}), ternary(Index{n, n, n, n}) {}

  /// Sets the e_k coefficient c of [e_i,e_j] together with the skew mirror.
  void set_binary(int i, int j, int k, const Rational& c) {
    binary.at({i, j, k}) = c;
    binary.at({j, i, k}) = -c;
  }
  /// Sets the e_l coefficient c of <<e_i,e_j,e_k>> together with the skew mirror.
  void set_ternary(int i, int j, int k, int l, const Rational& c) {
    ternary.at({i, j, k, l}) = c;
    ternary.at({j, i, k, l}) = -c;
  }

  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  std::vector<Rational> triple(const std::vector<Rational>& x,
                               const std::vector<Rational>& y,
                               const std::vector<Rational>& z) const;

  /// Matrix of ad_{e_i} = [e_i, .].
  Mat ad(int i) const;
  /// Matrix of z -> <<z, e_i, e_j>>.
  Mat right_triple(int i, int j) const;
  /// Matrix of z -> <<e_i, e_j, z>>.
  Mat left_triple(int i, int j) const;

  static LYAlgebra abelian(int n) { return LYAlgebra(n); }
};

/// Skew-symmetry of both brackets plus the four defining identities,
/// each evaluated on all basis tuples. Exact-zero pass, no tolerance.
AxiomReport check_ly_axioms(const LYAlgebra& alg);

/// Fast variant of check_ly_axioms: stops at the first nonzero residual.
bool ly_axioms_hold(const LYAlgebra& alg);

/// Lifts a Lie algebra to a Lie-Yamaguti algebra via the nested commutator
/// <<x,y,z>> := [[x,y],z]. Throws std::invalid_argument if the input is not
/// skew or fails the Jacobi identity.
LYAlgebra from_lie_algebra(const Tensor& lie_binary);

/// True iff f preserves both brackets: f[x,y] = [fx,fy] and
/// f<<x,y,z>> = <<fx,fy,fz>> on all basis tuples.
bool check_homomorphism(const Mat& f, const LYAlgebra& src, const LYAlgebra& dst);

} // namespace liya

#endif
