#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/fixtures.hpp"

using namespace liya;
using namespace liya::testing;

namespace {

std::mt19937_64 rng(31337);

TwoTensor dim2_skew(const Rational& k) {
  Mat r(2, 2);
  r(0, 1) = k;
  r(1, 0) = -k;
  return TwoTensor(dim2_example(), r);
}

// pairing of covectors (given in dual coordinates) against a tensor
Rational pair_covectors(const Tensor& t, const std::vector<std::vector<Rational>>& covs) {
  return t.contract_pairing(covs).at({});
}

// relative Rota-Baxter defect vectors, written out independently of
// check_relative_rb for the proof-identity cross-checks
std::vector<Rational> rb2_defect(const Representation& rep, const Mat& T,
                                 const std::vector<Rational>& u, const std::vector<Rational>& v) {
  auto Tu = T.apply(u), Tv = T.apply(v);
  return sub(rep.base.bracket(Tu, Tv),
             T.apply(sub(rep.rho_of(Tu).apply(v), rep.rho_of(Tv).apply(u))));
}

std::vector<Rational> rb3_defect(const Representation& rep, const Mat& T,
                                 const std::vector<Rational>& u, const std::vector<Rational>& v,
                                 const std::vector<Rational>& w) {
  auto Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
  auto inner = add(rep.derived_of(Tu, Tv).apply(w),
                   sub(rep.mu_of(Tv, Tw).apply(u), rep.mu_of(Tu, Tw).apply(v)));
  return sub(rep.base.triple(Tu, Tv, Tw), T.apply(inner));
}

} // namespace

TEST_CASE("sharp map of the dim2 skew tensor") {
  for (const Rational& k : {Rational(1), Rational(-2), Rational(5)}) {
    TwoTensor r = dim2_skew(k);
    Mat sharp = r_sharp(r);
    // <r#(e1*), e2*> = <r, e1* (x) e2*> = k, so r#(e1*) = k e2 and r#(e2*) = -k e1
    CHECK(sharp.apply(basis_vec(2, 0)) == scaled(basis_vec(2, 1), k));
    CHECK(sharp.apply(basis_vec(2, 1)) == scaled(basis_vec(2, 0), -k));
    CHECK(sharp.det() == k * k);
  }
  CHECK(r_sharp(TwoTensor(dim2_example(), Mat(2, 2))).is_zero());
}

TEST_CASE("self-brackets vanish on abelian algebras") {
  LYAlgebra ab = LYAlgebra::abelian(3);
  for (int k = 0; k < 5; ++k) {
    TwoTensor r(ab, random_matrix(rng, 3, 3));
    CHECK(bracket_rr(r).is_zero());
    CHECK(triple_rrr(r).is_zero());
  }
}

TEST_CASE("binary self-bracket of a non-skew tensor") {
  // r = e1 (x) e2 on the dim2 example: only [y_i, x_j] = [e2,e1] = -e1 survives,
  // giving [r,r] = -e1 (x) e1 (x) e2
  Mat c(2, 2);
  c(0, 1) = Rational(1);
  TwoTensor r(dim2_example(), c);
  Tensor br = bracket_rr(r);
  CHECK(br.at({0, 0, 1}) == Rational(-1));
  CHECK(br.nonzeros().size() == 1);
  CHECK_FALSE(is_cybe_solution(r).pass);
}

TEST_CASE("the dim2 skew family solves the Yang-Baxter equation") {
  for (const Rational& k :
       {Rational(-2), Rational(-1), Rational(1), Rational(2), Rational(5), Rational(1, 3)}) {
    CybeReport rep = is_cybe_solution(dim2_skew(k));
    CHECK(rep.pass);
  }
  CHECK(is_cybe_solution(TwoTensor(dim2_example(), Mat(2, 2))).pass);
}

TEST_CASE("relative Rota-Baxter operators: base cases") {
  LYAlgebra g = dim2_example();
  Representation co = coadjoint_rep(g);
  CHECK(check_relative_rb(Mat(2, 2), co).pass());
  CHECK(relative_rb_holds(r_sharp(dim2_skew(Rational(1))), co));
  CHECK_THROWS_AS(check_relative_rb(Mat(3, 2), co), std::invalid_argument);
}

TEST_CASE("equivalence of the tensor equations and the coadjoint operator") {
  int solutions = 0;
  for (const auto& g : algebra_pool()) {
    for (int k = 0; k < 15; ++k) {
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      EquivalenceReport eq = cybe_rb_equivalence(r);
      CHECK(eq.agree());
      solutions += eq.lhs;
    }
  }
  CHECK(solutions > 0);
}

TEST_CASE("proof identities pin the self-bracket pairings, T = r-sharp") {
  // ternary: <xi (x) eta (x) kappa, [r,r]> = <kappa, O2(xi,eta)>
  // quaternary: <xi (x) eta (x) zeta (x) kappa, <<r,r,r>>> = -<kappa, O1(xi,eta,zeta)>
  int nonzero3 = 0, nonzero4 = 0;
  for (const auto& g : algebra_pool()) {
    Representation co = coadjoint_rep(g);
    std::vector<std::vector<Rational>> e;
    for (int i = 0; i < g.dim; ++i) e.push_back(basis_vec(g.dim, i));
    for (int k = 0; k < 6; ++k) {
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      Mat T = r_sharp(r);
      Tensor b3 = bracket_rr(r), b4 = triple_rrr(r);
      nonzero3 += !b3.is_zero();
      nonzero4 += !b4.is_zero();
      for (int x = 0; x < g.dim; ++x)
        for (int y = 0; y < g.dim; ++y) {
          auto o2 = rb2_defect(co, T, e[x], e[y]);
          for (int z = 0; z < g.dim; ++z) {
            CHECK(pair_covectors(b3, {e[x], e[y], e[z]}) == o2[z]);
            auto o1 = rb3_defect(co, T, e[x], e[y], e[z]);
            for (int w = 0; w < g.dim; ++w)
              CHECK(pair_covectors(b4, {e[x], e[y], e[z], e[w]}) == -o1[w]);
          }
        }
    }
  }
  // the sample must exercise nonzero residuals on both sides
  CHECK(nonzero3 > 0);
  CHECK(nonzero4 > 0);
}

TEST_CASE("induced cobrackets of the dim2 skew tensor") {
  TwoTensor r = dim2_skew(Rational(1));
  Cobracket c = induced_cobrackets(r);
  REQUIRE(c.has_splits());
  CHECK(c.splits_consistent());
  // delta(e1) = 0, delta(e2) = -e1 (x) e2 + e2 (x) e1 by direct expansion
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(c.delta.at({0, a, b}) == Rational(0));
  CHECK(c.delta.at({1, 0, 1}) == Rational(-1));
  CHECK(c.delta.at({1, 1, 0}) == Rational(1));
}

TEST_CASE("property: skewness of the induced components") {
  for (const auto& g : algebra_pool()) {
    for (int k = 0; k < 6; ++k) {
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      Cobracket c = induced_cobrackets(r);
      const int n = g.dim;
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            // sigma12 delta1(x) = -delta2(x)
            CHECK(c.delta1->at({i, b, a}) == -c.delta2->at({i, a, b}));
            for (int d = 0; d < n; ++d) {
              CHECK(c.omega1->at({i, b, a, d}) == -c.omega2->at({i, a, b, d}));
              CHECK(c.omega3->at({i, b, a, d}) == -c.omega3->at({i, a, b, d}));
            }
          }
    }
  }
}

TEST_CASE("dual brackets: coadjoint route equals dualized cobrackets") {
  for (const auto& g : algebra_pool()) {
    for (int k = 0; k < 5; ++k) {
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      Cobracket c = induced_cobrackets(r);
      LYAlgebra via_ops = induced_dual_brackets(r);
      LYAlgebra via_dual = dual_constants(c);
      CHECK(via_ops.binary == via_dual.binary);
      CHECK(via_ops.ternary == via_dual.ternary);
    }
  }
  // abelian: everything zero
  TwoTensor r0(LYAlgebra::abelian(2), random_skew_matrix(rng, 2));
  CHECK(induced_dual_brackets(r0).binary.is_zero());
}

TEST_CASE("symplectic criterion agrees with the tensor equations") {
  CHECK(symplectic_check(dim2_skew(Rational(1))));
  CHECK(symplectic_check(dim2_skew(Rational(5))));
  int tested = 0;
  for (const auto& g : algebra_pool()) {
    for (int k = 0; k < 12; ++k) {
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      if (r.coeffs.det() == Rational(0)) continue;
      ++tested;
      CHECK(symplectic_check(r) == is_cybe_solution(r).pass);
    }
  }
  CHECK(tested > 0);
  CHECK_THROWS_AS(symplectic_check(TwoTensor(dim2_example(), Mat(2, 2))), std::domain_error);
}

TEST_CASE("lifting operators to two-tensors on the semidirect product") {
  LYAlgebra g = dim2_example();
  Representation co = coadjoint_rep(g);

  TwoTensor lift0 = lift_rb_to_rmatrix(Mat(2, 2), co);
  CHECK(lift0.coeffs.is_zero());
  CHECK(is_cybe_solution(lift0).pass);

  // verified operator: the sharp map of a solution
  Mat T = r_sharp(dim2_skew(Rational(1)));
  CHECK(relative_rb_holds(T, co));
  TwoTensor lift = lift_rb_to_rmatrix(T, co);
  CHECK(lift.alg.dim == 4);
  CHECK(lift.is_skew());
  CHECK(is_cybe_solution(lift).pass);

  // perturbed operator: the lift fails
  Mat bad = T;
  bad(0, 0) += Rational(1);
  if (!relative_rb_holds(bad, co)) CHECK_FALSE(is_cybe_solution(lift_rb_to_rmatrix(bad, co)).pass);
}

TEST_CASE("property: lift solves the equation iff the operator is Rota-Baxter") {
  for (const auto& g : algebra_pool()) {
    if (g.dim > 3) continue;
    for (const Representation& rep : {adjoint_rep(g), coadjoint_rep(g)}) {
      for (int k = 0; k < 6; ++k) {
        Mat T = random_matrix(rng, g.dim, g.dim, -1, 1);
        CHECK(relative_rb_holds(T, rep) == is_cybe_solution(lift_rb_to_rmatrix(T, rep)).pass);
      }
    }
  }
}

TEST_CASE("quadratic form checks") {
  // abelian with the identity form: trivially invariant
  QuadraticLY q0(LYAlgebra::abelian(2), Mat::identity(2));
  CHECK(check_quadratic(q0).pass());

  // the dim2 example with the identity form: B([e1,e2],e1) = 1 but -B(e2,[e1,e1]) = 0
  QuadraticLY q1(dim2_example(), Mat::identity(2));
  AxiomReport rep = check_quadratic(q1);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.find("binary-invariance")->pass);
  CHECK(rep.find("binary-invariance")->residual.at({0, 1, 0}) == Rational(1));

  // degenerate form
  QuadraticLY q2(LYAlgebra::abelian(2), Mat(2, 2));
  CHECK_FALSE(check_quadratic(q2).pass());
}

TEST_CASE("the hyperbolic form on the trivial double is invariant") {
  LYAlgebra g = dim2_example();
  LYAlgebra dbl = semidirect_product(g, coadjoint_rep(g));
  Mat B(4, 4);
  for (int i = 0; i < 2; ++i) {
    B(i, 2 + i) = Rational(1);
    B(2 + i, i) = Rational(1);
  }
  QuadraticLY q(dbl, B);
  CHECK(check_quadratic(q).pass());
  CHECK(b_natural(q) == B);
  CHECK(b_natural_intertwiners(q).pass());
}

TEST_CASE("transfer across the form on the trivial double") {
  LYAlgebra g = dim2_example();
  LYAlgebra dbl = semidirect_product(g, coadjoint_rep(g));
  Mat B(4, 4);
  for (int i = 0; i < 2; ++i) {
    B(i, 2 + i) = Rational(1);
    B(2 + i, i) = Rational(1);
  }
  QuadraticLY q(dbl, B);

  StsReport zero = sts_transfer(q, Mat(4, 4));
  CHECK(zero.coadjoint_rb);
  CHECK(zero.adjoint_rb);

  int rb_count = 0;
  for (int k = 0; k < 20; ++k) {
    Mat T = random_matrix(rng, 4, 4, -1, 1);
    StsReport s = sts_transfer(q, T);
    CHECK(s.agree());
    rb_count += s.coadjoint_rb;
  }
  // sharp maps of solutions give nontrivial agreeing cases
  for (int k = 0; k < 20; ++k) {
    TwoTensor r(dbl, random_skew_matrix(rng, 4, -1, 1));
    if (!is_cybe_solution(r).pass) continue;
    StsReport s = sts_transfer(q, r_sharp(r));
    CHECK(s.coadjoint_rb);
    CHECK(s.adjoint_rb);
    ++rb_count;
  }
  CHECK(rb_count > 0);
}

TEST_CASE("grid search over skew tensors") {
  std::vector<Rational> grid = {Rational(-1), Rational(0), Rational(1)};

  auto sols = search_rmatrix(dim2_example(), grid, 1);
  // dim2: every skew tensor solves, so k in {-1, 0, 1} all appear
  CHECK(sols.size() == 3);
  for (const auto& s : sols) CHECK(is_cybe_solution(s).pass);

  auto ab = search_rmatrix(LYAlgebra::abelian(2), grid, 1);
  CHECK(ab.size() == 3);  // every skew grid tensor

  auto sols4 = search_rmatrix(dim4_example(), {Rational(0), Rational(1)}, 2);
  CHECK(!sols4.empty());
  for (const auto& s : sols4) CHECK(is_cybe_solution(s).pass);
}
