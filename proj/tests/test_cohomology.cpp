#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "liya/cohomology.hpp"
#include "support/fixtures.hpp"

using namespace liya;
using namespace liya::testing;

namespace {
std::mt19937_64 rng(5150);
}

TEST_CASE("coboundary of the zero 1-cochain is zero") {
  Representation ad = adjoint_rep(dim2_example());
  CHECK(coboundary(Cochain::one(Mat(2, 2)), ad).is_zero());
}

TEST_CASE("the diagonal derivation of the dim2 example is a 1-cocycle") {
  LYAlgebra g = dim2_example();
  Mat delta(2, 2);
  delta(0, 0) = Rational(1);  // diag(1, 0)
  // hand oracle: delta[e1,e2] = e1 = [delta e1, e2] + [e1, delta e2]
  CHECK(is_derivation(delta, g));
  CHECK(is_one_cocycle(delta, adjoint_rep(g)));
  CHECK(coboundary(Cochain::one(delta), adjoint_rep(g)).is_zero());
}

TEST_CASE("the identity map is not a derivation of the dim2 example") {
  LYAlgebra g = dim2_example();
  Mat id = Mat::identity(2);
  // binary rule: id[e1,e2] = e1 but [e1,e2] + [e1,e2] = 2 e1
  CHECK_FALSE(is_derivation(id, g));
  CHECK_FALSE(is_one_cocycle(id, adjoint_rep(g)));

  // the displayed first-component value: d_I(id)(e1,e2) = [e1,e2] - [e2,e1] - [e1,e2] = e1
  Cochain d = coboundary(Cochain::one(id), adjoint_rep(g));
  CHECK(d.fpart.at({0, 1, 0}) == Rational(1));
  CHECK(d.fpart.at({0, 1, 1}) == Rational(0));
}

TEST_CASE("zero map is always a derivation and 1-cocycle") {
  for (const auto& g : algebra_pool()) {
    CHECK(is_derivation(Mat(g.dim, g.dim), g));
    CHECK(is_one_cocycle(Mat(g.dim, g.dim), adjoint_rep(g)));
  }
}

TEST_CASE("property: derivation iff 1-cocycle for the adjoint representation") {
  for (const auto& g : algebra_pool()) {
    Representation ad = adjoint_rep(g);
    for (int k = 0; k < 12; ++k) {
      Mat f = random_matrix(rng, g.dim, g.dim, -1, 1);
      CHECK(is_derivation(f, g) == is_one_cocycle(f, ad));
    }
  }
}

TEST_CASE("property: 1-cocycle iff vanishing coboundary") {
  LYAlgebra g = dim2_example();
  for (const Representation& rep : {adjoint_rep(g), coadjoint_rep(g)})
    for (int k = 0; k < 12; ++k) {
      Mat f = random_matrix(rng, rep.vdim, g.dim, -1, 1);
      CHECK(is_one_cocycle(f, rep) == coboundary(Cochain::one(f), rep).is_zero());
    }
}

TEST_CASE("coboundary output is skew in every wedge slot") {
  LYAlgebra g = dim2_example();
  Representation ad = adjoint_rep(g);
  for (int k = 0; k < 6; ++k) {
    Mat f = random_matrix(rng, 2, 2);
    Cochain d = coboundary(Cochain::one(f), ad);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int r = 0; r < 2; ++r) {
          CHECK(d.fpart.at({x, y, r}) == -d.fpart.at({y, x, r}));
          for (int z = 0; z < 2; ++z)
            CHECK(d.gpart.at({x, y, z, r}) == -d.gpart.at({y, x, z, r}));
        }
    Cochain dd = coboundary(d, ad);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int e = 0; e < 2; ++e)
            for (int r = 0; r < 2; ++r) {
              CHECK(dd.fpart.at({a, b, c, e, r}) == -dd.fpart.at({b, a, c, e, r}));
              CHECK(dd.fpart.at({a, b, c, e, r}) == -dd.fpart.at({a, b, e, c, r}));
            }
  }
}

TEST_CASE("d of d vanishes on 1-cochains (dim2, adjoint and coadjoint)") {
  LYAlgebra g = dim2_example();
  for (const Representation& rep : {adjoint_rep(g), coadjoint_rep(g)}) {
    // spanning set: all matrix units
    for (int a = 0; a < rep.vdim; ++a)
      for (int b = 0; b < 2; ++b) {
        Mat f(rep.vdim, 2);
        f(a, b) = Rational(1);
        Cochain dd = coboundary(coboundary(Cochain::one(f), rep), rep);
        CHECK(dd.is_zero());
      }
  }
}

TEST_CASE("d of d vanishes on random 1-cochains over the pool") {
  for (const auto& g : algebra_pool()) {
    if (g.dim > 3) continue;
    Representation ad = adjoint_rep(g);
    for (int k = 0; k < 3; ++k) {
      Mat f = random_matrix(rng, g.dim, g.dim);
      CHECK(coboundary(coboundary(Cochain::one(f), ad), ad).is_zero());
    }
  }
}

TEST_CASE("cochain evaluation is multilinear over the wedge slots") {
  LYAlgebra g = dim2_example();
  Representation ad = adjoint_rep(g);
  Mat f = random_matrix(rng, 2, 2);
  Cochain d = coboundary(Cochain::one(f), ad);
  auto e0 = basis_vec(2, 0), e1 = basis_vec(2, 1);
  auto v = add(e0, scaled(e1, Rational(3)));
  auto lhs = d.eval_f({v, e1});
  auto rhs = add(d.eval_f({e0, e1}), scaled(d.eval_f({e1, e1}), Rational(3)));
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(d.eval_f({e0}), std::invalid_argument);
}
