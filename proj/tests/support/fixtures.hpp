// Shared test fixtures and small generators. The expected values asserted in
// the test files were computed by hand from the defining formulas or by the
// brute-force oracles below, independent of the library code paths they check.
#ifndef LIYA_TESTS_FIXTURES_HPP
#define LIYA_TESTS_FIXTURES_HPP

#include <random>

#include "liya/bialgebra.hpp"
#include "liya/pre_ly.hpp"

namespace liya::testing {

// [e1,e2] = e1, <<e1,e2,e2>> = e1
inline LYAlgebra dim2_example() {
  LYAlgebra g(2);
  g.set_binary(0, 1, 0, Rational(1));
  g.set_ternary(0, 1, 1, 0, Rational(1));
  return g;
}

// [e1,e2] = 2 e4, <<e1,e2,e1>> = e4
inline LYAlgebra dim4_example() {
  LYAlgebra g(4);
  g.set_binary(0, 1, 3, Rational(2));
  g.set_ternary(0, 1, 0, 3, Rational(1));
  return g;
}

// the 2-dim Lie algebra [e1,e2] = e1 with zero ternary bracket
inline LYAlgebra r2_lie() {
  LYAlgebra g(2);
  g.set_binary(0, 1, 0, Rational(1));
  return g;
}

// sl2-type structure constants: [e,f] = h, [h,e] = 2e, [h,f] = -2f
inline Tensor sl2_constants() {
  Tensor b(Index{3, 3, 3});
  auto set = [&](int i, int j, int k, long c) {
    b.at({i, j, k}) = Rational(c);
    b.at({j, i, k}) = Rational(-c);
  };
  set(0, 1, 2, 1);
  set(2, 0, 0, 2);
  set(2, 1, 1, -2);
  return b;
}

// star-only pre-algebra fixture: e2 * e1 = e1
inline PreLYAlgebra pre_ly_star_fixture() {
  PreLYAlgebra a(2);
  a.star.at({1, 0, 0}) = Rational(1);
  return a;
}

// delta(e1) = e1 ^ e2, omega(e1) = (e1 ^ e2) (x) e2 on the dim2 example
inline Cobracket dim2_bialgebra_fixture() {
  Cobracket c(dim2_example());
  c.delta.at({0, 0, 1}) = Rational(1);
  c.delta.at({0, 1, 0}) = Rational(-1);
  c.omega.at({0, 0, 1, 1}) = Rational(1);
  c.omega.at({0, 1, 0, 1}) = Rational(-1);
  return c;
}

// delta(e2) = e1 ^ e2, omega = 0 on the ternary-free Lie algebra; a genuine
// double-construction bialgebra (the classical double of this cobracket)
inline Cobracket r2_lie_bialgebra_fixture() {
  Cobracket c(r2_lie());
  c.delta.at({1, 0, 1}) = Rational(1);
  c.delta.at({1, 1, 0}) = Rational(-1);
  return c;
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Mat random_matrix(std::mt19937_64& rng, int rows, int cols, long lo = -2, long hi = 2) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = random_rational(rng, lo, hi);
  return m;
}

inline Mat random_skew_matrix(std::mt19937_64& rng, int n, long lo = -3, long hi = 3) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational c = random_rational(rng, lo, hi);
      m(i, j) = c;
      m(j, i) = -c;
    }
  return m;
}

// small pool of verified algebras for property-style sampling
inline std::vector<LYAlgebra> algebra_pool() {
  std::vector<LYAlgebra> pool;
  pool.push_back(dim2_example());
  pool.push_back(dim4_example());
  pool.push_back(r2_lie());
  pool.push_back(LYAlgebra::abelian(2));
  pool.push_back(from_lie_algebra(sl2_constants()));
  return pool;
}

} // namespace liya::testing

#endif
