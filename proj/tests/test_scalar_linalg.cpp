#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "liya/tensor.hpp"

using namespace liya;

namespace {

std::mt19937_64 rng(20240811);

Rational rand_rational() {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return Rational(num(rng), den(rng));
}

Tensor rand_tensor(const Index& shape) {
  Tensor t(shape);
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = rand_rational();
  return t;
}

} // namespace

TEST_CASE("rational parsing and lowest terms") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("3/-6").str() == "-1/2");  // denominator sign normalized
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays reduced with positive denominator") {
  for (int k = 0; k < 500; ++k) {
    Rational a = rand_rational(), b = rand_rational();
    for (Rational r : {a + b, a - b, a * b}) {
      // denominator is formatted without a sign and gcd-reduced by construction;
      // re-parsing the printed form must give the same value
      CHECK(Rational::parse(r.str()) == r);
      CHECK(r.denominator()[0] != '-');
    }
    if (!b.is_zero()) {
      Rational q = a / b;
      CHECK(q * b == a);
      CHECK(q.denominator()[0] != '-');
    }
  }
}

TEST_CASE("permute: identity and transposition") {
  Tensor t(Index{2, 2});
  t.at({0, 1}) = Rational(1);  // e1 (x) e2
  CHECK(t.permute({0, 1}) == t);
  Tensor s = t.swap_axes(0, 1);
  CHECK(s.at({1, 0}) == Rational(1));
  CHECK(s.at({0, 1}) == Rational(0));
}

TEST_CASE("permute: left-to-right composition of transpositions") {
  // sigma12 then sigma23 sends e1 (x) e2 (x) e3 to e2 (x) e3 (x) e1
  Tensor t(Index{3, 3, 3});
  t.at({0, 1, 2}) = Rational(1);
  Tensor u = t.swap_axes(0, 1).swap_axes(1, 2);
  CHECK(u.at({1, 2, 0}) == Rational(1));
  CHECK(u.nonzeros().size() == 1);
}

TEST_CASE("permute round-trip through the inverse permutation") {
  std::vector<std::vector<int>> perms3 = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
  for (int k = 0; k < 20; ++k) {
    Tensor t = rand_tensor({2, 3, 4});
    for (const auto& p : perms3) {
      std::vector<int> inv(3);
      for (int i = 0; i < 3; ++i) inv[p[i]] = i;
      CHECK(t.permute(p).permute(inv) == t);
    }
  }
}

TEST_CASE("permute rejects non-permutations") {
  Tensor t(Index{2, 2});
  CHECK_THROWS_AS(t.permute({0}), std::invalid_argument);
  CHECK_THROWS_AS(t.permute({0, 0}), std::invalid_argument);
}

TEST_CASE("contract_pairing against dual basis covectors") {
  Tensor t(Index{2, 2});
  t.at({0, 1}) = Rational(1);  // e1 (x) e2
  auto e1s = basis_vec(2, 0), e2s = basis_vec(2, 1);
  CHECK(t.contract_pairing({e1s, e2s}).at({}) == Rational(1));
  CHECK(t.contract_pairing({e2s, e1s}).at({}) == Rational(0));

  Tensor u(Index{2, 2});
  u.at({0, 0}) = Rational(2, 3);
  CHECK(u.contract_pairing({e1s, e1s}).at({}) == Rational(2, 3));
}

TEST_CASE("contract_pairing is linear in each argument") {
  for (int k = 0; k < 30; ++k) {
    Tensor t = rand_tensor({3, 3});
    std::vector<Rational> a, b, c;
    for (int i = 0; i < 3; ++i) {
      a.push_back(rand_rational());
      b.push_back(rand_rational());
      c.push_back(rand_rational());
    }
    Rational lam = rand_rational();
    auto combo = add(scaled(a, lam), b);
    Rational lhs = t.contract_pairing({combo, c}).at({});
    Rational rhs = lam * t.contract_pairing({a, c}).at({}) + t.contract_pairing({b, c}).at({});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contract_pairing keeps uncontracted axes") {
  Tensor t = rand_tensor({2, 3, 2});
  auto v = basis_vec(2, 1);
  Tensor s = t.contract_pairing({v});
  REQUIRE(s.shape() == Index{3, 2});
  CHECK(s.at({2, 1}) == t.at({1, 2, 1}));
}

TEST_CASE("contract_pairing extent mismatch") {
  Tensor t(Index{2, 2});
  CHECK_THROWS_AS(t.contract_pairing({basis_vec(3, 0)}), std::invalid_argument);
}

TEST_CASE("matrix determinant and inverse are exact") {
  Mat m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(3);
  m(1, 0) = Rational(-1);
  m(1, 1) = Rational(4);
  CHECK(m.det() == Rational(5));
  CHECK(m.inverse() * m == Mat::identity(2));

  Mat s(2, 2);
  s(0, 0) = Rational(1);
  s(0, 1) = Rational(2);
  s(1, 0) = Rational(2);
  s(1, 1) = Rational(4);
  CHECK(s.det() == Rational(0));
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
}
