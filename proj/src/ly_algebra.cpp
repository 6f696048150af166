#include "liya/ly_algebra.hpp"

#include <stdexcept>

namespace liya {

std::vector<Rational> LYAlgebra::bracket(const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  auto out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Rational& s = binary.at({i, j, k});
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

std::vector<Rational> LYAlgebra::triple(const std::vector<Rational>& x,
                                        const std::vector<Rational>& y,
                                        const std::vector<Rational>& z) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim ||
      static_cast<int>(z.size()) != dim)
    throw std::invalid_argument("triple: dimension mismatch");
  auto out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational cij = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        if (z[k].is_zero()) continue;
        Rational c = cij * z[k];
        for (int l = 0; l < dim; ++l) {
          const Rational& s = ternary.at({i, j, k, l});
          if (!s.is_zero()) out[l] += c * s;
        }
      }
    }
  }
  return out;
}

Mat LYAlgebra::ad(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m(k, j) = binary.at({i, j, k});
  return m;
}

Mat LYAlgebra::right_triple(int i, int j) const {
  Mat m(dim, dim);
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) m(l, k) = ternary.at({k, i, j, l});
  return m;
}

Mat LYAlgebra::left_triple(int i, int j) const {
  Mat m(dim, dim);
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) m(l, k) = ternary.at({i, j, k, l});
  return m;
}

namespace {

// Residual of the mixed Jacobi-type identity at (x,y,z):
// [[x,y],z] + [[y,z],x] + [[z,x],y] + <<x,y,z>> + <<y,z,x>> + <<z,x,y>>.
std::vector<Rational> jacobi_defect(const LYAlgebra& g, const std::vector<Rational>& x,
                                    const std::vector<Rational>& y,
                                    const std::vector<Rational>& z) {
  auto r = add(g.bracket(g.bracket(x, y), z), g.bracket(g.bracket(y, z), x));
  r = add(r, g.bracket(g.bracket(z, x), y));
  r = add(r, g.triple(x, y, z));
  r = add(r, g.triple(y, z, x));
  return add(r, g.triple(z, x, y));
}

// <<[x,y],z,w>> + <<[y,z],x,w>> + <<[z,x],y,w>>.
std::vector<Rational> cyclic_bracket_triple(const LYAlgebra& g, const std::vector<Rational>& x,
                                            const std::vector<Rational>& y,
                                            const std::vector<Rational>& z,
                                            const std::vector<Rational>& w) {
  auto r = add(g.triple(g.bracket(x, y), z, w), g.triple(g.bracket(y, z), x, w));
  return add(r, g.triple(g.bracket(z, x), y, w));
}

// <<x,y,[z,w]>> - [<<x,y,z>>,w] - [z,<<x,y,w>>].
std::vector<Rational> binary_derivation_defect(const LYAlgebra& g, const std::vector<Rational>& x,
                                               const std::vector<Rational>& y,
                                               const std::vector<Rational>& z,
                                               const std::vector<Rational>& w) {
  auto r = g.triple(x, y, g.bracket(z, w));
  r = sub(r, g.bracket(g.triple(x, y, z), w));
  return sub(r, g.bracket(z, g.triple(x, y, w)));
}

// <<x,y,<<z,w,t>>>> - <<<<x,y,z>>,w,t>> - <<z,<<x,y,w>>,t>> - <<z,w,<<x,y,t>>>>.
std::vector<Rational> fundamental_defect(const LYAlgebra& g, const std::vector<Rational>& x,
                                         const std::vector<Rational>& y,
                                         const std::vector<Rational>& z,
                                         const std::vector<Rational>& w,
                                         const std::vector<Rational>& t) {
  auto r = g.triple(x, y, g.triple(z, w, t));
  r = sub(r, g.triple(g.triple(x, y, z), w, t));
  r = sub(r, g.triple(z, g.triple(x, y, w), t));
  return sub(r, g.triple(z, w, g.triple(x, y, t)));
}

} // namespace

AxiomReport check_ly_axioms(const LYAlgebra& g) {
  const int n = g.dim;
  AxiomReport rep;

  CheckResult skew_b{"binary-skew", true, Tensor(Index{n, n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational r = g.binary.at({i, j, k}) + g.binary.at({j, i, k});
        if (!r.is_zero()) skew_b.pass = false;
        skew_b.residual.at({i, j, k}) = r;
      }
  rep.checks.push_back(std::move(skew_b));

  CheckResult skew_t{"ternary-skew", true, Tensor(Index{n, n, n, n})};
  g.ternary.for_each([&](const Index& idx, const Rational& v) {
    Rational r = v + g.ternary.at({idx[1], idx[0], idx[2], idx[3]});
    if (!r.is_zero()) skew_t.pass = false;
    skew_t.residual.at(idx) = r;
  });
  rep.checks.push_back(std::move(skew_t));

  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));

  CheckResult c1{"mixed-jacobi", true, Tensor(Index{n, n, n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto r = jacobi_defect(g, e[i], e[j], e[k]);
        for (int l = 0; l < n; ++l) {
          if (!r[l].is_zero()) c1.pass = false;
          c1.residual.at({i, j, k, l}) = r[l];
        }
      }
  rep.checks.push_back(std::move(c1));

  CheckResult c2{"bracket-triple-cyclic", true, Tensor(Index{n, n, n, n, n})};
  CheckResult c3{"triple-derives-binary", true, Tensor(Index{n, n, n, n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto r2 = cyclic_bracket_triple(g, e[i], e[j], e[k], e[l]);
          auto r3 = binary_derivation_defect(g, e[i], e[j], e[k], e[l]);
          for (int m = 0; m < n; ++m) {
            if (!r2[m].is_zero()) c2.pass = false;
            if (!r3[m].is_zero()) c3.pass = false;
            c2.residual.at({i, j, k, l, m}) = r2[m];
            c3.residual.at({i, j, k, l, m}) = r3[m];
          }
        }
  rep.checks.push_back(std::move(c2));
  rep.checks.push_back(std::move(c3));

  CheckResult c4{"fundamental-identity", true, Tensor(Index{n, n, n, n, n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            auto r = fundamental_defect(g, e[i], e[j], e[k], e[l], e[m]);
            for (int p = 0; p < n; ++p) {
              if (!r[p].is_zero()) c4.pass = false;
              c4.residual.at({i, j, k, l, m, p}) = r[p];
            }
          }
  rep.checks.push_back(std::move(c4));
  return rep;
}

bool ly_axioms_hold(const LYAlgebra& g) {
  const int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(g.binary.at({i, j, k}) + g.binary.at({j, i, k})).is_zero()) return false;
        for (int l = 0; l < n; ++l)
          if (!(g.ternary.at({i, j, k, l}) + g.ternary.at({j, i, k, l})).is_zero()) return false;
      }
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(jacobi_defect(g, e[i], e[j], e[k]))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (!is_zero(cyclic_bracket_triple(g, e[i], e[j], e[k], e[l]))) return false;
          if (!is_zero(binary_derivation_defect(g, e[i], e[j], e[k], e[l]))) return false;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m)
            if (!is_zero(fundamental_defect(g, e[i], e[j], e[k], e[l], e[m]))) return false;
  return true;
}

LYAlgebra from_lie_algebra(const Tensor& lie_binary) {
  if (lie_binary.order() != 3) throw std::invalid_argument("from_lie: order-3 tensor expected");
  const int n = lie_binary.shape()[0];
  if (lie_binary.shape()[1] != n || lie_binary.shape()[2] != n)
    throw std::invalid_argument("from_lie: cubic shape expected");

  LYAlgebra g(n);
  g.binary = lie_binary;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!(lie_binary.at({i, j, k}) + lie_binary.at({j, i, k})).is_zero())
          throw std::invalid_argument("from_lie: binary constants not skew");

  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto jac = add(add(g.bracket(g.bracket(e[i], e[j]), e[k]),
                           g.bracket(g.bracket(e[j], e[k]), e[i])),
                       g.bracket(g.bracket(e[k], e[i]), e[j]));
        if (!is_zero(jac)) throw std::invalid_argument("from_lie: Jacobi identity fails");
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto v = g.bracket(g.bracket(e[i], e[j]), e[k]);
        for (int l = 0; l < n; ++l) g.ternary.at({i, j, k, l}) = v[l];
      }
  return g;
}

bool check_homomorphism(const Mat& f, const LYAlgebra& src, const LYAlgebra& dst) {
  if (f.cols() != src.dim || f.rows() != dst.dim)
    throw std::invalid_argument("homomorphism: shape mismatch");
  std::vector<std::vector<Rational>> e, fe;
  for (int i = 0; i < src.dim; ++i) {
    e.push_back(basis_vec(src.dim, i));
    fe.push_back(f.apply(e.back()));
  }
  for (int i = 0; i < src.dim; ++i)
    for (int j = 0; j < src.dim; ++j) {
      if (!is_zero(sub(f.apply(src.bracket(e[i], e[j])), dst.bracket(fe[i], fe[j]))))
        return false;
      for (int k = 0; k < src.dim; ++k)
        if (!is_zero(sub(f.apply(src.triple(e[i], e[j], e[k])), dst.triple(fe[i], fe[j], fe[k]))))
          return false;
    }
  return true;
}

} // namespace liya
