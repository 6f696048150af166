#include "liya/pre_ly.hpp"

#include <functional>
#include <stdexcept>

namespace liya {

namespace {

std::vector<Rational> eval3(const Tensor& t, int dim, const std::vector<Rational>& x,
                            const std::vector<Rational>& y) {
  auto out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Rational& s = t.at({i, j, k});
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

} // namespace

std::vector<Rational> PreLYAlgebra::product(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
  return eval3(star, dim, x, y);
}

std::vector<Rational> PreLYAlgebra::triple_of(const std::vector<Rational>& x,
                                              const std::vector<Rational>& y,
                                              const std::vector<Rational>& z) const {
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
          const Rational& s = triple.at({i, j, k, l});
          if (!s.is_zero()) out[l] += c * s;
        }
      }
    }
  }
  return out;
}

std::vector<Rational> PreLYAlgebra::commutator_of(const std::vector<Rational>& x,
                                                  const std::vector<Rational>& y) const {
  return sub(product(x, y), product(y, x));
}

std::vector<Rational> PreLYAlgebra::associator(const std::vector<Rational>& x,
                                               const std::vector<Rational>& y,
                                               const std::vector<Rational>& z) const {
  return sub(product(product(x, y), z), product(x, product(y, z)));
}

std::vector<Rational> PreLYAlgebra::triple_d(const std::vector<Rational>& x,
                                             const std::vector<Rational>& y,
                                             const std::vector<Rational>& z) const {
  auto out = sub(triple_of(z, y, x), triple_of(z, x, y));
  out = add(out, associator(y, x, z));
  return sub(out, associator(x, y, z));
}

namespace {

using Vec = std::vector<Rational>;

// the five identities as residual functions of basis tuples
Vec pre2(const PreLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  auto r = A.triple_of(z, A.commutator_of(x, y), w);
  r = sub(r, A.triple_of(A.product(y, z), x, w));
  return add(r, A.triple_of(A.product(x, z), y, w));
}

Vec pre4(const PreLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  auto r = A.triple_of(x, y, A.commutator_of(z, w));
  r = sub(r, A.product(z, A.triple_of(x, y, w)));
  return add(r, A.product(w, A.triple_of(x, y, z)));
}

Vec pre5(const PreLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z, const Vec& w,
         const Vec& t) {
  auto r = sub(A.triple_of(A.triple_of(x, y, z), w, t), A.triple_of(A.triple_of(x, y, w), z, t));
  r = sub(r, A.triple_of(x, y, A.triple_d(z, w, t)));
  r = sub(r, A.triple_of(x, y, A.triple_of(z, w, t)));
  r = add(r, A.triple_of(x, y, A.triple_of(w, z, t)));
  return add(r, A.triple_d(z, w, A.triple_of(x, y, t)));
}

Vec pre6(const PreLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z, const Vec& w,
         const Vec& t) {
  auto r = A.triple_of(z, A.triple_d(x, y, w), t);
  r = add(r, A.triple_of(z, A.triple_of(x, y, w), t));
  r = sub(r, A.triple_of(z, A.triple_of(y, x, w), t));
  r = add(r, A.triple_of(z, w, A.triple_d(x, y, t)));
  r = add(r, A.triple_of(z, w, A.triple_of(x, y, t)));
  r = sub(r, A.triple_of(z, w, A.triple_of(y, x, t)));
  r = sub(r, A.triple_d(x, y, A.triple_of(z, w, t)));
  return add(r, A.triple_of(A.triple_d(x, y, z), w, t));
}

Vec pre7(const PreLYAlgebra& A, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  auto r = A.product(A.triple_d(x, y, z), w);
  r = add(r, A.product(A.triple_of(x, y, z), w));
  r = sub(r, A.product(A.triple_of(y, x, z), w));
  r = sub(r, A.triple_d(x, y, A.product(z, w)));
  return add(r, A.product(z, A.triple_d(x, y, w)));
}

} // namespace

AxiomReport check_pre_ly_axioms(const PreLYAlgebra& a) {
  const int n = a.dim;
  AxiomReport out;
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));

  CheckResult c2{"commutator-triple", true, Tensor(Index{n, n, n, n, n})};
  CheckResult c4{"triple-commutator", true, Tensor(Index{n, n, n, n, n})};
  CheckResult c7{"derived-product", true, Tensor(Index{n, n, n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          auto r2 = pre2(a, e[x], e[y], e[z], e[w]);
          auto r4 = pre4(a, e[x], e[y], e[z], e[w]);
          auto r7 = pre7(a, e[x], e[y], e[z], e[w]);
          for (int k = 0; k < n; ++k) {
            if (!r2[k].is_zero()) c2.pass = false;
            if (!r4[k].is_zero()) c4.pass = false;
            if (!r7[k].is_zero()) c7.pass = false;
            c2.residual.at({x, y, z, w, k}) = r2[k];
            c4.residual.at({x, y, z, w, k}) = r4[k];
            c7.residual.at({x, y, z, w, k}) = r7[k];
          }
        }

  CheckResult c5{"nested-triple-left", true, Tensor(Index{n, n, n, n, n, n})};
  CheckResult c6{"nested-triple-mixed", true, Tensor(Index{n, n, n, n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          for (int t = 0; t < n; ++t) {
            auto r5 = pre5(a, e[x], e[y], e[z], e[w], e[t]);
            auto r6 = pre6(a, e[x], e[y], e[z], e[w], e[t]);
            for (int k = 0; k < n; ++k) {
              if (!r5[k].is_zero()) c5.pass = false;
              if (!r6[k].is_zero()) c6.pass = false;
              c5.residual.at({x, y, z, w, t, k}) = r5[k];
              c6.residual.at({x, y, z, w, t, k}) = r6[k];
            }
          }
  out.checks.push_back(std::move(c2));
  out.checks.push_back(std::move(c4));
  out.checks.push_back(std::move(c5));
  out.checks.push_back(std::move(c6));
  out.checks.push_back(std::move(c7));
  return out;
}

bool pre_ly_axioms_hold(const PreLYAlgebra& a) {
  const int n = a.dim;
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          if (!is_zero(pre2(a, e[x], e[y], e[z], e[w]))) return false;
          if (!is_zero(pre4(a, e[x], e[y], e[z], e[w]))) return false;
          if (!is_zero(pre7(a, e[x], e[y], e[z], e[w]))) return false;
          for (int t = 0; t < n; ++t) {
            if (!is_zero(pre5(a, e[x], e[y], e[z], e[w], e[t]))) return false;
            if (!is_zero(pre6(a, e[x], e[y], e[z], e[w], e[t]))) return false;
          }
        }
  return true;
}

LYAlgebra sub_adjacent(const PreLYAlgebra& a) {
  const int n = a.dim;
  LYAlgebra g(n);
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = a.commutator_of(e[i], e[j]);
      for (int k = 0; k < n; ++k) g.binary.at({i, j, k}) = v[k];
      for (int k = 0; k < n; ++k) {
        auto w = add(a.triple_d(e[i], e[j], e[k]),
                     sub(a.triple_of(e[i], e[j], e[k]), a.triple_of(e[j], e[i], e[k])));
        for (int l = 0; l < n; ++l) g.ternary.at({i, j, k, l}) = w[l];
      }
    }
  return g;
}

Representation ad_r_representation(const PreLYAlgebra& a) {
  const int n = a.dim;
  Representation rep(sub_adjacent(a), n);
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto v = a.product(e[i], e[j]);
      for (int r = 0; r < n; ++r) rep.rho[i](r, j) = v[r];
      for (int k = 0; k < n; ++k) {
        auto w = a.triple_of(e[k], e[i], e[j]);
        for (int r = 0; r < n; ++r) rep.mu[i][j](r, k) = w[r];
      }
    }
  }
  return rep;
}

CanonicalRMatrix canonical_rmatrix(const PreLYAlgebra& a) {
  const int n = a.dim;
  Representation rep = ad_r_representation(a);
  LYAlgebra big = semidirect_product(rep.base, dual_rep(rep));
  Mat R(2 * n, 2 * n), B(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    R(i, n + i) = Rational(1);
    R(n + i, i) = Rational(-1);
    B(i, n + i) = Rational(1);
    B(n + i, i) = Rational(1);
  }
  CanonicalRMatrix out;
  out.r = TwoTensor(std::move(big), std::move(R));
  out.sym_part = std::move(B);
  return out;
}

std::vector<PreLYAlgebra> search_pre_ly(int dim, const std::vector<Rational>& values,
                                        int max_support, std::size_t limit) {
  // positions: star entries first, then triple entries, lexicographic order
  const int nstar = dim * dim * dim;
  const int total = nstar + dim * dim * dim * dim;
  std::vector<Rational> nz;
  for (const auto& v : values)
    if (!v.is_zero()) nz.push_back(v);

  std::vector<PreLYAlgebra> found;
  found.emplace_back(dim);  // the zero algebra, always valid

  PreLYAlgebra cand(dim);
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0 || (limit && found.size() >= limit)) return;
    for (int p = start; p < total; ++p) {
      Rational& slot = p < nstar ? cand.star.flat(static_cast<std::size_t>(p))
                                 : cand.triple.flat(static_cast<std::size_t>(p - nstar));
      for (const auto& v : nz) {
        if (limit && found.size() >= limit) break;
        slot = v;
        if (pre_ly_axioms_hold(cand)) found.push_back(cand);
        rec(p + 1, remaining - 1);
      }
      slot = Rational(0);
    }
  };
  rec(0, max_support);
  return found;
}

} // namespace liya
