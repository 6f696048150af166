#include "liya/yang_baxter.hpp"

#include <functional>
#include <stdexcept>

namespace liya {

bool TwoTensor::is_skew() const {
  for (int i = 0; i < coeffs.rows(); ++i)
    for (int j = 0; j < coeffs.cols(); ++j)
      if (!(coeffs(i, j) + coeffs(j, i)).is_zero()) return false;
  return true;
}

Mat r_sharp(const TwoTensor& r) { return r.coeffs.transpose(); }

Tensor bracket_rr(const TwoTensor& r) {
  const int n = r.alg.dim;
  const Mat& R = r.coeffs;
  const Tensor& b = r.alg.binary;
  Tensor out(Index{n, n, n});
  // sum over decomposition indices: [x_i,x_j] (x) y_i (x) y_j
  //                                + x_i (x) [y_i,x_j] (x) y_j
  //                                + x_i (x) x_j (x) [y_i,y_j]
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c) {
        Rational s;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const Rational& s1 = b.at({p, q, a});
            if (!s1.is_zero()) s += R(p, bb) * R(q, c) * s1;
            const Rational& s2 = b.at({p, q, bb});
            if (!s2.is_zero()) s += R(a, p) * R(q, c) * s2;
            const Rational& s3 = b.at({p, q, c});
            if (!s3.is_zero()) s += R(a, p) * R(bb, q) * s3;
          }
        out.at({a, bb, c}) = s;
      }
  return out;
}

Tensor triple_rrr(const TwoTensor& r) {
  const int n = r.alg.dim;
  const Mat& R = r.coeffs;
  const Tensor& t = r.alg.ternary;
  Tensor out(Index{n, n, n, n});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Rational s;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int u = 0; u < n; ++u) {
                const Rational& t1 = t.at({u, p, q, a});
                if (!t1.is_zero()) s -= t1 * R(p, c) * R(q, b) * R(d, u);
                const Rational& t2 = t.at({u, p, q, b});
                if (!t2.is_zero()) s += t2 * R(p, c) * R(q, a) * R(d, u);
                const Rational& t3 = t.at({p, q, u, c});
                if (!t3.is_zero()) s += t3 * R(p, a) * R(q, b) * R(d, u);
                const Rational& t4 = t.at({p, q, u, d});
                if (!t4.is_zero()) s += t4 * R(p, a) * R(q, b) * R(u, c);
              }
          out.at({a, b, c, d}) = s;
        }
  return out;
}

CybeReport is_cybe_solution(const TwoTensor& r) {
  CybeReport rep;
  rep.binary_residual = bracket_rr(r);
  rep.ternary_residual = triple_rrr(r);
  rep.pass = rep.binary_residual.is_zero() && rep.ternary_residual.is_zero();
  return rep;
}

namespace {

std::vector<Rational> rb_binary_defect(const Mat& T, const Representation& rep,
                                       const std::vector<Rational>& u,
                                       const std::vector<Rational>& v) {
  auto Tu = T.apply(u), Tv = T.apply(v);
  auto lhs = rep.base.bracket(Tu, Tv);
  auto inner = sub(rep.rho_of(Tu).apply(v), rep.rho_of(Tv).apply(u));
  return sub(lhs, T.apply(inner));
}

std::vector<Rational> rb_ternary_defect(const Mat& T, const Representation& rep,
                                        const std::vector<Rational>& u,
                                        const std::vector<Rational>& v,
                                        const std::vector<Rational>& w) {
  auto Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
  auto lhs = rep.base.triple(Tu, Tv, Tw);
  auto inner = add(rep.derived_of(Tu, Tv).apply(w), rep.mu_of(Tv, Tw).apply(u));
  inner = sub(inner, rep.mu_of(Tu, Tw).apply(v));
  return sub(lhs, T.apply(inner));
}

} // namespace

AxiomReport check_relative_rb(const Mat& T, const Representation& rep) {
  if (T.cols() != rep.vdim || T.rows() != rep.base.dim)
    throw std::invalid_argument("relative-rb: operator shape mismatch");
  const int m = rep.vdim, n = rep.base.dim;
  AxiomReport out;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < m; ++i) e.push_back(basis_vec(m, i));

  CheckResult c1{"rb-binary", true, Tensor(Index{m, m, n})};
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      auto d = rb_binary_defect(T, rep, e[u], e[v]);
      for (int k = 0; k < n; ++k) {
        if (!d[k].is_zero()) c1.pass = false;
        c1.residual.at({u, v, k}) = d[k];
      }
    }
  out.checks.push_back(std::move(c1));

  CheckResult c2{"rb-ternary", true, Tensor(Index{m, m, m, n})};
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        auto d = rb_ternary_defect(T, rep, e[u], e[v], e[w]);
        for (int k = 0; k < n; ++k) {
          if (!d[k].is_zero()) c2.pass = false;
          c2.residual.at({u, v, w, k}) = d[k];
        }
      }
  out.checks.push_back(std::move(c2));
  return out;
}

bool relative_rb_holds(const Mat& T, const Representation& rep) {
  const int m = rep.vdim;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < m; ++i) e.push_back(basis_vec(m, i));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (!is_zero(rb_binary_defect(T, rep, e[u], e[v]))) return false;
      for (int w = 0; w < m; ++w)
        if (!is_zero(rb_ternary_defect(T, rep, e[u], e[v], e[w]))) return false;
    }
  return true;
}

EquivalenceReport cybe_rb_equivalence(const TwoTensor& r) {
  EquivalenceReport rep;
  rep.lhs = is_cybe_solution(r).pass;
  rep.rhs = relative_rb_holds(r_sharp(r), coadjoint_rep(r.alg));
  return rep;
}

Cobracket induced_cobrackets(const TwoTensor& r) {
  const int n = r.alg.dim;
  const Mat& R = r.coeffs;
  const Tensor& b = r.alg.binary;
  const Tensor& t = r.alg.ternary;
  Cobracket c(r.alg);
  Tensor d1(Index{n, n, n}), d2(Index{n, n, n});
  Tensor w1(Index{n, n, n, n}), w2(Index{n, n, n, n}), w3(Index{n, n, n, n});
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) {
        Rational s1, s2;
        for (int q = 0; q < n; ++q) {
          const Rational& c1 = b.at({i, q, bb});  // x_i (x) [x, y_i]
          if (!c1.is_zero()) s1 += R(a, q) * c1;
          const Rational& c2 = b.at({i, q, a});   // [x, x_i] (x) y_i
          if (!c2.is_zero()) s2 += R(q, bb) * c2;
        }
        d1.at({i, a, bb}) = s1;
        d2.at({i, a, bb}) = s2;
      }
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb)
        for (int cc = 0; cc < n; ++cc) {
          Rational u1, u2, u3;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              const Rational& k1 = t.at({i, p, q, a});  // <<x,x_i,x_j>> (x) y_j (x) y_i
              if (!k1.is_zero()) u1 += k1 * R(p, cc) * R(q, bb);
              const Rational& k2 = t.at({p, i, q, bb}); // y_j (x) <<x_i,x,x_j>> (x) y_i
              if (!k2.is_zero()) u2 += k2 * R(p, cc) * R(q, a);
              const Rational& k3 = t.at({p, q, i, cc}); // y_j (x) y_i (x) <<x_i,x_j,x>>
              if (!k3.is_zero()) u3 += k3 * R(p, bb) * R(q, a);
            }
          w1.at({i, a, bb, cc}) = u1;
          w2.at({i, a, bb, cc}) = u2;
          w3.at({i, a, bb, cc}) = u3;
        }
  }
  c.delta = d1 + d2;
  c.omega = w1 + w2 + w3;
  c.delta1 = std::move(d1);
  c.delta2 = std::move(d2);
  c.omega1 = std::move(w1);
  c.omega2 = std::move(w2);
  c.omega3 = std::move(w3);
  return c;
}

LYAlgebra induced_dual_brackets(const TwoTensor& r) {
  const int n = r.alg.dim;
  Mat T = r_sharp(r);
  Representation ad = adjoint_rep(r.alg);
  auto L = derived_D(ad);
  auto adst = [&](const std::vector<Rational>& x) { return -ad.rho_of(x).transpose(); };
  auto Rst = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return -ad.mu_of(x, y).transpose();
  };
  auto Lst = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Mat out(n, n);
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!y[j].is_zero()) out = out + (-L[i][j].transpose()).scaled(x[i] * y[j]);
    }
    return out;
  };

  LYAlgebra dual(n);
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  std::vector<std::vector<Rational>> Te;
  for (int i = 0; i < n; ++i) Te.push_back(T.apply(e[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = sub(adst(Te[i]).apply(e[j]), adst(Te[j]).apply(e[i]));
      for (int k = 0; k < n; ++k) dual.binary.at({i, j, k}) = v[k];
      for (int k = 0; k < n; ++k) {
        auto w = add(sub(Lst(Te[i], Te[j]).apply(e[k]), Rst(Te[k], Te[j]).apply(e[i])),
                     Rst(Te[k], Te[i]).apply(e[j]));
        for (int l = 0; l < n; ++l) dual.ternary.at({i, j, k, l}) = w[l];
      }
    }
  return dual;
}

bool symplectic_check(const TwoTensor& r) {
  const int n = r.alg.dim;
  Mat inv = r_sharp(r).inverse();
  auto omega = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return dot(inv.apply(x), y);
  };
  const LYAlgebra& g = r.alg;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rational c = omega(e[x], g.bracket(e[y], e[z])) + omega(e[y], g.bracket(e[z], e[x])) +
                     omega(e[z], g.bracket(e[x], e[y]));
        if (!c.is_zero()) return false;
        for (int w = 0; w < n; ++w) {
          Rational d = omega(e[z], g.triple(e[x], e[y], e[w])) -
                       omega(e[x], g.triple(e[w], e[z], e[y])) +
                       omega(e[y], g.triple(e[w], e[z], e[x])) -
                       omega(e[w], g.triple(e[x], e[y], e[z]));
          if (!d.is_zero()) return false;
        }
      }
  return true;
}

TwoTensor lift_rb_to_rmatrix(const Mat& T, const Representation& rep) {
  if (T.cols() != rep.vdim || T.rows() != rep.base.dim)
    throw std::invalid_argument("lift-rb: operator shape mismatch");
  const int n = rep.base.dim, m = rep.vdim;
  LYAlgebra big = semidirect_product(rep.base, dual_rep(rep));
  Mat R(n + m, n + m);
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < n; ++b) {
      R(n + i, b) += T(b, i);   // v_i* (x) T(v_i)
      R(b, n + i) -= T(b, i);   // - sigma12 of it
    }
  return TwoTensor(std::move(big), std::move(R));
}

AxiomReport check_quadratic(const QuadraticLY& q) {
  const int n = q.alg.dim;
  AxiomReport out;

  CheckResult sym{"form-symmetric", true, Tensor(Index{n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational r = q.form(i, j) - q.form(j, i);
      if (!r.is_zero()) sym.pass = false;
      sym.residual.at({i, j}) = r;
    }
  out.checks.push_back(std::move(sym));

  CheckResult nd{"form-nondegenerate", q.form.det() != Rational(0), Tensor(Index{1})};
  if (!nd.pass) nd.residual.at({0}) = Rational(1);
  out.checks.push_back(std::move(nd));

  auto B = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return dot(q.form.apply(x), y);
  };
  const LYAlgebra& g = q.alg;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));

  CheckResult inv1{"binary-invariance", true, Tensor(Index{n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rational r = B(g.bracket(e[x], e[y]), e[z]) + B(e[y], g.bracket(e[x], e[z]));
        if (!r.is_zero()) inv1.pass = false;
        inv1.residual.at({x, y, z}) = r;
      }
  out.checks.push_back(std::move(inv1));

  CheckResult inv2{"ternary-invariance", true, Tensor(Index{n, n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Rational r = B(g.triple(e[x], e[y], e[z]), e[w]) - B(e[x], g.triple(e[w], e[z], e[y]));
          if (!r.is_zero()) inv2.pass = false;
          inv2.residual.at({x, y, z, w}) = r;
        }
  out.checks.push_back(std::move(inv2));
  return out;
}

bool quadratic_holds(const QuadraticLY& q) { return check_quadratic(q).pass(); }

Mat b_natural(const QuadraticLY& q) {
  // column i = B(e_i, .) in dual coordinates, so the matrix is form^T = form.
  return q.form.transpose();
}

AxiomReport b_natural_intertwiners(const QuadraticLY& q) {
  const int n = q.alg.dim;
  Mat B = b_natural(q);
  AxiomReport out;
  Representation ad = adjoint_rep(q.alg);
  auto L = derived_D(ad);

  CheckResult c1{"bnat-ad-intertwine", true, Tensor(Index{n, n, n})};
  for (int i = 0; i < n; ++i) {
    Mat r = B * ad.rho[i] - (-ad.rho[i].transpose()) * B;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!r(a, b).is_zero()) c1.pass = false;
        c1.residual.at({i, a, b}) = r(a, b);
      }
  }
  out.checks.push_back(std::move(c1));

  CheckResult c2{"bnat-r-intertwine", true, Tensor(Index{n, n, n, n})};
  CheckResult c3{"bnat-derived-intertwine", true, Tensor(Index{n, n, n, n})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Bnat R(x,y) = -R*(y,x) Bnat, with R*(y,x) = -R(y,x)^T
      Mat r2 = B * ad.mu[i][j] - ad.mu[j][i].transpose() * B;
      // Bnat L(x,y) = L*(x,y) Bnat = -L(x,y)^T Bnat
      Mat r3 = B * L[i][j] + L[i][j].transpose() * B;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (!r2(a, b).is_zero()) c2.pass = false;
          if (!r3(a, b).is_zero()) c3.pass = false;
          c2.residual.at({i, j, a, b}) = r2(a, b);
          c3.residual.at({i, j, a, b}) = r3(a, b);
        }
    }
  out.checks.push_back(std::move(c2));
  out.checks.push_back(std::move(c3));
  return out;
}

StsReport sts_transfer(const QuadraticLY& q, const Mat& T) {
  StsReport out;
  out.coadjoint_rb = relative_rb_holds(T, coadjoint_rep(q.alg));
  out.adjoint_rb = relative_rb_holds(T * b_natural(q), adjoint_rep(q.alg));
  return out;
}

std::vector<TwoTensor> search_rmatrix(const LYAlgebra& alg, const std::vector<Rational>& values,
                                      int max_support) {
  const int n = alg.dim;
  std::vector<Rational> nz;
  for (const auto& v : values)
    if (!v.is_zero()) nz.push_back(v);
  std::vector<std::pair<int, int>> upper;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) upper.emplace_back(i, j);

  std::vector<TwoTensor> found;
  Mat cand(n, n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    {
      TwoTensor r(alg, cand);
      if (is_cybe_solution(r).pass) found.push_back(std::move(r));
    }
    if (remaining == 0) return;
    for (std::size_t p = start; p < upper.size(); ++p) {
      auto [i, j] = upper[p];
      for (const auto& v : nz) {
        cand(i, j) = v;
        cand(j, i) = -v;
        rec(p + 1, remaining - 1);
      }
      cand(i, j) = Rational(0);
      cand(j, i) = Rational(0);
    }
  };
  rec(0, max_support);
  return found;
}

} // namespace liya
