#include "liya/representation.hpp"

#include <stdexcept>

namespace liya {

Representation::Representation(LYAlgebra alg, int m) : base(std::move(alg)), vdim(m) {
  rho.assign(base.dim, Mat(m, m));
  mu.assign(base.dim, std::vector<Mat>(base.dim, Mat(m, m)));
}

Mat Representation::rho_of(const std::vector<Rational>& x) const {
  Mat out(vdim, vdim);
  for (int i = 0; i < base.dim; ++i)
    if (!x[i].is_zero()) out = out + rho[i].scaled(x[i]);
  return out;
}

Mat Representation::mu_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Mat out(vdim, vdim);
  for (int i = 0; i < base.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < base.dim; ++j)
      if (!y[j].is_zero()) out = out + mu[i][j].scaled(x[i] * y[j]);
  }
  return out;
}

Mat Representation::derived(int i, int j) const {
  return mu[j][i] - mu[i][j] + commutator(rho[i], rho[j]) -
         rho_of(base.bracket(basis_vec(base.dim, i), basis_vec(base.dim, j)));
}

Mat Representation::derived_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Mat out(vdim, vdim);
  for (int i = 0; i < base.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < base.dim; ++j)
      if (!y[j].is_zero()) out = out + derived(i, j).scaled(x[i] * y[j]);
  }
  return out;
}

std::vector<std::vector<Mat>> derived_D(const Representation& rep) {
  std::vector<std::vector<Mat>> out(rep.base.dim, std::vector<Mat>(rep.base.dim));
  for (int i = 0; i < rep.base.dim; ++i)
    for (int j = 0; j < rep.base.dim; ++j) out[i][j] = rep.derived(i, j);
  return out;
}

namespace {

void record(CheckResult& cr, Tensor& where, const Index& tuple_prefix, const Mat& residual) {
  Index idx = tuple_prefix;
  idx.push_back(0);
  idx.push_back(0);
  for (int r = 0; r < residual.rows(); ++r)
    for (int c = 0; c < residual.cols(); ++c) {
      idx[idx.size() - 2] = r;
      idx[idx.size() - 1] = c;
      const Rational& v = residual(r, c);
      if (!v.is_zero()) cr.pass = false;
      where.at(idx) = v;
    }
}

} // namespace

AxiomReport check_representation(const Representation& rep) {
  const int n = rep.base.dim, m = rep.vdim;
  const LYAlgebra& g = rep.base;
  AxiomReport out;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  auto D = derived_D(rep);
  auto Dof = [&](int i, int j) { return D[i][j]; };

  CheckResult a1{"mu-bracket-left", true, Tensor(Index{n, n, n, m, m})};
  CheckResult a2{"mu-bracket-right", true, Tensor(Index{n, n, n, m, m})};
  CheckResult a3{"rho-triple", true, Tensor(Index{n, n, n, m, m})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Mat r1 = rep.mu_of(g.bracket(e[x], e[y]), e[z]) - rep.mu[x][z] * rep.rho[y] +
                 rep.mu[y][z] * rep.rho[x];
        record(a1, a1.residual, {x, y, z}, r1);
        Mat r2 = rep.mu_of(e[x], g.bracket(e[y], e[z])) - rep.rho[y] * rep.mu[x][z] +
                 rep.rho[z] * rep.mu[x][y];
        record(a2, a2.residual, {x, y, z}, r2);
        Mat r3 = rep.rho_of(g.triple(e[x], e[y], e[z])) - commutator(Dof(x, y), rep.rho[z]);
        record(a3, a3.residual, {x, y, z}, r3);
      }
  out.checks.push_back(std::move(a1));
  out.checks.push_back(std::move(a2));
  out.checks.push_back(std::move(a3));

  CheckResult a4{"mu-mu-exchange", true, Tensor(Index{n, n, n, n, m, m})};
  CheckResult a5{"mu-triple-leibniz", true, Tensor(Index{n, n, n, n, m, m})};
  CheckResult d1{"derived-cyclic", true, Tensor(Index{n, n, n, m, m})};
  CheckResult d2{"derived-triple-leibniz", true, Tensor(Index{n, n, n, n, m, m})};
  CheckResult d3{"mu-triple-alt", true, Tensor(Index{n, n, n, n, m, m})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Mat rd1 = rep.derived_of(g.bracket(e[x], e[y]), e[z]) +
                  rep.derived_of(g.bracket(e[y], e[z]), e[x]) +
                  rep.derived_of(g.bracket(e[z], e[x]), e[y]);
        record(d1, d1.residual, {x, y, z}, rd1);
        for (int w = 0; w < n; ++w) {
          Mat r4 = rep.mu[z][w] * rep.mu[x][y] - rep.mu[y][w] * rep.mu[x][z] -
                   rep.mu_of(e[x], g.triple(e[y], e[z], e[w])) + Dof(y, z) * rep.mu[x][w];
          record(a4, a4.residual, {x, y, z, w}, r4);
          Mat r5 = rep.mu_of(g.triple(e[x], e[y], e[z]), e[w]) +
                   rep.mu_of(e[z], g.triple(e[x], e[y], e[w])) -
                   commutator(Dof(x, y), rep.mu[z][w]);
          record(a5, a5.residual, {x, y, z, w}, r5);
          Mat rd2 = rep.derived_of(g.triple(e[x], e[y], e[z]), e[w]) +
                    rep.derived_of(e[z], g.triple(e[x], e[y], e[w])) -
                    commutator(Dof(x, y), Dof(z, w));
          record(d2, d2.residual, {x, y, z, w}, rd2);
          Mat rd3 = rep.mu_of(g.triple(e[x], e[y], e[z]), e[w]) -
                    (rep.mu[x][w] * rep.mu[z][y] - rep.mu[y][w] * rep.mu[z][x] -
                     rep.mu[z][w] * Dof(x, y));
          record(d3, d3.residual, {x, y, z, w}, rd3);
        }
      }
  out.checks.push_back(std::move(a4));
  out.checks.push_back(std::move(a5));
  out.checks.push_back(std::move(d1));
  out.checks.push_back(std::move(d2));
  out.checks.push_back(std::move(d3));
  return out;
}

bool representation_holds(const Representation& rep) {
  const int n = rep.base.dim;
  const LYAlgebra& g = rep.base;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  auto D = derived_D(rep);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!(rep.mu_of(g.bracket(e[x], e[y]), e[z]) - rep.mu[x][z] * rep.rho[y] +
              rep.mu[y][z] * rep.rho[x])
                 .is_zero())
          return false;
        if (!(rep.mu_of(e[x], g.bracket(e[y], e[z])) - rep.rho[y] * rep.mu[x][z] +
              rep.rho[z] * rep.mu[x][y])
                 .is_zero())
          return false;
        if (!(rep.rho_of(g.triple(e[x], e[y], e[z])) - commutator(D[x][y], rep.rho[z])).is_zero())
          return false;
        for (int w = 0; w < n; ++w) {
          if (!(rep.mu[z][w] * rep.mu[x][y] - rep.mu[y][w] * rep.mu[x][z] -
                rep.mu_of(e[x], g.triple(e[y], e[z], e[w])) + D[y][z] * rep.mu[x][w])
                   .is_zero())
            return false;
          if (!(rep.mu_of(g.triple(e[x], e[y], e[z]), e[w]) +
                rep.mu_of(e[z], g.triple(e[x], e[y], e[w])) - commutator(D[x][y], rep.mu[z][w]))
                   .is_zero())
            return false;
        }
      }
  return true;
}

Representation adjoint_rep(const LYAlgebra& alg) {
  Representation rep(alg, alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    rep.rho[i] = alg.ad(i);
    for (int j = 0; j < alg.dim; ++j) rep.mu[i][j] = alg.right_triple(i, j);
  }
  return rep;
}

Representation dual_rep(const Representation& rep) {
  Representation out(rep.base, rep.vdim);
  for (int i = 0; i < rep.base.dim; ++i) {
    out.rho[i] = -rep.rho[i].transpose();
    for (int j = 0; j < rep.base.dim; ++j) out.mu[i][j] = rep.mu[j][i].transpose();
  }
  return out;
}

Representation coadjoint_rep(const LYAlgebra& alg) { return dual_rep(adjoint_rep(alg)); }

LYAlgebra semidirect_product(const LYAlgebra& alg, const Representation& rep) {
  if (rep.base.dim != alg.dim) throw std::invalid_argument("semidirect: base dimension mismatch");
  const int n = alg.dim, m = rep.vdim;
  LYAlgebra s(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) s.binary.at({i, j, k}) = alg.binary.at({i, j, k});
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s.ternary.at({i, j, k, l}) = alg.ternary.at({i, j, k, l});
    }
  // [x, v] = rho(x)v ; <<x,y,w>> = D(x,y)w ; <<u,y,z>> = mu(y,z)u ; <<x,v,z>> = -mu(x,z)v
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int r = 0; r < m; ++r) {
        s.binary.at({i, n + b, n + r}) = rep.rho[i](r, b);
        s.binary.at({n + b, i, n + r}) = -rep.rho[i](r, b);
      }
  auto D = derived_D(rep);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < m; ++c)
        for (int r = 0; r < m; ++r) {
          s.ternary.at({i, j, n + c, n + r}) = D[i][j](r, c);
          s.ternary.at({n + c, i, j, n + r}) = rep.mu[i][j](r, c);
          s.ternary.at({i, n + c, j, n + r}) = -rep.mu[i][j](r, c);
        }
  return s;
}

} // namespace liya
