#include "liya/cohomology.hpp"

#include <stdexcept>

namespace liya {

Cochain Cochain::one(const Mat& f) {
  Cochain c;
  c.degree = 1;
  c.dim = f.cols();
  c.vdim = f.rows();
  c.linear = f;
  return c;
}

Cochain Cochain::pair(int degree, int dim, int vdim) {
  if (degree < 2) throw std::invalid_argument("cochain: pair form needs degree >= 2");
  Cochain c;
  c.degree = degree;
  c.dim = dim;
  c.vdim = vdim;
  Index fshape, gshape;
  for (int k = 0; k < degree - 1; ++k) {
    fshape.push_back(dim);
    fshape.push_back(dim);
    gshape.push_back(dim);
    gshape.push_back(dim);
  }
  gshape.push_back(dim);
  fshape.push_back(vdim);
  gshape.push_back(vdim);
  c.fpart = Tensor(fshape);
  c.gpart = Tensor(gshape);
  return c;
}

bool Cochain::is_zero() const {
  if (degree == 1) return linear.is_zero();
  return fpart.is_zero() && gpart.is_zero();
}

namespace {

// Contract the leading axes of t against the given coefficient vectors; the
// one surviving axis yields a vdim-vector.
std::vector<Rational> contract_leading(const Tensor& t, const std::vector<std::vector<Rational>>& args,
                                       int vdim) {
  auto out = zero_vec(vdim);
  t.for_each([&](const Index& idx, const Rational& v) {
    if (v.is_zero()) return;
    Rational c = v;
    for (std::size_t k = 0; k < args.size(); ++k) {
      c *= args[k][idx[k]];
      if (c.is_zero()) return;
    }
    out[idx.back()] += c;
  });
  return out;
}

} // namespace

std::vector<Rational> Cochain::eval_f(const std::vector<std::vector<Rational>>& args) const {
  if (degree < 2) throw std::invalid_argument("cochain: eval_f needs degree >= 2");
  if (static_cast<int>(args.size()) != 2 * (degree - 1))
    throw std::invalid_argument("cochain: eval_f argument count");
  return contract_leading(fpart, args, vdim);
}

std::vector<Rational> Cochain::eval_g(const std::vector<std::vector<Rational>>& args,
                                      const std::vector<Rational>& z) const {
  if (degree < 2) throw std::invalid_argument("cochain: eval_g needs degree >= 2");
  auto all = args;
  all.push_back(z);
  return contract_leading(gpart, all, vdim);
}

Cochain coboundary(const Cochain& c, const Representation& rep) {
  const int n0 = rep.base.dim, m = rep.vdim;
  if (c.dim != n0 || c.vdim != m) throw std::invalid_argument("coboundary: shape mismatch");
  const LYAlgebra& g = rep.base;
  std::vector<std::vector<Rational>> e;
  for (int i = 0; i < n0; ++i) e.push_back(basis_vec(n0, i));

  Cochain out = Cochain::pair(c.degree + 1, n0, m);

  if (c.degree == 1) {
    auto fv = [&](const std::vector<Rational>& x) { return c.linear.apply(x); };
    for (int x = 0; x < n0; ++x)
      for (int y = 0; y < n0; ++y) {
        auto v = sub(sub(rep.rho[x].apply(fv(e[y])), rep.rho[y].apply(fv(e[x]))),
                     fv(g.bracket(e[x], e[y])));
        for (int r = 0; r < m; ++r) out.fpart.at({x, y, r}) = v[r];
        for (int z = 0; z < n0; ++z) {
          auto w = add(rep.derived(x, y).apply(fv(e[z])), rep.mu[y][z].apply(fv(e[x])));
          w = sub(w, rep.mu[x][z].apply(fv(e[y])));
          w = sub(w, fv(g.triple(e[x], e[y], e[z])));
          for (int r = 0; r < m; ++r) out.gpart.at({x, y, z, r}) = w[r];
        }
      }
    return out;
  }

  // General pair case: input has nw = degree-1 wedge slots, output nw+1.
  const int nw = c.degree - 1;
  const int sign_n = (nw % 2 == 0) ? 1 : -1;  // (-1)^n with n = nw
  auto signed_vec = [](std::vector<Rational> v, int s) { return s > 0 ? v : neg(v); };

  // iterate all output basis tuples; the slot action X_k o X_l is evaluated
  // inside f/g by replacing slot l with the two wedge summands
  // <<x_k,y_k,x_l>> ^ y_l and x_l ^ <<x_k,y_k,y_l>>
  std::vector<int> idx(2 * (nw + 1), 0);
  bool done = false;
  while (!done) {
    // wedge arguments X_1..X_{nw+1} as basis vectors
    std::vector<std::vector<Rational>> X;  // flattened (x1,y1,x2,y2,...)
    for (int k = 0; k <= nw; ++k) {
      X.push_back(e[idx[2 * k]]);
      X.push_back(e[idx[2 * k + 1]]);
    }
    auto head = [&](int omit) {  // arguments with slot `omit` removed
      std::vector<std::vector<Rational>> a;
      for (int k = 0; k <= nw; ++k) {
        if (k == omit) continue;
        a.push_back(X[2 * k]);
        a.push_back(X[2 * k + 1]);
      }
      return a;
    };
    auto first_n = [&]() {  // X_1..X_n (drop the last wedge)
      std::vector<std::vector<Rational>> a(X.begin(), X.end() - 2);
      return a;
    };

    const auto& xl = X[2 * nw];
    const auto& yl = X[2 * nw + 1];

    // d_I
    {
      auto a = first_n();
      auto v = sub(rep.rho_of(xl).apply(c.eval_g(a, yl)), rep.rho_of(yl).apply(c.eval_g(a, xl)));
      v = sub(v, c.eval_g(a, g.bracket(xl, yl)));
      v = signed_vec(v, sign_n);
      for (int k = 0; k < nw; ++k) {
        auto fa = head(k);
        auto term = rep.derived_of(X[2 * k], X[2 * k + 1]).apply(c.eval_f(fa));
        v = (k % 2 == 0) ? add(v, term) : sub(v, term);
      }
      for (int k = 0; k <= nw; ++k)
        for (int l = k + 1; l <= nw; ++l) {
          auto fa = head(k);
          int lpos = (l < k ? l : l - 1);
          auto tx = g.triple(X[2 * k], X[2 * k + 1], X[2 * l]);
          auto ty = g.triple(X[2 * k], X[2 * k + 1], X[2 * l + 1]);
          auto fa1 = fa;
          fa1[2 * lpos] = tx;
          auto fa2 = fa;
          fa2[2 * lpos + 1] = ty;
          auto term = add(c.eval_f(fa1), c.eval_f(fa2));
          v = (k % 2 == 0) ? sub(v, term) : add(v, term);  // sign (-1)^{k+1}... k is 0-based here
        }
      Index at(idx.begin(), idx.end());
      at.push_back(0);
      for (int r = 0; r < m; ++r) {
        at.back() = r;
        out.fpart.at(at) = v[r];
      }
    }

    // d_II
    for (int z = 0; z < n0; ++z) {
      auto a = first_n();
      auto v = sub(rep.mu_of(yl, e[z]).apply(c.eval_g(a, xl)),
                   rep.mu_of(xl, e[z]).apply(c.eval_g(a, yl)));
      v = signed_vec(v, sign_n);
      for (int k = 0; k <= nw; ++k) {
        auto ga = head(k);
        auto term = rep.derived_of(X[2 * k], X[2 * k + 1]).apply(c.eval_g(ga, e[z]));
        v = (k % 2 == 0) ? add(v, term) : sub(v, term);
      }
      for (int k = 0; k <= nw; ++k)
        for (int l = k + 1; l <= nw; ++l) {
          auto ga = head(k);
          int lpos = (l < k ? l : l - 1);
          auto tx = g.triple(X[2 * k], X[2 * k + 1], X[2 * l]);
          auto ty = g.triple(X[2 * k], X[2 * k + 1], X[2 * l + 1]);
          auto ga1 = ga;
          ga1[2 * lpos] = tx;
          auto ga2 = ga;
          ga2[2 * lpos + 1] = ty;
          auto term = add(c.eval_g(ga1, e[z]), c.eval_g(ga2, e[z]));
          v = (k % 2 == 0) ? sub(v, term) : add(v, term);
        }
      for (int k = 0; k <= nw; ++k) {
        auto ga = head(k);
        auto term = c.eval_g(ga, g.triple(X[2 * k], X[2 * k + 1], e[z]));
        v = (k % 2 == 0) ? sub(v, term) : add(v, term);  // sign (-1)^k, k 1-based in the display
      }
      Index at(idx.begin(), idx.end());
      at.push_back(z);
      at.push_back(0);
      for (int r = 0; r < m; ++r) {
        at.back() = r;
        out.gpart.at(at) = v[r];
      }
    }

    // advance the multi-index
    int k = static_cast<int>(idx.size()) - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < n0) break;
      idx[k] = 0;
    }
    done = (k < 0);
  }
  return out;
}

bool is_one_cocycle(const Mat& f, const Representation& rep) {
  return coboundary(Cochain::one(f), rep).is_zero();
}

bool is_derivation(const Mat& d, const LYAlgebra& alg) {
  const int n = alg.dim;
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation: square matrix expected");
  std::vector<std::vector<Rational>> e, de;
  for (int i = 0; i < n; ++i) {
    e.push_back(basis_vec(n, i));
    de.push_back(d.apply(e.back()));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = d.apply(alg.bracket(e[i], e[j]));
      auto rhs = add(alg.bracket(de[i], e[j]), alg.bracket(e[i], de[j]));
      if (!is_zero(sub(lhs, rhs))) return false;
      for (int k = 0; k < n; ++k) {
        auto l3 = d.apply(alg.triple(e[i], e[j], e[k]));
        auto r3 = add(add(alg.triple(de[i], e[j], e[k]), alg.triple(e[i], de[j], e[k])),
                      alg.triple(e[i], e[j], de[k]));
        if (!is_zero(sub(l3, r3))) return false;
      }
    }
  return true;
}

} // namespace liya
