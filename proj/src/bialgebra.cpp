#include "liya/bialgebra.hpp"

#include "liya/cohomology.hpp"

#include <functional>
#include <stdexcept>

namespace liya {

bool Cobracket::splits_consistent() const {
  if (!has_splits()) return false;
  return (*delta1 + *delta2) == delta && (*omega1 + *omega2 + *omega3) == omega;
}

namespace {

// delta(x) and omega(x) for a coefficient vector x
Tensor delta_of(const Cobracket& c, const std::vector<Rational>& x) {
  const int n = c.alg.dim;
  Tensor out(Index{n, n});
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Rational& v = c.delta.at({i, a, b});
        if (!v.is_zero()) out.at({a, b}) += x[i] * v;
      }
  }
  return out;
}

Tensor omega_of(const Cobracket& c, const std::vector<Rational>& x) {
  const int n = c.alg.dim;
  Tensor out(Index{n, n, n});
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          const Rational& v = c.omega.at({i, a, b, d});
          if (!v.is_zero()) out.at({a, b, d}) += x[i] * v;
        }
  }
  return out;
}

// matrix action on one slot of a tensor
Tensor apply_slot(const Mat& m, const Tensor& t, int slot) {
  Tensor out(t.shape());
  t.for_each([&](const Index& idx, const Rational& v) {
    if (v.is_zero()) return;
    Index j = idx;
    for (int r = 0; r < m.rows(); ++r) {
      const Rational& c = m(r, idx[slot]);
      if (c.is_zero()) continue;
      j[slot] = r;
      out.at(j) += c * v;
    }
  });
  return out;
}

void record_tensor(CheckResult& cr, const Index& prefix, const Tensor& res) {
  Index idx = prefix;
  std::size_t base = idx.size();
  idx.resize(base + res.shape().size());
  res.for_each([&](const Index& sub, const Rational& v) {
    for (std::size_t k = 0; k < sub.size(); ++k) idx[base + k] = sub[k];
    if (!v.is_zero()) cr.pass = false;
    cr.residual.at(idx) = v;
  });
}

} // namespace

LYAlgebra dual_constants(const Cobracket& c) {
  const int n = c.alg.dim;
  LYAlgebra d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        d.binary.at({i, j, k}) = c.delta.at({k, i, j});
        for (int l = 0; l < n; ++l) d.ternary.at({i, j, k, l}) = c.omega.at({l, i, j, k});
      }
  return d;
}

DualStructureReport dual_structure(const Cobracket& c) {
  DualStructureReport rep;
  rep.candidate = dual_constants(c);
  const int n = c.alg.dim;
  rep.skew = true;
  for (int i = 0; i < n && rep.skew; ++i)
    for (int j = 0; j < n && rep.skew; ++j)
      for (int k = 0; k < n && rep.skew; ++k) {
        if (!(rep.candidate.binary.at({i, j, k}) + rep.candidate.binary.at({j, i, k})).is_zero())
          rep.skew = false;
        for (int l = 0; l < n; ++l)
          if (!(rep.candidate.ternary.at({i, j, k, l}) + rep.candidate.ternary.at({j, i, k, l}))
                   .is_zero()) {
            rep.skew = false;
            break;
          }
      }
  rep.axioms = check_ly_axioms(rep.candidate);
  return rep;
}

Representation slot_representation(const LYAlgebra& alg, int order, int slot) {
  if (order < 2 || order > 3) throw std::invalid_argument("slot_representation: order 2 or 3");
  if (slot < 0 || slot >= order) throw std::invalid_argument("slot_representation: bad slot");
  const int n = alg.dim;
  int m = 1;
  for (int k = 0; k < order; ++k) m *= n;

  Representation rep(alg, m);
  auto embed = [&](const Mat& a) {
    Mat big(m, m);
    Index idx(order, 0);
    for (int col = 0; col < m; ++col) {
      // decode column into the multi-index
      int rest = col;
      for (int k = order - 1; k >= 0; --k) {
        idx[k] = rest % n;
        rest /= n;
      }
      // row index = column index with the slot digit replaced
      for (int r = 0; r < n; ++r) {
        const Rational& c = a(r, idx[slot]);
        if (c.is_zero()) continue;
        int row = 0;
        for (int k = 0; k < order; ++k) row = row * n + (k == slot ? r : idx[k]);
        big(row, col) += c;
      }
    }
    return big;
  };
  for (int i = 0; i < n; ++i) {
    rep.rho[i] = embed(alg.ad(i));
    for (int j = 0; j < n; ++j) rep.mu[i][j] = embed(alg.right_triple(i, j));
  }
  return rep;
}

namespace {

// The seven compatibility residuals; `which` in 1..7, evaluated per tuple.
struct CompatContext {
  const LYAlgebra& g;
  std::vector<std::vector<Rational>> e;
  std::vector<Mat> ad;
  std::vector<std::vector<Mat>> R, L;

  explicit CompatContext(const LYAlgebra& alg) : g(alg) {
    const int n = g.dim;
    for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
    for (int i = 0; i < n; ++i) ad.push_back(g.ad(i));
    R.assign(n, std::vector<Mat>(n));
    L.assign(n, std::vector<Mat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        R[i][j] = g.right_triple(i, j);
        L[i][j] = g.left_triple(i, j);
      }
  }
};

Tensor compat1(const CompatContext& cx, const Cobracket& c, int x, int y) {
  auto dx = delta_of(c, cx.e[x]);
  auto dy = delta_of(c, cx.e[y]);
  auto res = delta_of(c, cx.g.bracket(cx.e[x], cx.e[y]));
  res = res - (apply_slot(cx.ad[x], dy, 0) + apply_slot(cx.ad[x], dy, 1));
  return res + apply_slot(cx.ad[y], dx, 0) + apply_slot(cx.ad[y], dx, 1);
}

Tensor compat2(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  return apply_slot(cx.R[y][z], delta_of(c, cx.e[x]), 1) -
         apply_slot(cx.R[x][z], delta_of(c, cx.e[y]), 1);
}

Tensor compat3(const CompatContext& cx, const Cobracket& c, int x, int y) {
  auto res = omega_of(c, cx.g.bracket(cx.e[x], cx.e[y]));
  res = res - apply_slot(cx.ad[x], omega_of(c, cx.e[y]), 2);
  return res + apply_slot(cx.ad[y], omega_of(c, cx.e[x]), 2);
}

Tensor compat4(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  auto dz = delta_of(c, cx.e[z]);
  auto res = delta_of(c, cx.g.triple(cx.e[x], cx.e[y], cx.e[z]));
  return res - apply_slot(cx.L[x][y], dz, 0) - apply_slot(cx.L[x][y], dz, 1);
}

Tensor compat5(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  return apply_slot(cx.R[y][z], delta_of(c, cx.e[x]), 0) -
         apply_slot(cx.R[x][z], delta_of(c, cx.e[y]), 0);
}

Tensor compat6(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  auto wz = omega_of(c, cx.e[z]);
  auto res = omega_of(c, cx.g.triple(cx.e[x], cx.e[y], cx.e[z]));
  for (int s = 0; s < 3; ++s) res = res - apply_slot(cx.L[x][y], wz, s);
  return res;
}

// sigma12 sigma23 applies sigma23 first.
Tensor compat7(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  auto wz = omega_of(c, cx.e[z]);
  auto lhs = apply_slot(cx.R[y][x], wz, 1) - apply_slot(cx.R[x][y], wz, 0);
  auto t1 = apply_slot(cx.R[x][z], omega_of(c, cx.e[y]), 1).swap_axes(1, 2).swap_axes(0, 1);
  auto t2 = apply_slot(cx.R[y][z], omega_of(c, cx.e[x]), 1).swap_axes(1, 2);
  return lhs - t1 - t2;
}

// The brackets must annihilate the wedge pair of the tricobracket:
// (ad_x (x) 1 (x) 1 + 1 (x) ad_x (x) 1) omega(y) = 0.
Tensor compat8(const CompatContext& cx, const Cobracket& c, int x, int y) {
  auto wy = omega_of(c, cx.e[y]);
  return apply_slot(cx.ad[x], wy, 0) + apply_slot(cx.ad[x], wy, 1);
}

// Companion exchange condition on the right actions, mixing all three
// tricobracket slots across the arguments.
Tensor compat9(const CompatContext& cx, const Cobracket& c, int x, int y, int z) {
  auto wz = omega_of(c, cx.e[z]);
  auto res = apply_slot(cx.R[y][x], wz, 1).swap_axes(0, 2);
  res = res + apply_slot(cx.R[x][z], omega_of(c, cx.e[y]), 0);
  res = res - apply_slot(cx.R[x][y], wz, 0).swap_axes(0, 2);
  return res - apply_slot(cx.R[y][z], omega_of(c, cx.e[x]), 1).permute({2, 0, 1});
}

// The cobracket with the roles of brackets and cobrackets exchanged: the
// dual constants become the base algebra and the original brackets the
// cobrackets. The mirror compatibilities of c are the direct ones of this.
Cobracket swapped_cobracket(const Cobracket& c) {
  Cobracket out(dual_constants(c));
  const int n = c.alg.dim;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        out.delta.at({i, a, b}) = c.alg.binary.at({a, b, i});
        for (int d = 0; d < n; ++d) out.omega.at({i, a, b, d}) = c.alg.ternary.at({a, b, d, i});
      }
  return out;
}

} // namespace

namespace {

void fold_compat(AxiomReport& out, const Cobracket& c, const std::string& prefix) {
  const int n = c.alg.dim;
  CompatContext cx(c.alg);

  CheckResult r1{prefix + "compat-binary-cobracket", true, Tensor(Index{n, n, n, n})};
  CheckResult r3{prefix + "compat-binary-tricobracket", true, Tensor(Index{n, n, n, n, n})};
  CheckResult r8{prefix + "compat-wedge-action", true, Tensor(Index{n, n, n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      record_tensor(r1, {x, y}, compat1(cx, c, x, y));
      record_tensor(r3, {x, y}, compat3(cx, c, x, y));
      record_tensor(r8, {x, y}, compat8(cx, c, x, y));
    }
  out.checks.push_back(std::move(r1));

  CheckResult r2{prefix + "compat-right-action-delta", true, Tensor(Index{n, n, n, n, n})};
  CheckResult r4{prefix + "compat-ternary-cobracket", true, Tensor(Index{n, n, n, n, n})};
  CheckResult r5{prefix + "compat-right-action-delta-left", true, Tensor(Index{n, n, n, n, n})};
  CheckResult r6{prefix + "compat-ternary-tricobracket", true, Tensor(Index{n, n, n, n, n, n})};
  CheckResult r7{prefix + "compat-right-action-omega", true, Tensor(Index{n, n, n, n, n, n})};
  CheckResult r9{prefix + "compat-right-action-mixed", true, Tensor(Index{n, n, n, n, n, n})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        record_tensor(r2, {x, y, z}, compat2(cx, c, x, y, z));
        record_tensor(r4, {x, y, z}, compat4(cx, c, x, y, z));
        record_tensor(r5, {x, y, z}, compat5(cx, c, x, y, z));
        record_tensor(r6, {x, y, z}, compat6(cx, c, x, y, z));
        record_tensor(r7, {x, y, z}, compat7(cx, c, x, y, z));
        record_tensor(r9, {x, y, z}, compat9(cx, c, x, y, z));
      }
  out.checks.push_back(std::move(r2));
  out.checks.push_back(std::move(r3));
  out.checks.push_back(std::move(r4));
  out.checks.push_back(std::move(r5));
  out.checks.push_back(std::move(r6));
  out.checks.push_back(std::move(r7));
  out.checks.push_back(std::move(r8));
  out.checks.push_back(std::move(r9));
}

bool compat_holds(const Cobracket& c) {
  const int n = c.alg.dim;
  CompatContext cx(c.alg);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!compat1(cx, c, x, y).is_zero()) return false;
      if (!compat3(cx, c, x, y).is_zero()) return false;
      if (!compat8(cx, c, x, y).is_zero()) return false;
      for (int z = 0; z < n; ++z) {
        if (!compat2(cx, c, x, y, z).is_zero()) return false;
        if (!compat4(cx, c, x, y, z).is_zero()) return false;
        if (!compat5(cx, c, x, y, z).is_zero()) return false;
        if (!compat6(cx, c, x, y, z).is_zero()) return false;
        if (!compat7(cx, c, x, y, z).is_zero()) return false;
        if (!compat9(cx, c, x, y, z).is_zero()) return false;
      }
    }
  return true;
}

} // namespace

AxiomReport check_compatibilities(const Cobracket& c) {
  AxiomReport out;
  fold_compat(out, c, "");
  fold_compat(out, swapped_cobracket(c), "mirror-");
  return out;
}

DoubleConstructionReport check_double_construction(const Cobracket& c) {
  DoubleConstructionReport rep;
  rep.dual = dual_structure(c);
  rep.compat = check_compatibilities(c);
  return rep;
}

bool double_construction_holds(const Cobracket& c) {
  const int n = c.alg.dim;
  // cheap skewness rejection first
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!(c.delta.at({i, a, b}) + c.delta.at({i, b, a})).is_zero()) return false;
        for (int d = 0; d < n; ++d)
          if (!(c.omega.at({i, a, b, d}) + c.omega.at({i, b, a, d})).is_zero()) return false;
      }
  if (!compat_holds(c)) return false;
  if (!ly_axioms_hold(dual_constants(c))) return false;
  return compat_holds(swapped_cobracket(c));
}

MatchedPairData::MatchedPairData(LYAlgebra a, LYAlgebra b) : g1(std::move(a)), g2(std::move(b)) {
  rho1.assign(g1.dim, Mat(g2.dim, g2.dim));
  mu1.assign(g1.dim, std::vector<Mat>(g1.dim, Mat(g2.dim, g2.dim)));
  rho2.assign(g2.dim, Mat(g1.dim, g1.dim));
  mu2.assign(g2.dim, std::vector<Mat>(g2.dim, Mat(g1.dim, g1.dim)));
}

Representation MatchedPairData::rep1() const {
  Representation rep(g1, g2.dim);
  rep.rho = rho1;
  rep.mu = mu1;
  return rep;
}

Representation MatchedPairData::rep2() const {
  Representation rep(g2, g1.dim);
  rep.rho = rho2;
  rep.mu = mu2;
  return rep;
}

MatchedPairData coadjoint_pair(const LYAlgebra& g, const LYAlgebra& gdual) {
  if (g.dim != gdual.dim) throw std::invalid_argument("coadjoint_pair: dimension mismatch");
  MatchedPairData mp(g, gdual);
  for (int i = 0; i < g.dim; ++i) {
    mp.rho1[i] = -g.ad(i).transpose();
    for (int j = 0; j < g.dim; ++j) mp.mu1[i][j] = g.right_triple(j, i).transpose();
  }
  for (int a = 0; a < gdual.dim; ++a) {
    mp.rho2[a] = -gdual.ad(a).transpose();
    for (int b = 0; b < gdual.dim; ++b) mp.mu2[a][b] = gdual.right_triple(b, a).transpose();
  }
  return mp;
}

LYAlgebra bowtie_product(const MatchedPairData& mp) {
  const int n = mp.g1.dim, m = mp.g2.dim;
  LYAlgebra s(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) s.binary.at({i, j, k}) = mp.g1.binary.at({i, j, k});
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s.ternary.at({i, j, k, l}) = mp.g1.ternary.at({i, j, k, l});
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int cc = 0; cc < m; ++cc)
        s.binary.at({n + a, n + b, n + cc}) = mp.g2.binary.at({a, b, cc});
      for (int cc = 0; cc < m; ++cc)
        for (int d = 0; d < m; ++d)
          s.ternary.at({n + a, n + b, n + cc, n + d}) = mp.g2.ternary.at({a, b, cc, d});
    }
  // binary mixed: [x, u] = rho1(x)u - rho2(u)x
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b) {
      for (int r = 0; r < m; ++r) {
        s.binary.at({i, n + b, n + r}) += mp.rho1[i](r, b);
        s.binary.at({n + b, i, n + r}) -= mp.rho1[i](r, b);
      }
      for (int r = 0; r < n; ++r) {
        s.binary.at({i, n + b, r}) -= mp.rho2[b](r, i);
        s.binary.at({n + b, i, r}) += mp.rho2[b](r, i);
      }
    }
  auto D1 = derived_D(mp.rep1());
  auto D2 = derived_D(mp.rep2());
  // ternary mixed, one g2 argument: <<x,y,w>> = D1(x,y)w,
  //   <<u,y,z>> = mu1(y,z)u, <<x,v,z>> = -mu1(x,z)v
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int cc = 0; cc < m; ++cc)
        for (int r = 0; r < m; ++r) {
          s.ternary.at({i, j, n + cc, n + r}) += D1[i][j](r, cc);
          s.ternary.at({n + cc, i, j, n + r}) += mp.mu1[i][j](r, cc);
          s.ternary.at({i, n + cc, j, n + r}) -= mp.mu1[i][j](r, cc);
        }
  // ternary mixed, one g1 argument: <<u,v,z>> = D2(u,v)z,
  //   <<x,v,w>> = mu2(v,w)x, <<u,y,w>> = -mu2(u,w)y
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
          s.ternary.at({n + a, n + b, k, r}) += D2[a][b](r, k);
          s.ternary.at({k, n + a, n + b, r}) += mp.mu2[a][b](r, k);
          s.ternary.at({n + a, k, n + b, r}) -= mp.mu2[a][b](r, k);
        }
  return s;
}

namespace {

using Vec = std::vector<Rational>;

struct MpContext {
  const MatchedPairData& mp;
  Representation r1, r2;
  std::vector<std::vector<Mat>> D1, D2;
  std::vector<Vec> e1, e2;

  explicit MpContext(const MatchedPairData& m) : mp(m), r1(m.rep1()), r2(m.rep2()) {
    D1 = derived_D(r1);
    D2 = derived_D(r2);
    for (int i = 0; i < m.g1.dim; ++i) e1.push_back(basis_vec(m.g1.dim, i));
    for (int a = 0; a < m.g2.dim; ++a) e2.push_back(basis_vec(m.g2.dim, a));
  }
  Mat rho1(const Vec& x) const { return r1.rho_of(x); }
  Mat mu1(const Vec& x, const Vec& y) const { return r1.mu_of(x, y); }
  Mat Dm1(const Vec& x, const Vec& y) const { return r1.derived_of(x, y); }
  Mat rho2(const Vec& u) const { return r2.rho_of(u); }
  Mat mu2(const Vec& u, const Vec& v) const { return r2.mu_of(u, v); }
  Mat Dm2(const Vec& u, const Vec& v) const { return r2.derived_of(u, v); }
};

// the nine identities with values in g1 (the other nine are the mirror)
Vec mtp_id(const MpContext& c, int which, const Vec& x, const Vec& y, const Vec& z, const Vec& u,
           const Vec& v) {
  const LYAlgebra& g1 = c.mp.g1;
  switch (which) {
    case 1:
      return add(sub(sub(sub(g1.bracket(c.rho2(u).apply(x), y), c.rho2(c.rho1(x).apply(u)).apply(y)),
                         c.rho2(u).apply(g1.bracket(x, y))),
                     g1.bracket(c.rho2(u).apply(y), x)),
                 c.rho2(c.rho1(y).apply(u)).apply(x));
    case 2:
      return sub(g1.triple(c.rho2(u).apply(x), y, z), g1.triple(c.rho2(u).apply(y), x, z));
    case 3:
      return add(sub(c.mu2(u, v).apply(g1.bracket(x, y)), c.mu2(c.rho1(y).apply(u), v).apply(x)),
                 c.mu2(c.rho1(x).apply(u), v).apply(y));
    case 4:
      return sub(sub(g1.triple(x, y, c.rho2(u).apply(z)), c.rho2(c.Dm1(x, y).apply(u)).apply(z)),
                 c.rho2(u).apply(g1.triple(x, y, z)));
    case 5:
      return sub(c.mu2(u, c.rho1(x).apply(v)).apply(y), g1.bracket(x, c.mu2(u, v).apply(y)));
    case 6:
      return sub(c.rho2(c.mu1(x, y).apply(u)).apply(z), c.rho2(c.mu1(x, z).apply(u)).apply(y));
    case 7:
      return sub(sub(sub(g1.triple(x, y, c.mu2(u, v).apply(z)), c.mu2(u, v).apply(g1.triple(x, y, z))),
                     c.mu2(c.Dm1(x, y).apply(u), v).apply(z)),
                 c.mu2(u, c.Dm1(x, y).apply(v)).apply(z));
    case 8:
      return sub(add(sub(c.mu2(u, c.mu1(x, y).apply(v)).apply(z),
                         g1.triple(c.mu2(u, v).apply(z), x, y)),
                     c.Dm2(v, c.mu1(z, x).apply(u)).apply(y)),
                 c.mu2(v, c.mu1(z, y).apply(u)).apply(x));
    case 9:
      return sub(add(sub(c.mu2(u, c.mu1(x, y).apply(v)).apply(z),
                         c.Dm2(c.mu1(z, x).apply(u), v).apply(y)),
                     g1.triple(x, c.mu2(u, v).apply(z), y)),
                 c.mu2(v, c.mu1(z, y).apply(u)).apply(x));
    default:
      throw std::logic_error("mtp_id: bad identity index");
  }
}

MatchedPairData swapped(const MatchedPairData& mp) {
  MatchedPairData out(mp.g2, mp.g1);
  out.rho1 = mp.rho2;
  out.mu1 = mp.mu2;
  out.rho2 = mp.rho1;
  out.mu2 = mp.mu1;
  return out;
}

} // namespace

AxiomReport check_matched_pair(const MatchedPairData& mp) {
  AxiomReport out;
  out.checks.push_back(
      CheckResult{"rep-g1-on-g2", representation_holds(mp.rep1()), Tensor(Index{1})});
  out.checks.push_back(
      CheckResult{"rep-g2-on-g1", representation_holds(mp.rep2()), Tensor(Index{1})});

  MpContext cx(mp);
  MatchedPairData sm = swapped(mp);
  MpContext cs(sm);
  const int n = mp.g1.dim, m = mp.g2.dim;
  char name[16];
  for (int which = 1; which <= 9; ++which) {
    std::snprintf(name, sizeof name, "mtp-%02d", which);
    CheckResult cr{name, true, Tensor(Index{n, n, n, m, m, n})};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
              auto r = mtp_id(cx, which, cx.e1[x], cx.e1[y], cx.e1[z], cx.e2[u], cx.e2[v]);
              for (int k = 0; k < n; ++k) {
                if (!r[k].is_zero()) cr.pass = false;
                cr.residual.at({x, y, z, u, v, k}) = r[k];
              }
            }
    out.checks.push_back(std::move(cr));
  }
  for (int which = 1; which <= 9; ++which) {
    std::snprintf(name, sizeof name, "mtp-%02d", which + 9);
    CheckResult cr{name, true, Tensor(Index{m, m, m, n, n, m})};
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              auto r = mtp_id(cs, which, cs.e1[u], cs.e1[v], cs.e1[w], cs.e2[x], cs.e2[y]);
              for (int k = 0; k < m; ++k) {
                if (!r[k].is_zero()) cr.pass = false;
                cr.residual.at({u, v, w, x, y, k}) = r[k];
              }
            }
    out.checks.push_back(std::move(cr));
  }
  return out;
}

bool matched_pair_holds(const MatchedPairData& mp) {
  if (!representation_holds(mp.rep1()) || !representation_holds(mp.rep2())) return false;
  MpContext cx(mp);
  MatchedPairData sm = swapped(mp);
  MpContext cs(sm);
  const int n = mp.g1.dim, m = mp.g2.dim;
  for (int which = 1; which <= 9; ++which)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
              if (!is_zero(mtp_id(cx, which, cx.e1[x], cx.e1[y], cx.e1[z], cx.e2[u], cx.e2[v])))
                return false;
  for (int which = 1; which <= 9; ++which)
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (!is_zero(mtp_id(cs, which, cs.e1[u], cs.e1[v], cs.e1[w], cs.e2[x], cs.e2[y])))
                return false;
  return true;
}

AxiomReport matched_pair_consequences(const MatchedPairData& mp) {
  MpContext cx(mp);
  const int n = mp.g1.dim, m = mp.g2.dim;
  const LYAlgebra& g1 = mp.g1;
  const LYAlgebra& g2 = mp.g2;
  AxiomReport out;

  CheckResult c1{"derived2-rho1-symmetry", true, Tensor(Index{n, m, m, n, n})};
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        Mat r = cx.Dm2(cx.rho1(cx.e1[x]).apply(cx.e2[u]), cx.e2[v]) -
                cx.Dm2(cx.rho1(cx.e1[x]).apply(cx.e2[v]), cx.e2[u]);
        record_tensor(c1, {x, u, v}, [&] {
          Tensor t(Index{n, n});
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t.at({a, b}) = r(a, b);
          return t;
        }());
      }
  out.checks.push_back(std::move(c1));

  CheckResult c2{"derived2-binary-derivation", true, Tensor(Index{m, m, n, n, n})};
  CheckResult c3{"derived2-ternary-derivation", true, Tensor(Index{m, m, n, n, n, n})};
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      Mat D = cx.Dm2(cx.e2[u], cx.e2[v]);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          auto r = sub(D.apply(g1.bracket(cx.e1[x], cx.e1[y])),
                       add(g1.bracket(D.apply(cx.e1[x]), cx.e1[y]),
                           g1.bracket(cx.e1[x], D.apply(cx.e1[y]))));
          for (int k = 0; k < n; ++k) {
            if (!r[k].is_zero()) c2.pass = false;
            c2.residual.at({u, v, x, y, k}) = r[k];
          }
          for (int z = 0; z < n; ++z) {
            auto r3 = sub(D.apply(g1.triple(cx.e1[x], cx.e1[y], cx.e1[z])),
                          add(add(g1.triple(D.apply(cx.e1[x]), cx.e1[y], cx.e1[z]),
                                  g1.triple(cx.e1[x], D.apply(cx.e1[y]), cx.e1[z])),
                              g1.triple(cx.e1[x], cx.e1[y], D.apply(cx.e1[z]))));
            for (int k = 0; k < n; ++k) {
              if (!r3[k].is_zero()) c3.pass = false;
              c3.residual.at({u, v, x, y, z, k}) = r3[k];
            }
          }
        }
    }
  out.checks.push_back(std::move(c2));
  out.checks.push_back(std::move(c3));

  CheckResult c4{"derived1-rho2-symmetry", true, Tensor(Index{m, n, n, m, m})};
  for (int u = 0; u < m; ++u)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Mat r = cx.Dm1(cx.rho2(cx.e2[u]).apply(cx.e1[x]), cx.e1[y]) -
                cx.Dm1(cx.rho2(cx.e2[u]).apply(cx.e1[y]), cx.e1[x]);
        record_tensor(c4, {u, x, y}, [&] {
          Tensor t(Index{m, m});
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) t.at({a, b}) = r(a, b);
          return t;
        }());
      }
  out.checks.push_back(std::move(c4));

  CheckResult c5{"derived1-binary-derivation", true, Tensor(Index{n, n, m, m, m})};
  CheckResult c6{"derived1-ternary-derivation", true, Tensor(Index{n, n, m, m, m, m})};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat D = cx.Dm1(cx.e1[x], cx.e1[y]);
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
          auto r = sub(D.apply(g2.bracket(cx.e2[u], cx.e2[v])),
                       add(g2.bracket(D.apply(cx.e2[u]), cx.e2[v]),
                           g2.bracket(cx.e2[u], D.apply(cx.e2[v]))));
          for (int k = 0; k < m; ++k) {
            if (!r[k].is_zero()) c5.pass = false;
            c5.residual.at({x, y, u, v, k}) = r[k];
          }
          for (int w = 0; w < m; ++w) {
            auto r3 = sub(D.apply(g2.triple(cx.e2[u], cx.e2[v], cx.e2[w])),
                          add(add(g2.triple(D.apply(cx.e2[u]), cx.e2[v], cx.e2[w]),
                                  g2.triple(cx.e2[u], D.apply(cx.e2[v]), cx.e2[w])),
                              g2.triple(cx.e2[u], cx.e2[v], D.apply(cx.e2[w]))));
            for (int k = 0; k < m; ++k) {
              if (!r3[k].is_zero()) c6.pass = false;
              c6.residual.at({x, y, u, v, w, k}) = r3[k];
            }
          }
        }
    }
  out.checks.push_back(std::move(c5));
  out.checks.push_back(std::move(c6));
  return out;
}

StandardManinTriple standard_manin_triple(const Cobracket& c) {
  const int n = c.alg.dim;
  LYAlgebra dual = dual_constants(c);
  LYAlgebra dbl = bowtie_product(coadjoint_pair(c.alg, dual));
  Mat B(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    B(i, n + i) = Rational(1);
    B(n + i, i) = Rational(1);
  }
  StandardManinTriple out;
  out.quad = QuadraticLY(std::move(dbl), std::move(B));
  for (int i = 0; i < n; ++i) out.basis1.push_back(basis_vec(2 * n, i));
  for (int i = 0; i < n; ++i) out.basis2.push_back(basis_vec(2 * n, n + i));
  return out;
}

AxiomReport check_manin_triple(const QuadraticLY& q,
                               const std::vector<std::vector<Rational>>& basis1,
                               const std::vector<std::vector<Rational>>& basis2) {
  const int N = q.alg.dim;
  const int n1 = static_cast<int>(basis1.size()), n2 = static_cast<int>(basis2.size());
  AxiomReport out;

  // (i) direct sum: combined vectors form a basis
  bool direct = (n1 + n2 == N);
  Mat P(N, N);
  if (direct) {
    for (int c = 0; c < n1; ++c)
      for (int r = 0; r < N; ++r) P(r, c) = basis1[c][r];
    for (int c = 0; c < n2; ++c)
      for (int r = 0; r < N; ++r) P(r, n1 + c) = basis2[c][r];
    direct = P.det() != Rational(0);
  }
  out.checks.push_back(CheckResult{"direct-sum", direct, Tensor(Index{1})});
  if (!direct) return out;

  // ambient structure: axioms + invariant form
  out.checks.push_back(CheckResult{"ambient-ly-axioms", ly_axioms_hold(q.alg), Tensor(Index{1})});
  out.checks.push_back(CheckResult{"ambient-quadratic", quadratic_holds(q), Tensor(Index{1})});

  auto B = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return dot(q.form.apply(x), y);
  };
  Mat Pinv = P.inverse();

  // coordinates of v in the combined basis; first n1 entries belong to g1
  auto coords = [&](const std::vector<Rational>& v) { return Pinv.apply(v); };
  auto in_span1 = [&](const std::vector<Rational>& v) {
    auto c = coords(v);
    for (int k = n1; k < N; ++k)
      if (!c[k].is_zero()) return false;
    return true;
  };
  auto in_span2 = [&](const std::vector<Rational>& v) {
    auto c = coords(v);
    for (int k = 0; k < n1; ++k)
      if (!c[k].is_zero()) return false;
    return true;
  };

  bool iso1 = true, iso2 = true;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      if (!B(basis1[i], basis1[j]).is_zero()) iso1 = false;
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      if (!B(basis2[i], basis2[j]).is_zero()) iso2 = false;
  out.checks.push_back(CheckResult{"isotropic-1", iso1, Tensor(Index{1})});
  out.checks.push_back(CheckResult{"isotropic-2", iso2, Tensor(Index{1})});

  bool sub1 = true, sub2 = true;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      if (!in_span1(q.alg.bracket(basis1[i], basis1[j]))) sub1 = false;
      for (int k = 0; k < n1; ++k)
        if (!in_span1(q.alg.triple(basis1[i], basis1[j], basis1[k]))) sub1 = false;
    }
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      if (!in_span2(q.alg.bracket(basis2[i], basis2[j]))) sub2 = false;
      for (int k = 0; k < n2; ++k)
        if (!in_span2(q.alg.triple(basis2[i], basis2[j], basis2[k]))) sub2 = false;
    }
  out.checks.push_back(CheckResult{"subalgebra-1", sub1, Tensor(Index{1})});
  out.checks.push_back(CheckResult{"subalgebra-2", sub2, Tensor(Index{1})});

  // (iii): pr1 <<x1,y1,x2>> = 0, pr1 <<x1,x2,y1>> = 0 and the mirror
  bool proj = true;
  auto pr1_zero = [&](const std::vector<Rational>& v) {
    auto c = coords(v);
    for (int k = 0; k < n1; ++k)
      if (!c[k].is_zero()) return false;
    return true;
  };
  auto pr2_zero = [&](const std::vector<Rational>& v) {
    auto c = coords(v);
    for (int k = n1; k < N; ++k)
      if (!c[k].is_zero()) return false;
    return true;
  };
  for (int i = 0; i < n1 && proj; ++i)
    for (int j = 0; j < n1 && proj; ++j)
      for (int a = 0; a < n2 && proj; ++a) {
        if (!pr1_zero(q.alg.triple(basis1[i], basis1[j], basis2[a]))) proj = false;
        if (!pr1_zero(q.alg.triple(basis1[i], basis2[a], basis1[j]))) proj = false;
      }
  for (int a = 0; a < n2 && proj; ++a)
    for (int b = 0; b < n2 && proj; ++b)
      for (int i = 0; i < n1 && proj; ++i) {
        if (!pr2_zero(q.alg.triple(basis2[a], basis2[b], basis1[i]))) proj = false;
        if (!pr2_zero(q.alg.triple(basis2[a], basis1[i], basis2[b]))) proj = false;
      }
  out.checks.push_back(CheckResult{"projection-conditions", proj, Tensor(Index{1})});
  return out;
}

ThreeWayReport equivalence_report(const Cobracket& c) {
  ThreeWayReport out;
  out.double_construction = check_double_construction(c);
  out.double_ok = out.double_construction.pass();

  LYAlgebra dual = dual_constants(c);
  MatchedPairData mp = coadjoint_pair(c.alg, dual);
  out.matched_pair = check_matched_pair(mp);
  out.matched_ok = out.matched_pair.pass();

  StandardManinTriple smt = standard_manin_triple(c);
  out.manin = check_manin_triple(smt.quad, smt.basis1, smt.basis2);
  out.manin_ok = out.manin.pass();
  return out;
}

Cobracket local_from_double(const Cobracket& c, const Rational& k1, const Rational& k2,
                            const Rational& k3) {
  if (k1 != k2 || !(k1 + k2 + k3 - Rational(1)).is_zero())
    throw std::invalid_argument("local_from_double: need k1 = k2 and k1+k2+k3 = 1");
  Cobracket out = c;
  Rational half(1, 2);
  out.delta1 = c.delta.scaled(half);
  out.delta2 = c.delta.scaled(half);
  out.omega1 = c.omega.scaled(k1);
  out.omega2 = c.omega.scaled(k2);
  out.omega3 = c.omega.scaled(k3);
  return out;
}

namespace {

Mat cochain_from_split(const Tensor& split, int n, int order) {
  // component(e_i) in (x)^order g as a column of the 1-cochain matrix
  int m = 1;
  for (int k = 0; k < order; ++k) m *= n;
  Mat f(m, n);
  split.for_each([&](const Index& idx, const Rational& v) {
    if (v.is_zero()) return;
    int row = 0;
    for (std::size_t k = 1; k < idx.size(); ++k) row = row * n + idx[k];
    f(row, idx[0]) += v;
  });
  return f;
}

} // namespace

AxiomReport check_local_cocycle(const Cobracket& c) {
  if (!c.has_splits()) throw std::invalid_argument("local-cocycle: splits missing");
  AxiomReport out;
  out.checks.push_back(CheckResult{"splits-sum", c.splits_consistent(), Tensor(Index{1})});

  DualStructureReport dual = dual_structure(c);
  out.checks.push_back(CheckResult{"dual-structure", dual.pass(), Tensor(Index{1})});

  const int n = c.alg.dim;
  struct Item {
    const char* name;
    const Tensor* split;
    int order, slot;
  };
  const Item items[] = {
      {"delta1-cocycle-slot2", &*c.delta1, 2, 1}, {"delta2-cocycle-slot1", &*c.delta2, 2, 0},
      {"omega1-cocycle-slot1", &*c.omega1, 3, 0}, {"omega2-cocycle-slot2", &*c.omega2, 3, 1},
      {"omega3-cocycle-slot3", &*c.omega3, 3, 2},
  };
  for (const auto& it : items) {
    Representation rep = slot_representation(c.alg, it.order, it.slot);
    bool repok = representation_holds(rep);
    std::string base = it.name;
    out.checks.push_back(CheckResult{base + "-rep", repok, Tensor(Index{1})});
    Mat f = cochain_from_split(*it.split, n, it.order);
    out.checks.push_back(CheckResult{base, is_one_cocycle(f, rep), Tensor(Index{1})});
  }
  return out;
}

std::vector<Cobracket> search_double_construction(const LYAlgebra& alg,
                                                  const std::vector<Rational>& values,
                                                  int max_delta_entries, int max_omega_entries) {
  const int n = alg.dim;
  std::vector<Rational> nz;
  for (const auto& v : values)
    if (!v.is_zero()) nz.push_back(v);
  CompatContext cx(alg);

  // mirror offset tables for the paired-slot skewness of delta and omega;
  // the enumerator tracks its support, so skewness is checked there only
  auto mirror_table = [&](const Tensor& t, int s1, int s2) {
    std::vector<std::size_t> m(t.size());
    t.for_each([&](const Index& idx, const Rational&) {
      Index j = idx;
      std::swap(j[s1], j[s2]);
      m[t.offset(idx)] = t.offset(j);
    });
    return m;
  };
  auto support_skew = [](const Tensor& t, const std::vector<std::size_t>& mirror,
                         const std::vector<std::size_t>& support) {
    for (std::size_t o : support) {
      std::size_t m = mirror[o];
      if (m == o) return false;  // diagonal entries cannot be skew
      if (!(t.flat(o) + t.flat(m)).is_zero()) return false;
    }
    return true;
  };

  // stage 1: delta candidates passing the delta-only conditions
  std::vector<Tensor> deltas;
  {
    Tensor cand(Index{n, n, n});
    auto mir = mirror_table(cand, 1, 2);
    Cobracket scratch(alg);
    std::vector<std::size_t> support;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
      if (support_skew(cand, mir, support)) {
        scratch.delta = cand;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            if (!compat1(cx, scratch, x, y).is_zero()) ok = false;
            for (int z = 0; z < n && ok; ++z)
              if (!compat2(cx, scratch, x, y, z).is_zero() ||
                  !compat4(cx, scratch, x, y, z).is_zero() ||
                  !compat5(cx, scratch, x, y, z).is_zero())
                ok = false;
          }
        if (ok) deltas.push_back(cand);
      }
      if (remaining == 0) return;
      for (std::size_t p = start; p < cand.size(); ++p) {
        support.push_back(p);
        for (const auto& v : nz) {
          cand.flat(p) = v;
          rec(p + 1, remaining - 1);
        }
        cand.flat(p) = Rational(0);
        support.pop_back();
      }
    };
    rec(0, max_delta_entries);
  }

  // stage 2: omega candidates passing the omega-only conditions
  std::vector<Tensor> omegas;
  {
    Tensor cand(Index{n, n, n, n});
    auto mir = mirror_table(cand, 1, 2);
    Cobracket scratch(alg);
    std::vector<std::size_t> support;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
      if (support_skew(cand, mir, support)) {
        scratch.omega = cand;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            if (!compat3(cx, scratch, x, y).is_zero()) ok = false;
            if (ok && !compat8(cx, scratch, x, y).is_zero()) ok = false;
            for (int z = 0; z < n && ok; ++z)
              if (!compat6(cx, scratch, x, y, z).is_zero() ||
                  !compat7(cx, scratch, x, y, z).is_zero() ||
                  !compat9(cx, scratch, x, y, z).is_zero())
                ok = false;
          }
        if (ok) omegas.push_back(cand);
      }
      if (remaining == 0) return;
      for (std::size_t p = start; p < cand.size(); ++p) {
        support.push_back(p);
        for (const auto& v : nz) {
          cand.flat(p) = v;
          rec(p + 1, remaining - 1);
        }
        cand.flat(p) = Rational(0);
        support.pop_back();
      }
    };
    rec(0, max_omega_entries);
  }

  // stage 3: combine; the coalgebra axioms and the mirror compatibilities
  // couple delta with omega
  std::vector<Cobracket> found;
  for (const auto& d : deltas)
    for (const auto& w : omegas) {
      Cobracket c(alg);
      c.delta = d;
      c.omega = w;
      if (!ly_axioms_hold(dual_constants(c))) continue;
      if (compat_holds(swapped_cobracket(c))) found.push_back(std::move(c));
    }
  return found;
}

} // namespace liya
