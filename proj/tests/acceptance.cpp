// Acceptance suite: one verdict line per criterion. Every check is exact
// rational arithmetic with zero tolerance; a criterion passes only if every
// sampled instance passes.

#include <cstdio>
#include <random>
#include <vector>

#include "liya/cohomology.hpp"
#include "liya/io.hpp"
#include "support/fixtures.hpp"

using namespace liya;
using namespace liya::testing;

namespace {

int failures = 0;

void verdict(int number, bool pass, const std::string& what, const std::string& note = "") {
  std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
              note.empty() ? "" : " -- ", note.c_str());
  if (!pass) ++failures;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

LYAlgebra load_algebra(const std::string& name) {
  return std::get<LYAlgebra>(parse_input(fixture(name)));
}

Cobracket load_cobracket(const std::string& name) {
  return std::get<Cobracket>(parse_input(fixture(name)));
}

} // namespace

int main() {
  std::mt19937_64 rng(20260810);

  // 1. the dim2 fixture satisfies all defining identities with zero residuals
  {
    AxiomReport rep = check_ly_axioms(load_algebra("dim2.json"));
    bool ok = rep.pass();
    for (const auto& c : rep.checks) ok = ok && c.residual.is_zero();
    verdict(1, ok, "dim2 fixture passes the four defining identities exactly");
  }

  // 2. r = k(e1^e2) solves both tensor equations for k in {-2,-1,1,2,5}
  {
    LYAlgebra g = load_algebra("dim2.json");
    bool ok = true;
    for (long k : {-2L, -1L, 1L, 2L, 5L}) {
      Mat c(2, 2);
      c(0, 1) = Rational(k);
      c(1, 0) = Rational(-k);
      CybeReport rep = is_cybe_solution(TwoTensor(g, c));
      ok = ok && rep.binary_residual.is_zero() && rep.ternary_residual.is_zero();
    }
    verdict(2, ok, "k(e1^e2) family solves both Yang-Baxter tensor equations exactly");
  }

  // 3. tensor-equation <-> coadjoint-operator equivalence on 200 random skew
  //    tensors over the dim2 and dim4 fixtures
  {
    int disagreements = 0, solutions = 0;
    for (const char* name : {"dim2.json", "dim4.json"}) {
      LYAlgebra g = load_algebra(name);
      for (int t = 0; t < 100; ++t) {
        EquivalenceReport eq = cybe_rb_equivalence(TwoTensor(g, random_skew_matrix(rng, g.dim)));
        if (!eq.agree()) ++disagreements;
        solutions += eq.lhs;
      }
    }
    verdict(3, disagreements == 0,
            "tensor equations match the coadjoint operator condition on 200 random skew tensors",
            std::to_string(solutions) + " solutions in the sample");
  }

  // 4. symplectic criterion = tensor equations on 100 nondegenerate skew tensors
  {
    int tested = 0, disagreements = 0;
    auto pool = algebra_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    while (tested < 100) {
      const LYAlgebra& g = pool[pick(rng)];
      TwoTensor r(g, random_skew_matrix(rng, g.dim));
      if (r.coeffs.det() == Rational(0)) continue;
      ++tested;
      if (symplectic_check(r) != is_cybe_solution(r).pass) ++disagreements;
    }
    verdict(4, disagreements == 0,
            "symplectic criterion agrees with the tensor equations on 100 nondegenerate samples");
  }

  // 5. representation condition iff semidirect-product axioms, 100 candidates
  {
    int disagreements = 0, valid = 0, tested = 0;
    auto pool = algebra_pool();
    std::vector<Representation> cands;
    for (const auto& g : pool) {
      if (g.dim > 3) continue;
      cands.push_back(adjoint_rep(g));
      cands.push_back(coadjoint_rep(g));
      cands.push_back(Representation::zero(g, 2));
    }
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    for (int t = 0; t < 100; ++t) {
      Representation rep = cands[pick(rng)];
      if (t % 2 == 1) {  // perturb half of the samples
        std::uniform_int_distribution<int> di(0, rep.base.dim - 1), dm(0, rep.vdim - 1);
        rep.mu[di(rng)][di(rng)](dm(rng), dm(rng)) += Rational(1);
      }
      ++tested;
      bool a = representation_holds(rep);
      bool b = ly_axioms_hold(semidirect_product(rep.base, rep));
      valid += a;
      if (a != b) ++disagreements;
    }
    verdict(5, disagreements == 0,
            "representation condition iff semidirect axioms on 100 candidates",
            std::to_string(valid) + "/" + std::to_string(tested) + " valid");
  }

  // 6. double dual identity and derived transpose law on 50 valid representations
  {
    bool ok = true;
    auto pool = algebra_pool();
    std::vector<Representation> reps;
    for (const auto& g : pool) {
      reps.push_back(adjoint_rep(g));
      reps.push_back(coadjoint_rep(g));
      reps.push_back(dual_rep(adjoint_rep(g)));
      reps.push_back(Representation::zero(g, 2));
      reps.push_back(slot_representation(g, 2, 0));
    }
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    while (reps.size() < 50) {
      Representation raw(pool[reps.size() % pool.size()], 2);
      for (int i = 0; i < raw.base.dim; ++i) {
        raw.rho[i] = random_matrix(rng, 2, 2);
        for (int j = 0; j < raw.base.dim; ++j) raw.mu[i][j] = random_matrix(rng, 2, 2);
      }
      reps.push_back(std::move(raw));
    }
    int count = 0;
    for (const auto& rep : reps) {
      if (count >= 50) break;
      ++count;
      Representation du = dual_rep(rep);
      Representation back = dual_rep(du);
      ok = ok && back.rho == rep.rho && back.mu == rep.mu;
      for (int i = 0; i < rep.base.dim && ok; ++i)
        for (int j = 0; j < rep.base.dim && ok; ++j)
          ok = du.derived(i, j) == -rep.derived(i, j).transpose();
    }
    verdict(6, ok && count == 50, "double dual is the identity and the derived operator transposes",
            std::to_string(count) + " representations");
  }

  // 7. d of d vanishes on a spanning set of 1-cochains over dim2
  {
    LYAlgebra g = load_algebra("dim2.json");
    bool ok = true;
    for (const Representation& rep : {adjoint_rep(g), coadjoint_rep(g)}) {
      for (int a = 0; a < rep.vdim; ++a)
        for (int b = 0; b < g.dim; ++b) {
          Mat f(rep.vdim, g.dim);
          f(a, b) = Rational(1);
          if (!coboundary(coboundary(Cochain::one(f), rep), rep).is_zero()) ok = false;
        }
    }
    verdict(7, ok, "coboundary of coboundary vanishes on 1-cochains (adjoint and coadjoint)",
            ok ? "" : "FINDING: the displayed sign conventions do not square to zero");
  }

  // 8. the dim2 cobracket fixture passes all three equivalent characterizations
  {
    Cobracket c = load_cobracket("dim2_bialgebra.json");
    ThreeWayReport t = equivalence_report(c);
    verdict(8, t.all_pass() && t.agree(),
            "dim2 cobracket fixture: double construction, matched pair, Manin triple all pass",
            t.agree() ? (t.all_pass() ? ""
                                      : "all three characterizations agree on FAIL: the "
                                        "compatibility conditions force trace-free dual actions, "
                                        "which this fixture's dual violates (see ledger)")
                      : "characterizations disagree");
  }

  // 9. the trivial cobracket passes all three, and its double is quadratic
  {
    Cobracket c = load_cobracket("trivial_bialgebra_dim2.json");
    ThreeWayReport t = equivalence_report(c);
    StandardManinTriple smt = standard_manin_triple(c);
    bool quad = quadratic_holds(smt.quad);
    verdict(9, t.all_pass() && quad,
            "trivial cobracket on dim2: all three characterizations and the pairing form pass");
  }

  // 10. grid enumeration on the dim4 fixture finds only the zero cobracket
  {
    LYAlgebra g = load_algebra("dim4.json");
    auto found = search_double_construction(g, {Rational(-1), Rational(0), Rational(1)}, 2, 2);
    bool ok = found.size() == 1 && found[0].delta.is_zero() && found[0].omega.is_zero();
    std::string note = std::to_string(found.size()) + " survivor(s)";
    if (!ok)
      note += "; nonzero cobrackets such as omega(e1) = -(e1^e4)(x)e4 genuinely satisfy "
              "all three characterizations and the direct axioms of the double -- the "
              "expected uniqueness does not hold (see ledger)";
    verdict(10, ok, "dim4 grid enumeration finds no nonzero double-construction cobracket", note);
  }

  // 11. operator lift round-trip on 50 sampled operators, half verified, half perturbed
  {
    LYAlgebra g2 = load_algebra("dim2.json");
    Representation co2 = coadjoint_rep(g2);
    int disagreements = 0, rb_count = 0;
    std::vector<std::pair<Representation, Mat>> samples;
    // verified Rota-Baxter operators
    for (long k : {1L, -1L, 2L, 3L, 5L}) {
      Mat c(2, 2);
      c(0, 1) = Rational(k);
      c(1, 0) = Rational(-k);
      samples.emplace_back(co2, r_sharp(TwoTensor(g2, c)));
    }
    PreLYAlgebra pre = pre_ly_star_fixture();
    Representation adr = ad_r_representation(pre);
    samples.emplace_back(adr, Mat::identity(2));
    for (const auto& g : algebra_pool())
      if (g.dim <= 3) samples.emplace_back(adjoint_rep(g), Mat(g.dim, g.dim));
    while (samples.size() < 25) samples.emplace_back(co2, r_sharp(TwoTensor(g2, random_skew_matrix(rng, 2))));
    // perturbed copies
    std::size_t nverified = samples.size();
    for (std::size_t i = 0; i < nverified && samples.size() < 50; ++i) {
      auto s = samples[i];
      std::uniform_int_distribution<int> dr(0, s.second.rows() - 1), dc(0, s.second.cols() - 1);
      s.second(dr(rng), dc(rng)) += Rational(1);
      samples.push_back(std::move(s));
    }
    for (const auto& [rep, T] : samples) {
      bool a = relative_rb_holds(T, rep);
      bool b = is_cybe_solution(lift_rb_to_rmatrix(T, rep)).pass;
      rb_count += a;
      if (a != b) ++disagreements;
    }
    verdict(11, disagreements == 0,
            "lift to the semidirect product solves the equation iff the operator is Rota-Baxter",
            std::to_string(samples.size()) + " operators, " + std::to_string(rb_count) +
                " Rota-Baxter");
  }

  // 12. transfer across the pairing form on the quadratic double, 50 operators;
  //     the intertwiner identities hold exactly. The dim2 cobracket fixture's
  //     double is not a valid algebra (criterion 8), so the paper's quadratic
  //     double at this dimension is the trivial cobracket's double.
  {
    Cobracket c = load_cobracket("trivial_bialgebra_dim2.json");
    StandardManinTriple smt = standard_manin_triple(c);
    bool inter = quadratic_holds(smt.quad) && b_natural_intertwiners(smt.quad).pass();
    int disagreements = 0, rb_count = 0;
    for (int t = 0; t < 50; ++t) {
      Mat T = random_matrix(rng, 4, 4, -1, 1);
      StsReport s = sts_transfer(smt.quad, T);
      if (!s.agree()) ++disagreements;
      rb_count += s.coadjoint_rb;
    }
    // seed genuine solutions through the corollary route: random ones plus
    // lifts of operators verified against the adjoint action, which land on
    // this very double (its module part is the dual of the adjoint)
    std::vector<TwoTensor> sols;
    {
      LYAlgebra g2 = load_algebra("dim2.json");
      Representation ad2 = adjoint_rep(g2);
      Mat T(2, 2);
      const long vals[] = {-1, 0, 1};
      for (long a : vals)
        for (long b : vals)
          for (long c : vals)
            for (long d : vals) {
              T(0, 0) = Rational(a);
              T(0, 1) = Rational(b);
              T(1, 0) = Rational(c);
              T(1, 1) = Rational(d);
              if ((a || b || c || d) && relative_rb_holds(T, ad2))
                sols.push_back(lift_rb_to_rmatrix(T, ad2));
            }
    }
    for (int t = 0; t < 40; ++t) {
      TwoTensor r(smt.quad.alg, random_skew_matrix(rng, 4, -1, 1));
      if (is_cybe_solution(r).pass) sols.push_back(std::move(r));
    }
    for (const auto& r : sols) {
      if (!(r.alg.binary == smt.quad.alg.binary && r.alg.ternary == smt.quad.alg.ternary))
        ++disagreements;  // the lift must land on the double itself
      StsReport s = sts_transfer(smt.quad, r_sharp(r));
      if (!s.agree() || !s.coadjoint_rb) ++disagreements;
      ++rb_count;
    }
    verdict(12, disagreements == 0 && inter,
            "operator transfer across the pairing form agrees; intertwiners hold exactly",
            std::to_string(rb_count) + " Rota-Baxter instances in the sample");
  }

  // 13. splits of a double-construction cobracket pass the local cocycle check
  {
    using K = std::tuple<Rational, Rational, Rational>;
    std::vector<K> ks = {K{Rational(1, 2), Rational(1, 2), Rational(0)},
                         K{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                         K{Rational(0), Rational(0), Rational(1)}};
    bool trivial_ok = true, dim2_ok = true;
    Cobracket ctriv = load_cobracket("trivial_bialgebra_dim2.json");
    Cobracket cfix = load_cobracket("dim2_bialgebra.json");
    for (const auto& [k1, k2, k3] : ks) {
      trivial_ok = trivial_ok && check_local_cocycle(local_from_double(ctriv, k1, k2, k3)).pass();
      dim2_ok = dim2_ok && check_local_cocycle(local_from_double(cfix, k1, k2, k3)).pass();
    }
    verdict(13, trivial_ok && dim2_ok,
            "half/k_j splits pass the local cocycle check on both cobracket fixtures",
            trivial_ok && !dim2_ok
                ? "trivial fixture passes; the dim2 fixture fails: delta/2 is not a "
                  "1-cocycle for either tensor-slot action, and the half-split recipe "
                  "fails even on genuine double constructions (see ledger)"
                : "");
  }

  // 14. the five slot actions are representations on dim2 and dim4
  {
    bool ok = true;
    for (const char* name : {"dim2.json", "dim4.json"}) {
      LYAlgebra g = load_algebra(name);
      for (auto [order, slot] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}})
        ok = ok && representation_holds(slot_representation(g, order, slot));
    }
    verdict(14, ok, "all five tensor-slot actions pass the representation conditions");
  }

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
