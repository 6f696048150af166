#ifndef LIYA_BIALGEBRA_HPP
#define LIYA_BIALGEBRA_HPP

#include "liya/cobracket.hpp"
#include "liya/yang_baxter.hpp"

namespace liya {

/// Candidate dual structure on g*: constants obtained by transposition,
///   [e_i*, e_j*]_* on e_k*            = delta[k][i][j]
///   <<e_i*, e_j*, e_k*>>_* on e_l*    = omega[l][i][j][k]
/// together with the coalgebra verdict (skew candidate passing the axioms).
struct DualStructureReport {
  LYAlgebra candidate;
  bool skew = false;
  AxiomReport axioms;
  bool pass() const { return skew && axioms.pass(); }
};

DualStructureReport dual_structure(const Cobracket& c);
LYAlgebra dual_constants(const Cobracket& c);

/// Representation of alg on (x)^order alg acting by ad (rho) and R (mu) in
/// one slot (0-based) and by the identity elsewhere.
Representation slot_representation(const LYAlgebra& alg, int order, int slot);

/// The compatibility conditions between the brackets and the cobrackets:
/// the nine direct conditions plus their nine mirrors (the same conditions
/// on the role-swapped pair), evaluated on all basis tuples. Together with
/// the coalgebra condition these characterize the matched pair exactly.
AxiomReport check_compatibilities(const Cobracket& c);

struct DoubleConstructionReport {
  DualStructureReport dual;
  AxiomReport compat;
  bool pass() const { return dual.pass() && compat.pass(); }
};

/// Coalgebra condition plus the compatibility conditions.
DoubleConstructionReport check_double_construction(const Cobracket& c);
bool double_construction_holds(const Cobracket& c);

/// Mutual representation data of two algebras on each other.
struct MatchedPairData {
  LYAlgebra g1, g2;
  std::vector<Mat> rho1;               // g1 acting on g2
  std::vector<std::vector<Mat>> mu1;
  std::vector<Mat> rho2;               // g2 acting on g1
  std::vector<std::vector<Mat>> mu2;

  MatchedPairData() = default;
  MatchedPairData(LYAlgebra a, LYAlgebra b);

  Representation rep1() const;  // (g2; rho1, mu1) over g1
  Representation rep2() const;  // (g1; rho2, mu2) over g2
};

/// Coadjoint actions in both directions: (ad*, -R* tau) of g on g* and of
/// gdual on g.
MatchedPairData coadjoint_pair(const LYAlgebra& g, const LYAlgebra& gdual);

/// Structure constants on g1 (+) g2 by the bowtie bracket formulas; validity
/// is a separate check (the result need not satisfy the axioms).
LYAlgebra bowtie_product(const MatchedPairData& mp);

/// The two representation conditions plus the 18 compatibility identities;
/// the verdict coincides with check_ly_axioms(bowtie_product(mp)).
AxiomReport check_matched_pair(const MatchedPairData& mp);
bool matched_pair_holds(const MatchedPairData& mp);

/// The six derived identities that follow from the matched-pair conditions;
/// reported as consequences.
AxiomReport matched_pair_consequences(const MatchedPairData& mp);

struct StandardManinTriple {
  QuadraticLY quad;  // on g (+) g*, hyperbolic pairing form
  std::vector<std::vector<Rational>> basis1, basis2;
};

/// The double bracket on g (+) g* from the coadjoint matched pair of the
/// cobracket's dual structure, with the pairing form.
StandardManinTriple standard_manin_triple(const Cobracket& c);

/// Direct sum, isotropic subalgebras, projection conditions, plus the
/// quadratic-algebra and axiom checks of the ambient algebra.
AxiomReport check_manin_triple(const QuadraticLY& q,
                               const std::vector<std::vector<Rational>>& basis1,
                               const std::vector<std::vector<Rational>>& basis2);

struct ThreeWayReport {
  DoubleConstructionReport double_construction;
  AxiomReport matched_pair;
  AxiomReport manin;
  bool double_ok = false, matched_ok = false, manin_ok = false;
  bool agree() const { return double_ok == matched_ok && matched_ok == manin_ok; }
  bool all_pass() const { return double_ok && matched_ok && manin_ok; }
};

/// Runs all three characterizations and reports agreement.
ThreeWayReport equivalence_report(const Cobracket& c);

/// Splits delta_i = delta/2 and omega_j = k_j omega; requires k1 = k2 and
/// k1 + k2 + k3 = 1.
Cobracket local_from_double(const Cobracket& c, const Rational& k1, const Rational& k2,
                            const Rational& k3);

/// Verifies the five slot representations and the five 1-cocycle conditions
/// of the split components.
AxiomReport check_local_cocycle(const Cobracket& c);

/// Deterministic grid enumeration: all cobrackets over `values` with at most
/// the given number of nonzero entries in delta and omega that pass
/// check_double_construction.
std::vector<Cobracket> search_double_construction(const LYAlgebra& alg,
                                                  const std::vector<Rational>& values,
                                                  int max_delta_entries, int max_omega_entries);

} // namespace liya

#endif
