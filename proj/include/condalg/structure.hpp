#ifndef CONDALG_STRUCTURE_HPP
#define CONDALG_STRUCTURE_HPP

#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/frame.hpp"

namespace condalg {

// Boolean equivalence on point (ultrafilter) indices, stored as blocks.
// In the finite discrete case every equivalence is Boolean.  Blocks are
// canonicalized (sorted by least member) so == is semantic.
class BoolEquiv {
 public:
  // Blocks must be disjoint, nonempty, and cover 0..point_count-1.
  BoolEquiv(int point_count, std::vector<UfSet> blocks);

  static BoolEquiv identity(int point_count);

  int points() const { return point_count_; }
  const std::vector<UfSet>& blocks() const { return blocks_; }
  UfSet block_of(int x) const;
  bool related(int x, int y) const { return block_of(x) >> y & 1; }
  // Least saturated superset: union of all blocks meeting U.
  UfSet saturation(UfSet U) const;

  bool operator==(const BoolEquiv&) const = default;

 private:
  int point_count_;
  std::vector<UfSet> blocks_;
};

// Domain of a Boolean subalgebra of the base, as an element-set mask.
// Construction checks closure under 0, 1, meet, join and complement.
class SubalgRef {
 public:
  SubalgRef(const FinBoolAlg& A, ElemSet domain);

  ElemSet domain() const { return domain_; }
  bool contains(Elem a) const { return domain_ >> a & 1; }

  bool operator==(const SubalgRef&) const = default;

 private:
  ElemSet domain_;
};

// Closed subset Y of the point set, inducing the Boolean congruence
//   theta(Y) = { (a,b) : Y & phi(a) == Y & phi(b) }.
// Every UfSet is closed here, so there is nothing to validate.  The filter
// F_Y of Y is filter_of_set(A, Y).
struct CongruenceRef {
  UfSet closed_set = 0;
  bool operator==(const CongruenceRef&) const = default;
};

inline bool theta_related(CongruenceRef th, Elem a, Elem b) {
  return ((a ^ b) & th.closed_set) == 0;
}

// All Boolean subalgebras of the base, one per partition of the atom set
// (elements are the unions of partition blocks), in increasing domain
// order.  The count is the Bell number of the atom count.
std::vector<SubalgRef> enumerate_subalgebras(const CondAlg& alg);

// Trace equivalence E_B: u ~ v iff u and v contain the same elements of B.
BoolEquiv trace_equivalence(const FinBoolAlg& A, const SubalgRef& B);

// Inverse direction B_E: elements whose phi-image is E-saturated.
SubalgRef saturated_subalgebra(const FinBoolAlg& A, const BoolEquiv& E);

// Y preceq_E C: every y in Y is E-related to some x in C.
bool preceq_E(const BoolEquiv& E, UfSet Y, UfSet C);

// C-equivalence test: for all x, x', y and closed Y, if E(x,y) and
// T(x,Y,x') then there are y' and closed C with E(x',y'), T(y,C,y') and
// C preceq_E Y.  Counterexamples report the failing (x, x', y, Y).
// Precondition: f upward closed (ContractError otherwise).
Verdict is_c_equivalence(const TFrame& f, const BoolEquiv& E);

// Whether the subalgebra domain is closed under the conditional.
bool cond_closed(const CondAlg& alg, const SubalgRef& B);

// For every Boolean subalgebra B of alg: B is closed under the conditional
// iff E_B is a C-equivalence of the ultrafilter frame; and on the closed
// ones the map B -> E_B reverses order (B1 <= B2 iff E_{B2} refines
// E_{B1}), making it a dual isomorphism.
// Precondition: check_CA holds (propagated from ultrafilter_frame).
Verdict subalgebra_duality_check(const CondAlg& alg);

// The inclusion-minimal Z with T(x,Z,y), in increasing mask order; empty
// iff there is no witness at all.  Computed directly from the definition
// C(x,y) = { Z : T(x,Z,y) } by subset enumeration.
std::vector<PointSet> minimal_witnesses(const TFrame& f, int x, int y);

// T-closed set: for all x in Y, all y, and every minimal Z in C(x,y),
// Z is a subset of Y and y is in Y.  Vacuously true when C(x,y) is empty.
bool is_t_closed(const TFrame& f, PointSet Y);

// Whether theta(Y) is compatible with the conditional: related pairs
// (a,b), (c,d) always give related (a -> c, b -> d).
bool theta_compatible(const CondAlg& alg, UfSet Y);

// For every subset Y of the ultrafilter set: theta(Y) is a conditional
// congruence iff Y is T-closed in the ultrafilter frame; and on T-closed
// sets Y1 <= Y2 iff theta(Y2) <= theta(Y1) (lattice anti-isomorphism).
// Precondition: check_CA holds (propagated from ultrafilter_frame).
Verdict congruence_duality_check(const CondAlg& alg);

}  // namespace condalg

#endif
