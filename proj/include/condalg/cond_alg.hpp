#ifndef CONDALG_COND_ALG_HPP
#define CONDALG_COND_ALG_HPP

#include <string>
#include <vector>

#include "condalg/boolean.hpp"
#include "condalg/types.hpp"

namespace condalg {

// Finite Boolean algebra with a binary conditional operator, stored as a
// full row-major table: table[a * size + b] = a -> b.  Construction checks
// shape and entry range only; laws are checked separately.
class CondAlg {
 public:
  CondAlg(FinBoolAlg base, std::vector<Elem> table);

  const FinBoolAlg& base() const { return base_; }
  Elem cond(Elem a, Elem b) const {
    return table_[(static_cast<std::size_t>(a) << base_.atoms()) | b];
  }
  const std::vector<Elem>& table() const { return table_; }

  bool operator==(const CondAlg&) const = default;

 private:
  FinBoolAlg base_;
  std::vector<Elem> table_;
};

enum class AxiomId {
  C1,      // a -> 1 = 1
  C2,      // (a -> b) & (a -> c) = a -> (b & c)
  C3,      // (a | b) -> c  <=  (a -> c) & (b -> c)
  C1star,  // 0 -> a = 1
  C3star,  // (a -> c) & (b -> c)  <=  (a | b) -> c
  C4,      // a -> b  <=  c -> (a -> b)
  C5,      // a & (a -> b)  <=  b
  C6,      // a -> b  <=  ~b -> ~a
  C7,      // ~(a -> b)  <=  c -> ~(a -> b)
  C8,      // (1 -> (~a | b)) & (b -> c)  <=  a -> c
  M1,      // box_b(1) = 1
  M2,      // box_b(a & c) = box_b(a) & box_b(c)
  M3,      // box_{b1|b2}(a)  <=  box_{b1}(a) & box_{b2}(a)
};

const char* axiom_name(AxiomId id);
AxiomId parse_axiom_id(const std::string& name);  // accepts C1* or C1star
std::vector<AxiomId> all_axiom_ids();

// Exhaustive check; counterexamples are lexicographically least in the
// axiom's quantifier order.  M-axioms read the conditional as the induced
// box family box_a(b) = a -> b indexed by the whole algebra.
Verdict check_axiom(const CondAlg& A, AxiomId id);

// C1, C2, C3 in that order; first failure wins.
Verdict check_CA(const CondAlg& A);

// Derived monotonicity laws of the variety: isotone in the consequent,
// antitone in the antecedent, and (a->b) & (x->y) <= (a&x) -> (b&y).
// Precondition: check_CA holds.
Verdict monotonicity_report(const CondAlg& A);

// D operator on raw element sets: { b : exists a in Y with a -> b in X }.
ElemSet d_set(const CondAlg& A, ElemSet X, ElemSet Y);

// D with an ultrafilter on the left and a filter argument.  Built from the
// set definition, then certified to be a filter (ContractError otherwise,
// which signals an algebra outside the variety).
// For principal input the result obeys D_u(up g) = { b : g -> b in u }.
Filter d_filter(const CondAlg& A, Ultrafilter u, Filter F);

// Fixtures.  proj: a -> b = b | c (c = 0 is the bare projection);
// glob: a -> b = 1 if a <= b else 0.
CondAlg proj_algebra(int atoms, Elem c = 0);
CondAlg glob_algebra(int atoms);

}  // namespace condalg

#endif
