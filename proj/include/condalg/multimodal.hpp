#ifndef CONDALG_MULTIMODAL_HPP
#define CONDALG_MULTIMODAL_HPP

#include <vector>

#include "condalg/cond_alg.hpp"

namespace condalg {

// Boolean algebra with a family of unary boxes indexed by a Boolean
// subalgebra of itself.  boxes[b] is the value table of box_b and is
// consulted only for b in the index set.
class MMAlg {
 public:
  MMAlg(FinBoolAlg base, ElemSet index_set,
        std::vector<std::vector<Elem>> boxes);

  const FinBoolAlg& base() const { return base_; }
  ElemSet indices() const { return index_set_; }
  bool has_index(Elem b) const { return index_set_ >> b & 1; }
  bool full() const;
  Elem box(Elem b, Elem x) const;

  bool operator==(const MMAlg&) const = default;

 private:
  FinBoolAlg base_;
  ElemSet index_set_;
  std::vector<std::vector<Elem>> boxes_;
};

// The conditional as a fully indexed box family: box_a(b) = a -> b.
MMAlg to_mma(const CondAlg& A);

// Inverse reading a -> b = box_a(b).  Requires a full index set
// (InputError) and the modal axioms (ContractError).
CondAlg to_conditional(const MMAlg& m);

// M1 box_b(1) = 1; M2 box_b(a & c) = box_b(a) & box_b(c);
// M3 box_{b1|b2}(a) <= box_{b1}(a) & box_{b2}(a); and the antitone
// restatement M3* (b1 <= b2 implies box_{b2}(a) <= box_{b1}(a)), which is
// asserted to agree with M3.
Verdict check_mma_axioms(const MMAlg& m);

// Dual relation of box_b on ultrafilters: Q_b(u, v) iff the box preimage of
// u is contained in v, i.e. atom(v) <= meet{ x : box_b(x) in u }.
// Returned as one successor mask per ultrafilter.
std::vector<UfSet> q_relation(const MMAlg& m, Elem b);

// Box of the dual relation: [Q_b](V) = { u : Q_b(u) subset of V }.
UfSet q_box(const MMAlg& m, Elem b, UfSet V);

// Canonical extension as an MMA: base P(Ul), index set phi of the original
// indices, box at phi(b) given by [Q_b].
MMAlg mma_canonical_extension(const MMAlg& m);

// For every a and mask V, [Q_a](V) equals phi(a) -> V computed in em(A);
// at n <= 2 additionally checks the two-sided reconstruction of U -> V from
// the boxes via closed/open approximation pairs.
// Precondition: check_CA holds.
Verdict qa_equals_box_phi_check(const CondAlg& A);

}  // namespace condalg

#endif
