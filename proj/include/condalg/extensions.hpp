#ifndef CONDALG_EXTENSIONS_HPP
#define CONDALG_EXTENSIONS_HPP

#include <vector>

#include "condalg/cond_alg.hpp"

namespace condalg {

// pi-extension of the conditional to arbitrary ultrafilter sets, evaluated
// literally: intersection over pairs (closed Y inside U, open O around V) of
// the union of phi(a -> b) over a in the filter of Y and b in the ideal of
// O.  In the finite discrete topology closed = open = all masks.
// Precondition: check_CA holds.
UfSet pi_extend(const CondAlg& A, UfSet U, UfSet V);

// sigma-extension, two stages: first on (open-complement, closed) pairs as
// the intersection of phi(a -> b) over the ideal/filter pair, then a union
// over open supersets of U and closed subsets of V.  Cross-checked against
// the G-relation membership characterization (ContractError on mismatch).
// Precondition: check_CA holds.
UfSet sigma_extend(const CondAlg& A, UfSet U, UfSet V);

// pi == sigma on every pair of masks.  On finite algebras this always holds
// and both equal the transported operator; the verify suite asserts that.
Verdict smoothness_check(const CondAlg& A);

// Witnessed member of the G relation at an ultrafilter u: Z = phi of the
// complemented ideal, Y = phi of the filter, with I x F inside the
// ->-preimage of u.  Generators are recorded for auditability.
struct GTriple {
  int u = 0;
  UfSet Z = 0;
  UfSet Y = 0;
  Elem ideal_gen = 0;
  Elem filter_gen = 0;
  friend auto operator<=>(const GTriple&, const GTriple&) = default;
};

std::vector<GTriple> g_relation(const CondAlg& A, int u);

namespace detail {
// Kernels without the CA precondition check, for batch drivers that have
// already validated the algebra once.
UfSet pi_extend_unchecked(const CondAlg& A, UfSet U, UfSet V);
UfSet sigma_extend_unchecked(const CondAlg& A, UfSet U, UfSet V);
}  // namespace detail

}  // namespace condalg

#endif
