#ifndef CONDALG_DUALITY_HPP
#define CONDALG_DUALITY_HPP

#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/frame.hpp"

namespace condalg {

// Ultrafilter frame of a CA algebra: points are ultrafilters; for every
// filter F (all 2^n of them, by generator) and every ultrafilter u there is
// a triple (u, phi(F), v) whenever D_u(F) extends to v.  Each mask occurs as
// a middle coordinate for exactly one filter.
// Precondition: check_CA holds (ContractError otherwise).
TFrame ultrafilter_frame(const CondAlg& A);

// Canonical extension: complex algebra of the ultrafilter frame.
CondAlg em(const CondAlg& A);

// phi is an injective Boolean hom and carries -> to the ultrafilter-frame
// conditional: phi(a -> b) = phi(a) -> phi(b) computed in em(A).
Verdict representation_check(const CondAlg& A);

// Algebra -> space -> algebra: phi is an isomorphism onto em(A).
Verdict co_es_roundtrip(const CondAlg& A);

// Space -> algebra -> space: the principal-ultrafilter map is a bijection
// matching T with the ultrafilter frame of cm(f) triple for triple.
// Precondition: f is a conditional space (upward closed).
Verdict es_co_roundtrip(const TFrame& f);

// Boolean homomorphism between two conditional algebras, as a value table.
// Construction verifies preservation of 0, 1, meet and complement.
class AlgHom {
 public:
  AlgHom(CondAlg source, CondAlg target, std::vector<Elem> map);

  const CondAlg& source() const { return source_; }
  const CondAlg& target() const { return target_; }
  Elem apply(Elem a) const { return map_[a]; }
  const std::vector<Elem>& map() const { return map_; }

 private:
  CondAlg source_;
  CondAlg target_;
  std::vector<Elem> map_;
};

// Point map between frames.
class FrameMap {
 public:
  FrameMap(TFrame source, TFrame target, std::vector<int> map);

  const TFrame& source() const { return source_; }
  const TFrame& target() const { return target_; }
  int apply(int x) const { return map_[static_cast<std::size_t>(x)]; }
  PointSet preimage(PointSet U) const;

 private:
  TFrame source_;
  TFrame target_;
  std::vector<int> map_;
};

// Dual of a Boolean hom h : A -> B, mapping Ul(B) -> Ul(A) by preimage.
// Preconditions: both algebras pass check_CA.
FrameMap dual_map(const AlgHom& h);

// Dual of a frame map f : X1 -> X2, the preimage hom cm(X2) -> cm(X1).
AlgHom dual_hom(const FrameMap& f);

// Conditional-function condition: for all x and all U, V over the target,
//   T1(x, f^{-1}[U]) subset of f^{-1}[V]  iff  T2(f(x), U) subset of V.
Verdict conditional_function_check(const FrameMap& f);

// Checks that h preserves -> iff its dual map is a conditional function,
// and, when h is conditional, that the double dual recovers h
// (phi_B(h(a)) = f_h^{-1}[phi_A(a)] for every a).
Verdict hom_duality_check(const AlgHom& h);

// All Boolean homs A -> B, generated from the point maps Ul(B) -> Ul(A);
// there are exactly |Ul(A)|^|Ul(B)| of them.
std::vector<AlgHom> all_boolean_homs(const CondAlg& A, const CondAlg& B);

}  // namespace condalg

#endif
