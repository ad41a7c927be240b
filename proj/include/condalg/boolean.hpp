#ifndef CONDALG_BOOLEAN_HPP
#define CONDALG_BOOLEAN_HPP

#include <vector>

#include "condalg/types.hpp"

namespace condalg {

// Finite Boolean algebra presented as the powerset of an atom set.
// Elements are atom bitmasks: meet = AND, join = OR, complement = XOR top.
// atom_count may be 0 (the degenerate one-element algebra, 0 = 1).
class FinBoolAlg {
 public:
  static constexpr int kMaxAtoms = 6;

  explicit FinBoolAlg(int atom_count);

  int atoms() const { return atoms_; }
  Elem size() const { return Elem{1} << atoms_; }
  Elem bot() const { return 0; }
  Elem top() const { return size() - 1; }
  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem join(Elem a, Elem b) const { return a | b; }
  Elem complement(Elem a) const { return top() ^ a; }
  bool leq(Elem a, Elem b) const { return (a & b) == a; }
  bool valid(Elem a) const { return a <= top(); }
  void require_valid(Elem a) const;

  // Ultrafilters are exactly the principal filters over atoms.
  int ultrafilter_count() const { return atoms_; }

  bool operator==(const FinBoolAlg&) const = default;

 private:
  int atoms_;
};

// Principal filter, the upset of its generator.  generator 0 yields the
// improper filter (the whole algebra); every filter of a finite Boolean
// algebra has this shape.
struct Filter {
  Elem generator = 0;
  bool operator==(const Filter&) const = default;
};

// Ultrafilter, named by its atom index.
struct Ultrafilter {
  int atom = 0;
  bool operator==(const Ultrafilter&) const = default;
};

inline bool filter_contains(const FinBoolAlg& A, Filter F, Elem x) {
  return A.leq(F.generator, x);
}

// A principal filter contains bot iff its generator is bot.
inline bool is_proper(const FinBoolAlg& A, Filter F) {
  return F.generator != A.bot();
}

inline Elem atom_elem(const FinBoolAlg& A, Ultrafilter u) {
  (void)A;
  return Elem{1} << u.atom;
}

inline bool ultrafilter_contains(const FinBoolAlg& A, Ultrafilter u, Elem x) {
  return A.leq(atom_elem(A, u), x);
}

// Stone map: phi(a) = set of ultrafilters containing a.  On atom bitmasks it
// is the identity reinterpreted as an ultrafilter-index mask.
UfSet phi(const FinBoolAlg& A, Elem a);

// phi lifted to filters: set of ultrafilters extending F.
UfSet phi_filter(const FinBoolAlg& A, Filter F);

// Smallest filter whose phi-image contains Y: the upset of the join of Y's
// atoms.  phi_filter(filter_of_set(Y)) == Y.
Filter filter_of_set(const FinBoolAlg& A, UfSet Y);

// Members of F as an element-set bitmask.
ElemSet filter_elements(const FinBoolAlg& A, Filter F);

// Whether a (non-empty) element set is upward closed and meet closed, i.e. a
// filter.  Used to validate derived filters.
bool is_filter_set(const FinBoolAlg& A, ElemSet S);

// Generator of a filter given as an element set (meet of its members).
// Precondition: is_filter_set.
Elem filter_set_generator(const FinBoolAlg& A, ElemSet S);

// All 2^n filters, by generator, in increasing generator order.
std::vector<Filter> all_filters(const FinBoolAlg& A);

}  // namespace condalg

#endif
