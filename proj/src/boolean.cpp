#include "condalg/boolean.hpp"

#include <string>

namespace condalg {

FinBoolAlg::FinBoolAlg(int atom_count) : atoms_(atom_count) {
  if (atom_count < 0 || atom_count > kMaxAtoms)
    throw InputError("atom count " + std::to_string(atom_count) +
                     " outside supported range [0, " +
                     std::to_string(kMaxAtoms) + "]");
}

void FinBoolAlg::require_valid(Elem a) const {
  if (!valid(a))
    throw InputError("element " + std::to_string(a) +
                     " out of range for a " + std::to_string(atoms_) +
                     "-atom algebra");
}

UfSet phi(const FinBoolAlg& A, Elem a) {
  A.require_valid(a);
  // u_k contains a iff atom k lies below a, so the index mask equals a.
  return static_cast<UfSet>(a);
}

UfSet phi_filter(const FinBoolAlg& A, Filter F) {
  A.require_valid(F.generator);
  // up(g) extends to u_k iff atom k <= g.
  return static_cast<UfSet>(F.generator);
}

Filter filter_of_set(const FinBoolAlg& A, UfSet Y) {
  Elem join = static_cast<Elem>(Y);
  A.require_valid(join);
  return Filter{join};
}

ElemSet filter_elements(const FinBoolAlg& A, Filter F) {
  A.require_valid(F.generator);
  ElemSet out = 0;
  for (Elem x = 0; x < A.size(); ++x)
    if (filter_contains(A, F, x)) out |= ElemSet{1} << x;
  return out;
}

bool is_filter_set(const FinBoolAlg& A, ElemSet S) {
  if (S == 0) return false;
  const Elem n = A.size();
  for (Elem x = 0; x < n; ++x) {
    if (!(S >> x & 1)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (A.leq(x, y) && !(S >> y & 1)) return false;        // upward closed
      if ((S >> y & 1) && !(S >> A.meet(x, y) & 1)) return false;  // meets
    }
  }
  return true;
}

Elem filter_set_generator(const FinBoolAlg& A, ElemSet S) {
  if (!is_filter_set(A, S))
    throw ContractError("element set is not a filter");
  Elem gen = A.top();
  for (Elem x = 0; x < A.size(); ++x)
    if (S >> x & 1) gen &= x;
  return gen;
}

std::vector<Filter> all_filters(const FinBoolAlg& A) {
  std::vector<Filter> out;
  out.reserve(A.size());
  for (Elem g = 0; g < A.size(); ++g) out.push_back(Filter{g});
  return out;
}

}  // namespace condalg
