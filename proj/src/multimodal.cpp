#include "condalg/multimodal.hpp"

#include "condalg/duality.hpp"

namespace condalg {

MMAlg::MMAlg(FinBoolAlg base, ElemSet index_set,
             std::vector<std::vector<Elem>> boxes)
    : base_(base), index_set_(index_set), boxes_(std::move(boxes)) {
  const Elem N = base_.size();
  if (N < 64 && index_set_ >> N != 0)
    throw InputError("index set mentions elements out of range");
  if (!(index_set_ >> base_.bot() & 1) || !(index_set_ >> base_.top() & 1))
    throw InputError("index set must contain 0 and 1");
  for (Elem a = 0; a < N; ++a) {
    if (!(index_set_ >> a & 1)) continue;
    if (!(index_set_ >> base_.complement(a) & 1))
      throw InputError("index set not closed under complement");
    for (Elem b = 0; b < N; ++b) {
      if (!(index_set_ >> b & 1)) continue;
      if (!(index_set_ >> (a & b) & 1) || !(index_set_ >> (a | b) & 1))
        throw InputError("index set not closed under meet/join");
    }
  }
  if (boxes_.size() != N) throw InputError("box family has wrong size");
  for (Elem b = 0; b < N; ++b) {
    if (!(index_set_ >> b & 1)) continue;
    if (boxes_[b].size() != N)
      throw InputError("box table has wrong size");
    for (Elem v : boxes_[b]) base_.require_valid(v);
  }
}

bool MMAlg::full() const {
  return index_set_ == (base_.size() >= 64
                            ? ~ElemSet{0}
                            : (ElemSet{1} << base_.size()) - 1);
}

Elem MMAlg::box(Elem b, Elem x) const {
  if (!has_index(b)) throw InputError("box index outside the index set");
  base_.require_valid(x);
  return boxes_[b][x];
}

MMAlg to_mma(const CondAlg& A) {
  const Elem N = A.base().size();
  std::vector<std::vector<Elem>> boxes(N);
  for (Elem b = 0; b < N; ++b) {
    boxes[b].reserve(N);
    for (Elem x = 0; x < N; ++x) boxes[b].push_back(A.cond(b, x));
  }
  const ElemSet all = N >= 64 ? ~ElemSet{0} : (ElemSet{1} << N) - 1;
  return MMAlg(A.base(), all, std::move(boxes));
}

CondAlg to_conditional(const MMAlg& m) {
  if (!m.full())
    throw InputError("to_conditional requires a fully indexed family");
  Verdict ax = check_mma_axioms(m);
  if (!ax.holds)
    throw ContractError("to_conditional requires the modal axioms; " +
                        ax.note + " fails");
  const Elem N = m.base().size();
  std::vector<Elem> t;
  t.reserve(static_cast<std::size_t>(N) * N);
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b) t.push_back(m.box(a, b));
  return CondAlg(m.base(), std::move(t));
}

Verdict check_mma_axioms(const MMAlg& m) {
  const FinBoolAlg& B = m.base();
  const Elem N = B.size();
  const Elem top = B.top();
  for (Elem b = 0; b < N; ++b) {
    if (!m.has_index(b)) continue;
    if (m.box(b, top) != top)
      return Verdict::fail({{"b", b}}, "M1");
  }
  for (Elem b = 0; b < N; ++b) {
    if (!m.has_index(b)) continue;
    for (Elem a = 0; a < N; ++a)
      for (Elem c = 0; c < N; ++c)
        if (m.box(b, a & c) != (m.box(b, a) & m.box(b, c)))
          return Verdict::fail({{"b", b}, {"a", a}, {"c", c}}, "M2");
  }
  Verdict m3 = Verdict::ok("M3");
  for (Elem b1 = 0; b1 < N && m3.holds; ++b1) {
    if (!m.has_index(b1)) continue;
    for (Elem b2 = 0; b2 < N && m3.holds; ++b2) {
      if (!m.has_index(b2)) continue;
      for (Elem a = 0; a < N; ++a)
        if (!B.leq(m.box(b1 | b2, a), m.box(b1, a) & m.box(b2, a))) {
          m3 = Verdict::fail({{"b1", b1}, {"b2", b2}, {"a", a}}, "M3");
          break;
        }
    }
  }
  bool m3star = true;
  for (Elem b1 = 0; b1 < N && m3star; ++b1) {
    if (!m.has_index(b1)) continue;
    for (Elem b2 = 0; b2 < N && m3star; ++b2) {
      if (!m.has_index(b2) || !B.leq(b1, b2)) continue;
      for (Elem a = 0; a < N; ++a)
        if (!B.leq(m.box(b2, a), m.box(b1, a))) {
          m3star = false;
          break;
        }
    }
  }
  if (m3.holds != m3star)
    throw ContractError("M3 and its antitone restatement disagree");
  return m3;
}

std::vector<UfSet> q_relation(const MMAlg& m, Elem b) {
  if (!m.has_index(b)) throw InputError("box index outside the index set");
  const FinBoolAlg& B = m.base();
  std::vector<UfSet> out;
  out.reserve(static_cast<std::size_t>(B.ultrafilter_count()));
  for (int u = 0; u < B.ultrafilter_count(); ++u) {
    Elem gen = B.top();
    for (Elem x = 0; x < B.size(); ++x)
      if (ultrafilter_contains(B, Ultrafilter{u}, m.box(b, x))) gen &= x;
    UfSet succ = 0;
    for (int v = 0; v < B.ultrafilter_count(); ++v)
      if (B.leq(atom_elem(B, Ultrafilter{v}), gen)) succ |= UfSet{1} << v;
    out.push_back(succ);
  }
  return out;
}

UfSet q_box(const MMAlg& m, Elem b, UfSet V) {
  const std::vector<UfSet> q = q_relation(m, b);
  UfSet out = 0;
  for (int u = 0; u < m.base().ultrafilter_count(); ++u)
    if ((q[static_cast<std::size_t>(u)] & ~V) == 0) out |= UfSet{1} << u;
  return out;
}

MMAlg mma_canonical_extension(const MMAlg& m) {
  const FinBoolAlg B2(m.base().ultrafilter_count());
  const Elem N2 = B2.size();
  ElemSet idx = 0;
  std::vector<std::vector<Elem>> boxes(N2);
  for (Elem b = 0; b < m.base().size(); ++b) {
    if (!m.has_index(b)) continue;
    const Elem pb = static_cast<Elem>(phi(m.base(), b));
    idx |= ElemSet{1} << pb;
    boxes[pb].clear();
    boxes[pb].reserve(N2);
    for (Elem V = 0; V < N2; ++V)
      boxes[pb].push_back(
          static_cast<Elem>(q_box(m, b, static_cast<UfSet>(V))));
  }
  return MMAlg(B2, idx, std::move(boxes));
}

Verdict qa_equals_box_phi_check(const CondAlg& A) {
  Verdict ca = check_CA(A);
  if (!ca.holds)
    throw ContractError("qa_equals_box_phi_check requires a CA algebra; " +
                        ca.note + " fails");
  const FinBoolAlg& B = A.base();
  const CondAlg E = em(A);
  const MMAlg m = to_mma(A);
  for (Elem a = 0; a < B.size(); ++a) {
    for (Elem V = 0; V < E.base().size(); ++V) {
      if (q_box(m, a, static_cast<UfSet>(V)) !=
          static_cast<UfSet>(E.cond(phi(B, a), V)))
        return Verdict::fail({{"a", a}, {"V", V}},
                             "[Q_a] differs from phi(a) ->");
    }
  }
  if (B.atoms() <= 2) {
    // Reconstruction of U -> V from the boxes alone: intersect over closed
    // subsets Y of U and open supersets O of V the union of [Q_a](O) for a
    // in the filter of Y.
    const Elem N2 = E.base().size();
    for (Elem U = 0; U < N2; ++U) {
      for (Elem V = 0; V < N2; ++V) {
        UfSet want = static_cast<UfSet>(E.cond(U, V));
        UfSet got = static_cast<UfSet>(E.base().top());
        for (Elem Y = 0; Y < N2; ++Y) {
          if ((Y & U) != Y) continue;
          for (Elem O = 0; O < N2; ++O) {
            if ((V & O) != V) continue;
            UfSet term = 0;
            for (Elem a = 0; a < B.size(); ++a)
              if (B.leq(static_cast<Elem>(Y), a))
                term |= q_box(m, a, static_cast<UfSet>(O));
            got &= term;
          }
        }
        if (got != want)
          return Verdict::fail({{"U", U}, {"V", V}},
                               "box reconstruction differs");
      }
    }
  }
  return Verdict::ok("[Q_a] = box_{phi(a)}");
}

}  // namespace condalg
