#include "condalg/structure.hpp"

#include <algorithm>

#include "condalg/duality.hpp"

namespace condalg {

BoolEquiv::BoolEquiv(int point_count, std::vector<UfSet> blocks)
    : point_count_(point_count), blocks_(std::move(blocks)) {
  if (point_count_ < 0 || point_count_ > TFrame::kMaxPoints)
    throw InputError("point count out of range");
  const UfSet full = (UfSet{1} << point_count_) - 1;
  UfSet seen = 0;
  for (UfSet b : blocks_) {
    if (b == 0) throw InputError("equivalence block is empty");
    if ((b & ~full) != 0) throw InputError("equivalence block out of range");
    if ((b & seen) != 0) throw InputError("equivalence blocks overlap");
    seen |= b;
  }
  if (seen != full) throw InputError("equivalence blocks do not cover");
  std::sort(blocks_.begin(), blocks_.end(),
            [](UfSet a, UfSet b) { return (a & -a) < (b & -b); });
}

BoolEquiv BoolEquiv::identity(int point_count) {
  std::vector<UfSet> blocks;
  for (int i = 0; i < point_count; ++i) blocks.push_back(UfSet{1} << i);
  return BoolEquiv(point_count, std::move(blocks));
}

UfSet BoolEquiv::block_of(int x) const {
  for (UfSet b : blocks_)
    if (b >> x & 1) return b;
  throw InputError("point index out of range");
}

UfSet BoolEquiv::saturation(UfSet U) const {
  UfSet out = 0;
  for (UfSet b : blocks_)
    if ((b & U) != 0) out |= b;
  return out;
}

SubalgRef::SubalgRef(const FinBoolAlg& A, ElemSet domain) : domain_(domain) {
  const Elem N = A.size();
  if (N < 64 && domain_ >> N != 0)
    throw InputError("subalgebra domain out of range");
  if (!(domain_ >> A.bot() & 1) || !(domain_ >> A.top() & 1))
    throw InputError("subalgebra must contain 0 and 1");
  for (Elem a = 0; a < N; ++a) {
    if (!(domain_ >> a & 1)) continue;
    if (!(domain_ >> A.complement(a) & 1))
      throw InputError("subalgebra not closed under complement");
    for (Elem b = 0; b < N; ++b)
      if ((domain_ >> b & 1) &&
          (!(domain_ >> (a & b) & 1) || !(domain_ >> (a | b) & 1)))
        throw InputError("subalgebra not closed under meet/join");
  }
}

std::vector<SubalgRef> enumerate_subalgebras(const CondAlg& alg) {
  const FinBoolAlg& A = alg.base();
  const int n = A.atoms();
  std::vector<ElemSet> domains;
  // Partitions of the atom set as restricted growth strings.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    int nblocks = 0;
    for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, rgs[i] + 1);
    std::vector<Elem> block(static_cast<std::size_t>(nblocks), 0);
    for (int i = 0; i < n; ++i) block[rgs[i]] |= Elem{1} << i;
    ElemSet dom = 0;
    for (unsigned s = 0; s < (1u << nblocks); ++s) {
      Elem e = 0;
      for (int k = 0; k < nblocks; ++k)
        if (s >> k & 1) e |= block[k];
      dom |= ElemSet{1} << e;
    }
    domains.push_back(dom);
  };
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int k = 0; k <= used; ++k) {
      rgs[i] = k;
      self(self, i + 1, std::max(used, k + 1));
    }
  };
  if (n == 0)
    emit();
  else
    rec(rec, 0, 0);
  std::sort(domains.begin(), domains.end());
  std::vector<SubalgRef> out;
  out.reserve(domains.size());
  for (ElemSet d : domains) out.emplace_back(A, d);
  return out;
}

BoolEquiv trace_equivalence(const FinBoolAlg& A, const SubalgRef& B) {
  const int n = A.ultrafilter_count();
  std::vector<ElemSet> trace(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (Elem e = 0; e < A.size(); ++e)
      if (B.contains(e) && ultrafilter_contains(A, Ultrafilter{u}, e))
        trace[u] |= ElemSet{1} << e;
  std::vector<UfSet> blocks;
  UfSet done = 0;
  for (int u = 0; u < n; ++u) {
    if (done >> u & 1) continue;
    UfSet blk = 0;
    for (int v = 0; v < n; ++v)
      if (trace[v] == trace[u]) blk |= UfSet{1} << v;
    done |= blk;
    blocks.push_back(blk);
  }
  return BoolEquiv(n, std::move(blocks));
}

SubalgRef saturated_subalgebra(const FinBoolAlg& A, const BoolEquiv& E) {
  ElemSet dom = 0;
  for (Elem a = 0; a < A.size(); ++a) {
    UfSet img = static_cast<UfSet>(phi(A, a));
    if (E.saturation(img) == img) dom |= ElemSet{1} << a;
  }
  return SubalgRef(A, dom);
}

bool preceq_E(const BoolEquiv& E, UfSet Y, UfSet C) {
  for (int y = 0; y < E.points(); ++y) {
    if (!(Y >> y & 1)) continue;
    if ((E.block_of(y) & C) == 0) return false;
  }
  return true;
}

Verdict is_c_equivalence(const TFrame& f, const BoolEquiv& E) {
  if (!f.upward_closed())
    throw ContractError("C-equivalence test needs a conditional space");
  if (E.points() != f.points())
    throw InputError("equivalence and frame disagree on point count");
  const int m = f.points();
  for (int x = 0; x < m; ++x) {
    for (int xp = 0; xp < m; ++xp) {
      for (int y = 0; y < m; ++y) {
        if (!E.related(x, y)) continue;
        for (PointSet Y = 0; Y <= f.full(); ++Y) {
          if (!f.has(x, Y, xp)) continue;
          bool ok = false;
          for (int yp = 0; yp < m && !ok; ++yp) {
            if (!E.related(xp, yp)) continue;
            for (PointSet C = 0; C <= f.full(); ++C)
              if (f.has(y, C, yp) && preceq_E(E, C, Y)) {
                ok = true;
                break;
              }
          }
          if (!ok)
            return Verdict::fail({{"x", static_cast<std::uint64_t>(x)},
                                  {"x'", static_cast<std::uint64_t>(xp)},
                                  {"y", static_cast<std::uint64_t>(y)},
                                  {"Y", Y}},
                                 "C-equivalence");
        }
      }
    }
  }
  return Verdict::ok("C-equivalence");
}

bool cond_closed(const CondAlg& alg, const SubalgRef& B) {
  for (Elem a = 0; a < alg.base().size(); ++a)
    for (Elem b = 0; b < alg.base().size(); ++b)
      if (B.contains(a) && B.contains(b) && !B.contains(alg.cond(a, b)))
        return false;
  return true;
}

Verdict subalgebra_duality_check(const CondAlg& alg) {
  const TFrame f = ultrafilter_frame(alg);
  const std::vector<SubalgRef> subs = enumerate_subalgebras(alg);
  std::vector<const SubalgRef*> closed;
  std::vector<BoolEquiv> eqs;
  for (const SubalgRef& B : subs) {
    const BoolEquiv E = trace_equivalence(alg.base(), B);
    const bool is_closed = cond_closed(alg, B);
    if (is_closed != is_c_equivalence(f, E).holds)
      return Verdict::fail({{"B", B.domain()}},
                           "closure and C-equivalence disagree");
    if (is_closed) {
      closed.push_back(&B);
      eqs.push_back(E);
    }
  }
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < closed.size(); ++j) {
      const ElemSet d1 = closed[i]->domain();
      const ElemSet d2 = closed[j]->domain();
      const bool included = (d1 & d2) == d1;
      bool refines = true;  // E_{B2} finer than E_{B1}
      for (int u = 0; u < f.points(); ++u)
        if ((eqs[j].block_of(u) & ~eqs[i].block_of(u)) != 0) refines = false;
      if (included != refines)
        return Verdict::fail({{"B1", d1}, {"B2", d2}},
                             "dual order disagrees");
    }
  }
  return Verdict::ok("subalgebra duality");
}

std::vector<PointSet> minimal_witnesses(const TFrame& f, int x, int y) {
  std::vector<PointSet> wits;
  for (PointSet Z = 0; Z <= f.full(); ++Z)
    if (f.has(x, Z, y)) wits.push_back(Z);
  std::vector<PointSet> out;
  for (PointSet Z : wits) {
    bool minimal = true;
    for (PointSet W : wits)
      if (W != Z && (W & Z) == W) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(Z);
  }
  return out;
}

bool is_t_closed(const TFrame& f, PointSet Y) {
  for (int x = 0; x < f.points(); ++x) {
    if (!(Y >> x & 1)) continue;
    for (int y = 0; y < f.points(); ++y)
      for (PointSet Z : minimal_witnesses(f, x, y))
        if ((Z & Y) != Z || !(Y >> y & 1)) return false;
  }
  return true;
}

bool theta_compatible(const CondAlg& alg, UfSet Y) {
  // theta(Y)-classes are cut out by masking with Y, so compatibility says
  // (a -> c) & Y is a function of (a & Y, c & Y).
  const Elem N = alg.base().size();
  const Elem Ym = static_cast<Elem>(Y);
  std::vector<Elem> seen(static_cast<std::size_t>(N) * N, 0);
  std::vector<bool> have(static_cast<std::size_t>(N) * N, false);
  for (Elem a = 0; a < N; ++a) {
    for (Elem c = 0; c < N; ++c) {
      const std::size_t key =
          (static_cast<std::size_t>(a & Ym) << alg.base().atoms()) | (c & Ym);
      const Elem val = alg.cond(a, c) & Ym;
      if (have[key] && seen[key] != val) return false;
      have[key] = true;
      seen[key] = val;
    }
  }
  return true;
}

Verdict congruence_duality_check(const CondAlg& alg) {
  const TFrame f = ultrafilter_frame(alg);
  std::vector<UfSet> tclosed;
  for (PointSet Y = 0; Y <= f.full(); ++Y) {
    const bool compat = theta_compatible(alg, Y);
    const bool tcl = is_t_closed(f, Y);
    if (compat != tcl)
      return Verdict::fail({{"Y", Y}},
                           "congruence and T-closedness disagree");
    if (tcl) tclosed.push_back(Y);
  }
  for (UfSet Y1 : tclosed) {
    for (UfSet Y2 : tclosed) {
      const bool included = (Y1 & Y2) == Y1;
      // theta(Y2) <= theta(Y1) iff every pair identified by Y2 is
      // identified by Y1, which for mask congruences is Y1 <= Y2; checked
      // literally over all pairs.
      bool theta_rev = true;
      for (Elem a = 0; a < alg.base().size() && theta_rev; ++a)
        for (Elem b = 0; b < alg.base().size(); ++b)
          if (((a ^ b) & Y2) == 0 && ((a ^ b) & Y1) != 0) {
            theta_rev = false;
            break;
          }
      if (included != theta_rev)
        return Verdict::fail({{"Y1", Y1}, {"Y2", Y2}},
                             "dual order disagrees");
    }
  }
  return Verdict::ok("congruence duality");
}

}  // namespace condalg
