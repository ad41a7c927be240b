#include "condalg/extensions.hpp"

namespace condalg {
namespace {

void require_ca(const CondAlg& A, const char* op) {
  Verdict ca = check_CA(A);
  if (!ca.holds)
    throw ContractError(std::string(op) + " requires a CA algebra; " +
                        ca.note + " fails");
}

void require_mask(const CondAlg& A, UfSet M) {
  if (M >= (UfSet{1} << A.base().ultrafilter_count()))
    throw InputError("ultrafilter set out of range");
}

}  // namespace

namespace detail {

UfSet pi_extend_unchecked(const CondAlg& A, UfSet U, UfSet V) {
  const FinBoolAlg& B = A.base();
  const UfSet full = static_cast<UfSet>(B.top());
  UfSet result = full;
  for (UfSet Y = 0; Y <= full; ++Y) {
    if ((Y & U) != Y) continue;  // closed subsets of U
    const Elem fy = static_cast<Elem>(Y);  // filter of Y is up(join of Y)
    for (UfSet O = 0; O <= full; ++O) {
      if ((V & O) != V) continue;  // open supersets of V
      const Elem io = static_cast<Elem>(O);  // ideal of O is down(O)
      UfSet term = 0;
      for (Elem a = 0; a < B.size(); ++a) {
        if (!B.leq(fy, a)) continue;
        for (Elem b = 0; b < B.size(); ++b) {
          if (!B.leq(b, io)) continue;
          term |= phi(B, A.cond(a, b));
        }
      }
      result &= term;
    }
  }
  return result;
}

UfSet sigma_extend_unchecked(const CondAlg& A, UfSet U, UfSet V) {
  const FinBoolAlg& B = A.base();
  const UfSet full = static_cast<UfSet>(B.top());
  // Stage one on pairs (complement of an ideal image, filter image), staged
  // two as a union over open supersets of U and closed subsets of V.  The
  // ideal down(gI) has phi-complement full \ gI, so the open set Z^c is the
  // mask gI itself.
  UfSet result = 0;
  for (Elem gI = 0; gI < B.size(); ++gI) {
    const UfSet Zc = phi(B, gI);
    if ((U & Zc) != U) continue;  // open superset of U
    for (Elem gF = 0; gF < B.size(); ++gF) {
      const UfSet Y = phi(B, gF);
      if ((Y & V) != Y) continue;  // closed subset of V
      UfSet term = full;
      for (Elem a = 0; a < B.size(); ++a) {
        if (!B.leq(a, gI)) continue;
        for (Elem b = 0; b < B.size(); ++b) {
          if (!B.leq(gF, b)) continue;
          term &= phi(B, A.cond(a, b));
        }
      }
      result |= term;
    }
  }

  // Independent membership characterization through the G relation:
  // u lies in U sigma-> V iff some (Z, Y) in G(u) has Z disjoint from U and
  // Y inside V.
  UfSet via_g = 0;
  for (int u = 0; u < B.ultrafilter_count(); ++u) {
    bool member = false;
    for (Elem gI = 0; gI < B.size() && !member; ++gI) {
      const UfSet Z = full ^ phi(B, gI);
      if ((Z & U) != 0) continue;
      for (Elem gF = 0; gF < B.size(); ++gF) {
        const UfSet Y = phi(B, gF);
        if ((Y & ~V) != 0) continue;
        bool inside = true;
        for (Elem a = 0; a < B.size() && inside; ++a) {
          if (!B.leq(a, gI)) continue;
          for (Elem b = 0; b < B.size(); ++b) {
            if (!B.leq(gF, b)) continue;
            if (!ultrafilter_contains(B, Ultrafilter{u}, A.cond(a, b))) {
              inside = false;
              break;
            }
          }
        }
        if (inside) {
          member = true;
          break;
        }
      }
    }
    if (member) via_g |= UfSet{1} << u;
  }
  if (via_g != result)
    throw ContractError("sigma extension disagrees with its G-relation form");
  return result;
}

}  // namespace detail

UfSet pi_extend(const CondAlg& A, UfSet U, UfSet V) {
  require_ca(A, "pi_extend");
  require_mask(A, U);
  require_mask(A, V);
  return detail::pi_extend_unchecked(A, U, V);
}

UfSet sigma_extend(const CondAlg& A, UfSet U, UfSet V) {
  require_ca(A, "sigma_extend");
  require_mask(A, U);
  require_mask(A, V);
  return detail::sigma_extend_unchecked(A, U, V);
}

Verdict smoothness_check(const CondAlg& A) {
  require_ca(A, "smoothness_check");
  const UfSet full = static_cast<UfSet>(A.base().top());
  for (UfSet U = 0; U <= full; ++U) {
    for (UfSet V = 0; V <= full; ++V) {
      if (detail::pi_extend_unchecked(A, U, V) !=
          detail::sigma_extend_unchecked(A, U, V))
        return Verdict::fail({{"U", U}, {"V", V}}, "pi differs from sigma");
    }
  }
  return Verdict::ok("smooth");
}

std::vector<GTriple> g_relation(const CondAlg& A, int u) {
  require_ca(A, "g_relation");
  const FinBoolAlg& B = A.base();
  if (u < 0 || u >= B.ultrafilter_count())
    throw InputError("ultrafilter index out of range");
  const UfSet full = static_cast<UfSet>(B.top());
  std::vector<GTriple> out;
  for (Elem gI = 0; gI < B.size(); ++gI) {
    for (Elem gF = 0; gF < B.size(); ++gF) {
      bool inside = true;
      for (Elem a = 0; a < B.size() && inside; ++a) {
        if (!B.leq(a, gI)) continue;
        for (Elem b = 0; b < B.size(); ++b) {
          if (!B.leq(gF, b)) continue;
          if (!ultrafilter_contains(B, Ultrafilter{u}, A.cond(a, b))) {
            inside = false;
            break;
          }
        }
      }
      if (inside)
        out.push_back(GTriple{u, static_cast<UfSet>(full ^ phi(B, gI)),
                              phi(B, gF), gI, gF});
    }
  }
  return out;
}

}  // namespace condalg
