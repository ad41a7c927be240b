#include "condalg/duality.hpp"

#include <string>

namespace condalg {

TFrame ultrafilter_frame(const CondAlg& A) {
  Verdict ca = check_CA(A);
  if (!ca.holds)
    throw ContractError("ultrafilter_frame requires a CA algebra; " +
                        ca.note + " fails");
  const FinBoolAlg& B = A.base();
  std::vector<Triple> triples;
  for (int u = 0; u < B.ultrafilter_count(); ++u) {
    for (Filter F : all_filters(B)) {
      Filter D = d_filter(A, Ultrafilter{u}, F);
      PointSet Z = phi_filter(B, F);
      for (int v = 0; v < B.ultrafilter_count(); ++v)
        if (B.leq(atom_elem(B, Ultrafilter{v}), D.generator))
          triples.push_back(Triple{u, Z, v});
    }
  }
  return TFrame(B.ultrafilter_count(), std::move(triples));
}

CondAlg em(const CondAlg& A) { return cm(ultrafilter_frame(A)); }

Verdict representation_check(const CondAlg& A) {
  const FinBoolAlg& B = A.base();
  const CondAlg E = em(A);
  for (Elem a = 0; a < B.size(); ++a) {
    for (Elem b = 0; b < B.size(); ++b) {
      if (phi(B, a & b) != (phi(B, a) & phi(B, b)))
        return Verdict::fail({{"a", a}, {"b", b}}, "phi breaks meets");
      if (a != b && phi(B, a) == phi(B, b))
        return Verdict::fail({{"a", a}, {"b", b}}, "phi not injective");
      if (phi(B, A.cond(a, b)) != E.cond(phi(B, a), phi(B, b)))
        return Verdict::fail({{"a", a}, {"b", b}},
                             "phi breaks the conditional");
    }
    if (phi(B, B.complement(a)) != (E.base().top() ^ phi(B, a)))
      return Verdict::fail({{"a", a}}, "phi breaks complement");
  }
  return Verdict::ok("representation");
}

Verdict co_es_roundtrip(const CondAlg& A) {
  // In the finite discrete case the clopens of the ultrafilter space are all
  // masks, so phi being an injective conditional hom between equal-sized
  // algebras makes it an isomorphism.
  const CondAlg E = em(A);
  if (E.base() != A.base())
    return Verdict::fail({}, "em changed the carrier size");
  Verdict rep = representation_check(A);
  if (!rep.holds) return rep;
  return Verdict::ok("co after es is the identity via phi");
}

Verdict es_co_roundtrip(const TFrame& f) {
  Verdict space = check_conditional_space(f);
  if (!space.holds)
    throw ContractError("es_co_roundtrip requires a conditional space: " +
                        space.note);
  const TFrame g = ultrafilter_frame(cm(f));
  if (g.points() != f.points())
    return Verdict::fail({}, "point counts differ");
  // The point map sends x to the principal ultrafilter over atom x, which is
  // index x again, so frames must agree triple for triple.
  if (!(g == f)) {
    for (const Triple& t : f.triples())
      if (!g.has(t.x, t.mid, t.y))
        return Verdict::fail({{"x", static_cast<std::uint64_t>(t.x)},
                              {"Z", t.mid},
                              {"y", static_cast<std::uint64_t>(t.y)}},
                             "triple missing from the dual of cm(f)");
    for (const Triple& t : g.triples())
      if (!f.has(t.x, t.mid, t.y))
        return Verdict::fail({{"x", static_cast<std::uint64_t>(t.x)},
                              {"Z", t.mid},
                              {"y", static_cast<std::uint64_t>(t.y)}},
                             "extra triple in the dual of cm(f)");
  }
  return Verdict::ok("es after co is the identity");
}

AlgHom::AlgHom(CondAlg source, CondAlg target, std::vector<Elem> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)) {
  const FinBoolAlg& S = source_.base();
  const FinBoolAlg& T = target_.base();
  if (map_.size() != S.size()) throw InputError("hom table has wrong size");
  for (Elem v : map_) T.require_valid(v);
  if (map_[S.bot()] != T.bot() || map_[S.top()] != T.top())
    throw InputError("map does not preserve the bounds");
  for (Elem a = 0; a < S.size(); ++a) {
    if (map_[S.complement(a)] != T.complement(map_[a]))
      throw InputError("map does not preserve complement");
    for (Elem b = 0; b < S.size(); ++b)
      if (map_[a & b] != (map_[a] & map_[b]))
        throw InputError("map does not preserve meet");
  }
}

FrameMap::FrameMap(TFrame source, TFrame target, std::vector<int> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(source_.points()))
    throw InputError("point map has wrong size");
  for (int v : map_)
    if (v < 0 || v >= target_.points())
      throw InputError("point map value out of range");
}

PointSet FrameMap::preimage(PointSet U) const {
  PointSet out = 0;
  for (int x = 0; x < source_.points(); ++x)
    if (U >> map_[static_cast<std::size_t>(x)] & 1) out |= PointSet{1} << x;
  return out;
}

FrameMap dual_map(const AlgHom& h) {
  const FinBoolAlg& S = h.source().base();
  const FinBoolAlg& T = h.target().base();
  TFrame fs = ultrafilter_frame(h.target());
  TFrame ft = ultrafilter_frame(h.source());
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(T.ultrafilter_count()));
  for (int u = 0; u < T.ultrafilter_count(); ++u) {
    // h^{-1}[u] is an ultrafilter of the source; find its atom.
    Elem gen = S.top();
    for (Elem a = 0; a < S.size(); ++a)
      if (ultrafilter_contains(T, Ultrafilter{u}, h.apply(a))) gen &= a;
    ElemSet members = 0;
    for (Elem a = 0; a < S.size(); ++a)
      if (ultrafilter_contains(T, Ultrafilter{u}, h.apply(a)))
        members |= ElemSet{1} << a;
    if (!is_filter_set(S, members) ||
        filter_elements(S, Filter{gen}) != members ||
        (gen & (gen - 1)) != 0 || gen == 0)
      throw ContractError("preimage of an ultrafilter is not an ultrafilter");
    int atom = 0;
    while (!(gen >> atom & 1)) ++atom;
    map.push_back(atom);
  }
  return FrameMap(std::move(fs), std::move(ft), std::move(map));
}

AlgHom dual_hom(const FrameMap& f) {
  const CondAlg A2 = cm(f.target());
  const CondAlg A1 = cm(f.source());
  std::vector<Elem> map;
  map.reserve(A2.base().size());
  for (Elem U = 0; U < A2.base().size(); ++U)
    map.push_back(static_cast<Elem>(f.preimage(static_cast<PointSet>(U))));
  return AlgHom(A2, A1, std::move(map));
}

Verdict conditional_function_check(const FrameMap& f) {
  const TFrame& T1 = f.source();
  const TFrame& T2 = f.target();
  for (int x = 0; x < T1.points(); ++x) {
    for (PointSet U = 0; U <= T2.full(); ++U) {
      for (PointSet V = 0; V <= T2.full(); ++V) {
        bool lhs = (T1.image(x, f.preimage(U)) & ~f.preimage(V)) == 0;
        bool rhs = (T2.image(f.apply(x), U) & ~V) == 0;
        if (lhs != rhs)
          return Verdict::fail(
              {{"x", static_cast<std::uint64_t>(x)}, {"U", U}, {"V", V}},
              lhs ? "holds at the source only" : "holds at the target only");
      }
    }
  }
  return Verdict::ok("conditional function");
}

Verdict hom_duality_check(const AlgHom& h) {
  const CondAlg& A = h.source();
  const CondAlg& Bg = h.target();
  Verdict pres = Verdict::ok("preserves ->");
  for (Elem a = 0; a < A.base().size() && pres.holds; ++a)
    for (Elem b = 0; b < A.base().size(); ++b)
      if (h.apply(A.cond(a, b)) != Bg.cond(h.apply(a), h.apply(b))) {
        pres = Verdict::fail({{"a", a}, {"b", b}}, "breaks ->");
        break;
      }
  FrameMap f = dual_map(h);
  Verdict cf = conditional_function_check(f);
  if (pres.holds != cf.holds) {
    Verdict v = Verdict::fail(
        pres.holds ? cf.counterexample : pres.counterexample,
        std::string("hom preservation and dual condition disagree: ") +
            (pres.holds ? "algebra side holds" : "frame side holds"));
    return v;
  }
  if (pres.holds) {
    // Double dual recovers h through phi.
    for (Elem a = 0; a < A.base().size(); ++a)
      if (phi(Bg.base(), h.apply(a)) != f.preimage(phi(A.base(), a)))
        return Verdict::fail({{"a", a}}, "double dual differs from h");
    return Verdict::ok("conditional hom; dual is a conditional function");
  }
  return Verdict::ok("non-conditional hom; dual fails the condition too");
}

std::vector<AlgHom> all_boolean_homs(const CondAlg& A, const CondAlg& B) {
  const int na = A.base().ultrafilter_count();
  const int nb = B.base().ultrafilter_count();
  std::vector<AlgHom> out;
  // Every point map p : Ul(B) -> Ul(A) induces h(a) = p^{-1}[phi(a)].
  std::vector<int> p(static_cast<std::size_t>(nb), 0);
  std::size_t count = 1;
  for (int i = 0; i < nb; ++i) count *= static_cast<std::size_t>(na);
  if (na == 0 && nb > 0) count = 0;  // no maps into an empty point set
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t r = k;
    for (int i = 0; i < nb; ++i) {
      p[static_cast<std::size_t>(i)] = static_cast<int>(r % na);
      r /= static_cast<std::size_t>(na);
    }
    std::vector<Elem> map;
    map.reserve(A.base().size());
    for (Elem a = 0; a < A.base().size(); ++a) {
      Elem v = 0;
      for (int u = 0; u < nb; ++u)
        if (a >> p[static_cast<std::size_t>(u)] & 1) v |= Elem{1} << u;
      map.push_back(v);
    }
    out.emplace_back(A, B, std::move(map));
  }
  return out;
}

}  // namespace condalg
