#include "condalg/cond_alg.hpp"

#include <array>

namespace condalg {

CondAlg::CondAlg(FinBoolAlg base, std::vector<Elem> table)
    : base_(base), table_(std::move(table)) {
  const std::size_t want =
      static_cast<std::size_t>(base_.size()) * base_.size();
  if (table_.size() != want)
    throw InputError("conditional table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(want));
  for (Elem v : table_) base_.require_valid(v);
}

const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::C1: return "C1";
    case AxiomId::C2: return "C2";
    case AxiomId::C3: return "C3";
    case AxiomId::C1star: return "C1*";
    case AxiomId::C3star: return "C3*";
    case AxiomId::C4: return "C4";
    case AxiomId::C5: return "C5";
    case AxiomId::C6: return "C6";
    case AxiomId::C7: return "C7";
    case AxiomId::C8: return "C8";
    case AxiomId::M1: return "M1";
    case AxiomId::M2: return "M2";
    case AxiomId::M3: return "M3";
  }
  throw ContractError("unknown axiom id");
}

AxiomId parse_axiom_id(const std::string& name) {
  for (AxiomId id : all_axiom_ids()) {
    if (name == axiom_name(id)) return id;
  }
  if (name == "C1star") return AxiomId::C1star;
  if (name == "C3star") return AxiomId::C3star;
  throw InputError("unknown axiom id '" + name + "'");
}

std::vector<AxiomId> all_axiom_ids() {
  return {AxiomId::C1,     AxiomId::C2, AxiomId::C3, AxiomId::C1star,
          AxiomId::C3star, AxiomId::C4, AxiomId::C5, AxiomId::C6,
          AxiomId::C7,     AxiomId::C8, AxiomId::M1, AxiomId::M2,
          AxiomId::M3};
}

namespace {

Verdict fail1(AxiomId id, const char* n, Elem a) {
  return Verdict::fail({{n, a}}, axiom_name(id));
}

}  // namespace

Verdict check_axiom(const CondAlg& A, AxiomId id) {
  const FinBoolAlg& B = A.base();
  const Elem N = B.size();
  const Elem top = B.top();
  switch (id) {
    case AxiomId::C1:
      for (Elem a = 0; a < N; ++a)
        if (A.cond(a, top) != top) return fail1(id, "a", a);
      return Verdict::ok(axiom_name(id));
    case AxiomId::C2:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if ((A.cond(a, b) & A.cond(a, c)) != A.cond(a, b & c))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C3:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if (!B.leq(A.cond(a | b, c), A.cond(a, c) & A.cond(b, c)))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C1star:
      for (Elem a = 0; a < N; ++a)
        if (A.cond(0, a) != top) return fail1(id, "a", a);
      return Verdict::ok(axiom_name(id));
    case AxiomId::C3star:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if (!B.leq(A.cond(a, c) & A.cond(b, c), A.cond(a | b, c)))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C4:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if (!B.leq(A.cond(a, b), A.cond(c, A.cond(a, b))))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C5:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          if (!B.leq(a & A.cond(a, b), b))
            return Verdict::fail({{"a", a}, {"b", b}}, axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C6:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          if (!B.leq(A.cond(a, b), A.cond(top ^ b, top ^ a)))
            return Verdict::fail({{"a", a}, {"b", b}}, axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C7:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if (!B.leq(top ^ A.cond(a, b), A.cond(c, top ^ A.cond(a, b))))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::C8:
      for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
          for (Elem c = 0; c < N; ++c)
            if (!B.leq(A.cond(top, (top ^ a) | b) & A.cond(b, c), A.cond(a, c)))
              return Verdict::fail({{"a", a}, {"b", b}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::M1:
      for (Elem b = 0; b < N; ++b)
        if (A.cond(b, top) != top) return fail1(id, "b", b);
      return Verdict::ok(axiom_name(id));
    case AxiomId::M2:
      for (Elem b = 0; b < N; ++b)
        for (Elem a = 0; a < N; ++a)
          for (Elem c = 0; c < N; ++c)
            if (A.cond(b, a & c) != (A.cond(b, a) & A.cond(b, c)))
              return Verdict::fail({{"b", b}, {"a", a}, {"c", c}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
    case AxiomId::M3:
      for (Elem b1 = 0; b1 < N; ++b1)
        for (Elem b2 = 0; b2 < N; ++b2)
          for (Elem a = 0; a < N; ++a)
            if (!B.leq(A.cond(b1 | b2, a), A.cond(b1, a) & A.cond(b2, a)))
              return Verdict::fail({{"b1", b1}, {"b2", b2}, {"a", a}},
                                   axiom_name(id));
      return Verdict::ok(axiom_name(id));
  }
  throw ContractError("unknown axiom id");
}

Verdict check_CA(const CondAlg& A) {
  for (AxiomId id : {AxiomId::C1, AxiomId::C2, AxiomId::C3}) {
    Verdict v = check_axiom(A, id);
    if (!v.holds) return v;
  }
  return Verdict::ok("CA");
}

Verdict monotonicity_report(const CondAlg& A) {
  Verdict ca = check_CA(A);
  if (!ca.holds)
    throw ContractError("monotonicity_report requires a CA algebra; " +
                        ca.note + " fails");
  const FinBoolAlg& B = A.base();
  const Elem N = B.size();
  for (Elem x = 0; x < N; ++x)
    for (Elem a = 0; a < N; ++a)
      for (Elem b = 0; b < N; ++b)
        if (B.leq(a, b) && !B.leq(A.cond(x, a), A.cond(x, b)))
          return Verdict::fail({{"x", x}, {"a", a}, {"b", b}},
                               "isotone in consequent");
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem x = 0; x < N; ++x)
        if (B.leq(a, b) && !B.leq(A.cond(b, x), A.cond(a, x)))
          return Verdict::fail({{"a", a}, {"b", b}, {"x", x}},
                               "antitone in antecedent");
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem x = 0; x < N; ++x)
        for (Elem y = 0; y < N; ++y)
          if (!B.leq(A.cond(a, b) & A.cond(x, y), A.cond(a & x, b & y)))
            return Verdict::fail({{"a", a}, {"b", b}, {"x", x}, {"y", y}},
                                 "meet of conditionals");
  return Verdict::ok("monotonicity");
}

ElemSet d_set(const CondAlg& A, ElemSet X, ElemSet Y) {
  const Elem N = A.base().size();
  ElemSet out = 0;
  for (Elem b = 0; b < N; ++b) {
    for (Elem a = 0; a < N; ++a) {
      if ((Y >> a & 1) && (X >> A.cond(a, b) & 1)) {
        out |= ElemSet{1} << b;
        break;
      }
    }
  }
  return out;
}

Filter d_filter(const CondAlg& A, Ultrafilter u, Filter F) {
  const FinBoolAlg& B = A.base();
  if (u.atom < 0 || u.atom >= B.atoms())
    throw InputError("ultrafilter index out of range");
  B.require_valid(F.generator);
  ElemSet uset = 0;
  for (Elem x = 0; x < B.size(); ++x)
    if (ultrafilter_contains(B, u, x)) uset |= ElemSet{1} << x;
  ElemSet D = d_set(A, uset, filter_elements(B, F));
  if (!is_filter_set(B, D))
    throw ContractError("D of a filter is not a filter (algebra outside CA)");
  return Filter{filter_set_generator(B, D)};
}

CondAlg proj_algebra(int atoms, Elem c) {
  FinBoolAlg B(atoms);
  B.require_valid(c);
  std::vector<Elem> t;
  t.reserve(static_cast<std::size_t>(B.size()) * B.size());
  for (Elem a = 0; a < B.size(); ++a)
    for (Elem b = 0; b < B.size(); ++b) t.push_back(b | c);
  return CondAlg(B, std::move(t));
}

CondAlg glob_algebra(int atoms) {
  FinBoolAlg B(atoms);
  std::vector<Elem> t;
  t.reserve(static_cast<std::size_t>(B.size()) * B.size());
  for (Elem a = 0; a < B.size(); ++a)
    for (Elem b = 0; b < B.size(); ++b)
      t.push_back(B.leq(a, b) ? B.top() : B.bot());
  return CondAlg(B, std::move(t));
}

}  // namespace condalg
