#include "condalg/varieties.hpp"

#include <algorithm>

#include "condalg/duality.hpp"

namespace condalg {

const char* variety_name(VarietyTag tag) {
  switch (tag) {
    case VarietyTag::CA: return "CA";
    case VarietyTag::PSB: return "PSB";
    case VarietyTag::PsC: return "PsC";
    case VarietyTag::SIA: return "SIA";
    case VarietyTag::S2IA: return "S2IA";
  }
  throw InputError("unknown variety tag");
}

VarietyTag parse_variety(const std::string& name) {
  for (VarietyTag t : all_variety_tags())
    if (name == variety_name(t)) return t;
  throw InputError("unknown variety: " + name);
}

std::vector<VarietyTag> all_variety_tags() {
  return {VarietyTag::CA, VarietyTag::PSB, VarietyTag::PsC, VarietyTag::SIA,
          VarietyTag::S2IA};
}

std::vector<AxiomId> variety_axioms(VarietyTag tag) {
  std::vector<AxiomId> out = {AxiomId::C1, AxiomId::C2, AxiomId::C3};
  if (tag == VarietyTag::CA) return out;
  out.push_back(AxiomId::C1star);
  out.push_back(AxiomId::C3star);
  switch (tag) {
    case VarietyTag::PSB:
      break;
    case VarietyTag::PsC:
      out.insert(out.end(), {AxiomId::C5, AxiomId::C6});
      break;
    case VarietyTag::SIA:
      out.insert(out.end(),
                 {AxiomId::C4, AxiomId::C5, AxiomId::C7, AxiomId::C8});
      break;
    case VarietyTag::S2IA:
      out.insert(out.end(),
                 {AxiomId::C4, AxiomId::C5, AxiomId::C6, AxiomId::C7});
      break;
    default:
      break;
  }
  return out;
}

std::vector<VarietyTag> classify_variety(const CondAlg& alg) {
  std::vector<VarietyTag> out;
  for (VarietyTag t : all_variety_tags()) {
    bool all = true;
    for (AxiomId id : variety_axioms(t))
      if (!check_axiom(alg, id).holds) {
        all = false;
        break;
      }
    if (all) out.push_back(t);
  }
  return out;
}

const char* frame_cond_name(FrameCondId id) {
  switch (id) {
    case FrameCondId::A4: return "A4";
    case FrameCondId::A5: return "A5";
    case FrameCondId::A6: return "A6";
    case FrameCondId::A7: return "A7";
    case FrameCondId::A8: return "A8";
    case FrameCondId::PSBwitness: return "PSBwitness";
    case FrameCondId::NonEmptyMiddle: return "NonEmptyMiddle";
    case FrameCondId::T3star: return "T3star";
    case FrameCondId::T4: return "T4";
    case FrameCondId::T5: return "T5";
    case FrameCondId::T6: return "T6";
    case FrameCondId::T7: return "T7";
    case FrameCondId::T8: return "T8";
  }
  throw InputError("unknown frame condition");
}

FrameCondId parse_frame_cond(const std::string& name) {
  if (name == "T3*") return FrameCondId::T3star;
  for (FrameCondId id : all_frame_cond_ids())
    if (name == frame_cond_name(id)) return id;
  throw InputError("unknown frame condition: " + name);
}

std::vector<FrameCondId> all_frame_cond_ids() {
  return {FrameCondId::A4,     FrameCondId::A5,
          FrameCondId::A6,     FrameCondId::A7,
          FrameCondId::A8,     FrameCondId::PSBwitness,
          FrameCondId::NonEmptyMiddle,
          FrameCondId::T3star, FrameCondId::T4,
          FrameCondId::T5,     FrameCondId::T6,
          FrameCondId::T7,     FrameCondId::T8};
}

namespace {

std::uint64_t uv(int x) { return static_cast<std::uint64_t>(x); }

Verdict cond_transitive_like(const TFrame& f, FrameCondId id, bool seven) {
  // T4: T(x,Y,y) & T(y,Z,z) -> T(x,Z,z);  T7: T(x,Y,y) & T(x,Z,z) -> T(y,Z,z)
  for (int x = 0; x < f.points(); ++x)
    for (int y = 0; y < f.points(); ++y)
      for (int z = 0; z < f.points(); ++z)
        for (PointSet Y = 0; Y <= f.full(); ++Y)
          for (PointSet Z = 0; Z <= f.full(); ++Z) {
            const bool prem = seven ? f.has(x, Y, y) && f.has(x, Z, z)
                                    : f.has(x, Y, y) && f.has(y, Z, z);
            const bool conc = seven ? f.has(y, Z, z) : f.has(x, Z, z);
            if (prem && !conc)
              return Verdict::fail(
                  {{"x", uv(x)}, {"y", uv(y)}, {"z", uv(z)}, {"Y", Y}, {"Z", Z}},
                  frame_cond_name(id));
          }
  return Verdict::ok(frame_cond_name(id));
}

Verdict cond_witness(const TFrame& f, FrameCondId id) {
  // T6: witness z in Y with T(x,{y},z); T3*/PSBwitness: witness z in Y
  // with T(x,{z},y).  T3* skips the empty middle.
  for (int x = 0; x < f.points(); ++x)
    for (int y = 0; y < f.points(); ++y)
      for (PointSet Y = 0; Y <= f.full(); ++Y) {
        if (id == FrameCondId::T3star && Y == 0) continue;
        if (!f.has(x, Y, y)) continue;
        bool ok = false;
        if (id == FrameCondId::T6 || id == FrameCondId::A6) {
          ok = (f.image(x, PointSet{1} << y) & Y) != 0;
        } else {
          for (int z = 0; z < f.points() && !ok; ++z)
            ok = (Y >> z & 1) && f.has(x, PointSet{1} << z, y);
        }
        if (!ok)
          return Verdict::fail({{"x", uv(x)}, {"y", uv(y)}, {"Y", Y}},
                               frame_cond_name(id));
      }
  return Verdict::ok(frame_cond_name(id));
}

}  // namespace

Verdict check_frame_condition(const TFrame& f, FrameCondId id) {
  switch (id) {
    case FrameCondId::A4:
    case FrameCondId::T4:
      return cond_transitive_like(f, id, false);
    case FrameCondId::A7:
    case FrameCondId::T7:
      return cond_transitive_like(f, id, true);
    case FrameCondId::A5:
    case FrameCondId::T5:
      for (int x = 0; x < f.points(); ++x)
        if (!f.has(x, PointSet{1} << x, x))
          return Verdict::fail({{"x", uv(x)}}, frame_cond_name(id));
      return Verdict::ok(frame_cond_name(id));
    case FrameCondId::A6:
    case FrameCondId::T6:
    case FrameCondId::T3star:
    case FrameCondId::PSBwitness:
      return cond_witness(f, id);
    case FrameCondId::A8:
    case FrameCondId::T8:
      for (int x = 0; x < f.points(); ++x)
        for (int y = 0; y < f.points(); ++y)
          for (PointSet Y = 0; Y <= f.full(); ++Y) {
            if (!f.has(x, Y, y)) continue;
            const PointSet guard = f.image(x, f.full()) & Y;
            for (PointSet Z = 0; Z <= f.full(); ++Z)
              if ((guard & ~Z) == 0 && !f.has(x, Z, y))
                return Verdict::fail(
                    {{"x", uv(x)}, {"y", uv(y)}, {"Y", Y}, {"Z", Z}},
                    frame_cond_name(id));
          }
      return Verdict::ok(frame_cond_name(id));
    case FrameCondId::NonEmptyMiddle:
      for (const Triple& t : f.triples())
        if (t.mid == 0)
          return Verdict::fail({{"x", uv(t.x)}, {"y", uv(t.y)}},
                               "empty middle");
      return Verdict::ok("NonEmptyMiddle");
  }
  throw InputError("unknown frame condition");
}

namespace {

FrameCondId a_condition_for(AxiomId id) {
  switch (id) {
    case AxiomId::C1star: return FrameCondId::NonEmptyMiddle;
    case AxiomId::C4: return FrameCondId::A4;
    case AxiomId::C5: return FrameCondId::A5;
    case AxiomId::C6: return FrameCondId::A6;
    case AxiomId::C7: return FrameCondId::A7;
    case AxiomId::C8: return FrameCondId::A8;
    default:
      throw InputError("axiom has no frame correspondence");
  }
}

}  // namespace

Verdict correspondence_check(const CondAlg& alg, AxiomId id) {
  const TFrame f = ultrafilter_frame(alg);
  if (id == AxiomId::C3star) {
    const bool psb = check_axiom(alg, AxiomId::C1star).holds &&
                     check_axiom(alg, AxiomId::C3star).holds;
    const bool witness =
        check_frame_condition(f, FrameCondId::PSBwitness).holds;
    if (psb != witness)
      return Verdict::fail({}, psb ? "C1*+C3* hold but PSBwitness fails"
                                   : "PSBwitness holds but C1*+C3* fail");
    if (check_frame_condition(f, FrameCondId::T3star).holds &&
        !check_axiom(alg, AxiomId::C3star).holds)
      return Verdict::fail({}, "T3* shape without C3*");
    return Verdict::ok("C3* correspondence");
  }
  const FrameCondId fc = a_condition_for(id);
  const bool lhs = check_axiom(alg, id).holds;
  const bool rhs = check_frame_condition(f, fc).holds;
  if (lhs != rhs)
    return Verdict::fail(
        {}, std::string(axiom_name(id)) + (lhs ? " holds but " : " fails but ") +
                frame_cond_name(fc) + (rhs ? " holds" : " fails"));
  return Verdict::ok(std::string(axiom_name(id)) + " correspondence");
}

Verdict canonicity_check(const TFrame& f, FrameCondId id) {
  AxiomId ax;
  switch (id) {
    case FrameCondId::T3star: ax = AxiomId::C3star; break;
    case FrameCondId::T4: ax = AxiomId::C4; break;
    case FrameCondId::T5: ax = AxiomId::C5; break;
    case FrameCondId::T6: ax = AxiomId::C6; break;
    case FrameCondId::T7: ax = AxiomId::C7; break;
    case FrameCondId::T8: ax = AxiomId::C8; break;
    default:
      throw InputError("condition is not part of the canonicity family");
  }
  const bool lhs = check_frame_condition(f, id).holds;
  const bool rhs = check_axiom(cm(f), ax).holds;
  if (lhs != rhs)
    return Verdict::fail(
        {}, std::string(frame_cond_name(id)) +
                (lhs ? " holds but " : " fails but ") + axiom_name(ax) +
                (rhs ? " holds" : " fails"));
  return Verdict::ok(std::string(frame_cond_name(id)) + " canonicity");
}

std::vector<STriple> psb_s_relation(const CondAlg& alg) {
  const std::vector<VarietyTag> tags = classify_variety(alg);
  if (std::find(tags.begin(), tags.end(), VarietyTag::PSB) == tags.end())
    throw ContractError("S-relation requires a PSB algebra");
  const TFrame f = ultrafilter_frame(alg);
  std::vector<STriple> S;
  for (int x = 0; x < f.points(); ++x)
    for (int y = 0; y < f.points(); ++y)
      for (int z = 0; z < f.points(); ++z)
        if (f.has(x, PointSet{1} << y, z)) S.push_back({x, y, z});
  for (int x = 0; x < f.points(); ++x)
    for (PointSet K = 0; K <= f.full(); ++K)
      for (int z = 0; z < f.points(); ++z) {
        bool via_s = false;
        for (int y = 0; y < f.points() && !via_s; ++y)
          via_s = (K >> y & 1) && f.has(x, PointSet{1} << y, z);
        if (f.has(x, K, z) != via_s)
          throw ContractError("S-relation fails to regenerate T");
      }
  return S;
}

}  // namespace condalg
