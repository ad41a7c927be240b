#ifndef CONDALG_VARIETIES_HPP
#define CONDALG_VARIETIES_HPP

#include <compare>
#include <string>
#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/frame.hpp"

namespace condalg {

// The five varieties, ordered from weakest to strongest.
enum class VarietyTag { CA, PSB, PsC, SIA, S2IA };

const char* variety_name(VarietyTag tag);
VarietyTag parse_variety(const std::string& name);
std::vector<VarietyTag> all_variety_tags();

// Defining axiom sets: PSB = CA + {C1*, C3*}; PsC = PSB + {C5, C6};
// SIA = PSB + {C4, C5, C7, C8}; S2IA = PSB + {C4, C5, C6, C7}.
std::vector<AxiomId> variety_axioms(VarietyTag tag);

// Every tag whose full axiom set passes, in tag order.  The result is
// upward closed in the subvariety poset (S2IA below PsC and SIA, both
// below PSB, below CA); that is a theorem, not an implementation device.
std::vector<VarietyTag> classify_variety(const CondAlg& alg);

// First-order frame conditions.  A-ids are read on ultrafilter frames of
// algebras and T-ids on arbitrary conditional spaces, but each pair shares
// one evaluator; PSBwitness and NonEmptyMiddle serve both roles.
enum class FrameCondId {
  A4,
  A5,
  A6,
  A7,
  A8,
  PSBwitness,      // T(x,Y,y) implies some w in Y with T(x,{w},y)
  NonEmptyMiddle,  // no triple has an empty middle coordinate
  T3star,          // like PSBwitness but only for nonempty Y
  T4,              // T(x,Y,y) and T(y,Z,z) imply T(x,Z,z)
  T5,              // T(x,{x},x)
  T6,              // T(x,Y,y) implies some z in Y with T(x,{y},z)
  T7,              // T(x,Y,y) and T(x,Z,z) imply T(y,Z,z)
  T8,              // T(x,Y,y) and img(x,full) & Y <= Z imply T(x,Z,y)
};

const char* frame_cond_name(FrameCondId id);
FrameCondId parse_frame_cond(const std::string& name);  // accepts T3* too
std::vector<FrameCondId> all_frame_cond_ids();

// Literal evaluation over points and subset masks; counterexamples are
// lexicographically least in the condition's quantifier order.
Verdict check_frame_condition(const TFrame& f, FrameCondId id);

// First-order correspondence over the ultrafilter frame: the axiom holds
// in the algebra iff the paired condition holds in its dual frame.
// Pairs: C1* with NonEmptyMiddle; C4..C8 with A4..A8.  C3* is special:
// C1* and C3* jointly pair with PSBwitness, and the T3* shape of the dual
// frame must force C3* (one direction only).
// Precondition: check_CA (propagated).  Other axiom ids: InputError.
Verdict correspondence_check(const CondAlg& alg, AxiomId id);

// Canonicity over an arbitrary conditional space: the frame condition
// holds iff the matching equation holds in the complex algebra.
// Pairs: T3* with C3*, T4..T8 with C4..C8.  Other ids: InputError.
// Precondition: f upward closed.
Verdict canonicity_check(const TFrame& f, FrameCondId id);

struct STriple {
  int x = 0;
  int y = 0;
  int z = 0;
  friend auto operator<=>(const STriple&, const STriple&) = default;
};

// For PSB algebras the ultrafilter frame is generated by the ternary
// relation S(x,y,z) iff T(x,{y},z); the recovery law
// T(x,K,z) iff some y in K has S(x,y,z) is verified before returning
// (ContractError on violation, as on non-PSB input).
std::vector<STriple> psb_s_relation(const CondAlg& alg);

}  // namespace condalg

#endif
