#ifndef CONDALG_GENERATORS_HPP
#define CONDALG_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/frame.hpp"

namespace condalg {

enum class GenKind {
  Exhaustive,
  RandomTable,
  FromFrame,
  StrictImplication,
  Projection,
};

const char* gen_kind_name(GenKind k);
GenKind parse_gen_kind(const std::string& name);

// A generator request.  Random kinds are pure functions of (kind, atoms,
// seed); rerunning a spec reproduces its output bit for bit.
struct GenSpec {
  GenKind kind = GenKind::Exhaustive;
  int atoms = 1;
  std::uint64_t seed = 0;
};

// Uniform draw from [0, bound) using the raw engine stream; the standard
// distributions are not reproducible across library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

inline constexpr int kFrameFlavors = 8;

// Random upward-closed frame.  Flavors add structure on top of random
// per-pair upsets so that every frame condition has satisfying instances:
// 0 random upsets, 1 sparse, 2 dense generators, 3 membership (y in Z,
// which satisfies the whole canonicity family), 4 T4 closure, 5 T7
// closure, 6 T8 closure, 7 generated from a random ternary S relation
// (which makes the singleton-witness property hold by construction).
TFrame random_upward_closed_frame(int points, int flavor,
                                  std::mt19937_64& rng);

// Every upward-closed frame on the given point count; supported for
// points <= 2 (3 frames at one point, 1296 at two).
std::vector<TFrame> all_upward_closed_frames(int points);

// Samplers behind the random kinds; exposed for corpus builders.
// Rows satisfy C1/C2/C3 by construction as requested; remaining axioms
// fall where they may.
CondAlg random_row_algebra(int atoms, bool want_c1, bool want_c3,
                           std::mt19937_64& rng);
// Uniform random table, no structure at all.
CondAlg random_uniform_algebra(int atoms, std::mt19937_64& rng);
// a -> b = join of the kernel elements x with x & a <= b, over a random
// meet-closed kernel containing 1.  Always lands in PSB with C4, C5, C6
// and C8; C7 varies.
CondAlg random_kernel_algebra(int atoms, std::mt19937_64& rng);
// Complex algebra of a random upward-closed frame (random flavor).
CondAlg random_from_frame_algebra(int atoms, std::mt19937_64& rng);
// proj with a random offset c: a -> b = b | c.
CondAlg random_projection_algebra(int atoms, std::mt19937_64& rng);

// Up to `limit` algebras satisfying every axiom in `require` and violating
// every axiom in `forbid`; all candidates are re-checked in full before
// being returned.  Exhaustive mode handles atoms <= 2 and emits tables in
// lexicographic order; at two atoms it needs C1 and C2 required, which cuts
// the candidate rows to the meet-preserving ones (an unrestricted scan of
// 4^16 tables is out of reach), and prunes non-antitone prefixes when C3 is
// required.  Random kinds sample until the limit or an attempt budget is
// hit; an exhausted search returns what was found, possibly nothing.
std::vector<CondAlg> search(const GenSpec& spec,
                            const std::vector<AxiomId>& require,
                            const std::vector<AxiomId>& forbid,
                            std::size_t limit);

}  // namespace condalg

#endif
