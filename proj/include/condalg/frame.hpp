#ifndef CONDALG_FRAME_HPP
#define CONDALG_FRAME_HPP

#include <compare>
#include <vector>

#include "condalg/cond_alg.hpp"
#include "condalg/types.hpp"

namespace condalg {

struct Triple {
  int x = 0;
  PointSet mid = 0;
  int y = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Relational frame (X, T) with T a set of point/subset/point triples.
// All subsets of X count as closed and as open sets (finite discrete
// topology), so the middle coordinate ranges over arbitrary masks.
// Immutable after construction; triples are kept sorted and deduplicated,
// with a dense image table alongside.
class TFrame {
 public:
  static constexpr int kMaxPoints = 6;

  TFrame() : TFrame(0, {}) {}
  TFrame(int point_count, std::vector<Triple> triples);

  int points() const { return point_count_; }
  PointSet full() const { return (PointSet{1} << point_count_) - 1; }
  const std::vector<Triple>& triples() const { return triples_; }

  PointSet image(int x, PointSet Z) const {
    return img_[(static_cast<std::size_t>(x) << point_count_) | Z];
  }
  bool has(int x, PointSet Z, int y) const { return image(x, Z) >> y & 1; }
  bool upward_closed() const;

  bool operator==(const TFrame& o) const {
    return point_count_ == o.point_count_ && triples_ == o.triples_;
  }

 private:
  int point_count_;
  std::vector<Triple> triples_;
  std::vector<PointSet> img_;
};

TFrame upward_closure(const TFrame& f);

// Complex algebra on P(X):
//   U -> V = { x : for every Z subset of U, T(x, Z) is a subset of V }.
// When f is upward closed this reduces to T(x, U) subset of V; the reduction
// is asserted against the general form.
CondAlg cm(const TFrame& f);

// Conditional-space test.  In the finite discrete case the separation and
// compactness conditions are automatic and the substance is upward closure
// of the middle coordinate; a failure is reported as a triple plus the
// superset it fails to transfer to.
Verdict check_conditional_space(const TFrame& f);

// Embedding of an arbitrary frame into the ultrafilter frame of its own
// powerset algebra.  Computes T'(x, Z, y): for every U >= Z and every V,
// x in (U -> V) implies y in V, evaluated over cm(f); closes it upward; and
// checks it coincides with the upward closure of T, that T itself maps into
// it, and that cm(f) == cm(upward_closure(f)).
Verdict frame_representation_check(const TFrame& f);

}  // namespace condalg

#endif
