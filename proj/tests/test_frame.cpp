#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "condalg/frame.hpp"

using namespace condalg;

namespace {

TFrame membership_frame(int m) {
  std::vector<Triple> ts;
  const PointSet full = (PointSet{1} << m) - 1;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (PointSet Z = 0; Z <= full; ++Z)
        if (Z >> y & 1) ts.push_back({x, Z, y});
  return TFrame(m, std::move(ts));
}

}  // namespace

TEST_CASE("triples are sorted, deduplicated and validated") {
  const TFrame f(2, {{1, 1, 1}, {0, 0, 0}, {1, 1, 1}});
  REQUIRE(f.triples().size() == 2);
  CHECK(f.triples()[0] == Triple{0, 0, 0});
  CHECK(f.triples()[1] == Triple{1, 1, 1});
  CHECK_THROWS_AS(TFrame(2, {{2, 0, 0}}), InputError);
  CHECK_THROWS_AS(TFrame(2, {{0, 4, 0}}), InputError);
  CHECK_THROWS_AS(TFrame(2, {{0, 0, -1}}), InputError);
  CHECK_THROWS_AS(TFrame(7, {}), InputError);
}

TEST_CASE("image and membership agree with the triple list") {
  const TFrame f(3, {{0, 3, 1}, {0, 3, 2}, {1, 0, 0}});
  CHECK(f.image(0, 3) == 0b110);
  CHECK(f.image(0, 1) == 0);
  CHECK(f.has(1, 0, 0));
  CHECK(!f.has(1, 0, 1));
  CHECK(f.full() == 7);
}

TEST_CASE("upward closure adds exactly the missing supersets") {
  const TFrame f(2, {{0, 1, 0}});
  CHECK(!f.upward_closed());
  const TFrame g = upward_closure(f);
  CHECK(g.upward_closed());
  REQUIRE(g.triples().size() == 2);
  CHECK(g.triples()[1] == Triple{0, 3, 0});
  CHECK(upward_closure(g) == g);
  CHECK(membership_frame(3).upward_closed());
}

TEST_CASE("conditional space check pinpoints the broken transfer") {
  const TFrame f(2, {{0, 1, 0}});
  const Verdict v = check_conditional_space(f);
  CHECK(!v.holds);
  REQUIRE(v.counterexample.size() == 4);
  CHECK(v.counterexample[0].value == 0);  // x
  CHECK(v.counterexample[1].value == 1);  // Z
  CHECK(v.counterexample[2].value == 0);  // y
  CHECK(v.counterexample[3].value == 3);  // missing superset
  CHECK(check_conditional_space(membership_frame(2)).holds);
  CHECK(check_conditional_space(TFrame(0, {})).holds);
}

TEST_CASE("complex algebra of the membership frame is glob") {
  CHECK(cm(membership_frame(2)) == glob_algebra(2));
  CHECK(cm(membership_frame(3)) == glob_algebra(3));
}

TEST_CASE("complex algebra of the empty frame is constant top") {
  const CondAlg A = cm(TFrame(2, {}));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(A.cond(a, b) == 3);
  CHECK(check_CA(A).holds);
}

TEST_CASE("complex algebras of upward-closed frames satisfy the CA laws") {
  // A dense two-point frame with mixed middles.
  const TFrame f = upward_closure(
      TFrame(2, {{0, 1, 1}, {0, 2, 0}, {1, 1, 0}, {1, 2, 1}, {1, 0, 0}}));
  CHECK(check_CA(cm(f)).holds);
}

TEST_CASE("frames embed into the ultrafilter frame of their powerset") {
  CHECK(frame_representation_check(membership_frame(2)).holds);
  CHECK(frame_representation_check(TFrame(2, {})).holds);
  CHECK(frame_representation_check(TFrame(2, {{0, 1, 0}})).holds);
  CHECK(frame_representation_check(
            TFrame(3, {{0, 3, 1}, {1, 2, 2}, {2, 7, 0}}))
            .holds);
}
