#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "condalg/duality.hpp"

using namespace condalg;

namespace {

CondAlg chain3() {
  return CondAlg(FinBoolAlg(3),
                 {7, 7, 7, 7, 7, 7, 7, 7, 0, 7, 0, 7, 0, 7, 0, 7,
                  1, 1, 7, 7, 1, 1, 7, 7, 0, 1, 0, 7, 0, 1, 0, 7,
                  3, 3, 3, 3, 7, 7, 7, 7, 0, 3, 0, 3, 0, 7, 0, 7,
                  1, 1, 3, 3, 1, 1, 7, 7, 0, 1, 0, 3, 0, 1, 0, 7});
}

}  // namespace

TEST_CASE("ultrafilter frame of proj2 is the eight-triple diagonal") {
  std::vector<Triple> want;
  for (int u = 0; u < 2; ++u)
    for (PointSet Z = 0; Z < 4; ++Z) want.push_back({u, Z, u});
  CHECK(ultrafilter_frame(proj_algebra(2)) == TFrame(2, want));
}

TEST_CASE("ultrafilter frame of glob2 is the membership frame") {
  const std::vector<Triple> want = {{0, 1, 0}, {0, 2, 1}, {0, 3, 0},
                                    {0, 3, 1}, {1, 1, 0}, {1, 2, 1},
                                    {1, 3, 0}, {1, 3, 1}};
  CHECK(ultrafilter_frame(glob_algebra(2)) == TFrame(2, want));
}

TEST_CASE("ultrafilter frame of chain3 matches the hand computation") {
  const std::vector<Triple> want = {
      {0, 1, 0}, {0, 3, 0}, {0, 5, 0}, {0, 7, 0}, {1, 1, 0}, {1, 2, 1},
      {1, 3, 0}, {1, 3, 1}, {1, 5, 0}, {1, 6, 1}, {1, 7, 0}, {1, 7, 1},
      {2, 1, 0}, {2, 2, 1}, {2, 3, 0}, {2, 3, 1}, {2, 4, 2}, {2, 5, 0},
      {2, 5, 2}, {2, 6, 1}, {2, 6, 2}, {2, 7, 0}, {2, 7, 1}, {2, 7, 2}};
  const TFrame f = ultrafilter_frame(chain3());
  CHECK(f == TFrame(3, want));
  CHECK(f.upward_closed());
}

TEST_CASE("ultrafilter frame requires the CA laws") {
  std::vector<Elem> t = proj_algebra(2).table();
  t[(3u << 2) | 1] = 3;
  CHECK_THROWS_AS(ultrafilter_frame(CondAlg(FinBoolAlg(2), std::move(t))),
                  ContractError);
}

TEST_CASE("canonical extensions of the fixtures are themselves") {
  CHECK(em(proj_algebra(2)) == proj_algebra(2));
  CHECK(em(glob_algebra(2)) == glob_algebra(2));
  CHECK(em(glob_algebra(3)) == glob_algebra(3));
}

TEST_CASE("representation embeds each fixture") {
  CHECK(representation_check(proj_algebra(2)).holds);
  CHECK(representation_check(glob_algebra(3)).holds);
  CHECK(representation_check(chain3()).holds);
  CHECK(representation_check(proj_algebra(0)).holds);
  CHECK(representation_check(
            CondAlg(FinBoolAlg(2),
                    {3, 3, 3, 3, 0, 0, 0, 3, 0, 0, 1, 3, 0, 0, 0, 3}))
            .holds);
}

TEST_CASE("algebra roundtrip holds on the fixtures") {
  CHECK(co_es_roundtrip(proj_algebra(2)).holds);
  CHECK(co_es_roundtrip(glob_algebra(2)).holds);
  CHECK(co_es_roundtrip(chain3()).holds);
}

TEST_CASE("frame roundtrip holds on upward-closed frames") {
  CHECK(es_co_roundtrip(ultrafilter_frame(glob_algebra(2))).holds);
  CHECK(es_co_roundtrip(ultrafilter_frame(chain3())).holds);
  CHECK(es_co_roundtrip(upward_closure(TFrame(3, {{0, 1, 2}, {2, 2, 0}})))
            .holds);
  CHECK(es_co_roundtrip(TFrame(1, {})).holds);
}

TEST_CASE("all Boolean homs are generated from point maps") {
  const CondAlg P = proj_algebra(2);
  const CondAlg G = glob_algebra(2);
  CHECK(all_boolean_homs(P, P).size() == 4);
  CHECK(all_boolean_homs(P, glob_algebra(3)).size() == 8);
  for (const AlgHom& h : all_boolean_homs(P, P)) {
    CHECK(h.apply(0) == 0);
    CHECK(h.apply(3) == 3);
  }
  // No hom maps the one-element algebra into a nontrivial one, and exactly
  // one collapses the other way.
  CHECK(all_boolean_homs(glob_algebra(0), G).size() == 0);
  CHECK(all_boolean_homs(G, glob_algebra(0)).size() == 1);
}

TEST_CASE("hom duality: conditional homs and conditional functions match") {
  const CondAlg P = proj_algebra(2);
  const CondAlg G = glob_algebra(2);
  // Every Boolean hom into a projection target preserves the conditional,
  // while glob targets also exercise the negative branch.
  for (const AlgHom& h : all_boolean_homs(P, P)) CHECK(hom_duality_check(h).holds);
  for (const AlgHom& h : all_boolean_homs(G, G)) CHECK(hom_duality_check(h).holds);
  for (const AlgHom& h : all_boolean_homs(G, P)) CHECK(hom_duality_check(h).holds);
  for (const AlgHom& h : all_boolean_homs(chain3(), G))
    CHECK(hom_duality_check(h).holds);
}

TEST_CASE("dual of the identity hom is the identity point map") {
  const CondAlg G = glob_algebra(2);
  const AlgHom id(G, G, {0, 1, 2, 3});
  const FrameMap f = dual_map(id);
  CHECK(f.apply(0) == 0);
  CHECK(f.apply(1) == 1);
  CHECK(conditional_function_check(f).holds);
  const AlgHom back = dual_hom(f);
  for (Elem a = 0; a < 4; ++a) CHECK(back.apply(a) == a);
}

TEST_CASE("hom construction validates Boolean structure") {
  const CondAlg G = glob_algebra(2);
  CHECK_THROWS_AS(AlgHom(G, G, {0, 1, 2, 2}), InputError);  // top not fixed
  CHECK_THROWS_AS(AlgHom(G, G, {0, 1, 1, 3}), InputError);  // meet broken
  CHECK_THROWS_AS(AlgHom(G, G, {0, 1, 2}), InputError);     // wrong size
}
