#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "condalg/duality.hpp"
#include "condalg/multimodal.hpp"

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

TEST_CASE("translation is a two-sided identity on the fixtures") {
  for (const CondAlg& A :
       {proj_algebra(2), glob_algebra(3), chain3(), proj_algebra(0)}) {
    const MMAlg m = to_mma(A);
    CHECK(m.full());
    CHECK(to_conditional(m) == A);
    CHECK(check_mma_axioms(m).holds);
  }
}

TEST_CASE("construction validates the index subalgebra") {
  const FinBoolAlg B(2);
  const std::vector<std::vector<Elem>> boxes(4, {3, 3, 3, 3});
  CHECK_THROWS_AS(MMAlg(B, 0b1010, boxes), InputError);  // missing 0
  CHECK_THROWS_AS(MMAlg(B, 0b0011, boxes), InputError);  // missing top
  CHECK_THROWS_AS(MMAlg(B, 0b1011, boxes), InputError);  // not complement closed
  CHECK_THROWS_AS(MMAlg(B, 0b1001, {{3, 3, 3, 3}}), InputError);  // shape
  const MMAlg m(B, 0b1001, boxes);
  CHECK(!m.full());
  CHECK(m.has_index(0));
  CHECK(m.has_index(3));
  CHECK(!m.has_index(1));
  CHECK_THROWS_AS(m.box(1, 0), InputError);
  CHECK_THROWS_AS(to_conditional(m), InputError);
}

TEST_CASE("modal axiom failures are caught with least witnesses") {
  const FinBoolAlg B(1);
  // box_1 misses the unit law.
  const Verdict m1 = check_mma_axioms(MMAlg(B, 0b11, {{0, 1}, {1, 0}}));
  CHECK(!m1.holds);
  REQUIRE(m1.counterexample.size() == 1);
  CHECK(m1.counterexample[0].value == 1);
  // box_0 keeps the unit but not meets: box_0(1 & 2) = 0 below 1 & 1.
  const FinBoolAlg B2(2);
  const Verdict m2 = check_mma_axioms(MMAlg(
      B2, 0b1111,
      {{0, 1, 1, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}));
  CHECK(!m2.holds);
  REQUIRE(m2.counterexample.size() == 3);
  CHECK(m2.counterexample[0].value == 0);
  CHECK(m2.counterexample[1].value == 1);
  CHECK(m2.counterexample[2].value == 2);
  // Antitonicity breaks: box_1 above box_0.
  const Verdict m3 = check_mma_axioms(MMAlg(B, 0b11, {{0, 1}, {1, 1}}));
  CHECK(!m3.holds);
  REQUIRE(m3.counterexample.size() == 3);
  CHECK(m3.counterexample[0].value == 0);
  CHECK(m3.counterexample[1].value == 1);
  CHECK(m3.counterexample[2].value == 0);
}

TEST_CASE("Q relation of glob boxes is constant phi") {
  const MMAlg m = to_mma(glob_algebra(2));
  for (Elem b = 0; b < 4; ++b) {
    const std::vector<UfSet> q = q_relation(m, b);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == phi(m.base(), b));
    CHECK(q[1] == phi(m.base(), b));
  }
}

TEST_CASE("box of the Q relation matches the canonical extension") {
  for (const CondAlg& A : {proj_algebra(2), glob_algebra(2), chain3()}) {
    const MMAlg m = to_mma(A);
    const CondAlg E = em(A);
    const int n = A.base().ultrafilter_count();
    for (Elem a = 0; a < A.base().size(); ++a)
      for (UfSet V = 0; V < (UfSet{1} << n); ++V)
        CHECK(q_box(m, a, V) ==
              E.cond(static_cast<Elem>(phi(A.base(), a)),
                     static_cast<Elem>(V)));
  }
}

TEST_CASE("canonical extension of an MMA is an MMA") {
  const MMAlg m = to_mma(chain3());
  const MMAlg em_m = mma_canonical_extension(m);
  CHECK(em_m.base().atoms() == 3);
  CHECK(check_mma_axioms(em_m).holds);
  for (Elem a = 0; a < 8; ++a) CHECK(em_m.has_index(phi(m.base(), a)));
}

TEST_CASE("box transfer holds on the fixtures") {
  CHECK(qa_equals_box_phi_check(proj_algebra(2)).holds);
  CHECK(qa_equals_box_phi_check(glob_algebra(2)).holds);
  CHECK(qa_equals_box_phi_check(chain3()).holds);
  CHECK(qa_equals_box_phi_check(proj_algebra(0)).holds);
}
