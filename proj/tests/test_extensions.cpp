#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "condalg/duality.hpp"
#include "condalg/extensions.hpp"

using namespace condalg;

namespace {

CondAlg chain3() {
  return CondAlg(FinBoolAlg(3),
                 {7, 7, 7, 7, 7, 7, 7, 7, 0, 7, 0, 7, 0, 7, 0, 7,
                  1, 1, 7, 7, 1, 1, 7, 7, 0, 1, 0, 7, 0, 1, 0, 7,
                  3, 3, 3, 3, 7, 7, 7, 7, 0, 3, 0, 3, 0, 7, 0, 7,
                  1, 1, 3, 3, 1, 1, 7, 7, 0, 1, 0, 3, 0, 1, 0, 7});
}

void expect_transport(const CondAlg& A) {
  const CondAlg E = em(A);
  const int m = A.base().ultrafilter_count();
  for (UfSet U = 0; U < (UfSet{1} << m); ++U)
    for (UfSet V = 0; V < (UfSet{1} << m); ++V) {
      const UfSet t = E.cond(static_cast<Elem>(U), static_cast<Elem>(V));
      CHECK(pi_extend(A, U, V) == t);
      CHECK(sigma_extend(A, U, V) == t);
    }
}

}  // namespace

TEST_CASE("both extensions equal the transported operator") {
  expect_transport(proj_algebra(2));
  expect_transport(glob_algebra(2));
  expect_transport(glob_algebra(3));
  expect_transport(chain3());
  expect_transport(proj_algebra(0));
  expect_transport(CondAlg(FinBoolAlg(2),
                           {3, 3, 3, 3, 0, 0, 0, 3, 0, 0, 1, 3, 0, 0, 0, 3}));
}

TEST_CASE("extensions restrict to the original operator on phi images") {
  const CondAlg A = chain3();
  const FinBoolAlg& B = A.base();
  for (Elem a = 0; a < B.size(); ++a)
    for (Elem b = 0; b < B.size(); ++b) {
      CHECK(pi_extend(A, phi(B, a), phi(B, b)) == phi(B, A.cond(a, b)));
      CHECK(sigma_extend(A, phi(B, a), phi(B, b)) == phi(B, A.cond(a, b)));
    }
}

TEST_CASE("the conditional is smooth on finite algebras") {
  CHECK(smoothness_check(proj_algebra(2)).holds);
  CHECK(smoothness_check(glob_algebra(3)).holds);
  CHECK(smoothness_check(chain3()).holds);
}

TEST_CASE("extension arguments are range checked") {
  const CondAlg A = proj_algebra(2);
  CHECK_THROWS_AS(pi_extend(A, 4, 0), InputError);
  CHECK_THROWS_AS(sigma_extend(A, 0, 4), InputError);
}

TEST_CASE("G relation members carry valid witnesses") {
  const CondAlg A = chain3();
  for (int u = 0; u < 3; ++u) {
    const std::vector<GTriple> g = g_relation(A, u);
    CHECK(!g.empty());
    for (const GTriple& t : g) {
      CHECK(t.u == u);
      CHECK(phi(A.base(), t.filter_gen) == t.Y);
      CHECK((t.Z ^ phi(A.base(), t.ideal_gen)) == 7);
    }
  }
  CHECK_THROWS_AS(g_relation(A, 3), InputError);
}
