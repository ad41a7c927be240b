#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "condalg/duality.hpp"
#include "condalg/structure.hpp"

using namespace condalg;

namespace {

CondAlg chain3() {
  return CondAlg(FinBoolAlg(3),
                 {7, 7, 7, 7, 7, 7, 7, 7, 0, 7, 0, 7, 0, 7, 0, 7,
                  1, 1, 7, 7, 1, 1, 7, 7, 0, 1, 0, 7, 0, 1, 0, 7,
                  3, 3, 3, 3, 7, 7, 7, 7, 0, 3, 0, 3, 0, 7, 0, 7,
                  1, 1, 3, 3, 1, 1, 7, 7, 0, 1, 0, 3, 0, 1, 0, 7});
}

bool theta_compatible_naive(const CondAlg& A, UfSet Y) {
  const Elem N = A.base().size();
  const CongruenceRef th{Y};
  for (Elem a = 0; a < N; ++a)
    for (Elem b = 0; b < N; ++b)
      for (Elem c = 0; c < N; ++c)
        for (Elem d = 0; d < N; ++d)
          if (theta_related(th, a, b) && theta_related(th, c, d) &&
              !theta_related(th, A.cond(a, c), A.cond(b, d)))
            return false;
  return true;
}

}  // namespace

TEST_CASE("equivalences are canonicalized block lists") {
  const BoolEquiv E(3, {0b100, 0b011});
  REQUIRE(E.blocks().size() == 2);
  CHECK(E.blocks()[0] == 0b011);  // sorted by least member
  CHECK(E.block_of(2) == 0b100);
  CHECK(E.related(0, 1));
  CHECK(!E.related(0, 2));
  CHECK(E.saturation(0b001) == 0b011);
  CHECK(E.saturation(0b110) == 0b111);
  CHECK(BoolEquiv::identity(3).blocks().size() == 3);
  CHECK_THROWS_AS(BoolEquiv(3, {0b011}), InputError);          // no cover
  CHECK_THROWS_AS(BoolEquiv(3, {0b011, 0b110}), InputError);   // overlap
  CHECK_THROWS_AS(BoolEquiv(3, {0b111, 0}), InputError);       // empty block
  CHECK_THROWS_AS(BoolEquiv(2, {0b111}), InputError);          // range
}

TEST_CASE("subalgebra domains are validated") {
  const FinBoolAlg B(2);
  CHECK(SubalgRef(B, 0b1001).contains(0));
  CHECK(!SubalgRef(B, 0b1001).contains(1));
  CHECK_THROWS_AS(SubalgRef(B, 0b1011), InputError);  // complement missing
  CHECK_THROWS_AS(SubalgRef(B, 0b1000), InputError);  // zero missing
}

TEST_CASE("subalgebra counts follow the Bell numbers") {
  CHECK(enumerate_subalgebras(proj_algebra(0)).size() == 1);
  CHECK(enumerate_subalgebras(proj_algebra(1)).size() == 1);
  CHECK(enumerate_subalgebras(proj_algebra(2)).size() == 2);
  CHECK(enumerate_subalgebras(chain3()).size() == 5);
  CHECK(enumerate_subalgebras(glob_algebra(4)).size() == 15);
}

TEST_CASE("chain3 subalgebras and their conditional closure") {
  const CondAlg A = chain3();
  const std::vector<SubalgRef> subs = enumerate_subalgebras(A);
  REQUIRE(subs.size() == 5);
  CHECK(subs[0].domain() == 0x81);  // {0, 7}
  CHECK(subs[1].domain() == 0x99);  // {0, 3, 4, 7}
  CHECK(subs[2].domain() == 0xa5);  // {0, 2, 5, 7}
  CHECK(subs[3].domain() == 0xc3);  // {0, 1, 6, 7}
  CHECK(subs[4].domain() == 0xff);
  CHECK(cond_closed(A, subs[0]));
  CHECK(cond_closed(A, subs[1]));
  CHECK(!cond_closed(A, subs[2]));
  CHECK(cond_closed(A, subs[3]));
  CHECK(cond_closed(A, subs[4]));
}

TEST_CASE("trace equivalence and saturation form a Galois pair") {
  const CondAlg A = chain3();
  for (const SubalgRef& B : enumerate_subalgebras(A)) {
    const BoolEquiv E = trace_equivalence(A.base(), B);
    CHECK(saturated_subalgebra(A.base(), E) == B);
  }
  // Trace of the non-closed subalgebra pairs atoms 0 and 2.
  const BoolEquiv E = trace_equivalence(A.base(), SubalgRef(A.base(), 0xa5));
  CHECK(E.related(0, 2));
  CHECK(!E.related(0, 1));
}

TEST_CASE("the non-closed subalgebra fails the C-equivalence transfer") {
  const CondAlg A = chain3();
  const TFrame f = ultrafilter_frame(A);
  const Verdict v =
      is_c_equivalence(f, trace_equivalence(A.base(), SubalgRef(A.base(), 0xa5)));
  CHECK(!v.holds);
  REQUIRE(v.counterexample.size() == 4);
  CHECK(v.counterexample[0].value == 2);  // x
  CHECK(v.counterexample[1].value == 1);  // x'
  CHECK(v.counterexample[2].value == 0);  // y
  CHECK(v.counterexample[3].value == 2);  // Y
  for (ElemSet d : {0x81, 0x99, 0xc3, 0xff})
    CHECK(is_c_equivalence(f, trace_equivalence(A.base(),
                                                SubalgRef(A.base(), d)))
              .holds);
}

TEST_CASE("C-equivalence requires an upward-closed frame") {
  CHECK_THROWS_AS(
      is_c_equivalence(TFrame(2, {{0, 1, 0}}), BoolEquiv::identity(2)),
      ContractError);
}

TEST_CASE("preceq over trace equivalences matches the filter criterion") {
  const CondAlg A = chain3();
  const FinBoolAlg& B = A.base();
  for (const SubalgRef& S : enumerate_subalgebras(A)) {
    const BoolEquiv E = trace_equivalence(B, S);
    for (Elem f = 0; f < B.size(); ++f)
      for (Elem h = 0; h < B.size(); ++h) {
        bool criterion = true;
        for (Elem e = 0; e < B.size(); ++e)
          if (S.contains(e) && B.leq(h, e) && !B.leq(f, e)) criterion = false;
        CHECK(preceq_E(E, phi(B, f), phi(B, h)) == criterion);
      }
  }
}

TEST_CASE("subalgebra duality holds on the fixtures") {
  CHECK(subalgebra_duality_check(chain3()).holds);
  CHECK(subalgebra_duality_check(proj_algebra(2)).holds);
  CHECK(subalgebra_duality_check(glob_algebra(3)).holds);
  CHECK(subalgebra_duality_check(proj_algebra(0)).holds);
}

TEST_CASE("minimal witnesses on the chain3 frame") {
  const TFrame f = ultrafilter_frame(chain3());
  CHECK(minimal_witnesses(f, 1, 0) == std::vector<PointSet>{1});
  CHECK(minimal_witnesses(f, 1, 1) == std::vector<PointSet>{2});
  CHECK(minimal_witnesses(f, 2, 2) == std::vector<PointSet>{4});
  CHECK(minimal_witnesses(f, 0, 1).empty());
}

TEST_CASE("T-closed sets of the fixture frames") {
  const TFrame p = ultrafilter_frame(proj_algebra(2));
  for (PointSet Y = 0; Y < 4; ++Y) CHECK(is_t_closed(p, Y));
  const TFrame g = ultrafilter_frame(glob_algebra(2));
  CHECK(is_t_closed(g, 0));
  CHECK(!is_t_closed(g, 1));
  CHECK(!is_t_closed(g, 2));
  CHECK(is_t_closed(g, 3));
  const TFrame c = ultrafilter_frame(chain3());
  for (PointSet Y = 0; Y < 8; ++Y)
    CHECK(is_t_closed(c, Y) == (Y == 0 || Y == 1 || Y == 3 || Y == 7));
}

TEST_CASE("theta compatibility agrees with the quantifier definition") {
  for (const CondAlg& A :
       {proj_algebra(2), glob_algebra(2),
        CondAlg(FinBoolAlg(2),
                {3, 3, 3, 3, 0, 0, 0, 3, 0, 0, 1, 3, 0, 0, 0, 3})})
    for (UfSet Y = 0; Y < 4; ++Y)
      CHECK(theta_compatible(A, Y) == theta_compatible_naive(A, Y));
  const CondAlg c3 = chain3();
  for (UfSet Y = 0; Y < 8; ++Y)
    CHECK(theta_compatible(c3, Y) == (Y == 0 || Y == 1 || Y == 3 || Y == 7));
}

TEST_CASE("congruence duality holds on the fixtures") {
  CHECK(congruence_duality_check(chain3()).holds);
  CHECK(congruence_duality_check(proj_algebra(2)).holds);
  CHECK(congruence_duality_check(glob_algebra(2)).holds);
  CHECK(congruence_duality_check(glob_algebra(3)).holds);
  CHECK(congruence_duality_check(proj_algebra(0)).holds);
}

TEST_CASE("theta itself is the expected Boolean congruence") {
  const CongruenceRef th{0b01};
  CHECK(theta_related(th, 0, 2));   // differ outside Y only
  CHECK(!theta_related(th, 0, 1));  // differ at the Y ultrafilter
  CHECK(theta_related(CongruenceRef{0}, 0, 3));
}
