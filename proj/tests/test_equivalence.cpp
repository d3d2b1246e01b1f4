#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsym/equivalence.hpp"

using namespace zsym;

namespace {

StructureSignature isotropy_sig(const Grading& g) {
  return signature(MatLie{g.n, g.at(g.group.identity())});
}

}  // namespace

TEST_CASE("psi involution catalogue") {
  // so family, m = 2: Psi_1 is the identity of M_4
  CHECK(psi_involution(WitnessFamily::so_even, 2, 1).phi == Mat::identity(4));
  CHECK(psi_involution(WitnessFamily::so_even, 2, 2).phi ==
        kron(Mat::from_rows({{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}}),
             Mat::identity(2)));
  // sp family: skew forms built from the S block
  InvolutionSpec sp1 = psi_involution(WitnessFamily::sp, 2, 1);
  CHECK(sp1.phi == kron(Mat::identity(2), Mat::skew_pair(2)));
  CHECK(sp1.symmetry == InvSymmetry::skew);
  InvolutionSpec sp4 = psi_involution(WitnessFamily::sp, 3, 4);
  CHECK(sp4.phi.transpose() == sp4.phi.scaled(Scalar(-1)));
  CHECK_THROWS_AS(psi_involution(WitnessFamily::so_even, 2, 5), std::invalid_argument);
  // Psi_4 in the so family needs the even-size S block
  CHECK_THROWS_AS(psi_involution(WitnessFamily::so_even, 3, 4), std::invalid_argument);
}

TEST_CASE("psi gradings") {
  Grading g = psi_grading(WitnessFamily::so_even, 2, 1);
  CHECK(g.carrier.dim() == 6);
  AbGroup k = g.group;
  CHECK(g.at(k.identity()).dim() == 1);
  CHECK(check_grading(g).ok());
  Grading g4 = psi_grading(WitnessFamily::so_even, 2, 4);
  CHECK(g4.at(k.identity()).dim() == 3);  // sp(2) fixed part
  CHECK(check_grading(g4).ok());
}

TEST_CASE("canonical witnesses certify the stated equivalences") {
  for (int m : {1, 2, 3}) {
    Grading g1 = psi_grading(WitnessFamily::so_even, m, 1);
    Grading g2 = psi_grading(WitnessFamily::so_even, m, 2);
    Grading g3 = psi_grading(WitnessFamily::so_even, m, 3);
    auto ws = canonical_witnesses(WitnessFamily::so_even, m);
    REQUIRE(ws.size() == 2);
    CHECK(verify_equiv(g1, g2, ws[0]));
    CHECK(verify_equiv(g1, g3, ws[1]));
    // crossed witnesses fail
    CHECK(!verify_equiv(g1, g3, ws[0]));
    CHECK(!verify_equiv(g1, g2, ws[1]));
    // inverse witness runs the equivalence backwards
    CHECK(verify_equiv(g2, g1, ws[0].inverse(g1.group)));
    CHECK(verify_equiv(g3, g1, ws[1].inverse(g1.group)));
  }
  for (int m : {2, 4}) {
    Grading g1 = psi_grading(WitnessFamily::sp, m, 1);
    auto ws = canonical_witnesses(WitnessFamily::sp, m);
    CHECK(verify_equiv(g1, psi_grading(WitnessFamily::sp, m, 2), ws[0]));
    CHECK(verify_equiv(g1, psi_grading(WitnessFamily::sp, m, 3), ws[1]));
  }
}

TEST_CASE("identity witness fixes every grading") {
  AbGroup k = AbGroup::klein();
  for (const Grading& g : {psi_grading(WitnessFamily::so_even, 2, 1),
                           psi_grading(WitnessFamily::sp, 2, 4)}) {
    Witness id{Mat::identity(g.n), GroupAut::identity(k)};
    CHECK(verify_equiv(g, g, id));
  }
}

TEST_CASE("the fourth grading is signature-distinct") {
  for (int m : {2, 4}) {
    Grading so1 = psi_grading(WitnessFamily::so_even, m, 1);
    Grading so4 = psi_grading(WitnessFamily::so_even, m, 4);
    StructureSignature s1 = isotropy_sig(so1);  // so(m)
    StructureSignature s4 = isotropy_sig(so4);  // sp(m)
    CHECK(!(s1 == s4));
    CHECK(s1.forms != s4.forms);
    // no catalogue witness maps one onto the other
    for (const auto& w : canonical_witnesses(WitnessFamily::so_even, m))
      CHECK(!verify_equiv(so1, so4, w));

    Grading sp1 = psi_grading(WitnessFamily::sp, m, 1);
    Grading sp4 = psi_grading(WitnessFamily::sp, m, 4);
    CHECK(!(isotropy_sig(sp1) == isotropy_sig(sp4)));
  }
}

TEST_CASE("apply moves the carrier") {
  Grading g = psi_grading(WitnessFamily::so_even, 2, 1);
  Mat d = Mat::identity(4);
  d.at(0, 0) = Scalar(2);  // not orthogonal: conjugation leaves K(I)
  Grading moved = apply(Witness{d, GroupAut::identity(g.group)}, g);
  CHECK(moved.carrier != g.carrier);
  CHECK(!verify_equiv(g, g, Witness{d, GroupAut::identity(g.group)}));
  // the witnesses relate gradings with genuinely different K carriers
  Grading g2 = psi_grading(WitnessFamily::so_even, 2, 2);
  CHECK(g2.carrier != g.carrier);
}

TEST_CASE("conjugation with trivial relabeling") {
  // X_b normalizes every pauli component, so it fixes the grading
  Grading g = pauli();
  Witness w{pauli_matrix("b"), GroupAut::identity(g.group)};
  CHECK(verify_equiv(g, g, w));
  // a generic conjugation does not
  Mat sh = Mat::identity(2);
  sh.at(0, 1) = Scalar(1);
  CHECK(!verify_equiv(g, g, Witness{sh, GroupAut::identity(g.group)}));
}
