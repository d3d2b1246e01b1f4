#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "zsym/io.hpp"
#include "zsym/symspace.hpp"

using namespace zsym;

namespace {

GroupElt named(const AbGroup& g, const std::string& s) {
  return *g.element_by_name(s);
}

Grading so3_pair() {
  // so(3) with the (2, 1) elementary split: the round 2-sphere pair
  AbGroup k = AbGroup::klein();
  Grading base = elementary(3, k, {named(k, "e"), named(k, "e"), named(k, "a")});
  return restrict_K(base, InvolutionSpec(Mat::identity(3), InvSymmetry::symmetric));
}

Grading n7_3_grading() {
  std::ifstream is(std::string(ZSYM_SOURCE_DIR) + "/data/n7_3.json");
  REQUIRE(is.good());
  nlohmann::json j;
  is >> j;
  auto sc = std::make_shared<ScLie>(sclie_from_json(j));
  AbGroup z2 = AbGroup::cyclic(2);
  Grading g;
  g.group = z2;
  g.kind = CarrierKind::lie_sc;
  g.sc = sc;
  g.carrier = Subspace::full(7);
  auto unit = [](int k) {
    Vec v(7);
    v[k] = Scalar(1);
    return v;
  };
  g.components.emplace(z2.identity(), Subspace::span(7, {unit(1), unit(3), unit(5)}));
  g.components.emplace(GroupElt{{1}},
                       Subspace::span(7, {unit(0), unit(2), unit(4), unit(6)}));
  return g;
}

}  // namespace

TEST_CASE("fixed subalgebra equals the identity component") {
  for (const Grading& g :
       {so3_pair(), psi_grading(WitnessFamily::so_even, 2, 1),
        class1_sl(tensor(trivial_grading(2, AbGroup::klein()), pauli()))})
    CHECK(fixed_subalgebra(g) == g.at(g.group.identity()));
}

TEST_CASE("symmetric pair so(3)/so(2)") {
  LocalSymSpace s = build_space(so3_pair());
  CHECK(s.h.dim() == 1);
  CHECK(s.m.dim() == 2);
  CHECK(is_symmetric(s));
  CHECK(torsion_is_zero(s));
  CHECK(s.effective);  // so(3) is simple

  // nonzero curvature: R(x, y) acts on the 2-dimensional m
  Vec x = s.m.basis_row(0), y = s.m.basis_row(1);
  CHECK(!curvature_pair(s, x, y).is_zero());
  // torsion of the second connection also vanishes here
  auto t2 = second_connection_torsion(s);
  for (const auto& row : t2)
    for (const auto& v : row) CHECK(vec_is_zero(v));
}

TEST_CASE("non-symmetric fine case of so(4)") {
  Grading g = psi_grading(WitnessFamily::so_even, 2, 1);
  LocalSymSpace s = build_space(g);
  CHECK(s.h.dim() == 1);
  CHECK(s.m.dim() == 5);
  CHECK(!is_symmetric(s));
  CHECK(!torsion_is_zero(s));
  // reductivity was enforced during construction; spot-check one bracket
  Vec hb = s.h.basis_row(0);
  for (int j = 0; j < s.m.dim(); ++j) {
    Vec br = bracket(Mat::unflatten(hb, 4, 4),
                     Mat::unflatten(s.m.basis_row(j), 4, 4))
                 .flatten();
    CHECK(s.m.contains(br));
  }
  // second connection is torsion-free even though the first is not
  auto t2 = second_connection_torsion(s);
  for (const auto& row : t2)
    for (const auto& v : row) CHECK(vec_is_zero(v));
  // so(4) is only semisimple, but no nonzero ideal fits inside the line h
  CHECK(s.effective);
}

TEST_CASE("torsion table matches pairwise torsion") {
  Grading g = psi_grading(WitnessFamily::so_even, 2, 1);
  LocalSymSpace s = build_space(g);
  for (int i = 0; i < s.m.dim(); ++i)
    for (int j = 0; j < s.m.dim(); ++j) {
      Vec t = torsion_pair(s, s.m.basis_row(i), s.m.basis_row(j));
      Vec expect(g.ambient());
      for (int k = 0; k < s.m.dim(); ++k)
        for (int l = 0; l < g.ambient(); ++l)
          expect[l] += s.torsion[i][j][k] * s.m.basis().at(k, l);
      CHECK(t == expect);
    }
}

TEST_CASE("projection splits along h and m") {
  LocalSymSpace s = build_space(so3_pair());
  CHECK(vec_is_zero(m_project(s, s.h.basis_row(0))));
  Vec x = s.m.basis_row(1);
  CHECK(m_project(s, x) == x);
  // mixed vector
  Vec mixed(9);
  for (int l = 0; l < 9; ++l)
    mixed[l] = s.h.basis().at(0, l) + s.m.basis().at(0, l);
  CHECK(m_project(s, mixed) == s.m.basis_row(0));
  CHECK_THROWS_AS(torsion_pair(s, s.h.basis_row(0), x), std::invalid_argument);
}

TEST_CASE("degenerate direction: class II with trivial odd block") {
  // sl(2)/so(2): classical symmetric pair, support inside a Z2
  Grading g = class2_sl(2, {0, 0},
                        InvolutionSpec(Mat::identity(2), InvSymmetry::symmetric));
  LocalSymSpace s = build_space(g);
  CHECK(s.h.dim() == 1);
  CHECK(s.m.dim() == 2);
  CHECK(is_symmetric(s));
  CHECK(torsion_is_zero(s));
  CHECK(s.effective);
}

TEST_CASE("nilpotent fixture local space") {
  LocalSymSpace s = build_space(n7_3_grading());
  CHECK(s.h.dim() == 3);
  CHECK(s.m.dim() == 4);
  CHECK(is_symmetric(s));  // a genuine Z2-grading
  CHECK(torsion_is_zero(s));
  // no ideal of n_7^3 fits inside the even part
  CHECK(s.effective);
}

TEST_CASE("connection document") {
  LocalSymSpace s = build_space(so3_pair());
  nlohmann::json doc = connection_to_json(s);
  CHECK(doc["dim_h"] == 1);
  CHECK(doc["dim_m"] == 2);
  CHECK(doc["symmetric"] == true);
  CHECK(doc["torsion"].size() == 2);
  CHECK(doc["curvature"].size() == 1);
  // scalar strings parse back
  for (const auto& row : doc["torsion"])
    for (const auto& cell : row)
      for (const auto& v : cell)
        CHECK(Scalar::parse(v.get<std::string>()) == Scalar(0));
}
