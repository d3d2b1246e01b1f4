#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsym/groups.hpp"

using namespace zsym;

TEST_CASE("klein group structure") {
  AbGroup g = AbGroup::klein();
  CHECK(g.order() == 4);
  CHECK(g.exponent() == 2);
  CHECK(g.elements().size() == 4);

  GroupElt e = *g.element_by_name("e");
  GroupElt a = *g.element_by_name("a");
  GroupElt b = *g.element_by_name("b");
  GroupElt c = *g.element_by_name("c");
  CHECK(e == g.identity());
  CHECK(g.mul(a, b) == c);
  CHECK(g.mul(b, c) == a);
  CHECK(g.mul(a, c) == b);
  CHECK(g.mul(a, a) == e);
  CHECK(g.inv(a) == a);  // exponent 2: everything is its own inverse

  for (const auto& x : g.elements()) CHECK(*g.element_by_name(g.name(x)) == x);
  CHECK(!g.element_by_name("z").has_value());
}

TEST_CASE("cyclic groups") {
  AbGroup z4 = AbGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.exponent() == 4);
  GroupElt one{{1}};
  CHECK(z4.mul(one, GroupElt{{3}}) == z4.identity());
  CHECK(z4.inv(one) == GroupElt{{3}});
  CHECK(!z4.valid(GroupElt{{4}}));
  CHECK(!z4.valid(GroupElt{{0, 0}}));
}

TEST_CASE("characters of the klein group") {
  AbGroup g = AbGroup::klein();
  auto chars = characters(g);
  CHECK(chars.size() == 4);
  // values are +-1 and the characters are multiplicative
  for (const auto& chi : chars)
    for (const auto& x : g.elements()) {
      Scalar v = chi(g, x);
      CHECK((v == Scalar(1) || v == Scalar(-1)));
      for (const auto& y : g.elements())
        CHECK(chi(g, g.mul(x, y)) == chi(g, x) * chi(g, y));
    }
  // orthogonality: sum_x chi(x) conj(psi(x)) = |G| delta
  for (const auto& chi : chars)
    for (const auto& psi : chars) {
      Scalar acc;
      for (const auto& x : g.elements()) acc += chi(g, x) * psi(g, x).conj();
      CHECK(acc == (chi == psi ? Scalar(4) : Scalar(0)));
    }
}

TEST_CASE("characters of Z4 take Gaussian values") {
  AbGroup z4 = AbGroup::cyclic(4);
  auto chars = characters(z4);
  CHECK(chars.size() == 4);
  bool found_i = false;
  for (const auto& chi : chars)
    if (chi(z4, GroupElt{{1}}) == Scalar::i()) found_i = true;
  CHECK(found_i);
  // exponent not dividing 4: no Gaussian-rational character table
  CHECK_THROWS_AS(characters(AbGroup::cyclic(3)), std::domain_error);
  CHECK_THROWS_AS(characters(AbGroup({2, 8})), std::domain_error);
}

TEST_CASE("automorphisms of the klein group") {
  AbGroup g = AbGroup::klein();
  auto auts = automorphisms(g);
  CHECK(auts.size() == 6);  // GL(2, F_2)
  for (const auto& w : auts) {
    // homomorphism and bijectivity spot checks
    for (const auto& x : g.elements())
      for (const auto& y : g.elements())
        CHECK(w.apply(g, g.mul(x, y)) == g.mul(w.apply(g, x), w.apply(g, y)));
    GroupAut winv = w.inverse(g);
    for (const auto& x : g.elements())
      CHECK(winv.apply(g, w.apply(g, x)) == x);
  }
  GroupAut id = GroupAut::identity(g);
  for (const auto& x : g.elements()) CHECK(id.apply(g, x) == x);
}

TEST_CASE("generated subgroups") {
  AbGroup g = AbGroup::klein();
  GroupElt a = *g.element_by_name("a");
  GroupElt b = *g.element_by_name("b");
  GroupElt c = *g.element_by_name("c");
  CHECK(subgroup_generated(g, {}).size() == 1);
  CHECK(subgroup_generated(g, {a}).size() == 2);
  CHECK(subgroup_generated(g, {a, b}).size() == 4);
  CHECK(subgroup_generated(g, {b, c}).size() == 4);  // bc = a
  AbGroup z4 = AbGroup::cyclic(4);
  CHECK(subgroup_generated(z4, {GroupElt{{2}}}).size() == 2);
  CHECK(subgroup_generated(z4, {GroupElt{{3}}}).size() == 4);
}
