#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>

#include "zsym/gradings.hpp"
#include "zsym/io.hpp"

using namespace zsym;

namespace {

GroupElt named(const AbGroup& g, const std::string& s) {
  return *g.element_by_name(s);
}

ScLie load_n7_3() {
  std::ifstream is(std::string(ZSYM_SOURCE_DIR) + "/data/n7_3.json");
  REQUIRE(is.good());
  nlohmann::json j;
  is >> j;
  return sclie_from_json(j);
}

Grading n7_3_grading(bool perturbed) {
  auto sc = std::make_shared<ScLie>(load_n7_3());
  AbGroup z2 = AbGroup::cyclic(2);
  Grading g;
  g.group = z2;
  g.kind = CarrierKind::lie_sc;
  g.sc = sc;
  g.n = 0;
  g.carrier = Subspace::full(7);
  auto unit = [](int k) {
    Vec v(7);
    v[k] = Scalar(1);
    return v;
  };
  // even part X2, X4, X6; odd part X1, X3, X5, X7 (1-indexed)
  std::vector<Vec> even = {unit(1), unit(3), unit(5)};
  std::vector<Vec> odd = {unit(0), unit(2), unit(4), unit(6)};
  if (perturbed) std::swap(even[2], odd[3]);  // trade X6 for X7
  g.components.emplace(z2.identity(), Subspace::span(7, even));
  g.components.emplace(GroupElt{{1}}, Subspace::span(7, odd));
  return g;
}

std::mt19937 rng(424243);

}  // namespace

TEST_CASE("elementary grading of M_2") {
  AbGroup k = AbGroup::klein();
  Grading g = elementary(2, k, {named(k, "e"), named(k, "a")});
  CHECK(g.at(named(k, "e")).dim() == 2);  // diagonal
  CHECK(g.at(named(k, "a")).dim() == 2);  // both off-diagonal units
  CHECK(g.at(named(k, "b")).dim() == 0);
  CHECK(g.at(named(k, "a")).contains(Mat::unit(2, 0, 1).flatten()));
  CHECK(g.at(named(k, "a")).contains(Mat::unit(2, 1, 0).flatten()));
  auto rep = check_grading(g);
  CHECK(rep.ok());
  CHECK(!rep.support_generates);  // support {e, a} only
  CHECK_THROWS_AS(elementary(3, k, {named(k, "e")}), std::invalid_argument);
}

TEST_CASE("pauli grading is fine") {
  Grading g = pauli();
  for (const auto& p : g.group.elements()) CHECK(g.at(p).dim() == 1);
  auto rep = check_grading(g);
  CHECK(rep.ok());
  CHECK(rep.support_generates);
  // degree bookkeeping: X_a X_b spans the c component
  Mat prod = pauli_matrix("a") * pauli_matrix("b");
  CHECK(g.at(named(g.group, "c")).contains(prod.flatten()));
  CHECK(pauli_matrix("b") * pauli_matrix("c") ==
        pauli_matrix("c") * pauli_matrix("b").scaled(Scalar(-1)));
  CHECK_THROWS_AS(pauli_matrix("x"), std::invalid_argument);
}

TEST_CASE("trivial grading") {
  Grading g = trivial_grading(3, AbGroup::klein());
  CHECK(g.at(g.group.identity()).dim() == 9);
  CHECK(check_grading(g).ok());
}

TEST_CASE("tensor grading") {
  AbGroup k = AbGroup::klein();
  Grading g = tensor(trivial_grading(3, k), pauli());
  CHECK(g.n == 6);
  for (const auto& p : k.elements()) CHECK(g.at(p).dim() == 9);
  CHECK(check_grading(g).ok());
  // the fine factor is the outer block structure: I_2 ox U for the identity
  Mat u(3, 3);
  u.at(0, 2) = Scalar(5);
  u.at(1, 1) = Scalar::i();
  CHECK(g.at(k.identity()).contains(kron(Mat::identity(2), u).flatten()));
  CHECK(g.at(named(k, "b")).contains(kron(pauli_matrix("b"), u).flatten()));
  // supports must meet only at the identity
  CHECK_THROWS_AS(tensor(pauli(), pauli()), std::invalid_argument);
}

TEST_CASE("restrict_K") {
  AbGroup k = AbGroup::klein();
  Grading base = tensor(trivial_grading(2, k), pauli());
  Grading g = restrict_K(base, InvolutionSpec(Mat::identity(4), InvSymmetry::symmetric));
  CHECK(g.kind == CarrierKind::lie_matrix);
  CHECK(g.carrier.dim() == 6);  // so(4)
  // hand count: skew elements among X_p ox A
  CHECK(g.at(named(k, "e")).dim() == 1);
  CHECK(g.at(named(k, "a")).dim() == 1);
  CHECK(g.at(named(k, "b")).dim() == 1);
  CHECK(g.at(named(k, "c")).dim() == 3);
  CHECK(check_grading(g).ok());

  // a symmetric Phi that is not graded for the elementary (e, a) grading
  Mat bad(2, 2);
  bad.at(0, 0) = Scalar(1);
  bad.at(0, 1) = Scalar(1);
  bad.at(1, 0) = Scalar(1);
  Grading elem = elementary(2, k, {named(k, "e"), named(k, "a")});
  CHECK_THROWS_AS(restrict_K(elem, InvolutionSpec(bad, InvSymmetry::symmetric)),
                  std::invalid_argument);
}

TEST_CASE("class I gradings of sl(n)") {
  AbGroup k = AbGroup::klein();
  Grading g = class1_sl(elementary(2, k, {named(k, "e"), named(k, "a")}));
  CHECK(g.carrier.dim() == 3);
  CHECK(g.at(named(k, "e")).dim() == 1);  // traceless diagonal
  CHECK(g.at(named(k, "a")).dim() == 2);
  CHECK(check_grading(g).ok());

  Grading fine = class1_sl(tensor(trivial_grading(2, k), pauli()));
  CHECK(fine.carrier.dim() == 15);
  CHECK(fine.at(named(k, "e")).dim() == 3);
  CHECK(fine.at(named(k, "a")).dim() == 4);
  CHECK(check_grading(fine).ok());
}

TEST_CASE("class II gradings of sl(n)") {
  AbGroup k = AbGroup::klein();
  // sl(4), Phi = I, parts (2, 2): dims derived by hand from the K/H split
  Grading g = class2_sl(4, {0, 0, 1, 1},
                        InvolutionSpec(Mat::identity(4), InvSymmetry::symmetric));
  CHECK(g.at(named(k, "e")).dim() == 2);  // so(2) + so(2)
  CHECK(g.at(named(k, "a")).dim() == 4);  // [[0, W], [-W^t, 0]]
  CHECK(g.at(named(k, "b")).dim() == 5);  // symmetric block-diagonal, traceless
  CHECK(g.at(named(k, "c")).dim() == 4);  // [[0, W], [W^t, 0]]
  CHECK(check_grading(g).ok());

  // an involution that does not respect the Z2 split
  Mat anti(4, 4);
  for (int i = 0; i < 4; ++i) anti.at(i, 3 - i) = Scalar(1);
  CHECK_THROWS_AS(class2_sl(4, {0, 0, 0, 1},
                            InvolutionSpec(anti, InvSymmetry::symmetric)),
                  std::invalid_argument);
}

TEST_CASE("dual eigenspace round trip") {
  AbGroup k = AbGroup::klein();
  std::vector<Grading> cases = {
      pauli(),
      elementary(3, k, {named(k, "e"), named(k, "a"), named(k, "b")}),
      restrict_K(tensor(trivial_grading(2, k), pauli()),
                 InvolutionSpec(Mat::identity(4), InvSymmetry::symmetric)),
      class2_sl(3, {0, 0, 1},
                InvolutionSpec(Mat::identity(3), InvSymmetry::symmetric)),
  };
  for (const auto& g : cases) {
    Grading eig = dual_eigenspaces(g);
    for (const auto& p : g.group.elements()) CHECK(eig.at(p) == g.at(p));
  }
  // exponent 4 groups exercise genuinely Gaussian character values
  AbGroup z4 = AbGroup::cyclic(4);
  Grading g4 = elementary(2, z4, {GroupElt{{0}}, GroupElt{{1}}});
  CHECK(check_grading(g4).ok());
  Grading eig4 = dual_eigenspaces(g4);
  for (const auto& p : z4.elements()) CHECK(eig4.at(p) == g4.at(p));
}

TEST_CASE("checker rejects random invalid splits") {
  // shuffle one basis vector between components; compatibility then breaks
  // almost surely
  Grading base = restrict_K(tensor(trivial_grading(2, AbGroup::klein()), pauli()),
                            InvolutionSpec(Mat::identity(4), InvSymmetry::symmetric));
  auto elems = base.group.elements();
  int rejected = 0, trials = 200;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> pick(0, 3);
    GroupElt p = elems[pick(rng)], q = elems[pick(rng)];
    while (q == p || base.at(p).dim() == 0) {
      p = elems[pick(rng)];
      q = elems[pick(rng)];
    }
    std::uniform_int_distribution<int> row(0, base.at(p).dim() - 1);
    Vec moved = base.at(p).basis_row(row(rng));
    Grading g = base;
    std::vector<Vec> from, to;
    for (int i = 0; i < base.at(p).dim(); ++i)
      if (base.at(p).basis_row(i) != moved) from.push_back(base.at(p).basis_row(i));
    to = base.at(q).basis_rows();
    to.push_back(moved);
    g.components.at(p) = Subspace::span(g.ambient(), from);
    g.components.at(q) = Subspace::span(g.ambient(), to);
    if (!check_grading(g).ok()) ++rejected;
  }
  CHECK(rejected * 100 >= trials * 99);
}

TEST_CASE("nilpotent fixture grading") {
  ScLie n7 = load_n7_3();
  CHECK(n7.dim == 7);
  CHECK(jacobi_check(n7));
  // characteristically nilpotent data: filiform-like chain brackets
  Vec x1(7), x2(7);
  x1[0] = Scalar(1);
  x2[1] = Scalar(1);
  Vec b = n7.bracket(x1, x2);
  CHECK(b[2] == Scalar(1));

  Grading good = n7_3_grading(false);
  auto rep = check_grading(good);
  CHECK(rep.ok());
  CHECK(rep.support_generates);

  Grading bad = n7_3_grading(true);
  CHECK(!check_grading(bad).ok());
}

TEST_CASE("grading document round trip") {
  Grading g = restrict_K(tensor(trivial_grading(2, AbGroup::klein()), pauli()),
                         InvolutionSpec(Mat::identity(4), InvSymmetry::symmetric));
  nlohmann::json doc = grading_to_json(g);
  Grading back = grading_from_json(doc);
  CHECK(back.n == g.n);
  CHECK(back.carrier == g.carrier);
  for (const auto& p : g.group.elements()) CHECK(back.at(p) == g.at(p));
  CHECK(grading_to_json(back).dump() == doc.dump());  // bit-exact

  Grading sc = n7_3_grading(false);
  nlohmann::json doc2 = grading_to_json(sc);
  Grading back2 = grading_from_json(doc2);
  CHECK(grading_to_json(back2).dump() == doc2.dump());
  for (const auto& p : sc.group.elements()) CHECK(back2.at(p) == sc.at(p));
}
