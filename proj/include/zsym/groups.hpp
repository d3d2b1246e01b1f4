#ifndef ZSYM_GROUPS_HPP
#define ZSYM_GROUPS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zsym/scalar.hpp"

namespace zsym {

struct GroupElt {
  std::vector<int> coords;

  bool operator==(const GroupElt& o) const { return coords == o.coords; }
  bool operator<(const GroupElt& o) const { return coords < o.coords; }
};

/// Finite abelian group presented as a product of cyclic factors.
class AbGroup {
public:
  explicit AbGroup(std::vector<int> orders);

  /// Z2 x Z2 with elements named e, a, b, c.
  static AbGroup klein();
  static AbGroup cyclic(int n) { return AbGroup({n}); }

  const std::vector<int>& orders() const { return orders_; }
  int order() const;
  int exponent() const;

  GroupElt identity() const;
  GroupElt mul(const GroupElt& x, const GroupElt& y) const;
  GroupElt inv(const GroupElt& x) const;
  bool valid(const GroupElt& x) const;

  std::vector<GroupElt> elements() const;

  std::string name(const GroupElt& x) const;
  std::optional<GroupElt> element_by_name(const std::string& s) const;

  bool operator==(const AbGroup& o) const { return orders_ == o.orders_; }

private:
  std::vector<int> orders_;
};

/// Character of a finite abelian group of exponent dividing 4; values are
/// fourth roots of unity, so they stay inside the Gaussian rationals.
class Character {
public:
  explicit Character(std::vector<Scalar> gen_values)
      : gen_values_(std::move(gen_values)) {}

  const std::vector<Scalar>& gen_values() const { return gen_values_; }
  Scalar operator()(const AbGroup& g, const GroupElt& x) const;

  bool operator==(const Character& o) const { return gen_values_ == o.gen_values_; }

private:
  std::vector<Scalar> gen_values_;
};

/// All |g| characters; throws when the exponent does not divide 4.
std::vector<Character> characters(const AbGroup& g);

struct GroupAut {
  std::vector<GroupElt> gen_images;

  GroupElt apply(const AbGroup& g, const GroupElt& x) const;
  GroupAut inverse(const AbGroup& g) const;
  static GroupAut identity(const AbGroup& g);
};

/// Brute-force enumeration of all automorphisms; intended for small groups.
std::vector<GroupAut> automorphisms(const AbGroup& g);

std::set<GroupElt> subgroup_generated(const AbGroup& g,
                                      const std::vector<GroupElt>& elts);

}  // namespace zsym

#endif
