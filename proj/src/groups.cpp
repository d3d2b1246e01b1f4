#include "zsym/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zsym {

AbGroup::AbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int r : orders_)
    if (r <= 0) throw std::invalid_argument("AbGroup: nonpositive cyclic order");
}

AbGroup AbGroup::klein() { return AbGroup({2, 2}); }

int AbGroup::order() const {
  int n = 1;
  for (int r : orders_) n *= r;
  return n;
}

int AbGroup::exponent() const {
  int e = 1;
  for (int r : orders_) e = std::lcm(e, r);
  return e;
}

GroupElt AbGroup::identity() const {
  return GroupElt{std::vector<int>(orders_.size(), 0)};
}

bool AbGroup::valid(const GroupElt& x) const {
  if (x.coords.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= orders_[i]) return false;
  return true;
}

GroupElt AbGroup::mul(const GroupElt& x, const GroupElt& y) const {
  if (!valid(x) || !valid(y)) throw std::invalid_argument("AbGroup: bad element");
  GroupElt z = identity();
  for (std::size_t i = 0; i < orders_.size(); ++i)
    z.coords[i] = (x.coords[i] + y.coords[i]) % orders_[i];
  return z;
}

GroupElt AbGroup::inv(const GroupElt& x) const {
  if (!valid(x)) throw std::invalid_argument("AbGroup: bad element");
  GroupElt z = identity();
  for (std::size_t i = 0; i < orders_.size(); ++i)
    z.coords[i] = (orders_[i] - x.coords[i]) % orders_[i];
  return z;
}

std::vector<GroupElt> AbGroup::elements() const {
  std::vector<GroupElt> out;
  out.push_back(identity());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::vector<GroupElt> next;
    for (const auto& e : out)
      for (int v = 0; v < orders_[i]; ++v) {
        GroupElt x = e;
        x.coords[i] = v;
        next.push_back(x);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbGroup::name(const GroupElt& x) const {
  if (orders_ == std::vector<int>{2, 2}) {
    // naming convention for the Klein group: e, a, b, c with ab = c
    if (x.coords == std::vector<int>{0, 0}) return "e";
    if (x.coords == std::vector<int>{1, 0}) return "a";
    if (x.coords == std::vector<int>{0, 1}) return "b";
    if (x.coords == std::vector<int>{1, 1}) return "c";
  }
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

std::optional<GroupElt> AbGroup::element_by_name(const std::string& s) const {
  for (const auto& e : elements())
    if (name(e) == s) return e;
  return std::nullopt;
}

Scalar Character::operator()(const AbGroup& g, const GroupElt& x) const {
  if (gen_values_.size() != g.orders().size() || !g.valid(x))
    throw std::invalid_argument("Character: arity mismatch");
  Scalar v(1);
  for (std::size_t i = 0; i < gen_values_.size(); ++i)
    v *= gen_values_[i].pow(x.coords[i]);
  return v;
}

namespace {

// primitive r-th root of unity in Q(i), r in {1, 2, 4}
Scalar primitive_root(int r) {
  switch (r) {
    case 1: return Scalar(1);
    case 2: return Scalar(-1);
    case 4: return Scalar::i();
    default:
      throw std::domain_error(
          "characters: cyclic order " + std::to_string(r) +
          " needs roots of unity outside Q(i)");
  }
}

}  // namespace

std::vector<Character> characters(const AbGroup& g) {
  std::vector<std::vector<Scalar>> tuples{{}};
  for (int r : g.orders()) {
    Scalar zeta = primitive_root(r);
    std::vector<std::vector<Scalar>> next;
    for (const auto& t : tuples) {
      Scalar v(1);
      for (int k = 0; k < r; ++k) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
        v *= zeta;
      }
    }
    tuples = std::move(next);
  }
  std::vector<Character> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.emplace_back(std::move(t));
  return out;
}

GroupElt GroupAut::apply(const AbGroup& g, const GroupElt& x) const {
  if (gen_images.size() != g.orders().size() || !g.valid(x))
    throw std::invalid_argument("GroupAut: arity mismatch");
  GroupElt z = g.identity();
  for (std::size_t i = 0; i < gen_images.size(); ++i)
    for (int k = 0; k < x.coords[i]; ++k) z = g.mul(z, gen_images[i]);
  return z;
}

GroupAut GroupAut::identity(const AbGroup& g) {
  GroupAut a;
  for (std::size_t i = 0; i < g.orders().size(); ++i) {
    GroupElt e = g.identity();
    e.coords[i] = g.orders()[i] > 1 ? 1 : 0;
    a.gen_images.push_back(e);
  }
  return a;
}

GroupAut GroupAut::inverse(const AbGroup& g) const {
  for (const auto& cand : automorphisms(g)) {
    bool ok = true;
    for (const auto& x : g.elements())
      if (!(cand.apply(g, apply(g, x)) == x)) {
        ok = false;
        break;
      }
    if (ok) return cand;
  }
  throw std::logic_error("GroupAut: not invertible");
}

std::vector<GroupAut> automorphisms(const AbGroup& g) {
  std::vector<GroupElt> elts = g.elements();
  std::size_t ngen = g.orders().size();
  std::vector<GroupAut> out;
  std::vector<std::size_t> pick(ngen, 0);
  while (true) {
    GroupAut cand;
    for (std::size_t i = 0; i < ngen; ++i) cand.gen_images.push_back(elts[pick[i]]);
    // well-defined: image of generator i must satisfy the order relation
    bool ok = true;
    for (std::size_t i = 0; i < ngen && ok; ++i) {
      GroupElt p = g.identity();
      for (int k = 0; k < g.orders()[i]; ++k) p = g.mul(p, cand.gen_images[i]);
      ok = (p == g.identity());
    }
    if (ok) {
      std::set<GroupElt> image;
      for (const auto& x : elts) image.insert(cand.apply(g, x));
      if (static_cast<int>(image.size()) == g.order()) out.push_back(cand);
    }
    std::size_t i = 0;
    for (; i < ngen; ++i) {
      if (++pick[i] < elts.size()) break;
      pick[i] = 0;
    }
    if (i == ngen) break;
  }
  return out;
}

std::set<GroupElt> subgroup_generated(const AbGroup& g,
                                      const std::vector<GroupElt>& elts) {
  std::set<GroupElt> closure{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElt> cur(closure.begin(), closure.end());
    for (const auto& x : cur)
      for (const auto& s : elts) {
        GroupElt y = g.mul(x, s);
        if (closure.insert(y).second) grew = true;
      }
  }
  return closure;
}

}  // namespace zsym
