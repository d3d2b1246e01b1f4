#include "zsym/gradings.hpp"

#include <stdexcept>

namespace zsym {

Vec Grading::product(const Vec& x, const Vec& y) const {
  switch (kind) {
    case CarrierKind::associative_matrix:
      return (Mat::unflatten(x, n, n) * Mat::unflatten(y, n, n)).flatten();
    case CarrierKind::lie_matrix:
      return bracket(Mat::unflatten(x, n, n), Mat::unflatten(y, n, n)).flatten();
    case CarrierKind::lie_sc:
      return sc->bracket(x, y);
  }
  throw std::logic_error("Grading: bad kind");
}

const Subspace& Grading::at(const GroupElt& p) const {
  auto it = components.find(p);
  if (it == components.end()) throw std::invalid_argument("Grading: unknown element");
  return it->second;
}

std::set<GroupElt> Grading::support() const {
  std::set<GroupElt> s;
  for (const auto& [p, comp] : components)
    if (comp.dim() > 0) s.insert(p);
  return s;
}

VerificationReport check_grading(const Grading& g) {
  VerificationReport rep;
  std::vector<Subspace> parts;
  for (const auto& [p, comp] : g.components) parts.push_back(comp);
  rep.direct_sum = is_direct_sum(parts, g.carrier);
  rep.support = g.support();
  for (const auto& [p, cp] : g.components) {
    if (cp.dim() == 0) continue;
    for (const auto& [q, cq] : g.components) {
      if (cq.dim() == 0) continue;
      const Subspace& target = g.at(g.group.mul(p, q));
      bool ok = true;
      for (int i = 0; i < cp.dim() && ok; ++i)
        for (int j = 0; j < cq.dim() && ok; ++j)
          if (!target.contains(g.product(cp.basis_row(i), cq.basis_row(j))))
            ok = false;
      if (!ok) rep.incompatible_pairs.emplace_back(p, q);
    }
  }
  std::vector<GroupElt> supp(rep.support.begin(), rep.support.end());
  rep.support_generates =
      static_cast<int>(subgroup_generated(g.group, supp).size()) == g.group.order();
  return rep;
}

Grading elementary(int n, const AbGroup& group, const std::vector<GroupElt>& tuple) {
  if (static_cast<int>(tuple.size()) != n)
    throw std::invalid_argument("elementary: tuple length != n");
  Grading g;
  g.group = group;
  g.kind = CarrierKind::associative_matrix;
  g.n = n;
  g.carrier = Subspace::full(n * n);
  std::map<GroupElt, std::vector<Vec>> buckets;
  for (const auto& p : group.elements()) buckets[p] = {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupElt deg = group.mul(group.inv(tuple[i]), tuple[j]);
      buckets[deg].push_back(Mat::unit(n, i, j).flatten());
    }
  for (const auto& [p, vecs] : buckets)
    g.components.emplace(p, Subspace::span(n * n, vecs));
  return g;
}

Mat pauli_matrix(const std::string& name) {
  Mat m(2, 2);
  if (name == "e") {
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = Scalar(1);
  } else if (name == "a") {
    m.at(0, 0) = Scalar(-1);
    m.at(1, 1) = Scalar(1);
  } else if (name == "b") {
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
  } else if (name == "c") {
    m.at(0, 1) = Scalar(-1);
    m.at(1, 0) = Scalar(1);
  } else {
    throw std::invalid_argument("pauli_matrix: bad name " + name);
  }
  return m;
}

Grading pauli() {
  AbGroup group = AbGroup::klein();
  Grading g;
  g.group = group;
  g.kind = CarrierKind::associative_matrix;
  g.n = 2;
  g.carrier = Subspace::full(4);
  for (const auto& p : group.elements())
    g.components.emplace(
        p, Subspace::span_mats({pauli_matrix(group.name(p))}));
  return g;
}

Grading trivial_grading(int n, const AbGroup& group) {
  Grading g;
  g.group = group;
  g.kind = CarrierKind::associative_matrix;
  g.n = n;
  g.carrier = Subspace::full(n * n);
  for (const auto& p : group.elements())
    g.components.emplace(p, p == group.identity() ? Subspace::full(n * n)
                                                  : Subspace(n * n));
  return g;
}

Grading tensor(const Grading& ga, const Grading& gb) {
  if (!(ga.group == gb.group)) throw std::invalid_argument("tensor: group mismatch");
  if (ga.kind != CarrierKind::associative_matrix ||
      gb.kind != CarrierKind::associative_matrix)
    throw std::invalid_argument("tensor: associative carriers required");
  auto sa = ga.support();
  auto sb = gb.support();
  for (const auto& p : sa)
    if (p != ga.group.identity() && sb.count(p))
      throw std::invalid_argument("tensor: supports overlap beyond identity");
  int n = ga.n * gb.n;
  Grading g;
  g.group = ga.group;
  g.kind = CarrierKind::associative_matrix;
  g.n = n;
  g.carrier = Subspace::full(n * n);
  for (const auto& p : g.group.elements()) {
    std::vector<Vec> vecs;
    for (const auto& q : g.group.elements()) {
      GroupElt r = g.group.mul(g.group.inv(q), p);  // q r = p
      const Subspace& aq = ga.at(q);
      const Subspace& br = gb.at(r);
      for (int i = 0; i < aq.dim(); ++i)
        for (int j = 0; j < br.dim(); ++j) {
          Mat am = Mat::unflatten(aq.basis_row(i), ga.n, ga.n);
          Mat bm = Mat::unflatten(br.basis_row(j), gb.n, gb.n);
          // the second factor is the outer block structure
          vecs.push_back(kron(bm, am).flatten());
        }
    }
    g.components.emplace(p, Subspace::span(n * n, vecs));
  }
  return g;
}

Grading restrict_K(const Grading& gr, const InvolutionSpec& inv) {
  if (gr.kind != CarrierKind::associative_matrix)
    throw std::invalid_argument("restrict_K: associative carrier required");
  if (inv.phi.rows() != gr.n) throw std::invalid_argument("restrict_K: size mismatch");
  // graded-involution check, never assumed
  for (const auto& [p, comp] : gr.components) {
    for (int i = 0; i < comp.dim(); ++i) {
      Mat x = Mat::unflatten(comp.basis_row(i), gr.n, gr.n);
      if (!comp.contains(inv.apply(x).flatten()))
        throw std::invalid_argument(
            "restrict_K: involution does not preserve component " +
            gr.group.name(p));
    }
  }
  MatLie K = build_K(gr.n, inv);
  Grading g;
  g.group = gr.group;
  g.kind = CarrierKind::lie_matrix;
  g.n = gr.n;
  g.carrier = K.space;
  for (const auto& [p, comp] : gr.components)
    g.components.emplace(p, intersect(K.space, comp));
  return g;
}

Grading class1_sl(const Grading& gr) {
  if (gr.kind != CarrierKind::associative_matrix)
    throw std::invalid_argument("class1_sl: associative carrier required");
  MatLie sl = build_sl(gr.n);
  Grading g;
  g.group = gr.group;
  g.kind = CarrierKind::lie_matrix;
  g.n = gr.n;
  g.carrier = sl.space;
  for (const auto& [p, comp] : gr.components) {
    if (p == gr.group.identity())
      g.components.emplace(p, intersect(comp, sl.space));
    else
      g.components.emplace(p, comp);
  }
  return g;
}

Grading class2_sl(int n, const std::vector<int>& z2_tuple,
                  const InvolutionSpec& inv) {
  if (static_cast<int>(z2_tuple.size()) != n)
    throw std::invalid_argument("class2_sl: tuple length != n");
  AbGroup z2 = AbGroup::cyclic(2);
  std::vector<GroupElt> tuple;
  for (int v : z2_tuple) {
    if (v != 0 && v != 1) throw std::invalid_argument("class2_sl: tuple entries in {0,1}");
    tuple.push_back(GroupElt{{v}});
  }
  Grading base = elementary(n, z2, tuple);
  // the involution must be graded for the Z2 grading
  for (const auto& [p, comp] : base.components)
    for (int i = 0; i < comp.dim(); ++i) {
      Mat x = Mat::unflatten(comp.basis_row(i), n, n);
      if (!comp.contains(inv.apply(x).flatten()))
        throw std::invalid_argument(
            "class2_sl: involution not graded for the Z2 elementary grading");
    }
  const Subspace& Re = base.at(GroupElt{{0}});
  const Subspace& Ra = base.at(GroupElt{{1}});
  MatLie Kspace = build_K(n, inv);
  Subspace Hspace = build_H(n, inv);
  MatLie sl = build_sl(n);

  AbGroup klein = AbGroup::klein();
  Grading g;
  g.group = klein;
  g.kind = CarrierKind::lie_matrix;
  g.n = n;
  g.carrier = sl.space;
  g.components.emplace(*klein.element_by_name("e"), intersect(Re, Kspace.space));
  g.components.emplace(*klein.element_by_name("a"), intersect(Ra, Kspace.space));
  g.components.emplace(*klein.element_by_name("b"),
                       intersect(intersect(Re, Hspace), sl.space));
  g.components.emplace(*klein.element_by_name("c"), intersect(Ra, Hspace));
  return g;
}

Grading dual_eigenspaces(const Grading& g) {
  if (g.group.exponent() > 4)
    throw std::domain_error("dual_eigenspaces: group exponent exceeds 4");
  std::vector<Character> chars = characters(g.group);
  int d = g.carrier.dim();
  auto carrier_rows = g.carrier.basis_rows();

  // decompose each carrier basis vector into homogeneous pieces by solving
  // against the concatenated component bases
  std::vector<Vec> comp_rows;
  std::vector<GroupElt> row_degree;
  for (const auto& [p, comp] : g.components)
    for (int i = 0; i < comp.dim(); ++i) {
      comp_rows.push_back(comp.basis_row(i));
      row_degree.push_back(p);
    }
  if (static_cast<int>(comp_rows.size()) != d)
    throw std::invalid_argument("dual_eigenspaces: components do not span carrier");
  int amb = g.ambient();
  Mat comp_T(amb, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < amb; ++k) comp_T.at(k, j) = comp_rows[j][k];

  auto decomp = solve_multi(comp_T, carrier_rows);
  if (!decomp) throw std::invalid_argument("dual_eigenspaces: decomposition failed");

  // action operator of each character in carrier coordinates
  std::vector<Mat> ops;
  for (const auto& chi : chars) {
    Mat op(d, d);
    for (int j = 0; j < d; ++j) {
      const Vec& t = (*decomp)[j];
      Vec img(amb);
      for (int r = 0; r < d; ++r) {
        if (t[r].is_zero()) continue;
        Scalar f = t[r] * chi(g.group, row_degree[r]);
        for (int k = 0; k < amb; ++k) {
          if (comp_rows[r][k].is_zero()) continue;
          img[k] += f * comp_rows[r][k];
        }
      }
      Vec co = g.carrier.coords(img);
      for (int i = 0; i < d; ++i) op.at(i, j) = co[i];
    }
    ops.push_back(std::move(op));
  }

  Grading out;
  out.group = g.group;
  out.kind = g.kind;
  out.n = g.n;
  out.sc = g.sc;
  out.carrier = g.carrier;
  for (const auto& p : g.group.elements()) {
    // joint eigenspace: (A_chi - chi(p) I) x = 0 for every character
    Mat sys(static_cast<int>(ops.size()) * d, d);
    for (std::size_t c = 0; c < ops.size(); ++c) {
      Scalar lam = chars[c](g.group, p);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Scalar v = ops[c].at(i, j);
          if (i == j) v -= lam;
          sys.at(static_cast<int>(c) * d + i, j) = v;
        }
    }
    Subspace ker = kernel(sys);
    std::vector<Vec> vecs;
    for (int k = 0; k < ker.dim(); ++k) {
      Vec t = ker.basis_row(k);
      Vec v(amb);
      for (int i = 0; i < d; ++i) {
        if (t[i].is_zero()) continue;
        for (int l = 0; l < amb; ++l) {
          if (carrier_rows[i][l].is_zero()) continue;
          v[l] += t[i] * carrier_rows[i][l];
        }
      }
      vecs.push_back(std::move(v));
    }
    out.components.emplace(p, Subspace::span(amb, vecs));
  }
  return out;
}

}  // namespace zsym
