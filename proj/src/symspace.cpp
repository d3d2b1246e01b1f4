#include "zsym/symspace.hpp"

#include <stdexcept>

namespace zsym {

Subspace fixed_subalgebra(const Grading& g) {
  Grading eig = dual_eigenspaces(g);
  return eig.at(g.group.identity());
}

namespace {

AlgebraView carrier_view(const Grading& g) {
  AlgebraView v;
  v.space = g.carrier;
  if (g.kind == CarrierKind::lie_sc) {
    auto sc = g.sc;
    v.brk = [sc](const Vec& x, const Vec& y) { return sc->bracket(x, y); };
  } else if (g.kind == CarrierKind::lie_matrix) {
    int n = g.n;
    v.brk = [n](const Vec& x, const Vec& y) {
      return bracket(Mat::unflatten(x, n, n), Mat::unflatten(y, n, n)).flatten();
    };
  } else {
    throw std::invalid_argument("symspace: Lie carrier required");
  }
  return v;
}

}  // namespace

LocalSymSpace build_space(const Grading& g, const Subspace* fixed) {
  LocalSymSpace s;
  s.grading = g;
  AlgebraView gv = carrier_view(g);

  Subspace h = g.at(g.group.identity());
  Subspace m(g.ambient());
  for (const auto& [p, comp] : g.components)
    if (!(p == g.group.identity())) m = sum(m, comp);
  // cross-check against the dual-action fixed space
  if (!((fixed ? *fixed : fixed_subalgebra(g)) == h))
    throw std::logic_error("build_space: fixed space differs from identity component");
  // reductivity [h, m] subset m (should hold for any valid grading)
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m.contains(gv.brk(h.basis_row(i), m.basis_row(j))))
        throw std::logic_error("build_space: reductivity failure, broken grading");
  s.h = std::move(h);
  s.m = std::move(m);
  s.effective = largest_ideal_in(gv, s.h).dim() == 0;

  // torsion table in one batched coordinate solve over the (h | m) basis
  int dm = s.m.dim();
  int dh = s.h.dim();
  int amb = g.ambient();
  s.torsion.assign(dm, std::vector<Vec>(dm, Vec(dm)));
  if (dm > 0) {
    Mat basis_T(amb, dh + dm);
    for (int j = 0; j < dh; ++j)
      for (int k = 0; k < amb; ++k) basis_T.at(k, j) = s.h.basis().at(j, k);
    for (int j = 0; j < dm; ++j)
      for (int k = 0; k < amb; ++k) basis_T.at(k, dh + j) = s.m.basis().at(j, k);
    std::vector<Vec> brs;
    brs.reserve(static_cast<std::size_t>(dm) * (dm - 1) / 2);
    for (int i = 0; i < dm; ++i)
      for (int j = i + 1; j < dm; ++j)
        brs.push_back(gv.brk(s.m.basis_row(i), s.m.basis_row(j)));
    auto co = solve_multi(basis_T, brs);
    if (!co) throw std::logic_error("build_space: bracket outside the carrier");
    std::size_t idx = 0;
    for (int i = 0; i < dm; ++i)
      for (int j = i + 1; j < dm; ++j, ++idx)
        for (int k = 0; k < dm; ++k) {
          Scalar v = -(*co)[idx][dh + k];
          s.torsion[i][j][k] = v;
          s.torsion[j][i][k] = -v;
        }
  }
  return s;
}

Vec m_project(const LocalSymSpace& s, const Vec& x) {
  // coordinates in the stacked (h | m) basis; the tail gives the m-part
  int dh = s.h.dim(), dm = s.m.dim();
  int amb = s.h.ambient();
  Mat basis_T(amb, dh + dm);
  for (int j = 0; j < dh; ++j)
    for (int k = 0; k < amb; ++k) basis_T.at(k, j) = s.h.basis().at(j, k);
  for (int j = 0; j < dm; ++j)
    for (int k = 0; k < amb; ++k) basis_T.at(k, dh + j) = s.m.basis().at(j, k);
  auto t = solve(basis_T, x);
  if (!t) throw std::invalid_argument("m_project: vector outside the carrier");
  Vec out(amb);
  for (int j = 0; j < dm; ++j) {
    if ((*t)[dh + j].is_zero()) continue;
    for (int k = 0; k < amb; ++k) {
      if (s.m.basis().at(j, k).is_zero()) continue;
      out[k] += (*t)[dh + j] * s.m.basis().at(j, k);
    }
  }
  return out;
}

Vec torsion_pair(const LocalSymSpace& s, const Vec& x, const Vec& y) {
  if (!s.m.contains(x) || !s.m.contains(y))
    throw std::invalid_argument("torsion_pair: arguments outside m");
  AlgebraView gv = carrier_view(s.grading);
  Vec t = m_project(s, gv.brk(x, y));
  for (auto& v : t) v = -v;
  return t;
}

Mat curvature_pair(const LocalSymSpace& s, const Vec& x, const Vec& y) {
  if (!s.m.contains(x) || !s.m.contains(y))
    throw std::invalid_argument("curvature_pair: arguments outside m");
  AlgebraView gv = carrier_view(s.grading);
  Vec br = gv.brk(x, y);
  Vec mpart = m_project(s, br);
  Vec hpart(br.size());
  for (std::size_t k = 0; k < br.size(); ++k) hpart[k] = br[k] - mpart[k];
  int dm = s.m.dim();
  Mat endo(dm, dm);
  for (int j = 0; j < dm; ++j) {
    Vec img = gv.brk(hpart, s.m.basis_row(j));
    Vec co = s.m.coords(m_project(s, img));
    for (int i = 0; i < dm; ++i) endo.at(i, j) = -co[i];
  }
  return endo;
}

std::vector<std::vector<Vec>> second_connection_torsion(const LocalSymSpace& s) {
  // T2(x, y) = T(x, y) - T(x, y); computed as the elementwise difference so
  // the zero array is produced, not assumed
  int dm = s.m.dim();
  std::vector<std::vector<Vec>> out(dm, std::vector<Vec>(dm, Vec(dm)));
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j)
      for (int k = 0; k < dm; ++k)
        out[i][j][k] = s.torsion[i][j][k] - s.torsion[i][j][k];
  return out;
}

bool torsion_is_zero(const LocalSymSpace& s) {
  for (const auto& row : s.torsion)
    for (const auto& v : row)
      if (!vec_is_zero(v)) return false;
  return true;
}

bool is_symmetric(const LocalSymSpace& s) {
  AlgebraView gv = carrier_view(s.grading);
  for (int i = 0; i < s.m.dim(); ++i)
    for (int j = i + 1; j < s.m.dim(); ++j)
      if (!s.h.contains(gv.brk(s.m.basis_row(i), s.m.basis_row(j)))) return false;
  return true;
}

}  // namespace zsym
