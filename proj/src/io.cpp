#include "zsym/io.hpp"

#include <stdexcept>

namespace zsym {

using nlohmann::json;

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& e : j) v.push_back(Scalar::parse(e.get<std::string>()));
  return v;
}

json mat_to_json(const Mat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    out.push_back(row);
  }
  return out;
}

Mat mat_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("mat_from_json: ragged rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = Scalar::parse(j[i][c].get<std::string>());
  }
  return m;
}

json subspace_to_json(const Subspace& s, int n) {
  json out = json::array();
  for (int r = 0; r < s.dim(); ++r) {
    Vec row = s.basis_row(r);
    out.push_back(n > 0 ? mat_to_json(Mat::unflatten(row, n, n)) : vec_to_json(row));
  }
  return out;
}

Subspace subspace_from_json(const json& j, int ambient, int n) {
  std::vector<Vec> vecs;
  for (const auto& e : j)
    vecs.push_back(n > 0 ? mat_from_json(e).flatten() : vec_from_json(e));
  return Subspace::span(ambient, vecs);
}

json sclie_to_json(const ScLie& a) {
  json brs = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        if (!a.table[i][j][k].is_zero())
          brs.push_back({i, j, k, a.table[i][j][k].str()});
  return json{{"dim", a.dim}, {"brackets", brs}};
}

ScLie sclie_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::tuple<int, int, int, Scalar>> sc;
  for (const auto& t : j.at("brackets"))
    sc.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                    Scalar::parse(t[3].get<std::string>()));
  return make_sclie(dim, sc);
}

namespace {

std::string kind_name(CarrierKind k) {
  switch (k) {
    case CarrierKind::associative_matrix: return "associative_matrix";
    case CarrierKind::lie_matrix: return "lie_matrix";
    case CarrierKind::lie_sc: return "lie_sc";
  }
  return "?";
}

CarrierKind kind_from_name(const std::string& s) {
  if (s == "associative_matrix") return CarrierKind::associative_matrix;
  if (s == "lie_matrix") return CarrierKind::lie_matrix;
  if (s == "lie_sc") return CarrierKind::lie_sc;
  throw std::invalid_argument("unknown carrier kind: " + s);
}

}  // namespace

json grading_to_json(const Grading& g) {
  json out;
  out["group"] = g.group.orders();
  out["kind"] = kind_name(g.kind);
  out["n"] = g.n;
  if (g.kind == CarrierKind::lie_sc) out["sc"] = sclie_to_json(*g.sc);
  out["carrier"] = subspace_to_json(g.carrier, g.n);
  json comps = json::object();
  for (const auto& [p, sub] : g.components)
    comps[g.group.name(p)] = subspace_to_json(sub, g.n);
  out["components"] = comps;
  return out;
}

Grading grading_from_json(const json& j) {
  Grading g;
  g.group = AbGroup(j.at("group").get<std::vector<int>>());
  g.kind = kind_from_name(j.at("kind").get<std::string>());
  g.n = j.at("n").get<int>();
  int ambient;
  if (g.kind == CarrierKind::lie_sc) {
    g.sc = std::make_shared<ScLie>(sclie_from_json(j.at("sc")));
    ambient = g.sc->dim;
  } else {
    ambient = g.n * g.n;
  }
  g.carrier = subspace_from_json(j.at("carrier"), ambient, g.n);
  for (const auto& [name, sub] : j.at("components").items()) {
    auto p = g.group.element_by_name(name);
    if (!p) throw std::invalid_argument("unknown group element: " + name);
    g.components.emplace(*p, subspace_from_json(sub, ambient, g.n));
  }
  for (const auto& p : g.group.elements())
    if (!g.components.count(p))
      g.components.emplace(p, Subspace(ambient));
  return g;
}

json report_to_json(const CaseReport& r) {
  json out;
  out["id"] = r.spec.id();
  out["family"] = family_name(r.spec.family);
  out["params"] = r.spec.params;
  out["phi"] = r.spec.phi_choice;
  out["algebra"] = r.algebra;
  out["type"] = std::string(1, r.error.empty() ? cartan_type(r) : '?');
  out["isotropy"] = r.isotropy;
  json dims = json::array();
  for (const auto& [nm, d] : r.dims) dims.push_back({nm, d});
  out["dims"] = dims;
  out["grading_ok"] = r.grading_ok;
  out["dual_roundtrip"] = r.dual_roundtrip;
  out["reductive"] = r.reductive;
  out["isotropy_match"] = r.isotropy_match;
  out["symmetric"] = r.symmetric;
  out["torsion_nonzero"] = r.torsion_nonzero;
  out["simple_carrier"] = r.simple_carrier;
  out["effective"] = r.effective;
  out["degenerate"] = r.degenerate;
  out["support_note"] = r.support_note;
  json sig;
  sig["dim"] = r.sig.dim;
  sig["center_dim"] = r.sig.center_dim;
  sig["derived_dim"] = r.sig.derived_dim;
  sig["killing_rank"] = r.sig.killing_rank;
  if (r.sig.forms)
    sig["forms"] = {r.sig.forms->first, r.sig.forms->second};
  else
    sig["forms"] = nullptr;
  out["isotropy_signature"] = sig;
  // table-row distinctness is certified by signature only, not by a proof of
  // pairwise inequivalence
  out["uniqueness_caveat"] = "signature-distinct only";
  out["error"] = r.error;
  out["passed"] = r.passed();
  return out;
}

json connection_to_json(const LocalSymSpace& s) {
  json out;
  int n = s.grading.kind == CarrierKind::lie_sc ? 0 : s.grading.n;
  out["h"] = subspace_to_json(s.h, n);
  out["m"] = subspace_to_json(s.m, n);
  out["dim_h"] = s.h.dim();
  out["dim_m"] = s.m.dim();
  out["effective"] = s.effective;
  out["symmetric"] = is_symmetric(s);
  int dm = s.m.dim();
  json tor = json::array();
  for (int i = 0; i < dm; ++i) {
    json row = json::array();
    for (int j = 0; j < dm; ++j) row.push_back(vec_to_json(s.torsion[i][j]));
    tor.push_back(row);
  }
  out["torsion"] = tor;
  auto t2 = second_connection_torsion(s);
  json tor2 = json::array();
  for (int i = 0; i < dm; ++i) {
    json row = json::array();
    for (int j = 0; j < dm; ++j) row.push_back(vec_to_json(t2[i][j]));
    tor2.push_back(row);
  }
  out["second_torsion"] = tor2;
  json curv = json::array();
  for (int i = 0; i < dm; ++i)
    for (int j = i + 1; j < dm; ++j)
      curv.push_back(
          {i, j, mat_to_json(curvature_pair(s, s.m.basis_row(i), s.m.basis_row(j)))});
  out["curvature"] = curv;
  return out;
}

}  // namespace zsym
