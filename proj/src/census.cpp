#include "zsym/census.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "zsym/io.hpp"

namespace zsym {

using nlohmann::json;

std::string family_name(Family f) {
  switch (f) {
    case Family::A_classI_elem: return "A_classI_elem";
    case Family::A_classI_fine: return "A_classI_fine";
    case Family::A_classII: return "A_classII";
    case Family::BCD_elem: return "BCD_elem";
    case Family::BCD_fine: return "BCD_fine";
  }
  return "?";
}

std::string CaseSpec::id() const {
  std::string s = family_name(family) + ":" + phi_choice + ":(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

namespace {

// descending partitions of n into exactly parts positive parts
void partitions_into(int n, int parts, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (n >= 1 && n <= max_part) {
      cur.push_back(n);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = std::min(n - parts + 1, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_into(n - k, parts - 1, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, parts, n, cur, out);
  return out;
}

bool all_even(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int k) { return k % 2 == 0; });
}

std::string plus_join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "+";
    s += parts[i];
  }
  return s;
}

}  // namespace

std::vector<CaseSpec> enumerate_cases(Family family, int n_max) {
  std::vector<CaseSpec> out;
  auto add = [&](const std::string& phi, std::vector<int> params) {
    out.push_back(CaseSpec{family, std::move(params), phi});
  };
  switch (family) {
    case Family::BCD_elem: {
      for (int parts = 2; parts <= 4; ++parts) {
        std::string nu = "nu" + std::to_string(parts - 1);
        for (int n = parts; n <= n_max; ++n)
          for (auto& p : partitions(n, parts)) add(nu, p);
        for (int n = 2 * parts; n <= n_max; n += 2)
          for (auto& p : partitions(n, parts))
            if (all_even(p)) add(nu + "bar", p);
      }
      for (int k = 1; 2 * k <= n_max; ++k) {
        add("nu1p", {k});
        add("nu1pbar", {k});
      }
      for (int k1 = 1; k1 <= n_max / 2; ++k1)
        for (int k3 = 1; k3 <= k1; ++k3)
          if (2 * (k1 + k3) <= n_max) {
            add("nu3p", {k1, k3});
            add("nu3pbar", {k1, k3});
          }
      break;
    }
    case Family::BCD_fine: {
      for (int m = 1; 2 * m <= n_max; ++m) {
        add("Psi1", {m});
        add("Psi4bar", {m});
        if (m % 2 == 0) {
          add("Psi4", {m});
          add("Psi1bar", {m});
        }
      }
      break;
    }
    case Family::A_classI_elem: {
      for (int parts = 2; parts <= 4; ++parts) {
        std::string nu = "nu" + std::to_string(parts - 1);
        for (int n = std::max(2, parts); n <= n_max; ++n)
          for (auto& p : partitions(n, parts)) add(nu, p);
      }
      break;
    }
    case Family::A_classI_fine: {
      for (int m = 1; 2 * m <= n_max; ++m) add("pauli", {m});
      break;
    }
    case Family::A_classII: {
      for (int n = 2; n <= n_max; ++n) {
        for (int k2 = 0; 2 * k2 <= n; ++k2) {
          int k1 = n - k2;
          add("Phi1", {k1, k2});
          if (k1 % 2 == 0 && k2 % 2 == 0) add("Phi1bar", {k1, k2});
        }
        if (n % 2 == 0) {
          add("Phi1p", {n / 2});
          add("Phi1barp", {n / 2});
        }
      }
      break;
    }
  }
  return out;
}

std::vector<CaseSpec> enumerate_all(int n_max) {
  std::vector<CaseSpec> out;
  for (Family f : {Family::BCD_elem, Family::BCD_fine, Family::A_classI_elem,
                   Family::A_classI_fine, Family::A_classII}) {
    auto v = enumerate_cases(f, n_max);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace {

std::vector<GroupElt> klein_tuple(const std::vector<int>& ks) {
  AbGroup g = AbGroup::klein();
  std::vector<GroupElt> names = {*g.element_by_name("e"), *g.element_by_name("a"),
                                 *g.element_by_name("b"), *g.element_by_name("c")};
  std::vector<GroupElt> tuple;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (int r = 0; r < ks[i]; ++r) tuple.push_back(names[i]);
  return tuple;
}

Mat antidiag_pair(int k, bool skew) {
  Mat m(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    m.at(i, k + i) = Scalar(1);
    m.at(k + i, i) = skew ? Scalar(-1) : Scalar(1);
  }
  return m;
}

struct CaseData {
  Grading grading;
  std::string algebra;
  std::string isotropy;
  bool simple = false;
};

bool so_simple(int n) { return n == 3 || n >= 5; }

std::vector<Mat> so_block(int k) {
  std::vector<Mat> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      out.push_back(Mat::unit(k, i, j) - Mat::unit(k, j, i));
  return out;
}

std::vector<Mat> sp_block(int k) {
  MatLie sp = build_K(k, InvolutionSpec(Mat::skew_pair(k), InvSymmetry::skew));
  std::vector<Mat> out;
  for (int r = 0; r < sp.space.dim(); ++r)
    out.push_back(Mat::unflatten(sp.space.basis_row(r), k, k));
  return out;
}

// diag(W, -W^t) pairs inside a 2k x 2k block
std::vector<Mat> gl_pair_block(int k) {
  std::vector<Mat> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mat m(2 * k, 2 * k);
      m.at(i, j) = Scalar(1);
      m.at(k + j, k + i) = Scalar(-1);
      out.push_back(m);
    }
  return out;
}

Mat embed(const Mat& b, int n, int offset) {
  Mat m(n, n);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(offset + i, offset + j) = b.at(i, j);
  return m;
}

Subspace blocks_subspace(int n, const std::vector<std::pair<std::vector<Mat>, int>>&
                                    placed) {
  std::vector<Vec> vecs;
  for (const auto& [mats, off] : placed)
    for (const auto& b : mats) vecs.push_back(embed(b, n, off).flatten());
  return Subspace::span(n * n, vecs);
}

CaseData build_bcd_elem(const CaseSpec& spec) {
  const auto& p = spec.params;
  bool bar = spec.phi_choice.find("bar") != std::string::npos;
  bool prime = spec.phi_choice.find('p') != std::string::npos &&
               spec.phi_choice != "nu1" && spec.phi_choice != "nu2" &&
               spec.phi_choice != "nu3";
  CaseData cd;
  int n = 0;
  std::vector<GroupElt> tuple;
  Mat phi;
  std::vector<std::pair<std::vector<Mat>, int>> iso_blocks;
  std::vector<std::string> iso_names;

  if (!prime) {
    for (int k : p) n += k;
    tuple = klein_tuple(p);
    if (bar) {
      std::vector<Mat> blocks;
      for (int k : p) blocks.push_back(Mat::skew_pair(k));
      phi = Mat::diag_blocks(blocks);
    } else {
      phi = Mat::identity(n);
    }
    int off = 0;
    for (int k : p) {
      if (bar) {
        iso_blocks.emplace_back(sp_block(k), off);
        iso_names.push_back("sp(" + std::to_string(k) + ")");
      } else {
        iso_blocks.emplace_back(so_block(k), off);
        iso_names.push_back("so(" + std::to_string(k) + ")");
      }
      off += k;
    }
  } else if (spec.phi_choice == "nu1p" || spec.phi_choice == "nu1pbar") {
    int k = p[0];
    n = 2 * k;
    tuple = klein_tuple({k, k});
    phi = antidiag_pair(k, bar);
    iso_blocks.emplace_back(gl_pair_block(k), 0);
    iso_names.push_back("gl(" + std::to_string(k) + ")");
  } else {  // nu3p / nu3pbar
    int k1 = p[0], k3 = p[1];
    n = 2 * k1 + 2 * k3;
    tuple = klein_tuple({k1, k1, k3, k3});
    phi = Mat::diag_blocks({antidiag_pair(k1, bar), antidiag_pair(k3, bar)});
    iso_blocks.emplace_back(gl_pair_block(k1), 0);
    iso_blocks.emplace_back(gl_pair_block(k3), 2 * k1);
    iso_names.push_back("gl(" + std::to_string(k1) + ")");
    iso_names.push_back("gl(" + std::to_string(k3) + ")");
  }

  InvolutionSpec inv(phi, bar ? InvSymmetry::skew : InvSymmetry::symmetric);
  Grading base = elementary(n, AbGroup::klein(), tuple);
  cd.grading = restrict_K(base, inv);
  cd.algebra = (bar ? "sp(" : "so(") + std::to_string(n) + ")";
  cd.simple = bar ? n >= 2 : so_simple(n);
  cd.isotropy = plus_join(iso_names);
  (void)iso_blocks;
  return cd;
}

}  // namespace

Grading build_case_grading(const CaseSpec& spec) {
  switch (spec.family) {
    case Family::BCD_elem:
      return build_bcd_elem(spec).grading;
    case Family::BCD_fine: {
      int m = spec.params[0];
      bool bar = spec.phi_choice.find("bar") != std::string::npos;
      int idx = spec.phi_choice.find('4') != std::string::npos ? 4 : 1;
      return psi_grading(bar ? WitnessFamily::sp : WitnessFamily::so_even, m, idx);
    }
    case Family::A_classI_elem: {
      int n = 0;
      for (int k : spec.params) n += k;
      return class1_sl(elementary(n, AbGroup::klein(), klein_tuple(spec.params)));
    }
    case Family::A_classI_fine: {
      int m = spec.params[0];
      return class1_sl(tensor(trivial_grading(m, AbGroup::klein()), pauli()));
    }
    case Family::A_classII: {
      int n, k1, k2;
      Mat phi;
      bool skew = false;
      if (spec.phi_choice == "Phi1" || spec.phi_choice == "Phi1bar") {
        k1 = spec.params[0];
        k2 = spec.params[1];
        n = k1 + k2;
        if (spec.phi_choice == "Phi1") {
          phi = Mat::identity(n);
        } else {
          skew = true;
          phi = k2 > 0 ? Mat::diag_blocks({Mat::skew_pair(k1), Mat::skew_pair(k2)})
                       : Mat::skew_pair(k1);
        }
      } else {
        int k = spec.params[0];
        n = 2 * k;
        k1 = k;
        k2 = k;
        skew = (spec.phi_choice == "Phi1barp");
        phi = antidiag_pair(k, skew);
      }
      std::vector<int> tuple(n, 0);
      for (int i = k1; i < n; ++i) tuple[i] = 1;
      return class2_sl(n, tuple,
                       InvolutionSpec(phi, skew ? InvSymmetry::skew
                                                : InvSymmetry::symmetric));
    }
  }
  throw std::logic_error("build_case_grading: bad family");
}

Subspace expected_isotropy(const CaseSpec& spec) {
  switch (spec.family) {
    case Family::BCD_elem: {
      const auto& p = spec.params;
      bool bar = spec.phi_choice.find("bar") != std::string::npos;
      if (spec.phi_choice == "nu1p" || spec.phi_choice == "nu1pbar") {
        int k = p[0];
        return blocks_subspace(2 * k, {{gl_pair_block(k), 0}});
      }
      if (spec.phi_choice == "nu3p" || spec.phi_choice == "nu3pbar") {
        int k1 = p[0], k3 = p[1];
        return blocks_subspace(2 * k1 + 2 * k3,
                               {{gl_pair_block(k1), 0}, {gl_pair_block(k3), 2 * k1}});
      }
      int n = 0;
      for (int k : p) n += k;
      std::vector<std::pair<std::vector<Mat>, int>> placed;
      int off = 0;
      for (int k : p) {
        placed.emplace_back(bar ? sp_block(k) : so_block(k), off);
        off += k;
      }
      return blocks_subspace(n, placed);
    }
    case Family::BCD_fine: {
      int m = spec.params[0];
      bool bar = spec.phi_choice.find("bar") != std::string::npos;
      bool four = spec.phi_choice.find('4') != std::string::npos;
      // Psi1: so(m) copies, Psi4: sp(m); the bar family swaps the two
      bool use_sp = (four != bar);
      std::vector<Mat> blk = use_sp ? sp_block(m) : so_block(m);
      std::vector<Vec> vecs;
      for (const auto& u : blk) vecs.push_back(kron(Mat::identity(2), u).flatten());
      return Subspace::span(4 * m * m, vecs);
    }
    case Family::A_classI_elem: {
      int n = 0;
      for (int k : spec.params) n += k;
      std::vector<Vec> vecs;
      int off = 0;
      for (int k : spec.params) {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (i != j) vecs.push_back(Mat::unit(n, off + i, off + j).flatten());
        off += k;
      }
      for (int i = 0; i + 1 < n; ++i)
        vecs.push_back((Mat::unit(n, i, i) - Mat::unit(n, i + 1, i + 1)).flatten());
      return Subspace::span(n * n, vecs);
    }
    case Family::A_classI_fine: {
      int m = spec.params[0];
      if (m == 1) return Subspace(4);
      std::vector<Vec> vecs;
      MatLie sl = build_sl(m);
      for (int r = 0; r < sl.space.dim(); ++r)
        vecs.push_back(
            kron(Mat::identity(2), Mat::unflatten(sl.space.basis_row(r), m, m))
                .flatten());
      return Subspace::span(4 * m * m, vecs);
    }
    case Family::A_classII: {
      if (spec.phi_choice == "Phi1p" || spec.phi_choice == "Phi1barp") {
        int k = spec.params[0];
        return blocks_subspace(2 * k, {{gl_pair_block(k), 0}});
      }
      int k1 = spec.params[0], k2 = spec.params[1];
      int n = k1 + k2;
      bool bar = spec.phi_choice == "Phi1bar";
      std::vector<std::pair<std::vector<Mat>, int>> placed;
      placed.emplace_back(bar ? sp_block(k1) : so_block(k1), 0);
      if (k2 > 0) placed.emplace_back(bar ? sp_block(k2) : so_block(k2), k1);
      return blocks_subspace(n, placed);
    }
  }
  throw std::logic_error("expected_isotropy: bad family");
}

namespace {

std::string case_algebra(const CaseSpec& spec) {
  int n = 0;
  switch (spec.family) {
    case Family::BCD_elem:
      return build_bcd_elem(spec).algebra;
    case Family::BCD_fine:
      return (spec.phi_choice.find("bar") != std::string::npos ? "sp(" : "so(") +
             std::to_string(2 * spec.params[0]) + ")";
    case Family::A_classI_elem:
      for (int k : spec.params) n += k;
      return "sl(" + std::to_string(n) + ")";
    case Family::A_classI_fine:
      return "sl(" + std::to_string(2 * spec.params[0]) + ")";
    case Family::A_classII:
      if (spec.phi_choice == "Phi1" || spec.phi_choice == "Phi1bar")
        n = spec.params[0] + spec.params[1];
      else
        n = 2 * spec.params[0];
      return "sl(" + std::to_string(n) + ")";
  }
  return "?";
}

std::string case_isotropy(const CaseSpec& spec) {
  auto nm = [](const char* t, int k) {
    return std::string(t) + "(" + std::to_string(k) + ")";
  };
  switch (spec.family) {
    case Family::BCD_elem:
      return build_bcd_elem(spec).isotropy;
    case Family::BCD_fine: {
      bool bar = spec.phi_choice.find("bar") != std::string::npos;
      bool four = spec.phi_choice.find('4') != std::string::npos;
      return nm((four != bar) ? "sp" : "so", spec.params[0]);
    }
    case Family::A_classI_elem: {
      std::vector<std::string> names;
      for (int k : spec.params) names.push_back(nm("sl", k));
      names.push_back("C^" + std::to_string(spec.params.size() - 1));
      return plus_join(names);
    }
    case Family::A_classI_fine:
      return nm("sl", spec.params[0]);
    case Family::A_classII: {
      if (spec.phi_choice == "Phi1p" || spec.phi_choice == "Phi1barp")
        return nm("gl", spec.params[0]);
      bool bar = spec.phi_choice == "Phi1bar";
      std::vector<std::string> names;
      names.push_back(nm(bar ? "sp" : "so", spec.params[0]));
      if (spec.params[1] > 0) names.push_back(nm(bar ? "sp" : "so", spec.params[1]));
      return plus_join(names);
    }
  }
  return "?";
}

bool case_simple(const CaseSpec& spec, const std::string& algebra) {
  int n = std::stoi(algebra.substr(algebra.find('(') + 1));
  if (algebra.rfind("so", 0) == 0) return so_simple(n);
  return n >= 2;
}

}  // namespace

CaseReport run_case(const CaseSpec& spec) {
  CaseReport rep;
  rep.spec = spec;
  try {
    rep.algebra = case_algebra(spec);
    rep.isotropy = case_isotropy(spec);
    rep.simple_carrier = case_simple(spec, rep.algebra);

    Grading g = build_case_grading(spec);
    {
      std::vector<GroupElt> order;
      if (g.group == AbGroup::klein())
        for (const char* nm : {"e", "a", "b", "c"})
          order.push_back(*g.group.element_by_name(nm));
      else
        order = g.group.elements();
      for (const auto& p : order)
        rep.dims.emplace_back(g.group.name(p), g.at(p).dim());
    }

    VerificationReport vr = check_grading(g);
    rep.grading_ok = vr.ok();
    rep.degenerate = !vr.support_generates;
    {
      std::vector<GroupElt> supp(vr.support.begin(), vr.support.end());
      auto sub = subgroup_generated(g.group, supp);
      std::string names;
      for (const auto& e : sub) {
        if (!names.empty()) names += ",";
        names += g.group.name(e);
      }
      rep.support_note = "support generates {" + names + "}";
    }

    Grading eig = dual_eigenspaces(g);
    rep.dual_roundtrip = true;
    for (const auto& p : g.group.elements())
      if (!(eig.at(p) == g.at(p))) rep.dual_roundtrip = false;

    Subspace fixed = eig.at(g.group.identity());
    LocalSymSpace s = build_space(g, &fixed);
    rep.reductive = true;
    rep.isotropy_match = (s.h == expected_isotropy(spec));
    rep.symmetric = is_symmetric(s);
    rep.torsion_nonzero = !torsion_is_zero(s);
    rep.effective = s.effective;
    rep.sig = signature(MatLie{g.n, s.h});
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  return rep;
}

char cartan_type(const CaseReport& r) {
  int n = std::stoi(r.algebra.substr(r.algebra.find('(') + 1));
  if (r.algebra.rfind("sl", 0) == 0) return 'A';
  if (r.algebra.rfind("sp", 0) == 0) return 'C';
  return n % 2 ? 'B' : 'D';
}

char cartan_type(const CaseSpec& spec) {
  CaseReport r;
  r.algebra = case_algebra(spec);
  return cartan_type(r);
}

std::string emit_json(const std::vector<CaseReport>& reports) {
  json out;
  out["version"] = "1";
  out["cases"] = json::array();
  for (const auto& r : reports) out["cases"].push_back(report_to_json(r));
  return out.dump(2);
}

std::string emit_markdown(const std::vector<CaseReport>& reports) {
  std::ostringstream os;
  os << "| case | g | g_e (table) | dims (e,a,b,c) | grading | dual | reductive "
        "| isotropy | symmetric | note |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  auto mark = [](bool b) { return b ? "yes" : "NO"; };
  for (const auto& r : reports) {
    os << "| " << r.spec.id() << " | " << r.algebra << " | " << r.isotropy << " | ";
    for (std::size_t i = 0; i < r.dims.size(); ++i)
      os << (i ? "," : "") << r.dims[i].second;
    os << " | " << mark(r.grading_ok) << " | " << mark(r.dual_roundtrip) << " | "
       << mark(r.reductive) << " | " << mark(r.isotropy_match) << " | "
       << (r.symmetric ? "yes" : "no") << " | "
       << (r.error.empty() ? (r.degenerate ? "degenerate; " + r.support_note : "")
                           : "ERROR: " + r.error)
       << " |\n";
  }
  return os.str();
}

}  // namespace zsym
