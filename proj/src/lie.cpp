#include "zsym/lie.hpp"

#include <stdexcept>
#include <tuple>

namespace zsym {

InvolutionSpec::InvolutionSpec(Mat phi_in, InvSymmetry sym)
    : phi(std::move(phi_in)), symmetry(sym) {
  if (!phi.is_square()) throw std::invalid_argument("InvolutionSpec: non-square Phi");
  Mat t = phi.transpose();
  if (symmetry == InvSymmetry::symmetric) {
    if (!(t == phi)) throw std::invalid_argument("InvolutionSpec: Phi not symmetric");
  } else {
    if (!(t == phi.scaled(Scalar(-1))))
      throw std::invalid_argument("InvolutionSpec: Phi not skew");
  }
  phi_inv_ = phi.inverse();  // throws when singular
}

Mat InvolutionSpec::apply(const Mat& x) const { return phi_inv_ * x.transpose() * phi; }

Vec ScLie::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Vec& c = table[i][j];
      Scalar f = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        if (c[k].is_zero()) continue;
        out[k] += f * c[k];
      }
    }
  }
  return out;
}

ScLie make_sclie(int dim,
                 const std::vector<std::tuple<int, int, int, Scalar>>& sc) {
  ScLie a;
  a.dim = dim;
  a.table.assign(dim, std::vector<Vec>(dim, Vec(dim)));
  for (const auto& [i, j, k, v] : sc) {
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw std::invalid_argument("make_sclie: index out of range");
    a.table[i][j][k] += v;
    a.table[j][i][k] -= v;
  }
  return a;
}

MatLie build_sl(int n) {
  if (n < 2) throw std::invalid_argument("build_sl: n < 2");
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) basis.push_back(Mat::unit(n, i, j));
  for (int i = 0; i + 1 < n; ++i)
    basis.push_back(Mat::unit(n, i, i) - Mat::unit(n, i + 1, i + 1));
  return MatLie{n, Subspace::span_mats(basis)};
}

MatLie build_gl(int n) { return MatLie{n, Subspace::full(n * n)}; }

namespace {

// flattened matrix of the linear map X -> inv(X) on M_n
Mat involution_operator(int n, const InvolutionSpec& inv) {
  Mat op(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec img = inv.apply(Mat::unit(n, i, j)).flatten();
      int col = i * n + j;
      for (int k = 0; k < n * n; ++k) op.at(k, col) = img[k];
    }
  return op;
}

}  // namespace

MatLie build_K(int n, const InvolutionSpec& inv) {
  if (inv.phi.rows() != n) throw std::invalid_argument("build_K: size mismatch");
  Mat op = involution_operator(n, inv);
  for (int k = 0; k < n * n; ++k) op.at(k, k) += Scalar(1);  // inv(X) + X = 0
  return MatLie{n, kernel(op)};
}

Subspace build_H(int n, const InvolutionSpec& inv) {
  if (inv.phi.rows() != n) throw std::invalid_argument("build_H: size mismatch");
  Mat op = involution_operator(n, inv);
  for (int k = 0; k < n * n; ++k) op.at(k, k) -= Scalar(1);  // inv(X) - X = 0
  return kernel(op);
}

bool jacobi_check(const ScLie& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (int k = j + 1; k < a.dim; ++k) {
        Vec ei(a.dim), ej(a.dim), ek(a.dim);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        ek[k] = Scalar(1);
        Vec s = a.bracket(ei, a.bracket(ej, ek));
        Vec t = a.bracket(ej, a.bracket(ek, ei));
        Vec u = a.bracket(ek, a.bracket(ei, ej));
        for (int l = 0; l < a.dim; ++l)
          if (!(s[l] + t[l] + u[l]).is_zero()) return false;
      }
  return true;
}

AlgebraView view(const MatLie& g) {
  int n = g.n;
  AlgebraView v;
  v.space = g.space;
  v.brk = [n](const Vec& x, const Vec& y) {
    return bracket(Mat::unflatten(x, n, n), Mat::unflatten(y, n, n)).flatten();
  };
  return v;
}

AlgebraView view(const ScLie& g) {
  AlgebraView v;
  v.space = Subspace::full(g.dim);
  ScLie copy = g;
  v.brk = [copy](const Vec& x, const Vec& y) { return copy.bracket(x, y); };
  return v;
}

namespace {

// structure constants of g w.r.t. its canonical basis
struct ScTable {
  int d;
  std::vector<std::vector<Vec>> c;  // c[i][j] = coords of [b_i, b_j]
};

ScTable structure_constants(const AlgebraView& g) {
  int d = g.space.dim();
  auto rows = g.space.basis_rows();
  ScTable t{d, std::vector<std::vector<Vec>>(d, std::vector<Vec>(d))};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (j < i) {
        Vec v = t.c[j][i];
        for (auto& x : v) x = -x;
        t.c[i][j] = std::move(v);
        continue;
      }
      t.c[i][j] = g.space.coords(g.brk(rows[i], rows[j]));
    }
  return t;
}

Subspace coords_to_ambient(const AlgebraView& g, const Subspace& coords_space) {
  auto rows = g.space.basis_rows();
  std::vector<Vec> out;
  for (int k = 0; k < coords_space.dim(); ++k) {
    Vec t = coords_space.basis_row(k);
    Vec v(g.space.ambient());
    for (int i = 0; i < g.space.dim(); ++i) {
      if (t[i].is_zero()) continue;
      for (int j = 0; j < g.space.ambient(); ++j) {
        if (rows[i][j].is_zero()) continue;
        v[j] += t[i] * rows[i][j];
      }
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(g.space.ambient(), out);
}

}  // namespace

Subspace derived(const AlgebraView& g) {
  int d = g.space.dim();
  auto rows = g.space.basis_rows();
  std::vector<Vec> brs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) brs.push_back(g.brk(rows[i], rows[j]));
  return Subspace::span(g.space.ambient(), brs);
}

Subspace center(const AlgebraView& g) {
  ScTable t = structure_constants(g);
  int d = t.d;
  if (d == 0) return Subspace(g.space.ambient());
  // x = sum t_i b_i is central iff sum_i t_i c[i][j] = 0 for every j
  Mat sys(d * d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i) sys.at(j * d + k, i) = t.c[i][j][k];
  return coords_to_ambient(g, kernel(sys));
}

Subspace largest_ideal_in(const AlgebraView& g, const Subspace& h) {
  if (!g.space.contains(h)) throw std::invalid_argument("largest_ideal_in: h not in g");
  auto grows = g.space.basis_rows();
  Subspace cur = h;
  while (true) {
    int m = cur.dim();
    if (m == 0) return cur;
    auto urows = cur.basis_rows();
    // x = sum t_i u_i stays iff [b_j, x] reduces to zero mod cur for all j
    int amb = g.space.ambient();
    Mat sys(static_cast<int>(grows.size()) * amb, m);
    for (std::size_t j = 0; j < grows.size(); ++j)
      for (int i = 0; i < m; ++i) {
        Vec r = cur.reduce(g.brk(grows[j], urows[i]));
        for (int k = 0; k < amb; ++k)
          sys.at(static_cast<int>(j) * amb + k, i) = r[k];
      }
    Subspace ker = kernel(sys);
    if (ker.dim() == m) return cur;  // fixpoint
    std::vector<Vec> next;
    for (int k = 0; k < ker.dim(); ++k) {
      Vec t = ker.basis_row(k);
      Vec v(amb);
      for (int i = 0; i < m; ++i) {
        if (t[i].is_zero()) continue;
        for (int l = 0; l < amb; ++l) {
          if (urows[i][l].is_zero()) continue;
          v[l] += t[i] * urows[i][l];
        }
      }
      next.push_back(std::move(v));
    }
    cur = Subspace::span(amb, next);
  }
}

int killing_rank(const AlgebraView& g) {
  ScTable t = structure_constants(g);
  int d = t.d;
  if (d == 0) return 0;
  // sparse adjoint maps: ad_i as (row, col, val) triples
  std::vector<std::vector<std::tuple<int, int, Scalar>>> ad(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!t.c[i][j][k].is_zero()) ad[i].emplace_back(k, j, t.c[i][j][k]);
  Mat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Scalar s;
      // tr(ad_i ad_j) = sum over entries (k,l) of ad_i of ad_j[l][k]
      for (const auto& [k, l, v] : ad[i])
        for (const auto& [k2, l2, w] : ad[j])
          if (k2 == l && l2 == k) s += v * w;
      gram.at(i, j) = s;
      gram.at(j, i) = s;
    }
  return gram.rank();
}

Subspace column_support(const MatLie& g) {
  std::vector<Vec> cols;
  for (int r = 0; r < g.space.dim(); ++r) {
    Mat m = Mat::unflatten(g.space.basis_row(r), g.n, g.n);
    for (int j = 0; j < g.n; ++j) {
      Vec c(g.n);
      for (int i = 0; i < g.n; ++i) c[i] = m.at(i, j);
      cols.push_back(std::move(c));
    }
  }
  return Subspace::span(g.n, cols);
}

std::pair<int, int> invariant_forms(const MatLie& g, const Subspace& support) {
  int s = support.dim();
  if (s == 0) return {0, 0};
  // restrict each basis matrix to the support, checking invariance
  std::vector<Mat> restricted;
  for (int r = 0; r < g.space.dim(); ++r) {
    Mat x = Mat::unflatten(g.space.basis_row(r), g.n, g.n);
    Mat xr(s, s);
    for (int k = 0; k < s; ++k) {
      Vec col = support.basis_row(k);
      Vec img(g.n);
      for (int i = 0; i < g.n; ++i) {
        Scalar acc;
        for (int j = 0; j < g.n; ++j) {
          if (x.at(i, j).is_zero() || col[j].is_zero()) continue;
          acc += x.at(i, j) * col[j];
        }
        img[i] = acc;
      }
      Vec co;
      try {
        co = support.coords(img);
      } catch (const std::domain_error&) {
        throw std::invalid_argument("invariant_forms: support not invariant");
      }
      for (int i = 0; i < s; ++i) xr.at(i, k) = co[i];
    }
    restricted.push_back(std::move(xr));
  }
  // solve X^t B + B X = 0 for all restricted X, unknown B flattened s x s
  int nx = static_cast<int>(restricted.size());
  Mat sys(nx * s * s, s * s);
  for (int xi = 0; xi < nx; ++xi) {
    const Mat& x = restricted[xi];
    // (X^t B + B X)[i][j] = sum_k X[k][i] B[k][j] + B[i][k] X[k][j]
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        int row = xi * s * s + i * s + j;
        for (int k = 0; k < s; ++k) {
          if (!x.at(k, i).is_zero()) sys.at(row, k * s + j) += x.at(k, i);
          if (!x.at(k, j).is_zero()) sys.at(row, i * s + k) += x.at(k, j);
        }
      }
  }
  Subspace sols = kernel(sys);
  std::vector<Vec> symv, skewv;
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j) {
      Mat m(s, s);
      m.at(i, j) = Scalar(1);
      m.at(j, i) += Scalar(1);
      symv.push_back(m.flatten());
      if (i != j) {
        Mat k(s, s);
        k.at(i, j) = Scalar(1);
        k.at(j, i) = Scalar(-1);
        skewv.push_back(k.flatten());
      }
    }
  Subspace sym = Subspace::span(s * s, symv);
  Subspace skw = Subspace::span(s * s, skewv);
  return {intersect(sols, sym).dim(), intersect(sols, skw).dim()};
}

StructureSignature signature(const MatLie& g) {
  AlgebraView v = view(g);
  StructureSignature sig;
  sig.dim = g.space.dim();
  sig.center_dim = center(v).dim();
  sig.derived_dim = derived(v).dim();
  sig.killing_rank = killing_rank(v);
  sig.forms = invariant_forms(g, column_support(g));
  return sig;
}

StructureSignature signature(const ScLie& g) {
  AlgebraView v = view(g);
  StructureSignature sig;
  sig.dim = g.dim;
  sig.center_dim = center(v).dim();
  sig.derived_dim = derived(v).dim();
  sig.killing_rank = killing_rank(v);
  return sig;
}

}  // namespace zsym
