#include "zsym/linalg.hpp"

#include <stdexcept>

namespace zsym {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::unit(int n, int i, int j) {
  Mat m(n, n);
  m.at(i, j) = Scalar(1);
  return m;
}

Mat Mat::skew_pair(int n) {
  if (n % 2 != 0) throw std::invalid_argument("skew_pair: odd size");
  Mat m(n, n);
  int l = n / 2;
  for (int i = 0; i < l; ++i) {
    m.at(i, l + i) = Scalar(1);
    m.at(l + i, i) = Scalar(-1);
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  int cols = static_cast<int>(rows[0].size());
  Mat m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("from_rows: ragged input");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Mat Mat::diag_blocks(const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw std::invalid_argument("diag_blocks: non-square block");
    n += b.rows();
  }
  Mat m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Mat::trace() const {
  Scalar t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const { return vec_is_zero(e_); }

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: size mismatch");
  Mat m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: size mismatch");
  Mat m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat: size mismatch");
  Mat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        m.at(i, j) += x * y;
      }
    }
  }
  return m;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat m = *this;
  for (auto& x : m.e_) x *= s;
  return m;
}

Mat Mat::unflatten(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("unflatten: size mismatch");
  Mat m(rows, cols);
  m.e_ = v;
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Scalar& t = b.at(k, l);
          if (t.is_zero()) continue;
          m.at(i * b.rows() + k, j * b.cols() + l) = s * t;
        }
    }
  return m;
}

Mat bracket(const Mat& x, const Mat& y) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("bracket: size mismatch");
  return x * y - y * x;
}

Mat rref(Mat m) {
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Scalar inv = m.at(lead, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j) {
        if (m.at(lead, j).is_zero()) continue;
        m.at(r, j) -= f * m.at(lead, j);
      }
    }
    ++lead;
  }
  return m;
}

int Mat::rank() const {
  Mat r = rref(*this);
  int rank = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) {
        nz = true;
        break;
      }
    if (nz) ++rank;
  }
  return rank;
}

Mat Mat::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse: non-square");
  int n = rows_;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  aug = rref(aug);
  for (int i = 0; i < n; ++i)
    if (!aug.at(i, i).is_one()) throw std::domain_error("inverse: singular matrix");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("span: ragged input");
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Mat r = rref(Mat::from_rows(vectors));
  std::vector<Vec> keep;
  for (int i = 0; i < r.rows(); ++i) {
    Vec row(ambient);
    bool nz = false;
    for (int j = 0; j < ambient; ++j) {
      row[j] = r.at(i, j);
      if (!row[j].is_zero()) nz = true;
    }
    if (nz) keep.push_back(std::move(row));
  }
  s.basis_ = keep.empty() ? Mat(0, ambient) : Mat::from_rows(keep);
  return s;
}

Subspace Subspace::span_mats(const std::vector<Mat>& mats) {
  if (mats.empty()) throw std::invalid_argument("span_mats: empty");
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) rows.push_back(m.flatten());
  return span(mats[0].rows() * mats[0].cols(), rows);
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Mat::identity(ambient);
  return s;
}

Vec Subspace::basis_row(int k) const {
  Vec v(ambient_);
  for (int j = 0; j < ambient_; ++j) v[j] = basis_.at(k, j);
  return v;
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> rows;
  rows.reserve(dim());
  for (int k = 0; k < dim(); ++k) rows.push_back(basis_row(k));
  return rows;
}

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("reduce: ambient mismatch");
  for (int r = 0; r < basis_.rows(); ++r) {
    // pivot column = first nonzero of row r; entry there is 1
    int p = 0;
    while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
    if (p >= ambient_) continue;
    const Scalar f = v[p];
    if (f.is_zero()) continue;
    for (int j = p; j < ambient_; ++j) {
      if (basis_.at(r, j).is_zero()) continue;
      v[j] -= f * basis_.at(r, j);
    }
  }
  return v;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (int r = 0; r < o.dim(); ++r)
    if (!contains(o.basis_row(r))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  // pivot entries give the coordinates directly for an RREF basis
  Vec t(dim());
  Vec rem = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int p = 0;
    while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
    t[r] = rem[p];
    if (t[r].is_zero()) continue;
    for (int j = p; j < ambient_; ++j) {
      if (basis_.at(r, j).is_zero()) continue;
      rem[j] -= t[r] * basis_.at(r, j);
    }
  }
  if (!vec_is_zero(rem)) throw std::domain_error("coords: vector not in subspace");
  return t;
}

Subspace kernel(const Mat& m) {
  int n = m.cols();
  Mat r = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows(); ++i) {
    int p = 0;
    while (p < n && r.at(i, p).is_zero()) ++p;
    if (p < n) {
      pivot_col.push_back(p);
      is_pivot[p] = true;
    }
  }
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> rows = a.basis_rows();
  for (auto& r : b.basis_rows()) rows.push_back(std::move(r));
  return Subspace::span(a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  int n = a.ambient();
  int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  // columns are [basis(a)^T | -basis(b)^T]; a kernel element (u, v) gives a
  // common vector sum_i u_i a_i
  Mat sys(n, da + db);
  for (int j = 0; j < da; ++j)
    for (int i = 0; i < n; ++i) sys.at(i, j) = a.basis().at(j, i);
  for (int j = 0; j < db; ++j)
    for (int i = 0; i < n; ++i) sys.at(i, da + j) = -b.basis().at(j, i);
  Subspace ker = kernel(sys);
  std::vector<Vec> vecs;
  for (int k = 0; k < ker.dim(); ++k) {
    Vec u = ker.basis_row(k);
    Vec w(n);
    for (int i = 0; i < da; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (a.basis().at(i, j).is_zero()) continue;
        w[j] += u[i] * a.basis().at(i, j);
      }
    }
    vecs.push_back(std::move(w));
  }
  return Subspace::span(n, vecs);
}

SubspaceOrder compare(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("compare: ambient mismatch");
  bool ab = b.contains(a);
  bool ba = a.contains(b);
  if (ab && ba) return SubspaceOrder::equal;
  if (ab) return SubspaceOrder::a_in_b;
  if (ba) return SubspaceOrder::b_in_a;
  return SubspaceOrder::incomparable;
}

bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& whole) {
  int total = 0;
  Subspace acc(whole.ambient());
  for (const auto& p : parts) {
    if (p.ambient() != whole.ambient()) return false;
    total += p.dim();
    acc = sum(acc, p);
  }
  return total == whole.dim() && acc == whole;
}

std::optional<std::vector<Vec>> solve_multi(const Mat& a,
                                            const std::vector<Vec>& rhs) {
  int nr = static_cast<int>(rhs.size());
  Mat aug(a.rows(), a.cols() + nr);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int r = 0; r < nr; ++r) {
      if (static_cast<int>(rhs[r].size()) != a.rows())
        throw std::invalid_argument("solve_multi: size mismatch");
      aug.at(i, a.cols() + r) = rhs[r][i];
    }
  }
  Mat red = rref(aug);
  std::vector<Vec> out(nr, Vec(a.cols()));
  for (int i = 0; i < red.rows(); ++i) {
    int p = 0;
    while (p < red.cols() && red.at(i, p).is_zero()) ++p;
    if (p >= red.cols()) continue;
    if (p >= a.cols()) return std::nullopt;  // pivot in an rhs column
    for (int r = 0; r < nr; ++r) out[r][p] = red.at(i, a.cols() + r);
  }
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Mat r = rref(aug);
  Vec x(a.cols());
  for (int i = 0; i < r.rows(); ++i) {
    int p = 0;
    while (p <= a.cols() && r.at(i, p).is_zero()) ++p;
    if (p == a.cols()) return std::nullopt;  // 0 = 1 row
    if (p > a.cols()) continue;
    // free variables at zero, so the pivot value is the rhs entry
    x[p] = r.at(i, a.cols());
  }
  Vec chk(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Scalar s;
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || x[j].is_zero()) continue;
      s += a.at(i, j) * x[j];
    }
    if (s != b[i]) return std::nullopt;
  }
  return x;
}

}  // namespace zsym
