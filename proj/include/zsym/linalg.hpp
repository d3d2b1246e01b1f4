#ifndef ZSYM_LINALG_HPP
#define ZSYM_LINALG_HPP

#include <optional>
#include <vector>

#include "zsym/scalar.hpp"

namespace zsym {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& v);

/// Dense matrix over the Gaussian rationals, row-major storage.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat unit(int n, int i, int j);  // E_ij
  /// The skew block matrix [[0, I],[-I, 0]] of even size n.
  static Mat skew_pair(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat diag_blocks(const std::vector<Mat>& blocks);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Mat transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  /// Row-major flattening; the fixed vectorization convention all modules
  /// share when a matrix is treated as an ambient vector.
  Vec flatten() const { return e_; }
  static Mat unflatten(const Vec& v, int rows, int cols);

  int rank() const;
  Mat inverse() const;  // throws std::domain_error when singular

private:
  int rows_, cols_;
  Vec e_;
};

Mat kron(const Mat& a, const Mat& b);
Mat bracket(const Mat& x, const Mat& y);  // xy - yx

/// Reduced row echelon form; row space preserved, pivots 1, pivot columns
/// cleared, pivot positions strictly increasing.
Mat rref(Mat m);

enum class SubspaceOrder { equal, a_in_b, b_in_a, incomparable };

/// Linear subspace of an ambient coordinate space, held as an RREF basis.
/// Equality of subspaces is structural equality of the canonical bases.
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace span_mats(const std::vector<Mat>& mats);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_row(int k) const;
  std::vector<Vec> basis_rows() const;

  /// Residual of v after elimination against the basis; zero iff v is a
  /// member.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;

  /// Coordinates of a member vector in the RREF basis; throws if v is not
  /// in the subspace.
  Vec coords(const Vec& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int ambient_;
  Mat basis_;
};

Subspace kernel(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
SubspaceOrder compare(const Subspace& a, const Subspace& b);
bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& whole);

/// Solve a x = b; empty when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Solve a X = b column by column with one elimination pass; empty when any
/// column is inconsistent.
std::optional<std::vector<Vec>> solve_multi(const Mat& a, const std::vector<Vec>& rhs);

}  // namespace zsym

#endif
