#ifndef ZSYM_LIE_HPP
#define ZSYM_LIE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "zsym/linalg.hpp"

namespace zsym {

enum class InvSymmetry { symmetric, skew };

/// Nonsingular matrix Phi defining the involution X -> Phi^{-1} X^t Phi.
struct InvolutionSpec {
  Mat phi;
  InvSymmetry symmetry;

  InvolutionSpec(Mat phi_in, InvSymmetry sym);

  Mat apply(const Mat& x) const;  // Phi^{-1} X^t Phi

private:
  Mat phi_inv_;
};

/// Matrix Lie algebra: a bracket-closed subspace of M_n under [X,Y]=XY-YX.
struct MatLie {
  int n = 0;
  Subspace space{0};
};

/// Structure-constant Lie algebra: [x_i, x_j] given in basis coordinates.
struct ScLie {
  int dim = 0;
  // table[i][j] = coordinates of [x_i, x_j]; antisymmetry enforced on load
  std::vector<std::vector<Vec>> table;

  Vec bracket(const Vec& x, const Vec& y) const;
};

ScLie make_sclie(int dim, const std::vector<std::tuple<int, int, int, Scalar>>& sc);

MatLie build_sl(int n);
MatLie build_gl(int n);
/// Skew elements K(M_n, *) of the involution; so-type for symmetric Phi,
/// sp-type for skew Phi.
MatLie build_K(int n, const InvolutionSpec& inv);
/// Symmetric elements H(M_n, *).
Subspace build_H(int n, const InvolutionSpec& inv);

bool jacobi_check(const ScLie& a);

/// Uniform view of a Lie algebra: a subspace of an ambient coordinate space
/// plus the bracket expressed on ambient coordinates.
struct AlgebraView {
  Subspace space{0};
  std::function<Vec(const Vec&, const Vec&)> brk;
};

AlgebraView view(const MatLie& g);
AlgebraView view(const ScLie& g);

Subspace derived(const AlgebraView& g);
Subspace center(const AlgebraView& g);
/// Largest ideal of g contained in h (h must lie inside g); computed as the
/// fixpoint of I_{k+1} = { x in I_k : [g, x] subset I_k }.
Subspace largest_ideal_in(const AlgebraView& g, const Subspace& h);
int killing_rank(const AlgebraView& g);

/// Sum of the column spaces of the basis matrices; the natural module for
/// the block embeddings in the census tables.
Subspace column_support(const MatLie& g);

/// Dimensions of the symmetric and skew solutions B of X^t B + B X = 0,
/// with X running over g restricted to the invariant support.
std::pair<int, int> invariant_forms(const MatLie& g, const Subspace& support);

struct StructureSignature {
  int dim = 0;
  int center_dim = 0;
  int derived_dim = 0;
  int killing_rank = 0;
  std::optional<std::pair<int, int>> forms;  // (sym, skew), matrix case only

  bool operator==(const StructureSignature&) const = default;
};

StructureSignature signature(const MatLie& g);
StructureSignature signature(const ScLie& g);

}  // namespace zsym

#endif
