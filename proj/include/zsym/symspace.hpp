#ifndef ZSYM_SYMSPACE_HPP
#define ZSYM_SYMSPACE_HPP

#include "zsym/gradings.hpp"

namespace zsym {

/// Reductive local model of a graded Lie algebra: isotropy part h (the
/// identity component), complement m (sum of the other components), and the
/// first canonical connection torsion in the canonical m-basis.
struct LocalSymSpace {
  Grading grading;
  Subspace h{0};
  Subspace m{0};
  bool effective = false;
  // torsion[i][j] = m-coordinates of T(m_i, m_j) = -[m_i, m_j]_m
  std::vector<std::vector<Vec>> torsion;
};

/// Joint fixed space of the dual-group character action; coincides with the
/// identity component on any valid grading.
Subspace fixed_subalgebra(const Grading& g);

/// The fixed-space cross-check recomputes the dual action unless a
/// precomputed fixed subspace is supplied.
LocalSymSpace build_space(const Grading& g, const Subspace* fixed = nullptr);

/// m-part of an ambient carrier vector along the h (+) m splitting.
Vec m_project(const LocalSymSpace& s, const Vec& x);

/// T(x, y) = -[x, y]_m as an ambient vector; x, y must lie in m.
Vec torsion_pair(const LocalSymSpace& s, const Vec& x, const Vec& y);

/// R(x, y) = -ad([x, y]_h) restricted to m, as a dim(m) x dim(m)
/// coefficient matrix in the canonical m-basis.
Mat curvature_pair(const LocalSymSpace& s, const Vec& x, const Vec& y);

/// Torsion of the second canonical connection; identically zero, emitted to
/// certify the torsion-free property structurally.
std::vector<std::vector<Vec>> second_connection_torsion(const LocalSymSpace& s);

bool torsion_is_zero(const LocalSymSpace& s);
bool is_symmetric(const LocalSymSpace& s);  // [m, m] subset h

}  // namespace zsym

#endif
