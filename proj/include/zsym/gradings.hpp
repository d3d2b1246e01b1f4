#ifndef ZSYM_GRADINGS_HPP
#define ZSYM_GRADINGS_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "zsym/groups.hpp"
#include "zsym/lie.hpp"

namespace zsym {

/// What the graded carrier is and which product the compatibility condition
/// [g_p, g_q] subset g_{pq} uses.
enum class CarrierKind {
  associative_matrix,  // full matrix algebra M_n, product X*Y
  lie_matrix,          // matrix Lie algebra, commutator
  lie_sc               // structure-constant Lie algebra
};

struct Grading {
  AbGroup group = AbGroup::klein();
  CarrierKind kind = CarrierKind::associative_matrix;
  int n = 0;                        // matrix size; 0 for lie_sc
  std::shared_ptr<const ScLie> sc;  // set for lie_sc carriers
  Subspace carrier{0};
  std::map<GroupElt, Subspace> components;  // one entry per group element

  int ambient() const { return carrier.ambient(); }
  Vec product(const Vec& x, const Vec& y) const;
  const Subspace& at(const GroupElt& p) const;
  std::set<GroupElt> support() const;
};

struct VerificationReport {
  bool direct_sum = false;
  std::vector<std::pair<GroupElt, GroupElt>> incompatible_pairs;
  std::set<GroupElt> support;
  bool support_generates = false;

  bool compatible() const { return incompatible_pairs.empty(); }
  bool ok() const { return direct_sum && compatible(); }
};

VerificationReport check_grading(const Grading& g);

/// Elementary grading of M_n from a degree tuple: E_ij lands in the
/// component of p_i^{-1} p_j.
Grading elementary(int n, const AbGroup& group, const std::vector<GroupElt>& tuple);

/// The fine grading of M_2 with four one-dimensional components spanned by
/// the identity and the three Pauli-type matrices.
Grading pauli();
Mat pauli_matrix(const std::string& name);  // "e","a","b","c"

/// Tensor grading of M_{2m} from a grading of M_m and one of M_2 with
/// supports meeting only at the identity. The M_2 factor forms the outer
/// 2x2 block structure, so diag{U, U} = I_2 (x) U.
Grading tensor(const Grading& ga, const Grading& gb);

Grading trivial_grading(int n, const AbGroup& group);

/// Restriction of a matrix-algebra grading to the skew elements of a graded
/// involution; the involution must preserve every component.
Grading restrict_K(const Grading& gr, const InvolutionSpec& inv);

/// Class I grading of sl(n): trace-zero cut of the identity component only.
Grading class1_sl(const Grading& gr);

/// Class II grading of sl(n) by Z2 x Z2 from a Z2 elementary grading of M_n
/// and a compatible graded involution: g_e = K(R_e), g_a = K(R_a),
/// g_b = H(R_e) cut to trace zero, g_c = H(R_a).
Grading class2_sl(int n, const std::vector<int>& z2_tuple, const InvolutionSpec& inv);

/// Recompute every component as the joint eigenspace of the dual-group
/// character action; equals the input on any valid grading.
Grading dual_eigenspaces(const Grading& g);

}  // namespace zsym

#endif
