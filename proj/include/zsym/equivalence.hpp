#ifndef ZSYM_EQUIVALENCE_HPP
#define ZSYM_EQUIVALENCE_HPP

#include "zsym/gradings.hpp"

namespace zsym {

/// Weak-equivalence witness: an algebra automorphism X -> M X M^{-1}
/// together with a relabeling automorphism of the grading group.
struct Witness {
  Mat conjugator;
  GroupAut omega;

  Witness inverse(const AbGroup& g) const;
};

/// New grading with component at p equal to M g_{omega(p)} M^{-1}, carried by
/// the conjugated copy M g M^{-1} of the algebra.
Grading apply(const Witness& w, const Grading& g);

bool verify_equiv(const Grading& g1, const Grading& g2, const Witness& w);

enum class WitnessFamily { so_even, sp };

/// The two explicit conjugators mapping the first Psi-grading to the second
/// and third, tensored to size 2m, with their group relabelings.
std::vector<Witness> canonical_witnesses(WitnessFamily family, int m);

/// The four Psi (so case) or Psi-bar (sp case) involution matrices of size
/// 2m; index 1..4.
InvolutionSpec psi_involution(WitnessFamily family, int m, int index);

/// The tensor-with-Pauli grading of K(M_2m, Psi_index).
Grading psi_grading(WitnessFamily family, int m, int index);

}  // namespace zsym

#endif
