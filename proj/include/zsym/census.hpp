#ifndef ZSYM_CENSUS_HPP
#define ZSYM_CENSUS_HPP

#include <string>
#include <vector>

#include "zsym/equivalence.hpp"
#include "zsym/symspace.hpp"

namespace zsym {

enum class Family { A_classI_elem, A_classI_fine, A_classII, BCD_elem, BCD_fine };

std::string family_name(Family f);

/// One classified table row instance: family, parameter tuple, and the
/// catalogue involution it uses.
struct CaseSpec {
  Family family;
  std::vector<int> params;
  std::string phi_choice;  // e.g. "nu1", "nu1p", "nu1bar", "Psi1", "Phi1p"

  std::string id() const;
};

struct CaseReport {
  CaseSpec spec;
  std::string algebra;          // carrier, e.g. "so(4)"
  std::string isotropy;         // table claim, e.g. "so(2)+so(2)"
  std::vector<std::pair<std::string, int>> dims;  // per element, e,a,b,c
  bool grading_ok = false;
  bool dual_roundtrip = false;
  bool reductive = false;
  bool isotropy_match = false;
  bool symmetric = false;
  bool torsion_nonzero = false;
  bool simple_carrier = false;
  bool effective = false;  // meaningful when simple_carrier
  bool degenerate = false;
  std::string support_note;
  StructureSignature sig;
  std::string error;

  bool passed() const {
    return error.empty() && grading_ok && dual_roundtrip && reductive &&
           isotropy_match;
  }
};

std::vector<CaseSpec> enumerate_cases(Family family, int n_max);
std::vector<CaseSpec> enumerate_all(int n_max);

/// The carrier grading of a case, plus the table-claimed isotropy embedding
/// built explicitly from block constructions.
Grading build_case_grading(const CaseSpec& spec);
Subspace expected_isotropy(const CaseSpec& spec);

CaseReport run_case(const CaseSpec& spec);

std::string emit_json(const std::vector<CaseReport>& reports);
std::string emit_markdown(const std::vector<CaseReport>& reports);

/// Cartan-type letter of a case's carrier: A, B, C or D.
char cartan_type(const CaseReport& r);
char cartan_type(const CaseSpec& spec);

}  // namespace zsym

#endif
