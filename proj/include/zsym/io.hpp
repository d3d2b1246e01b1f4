#ifndef ZSYM_IO_HPP
#define ZSYM_IO_HPP

#include "json.hpp"
#include "zsym/census.hpp"
#include "zsym/symspace.hpp"

namespace zsym {

/// Nested row arrays with string-encoded scalars.
nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

/// A subspace as a list of basis elements: n x n matrices when n > 0, flat
/// vectors otherwise.
nlohmann::json subspace_to_json(const Subspace& s, int n);
Subspace subspace_from_json(const nlohmann::json& j, int ambient, int n);

/// Grading document:
/// { "group": [2,2], "kind": "...", "n": int, "sc": {...}?,
///   "carrier": [basis...], "components": { "e": [basis...], ... } }
/// Round trips bit-exactly (component bases are already canonical).
nlohmann::json grading_to_json(const Grading& g);
Grading grading_from_json(const nlohmann::json& j);

/// Structure constants as {"dim": d, "brackets": [[i, j, k, "value"], ...]}.
ScLie sclie_from_json(const nlohmann::json& j);
nlohmann::json sclie_to_json(const ScLie& a);

nlohmann::json report_to_json(const CaseReport& r);

/// Torsion and curvature arrays of the two canonical connections.
nlohmann::json connection_to_json(const LocalSymSpace& s);

}  // namespace zsym

#endif
