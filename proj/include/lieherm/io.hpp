#pragma once

#include <string>

#include "json.hpp"
#include "lieherm/connection.hpp"
#include "lieherm/curvature.hpp"

namespace lieherm {

using Json = nlohmann::ordered_json;

/// { "name": str, "dim": int, "brackets": [{"a","b","c","value"}...] },
/// a < b required, values are rational strings, unlisted components zero.
LieAlgebra algebra_from_json(const Json& doc);
LieAlgebra load_algebra_file(const std::string& path);
Json algebra_to_json(const LieAlgebra& L);
void save_algebra_file(const LieAlgebra& L, const std::string& path);

/// { "n": int, "components": [{"a","b","c","value"}...] } with a < b entries
/// only; the (1,1) conditions are validated on load.
AlphaForm alpha_from_json(const Json& doc);
AlphaForm load_alpha_file(const std::string& path);

/// Nonzero components in lexicographic index order, rationals as strings.
/// Antisymmetric ranks emit the canonical representative only (a < b for
/// two-forms, a < b < c for three-forms); connections and curvature emit
/// every nonzero entry.
Json two_form_components(const VectorTwoForm& T);
Json three_form_components(const ThreeForm& f);
Json connection_components(const Connection& G);
Json rank4_components(const Rank4Table& R);
Json matrix_components(const SquareMatrix& M);

Json tpoly_json(const TPoly& p);
Json tpoly3_components(const TPolyTensor3& P); // a < b representatives
Json tpoly4_components(const TPolyTensor4& P); // every nonzero entry

} // namespace lieherm
