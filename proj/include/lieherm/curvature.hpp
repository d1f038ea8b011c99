#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lieherm/connection.hpp"
#include "lieherm/hermitian.hpp"
#include "lieherm/tpoly.hpp"

namespace lieherm {

using Curvature = Rank4Table;

// R_abcd = <R(e_a,e_b)e_c, e_d> for the left-invariant connection Gamma.
Curvature curvature_from_connection(const LieAlgebra& L, const Connection& G);

// Same curvature through the hat tensors of C and T; must agree with the
// Gamma route when Gamma = connection_from_torsion(L, T).
Curvature curvature_via_hats(const LieAlgebra& L, const VectorTwoForm& T);

// T(Gamma)^c_ab = Gamma^c_ab - Gamma^c_ba - C^c_ab.
VectorTwoForm torsion_of_connection(const LieAlgebra& L, const Connection& G);

// Each entry of the Gauduchon curvature as an exact polynomial in t,
// reconstructed from evaluations at t in {0, 1, 2}.
TPolyTensor4 gauduchon_curvature_poly(const AlmostHermitianAlgebra& A);

struct FlatScanReport {
  bool identically_flat = false;
  std::vector<Rational> rational_roots;
  std::vector<std::array<Rational, 3>> unresolved_quadratics;
};

// Rational t with R^t identically zero, certified by exact re-evaluation.
FlatScanReport flat_t_values(const AlmostHermitianAlgebra& A);

// Checks the product closed form R^t_ijkl = R^t_{ij,n+k,n+l}
// = (t^2/16 - 1/4) sum_p C^p_ij C^l_pk with all other blocks zero.
bool compact_product_closed_form_check(const AlmostHermitianAlgebra& A);

// beta_abc = <T(e_a,e_b), e_c> as a 3-form; requires totally skew T.
ThreeForm torsion_three_form(const AlmostHermitianAlgebra& A,
                             const VectorTwoForm& T);

// Left-invariant exterior derivative of a 3-form.
Rank4Table d_three_form(const LieAlgebra& L, const ThreeForm& beta);

struct SktReport {
  bool skt = false;
  bool torsion_skew = false;
  std::optional<std::array<int, 3>> skew_witness;
  std::optional<std::array<int, 4>> dbeta_witness;
};

SktReport skt_report(const AlmostHermitianAlgebra& A);
bool is_skt(const AlmostHermitianAlgebra& A);

} // namespace lieherm
