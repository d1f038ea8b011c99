#ifndef LIEHERM_CONNECTION_HPP
#define LIEHERM_CONNECTION_HPP

#include "lieherm/hermitian.hpp"
#include "lieherm/tpoly.hpp"

namespace lieherm {

/// A vector-valued two-form of type (1,1): in the standard frame the
/// components satisfy, for 1 <= i,j <= n and 1 <= c <= 2n,
///   (a) alpha^c_ij = alpha^c_{n+i,n+j}
///   (b) alpha^c_{i,n+j} = -alpha^c_{n+i,j}.
/// Each such alpha selects exactly one Hermitian connection.
class AlphaForm {
public:
  /// Validates the (1,1) conditions; throws NotType11 with the first
  /// violating (a, b, c) otherwise.
  explicit AlphaForm(VectorTwoForm v);

  int n() const { return v_.n(); }
  int dim() const { return v_.dim(); }
  const VectorTwoForm& form() const { return v_; }
  const Rational& operator()(int a, int b, int c) const { return v_(a, b, c); }

  bool operator==(const AlphaForm& o) const { return v_ == o.v_; }

private:
  VectorTwoForm v_;
};

/// Cyclic sum alpha+_abc = alpha^c_ab + alpha^a_bc + alpha^b_ca.
ThreeForm alpha_plus(const AlphaForm& alpha);

/// Torsion of the Hermitian connection selected by alpha, via the closed-form
/// component blocks in the structure constants.
VectorTwoForm hermitian_torsion(const AlmostHermitianAlgebra& A,
                                const AlphaForm& alpha);

/// Same torsion via the frame-free formula
///   g(T(X,Y),Z) = -1/4 g(N(X,Y),Z) - 1/2 (dw)+(JX,JY,JZ) + 1/2 (dw)+(X,Y,JZ)
///                 + 1/2 a+(X,Y,Z) - 1/2 a+(JX,JY,Z) + g(a(X,Y),Z)
/// evaluated on every frame triple. Independent implementation kept as a
/// cross-check of the block route.
VectorTwoForm hermitian_torsion_general(const AlmostHermitianAlgebra& A,
                                        const AlphaForm& alpha);

/// The (1,1)-form selecting the t-Gauduchon connection:
/// <alpha^t(X,Y),Z> = t/4 (dw)+(JX,JY,JZ) + t/4 (dw)+(X,Y,JZ).
AlphaForm gauduchon_alpha(const AlmostHermitianAlgebra& A, const Rational& t);

/// Torsion of the t-Gauduchon connection via the t-parameterized component
/// blocks.
VectorTwoForm gauduchon_torsion(const AlmostHermitianAlgebra& A,
                                const Rational& t);

/// Gauduchon torsion as a polynomial family in t (each component is affine).
TPolyTensor3 gauduchon_torsion_poly(const AlmostHermitianAlgebra& A);

/// <theta^c(X,Y),Z> = 1/2 [(dw)+(X,Y,JZ) - (dw)+(JX,JY,JZ)]  (Chern direction).
VectorTwoForm chern_theta(const AlmostHermitianAlgebra& A);

/// <theta^b(X,Y),Z> = (dw)+(JX,JY,JZ)  (Bismut direction).
VectorTwoForm bismut_theta(const AlmostHermitianAlgebra& A);

/// Connection coefficients from a torsion candidate:
/// Gamma^c_ab = 1/2 (C^c_ab - C^a_bc - C^b_ac + T^c_ab - T^a_bc - T^b_ac).
Connection connection_from_torsion(const AlmostHermitianAlgebra& A,
                                   const VectorTwoForm& T);

/// Hat transform H^c_ab -> 1/2 (H^c_ab - H^a_bc - H^b_ac).
HatTensor hat_transform(const Rank3Table& H);

/// The alpha selecting the trivial connection on a product-with-abelian
/// algebra: alpha^k_ij = alpha^k_{n+i,n+j} = -1/2 C^k_ij, everything else 0.
/// Throws NotProductForm when the algebra is not in product form.
AlphaForm trivial_alpha(const AlmostHermitianAlgebra& A);

/// Gamma^c_ab + Gamma^b_ac = 0 for all a, b, c.
bool verify_metric_compat(const Connection& G);

/// Gamma^k_{a,n+j} + Gamma^{n+k}_{aj} = 0 and
/// Gamma^{n+k}_{a,n+j} - Gamma^k_{aj} = 0 for 1 <= a <= 2n, 1 <= j,k <= n.
bool verify_J_parallel(const Connection& G);

/// The six component equation families a Hermitian torsion must satisfy
/// (two from T_J + N = 0, four from the d-omega cyclic identity).
bool verify_hermitian_torsion_conditions(const AlmostHermitianAlgebra& A,
                                         const VectorTwoForm& T);

/// (1,1) part of an antisymmetric vector-valued two-form:
/// 1/2 (T(X,Y) + T(JX,JY)). For a Hermitian torsion this recovers its alpha.
AlphaForm torsion_11_part(const VectorTwoForm& T);

/// Torsion of the t=2 connection in the reduced form
/// g(T(X,Y),Z) = dw(JX,JY,JZ) - g(N(X,Y),Z), valid exactly when the
/// Nijenhuis tensor is totally skew. Throws NijenhuisNotSkew otherwise.
VectorTwoForm bismut_simplified_torsion(const AlmostHermitianAlgebra& A);

} // namespace lieherm

#endif
