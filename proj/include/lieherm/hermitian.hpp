#ifndef LIEHERM_HERMITIAN_HPP
#define LIEHERM_HERMITIAN_HPP

#include "lieherm/lie_algebra.hpp"

namespace lieherm {

/// A Lie algebra of even dimension 2n carrying the standard almost Hermitian
/// structure: g = identity pairing on the frame, J e_i = e_{n+i},
/// J e_{n+i} = -e_i, omega = <J., .>. Construction requires the Jacobi
/// identity to hold.
class AlmostHermitianAlgebra {
public:
  explicit AlmostHermitianAlgebra(LieAlgebra base);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const LieAlgebra& base() const { return base_; }
  const std::string& name() const { return base_.name(); }
  const Rational& c(int a, int b, int c) const { return base_.c(a, b, c); }

private:
  LieAlgebra base_;
  int n_;
};

/// Nijenhuis tensor N(X,Y) = J[JX,Y] + J[X,JY] + [X,Y] - [JX,JY], scaled so
/// that the usual N_J equals 4N. Components over the full frame.
VectorTwoForm nijenhuis(const AlmostHermitianAlgebra& A);

bool is_integrable(const AlmostHermitianAlgebra& A);
bool is_kahler(const AlmostHermitianAlgebra& A);

/// Whether g(N(X,Y),Z) is totally antisymmetric.
bool nijenhuis_is_totally_skew(const AlmostHermitianAlgebra& A);

/// Exterior derivative of the fundamental form as a three-form on the frame.
ThreeForm d_omega(const AlmostHermitianAlgebra& A);

/// (2,1)+(1,2) projection of a three-form:
/// eta+(X,Y,Z) = 1/4 [3 eta(X,Y,Z) + eta(JX,JY,Z) + eta(JX,Y,JZ) + eta(X,JY,JZ)].
ThreeForm eta_plus(const ThreeForm& eta);

/// (2,1)+(1,2) part of d_omega, computed by closed-form blocks in the
/// structure constants (not by projecting d_omega).
ThreeForm d_omega_plus(const AlmostHermitianAlgebra& A);

/// theta_J(X,Y) = J theta(JX,Y) + J theta(X,JY) + theta(X,Y) - theta(JX,JY).
VectorTwoForm theta_J(const VectorTwoForm& theta);

} // namespace lieherm

#endif
