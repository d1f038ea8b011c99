#include "lieherm/hermitian.hpp"

namespace lieherm {

AlmostHermitianAlgebra::AlmostHermitianAlgebra(LieAlgebra base)
    : base_(std::move(base)), n_(base_.dim() / 2) {
  if (base_.dim() % 2 != 0)
    throw OddDimension("standard frame needs even dimension");
  if (!jacobi_holds(base_))
    throw JacobiViolation("algebra violates the Jacobi identity");
}

VectorTwoForm nijenhuis(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  VectorTwoForm N(n);
  // Target components over 1 <= i,j <= n first.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        N.at_raw(i, j, k) = -A.c(n + i, j, n + k) - A.c(i, n + j, n + k) +
                            A.c(i, j, k) - A.c(n + i, n + j, k);
        N.at_raw(i, j, n + k) = A.c(n + i, j, k) + A.c(i, n + j, k) +
                                A.c(i, j, n + k) - A.c(n + i, n + j, n + k);
      }
  // Extend by N(JX,Y) = N(X,JY) = -J N(X,Y) and N(JX,JY) = -N(X,Y).
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        N.at_raw(n + i, j, k) = N(i, j, n + k);
        N.at_raw(n + i, j, n + k) = -N(i, j, k);
        N.at_raw(i, n + j, k) = N(i, j, n + k);
        N.at_raw(i, n + j, n + k) = -N(i, j, k);
        N.at_raw(n + i, n + j, k) = -N(i, j, k);
        N.at_raw(n + i, n + j, n + k) = -N(i, j, n + k);
      }
  return N;
}

bool is_integrable(const AlmostHermitianAlgebra& A) {
  return nijenhuis(A).is_zero();
}

bool is_kahler(const AlmostHermitianAlgebra& A) {
  return is_integrable(A) && d_omega(A).is_zero();
}

bool nijenhuis_is_totally_skew(const AlmostHermitianAlgebra& A) {
  return !totally_skew_witness(nijenhuis(A)).has_value();
}

ThreeForm d_omega(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  ThreeForm w(n);
  // Every sorted triple a < b < c falls into exactly one of four shapes.
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b)
      for (int c = b + 1; c <= 2 * n; ++c) {
        Rational v;
        if (c <= n) {
          const int i = a, j = b, k = c;
          v = A.c(i, j, n + k) + A.c(j, k, n + i) + A.c(k, i, n + j);
        } else if (b <= n) {
          const int i = a, j = b, k = c - n;
          v = -A.c(i, j, k) + A.c(j, n + k, n + i) + A.c(n + k, i, n + j);
        } else if (a <= n) {
          const int i = a, j = b - n, k = c - n;
          v = -A.c(i, n + j, k) + A.c(n + j, n + k, n + i) - A.c(n + k, i, j);
        } else {
          const int i = a - n, j = b - n, k = c - n;
          v = -A.c(n + i, n + j, k) - A.c(n + j, n + k, i) - A.c(n + k, n + i, j);
        }
        w.set_triple(a, b, c, v);
      }
  return w;
}

ThreeForm eta_plus(const ThreeForm& eta) {
  const int n = eta.n();
  ThreeForm out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b)
      for (int c = b + 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        Rational v = 3 * eta(a, b, c);
        v += ja.sign * jb.sign * eta(ja.index, jb.index, c);
        v += ja.sign * jc.sign * eta(ja.index, b, jc.index);
        v += jb.sign * jc.sign * eta(a, jb.index, jc.index);
        out.set_triple(a, b, c, v / 4);
      }
  return out;
}

ThreeForm d_omega_plus(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  ThreeForm w(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b)
      for (int c = b + 1; c <= 2 * n; ++c) {
        Rational v;
        if (c <= n) {
          const int i = a, j = b, k = c;
          v = 3 * A.c(i, j, n + k) + 3 * A.c(j, k, n + i) + 3 * A.c(k, i, n + j) +
              A.c(k, n + j, i) - A.c(n + j, n + i, n + k) + A.c(n + i, k, j) +
              A.c(j, n + i, k) - A.c(n + i, n + k, n + j) + A.c(n + k, j, i) -
              A.c(i, n + j, k) + A.c(n + j, n + k, n + i) - A.c(n + k, i, j);
        } else if (b <= n) {
          const int i = a, j = b, k = c - n;
          v = -3 * A.c(i, j, k) + 3 * A.c(j, n + k, n + i) +
              3 * A.c(n + k, i, n + j) - A.c(n + i, n + j, k) -
              A.c(n + j, n + k, i) - A.c(n + k, n + i, j) + A.c(j, k, i) -
              A.c(k, n + i, n + j) - A.c(n + i, j, n + k) - A.c(i, k, j) +
              A.c(k, n + j, n + i) + A.c(n + j, i, n + k);
        } else if (a <= n) {
          const int i = a, j = b - n, k = c - n;
          v = -3 * A.c(i, n + j, k) + 3 * A.c(n + j, n + k, n + i) -
              3 * A.c(n + k, i, j) - A.c(j, n + i, k) +
              A.c(n + i, n + k, n + j) - A.c(n + k, j, i) + A.c(k, n + i, j) -
              A.c(n + i, n + j, n + k) + A.c(n + j, k, i) + A.c(i, j, n + k) +
              A.c(j, k, n + i) + A.c(k, i, n + j);
        } else {
          const int i = a - n, j = b - n, k = c - n;
          v = -3 * A.c(n + i, n + j, k) - 3 * A.c(n + j, n + k, i) -
              3 * A.c(n + k, n + i, j) - A.c(i, j, k) + A.c(j, n + k, n + i) +
              A.c(n + k, i, n + j) + A.c(i, k, j) - A.c(k, n + j, n + i) -
              A.c(n + j, i, n + k) - A.c(j, k, i) + A.c(k, n + i, n + j) +
              A.c(n + i, j, n + k);
        }
        w.set_triple(a, b, c, v / 4);
      }
  return w;
}

VectorTwoForm theta_J(const VectorTwoForm& theta) {
  const int n = theta.n();
  VectorTwoForm out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        // <J theta(U,V), e_c> = -sc theta^{Jc}_{UV}
        Rational v = -Rational(ja.sign * jc.sign) * theta(ja.index, b, jc.index);
        v += -Rational(jb.sign * jc.sign) * theta(a, jb.index, jc.index);
        v += theta(a, b, c);
        v += -Rational(ja.sign * jb.sign) * theta(ja.index, jb.index, c);
        out.at_raw(a, b, c) = v;
      }
  return out;
}

} // namespace lieherm
