#include "lieherm/connection.hpp"

namespace lieherm {

namespace {
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);
} // namespace

AlphaForm::AlphaForm(VectorTwoForm v) : v_(std::move(v)) {
  const int n = v_.n();
  if (!v_.is_antisymmetric())
    throw ValidationError("alpha is not antisymmetric in its lower indices");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int c = 1; c <= 2 * n; ++c) {
        if (v_(i, j, c) != v_(n + i, n + j, c))
          throw NotType11("alpha^c_ij != alpha^c_{n+i,n+j} at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(c) + ")",
                          i, j, c);
        if (v_(i, n + j, c) != -v_(n + i, j, c))
          throw NotType11("alpha^c_{i,n+j} != -alpha^c_{n+i,j} at (" +
                              std::to_string(i) + "," + std::to_string(n + j) +
                              "," + std::to_string(c) + ")",
                          i, n + j, c);
      }
}

ThreeForm alpha_plus(const AlphaForm& alpha) {
  const int n = alpha.n();
  ThreeForm out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b)
      for (int c = b + 1; c <= 2 * n; ++c)
        out.set_triple(a, b, c,
                       alpha(a, b, c) + alpha(b, c, a) + alpha(c, a, b));
  return out;
}

VectorTwoForm hermitian_torsion(const AlmostHermitianAlgebra& A,
                                const AlphaForm& alpha) {
  const int n = A.n();
  const Rational &h = kHalf, &q = kQuarter;
  const auto& al = alpha.form();
  auto c = [&A](int a, int b, int cc) -> const Rational& {
    return A.c(a, b, cc);
  };
  VectorTwoForm T(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        T.at_raw(i, j, k) =
            -h * c(i, j, k) - q * c(i, k, j) + q * c(j, k, i) +
            h * c(n + i, n + j, k) + q * c(n + j, n + k, i) +
            q * c(n + k, n + i, j) + q * c(j, n + k, n + i) +
            q * c(n + k, i, n + j) + q * c(k, n + j, n + i) -
            q * c(k, n + i, n + j) + al(i, j, k) + h * al(j, k, i) +
            h * al(k, i, j) - h * al(n + j, k, n + i) - h * al(k, n + i, n + j);
        T.at_raw(i, j, n + k) =
            -h * c(i, j, n + k) + h * c(n + i, n + j, n + k) -
            q * c(k, n + i, j) - q * c(n + j, k, i) - q * c(i, n + k, j) +
            q * c(n + k, n + j, n + i) + q * c(j, n + k, i) -
            q * c(n + k, n + i, n + j) - q * c(k, i, n + j) -
            q * c(j, k, n + i) + al(i, j, n + k) + h * al(j, n + k, i) +
            h * al(n + k, i, j) - h * al(n + j, n + k, n + i) -
            h * al(n + k, n + i, n + j);
        T.at_raw(i, n + j, k) =
            -h * c(n + i, j, k) - h * c(i, n + j, k) -
            q * c(n + i, n + k, n + j) + q * c(n + k, j, i) +
            q * c(n + j, n + k, n + i) - q * c(n + k, i, j) -
            q * c(k, n + j, i) - q * c(n + i, k, j) - q * c(i, k, n + j) -
            q * c(k, j, n + i) + al(i, n + j, k) + h * al(n + j, k, i) +
            h * al(k, i, n + j) + h * al(j, k, n + i) + h * al(k, n + i, j);
        T.at_raw(i, n + j, n + k) =
            -h * c(n + i, j, n + k) - h * c(i, n + j, n + k) + q * c(j, k, i) -
            q * c(k, n + i, n + j) + q * c(n + j, n + k, i) +
            q * c(n + k, n + i, j) + q * c(k, i, j) - q * c(n + j, k, n + i) -
            q * c(i, n + k, n + j) - q * c(n + k, j, n + i) +
            al(i, n + j, n + k) + h * al(n + j, n + k, i) +
            h * al(n + k, i, n + j) + h * al(j, n + k, n + i) +
            h * al(n + k, n + i, j);
        T.at_raw(n + i, n + j, k) =
            -h * c(n + i, n + j, k) + h * c(i, j, k) - q * c(n + j, n + k, i) -
            q * c(n + k, n + i, j) - q * c(j, n + k, n + i) -
            q * c(n + k, i, n + j) - q * c(k, n + j, n + i) + q * c(i, k, j) +
            q * c(k, j, i) + q * c(k, n + i, n + j) + al(n + i, n + j, k) +
            h * al(n + i, n + k, j) + h * al(n + k, j, n + i) +
            h * al(i, n + k, n + j) + h * al(n + k, n + j, i);
        T.at_raw(n + i, n + j, n + k) =
            -h * c(n + i, n + j, n + k) + h * c(i, j, n + k) +
            q * c(n + j, k, i) + q * c(k, n + i, j) + q * c(j, k, n + i) +
            q * c(k, i, n + j) + q * c(n + j, n + k, n + i) -
            q * c(n + k, i, j) - q * c(j, n + k, i) +
            q * c(n + k, n + i, n + j) + al(n + i, n + j, n + k) +
            h * al(n + j, n + k, n + i) + h * al(n + k, n + i, n + j) -
            h * al(j, n + k, i) - h * al(n + k, i, j);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int cc = 1; cc <= 2 * n; ++cc)
        T.at_raw(n + i, j, cc) = -T(j, n + i, cc);
  return T;
}

VectorTwoForm hermitian_torsion_general(const AlmostHermitianAlgebra& A,
                                        const AlphaForm& alpha) {
  const int n = A.n();
  const VectorTwoForm N = nijenhuis(A);
  const ThreeForm dwp = d_omega_plus(A);
  const ThreeForm ap = alpha_plus(alpha);
  VectorTwoForm T(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        Rational v = -kQuarter * N(a, b, c);
        v -= kHalf * Rational(ja.sign * jb.sign * jc.sign) *
             dwp(ja.index, jb.index, jc.index);
        v += kHalf * Rational(jc.sign) * dwp(a, b, jc.index);
        v += kHalf * ap(a, b, c);
        v -= kHalf * Rational(ja.sign * jb.sign) * ap(ja.index, jb.index, c);
        v += alpha(a, b, c);
        T.at_raw(a, b, c) = v;
      }
  return T;
}

AlphaForm gauduchon_alpha(const AlmostHermitianAlgebra& A, const Rational& t) {
  const int n = A.n();
  const ThreeForm dwp = d_omega_plus(A);
  const Rational t4 = t / 4;
  VectorTwoForm v(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        v.at_raw(a, b, c) = t4 * Rational(ja.sign * jb.sign * jc.sign) *
                                dwp(ja.index, jb.index, jc.index) +
                            t4 * Rational(jc.sign) * dwp(a, b, jc.index);
      }
  return AlphaForm(std::move(v));
}

VectorTwoForm gauduchon_torsion(const AlmostHermitianAlgebra& A,
                                const Rational& t) {
  const int n = A.n();
  const Rational &h = kHalf, &q = kQuarter;
  const Rational tq = t / 4;
  const Rational c1 = (1 - t) / 4, c1h = (1 - t) / 2;
  const Rational c2 = (t - 1) / 4, c2h = (t - 1) / 2;
  const Rational c3 = (1 - 2 * t) / 4, c4 = (2 * t - 1) / 4;
  auto c = [&A](int a, int b, int cc) -> const Rational& {
    return A.c(a, b, cc);
  };
  VectorTwoForm T(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        T.at_raw(i, j, k) =
            tq * c(n + i, j, n + k) + tq * c(i, n + j, n + k) - h * c(i, j, k) +
            c1h * c(n + i, n + j, k) + q * c(j, n + k, n + i) +
            q * c(n + k, i, n + j) + c3 * c(n + j, n + k, i) +
            c3 * c(n + k, n + i, j) + c1 * c(j, k, i) + c2 * c(k, n + i, n + j) +
            c2 * c(i, k, j) + c1 * c(k, n + j, n + i);
        T.at_raw(i, j, n + k) =
            c3 * c(n + i, k, j) + c4 * c(n + j, k, i) +
            c1h * c(n + i, n + j, n + k) + c1 * c(n + i, n + k, n + j) +
            c2 * c(n + j, n + k, n + i) - tq * c(i, n + j, k) +
            c2 * c(i, n + k, j) + c1 * c(j, n + k, i) - tq * c(n + i, j, k) -
            h * c(i, j, n + k) + q * c(i, k, n + j) - q * c(j, k, n + i);
        T.at_raw(i, n + j, k) =
            c1 * c(n + j, k, i) + tq * c(n + i, n + j, n + k) +
            c4 * c(n + i, n + k, n + j) - tq * c(i, j, n + k) +
            c2 * c(i, k, n + j) + c1 * c(j, k, n + i) + c4 * c(j, n + k, i) +
            c2h * c(n + i, j, k) + c2 * c(n + i, k, j) +
            q * c(n + j, n + k, n + i) - h * c(i, n + j, k) +
            q * c(i, n + k, j);
        T.at_raw(i, n + j, n + k) =
            -tq * c(n + i, n + j, k) + c2 * c(n + i, n + k, j) +
            c1 * c(n + j, n + k, i) + tq * c(i, j, k) + c3 * c(j, k, i) +
            c2 * c(i, n + k, n + j) + c1 * c(j, n + k, n + i) +
            c2h * c(n + i, j, n + k) + c3 * c(n + i, k, n + j) -
            h * c(i, n + j, n + k) - q * c(i, k, j) - q * c(n + j, k, n + i);
        T.at_raw(n + i, n + j, k) =
            c1 * c(n + j, k, n + i) + c1h * c(i, j, k) + c1 * c(i, k, j) +
            c2 * c(j, k, i) - tq * c(i, n + j, n + k) + c3 * c(i, n + k, n + j) +
            c4 * c(j, n + k, n + i) - tq * c(n + i, j, n + k) +
            c2 * c(n + i, k, n + j) - h * c(n + i, n + j, k) +
            q * c(n + i, n + k, j) - q * c(n + j, n + k, i);
        T.at_raw(n + i, n + j, n + k) =
            c2 * c(n + i, n + k, n + j) + c1 * c(n + j, n + k, n + i) +
            c1h * c(i, j, n + k) + c4 * c(i, k, n + j) + tq * c(i, n + j, k) +
            c1 * c(i, n + k, j) + c3 * c(j, k, n + i) + c2 * c(j, n + k, i) +
            tq * c(n + i, j, k) + q * c(n + j, k, i) -
            h * c(n + i, n + j, n + k) - q * c(n + i, k, j);
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int cc = 1; cc <= 2 * n; ++cc)
        T.at_raw(n + i, j, cc) = -T(j, n + i, cc);
  return T;
}

TPolyTensor3 gauduchon_torsion_poly(const AlmostHermitianAlgebra& A) {
  const int d = A.dim();
  const VectorTwoForm t0 = gauduchon_torsion(A, 0);
  const VectorTwoForm t1 = gauduchon_torsion(A, 1);
  TPolyTensor3 P(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        P.at(a, b, c) = interpolate_affine(t0(a, b, c), t1(a, b, c));
  return P;
}

VectorTwoForm chern_theta(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  const ThreeForm dwp = d_omega_plus(A);
  VectorTwoForm out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        out.at_raw(a, b, c) =
            kHalf * (Rational(jc.sign) * dwp(a, b, jc.index) -
                     Rational(ja.sign * jb.sign * jc.sign) *
                         dwp(ja.index, jb.index, jc.index));
      }
  return out;
}

VectorTwoForm bismut_theta(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  const ThreeForm dwp = d_omega_plus(A);
  VectorTwoForm out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        out.at_raw(a, b, c) = Rational(ja.sign * jb.sign * jc.sign) *
                              dwp(ja.index, jb.index, jc.index);
      }
  return out;
}

Connection connection_from_torsion(const AlmostHermitianAlgebra& A,
                                   const VectorTwoForm& T) {
  const int d = A.dim();
  if (T.dim() != d)
    throw DimensionMismatch("torsion dimension does not match algebra");
  Connection G(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        G.at(a, b, c) = kHalf * (A.c(a, b, c) - A.c(b, c, a) - A.c(a, c, b) +
                                 T(a, b, c) - T(b, c, a) - T(a, c, b));
  return G;
}

HatTensor hat_transform(const Rank3Table& H) {
  const int d = H.dim();
  HatTensor out(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        out.at(a, b, c) = kHalf * (H(a, b, c) - H(b, c, a) - H(a, c, b));
  return out;
}

AlphaForm trivial_alpha(const AlmostHermitianAlgebra& A) {
  if (!is_product_with_abelian(A.base()))
    throw NotProductForm("algebra is not a product with an abelian factor");
  const int n = A.n();
  VectorTwoForm v(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        v.at_raw(i, j, k) = -kHalf * A.c(i, j, k);
        v.at_raw(n + i, n + j, k) = -kHalf * A.c(i, j, k);
      }
  return AlphaForm(std::move(v));
}

bool verify_metric_compat(const Connection& G) {
  const int d = G.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (G(a, b, c) + G(a, c, b) != 0) return false;
  return true;
}

bool verify_J_parallel(const Connection& G) {
  const int d = G.dim();
  if (d % 2 != 0) throw OddDimension("connection is not on a standard frame");
  const int n = d / 2;
  for (int a = 1; a <= d; ++a)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (G(a, n + j, k) + G(a, j, n + k) != 0) return false;
        if (G(a, n + j, n + k) - G(a, j, k) != 0) return false;
      }
  return true;
}

bool verify_hermitian_torsion_conditions(const AlmostHermitianAlgebra& A,
                                         const VectorTwoForm& T) {
  const int n = A.n();
  if (T.dim() != A.dim())
    throw DimensionMismatch("torsion dimension does not match algebra");
  const VectorTwoForm N = nijenhuis(A);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (-T(n + i, j, n + k) - T(i, n + j, n + k) + T(i, j, k) -
                T(n + i, n + j, k) + N(i, j, k) !=
            0)
          return false;
        if (T(n + i, j, k) + T(i, n + j, k) + T(i, j, n + k) -
                T(n + i, n + j, n + k) + N(i, j, n + k) !=
            0)
          return false;
        if (A.c(i, j, n + k) + A.c(j, k, n + i) + A.c(k, i, n + j) !=
            -T(i, j, n + k) - T(j, k, n + i) - T(k, i, n + j))
          return false;
        if (-A.c(i, j, k) + A.c(j, n + k, n + i) + A.c(n + k, i, n + j) !=
            T(i, j, k) - T(j, n + k, n + i) - T(n + k, i, n + j))
          return false;
        if (-A.c(i, n + j, k) + A.c(n + j, n + k, n + i) - A.c(n + k, i, j) !=
            T(i, n + j, k) - T(n + j, n + k, n + i) + T(n + k, i, j))
          return false;
        if (-A.c(n + i, n + j, k) - A.c(n + j, n + k, i) -
                A.c(n + k, n + i, j) !=
            T(n + i, n + j, k) + T(n + j, n + k, i) + T(n + k, n + i, j))
          return false;
      }
  return true;
}

AlphaForm torsion_11_part(const VectorTwoForm& T) {
  const int n = T.n();
  VectorTwoForm v(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b);
        v.at_raw(a, b, c) =
            kHalf * (T(a, b, c) +
                     Rational(ja.sign * jb.sign) * T(ja.index, jb.index, c));
      }
  return AlphaForm(std::move(v));
}

VectorTwoForm bismut_simplified_torsion(const AlmostHermitianAlgebra& A) {
  const int n = A.n();
  const VectorTwoForm N = nijenhuis(A);
  if (const auto w = totally_skew_witness(N))
    throw NijenhuisNotSkew("Nijenhuis tensor is not totally skew at (" +
                           std::to_string((*w)[0]) + "," +
                           std::to_string((*w)[1]) + "," +
                           std::to_string((*w)[2]) + ")");
  const ThreeForm dw = d_omega(A);
  VectorTwoForm T(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int c = 1; c <= 2 * n; ++c) {
        const JImage ja = apply_J(n, a), jb = apply_J(n, b), jc = apply_J(n, c);
        T.at_raw(a, b, c) = Rational(ja.sign * jb.sign * jc.sign) *
                                dw(ja.index, jb.index, jc.index) -
                            N(a, b, c);
      }
  return T;
}

} // namespace lieherm
