#include "lieherm/curvature.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace lieherm {

namespace {

// Nonzero bracket coefficients (p, C^p_xy) indexed by the ordered pair (x, y).
class BracketIndex {
public:
  explicit BracketIndex(const LieAlgebra& L) : d_(L.dim()) {
    for (int a = 1; a <= d_; ++a)
      for (int b = a + 1; b <= d_; ++b)
        for (int p = 1; p <= d_; ++p)
          if (L.c(a, b, p) != 0) pairs_[{a, b}].emplace_back(p, L.c(a, b, p));
  }

  // beta([e_x,e_y], e_z, e_w)
  Rational pair_with(const ThreeForm& beta, int x, int y, int z,
                     int w) const {
    if (x == y) return 0;
    const bool flip = x > y;
    const auto it = pairs_.find(flip ? std::make_pair(y, x)
                                     : std::make_pair(x, y));
    if (it == pairs_.end()) return 0;
    Rational s = 0;
    for (const auto& [p, v] : it->second) s += v * beta(p, z, w);
    return flip ? Rational(-s) : s;
  }

private:
  int d_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> pairs_;
};

Rational d_beta_entry(const BracketIndex& bi, const ThreeForm& beta, int a,
                      int b, int c, int d) {
  return -bi.pair_with(beta, a, b, c, d) + bi.pair_with(beta, a, c, b, d) -
         bi.pair_with(beta, a, d, b, c) - bi.pair_with(beta, b, c, a, d) +
         bi.pair_with(beta, b, d, a, c) - bi.pair_with(beta, c, d, a, b);
}

} // namespace

Curvature curvature_from_connection(const LieAlgebra& L, const Connection& G) {
  const int d = L.dim();
  if (G.dim() != d)
    throw DimensionMismatch("connection dimension does not match algebra");
  Curvature R(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e) {
          Rational s = 0;
          for (int p = 1; p <= d; ++p)
            s += G(a, p, e) * G(b, c, p) - G(b, p, e) * G(a, c, p) -
                 L.c(a, b, p) * G(p, c, e);
          R.at(a, b, c, e) = s;
        }
  return R;
}

Curvature curvature_via_hats(const LieAlgebra& L, const VectorTwoForm& T) {
  const int d = L.dim();
  if (T.dim() != d)
    throw DimensionMismatch("torsion dimension does not match algebra");
  const HatTensor hc = hat_transform(L.table());
  const HatTensor ht = hat_transform(T.table());
  Curvature R(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e) {
          Rational s = 0;
          for (int p = 1; p <= d; ++p) {
            s += hc(a, p, e) * hc(b, c, p) - hc(b, p, e) * hc(a, c, p) -
                 L.c(a, b, p) * hc(p, c, e);
            s += ht(a, p, e) * ht(b, c, p) - ht(b, p, e) * ht(a, c, p);
            s += hc(a, p, e) * ht(b, c, p) + hc(b, c, p) * ht(a, p, e) -
                 hc(b, p, e) * ht(a, c, p) - ht(b, p, e) * hc(a, c, p) -
                 L.c(a, b, p) * ht(p, c, e);
          }
          R.at(a, b, c, e) = s;
        }
  return R;
}

VectorTwoForm torsion_of_connection(const LieAlgebra& L, const Connection& G) {
  const int d = L.dim();
  if (G.dim() != d)
    throw DimensionMismatch("connection dimension does not match algebra");
  if (d % 2 != 0)
    throw OddDimension("torsion two-form needs an even-dimensional frame");
  VectorTwoForm T(d / 2);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        T.at_raw(a, b, c) = G(a, b, c) - G(b, a, c) - L.c(a, b, c);
  return T;
}

TPolyTensor4 gauduchon_curvature_poly(const AlmostHermitianAlgebra& A) {
  const int d = A.dim();
  std::vector<Curvature> R;
  R.reserve(3);
  for (int t = 0; t <= 2; ++t) {
    const VectorTwoForm T = gauduchon_torsion(A, t);
    const Connection G = connection_from_torsion(A, T);
    R.push_back(curvature_from_connection(A.base(), G));
  }
  TPolyTensor4 P(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e)
          P.at(a, b, c, e) =
              interpolate_quadratic(R[0](a, b, c, e), R[1](a, b, c, e),
                                    R[2](a, b, c, e));
  return P;
}

FlatScanReport flat_t_values(const AlmostHermitianAlgebra& A) {
  const int d = A.dim();
  const TPolyTensor4 P = gauduchon_curvature_poly(A);
  FlatScanReport rep;
  bool any_nonzero = false;
  bool have_candidates = false;
  std::vector<Rational> candidates;
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e) {
          const TPoly& p = P(a, b, c, e);
          if (p.is_zero()) continue;
          any_nonzero = true;
          const auto roots = rational_roots(p);
          if (!roots) {
            const std::array<Rational, 3> tri{p.c0, p.c1, p.c2};
            if (std::find(rep.unresolved_quadratics.begin(),
                          rep.unresolved_quadratics.end(),
                          tri) == rep.unresolved_quadratics.end())
              rep.unresolved_quadratics.push_back(tri);
            continue;
          }
          if (!have_candidates) {
            candidates = *roots;
            have_candidates = true;
          } else {
            std::vector<Rational> keep;
            for (const auto& r : candidates)
              if (std::find(roots->begin(), roots->end(), r) != roots->end())
                keep.push_back(r);
            candidates = std::move(keep);
          }
        }
  if (!any_nonzero) {
    rep.identically_flat = true;
    return rep;
  }
  for (const auto& t : candidates) {
    bool flat = true;
    for (int a = 1; a <= d && flat; ++a)
      for (int b = 1; b <= d && flat; ++b)
        for (int c = 1; c <= d && flat; ++c)
          for (int e = 1; e <= d && flat; ++e)
            if (P(a, b, c, e).eval(t) != 0) flat = false;
    if (flat) rep.rational_roots.push_back(t);
  }
  std::sort(rep.rational_roots.begin(), rep.rational_roots.end());
  return rep;
}

bool compact_product_closed_form_check(const AlmostHermitianAlgebra& A) {
  if (!is_product_with_abelian(A.base()))
    throw NotProductForm("algebra is not a product with an abelian factor");
  if (!check_biinvariant_frame(A.base()))
    throw NotBiinvariantFrame("frame does not satisfy C^k_ij = -C^j_ik");
  const int n = A.n();
  const int d = A.dim();
  const TPolyTensor4 P = gauduchon_curvature_poly(A);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e) {
          TPoly expect;
          const bool base_pair = a <= n && b <= n;
          if (base_pair && c <= n && e <= n) {
            Rational s = 0;
            for (int p = 1; p <= n; ++p) s += A.c(a, b, p) * A.c(p, c, e);
            expect = TPoly(-s / 4, 0, s / 16);
          } else if (base_pair && c > n && e > n) {
            Rational s = 0;
            for (int p = 1; p <= n; ++p)
              s += A.c(a, b, p) * A.c(p, c - n, e - n);
            expect = TPoly(-s / 4, 0, s / 16);
          }
          if (!(P(a, b, c, e) == expect)) return false;
        }
  return true;
}

ThreeForm torsion_three_form(const AlmostHermitianAlgebra& A,
                             const VectorTwoForm& T) {
  if (T.dim() != A.dim())
    throw DimensionMismatch("torsion dimension does not match algebra");
  if (const auto w = totally_skew_witness(T))
    throw NotTotallySkew("torsion is not totally skew at (" +
                             std::to_string((*w)[0]) + "," +
                             std::to_string((*w)[1]) + "," +
                             std::to_string((*w)[2]) + ")",
                         (*w)[0], (*w)[1], (*w)[2]);
  const int d = A.dim();
  ThreeForm beta(A.n());
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c) beta.set_triple(a, b, c, T(a, b, c));
  return beta;
}

Rank4Table d_three_form(const LieAlgebra& L, const ThreeForm& beta) {
  const int d = L.dim();
  if (beta.dim() != d)
    throw DimensionMismatch("form dimension does not match algebra");
  const BracketIndex bi(L);
  Rank4Table out(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int e = 1; e <= d; ++e)
          out.at(a, b, c, e) = d_beta_entry(bi, beta, a, b, c, e);
  return out;
}

SktReport skt_report(const AlmostHermitianAlgebra& A) {
  SktReport rep;
  const VectorTwoForm T = gauduchon_torsion(A, 2);
  if (const auto w = totally_skew_witness(T)) {
    rep.skew_witness = *w;
    return rep;
  }
  rep.torsion_skew = true;
  const int d = A.dim();
  ThreeForm beta(A.n());
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c) beta.set_triple(a, b, c, T(a, b, c));
  const BracketIndex bi(A.base());
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c)
        for (int e = c + 1; e <= d; ++e)
          if (d_beta_entry(bi, beta, a, b, c, e) != 0) {
            rep.dbeta_witness = std::array<int, 4>{a, b, c, e};
            return rep;
          }
  rep.skt = true;
  return rep;
}

bool is_skt(const AlmostHermitianAlgebra& A) { return skt_report(A).skt; }

} // namespace lieherm
