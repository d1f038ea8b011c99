#include "lieherm/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lieherm {

namespace {
constexpr int kMaxDim = 64;
}

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketEntry>& entries,
                       std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim >= 1 ? dim : 1) {
  if (dim < 1 || dim > kMaxDim)
    throw ValidationError("algebra dimension must be in 1.." +
                          std::to_string(kMaxDim));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    if (e.a < 1 || e.a > dim || e.b < 1 || e.b > dim || e.c < 1 || e.c > dim)
      throw IndexOutOfRange("bracket entry index out of range");
    if (e.a == e.b)
      throw DiagonalBracket("bracket entry has a == b");
    if (e.a > e.b)
      throw ValidationError("bracket entries must have a < b");
    if (!seen.insert({e.a, e.b, e.c}).second)
      throw DuplicateEntry("duplicate bracket entry (" + std::to_string(e.a) +
                           "," + std::to_string(e.b) + "," +
                           std::to_string(e.c) + ")");
    c_.at(e.a, e.b, e.c) = e.value;
    c_.at(e.b, e.a, e.c) = -e.value;
  }
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (int a = 1; a <= dim_; ++a)
    for (int b = a + 1; b <= dim_; ++b)
      for (int c = 1; c <= dim_; ++c)
        if (c_(a, b, c) != 0) out.push_back({a, b, c, c_(a, b, c)});
  return out;
}

Rank4Table jacobi_defect(const LieAlgebra& L) {
  const int d = L.dim();
  Rank4Table J(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        for (int l = 1; l <= d; ++l) {
          Rational s = 0;
          for (int p = 1; p <= d; ++p)
            s += L.c(a, b, p) * L.c(p, c, l) + L.c(b, c, p) * L.c(p, a, l) +
                 L.c(c, a, p) * L.c(p, b, l);
          J.at(a, b, c, l) = s;
        }
  return J;
}

std::optional<std::array<int, 4>> jacobi_witness(const LieAlgebra& L) {
  const int d = L.dim();
  std::vector<Rational> v(d + 1);
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c) {
        std::fill(v.begin(), v.end(), Rational(0));
        for (int p = 1; p <= d; ++p) {
          if (L.c(a, b, p) != 0)
            for (int l = 1; l <= d; ++l) v[l] += L.c(a, b, p) * L.c(p, c, l);
          if (L.c(b, c, p) != 0)
            for (int l = 1; l <= d; ++l) v[l] += L.c(b, c, p) * L.c(p, a, l);
          if (L.c(c, a, p) != 0)
            for (int l = 1; l <= d; ++l) v[l] += L.c(c, a, p) * L.c(p, b, l);
        }
        for (int l = 1; l <= d; ++l)
          if (v[l] != 0) return std::array<int, 4>{a, b, c, l};
      }
  return std::nullopt;
}

bool jacobi_holds(const LieAlgebra& L) { return !jacobi_witness(L); }

LieAlgebra product_with_abelian(const LieAlgebra& H) {
  if (!jacobi_holds(H))
    throw JacobiViolation("factor algebra violates the Jacobi identity");
  const int n = H.dim();
  std::vector<BracketEntry> entries = H.entries();
  return LieAlgebra(2 * n, entries, H.name() + "xR" + std::to_string(n));
}

bool is_product_with_abelian(const LieAlgebra& L) {
  if (L.dim() % 2 != 0) return false;
  const int n = L.dim() / 2;
  const int d = L.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if ((a > n || b > n || c > n) && L.c(a, b, c) != 0) return false;
  return true;
}

SquareMatrix killing_form(const LieAlgebra& L) {
  const int d = L.dim();
  SquareMatrix K(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b) {
      Rational s = 0;
      for (int p = 1; p <= d; ++p)
        for (int q = 1; q <= d; ++q) s += L.c(a, q, p) * L.c(b, p, q);
      K.at(a, b) = s;
    }
  return K;
}

bool check_biinvariant_frame(const LieAlgebra& L) {
  const int d = L.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        if (L.c(i, j, k) != -L.c(i, k, j)) return false;
  return true;
}

LieAlgebra catalog(const std::string& name) {
  if (name.rfind("abelian", 0) == 0) {
    const std::string tail = name.substr(7);
    if (!tail.empty() && detail::is_integer_token(tail) && tail[0] != '-') {
      int d = 0;
      for (char ch : tail) {
        d = d * 10 + (ch - '0');
        if (d > kMaxDim) throw UnknownName("unknown catalog algebra: " + name);
      }
      if (d >= 1) return LieAlgebra(d, {}, name);
    }
    throw UnknownName("unknown catalog algebra: " + name);
  }
  if (name == "abdo4") {
    return LieAlgebra(4,
                      {{1, 2, 2, 1},
                       {1, 3, 2, 1},
                       {1, 3, 3, 1},
                       {1, 4, 3, 1},
                       {1, 4, 4, 1}},
                      name);
  }
  if (name == "so3") {
    return LieAlgebra(3, {{1, 2, 3, -1}, {1, 3, 2, 1}, {2, 3, 1, -1}}, name);
  }
  if (name == "so3xR3") return product_with_abelian(catalog("so3"));
  throw UnknownName("unknown catalog algebra: " + name);
}

FrameChange::FrameChange(SquareMatrix K) : n_(K.dim() / 2), k_(std::move(K)) {
  const int d = k_.dim();
  if (d % 2 != 0)
    throw OddDimension("frame change matrix must have even dimension");
  const int n = d / 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (k_(i, j) != k_(n + i, n + j) || k_(i, n + j) != -k_(n + i, j))
        throw NotUnitary("frame change does not commute with J");
    }
  for (int p = 1; p <= d; ++p)
    for (int q = p; q <= d; ++q) {
      Rational s = 0;
      for (int a = 1; a <= d; ++a) s += k_(a, p) * k_(a, q);
      if (s != Rational(p == q ? 1 : 0))
        throw NotUnitary("frame change columns are not orthonormal");
    }
}

LieAlgebra frame_change(const LieAlgebra& L, const FrameChange& K) {
  const int d = L.dim();
  if (d != K.dim())
    throw DimensionMismatch("frame change dimension does not match algebra");
  // Contract one slot at a time.
  Rank3Table t1(d); // t1(c, p, b) = sum_a K_ap C^c_ab
  for (int c = 1; c <= d; ++c)
    for (int p = 1; p <= d; ++p)
      for (int b = 1; b <= d; ++b) {
        Rational s = 0;
        for (int a = 1; a <= d; ++a) s += K(a, p) * L.c(a, b, c);
        t1.at(c, p, b) = s;
      }
  Rank3Table t2(d); // t2(c, p, q) = sum_b K_bq t1(c, p, b)
  for (int c = 1; c <= d; ++c)
    for (int p = 1; p <= d; ++p)
      for (int q = 1; q <= d; ++q) {
        Rational s = 0;
        for (int b = 1; b <= d; ++b) s += K(b, q) * t1(c, p, b);
        t2.at(c, p, q) = s;
      }
  std::vector<BracketEntry> entries;
  for (int p = 1; p <= d; ++p)
    for (int q = p + 1; q <= d; ++q)
      for (int r = 1; r <= d; ++r) {
        Rational s = 0;
        for (int c = 1; c <= d; ++c) s += K(c, r) * t2(c, p, q);
        if (s != 0) entries.push_back({p, q, r, s});
      }
  return LieAlgebra(d, entries, L.name());
}

} // namespace lieherm
