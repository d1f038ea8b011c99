#ifndef LIEHERM_TPOLY_HPP
#define LIEHERM_TPOLY_HPP

#include <array>
#include <optional>
#include <vector>

#include "lieherm/rational.hpp"

namespace lieherm {

/// Polynomial in the Gauduchon parameter t of degree at most 2, with exact
/// rational coefficients c0 + c1 t + c2 t^2.
struct TPoly {
  Rational c0, c1, c2;

  TPoly() = default;
  TPoly(Rational a0, Rational a1, Rational a2)
      : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}

  Rational eval(const Rational& t) const { return c0 + t * (c1 + t * c2); }

  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }

  int degree() const {
    if (c2 != 0) return 2;
    if (c1 != 0) return 1;
    if (c0 != 0) return 0;
    return -1;
  }

  bool operator==(const TPoly& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }
};

/// Exact rational roots. For degree 2 this resolves only when the
/// discriminant is a perfect square of a rational; otherwise nullopt
/// (the polynomial has no rational roots or they cannot be certified).
/// Degree -1 (zero polynomial) yields nullopt as well: every t is a root.
std::optional<std::vector<Rational>> rational_roots(const TPoly& p);

/// Exact square root of a nonnegative rational if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Degree <= 1 interpolation through (0, v0) and (1, v1).
inline TPoly interpolate_affine(const Rational& v0, const Rational& v1) {
  return TPoly(v0, v1 - v0, 0);
}

/// Degree <= 2 interpolation through (0, v0), (1, v1), (2, v2).
inline TPoly interpolate_quadratic(const Rational& v0, const Rational& v1,
                                   const Rational& v2) {
  // c2 = (v0 - 2 v1 + v2)/2, c1 = (-3 v0 + 4 v1 - v2)/2.
  return TPoly(v0, Rational(-3 * v0 + 4 * v1 - v2) / 2,
               Rational(v0 - 2 * v1 + v2) / 2);
}

/// Dense rank-3 table of t-polynomials, 1-based indices (a, b, c).
class TPolyTensor3 {
public:
  explicit TPolyTensor3(int dim) : d_(dim), v_(std::size_t(dim) * dim * dim) {
    if (dim < 1) throw ValidationError("tensor dimension must be positive");
  }

  int dim() const { return d_; }
  const TPoly& operator()(int a, int b, int c) const { return v_[idx(a, b, c)]; }
  TPoly& at(int a, int b, int c) { return v_[idx(a, b, c)]; }

private:
  std::size_t idx(int a, int b, int c) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || c < 1 || c > d_)
      throw IndexOutOfRange("rank-3 index out of range");
    return (std::size_t(a - 1) * d_ + (b - 1)) * d_ + (c - 1);
  }

  int d_;
  std::vector<TPoly> v_;
};

/// Dense rank-4 table of t-polynomials, 1-based indices (a, b, c, d).
class TPolyTensor4 {
public:
  explicit TPolyTensor4(int dim)
      : d_(dim), v_(std::size_t(dim) * dim * dim * dim) {
    if (dim < 1) throw ValidationError("tensor dimension must be positive");
  }

  int dim() const { return d_; }
  const TPoly& operator()(int a, int b, int c, int d) const {
    return v_[idx(a, b, c, d)];
  }
  TPoly& at(int a, int b, int c, int d) { return v_[idx(a, b, c, d)]; }

private:
  std::size_t idx(int a, int b, int c, int d) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || c < 1 || c > d_ || d < 1 ||
        d > d_)
      throw IndexOutOfRange("rank-4 index out of range");
    return ((std::size_t(a - 1) * d_ + (b - 1)) * d_ + (c - 1)) * d_ + (d - 1);
  }

  int d_;
  std::vector<TPoly> v_;
};

} // namespace lieherm

#endif
