#ifndef LIEHERM_TENSOR_HPP
#define LIEHERM_TENSOR_HPP

#include <array>
#include <optional>
#include <vector>

#include "lieherm/errors.hpp"
#include "lieherm/rational.hpp"

namespace lieherm {

/// Dense square matrix of exact rationals. Indices are 1-based.
class SquareMatrix {
public:
  explicit SquareMatrix(int dim) : d_(dim), v_(std::size_t(dim) * dim) {
    if (dim < 1) throw ValidationError("matrix dimension must be positive");
  }

  int dim() const { return d_; }

  const Rational& operator()(int a, int b) const { return v_[idx(a, b)]; }
  Rational& at(int a, int b) { return v_[idx(a, b)]; }

  bool operator==(const SquareMatrix& o) const { return d_ == o.d_ && v_ == o.v_; }

private:
  std::size_t idx(int a, int b) const {
    if (a < 1 || a > d_ || b < 1 || b > d_)
      throw IndexOutOfRange("matrix index out of range");
    return std::size_t(a - 1) * d_ + (b - 1);
  }

  int d_;
  std::vector<Rational> v_;
};

/// Dense rank-3 table H^c_ab indexed as (a, b, c), no symmetry assumed.
/// Used for connection coefficients and hat transforms. Indices are 1-based.
class Rank3Table {
public:
  explicit Rank3Table(int dim) : d_(dim), v_(std::size_t(dim) * dim * dim) {
    if (dim < 1) throw ValidationError("tensor dimension must be positive");
  }

  int dim() const { return d_; }

  const Rational& operator()(int a, int b, int c) const { return v_[idx(a, b, c)]; }
  Rational& at(int a, int b, int c) { return v_[idx(a, b, c)]; }

  bool is_zero() const {
    for (const auto& x : v_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Rank3Table& o) const { return d_ == o.d_ && v_ == o.v_; }

private:
  std::size_t idx(int a, int b, int c) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || c < 1 || c > d_)
      throw IndexOutOfRange("rank-3 index out of range");
    return (std::size_t(a - 1) * d_ + (b - 1)) * d_ + (c - 1);
  }

  int d_;
  std::vector<Rational> v_;
};

using Connection = Rank3Table;
using HatTensor = Rank3Table;

/// Dense rank-4 table indexed as (a, b, c, d). Indices are 1-based.
class Rank4Table {
public:
  explicit Rank4Table(int dim)
      : d_(dim), v_(std::size_t(dim) * dim * dim * dim) {
    if (dim < 1) throw ValidationError("tensor dimension must be positive");
  }

  int dim() const { return d_; }

  const Rational& operator()(int a, int b, int c, int d) const {
    return v_[idx(a, b, c, d)];
  }
  Rational& at(int a, int b, int c, int d) { return v_[idx(a, b, c, d)]; }

  bool is_zero() const {
    for (const auto& x : v_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Rank4Table& o) const { return d_ == o.d_ && v_ == o.v_; }

private:
  std::size_t idx(int a, int b, int c, int d) const {
    if (a < 1 || a > d_ || b < 1 || b > d_ || c < 1 || c > d_ || d < 1 || d > d_)
      throw IndexOutOfRange("rank-4 index out of range");
    return ((std::size_t(a - 1) * d_ + (b - 1)) * d_ + (c - 1)) * d_ + (d - 1);
  }

  int d_;
  std::vector<Rational> v_;
};

/// Vector-valued two-form on a 2n-dimensional algebra: components
/// theta^c_ab = <theta(e_a,e_b),e_c>, antisymmetric in (a,b).
class VectorTwoForm {
public:
  explicit VectorTwoForm(int n) : n_(n), t_(2 * n) {
    if (n < 1) throw ValidationError("complex dimension must be positive");
  }

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  const Rational& operator()(int a, int b, int c) const { return t_(a, b, c); }

  /// Writes theta^c_ab = v and the mirror theta^c_ba = -v.
  void set_pair(int a, int b, int c, const Rational& v) {
    if (a == b && v != 0)
      throw ValidationError("two-form diagonal component must vanish");
    t_.at(a, b, c) = v;
    if (a != b) t_.at(b, a, c) = -v;
  }

  void add_pair(int a, int b, int c, const Rational& v) {
    set_pair(a, b, c, t_(a, b, c) + v);
  }

  /// Raw write used by block-formula fills; antisymmetry of those fills is
  /// covered by the property tests.
  Rational& at_raw(int a, int b, int c) { return t_.at(a, b, c); }

  const Rank3Table& table() const { return t_; }

  bool is_zero() const { return t_.is_zero(); }

  bool is_antisymmetric() const {
    const int d = dim();
    for (int a = 1; a <= d; ++a)
      for (int b = a; b <= d; ++b)
        for (int c = 1; c <= d; ++c)
          if (t_(a, b, c) != -t_(b, a, c)) return false;
    return true;
  }

  bool operator==(const VectorTwoForm& o) const {
    return n_ == o.n_ && t_ == o.t_;
  }

private:
  int n_;
  Rank3Table t_;
};

/// Totally antisymmetric three-form eta_abc on a 2n-dimensional algebra.
class ThreeForm {
public:
  explicit ThreeForm(int n) : n_(n), t_(2 * n) {
    if (n < 1) throw ValidationError("complex dimension must be positive");
  }

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  const Rational& operator()(int a, int b, int c) const { return t_(a, b, c); }

  /// Writes all six permutations of (a, b, c) with alternating signs.
  /// The indices must be pairwise distinct unless v is zero.
  void set_triple(int a, int b, int c, const Rational& v) {
    if ((a == b || b == c || a == c) && v != 0)
      throw ValidationError("three-form repeated-index component must vanish");
    if (a == b || b == c || a == c) return;
    t_.at(a, b, c) = v;
    t_.at(b, c, a) = v;
    t_.at(c, a, b) = v;
    t_.at(b, a, c) = -v;
    t_.at(a, c, b) = -v;
    t_.at(c, b, a) = -v;
  }

  const Rank3Table& table() const { return t_; }

  bool is_zero() const { return t_.is_zero(); }

  bool is_totally_antisymmetric() const {
    const int d = dim();
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        for (int c = 1; c <= d; ++c) {
          if (t_(a, b, c) != -t_(b, a, c)) return false;
          if (t_(a, b, c) != -t_(a, c, b)) return false;
        }
    return true;
  }

  bool operator==(const ThreeForm& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
  int n_;
  Rank3Table t_;
};

/// Image of a frame index under the standard complex structure:
/// J e_a = sign * e_index.
struct JImage {
  int index;
  int sign;
};

/// J e_i = e_{n+i} for i <= n, J e_{n+i} = -e_i.
inline JImage apply_J(int n, int a) {
  if (a < 1 || a > 2 * n) throw IndexOutOfRange("frame index out of range");
  if (a <= n) return {a + n, 1};
  return {a - n, -1};
}

/// omega(e_a, e_b) = <J e_a, e_b>; values are -1, 0, or 1.
inline int omega_frame(int n, int a, int b) {
  const JImage ja = apply_J(n, a);
  if (b < 1 || b > 2 * n) throw IndexOutOfRange("frame index out of range");
  return (ja.index == b) ? ja.sign : 0;
}

/// First triple (a, b, c) with a < b where <tau(e_a,e_b),e_c> fails the
/// last-two-slot antisymmetry; nullopt when tau is totally skew.
inline std::optional<std::array<int, 3>> totally_skew_witness(
    const VectorTwoForm& tau) {
  const int d = tau.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (tau(a, b, c) != -tau(a, c, b)) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

} // namespace lieherm

#endif
