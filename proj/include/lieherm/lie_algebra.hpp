#ifndef LIEHERM_LIE_ALGEBRA_HPP
#define LIEHERM_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "lieherm/tensor.hpp"

namespace lieherm {

/// One structure-constant datum C^c_ab = value with a < b.
struct BracketEntry {
  int a;
  int b;
  int c;
  Rational value;
};

/// Finite-dimensional real Lie algebra presented by structure constants on a
/// fixed frame e_1..e_dim. The table stores C^c_ab for all ordered (a, b);
/// C^c_ba = -C^c_ab and C^c_aa = 0 hold by construction. The Jacobi identity
/// is NOT enforced here; query it with jacobi_defect.
class LieAlgebra {
public:
  LieAlgebra(int dim, const std::vector<BracketEntry>& entries,
             std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  /// Structure constant C^c_ab.
  const Rational& c(int a, int b, int c) const { return c_(a, b, c); }

  const Rank3Table& table() const { return c_; }

  /// Canonical a < b entries with nonzero value, in lexicographic order.
  std::vector<BracketEntry> entries() const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

private:
  int dim_;
  std::string name_;
  Rank3Table c_;
};

/// Jacobi defect J^l_abc = sum_p (C^p_ab C^l_pc + C^p_bc C^l_pa + C^p_ca C^l_pb),
/// indexed (a, b, c, l). Zero exactly when the bracket satisfies Jacobi.
Rank4Table jacobi_defect(const LieAlgebra& L);

/// First (a,b,c,l) with a<b<c where the Jacobi defect is nonzero.
std::optional<std::array<int, 4>> jacobi_witness(const LieAlgebra& L);

bool jacobi_holds(const LieAlgebra& L);

/// G = H x R^n with the abelian factor appended: dim doubles, brackets of H
/// are kept on indices 1..n and everything touching an index > n vanishes.
/// Requires H to satisfy Jacobi.
LieAlgebra product_with_abelian(const LieAlgebra& H);

/// Whether the algebra lives on a product H x abelian in the standard frame:
/// C^c_ab = 0 whenever any of a, b, c exceeds dim/2. Requires even dim.
bool is_product_with_abelian(const LieAlgebra& L);

/// Killing form K_ab = tr(ad_a ad_b) = sum_{p,q} C^p_aq C^q_bp.
SquareMatrix killing_form(const LieAlgebra& L);

/// Frame symmetry C^k_ij = -C^j_ik for all triples (the frame is orthonormal
/// for an ad-invariant inner product).
bool check_biinvariant_frame(const LieAlgebra& L);

/// Named algebras: "abelian<d>", "abdo4", "so3", "so3xR3".
LieAlgebra catalog(const std::string& name);

/// Exact unitary change of frame on a 2n-dimensional standard frame. K is
/// orthogonal with the block form [[A, -B], [B, A]], so it preserves both the
/// inner product and the complex structure. Column p of K holds the
/// coefficients of the new frame vector e'_p in the old frame.
class FrameChange {
public:
  explicit FrameChange(SquareMatrix K);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const SquareMatrix& matrix() const { return k_; }
  const Rational& operator()(int a, int b) const { return k_(a, b); }

private:
  int n_;
  SquareMatrix k_;
};

/// Structure constants in the new frame: C'^r_pq = sum_{a,b,c} K_ap K_bq K_cr C^c_ab.
LieAlgebra frame_change(const LieAlgebra& L, const FrameChange& K);

} // namespace lieherm

#endif
