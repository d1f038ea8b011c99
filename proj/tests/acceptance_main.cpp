// Acceptance gate: seven end-to-end criteria, one PASS/FAIL line each,
// everything compared with exact rational arithmetic (tolerance zero).

#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lieherm/connection.hpp"
#include "lieherm/curvature.hpp"
#include "lieherm/hermitian.hpp"
#include "lieherm/lie_algebra.hpp"
#include "lieherm/verify.hpp"
#include "test_support.hpp"

using namespace lieherm;
namespace ts = lieherm::testsupport;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
};

AlmostHermitianAlgebra alg(const char* name) {
  return AlmostHermitianAlgebra(catalog(name));
}

AlmostHermitianAlgebra aff_complex() {
  return AlmostHermitianAlgebra(LieAlgebra(
      4, {{1, 2, 2, 1}, {1, 4, 4, 1}, {2, 3, 4, -1}, {3, 4, 2, -1}}, "affC"));
}

AlphaForm example_alpha() {
  VectorTwoForm v(2);
  v.set_pair(1, 2, 1, 1);
  v.set_pair(3, 4, 1, 1);
  v.set_pair(2, 3, 4, -5);
  v.set_pair(1, 4, 4, -5);
  return AlphaForm(v);
}

struct Comp {
  int a, b, c;
  Rational v;
};

VectorTwoForm two_form_from(int n, const std::vector<Comp>& cs) {
  VectorTwoForm T(n);
  for (const auto& e : cs) T.set_pair(e.a, e.b, e.c, e.v);
  return T;
}

Connection connection_from(int dim, const std::vector<Comp>& cs) {
  Connection G(dim);
  for (const auto& e : cs) G.at(e.a, e.b, e.c) = e.v;
  return G;
}

// ---- criterion 1: dim-4 Hermitian worked example ----

Criterion criterion1() {
  Criterion c;
  const AlmostHermitianAlgebra A = alg("abdo4");
  const VectorTwoForm T = hermitian_torsion(A, example_alpha());
  const VectorTwoForm expectT = two_form_from(
      2, {{1, 2, 1, {3, 4}}, {1, 4, 1, {1, 2}},  {2, 3, 1, {-1, 2}},
          {3, 4, 1, {5, 4}}, {1, 2, 2, {3, 2}},  {3, 4, 2, {-3, 2}},
          {1, 2, 3, {-1, 2}}, {1, 4, 3, {-3, 4}}, {2, 3, 3, {3, 4}},
          {3, 4, 3, {1, 2}}, {1, 4, 4, {-7, 2}}, {2, 3, 4, {-13, 2}}});
  c.require(T == expectT, "torsion components differ");

  const Connection G = connection_from_torsion(A, T);
  const Connection expectG = connection_from(
      4, {{1, 2, 1, {3, 4}},  {1, 4, 1, {1, 2}},  {2, 2, 1, {5, 2}},
          {3, 2, 1, {1, 2}},  {3, 3, 1, 1},       {3, 4, 1, {3, 4}},
          {4, 3, 1, {-1, 2}}, {4, 4, 1, {-5, 2}}, {1, 1, 2, {-3, 4}},
          {1, 3, 2, {1, 2}},  {2, 1, 2, {-5, 2}}, {3, 1, 2, {-1, 2}},
          {3, 3, 2, {3, 4}},  {3, 4, 2, -4},      {4, 3, 2, {-5, 2}},
          {1, 2, 3, {-1, 2}}, {1, 4, 3, {3, 4}},  {2, 4, 3, {5, 2}},
          {3, 1, 3, -1},      {3, 2, 3, {-3, 4}}, {3, 4, 3, {1, 2}},
          {4, 1, 3, {1, 2}},  {4, 2, 3, {5, 2}},  {1, 1, 4, {-1, 2}},
          {1, 3, 4, {-3, 4}}, {2, 3, 4, {-5, 2}}, {3, 1, 4, {-3, 4}},
          {3, 2, 4, 4},       {3, 3, 4, {-1, 2}}, {4, 1, 4, {5, 2}}});
  c.require(G == expectG, "connection coefficients differ");
  return c;
}

// ---- criterion 2: dim-4 Gauduchon t=2 worked example ----

Criterion criterion2() {
  Criterion c;
  const AlmostHermitianAlgebra A = alg("abdo4");
  const VectorTwoForm T = gauduchon_torsion(A, 2);
  const VectorTwoForm expectT = two_form_from(
      2, {{1, 2, 1, {1, 4}}, {2, 3, 1, 1},       {3, 4, 1, {-1, 4}},
          {1, 3, 2, -1},     {3, 4, 2, -2},      {1, 2, 3, 1},
          {1, 4, 3, {-1, 4}}, {2, 3, 3, {1, 4}}, {2, 4, 3, 2},
          {2, 3, 4, -2}});
  c.require(T == expectT, "torsion components differ");

  const Connection G = connection_from_torsion(A, T);
  const Connection expectG = connection_from(
      4, {{1, 2, 1, {1, 4}},  {2, 2, 1, 1},       {2, 3, 1, 1},
          {3, 3, 1, 1},       {3, 4, 1, {1, 4}},  {4, 3, 1, {1, 2}},
          {4, 4, 1, 1},       {1, 1, 2, {-1, 4}}, {2, 1, 2, -1},
          {3, 3, 2, {1, 4}},  {3, 4, 2, -1},      {4, 3, 2, 1},
          {1, 4, 3, {1, 4}},  {2, 1, 3, -1},      {2, 4, 3, 1},
          {3, 1, 3, -1},      {3, 2, 3, {-1, 4}}, {4, 1, 3, {-1, 2}},
          {4, 2, 3, -1},      {1, 3, 4, {-1, 4}}, {2, 3, 4, -1},
          {3, 1, 4, {-1, 4}}, {3, 2, 4, 1},       {4, 1, 4, -1}});
  c.require(G == expectG, "connection coefficients differ");
  c.require(verify_metric_compat(G), "metric compatibility fails");
  c.require(verify_J_parallel(G), "J-parallel equations fail");
  return c;
}

// ---- criterion 3: compact product family ----

Criterion criterion3() {
  Criterion c;
  const AlmostHermitianAlgebra S = alg("so3xR3");
  const int d = S.dim();

  const VectorTwoForm T2 = gauduchon_torsion(S, 2);
  c.require(connection_from_torsion(S, T2).is_zero(),
            "t=2 connection is not trivial");
  bool torsion_is_minus_bracket = true;
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int e = 1; e <= d; ++e)
        if (T2(a, b, e) != -S.c(a, b, e)) torsion_is_minus_bracket = false;
  c.require(torsion_is_minus_bracket, "t=2 torsion is not -C");
  c.require(!totally_skew_witness(T2), "t=2 torsion is not totally skew");

  const ThreeForm beta = torsion_three_form(S, T2);
  c.require(beta(1, 2, 3) == 1, "beta(1,2,3) != 1");
  c.require(d_three_form(S.base(), beta).is_zero(), "beta is not closed");
  c.require(is_skt(S), "SKT check fails");

  const Connection Gm2 =
      connection_from_torsion(S, gauduchon_torsion(S, -2));
  const Connection expectGm2 = connection_from(
      6, {{2, 3, 1, -1}, {3, 2, 1, 1},  {1, 3, 2, 1},  {3, 1, 2, -1},
          {1, 2, 3, -1}, {2, 1, 3, 1},  {2, 6, 4, -1}, {3, 5, 4, 1},
          {1, 6, 5, 1},  {3, 4, 5, -1}, {1, 5, 6, -1}, {2, 4, 6, 1}});
  c.require(Gm2 == expectGm2, "t=-2 connection coefficients differ");

  for (const Rational& t : {Rational(2), Rational(-2)}) {
    const Curvature R = curvature_from_connection(
        S.base(), connection_from_torsion(S, gauduchon_torsion(S, t)));
    c.require(R.is_zero(), "curvature at t=" + rat_str(t) + " is not zero");
  }

  const FlatScanReport rep = flat_t_values(S);
  c.require(!rep.identically_flat && rep.rational_roots.size() == 2 &&
                rep.rational_roots[0] == -2 && rep.rational_roots[1] == 2,
            "flat parameter set is not {-2, 2}");

  const TPolyTensor4 poly = gauduchon_curvature_poly(S);
  const TPoly expected(Rational(-1, 4), 0, Rational(1, 16));
  c.require(poly(1, 2, 1, 2) == expected, "R_{1212}(t) differs");
  c.require(poly(1, 2, 4, 5) == expected, "R_{12,45}(t) differs");
  c.require(compact_product_closed_form_check(S),
            "closed-form curvature check fails");
  return c;
}

// ---- criterion 4: cross-formula equivalence ----

Criterion criterion4() {
  Criterion c;
  std::mt19937 rng(424242);
  std::vector<AlmostHermitianAlgebra> cases = {
      alg("abdo4"), alg("so3xR3"), alg("abelian2"), alg("abelian4"),
      alg("abelian6")};
  int random_pairs = 0;
  for (int round = 0; round < 17 && c.ok; ++round) {
    for (int factor_dim = 2; factor_dim <= 4; ++factor_dim) {
      cases.emplace_back(
          product_with_abelian(ts::random_solvable(factor_dim, rng)));
      cases.emplace_back(ts::random_solvable(2 * factor_dim, rng));
      random_pairs += 2;
    }
  }
  for (const auto& A : cases) {
    if (!c.ok) break;
    const AlphaForm a = ts::random_alpha(A.n(), rng);
    const VectorTwoForm T = hermitian_torsion(A, a);
    c.require(T == hermitian_torsion_general(A, a),
              "torsion formulas disagree on " + A.name());
    c.require(curvature_via_hats(A.base(), T) ==
                  curvature_from_connection(A.base(),
                                            connection_from_torsion(A, T)),
              "curvature formulas disagree on " + A.name());
    c.require(d_omega_plus(A) == eta_plus(d_omega(A)),
              "d_omega projections disagree on " + A.name());
  }
  c.require(random_pairs >= 100, "fewer than 100 randomized pairs");
  return c;
}

// ---- criterion 5: certification battery ----

bool domega_cyclic_condition(const AlmostHermitianAlgebra& A,
                             const VectorTwoForm& T) {
  const ThreeForm dw = d_omega(A);
  const int n = A.n(), d = A.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int e = 1; e <= d; ++e) {
        Rational s = 0;
        for (int p = 1; p <= d; ++p) {
          s += T(a, b, p) * omega_frame(n, p, e);
          s += T(b, e, p) * omega_frame(n, p, a);
          s += T(e, a, p) * omega_frame(n, p, b);
        }
        if (s != dw(a, b, e)) return false;
      }
  return true;
}

bool certify(Criterion& c, const AlmostHermitianAlgebra& A,
             const AlphaForm& alpha, const std::string& tag) {
  const VectorTwoForm T = hermitian_torsion(A, alpha);
  const VectorTwoForm N = nijenhuis(A);
  const Connection G = connection_from_torsion(A, T);
  c.require(verify_metric_compat(G), tag + ": metric compatibility");
  c.require(verify_J_parallel(G), tag + ": J-parallel equations");
  c.require(verify_hermitian_torsion_conditions(A, T),
            tag + ": component equation families");
  const VectorTwoForm TJ = theta_J(T);
  const int d = A.dim();
  for (int x = 1; x <= d; ++x)
    for (int y = 1; y <= d; ++y)
      for (int z = 1; z <= d; ++z)
        if (TJ(x, y, z) + N(x, y, z) != 0) {
          c.require(false, tag + ": theta_J(T) + N != 0");
          return c.ok;
        }
  c.require(domega_cyclic_condition(A, T), tag + ": d-omega cyclic identity");
  c.require(torsion_11_part(T) == alpha, tag + ": alpha recovery");
  return c.ok;
}

Criterion criterion5() {
  Criterion c;
  std::mt19937 rng(55055);
  std::vector<AlmostHermitianAlgebra> cases = {alg("abdo4"), alg("so3xR3"),
                                               alg("abelian4"), aff_complex()};
  for (int i = 0; i < 4; ++i)
    cases.emplace_back(ts::random_solvable(4 + 2 * (i % 2), rng));

  certify(c, alg("abdo4"), example_alpha(), "worked alpha");
  for (const auto& A : cases) {
    if (!c.ok) break;
    for (int k = 0; k < 2 && c.ok; ++k)
      certify(c, A, ts::random_alpha(A.n(), rng), A.name() + "/random alpha");
    for (const Rational& t :
         {Rational(0), Rational(1), Rational(2), Rational(-2),
          Rational(1, 3)}) {
      if (!c.ok) break;
      certify(c, A, gauduchon_alpha(A, t), A.name() + "/t=" + rat_str(t));
      const VectorTwoForm Tt = gauduchon_torsion(A, t);
      c.require(Tt == hermitian_torsion(A, gauduchon_alpha(A, t)),
                A.name() + ": torsion blocks differ from the alpha route");
      c.require(torsion_11_part(Tt) == gauduchon_alpha(A, t),
                A.name() + ": alpha recovery from the t-family");
    }
  }
  return c;
}

// ---- criterion 6: skew-torsion reduction at t=2 ----

Criterion criterion6() {
  Criterion c;
  std::mt19937 rng(66066);
  std::vector<AlmostHermitianAlgebra> cases = {
      alg("so3xR3"), alg("abelian2"), alg("abelian4"), alg("abelian6"),
      aff_complex()};
  cases.emplace_back(
      frame_change(catalog("so3xR3"), ts::random_unitary(3, rng)));

  for (const auto& A : cases) {
    if (!c.ok) break;
    if (!nijenhuis_is_totally_skew(A)) {
      c.require(false, A.name() + ": expected totally skew nijenhuis");
      break;
    }
    c.require(bismut_simplified_torsion(A) == gauduchon_torsion(A, 2),
              A.name() + ": reduced torsion differs from the t=2 family");

    const VectorTwoForm N = nijenhuis(A);
    const ThreeForm dw = d_omega(A);
    const int n = A.n(), d = A.dim();
    for (int a = 1; a <= d && c.ok; ++a)
      for (int b = 1; b <= d && c.ok; ++b)
        for (int e = 1; e <= d && c.ok; ++e) {
          const JImage ja = apply_J(n, a), jb = apply_J(n, b),
                       je = apply_J(n, e);
          const Rational rhs =
              -Rational(jb.sign) * dw(a, jb.index, e) -
              Rational(ja.sign) * dw(ja.index, b, e) +
              Rational(ja.sign) * jb.sign * je.sign *
                  dw(ja.index, jb.index, je.index) -
              Rational(je.sign) * dw(a, b, je.index);
          c.require(3 * N(a, b, e) == rhs,
                    A.name() + ": 3N identity fails");
        }
  }

  bool raised = false;
  try {
    bismut_simplified_torsion(alg("abdo4"));
  } catch (const NijenhuisNotSkew&) {
    raised = true;
  }
  c.require(raised, "non-skew input did not raise");
  return c;
}

// ---- criterion 7: structural invariants ----

Criterion criterion7() {
  Criterion c;
  for (const char* name :
       {"abdo4", "so3", "so3xR3", "abelian1", "abelian4", "abelian64"}) {
    const LieAlgebra L = catalog(name);
    c.require(!jacobi_witness(L), std::string(name) + ": Jacobi fails");
  }
  c.require(jacobi_defect(catalog("so3")).is_zero(),
            "so3: Jacobi defect tensor nonzero");

  const LieAlgebra so3 = catalog("so3");
  const SquareMatrix K = killing_form(so3);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      c.require(K(a, b) == Rational(a == b ? -2 : 0),
                "so3 killing form differs from -2 id");
  for (int a = 1; a <= 3 && c.ok; ++a)
    for (int b = 1; b <= 3 && c.ok; ++b)
      for (int e = 1; e <= 3 && c.ok; ++e) {
        Rational s = 0;
        for (int p = 1; p <= 3; ++p)
          s += so3.c(a, b, p) * K(p, e) + so3.c(a, e, p) * K(b, p);
        c.require(s == 0, "killing form is not ad-invariant");
      }

  std::mt19937 rng(77077);
  for (const char* name : {"so3xR3", "abdo4"}) {
    if (!c.ok) break;
    const LieAlgebra L = catalog(name);
    const FrameChange U = ts::random_unitary(L.dim() / 2, rng);
    const LieAlgebra M = frame_change(L, U);
    c.require(jacobi_holds(M),
              std::string(name) + ": Jacobi broken by frame change");
    const AlmostHermitianAlgebra A(L), B(M);
    for (const Rational& t : {Rational(2), Rational(1, 3)}) {
      const VectorTwoForm direct = gauduchon_torsion(B, t);
      const VectorTwoForm moved =
          ts::transform_two_form(gauduchon_torsion(A, t), U);
      c.require(direct == moved,
                std::string(name) + ": torsion is not frame-equivariant");
    }
  }
  return c;
}

} // namespace

int main() {
  struct Entry {
    const char* label;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"dim-4 Hermitian worked example reproduced", criterion1},
      {"dim-4 Gauduchon t=2 worked example reproduced", criterion2},
      {"compact product family: trivial/flat connections and closed form",
       criterion3},
      {"cross-formula equivalence on catalog and randomized inputs",
       criterion4},
      {"Hermitian certification battery", criterion5},
      {"skew-torsion reduction at t=2", criterion6},
      {"structural invariants: Jacobi, Killing form, frame equivariance",
       criterion7},
  };

  int failures = 0;
  for (int i = 0; i < 7; ++i) {
    Criterion c;
    try {
      c = entries[i].fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("unexpected exception: ") + e.what();
    }
    if (c.ok) {
      std::cout << "PASS criterion " << (i + 1) << ": " << entries[i].label
                << "\n";
    } else {
      std::cout << "FAIL criterion " << (i + 1) << ": " << entries[i].label
                << " [" << c.detail << "]\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
