#include "lieherm/verify.hpp"

namespace lieherm {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

CheckResult compare_tables(const std::string& name, const Rank3Table& x,
                           const Rank3Table& y) {
  const int d = x.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (x(a, b, c) != y(a, b, c))
          return {name, false, triple_str(a, b, c)};
  return {name, true, ""};
}

std::vector<CheckResult> core_suite(const AlmostHermitianAlgebra& A,
                                    const AlphaForm& alpha,
                                    const VectorTwoForm& T) {
  std::vector<CheckResult> out;
  const int d = A.dim();

  out.push_back(compare_tables("torsion_dual_route", T.table(),
                               hermitian_torsion_general(A, alpha).table()));

  out.push_back({"torsion_antisymmetric", T.is_antisymmetric(), ""});

  const Connection G = connection_from_torsion(A, T);
  out.push_back({"metric_compatible", verify_metric_compat(G), ""});
  out.push_back({"J_parallel", verify_J_parallel(G), ""});
  out.push_back({"torsion_component_conditions",
                 verify_hermitian_torsion_conditions(A, T), ""});

  {
    const VectorTwoForm N = nijenhuis(A);
    const VectorTwoForm TJ = theta_J(T);
    CheckResult r{"theta_J_plus_nijenhuis_zero", true, ""};
    for (int a = 1; a <= d && r.pass; ++a)
      for (int b = 1; b <= d && r.pass; ++b)
        for (int c = 1; c <= d && r.pass; ++c)
          if (TJ(a, b, c) + N(a, b, c) != 0)
            r = {r.name, false, triple_str(a, b, c)};
    out.push_back(r);
  }

  out.push_back(compare_tables("d_omega_plus_projection",
                               d_omega_plus(A).table(),
                               eta_plus(d_omega(A)).table()));

  out.push_back(compare_tables("alpha_recovery", torsion_11_part(T).form().table(),
                               alpha.form().table()));

  {
    const HatTensor hc = hat_transform(A.base().table());
    const HatTensor ht = hat_transform(T.table());
    CheckResult r{"connection_hat_decomposition", true, ""};
    for (int a = 1; a <= d && r.pass; ++a)
      for (int b = 1; b <= d && r.pass; ++b)
        for (int c = 1; c <= d && r.pass; ++c)
          if (G(a, b, c) != hc(a, b, c) + ht(a, b, c))
            r = {r.name, false, triple_str(a, b, c)};
    out.push_back(r);
  }

  out.push_back(compare_tables("torsion_round_trip",
                               torsion_of_connection(A.base(), G).table(),
                               T.table()));

  {
    const Curvature R1 = curvature_from_connection(A.base(), G);
    const Curvature R2 = curvature_via_hats(A.base(), T);
    CheckResult route{"curvature_dual_route", true, ""};
    CheckResult skew{"curvature_pair_antisymmetry", true, ""};
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b)
        for (int c = 1; c <= d; ++c)
          for (int e = 1; e <= d; ++e) {
            if (route.pass && R1(a, b, c, e) != R2(a, b, c, e))
              route = {route.name, false,
                       "(" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + "," + std::to_string(e) +
                           ")"};
            if (skew.pass && (R1(a, b, c, e) != -R1(b, a, c, e) ||
                              R1(a, b, c, e) != -R1(a, b, e, c)))
              skew = {skew.name, false,
                      "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + "," + std::to_string(e) + ")"};
          }
    out.push_back(route);
    out.push_back(skew);
  }

  return out;
}

} // namespace

std::vector<CheckResult> verify_connection_suite(
    const AlmostHermitianAlgebra& A, const AlphaForm& alpha) {
  return core_suite(A, alpha, hermitian_torsion(A, alpha));
}

std::vector<CheckResult> verify_gauduchon_suite(const AlmostHermitianAlgebra& A,
                                                const Rational& t) {
  const AlphaForm alpha = gauduchon_alpha(A, t);
  const VectorTwoForm T = gauduchon_torsion(A, t);
  std::vector<CheckResult> out = core_suite(A, alpha, T);

  out.push_back(compare_tables("gauduchon_alpha_route", T.table(),
                               hermitian_torsion(A, alpha).table()));

  {
    const TPolyTensor3 P = gauduchon_torsion_poly(A);
    const int d = A.dim();
    CheckResult r{"torsion_poly_evaluation", true, ""};
    for (int a = 1; a <= d && r.pass; ++a)
      for (int b = 1; b <= d && r.pass; ++b)
        for (int c = 1; c <= d && r.pass; ++c)
          if (P(a, b, c).eval(t) != T(a, b, c))
            r = {r.name, false, triple_str(a, b, c)};
    out.push_back(r);
  }

  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

} // namespace lieherm
