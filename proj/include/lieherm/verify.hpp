#pragma once

#include <string>
#include <vector>

#include "lieherm/curvature.hpp"

namespace lieherm {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail; // first failing index tuple, empty on pass
};

/// Invariant battery for the Hermitian connection selected by alpha:
/// dual-route torsion agreement, metric compatibility, nabla J = 0, the six
/// torsion component families, theta_J(T) + N = 0, alpha recovery, the
/// Gamma = hat(C) + hat(T) decomposition, torsion round-trip, dual-route
/// curvature agreement and curvature pair antisymmetries.
std::vector<CheckResult> verify_connection_suite(
    const AlmostHermitianAlgebra& A, const AlphaForm& alpha);

/// Same battery for the t-Gauduchon connection, plus agreement between the
/// t-blocks, the alpha route and the torsion polynomial evaluation.
std::vector<CheckResult> verify_gauduchon_suite(const AlmostHermitianAlgebra& A,
                                                const Rational& t);

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace lieherm
