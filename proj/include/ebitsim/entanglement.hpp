#pragma once

#include "ebitsim/core.hpp"
#include "ebitsim/postselect.hpp"

namespace ebitsim {

inline constexpr double kRankCutoff = 1e-10;

struct SchmidtReport {
  RealVector singular_values;       // descending, of the normalized matrix
  RealVector schmidt_coefficients;  // lambda_k = s_k^2 / sum s^2
  double entropy_ebits = 0.0;
  int numerical_rank = 0;           // count of lambda_k > kRankCutoff
};

/// Entropy -sum lambda log2 lambda with 0 log 0 = 0.
double entropy_from_coefficients(const RealVector& lambda);

SchmidtReport schmidt(const ComplexMatrix& c);
inline SchmidtReport schmidt(const BipartiteAmplitude& c) { return schmidt(c.matrix); }

struct BoundCheck {
  bool within = false;
  double entropy_ebits = 0.0;
  double bound_ebits = 0.0;
  double margin = 0.0;  // bound - entropy
};

BoundCheck entropy_upper_bound_check(const BipartiteAmplitude& c, double bound_ebits);

/// Local filter on atom 1 that equalizes the Schmidt spectrum:
/// A = U diag(s_min / s_k) U^H for C = U S V^H, so A C has all singular
/// values equal.
struct LocalFilterResult {
  ComplexMatrix filter;
  double entropy_ebits = 0.0;
  /// min lambda / max lambda before filtering. Diagnostic only, not a
  /// physical success probability.
  double success_penalty = 0.0;
};

LocalFilterResult max_entangle_local_filter(const BipartiteAmplitude& c);

}  // namespace ebitsim
