#include "ebitsim/entanglement.hpp"

#include <cmath>
#include <sstream>

namespace ebitsim {

double entropy_from_coefficients(const RealVector& lambda) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double l = lambda(k);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

SchmidtReport schmidt(const ComplexMatrix& c) {
  if (c.size() == 0) fail("schmidt of an empty matrix");
  const double norm = c.norm();
  if (!(norm > 0.0)) fail_numerical("schmidt of a zero matrix");

  const ComplexMatrix normalized = c / norm;
  RealVector s;
  if (std::min(c.rows(), c.cols()) <= 16) {
    Eigen::JacobiSVD<ComplexMatrix> svd(normalized);
    s = svd.singularValues();
  } else {
    Eigen::BDCSVD<ComplexMatrix> svd(normalized);
    s = svd.singularValues();
  }

  SchmidtReport r;
  r.singular_values = s;
  r.schmidt_coefficients = s.array().square();
  r.schmidt_coefficients /= r.schmidt_coefficients.sum();
  r.entropy_ebits = entropy_from_coefficients(r.schmidt_coefficients);
  r.numerical_rank =
      static_cast<int>((r.schmidt_coefficients.array() > kRankCutoff).count());
  return r;
}

BoundCheck entropy_upper_bound_check(const BipartiteAmplitude& c, double bound_ebits) {
  BoundCheck b;
  b.entropy_ebits = schmidt(c).entropy_ebits;
  b.bound_ebits = bound_ebits;
  b.margin = bound_ebits - b.entropy_ebits;
  b.within = b.entropy_ebits <= bound_ebits + 1e-9;
  return b;
}

LocalFilterResult max_entangle_local_filter(const BipartiteAmplitude& c) {
  if (c.matrix.rows() != c.matrix.cols()) fail("local filter requires a square amplitude");
  const ComplexMatrix m = c.matrix / c.matrix.norm();
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector s = svd.singularValues();
  const RealVector lambda = s.array().square() / s.squaredNorm();
  const auto n = m.rows();
  if ((lambda.array() > kRankCutoff).count() < n)
    fail_numerical("cannot equalize a rank-deficient state");

  const double smin = s(n - 1);
  RealVector scale = s.cwiseInverse() * smin;
  LocalFilterResult r;
  r.filter = svd.matrixU() * scale.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
  r.success_penalty = lambda(n - 1) / lambda(0);

  const SchmidtReport after = schmidt(r.filter * m);
  r.entropy_ebits = after.entropy_ebits;
  const double target = std::log2(static_cast<double>(n));
  if (std::abs(r.entropy_ebits - target) > 1e-9) {
    std::ostringstream os;
    os << "local filtering reached " << r.entropy_ebits << " ebits, expected " << target;
    fail_numerical(os.str());
  }
  return r;
}

}  // namespace ebitsim
