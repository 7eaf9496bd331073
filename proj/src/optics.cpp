#include "ebitsim/optics.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace ebitsim {

PortBasis::PortBasis(int count) : count_(count) {
  if (count < 1) fail("port basis needs at least one port");
}

PortBasis::PortBasis(int count, std::vector<std::string> labels)
    : count_(count), labels_(std::move(labels)) {
  if (count < 1) fail("port basis needs at least one port");
  if (static_cast<int>(labels_.size()) != count)
    fail("port labels must match port count");
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) fail("port labels must be unique");
}

bool is_unitary_element(const NetworkElement& e) noexcept {
  if (const auto* a = std::get_if<Attenuator>(&e)) return a->t == 1.0;
  return true;
}

double largest_singular_value(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

LinearNetwork::LinearNetwork(int count)
    : transfer_(ComplexMatrix::Identity(count, count)) {
  if (count < 1) fail("network needs at least one port");
}

LinearNetwork::LinearNetwork(ComplexMatrix transfer,
                             std::vector<NetworkElement> elements)
    : transfer_(std::move(transfer)), elements_(std::move(elements)) {
  if (transfer_.rows() != transfer_.cols() || transfer_.rows() < 1)
    fail("network transfer must be a non-empty square matrix");
  const double smax = largest_singular_value(transfer_);
  if (smax > 1.0 + kPhysicalitySlack) {
    std::ostringstream os;
    os << "network is not passive: largest singular value " << smax;
    fail(os.str());
  }
}

LinearNetwork LinearNetwork::then(const LinearNetwork& next) const {
  if (next.count() != count()) fail("network port counts differ");
  std::vector<NetworkElement> all = elements_;
  all.insert(all.end(), next.elements_.begin(), next.elements_.end());
  return LinearNetwork(next.transfer_ * transfer_, std::move(all));
}

namespace {

void require_port(const PortBasis& basis, int port) {
  if (!basis.contains(port)) fail("port out of range");
}

}  // namespace

ComplexMatrix element_matrix(const NetworkElement& e, const PortBasis& basis) {
  ComplexMatrix m = ComplexMatrix::Identity(basis.count(), basis.count());
  std::visit(
      [&](const auto& el) {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, BeamSplitter>) {
          require_port(basis, el.port_a);
          require_port(basis, el.port_b);
          if (el.port_a == el.port_b) fail("beam splitter needs two distinct ports");
          const double c = std::cos(el.theta);
          const double s = std::sin(el.theta);
          const Complex ph = std::polar(1.0, el.phi);
          m(el.port_a, el.port_a) = c;
          m(el.port_a, el.port_b) = ph * s;
          m(el.port_b, el.port_a) = -std::conj(ph) * s;
          m(el.port_b, el.port_b) = c;
        } else if constexpr (std::is_same_v<T, PhaseShifter>) {
          require_port(basis, el.port);
          m(el.port, el.port) = std::polar(1.0, el.phi);
        } else {
          require_port(basis, el.port);
          if (!(el.t >= 0.0 && el.t <= 1.0))
            fail("attenuator amplitude factor must lie in [0, 1]");
          m(el.port, el.port) = el.t;
        }
      },
      e);
  return m;
}

LinearNetwork compose(const std::vector<NetworkElement>& elements,
                      const PortBasis& basis) {
  ComplexMatrix t = ComplexMatrix::Identity(basis.count(), basis.count());
  for (const auto& e : elements) t = element_matrix(e, basis) * t;
  return LinearNetwork(std::move(t), elements);
}

namespace {

double wrap_phase(double phi) {
  constexpr double pi = std::numbers::pi;
  phi = std::remainder(phi, 2.0 * pi);
  if (phi <= -pi) phi += 2.0 * pi;
  return phi;
}

// BS(-theta, phi + pi) == BS(theta, phi); keep theta >= 0.
BeamSplitter canonical_splitter(int a, int b, double theta, double phi) {
  if (theta < 0.0) {
    theta = -theta;
    phi += std::numbers::pi;
  }
  return BeamSplitter{a, b, theta, wrap_phase(phi)};
}

}  // namespace

std::vector<NetworkElement> reck_decompose(const ComplexMatrix& unitary) {
  const double dev = unitarity_deviation(unitary);
  if (!(dev <= kUnitaryInputTol)) {
    std::ostringstream os;
    os << "reck_decompose requires unitary (max |U^H U - I| = " << dev << ")";
    fail(os.str());
  }
  const int n = static_cast<int>(unitary.rows());
  ComplexMatrix u = unitary;

  // U * G_1 * ... * G_k = D  =>  U = D * G_k^-1 * ... * G_1^-1.
  // Composition applies list entries first-to-last, so the inverses go in
  // elimination order and D comes last.
  std::vector<NetworkElement> out;
  out.reserve(static_cast<size_t>(n * (n - 1) / 2 + n));
  for (int row = n - 1; row >= 1; --row) {
    for (int col = 0; col < row; ++col) {
      const Complex x = u(row, col);
      const Complex y = u(row, col + 1);
      // Right-multiply by BS(theta, phi) on columns (col, col+1) so that
      // c*x - e^{-i phi} s*y = 0.
      const double theta = std::atan2(std::abs(x), std::abs(y));
      const double phi = std::arg(y) - std::arg(x);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Complex ph = std::polar(1.0, phi);
      const ComplexVector a = u.col(col);
      const ComplexVector b = u.col(col + 1);
      u.col(col) = c * a - std::conj(ph) * s * b;
      u.col(col + 1) = ph * s * a + c * b;
      u(row, col) = 0.0;
      // Inverse of BS(theta, phi) is BS(-theta, phi).
      out.emplace_back(canonical_splitter(col, col + 1, -theta, phi));
    }
  }
  for (int p = 0; p < n; ++p) {
    out.emplace_back(PhaseShifter{p, std::arg(u(p, p))});
  }
  return out;
}

ComplexMatrix symmetric_collector_unitary(int n) {
  if (n < 2) fail("symmetric_collector_unitary requires n >= 2");
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, -1.0 / std::sqrt(double(n)));
  w(0) += 1.0;
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * w * w.transpose() / w.squaredNorm();
  return h.cast<Complex>();
}

}  // namespace ebitsim
