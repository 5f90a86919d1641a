#include "nclab/matrix.hpp"

#include <stdexcept>

namespace nclab {

ComplexMatrix pauli(int a) {
  ComplexMatrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (a) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator requires square matrices of equal size");
  return a * b - b * a;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  // sqrt of the top eigenvalue of A*A; selfadjoint solve is deterministic.
  ComplexMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top > 0 ? std::sqrt(top) : 0.0;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  double scale = 1.0 + a.cwiseAbs().maxCoeff();
  return (a - a.adjoint().eval()).cwiseAbs().maxCoeff() < tol * scale;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (!is_hermitian(a)) throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

CliffordFamily clifford_generators(int p) {
  if (p < 1) throw std::invalid_argument("clifford_generators: rank must be >= 1");
  // rank 1 seed: the 1x1 matrix (1). Extension p -> p+2 doubles the size:
  //   {eps1 (x) g_a} + {eps2 (x) I, eps3 (x) I}.
  std::vector<ComplexMatrix> gens;
  if (p % 2 == 1) {
    gens.push_back(ComplexMatrix::Ones(1, 1));
  } else {
    gens.push_back(pauli(1));
    gens.push_back(pauli(2));
  }
  while (static_cast<int>(gens.size()) < p) {
    Eigen::Index d = gens.front().rows();
    std::vector<ComplexMatrix> next;
    next.reserve(gens.size() + 2);
    for (const auto& g : gens) next.push_back(kron(pauli(1), g));
    next.push_back(kron(pauli(2), ComplexMatrix::Identity(d, d)));
    next.push_back(kron(pauli(3), ComplexMatrix::Identity(d, d)));
    gens = std::move(next);
  }
  return {p, std::move(gens)};
}

}  // namespace nclab
