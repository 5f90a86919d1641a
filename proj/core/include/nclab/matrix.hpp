#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace nclab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Pauli matrices, the p = 2 Clifford generators plus the grading.
ComplexMatrix pauli(int a);

// Kronecker product, size (rA*rB) x (cA*cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// AB - BA. Throws on size mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10);

// All eigenvalues of a Hermitian matrix, ascending. Rejects non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// p Hermitian unitaries of size 2^(p/2 rounded down) with
// eps_a eps_b + eps_b eps_a = 2 delta_ab I. Deterministic recursive
// tensor extension; p = 2 yields the first two Pauli matrices.
struct CliffordFamily {
  int rank;
  std::vector<ComplexMatrix> generators;
};

CliffordFamily clifford_generators(int p);

}  // namespace nclab
