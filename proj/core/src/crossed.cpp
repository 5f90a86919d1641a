#include "nclab/crossed.hpp"

#include <stdexcept>

namespace nclab {

ComplexMatrix shift_isometry(int n_cut, int base_dim) {
  if (n_cut < 1) throw std::invalid_argument("shift_isometry: N must be >= 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(n_cut + 1) * base_dim;
  ComplexMatrix w = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n <= n_cut; ++n)
    w.block(static_cast<Eigen::Index>(n) * base_dim, static_cast<Eigen::Index>(n - 1) * base_dim,
            base_dim, base_dim) = ComplexMatrix::Identity(base_dim, base_dim);
  return w;
}

ComplexMatrix build_pi_hat(const std::vector<ComplexMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("build_pi_hat: no blocks");
  const Eigen::Index b = blocks.front().rows();
  for (const auto& m : blocks)
    if (m.rows() != b || m.cols() != b)
      throw std::invalid_argument("build_pi_hat: non-uniform block size");
  ComplexMatrix out = ComplexMatrix::Zero(b * blocks.size(), b * blocks.size());
  for (size_t n = 0; n < blocks.size(); ++n)
    out.block(n * b, n * b, b, b) = blocks[n];
  return out;
}

CovariantTruncation make_covariant_truncation(std::vector<ComplexMatrix> blocks) {
  CovariantTruncation t;
  t.n_cut = static_cast<int>(blocks.size()) - 1;
  t.base_dim = static_cast<int>(blocks.front().rows());
  t.shift = shift_isometry(t.n_cut, t.base_dim);
  t.blocks = std::move(blocks);
  return t;
}

static ComplexMatrix interior_compress(const ComplexMatrix& m, int n_cut, int base_dim) {
  // keep shift coordinates 1..N-1
  const Eigen::Index lo = base_dim, len = static_cast<Eigen::Index>(n_cut - 1) * base_dim;
  return m.block(lo, lo, len, len);
}

double check_covariance(const CovariantTruncation& t, const std::vector<ComplexMatrix>& blocks_alpha,
                        int k_max) {
  if (blocks_alpha.size() != t.blocks.size())
    throw std::invalid_argument("check_covariance: block count mismatch");
  ComplexMatrix pi_a = build_pi_hat(t.blocks);
  ComplexMatrix pi_alpha_a = build_pi_hat(blocks_alpha);
  const ComplexMatrix& w = t.shift;

  double defect = operator_norm(interior_compress(pi_alpha_a * w - w * pi_a, t.n_cut, t.base_dim));

  ComplexMatrix range_proj = ComplexMatrix::Identity(w.rows(), w.cols());
  for (int k = 1; k <= k_max && k < t.n_cut; ++k) {
    range_proj = w * range_proj * w.adjoint();  // W^k W*^k
    defect = std::max(defect, operator_norm(interior_compress(
                                  range_proj * pi_a - pi_a * range_proj, t.n_cut, t.base_dim)));
  }
  return defect;
}

ComplexMatrix crossed_dirac(const ComplexMatrix& d, Parity parity, const ComplexMatrix& grading,
                            int n_cut) {
  if (n_cut < 1) throw std::invalid_argument("crossed_dirac: N must be >= 1");
  ComplexMatrix dn = ComplexMatrix::Zero(n_cut + 1, n_cut + 1);
  for (int n = 0; n <= n_cut; ++n) dn(n, n) = n;
  ComplexMatrix id_n = ComplexMatrix::Identity(n_cut + 1, n_cut + 1);

  if (parity == Parity::Even) {
    const Eigen::Index b = d.rows();
    if (grading.rows() != b || grading.cols() != b)
      throw std::invalid_argument("crossed_dirac: grading size mismatch");
    if (operator_norm(grading * grading - ComplexMatrix::Identity(b, b)) > 1e-10 ||
        operator_norm(grading * d + d * grading) > 1e-10)
      throw std::invalid_argument("crossed_dirac: grading must square to I and anticommute with D");
    return kron(id_n, d) + kron(dn, grading);
  }
  // odd: D (x) I (x) eps1 + I (x) D_N (x) eps2, with the N index leading
  ComplexMatrix id_b = ComplexMatrix::Identity(d.rows(), d.cols());
  return kron(id_n, kron(d, pauli(1))) + kron(dn, kron(id_b, pauli(2)));
}

LipProbe lip_probe(const std::function<double(int)>& norms_fn, int horizon,
                   const std::function<double(int)>& envelope_fn) {
  if (horizon < 1) throw std::invalid_argument("lip_probe: horizon must be >= 1");
  LipProbe p;
  p.sup = 0;
  p.bounded = true;
  for (int n = 0; n <= horizon; ++n) {
    double v = norms_fn(n);
    p.norms.push_back(v);
    p.sup = std::max(p.sup, v);
    if (envelope_fn) {
      double env = envelope_fn(n);
      p.envelope.push_back(env);
      if (v > env * (1 + 1e-9)) p.bounded = false;
    }
  }
  return p;
}

}  // namespace nclab
