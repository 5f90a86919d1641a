#pragma once

#include <functional>
#include <vector>

#include "nclab/matrix.hpp"

namespace nclab {

// Crossed-product truncations on C^(N+1) (x) H_base; the shift index is the
// leading tensor factor throughout, so block n of a vector is its H_base
// component at shift coordinate n.

// Truncated shift isometry W: (W xi)(0) = 0, (W xi)(n) = xi(n-1) for n <= N.
// The top block of the input is discarded.
ComplexMatrix shift_isometry(int n_cut, int base_dim);

// Block-diagonal diag(blocks[0], ..., blocks[N]).
ComplexMatrix build_pi_hat(const std::vector<ComplexMatrix>& blocks);

// Samples pi(alpha^-n(a)) for n = 0..N plus the shift isometry.
struct CovariantTruncation {
  int n_cut = 0;
  int base_dim = 0;
  std::vector<ComplexMatrix> blocks;  // blocks[n] = pi(alpha^-n(a))
  ComplexMatrix shift;
};

CovariantTruncation make_covariant_truncation(std::vector<ComplexMatrix> blocks);

// Covariance defect after compression to interior shift coordinates 1..N-1:
// norm of P_int (pi_hat(alpha(a)) W - W pi_hat(a)) P_int, maximized with the
// defects of [W^k W*^k, pi_hat(a)] for k = 1..k_max.
// blocks_alpha[n] = pi(alpha^-n(alpha(a))).
double check_covariance(const CovariantTruncation& t, const std::vector<ComplexMatrix>& blocks_alpha,
                        int k_max = 3);

enum class Parity { Even, Odd };

// Crossed-product Dirac with D_N = diag(0..N) on the leading factor:
//   even: D (x) I + Gamma (x) D_N     (requires Gamma^2 = I, Gamma D = -D Gamma)
//   odd:  D (x) I (x) eps1 + I (x) D_N (x) eps2
// realized with the shift index leading, so the spectrum and all norms match
// the quoted operators.
ComplexMatrix crossed_dirac(const ComplexMatrix& d, Parity parity, const ComplexMatrix& grading,
                            int n_cut);

struct LipProbe {
  std::vector<double> norms;     // n = 0..N
  double sup = 0;
  std::vector<double> envelope;  // empty if no envelope supplied
  bool bounded = false;
};

// Finite Lip-semiboundedness probe: the commutator-norm sequence
// n -> |[D, alpha^-n(a)]| together with an optional theoretical envelope.
LipProbe lip_probe(const std::function<double(int)>& norms_fn, int horizon,
                   const std::function<double(int)>& envelope_fn = {});

}  // namespace nclab
