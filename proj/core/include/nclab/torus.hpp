#pragma once

#include <vector>

#include "nclab/matrix.hpp"
#include "nclab/rational.hpp"
#include "nclab/spectrum.hpp"

namespace nclab {

// p-torus with a matrix self-covering t -> Bt. All frequency bookkeeping is
// exact: A = (B^T)^-1 is stored as an adjugate over the determinant.

struct CoveringMatrix {
  Eigen::MatrixXi b;
  std::vector<std::vector<Rational>> a;  // a[i][j] = A_ij
  long long det = 0;
  int r = 0;  // |det|
  int p = 0;
};

// Validates det != 0, r >= 2 and that B is purely expanding
// (every eigenvalue modulus > 1 + 1e-6).
CoveringMatrix make_covering(const Eigen::MatrixXi& b);

long long int_det(const Eigen::MatrixXi& m);

RationalVec apply_a(const CoveringMatrix& cm, const RationalVec& k);
RationalVec apply_a_pow(const CoveringMatrix& cm, RationalVec k, int n);

// Spectral norm of B^-n (= |A^n| by transpose invariance).
double inverse_power_norm(const CoveringMatrix& cm, int n);

struct TorusMode {
  RationalVec freq;
  Complex coeff;
};

struct TorusElement {
  int level = 0;  // frequencies live in A^level Z^p
  std::vector<TorusMode> modes;
};

TorusElement single_mode(const std::vector<long long>& k);

// {(2pi |k|_2, 2^floor(p/2)) : k integer, |k|_inf <= K}
WeightedSpectrum torus_spectrum(int p, int k_cut);

// |[D0, e_k]| = 2pi |k|_2, exact for a single mode.
double mode_commutator_norm(const RationalVec& k);

// [grid lower bound, l1 upper bound] for |[D0, f]| = sup |grad f|_2.
// The grid covers one period of f (lcm of frequency denominators) at g^p points.
struct NormInterval {
  double lower = 0;
  double upper = 0;
};
NormInterval grid_commutator_norm(const TorusElement& f, int g);

// alpha^-n: frequencies k -> A^n k, level += n. Exact.
TorusElement endo_pullback(const CoveringMatrix& cm, const TorusElement& f, int n);

struct TorusLipReport {
  std::vector<double> norms;     // conservative value per n (exact for single modes)
  std::vector<double> envelope;  // |B^-n| * |[D,f]| upper bound
  double sup = 0;
  bool ok = false;
};

// Checks |[D0, alpha^-n f]| <= |B^-n| |[D0, f]| for n = 0..n_max, exact for
// single modes, interval-conservative otherwise.
TorusLipReport lip_inequality_check(const CoveringMatrix& cm, const TorusElement& f, int n_max,
                                    int grid = 64);

struct SectionMap {
  std::vector<RationalVec> reps;  // r coset representatives of A Z^p / Z^p in [0,1)^p
};

SectionMap section_map(const CoveringMatrix& cm);

// Truncated solenoid Dirac spectrum:
// {(2pi |k + sum_h A^(h-1) s(x_h)|_2, 2^floor(p/2) r^-H)} over |k|_inf <= K
// and section tuples x of length H.
WeightedSpectrum solenoid_spectrum(const CoveringMatrix& cm, int depth, int k_cut,
                                   std::size_t budget = 64'000'000);

// Covariant-truncation block: the translation by (B^T)^power k acting on the
// Fourier box |m|_inf <= J (a partial permutation matrix). With blocks[n] at
// power N-n this transcribes pi(alpha^-n(e_k)) on the level-N lattice.
ComplexMatrix torus_mode_operator(const CoveringMatrix& cm, const std::vector<long long>& k,
                                  int power, int j_cut);

std::vector<ComplexMatrix> torus_covariant_blocks(const CoveringMatrix& cm,
                                                  const std::vector<long long>& k, int n_cut,
                                                  int j_cut, int extra_power = 0);

}  // namespace nclab
