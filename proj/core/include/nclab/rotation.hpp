#pragma once

#include <map>
#include <vector>

#include "nclab/matrix.hpp"
#include "nclab/rational.hpp"
#include "nclab/torus.hpp"

namespace nclab {

// Rational rotation algebra A_theta, theta = p/q, generated by a diagonal
// clock matrix U0 and the cyclic shift V0 with V0 U0 = lambda^sigma U0 V0.

struct RotationParams {
  long long p_theta = 0;
  long long q = 1;
  Rational theta{0};
  ComplexMatrix u0, v0;
  int sigma = 1;  // calibrated from the matrices, not assumed
};

RotationParams build_generators(long long p_theta, long long q);

// e(phase) U^m V^n with exact phase exponent
struct Monomial {
  long long m = 0;
  long long n = 0;
  Rational phase{0};
};

// (U^m V^n)(U^m' V^n') = lambda^(sigma n m') U^(m+m') V^(n+n'), exact.
Monomial twisted_mono_product(const RotationParams& rp, const Monomial& x, const Monomial& y);

struct NCMonomialSum {
  std::map<std::pair<long long, long long>, Complex> coeffs;
};

NCMonomialSum nc_monomial(long long m, long long n, Complex c = {1, 0});
NCMonomialSum twisted_product(const RotationParams& rp, const NCMonomialSum& x,
                              const NCMonomialSum& y);

// |[D0, U^m V^n]| = 2pi |(m,n)|_2
double monomial_commutator_norm(long long m, long long n);

// Norm of [D0, left-mult(x)] on the monomial basis |m|,|n| <= K, compressed to
// the interior |m|,|n| <= K - max frequency of x.
double regular_rep_commutator_norm(const RotationParams& rp, const NCMonomialSum& x, int k_cut);

struct EndoFrequency {
  RationalVec freq;  // A^steps (m,n)
  double norm = 0;   // 2pi |freq|_2
};

// Frequency transport under alpha^-steps; requires det B = 1 (mod q).
EndoFrequency endo_frequency(const RotationParams& rp, const CoveringMatrix& cm, long long m,
                             long long n, int steps);

}  // namespace nclab
