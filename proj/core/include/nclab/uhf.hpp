#pragma once

#include <string>
#include <vector>

#include "nclab/matrix.hpp"
#include "nclab/spectrum.hpp"

namespace nclab {

// UHF_r with the Christensen-Ivan Dirac D0 = sum r^(ns) Q_n and its bilateral
// window truncation on the GNS space of a finite strip of tensor legs.

struct UHFParams {
  int r = 2;
  double s = 1.0;
  int k_neg = 0;  // window [-K, L]
  int l_pos = 0;

  int legs() const { return k_neg + l_pos + 1; }
};

// {(0,1)} + {(r^((n-1)s), r^(2n) - r^(2n-2)) : n = 1..N}
WeightedSpectrum ci_spectrum(int r, double s, int depth);

// GNS space of the window legs with the normalized trace; basis = scaled
// matrix-unit tensors, leg at position -K most significant, index (i*r + j)
// per leg. Vacuum (identity) vector gets eigenvalue 0.
ComplexMatrix window_dirac(const UHFParams& p);

// Level projection Q_h, h in [-K, L]; Q_{-K-1} wraps the vacuum.
ComplexMatrix level_projection(const UHFParams& p, int h);

struct WindowElement {
  int pos_lo = 0;  // contiguous support [pos_lo, pos_hi]
  int pos_hi = 0;
  ComplexMatrix matrix;  // r^(pos_hi - pos_lo + 1) square
};

// Left multiplication by f on the GNS basis (entries are exactly the entries
// of f.matrix thanks to the scaled basis).
ComplexMatrix left_mult(const UHFParams& p, const WindowElement& f);

WindowElement shift_element(const WindowElement& f, int k);

enum class ScalingVerdict { Ok, Degenerate, Inconclusive };

struct ScalingReport {
  ScalingVerdict verdict = ScalingVerdict::Ok;
  double norm_f = 0;        // |[D_win, f]|
  double norm_shifted = 0;  // |[D_win, shift(f,k)]|
  double ratio = 0;
  double expected = 0;  // r^(-ks)
  double boundary = 0;  // largest boundary-level commutator block
  bool passed = false;
  std::string note;
};

// Verifies |[D_win, alpha^-k(f)]| = r^(-ks) |[D_win, f]| within 1e-9 relative,
// provided the commutators stay clear of the window edges.
ScalingReport scaling_check(const UHFParams& p, const WindowElement& f, int k);

}  // namespace nclab
