#include "nclab/uhf.hpp"

#include <cmath>
#include <stdexcept>

namespace nclab {

namespace {

void check_budget(const UHFParams& p) {
  if (p.r < 2 || p.s <= 0) throw std::invalid_argument("uhf: need r >= 2, s > 0");
  double dim = std::pow(static_cast<double>(p.r), 2 * p.legs());
  if (dim > 4096.0) throw std::length_error("uhf: window dimension exceeds budget");
}

// rank-1 projection onto the (normalized) identity vector of one leg
ComplexMatrix vacuum_projection(int r) {
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(r * r);
  for (int i = 0; i < r; ++i) u(i * r + i) = 1.0 / std::sqrt(static_cast<double>(r));
  return u * u.adjoint();
}

// P_h: identity on legs at positions <= h, vacuum projection above
ComplexMatrix chain_projection(const UHFParams& p, int h) {
  ComplexMatrix e = vacuum_projection(p.r);
  ComplexMatrix id = ComplexMatrix::Identity(p.r * p.r, p.r * p.r);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int pos = -p.k_neg; pos <= p.l_pos; ++pos) out = kron(out, pos <= h ? id : e);
  return out;
}

}  // namespace

WeightedSpectrum ci_spectrum(int r, double s, int depth) {
  if (r < 2 || depth < 1) throw std::invalid_argument("ci_spectrum: need r >= 2, N >= 1");
  WeightedSpectrum spec;
  spec.label = "uhf(r=" + std::to_string(r) + ")";
  // level n carries eigenvalue r^((n-1)s) with multiplicity r^(2n) - r^(2n-2),
  // so the counting telescopes to r^(2N)
  spec.points.push_back({0.0, 1.0});
  for (int n = 1; n <= depth; ++n)
    spec.points.push_back({std::pow(static_cast<double>(r), (n - 1) * s),
                           std::pow(static_cast<double>(r), 2 * n) -
                               std::pow(static_cast<double>(r), 2 * n - 2)});
  return spec;
}

ComplexMatrix level_projection(const UHFParams& p, int h) {
  check_budget(p);
  if (h < -p.k_neg || h > p.l_pos) throw std::invalid_argument("level_projection: h outside window");
  return chain_projection(p, h) - chain_projection(p, h - 1);
}

ComplexMatrix window_dirac(const UHFParams& p) {
  check_budget(p);
  ComplexMatrix d = ComplexMatrix::Zero(chain_projection(p, p.l_pos).rows(),
                                        chain_projection(p, p.l_pos).cols());
  ComplexMatrix prev = chain_projection(p, -p.k_neg - 1);
  for (int h = -p.k_neg; h <= p.l_pos; ++h) {
    ComplexMatrix cur = chain_projection(p, h);
    d += std::pow(static_cast<double>(p.r), h * p.s) * (cur - prev);
    prev = cur;
  }
  return d;
}

ComplexMatrix left_mult(const UHFParams& p, const WindowElement& f) {
  check_budget(p);
  if (f.pos_lo > f.pos_hi || f.pos_lo < -p.k_neg || f.pos_hi > p.l_pos)
    throw std::invalid_argument("left_mult: support outside window");
  const int r = p.r, legs = p.legs();
  const int support_len = f.pos_hi - f.pos_lo + 1;
  Eigen::Index supp_dim = 1;
  for (int i = 0; i < support_len; ++i) supp_dim *= r;
  if (f.matrix.rows() != supp_dim || f.matrix.cols() != supp_dim)
    throw std::invalid_argument("left_mult: element size mismatch");

  Eigen::Index dim = 1;
  for (int i = 0; i < 2 * legs; ++i) dim *= r;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);

  const int leg_lo = f.pos_lo + p.k_neg;  // leg index of support start; leg 0 most significant
  std::vector<int> digit(legs * 2);       // per leg: (i, j)
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index rest = col;
    for (int leg = legs - 1; leg >= 0; --leg) {
      int d = static_cast<int>(rest % (r * r));
      rest /= r * r;
      digit[2 * leg] = d / r;
      digit[2 * leg + 1] = d % r;
    }
    Eigen::Index col_supp = 0;
    for (int t = 0; t < support_len; ++t) col_supp = col_supp * r + digit[2 * (leg_lo + t)];

    for (Eigen::Index row_supp = 0; row_supp < supp_dim; ++row_supp) {
      Complex c = f.matrix(row_supp, col_supp);
      if (c == Complex{0, 0}) continue;
      Eigen::Index rs = row_supp, row = 0;
      std::vector<int> new_i(support_len);
      for (int t = support_len - 1; t >= 0; --t) {
        new_i[t] = static_cast<int>(rs % r);
        rs /= r;
      }
      for (int leg = 0; leg < legs; ++leg) {
        int i = digit[2 * leg];
        if (leg >= leg_lo && leg < leg_lo + support_len) i = new_i[leg - leg_lo];
        row = row * (r * r) + i * r + digit[2 * leg + 1];
      }
      out(row, col) += c;
    }
  }
  return out;
}

WindowElement shift_element(const WindowElement& f, int k) {
  WindowElement out = f;
  out.pos_lo -= k;
  out.pos_hi -= k;
  return out;
}

ScalingReport scaling_check(const UHFParams& p, const WindowElement& f, int k) {
  ScalingReport rep;
  rep.expected = std::pow(static_cast<double>(p.r), -k * p.s);

  WindowElement g = shift_element(f, k);
  if (g.pos_lo < -p.k_neg || g.pos_hi > p.l_pos || f.pos_lo < -p.k_neg || f.pos_hi > p.l_pos) {
    rep.verdict = ScalingVerdict::Inconclusive;
    rep.note = "shifted support leaves the window";
    return rep;
  }

  ComplexMatrix d = window_dirac(p);
  ComplexMatrix c0 = commutator(d, left_mult(p, f));
  ComplexMatrix ck = commutator(d, left_mult(p, g));
  rep.norm_f = operator_norm(c0);
  rep.norm_shifted = operator_norm(ck);

  // neither commutator may touch the top window level, else the truncation
  // clips the sup that the identity is about
  ComplexMatrix q_top = level_projection(p, p.l_pos);
  rep.boundary = std::max({operator_norm(q_top * c0), operator_norm(c0 * q_top),
                           operator_norm(q_top * ck), operator_norm(ck * q_top)});

  if (rep.norm_f < 1e-13) {
    rep.verdict = ScalingVerdict::Degenerate;
    rep.passed = rep.norm_shifted < 1e-13;
    rep.note = "commutator vanishes";
    return rep;
  }
  if (rep.boundary > 1e-12) {
    rep.verdict = ScalingVerdict::Inconclusive;
    rep.note = "commutator support reaches the window edge";
    return rep;
  }
  rep.ratio = rep.norm_shifted / rep.norm_f;
  rep.passed = std::abs(rep.ratio - rep.expected) <= 1e-9 * rep.expected;
  rep.verdict = ScalingVerdict::Ok;
  return rep;
}

}  // namespace nclab
