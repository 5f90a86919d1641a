#include "nclab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nclab {

namespace {

using MatLL = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

MatLL int_pow(const MatLL& m, int n) {
  MatLL out = MatLL::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

Eigen::MatrixXi minor_of(const Eigen::MatrixXi& m, int row, int col) {
  Eigen::MatrixXi out(m.rows() - 1, m.cols() - 1);
  for (int i = 0, ii = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0, jj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(ii, jj++) = m(i, j);
    }
    ++ii;
  }
  return out;
}

// odometer over {0..base-1}^p; returns false after the last tuple
bool advance(std::vector<int>& digits, int base) {
  for (size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

long long int_det(const Eigen::MatrixXi& m) {
  if (m.rows() == 1) return m(0, 0);
  long long det = 0, sign = 1;
  for (int j = 0; j < m.cols(); ++j) {
    det += sign * m(0, j) * int_det(minor_of(m, 0, j));
    sign = -sign;
  }
  return det;
}

CoveringMatrix make_covering(const Eigen::MatrixXi& b) {
  if (b.rows() != b.cols() || b.rows() < 1) throw std::invalid_argument("make_covering: B must be square");
  CoveringMatrix cm;
  cm.b = b;
  cm.p = static_cast<int>(b.rows());
  cm.det = int_det(b);
  if (cm.det == 0) throw std::invalid_argument("make_covering: det B = 0");
  cm.r = static_cast<int>(std::llabs(cm.det));
  if (cm.r < 2) throw std::invalid_argument("make_covering: |det B| must be >= 2");

  Eigen::EigenSolver<Eigen::MatrixXd> es(b.cast<double>());
  for (int i = 0; i < cm.p; ++i)
    if (std::abs(es.eigenvalues()[i]) <= 1.0 + 1e-6)
      throw std::invalid_argument("make_covering: B is not purely expanding");

  // A = (B^T)^-1 = adj(B^T) / det(B); adj(M)_ij = (-1)^(i+j) det(minor(M, j, i))
  Eigen::MatrixXi bt = b.transpose();
  cm.a.assign(cm.p, std::vector<Rational>(cm.p));
  for (int i = 0; i < cm.p; ++i)
    for (int j = 0; j < cm.p; ++j) {
      long long cof = cm.p == 1 ? 1 : int_det(minor_of(bt, j, i));
      if ((i + j) % 2) cof = -cof;
      cm.a[i][j] = Rational{cof, cm.det};
    }
  return cm;
}

RationalVec apply_a(const CoveringMatrix& cm, const RationalVec& k) {
  if (static_cast<int>(k.size()) != cm.p) throw std::invalid_argument("apply_a: dimension mismatch");
  RationalVec out(cm.p, Rational{0});
  for (int i = 0; i < cm.p; ++i)
    for (int j = 0; j < cm.p; ++j) out[i] += cm.a[i][j] * k[j];
  return out;
}

RationalVec apply_a_pow(const CoveringMatrix& cm, RationalVec k, int n) {
  for (int i = 0; i < n; ++i) k = apply_a(cm, k);
  return k;
}

double inverse_power_norm(const CoveringMatrix& cm, int n) {
  Eigen::MatrixXd a(cm.p, cm.p);
  for (int i = 0; i < cm.p; ++i)
    for (int j = 0; j < cm.p; ++j) a(i, j) = to_double(cm.a[i][j]);
  Eigen::MatrixXd an = Eigen::MatrixXd::Identity(cm.p, cm.p);
  for (int i = 0; i < n; ++i) an = an * a;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(an);
  return svd.singularValues()(0);
}

TorusElement single_mode(const std::vector<long long>& k) {
  TorusElement f;
  RationalVec freq;
  for (long long x : k) freq.emplace_back(x);
  f.modes.push_back({std::move(freq), Complex{1.0, 0.0}});
  return f;
}

WeightedSpectrum torus_spectrum(int p, int k_cut) {
  if (p < 1) throw std::invalid_argument("torus_spectrum: p must be >= 1");
  if (k_cut < 1) throw std::invalid_argument("torus_spectrum: K must be >= 1");
  WeightedSpectrum s;
  s.label = "torus(p=" + std::to_string(p) + ",K=" + std::to_string(k_cut) + ")";
  const double mult = std::pow(2.0, p / 2);
  std::vector<int> digits(p, 0);
  const int base = 2 * k_cut + 1;
  do {
    double sq = 0;
    for (int d : digits) {
      double k = d - k_cut;
      sq += k * k;
    }
    s.points.push_back({2.0 * M_PI * std::sqrt(sq), mult});
  } while (advance(digits, base));
  return s;
}

double mode_commutator_norm(const RationalVec& k) {
  return 2.0 * M_PI * std::sqrt(to_double(norm_sq(k)));
}

NormInterval grid_commutator_norm(const TorusElement& f, int g) {
  if (g < 16) throw std::invalid_argument("grid_commutator_norm: g must be >= 16");
  if (f.modes.empty()) return {0, 0};
  const int p = static_cast<int>(f.modes.front().freq.size());
  double budget = std::pow(static_cast<double>(g), p);
  if (budget > 64e6) throw std::length_error("grid_commutator_norm: grid budget exceeded");

  NormInterval iv{0, 0};
  long long period = 1;
  for (const auto& m : f.modes) {
    iv.upper += 2.0 * M_PI * std::abs(m.coeff) * std::sqrt(to_double(norm_sq(m.freq)));
    for (const auto& c : m.freq) period = std::lcm(period, c.denominator());
  }

  std::vector<int> digits(p, 0);
  std::vector<double> t(p);
  do {
    for (int a = 0; a < p; ++a) t[a] = static_cast<double>(period) * digits[a] / g;
    double sq = 0;
    for (int a = 0; a < p; ++a) {
      Complex da{0, 0};
      for (const auto& m : f.modes) {
        double kt = 0;
        for (int b = 0; b < p; ++b) kt += to_double(m.freq[b]) * t[b];
        da += m.coeff * 2.0 * M_PI * Complex{0, 1} * to_double(m.freq[a]) *
              std::exp(Complex{0, 2.0 * M_PI * kt});
      }
      sq += std::norm(da);
    }
    iv.lower = std::max(iv.lower, std::sqrt(sq));
  } while (advance(digits, g));
  return iv;
}

TorusElement endo_pullback(const CoveringMatrix& cm, const TorusElement& f, int n) {
  if (n < 0) throw std::invalid_argument("endo_pullback: n must be >= 0");
  TorusElement out;
  out.level = f.level + n;
  for (const auto& m : f.modes) out.modes.push_back({apply_a_pow(cm, m.freq, n), m.coeff});
  return out;
}

TorusLipReport lip_inequality_check(const CoveringMatrix& cm, const TorusElement& f, int n_max,
                                    int grid) {
  const bool single = f.modes.size() <= 1;
  TorusLipReport rep;
  rep.ok = true;

  double base_norm;  // upper bound on |[D0, f]|
  if (single)
    base_norm = f.modes.empty() ? 0.0 : std::abs(f.modes[0].coeff) * mode_commutator_norm(f.modes[0].freq);
  else
    base_norm = grid_commutator_norm(f, grid).upper;

  for (int n = 0; n <= n_max; ++n) {
    TorusElement fn = endo_pullback(cm, f, n);
    double lhs = single ? (fn.modes.empty() ? 0.0
                                            : std::abs(fn.modes[0].coeff) *
                                                  mode_commutator_norm(fn.modes[0].freq))
                        : grid_commutator_norm(fn, grid).lower;
    double env = inverse_power_norm(cm, n) * base_norm;
    rep.norms.push_back(lhs);
    rep.envelope.push_back(env);
    rep.sup = std::max(rep.sup, lhs);
    if (lhs > env * (1 + 1e-9)) rep.ok = false;
  }
  return rep;
}

SectionMap section_map(const CoveringMatrix& cm) {
  SectionMap sm;
  std::vector<int> digits(cm.p, 0);
  do {
    RationalVec m;
    for (int d : digits) m.emplace_back(d);
    RationalVec rep = apply_a(cm, m);
    for (auto& c : rep) c = mod_one(c);
    if (std::find(sm.reps.begin(), sm.reps.end(), rep) == sm.reps.end())
      sm.reps.push_back(std::move(rep));
  } while (advance(digits, cm.r));
  if (static_cast<int>(sm.reps.size()) != cm.r)
    throw std::logic_error("section_map: representative count != r");
  return sm;
}

WeightedSpectrum solenoid_spectrum(const CoveringMatrix& cm, int depth, int k_cut,
                                   std::size_t budget) {
  if (depth < 0 || k_cut < 0) throw std::invalid_argument("solenoid_spectrum: bad parameters");
  double count = std::pow(static_cast<double>(cm.r), depth) *
                 std::pow(static_cast<double>(2 * k_cut + 1), cm.p);
  if (count > static_cast<double>(budget)) throw std::length_error("solenoid_spectrum: budget exceeded");

  SectionMap sm = section_map(cm);
  // offsets A^(h-1) s(x), h = 1..H, as doubles
  std::vector<std::vector<std::vector<double>>> off(depth);
  for (int h = 0; h < depth; ++h)
    for (int x = 0; x < cm.r; ++x) {
      RationalVec v = apply_a_pow(cm, sm.reps[x], h);
      std::vector<double> d(cm.p);
      for (int i = 0; i < cm.p; ++i) d[i] = to_double(v[i]);
      off[h].push_back(std::move(d));
    }

  // all tuple sums sum_h A^(h-1) s(x_h)
  std::vector<std::vector<double>> sums{std::vector<double>(cm.p, 0.0)};
  for (int h = 0; h < depth; ++h) {
    std::vector<std::vector<double>> next;
    next.reserve(sums.size() * cm.r);
    for (const auto& s : sums)
      for (int x = 0; x < cm.r; ++x) {
        std::vector<double> t = s;
        for (int i = 0; i < cm.p; ++i) t[i] += off[h][x][i];
        next.push_back(std::move(t));
      }
    sums = std::move(next);
  }

  WeightedSpectrum spec;
  spec.label = "solenoid(H=" + std::to_string(depth) + ",K=" + std::to_string(k_cut) + ")";
  const double w = std::pow(2.0, cm.p / 2) * std::pow(static_cast<double>(cm.r), -depth);
  std::vector<int> digits(cm.p, 0);
  const int base = 2 * k_cut + 1;
  do {
    for (const auto& s : sums) {
      double sq = 0;
      for (int i = 0; i < cm.p; ++i) {
        double v = (digits[i] - k_cut) + s[i];
        sq += v * v;
      }
      spec.points.push_back({2.0 * M_PI * std::sqrt(sq), w});
    }
  } while (advance(digits, base));
  return spec;
}

ComplexMatrix torus_mode_operator(const CoveringMatrix& cm, const std::vector<long long>& k,
                                  int power, int j_cut) {
  if (static_cast<int>(k.size()) != cm.p) throw std::invalid_argument("torus_mode_operator: dimension mismatch");
  MatLL bt = cm.b.transpose().cast<long long>();
  MatLL btp = int_pow(bt, power);
  std::vector<long long> shift(cm.p, 0);
  for (int i = 0; i < cm.p; ++i)
    for (int j = 0; j < cm.p; ++j) shift[i] += btp(i, j) * k[j];

  const int base = 2 * j_cut + 1;
  Eigen::Index dim = 1;
  for (int i = 0; i < cm.p; ++i) dim *= base;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  std::vector<int> digits(cm.p, 0);
  Eigen::Index col = 0;
  do {
    bool inside = true;
    Eigen::Index row = 0, stride = 1;
    for (int i = 0; i < cm.p; ++i) {
      long long m = digits[i] - j_cut + shift[i];
      if (m < -j_cut || m > j_cut) { inside = false; break; }
      row += (m + j_cut) * stride;
      stride *= base;
    }
    if (inside) out(row, col) = 1.0;
    ++col;
  } while (advance(digits, base));
  return out;
}

std::vector<ComplexMatrix> torus_covariant_blocks(const CoveringMatrix& cm,
                                                  const std::vector<long long>& k, int n_cut,
                                                  int j_cut, int extra_power) {
  std::vector<ComplexMatrix> blocks;
  for (int n = 0; n <= n_cut; ++n)
    blocks.push_back(torus_mode_operator(cm, k, n_cut - n + extra_power, j_cut));
  return blocks;
}

}  // namespace nclab
