#include "nclab/rotation.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nclab {

namespace {

Complex root_of_unity(const Rational& exponent) {
  return std::exp(Complex{0, 2.0 * M_PI * to_double(exponent)});
}

}  // namespace

RotationParams build_generators(long long p_theta, long long q) {
  if (q < 1) throw std::invalid_argument("build_generators: q must be >= 1");
  if (std::gcd(std::llabs(p_theta), q) != 1) throw std::invalid_argument("build_generators: gcd(p, q) != 1");
  RotationParams rp;
  rp.p_theta = p_theta;
  rp.q = q;
  rp.theta = Rational{p_theta, q};

  rp.u0 = ComplexMatrix::Zero(q, q);
  rp.v0 = ComplexMatrix::Zero(q, q);
  for (long long k = 1; k <= q; ++k) {
    rp.u0(k - 1, k - 1) = root_of_unity(mod_one(Rational{(k - 1) * p_theta, q}));
    if (k < q) rp.v0(k - 1, k) = 1.0;  // (V0)_{hk} = delta_{h+1,k}
  }
  rp.v0(q - 1, 0) = 1.0;  // wrap delta_{h,q} delta_{k,1}

  // calibrate V0 U0 = lambda^sigma U0 V0
  ComplexMatrix comm = rp.v0 * rp.u0 * rp.v0.adjoint() * rp.u0.adjoint();
  Complex scalar = comm(0, 0);
  if (operator_norm(comm - scalar * ComplexMatrix::Identity(q, q)) > 1e-12)
    throw std::logic_error("build_generators: commutator not scalar");
  Complex lam = root_of_unity(mod_one(rp.theta));
  rp.sigma = std::abs(scalar - lam) <= std::abs(scalar - std::conj(lam)) ? 1 : -1;
  return rp;
}

Monomial twisted_mono_product(const RotationParams& rp, const Monomial& x, const Monomial& y) {
  Monomial out;
  out.m = x.m + y.m;
  out.n = x.n + y.n;
  out.phase = mod_one(x.phase + y.phase + Rational{rp.sigma * x.n * y.m, 1} * rp.theta);
  return out;
}

NCMonomialSum nc_monomial(long long m, long long n, Complex c) {
  NCMonomialSum s;
  s.coeffs[{m, n}] = c;
  return s;
}

NCMonomialSum twisted_product(const RotationParams& rp, const NCMonomialSum& x,
                              const NCMonomialSum& y) {
  NCMonomialSum out;
  for (const auto& [fx, cx] : x.coeffs)
    for (const auto& [fy, cy] : y.coeffs) {
      Rational ph = mod_one(Rational{rp.sigma * fx.second * fy.first, 1} * rp.theta);
      auto key = std::make_pair(fx.first + fy.first, fx.second + fy.second);
      out.coeffs[key] += cx * cy * root_of_unity(ph);
    }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = std::abs(it->second) < 1e-15 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

double monomial_commutator_norm(long long m, long long n) {
  return 2.0 * M_PI * std::hypot(static_cast<double>(m), static_cast<double>(n));
}

double regular_rep_commutator_norm(const RotationParams& rp, const NCMonomialSum& x, int k_cut) {
  long long max_freq = 0;
  for (const auto& [f, c] : x.coeffs)
    max_freq = std::max({max_freq, std::llabs(f.first), std::llabs(f.second)});
  if (2 * max_freq > k_cut) throw std::invalid_argument("regular_rep_commutator_norm: cutoff too small");

  const int inner = static_cast<int>(k_cut - max_freq);
  const long long side = 2LL * inner + 1;
  const long long dim = side * side;  // interior basis monomials; spinor factor C^2 on top
  auto idx = [&](long long m, long long n) { return (m + inner) * side + (n + inner); };

  // one term: column (m,n) -> row (m+m', n+n') with phase lambda^(sigma n' m)
  // and 2x2 spinor block 2pi (m' eps1 + n' eps2)
  struct Term {
    long long dm, dn;
    Complex coeff;
    ComplexMatrix spin;  // 2x2
  };
  std::vector<Term> terms;
  for (const auto& [f, c] : x.coeffs) {
    if (f.first == 0 && f.second == 0) continue;  // scalars commute with D0
    terms.push_back({f.first, f.second, c,
                     2.0 * M_PI * (static_cast<double>(f.first) * pauli(1) +
                                   static_cast<double>(f.second) * pauli(2))});
  }
  if (terms.empty()) return 0.0;

  using Vec = Eigen::VectorXcd;  // layout: basis index major, spinor minor
  auto apply = [&](const Vec& in, bool adjoint) {
    Vec out = Vec::Zero(2 * dim);
    for (const auto& t : terms) {
      for (long long m = -inner; m <= inner; ++m) {
        for (long long n = -inner; n <= inner; ++n) {
          long long tm = m + t.dm, tn = n + t.dn;
          if (std::llabs(tm) > inner || std::llabs(tn) > inner) continue;
          Complex ph = t.coeff * root_of_unity(mod_one(Rational{rp.sigma * t.dn * m, 1} * rp.theta));
          Eigen::Vector2cd spin_in;
          if (!adjoint) {
            spin_in << in(2 * idx(m, n)), in(2 * idx(m, n) + 1);
            Eigen::Vector2cd r = ph * (t.spin * spin_in);
            out(2 * idx(tm, tn)) += r(0);
            out(2 * idx(tm, tn) + 1) += r(1);
          } else {
            spin_in << in(2 * idx(tm, tn)), in(2 * idx(tm, tn) + 1);
            Eigen::Vector2cd r = std::conj(ph) * (t.spin.adjoint() * spin_in);
            out(2 * idx(m, n)) += r(0);
            out(2 * idx(m, n) + 1) += r(1);
          }
        }
      }
    }
    return out;
  };

  // power iteration on A*A
  Vec v = Vec::Zero(2 * dim);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-1, 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex{u(rng), u(rng)};
  v.normalize();
  double prev = 0;
  for (int it = 0; it < 5000; ++it) {
    Vec w = apply(apply(v, false), true);
    double lam = w.norm();
    if (lam == 0) return 0.0;
    v = w / lam;
    if (std::abs(lam - prev) < 1e-13 * std::max(1.0, lam) && it > 10) return std::sqrt(lam);
    prev = lam;
  }
  return std::sqrt(prev);
}

EndoFrequency endo_frequency(const RotationParams& rp, const CoveringMatrix& cm, long long m,
                             long long n, int steps) {
  if (cm.p != 2) throw std::invalid_argument("endo_frequency: B must be 2x2");
  long long residue = ((cm.det % rp.q) + rp.q) % rp.q;
  if (residue != 1 % rp.q) throw std::invalid_argument("endo_frequency: det B != 1 (mod q)");
  EndoFrequency out;
  out.freq = apply_a_pow(cm, RationalVec{Rational{m}, Rational{n}}, steps);
  out.norm = 2.0 * M_PI * std::sqrt(to_double(norm_sq(out.freq)));
  return out;
}

}  // namespace nclab
