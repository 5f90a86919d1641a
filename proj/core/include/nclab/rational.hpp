#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nclab {

// Exact rational arithmetic for frequencies, section offsets and phases.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "p/q", "p" or a plain decimal like "0.25".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return {num, den};
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return {std::stoll(digits), den};
  }
  return {std::stoll(text), 1};
}

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Reduce into [0, 1); used for phase exponents, exp(2*pi*i*x) periodic.
inline Rational mod_one(Rational x) {
  long long n = x.numerator(), d = x.denominator();
  long long m = ((n % d) + d) % d;
  return {m, d};
}

// A vector with exact rational entries (frequency vectors k in A^n Z^p).
using RationalVec = std::vector<Rational>;

inline Rational dot(const RationalVec& a, const RationalVec& b) {
  Rational s{0};
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational norm_sq(const RationalVec& v) { return dot(v, v); }

}  // namespace nclab
