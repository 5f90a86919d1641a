#include "nclab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nclab {

double WeightedSpectrum::total_weight() const {
  double w = 0;
  for (const auto& p : points) w += p.weight;
  return w;
}

double WeightedSpectrum::max_value() const {
  double m = 0;
  for (const auto& p : points) m = std::max(m, p.value);
  return m;
}

double WeightedSpectrum::min_nonzero_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : points)
    if (p.value > 0) m = std::min(m, p.value);
  return m;
}

WeightedSpectrum WeightedSpectrum::compressed() const {
  std::map<double, double> acc;
  for (const auto& p : points) acc[p.value] += p.weight;
  WeightedSpectrum out;
  out.label = label;
  out.points.reserve(acc.size());
  for (const auto& [v, w] : acc) out.points.push_back({v, w});
  return out;
}

double counting(const WeightedSpectrum& s, double t) {
  if (t <= 0) throw std::invalid_argument("counting: t must be > 0");
  double sum = 0;
  for (const auto& p : s.points)
    if (p.value < t) sum += p.weight;
  return sum;
}

WeightedSpectrum nat_spectrum(int n_max) {
  WeightedSpectrum s;
  s.label = "nat(" + std::to_string(n_max) + ")";
  s.points.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) s.points.push_back({static_cast<double>(n), 1.0});
  return s;
}

WeightedSpectrum tensor_spectrum(const WeightedSpectrum& s1, const WeightedSpectrum& s2,
                                 std::size_t budget) {
  std::size_t n = s1.points.size() * s2.points.size();
  if (n > budget) throw std::length_error("tensor_spectrum: pair count exceeds budget");
  WeightedSpectrum out;
  out.label = s1.label + " x " + s2.label;
  out.points.reserve(n);
  for (const auto& a : s1.points)
    for (const auto& b : s2.points)
      out.points.push_back({std::hypot(a.value, b.value), a.weight * b.weight});
  return out;
}

SandwichReport sandwich_check(const WeightedSpectrum& s1, const WeightedSpectrum& s2,
                              const WeightedSpectrum& tensor, double t) {
  const double rt = t / std::sqrt(2.0);
  SandwichReport r{};
  r.lower = counting(s1, rt) * counting(s2, rt);
  r.middle = counting(tensor, t);
  r.upper = counting(s1, t) * counting(s2, t);
  // tolerate float round-off in the weight sums
  const double eps = 1e-9 * (1.0 + r.upper);
  r.ok = r.lower <= r.middle + eps && r.middle <= r.upper + eps;
  return r;
}

SandwichReport sandwich_check(const WeightedSpectrum& s1, const WeightedSpectrum& s2, double t) {
  return sandwich_check(s1, s2, tensor_spectrum(s1.compressed(), s2.compressed()), t);
}

DimensionFit dimension_fit(const WeightedSpectrum& s, const std::vector<double>& grid) {
  for (size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("dimension_fit: grid must be strictly increasing");

  DimensionFit fit;
  fit.valid_range = fit_valid_range(s);
  std::vector<double> xs, ys;
  for (double t : grid) {
    double c = counting(s, t);
    if (c <= 0) continue;  // log of zero undefined, drop
    fit.grid.emplace_back(t, c);
    xs.push_back(std::log(t));
    ys.push_back(std::log(c));
  }
  const size_t n = xs.size();
  if (n < 3) throw std::invalid_argument("dimension_fit: fewer than 3 usable grid points");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy * sxx - sx * sxy) / denom;

  fit.max_tail_slope = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < n; ++i) {
    double sec = (ys[n - 1] - ys[i]) / (xs[n - 1] - xs[i]);
    fit.max_tail_slope = std::max(fit.max_tail_slope, sec);
  }
  return fit;
}

std::pair<double, double> fit_valid_range(const WeightedSpectrum& s) {
  return {4.0 * s.min_nonzero_value(), s.max_value() / 2.0};
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0) || hi <= lo || n < 2) throw std::invalid_argument("log_grid: bad window");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
  return g;
}

std::vector<double> dyadic_grid(double lo, double hi) {
  std::vector<double> g;
  for (double t = lo; t <= hi * (1 + 1e-12); t *= 2) g.push_back(t);
  return g;
}

static std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const WeightedSpectrum& s) {
  std::string out = "value,weight\n";
  for (const auto& p : s.points) out += fmt17(p.value) + "," + fmt17(p.weight) + "\n";
  return out;
}

WeightedSpectrum spectrum_from_csv(const std::string& csv, const std::string& label) {
  WeightedSpectrum s;
  s.label = label;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "value,weight")
    throw std::invalid_argument("spectrum_from_csv: missing value,weight header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("spectrum_from_csv: bad row: " + line);
    s.points.push_back({std::strtod(line.substr(0, comma).c_str(), nullptr),
                        std::strtod(line.substr(comma + 1).c_str(), nullptr)});
  }
  return s;
}

std::string to_json(const WeightedSpectrum& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.points.size(); ++i) {
    if (i) out += ",";
    out += "[" + fmt17(s.points[i].value) + "," + fmt17(s.points[i].weight) + "]";
  }
  return out + "]";
}

std::string to_json(const DimensionFit& f) {
  std::string out = "{\"slope\":" + fmt17(f.slope) + ",\"intercept\":" + fmt17(f.intercept) +
                    ",\"max_tail_slope\":" + fmt17(f.max_tail_slope) + ",\"grid\":[";
  for (size_t i = 0; i < f.grid.size(); ++i) {
    if (i) out += ",";
    out += "[" + fmt17(f.grid[i].first) + "," + fmt17(f.grid[i].second) + "]";
  }
  out += "],\"valid_range\":[" + fmt17(f.valid_range.first) + "," + fmt17(f.valid_range.second) + "]}";
  return out;
}

}  // namespace nclab
