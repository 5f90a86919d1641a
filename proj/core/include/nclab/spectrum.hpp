#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nclab {

// One point of |D| together with its trace weight tau(spectral projection).
struct SpectralPoint {
  double value;   // eigenvalue of |D|, >= 0
  double weight;  // trace weight, > 0
};

// Finite stand-in for |D| with a semifinite trace.
struct WeightedSpectrum {
  std::vector<SpectralPoint> points;
  std::string label;

  double total_weight() const;
  double max_value() const;
  double min_nonzero_value() const;
  // Merge points with equal value (exact double equality), summing weights.
  WeightedSpectrum compressed() const;
};

// Counting function: sum of weights with value < t (strict). Rejects t <= 0.
double counting(const WeightedSpectrum& s, double t);

// Spectrum of the number operator on l2({0..N}): {(n, 1)}.
WeightedSpectrum nat_spectrum(int n_max);

// |D| of the graded tensor sum: all pairs (hypot(v, u), w * w').
// Throws if |S1|*|S2| exceeds the budget.
WeightedSpectrum tensor_spectrum(const WeightedSpectrum& s1, const WeightedSpectrum& s2,
                                 std::size_t budget = 64'000'000);

struct SandwichReport {
  double lower;   // counting(S1, t/sqrt2) * counting(S2, t/sqrt2)
  double middle;  // counting(tensor, t)
  double upper;   // counting(S1, t) * counting(S2, t)
  bool ok;
};

// Checks lower <= middle <= upper at a single t. The tensor spectrum may be
// passed in to avoid recomputation across a grid.
SandwichReport sandwich_check(const WeightedSpectrum& s1, const WeightedSpectrum& s2, double t);
SandwichReport sandwich_check(const WeightedSpectrum& s1, const WeightedSpectrum& s2,
                              const WeightedSpectrum& tensor, double t);

struct DimensionFit {
  double slope = 0;
  double intercept = 0;
  double max_tail_slope = 0;
  std::vector<std::pair<double, double>> grid;  // (t, counting(t)), only points with counting > 0
  std::pair<double, double> valid_range{0, 0};
};

// Least-squares slope of log counting against log t. Grid points with zero
// counting are dropped; fewer than 3 usable points is an error.
// max_tail_slope is the largest secant slope over grid suffixes, the finite
// surrogate of the limsup.
DimensionFit dimension_fit(const WeightedSpectrum& s, const std::vector<double>& grid);

// Suggested fit window: [4 * min nonzero value, max value / 2].
std::pair<double, double> fit_valid_range(const WeightedSpectrum& s);

// Log-spaced grid of n points in [lo, hi] (dyadic when ratio allows).
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> dyadic_grid(double lo, double hi);

// CSV with header value,weight at 17 significant digits (bit-exact round trip).
std::string to_csv(const WeightedSpectrum& s);
WeightedSpectrum spectrum_from_csv(const std::string& csv, const std::string& label = "");

std::string to_json(const WeightedSpectrum& s);
std::string to_json(const DimensionFit& f);

}  // namespace nclab
