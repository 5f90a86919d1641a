#include <random>

#include "doctest.h"
#include "nclab/spectrum.hpp"
#include "nclab/torus.hpp"
#include "nclab/uhf.hpp"

using namespace nclab;

TEST_CASE("counting is a strict left count") {
  WeightedSpectrum s;
  for (int n = 0; n < 10; ++n) s.points.push_back({static_cast<double>(n), 1.0});
  CHECK(counting(s, 5.5) == doctest::Approx(6));
  WeightedSpectrum h{{{1, 0.5}, {2, 0.5}}, ""};
  CHECK(counting(h, 1.0) == 0.0);  // value < t, strictly
  CHECK_THROWS(counting(s, 0.0));
  CHECK_THROWS(counting(s, -1.0));
}

TEST_CASE("counting on the Christensen-Ivan spectrum telescopes") {
  auto s = ci_spectrum(2, 2.0, 3);
  CHECK(counting(s, 64.0 + 1e-9) == doctest::Approx(64));
  CHECK(s.total_weight() == doctest::Approx(64));
}

TEST_CASE("nat_spectrum") {
  auto s = nat_spectrum(3);
  REQUIRE(s.points.size() == 4);
  CHECK(s.points[2].value == 2.0);
  CHECK(counting(nat_spectrum(100), 50.5) == doctest::Approx(51));

  auto fit = dimension_fit(nat_spectrum(128), dyadic_grid(4, 64));
  CHECK(std::abs(fit.slope - 1.0) < 0.05);
}

TEST_CASE("tensor_spectrum pairs by hypotenuse") {
  WeightedSpectrum s1{{{0, 1}, {1, 1}}, "a"}, s2{{{0, 1}, {2, 1}}, "b"};
  auto t = tensor_spectrum(s1, s2);
  std::vector<double> vals;
  for (auto& p : t.points) vals.push_back(p.value);
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(0));
  CHECK(vals[1] == doctest::Approx(1));
  CHECK(vals[2] == doctest::Approx(2));
  CHECK(vals[3] == doctest::Approx(std::sqrt(5.0)));

  auto same = tensor_spectrum(s1, WeightedSpectrum{{{0, 1}}, ""});
  REQUIRE(same.points.size() == 2);
  CHECK(same.points[0].value == s1.points[0].value);

  auto w = tensor_spectrum(WeightedSpectrum{{{1, 0.5}}, ""}, WeightedSpectrum{{{1, 3}}, ""});
  CHECK(w.points[0].value == doctest::Approx(std::sqrt(2.0)));
  CHECK(w.points[0].weight == doctest::Approx(1.5));

  CHECK_THROWS(tensor_spectrum(nat_spectrum(100), nat_spectrum(100), 50));
}

TEST_CASE("sandwich_check") {
  WeightedSpectrum zero{{{0, 1}}, ""};
  auto r = sandwich_check(zero, zero, 1.0);
  CHECK(r.ok);
  CHECK(r.lower == doctest::Approx(1));
  CHECK(r.upper == doctest::Approx(1));

  auto n64 = nat_spectrum(64);
  auto rep = sandwich_check(n64, n64, 10.0);
  CHECK(rep.ok);
  CHECK(rep.lower == doctest::Approx(64));  // counting(7.07)^2
  CHECK(rep.upper == doctest::Approx(100));
  // middle by brute-force pair enumeration
  double middle = 0;
  for (auto& a : n64.points)
    for (auto& b : n64.points)
      if (std::hypot(a.value, b.value) < 10.0) middle += a.weight * b.weight;
  CHECK(rep.middle == doctest::Approx(middle));
}

TEST_CASE("tensor counting equals the convolution formula on random spectra") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> val(0.0, 20.0), wt(0.1, 2.0);
  std::uniform_int_distribution<int> size(1, 50);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedSpectrum s1, s2;
    for (int i = size(rng); i > 0; --i) s1.points.push_back({val(rng), wt(rng)});
    for (int i = size(rng); i > 0; --i) s2.points.push_back({val(rng), wt(rng)});
    auto ten = tensor_spectrum(s1, s2);
    double t = 1.0 + val(rng);
    double direct = counting(ten, t);
    double conv = 0;
    for (auto& p : s1.points)
      if (p.value < t) conv += p.weight * counting(s2, std::sqrt(t * t - p.value * p.value));
    CHECK(std::abs(direct - conv) <= 1e-9 * (1 + conv));
  }
}

TEST_CASE("dimension_fit") {
  auto fit = dimension_fit(torus_spectrum(2, 64), dyadic_grid(2 * M_PI * 4, 2 * M_PI * 32));
  CHECK(fit.slope > 1.9);
  CHECK(fit.slope < 2.1);

  fit = dimension_fit(nat_spectrum(2048), dyadic_grid(8, 1024));
  CHECK(fit.slope > 0.97);
  CHECK(fit.slope < 1.03);

  std::vector<double> grid;
  for (int n = 2; n <= 11; ++n) grid.push_back(std::pow(2.0, 2 * n));
  fit = dimension_fit(ci_spectrum(2, 2.0, 12), grid);
  CHECK(fit.slope > 0.98);
  CHECK(fit.slope < 1.02);
  CHECK(fit.max_tail_slope >= fit.slope - 0.05);

  CHECK_THROWS(dimension_fit(nat_spectrum(4), std::vector<double>{1, 1, 2}));  // not increasing
  CHECK_THROWS(dimension_fit(WeightedSpectrum{{{5, 1}}, ""}, dyadic_grid(1, 4)));
}

TEST_CASE("crossed slope is base slope plus one") {
  auto base = torus_spectrum(1, 256);
  auto crossed = tensor_spectrum(base.compressed(), nat_spectrum(1024).compressed());
  double s0 = dimension_fit(base, log_grid(8 * M_PI, M_PI * 256, 10)).slope;
  double s1 = dimension_fit(crossed, log_grid(8 * M_PI, 400, 10)).slope;
  CHECK(std::abs(s1 - (s0 + 1)) < 0.15);
}

TEST_CASE("counting is nondecreasing and bounded by total weight") {
  auto s = ci_spectrum(3, 1.5, 6);
  double prev = 0;
  for (double t : log_grid(0.5, 2 * s.max_value(), 40)) {
    double c = counting(s, t);
    CHECK(c >= prev);
    CHECK(c <= s.total_weight() + 1e-9);
    prev = c;
  }
  CHECK(counting(s, 2 * s.max_value()) == doctest::Approx(s.total_weight()));
}

TEST_CASE("csv round trip is bit exact") {
  WeightedSpectrum s{{{M_PI, 1.0 / 3.0}, {std::sqrt(2.0), 0.1}, {0, 2}}, "roundtrip"};
  auto back = spectrum_from_csv(to_csv(s), s.label);
  REQUIRE(back.points.size() == s.points.size());
  for (size_t i = 0; i < s.points.size(); ++i) {
    CHECK(back.points[i].value == s.points[i].value);
    CHECK(back.points[i].weight == s.points[i].weight);
  }
  CHECK_THROWS(spectrum_from_csv("wrong,header\n1,2\n", ""));
}

TEST_CASE("grids and valid ranges") {
  auto g = dyadic_grid(8, 1024);
  REQUIRE(g.size() == 8);
  CHECK(g.front() == 8);
  CHECK(g.back() == 1024);
  auto lg = log_grid(1, 100, 5);
  CHECK(lg[2] == doctest::Approx(10));

  auto vr = fit_valid_range(nat_spectrum(100));
  CHECK(vr.first == doctest::Approx(4));
  CHECK(vr.second == doctest::Approx(50));
}
