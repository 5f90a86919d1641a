#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nclab/spectrum.hpp"

namespace nclab {

using Point2 = Eigen::Vector2d;

// Sierpinski gasket on the unit triangle v0=(0,0), v1=(1/2,sqrt3/2), v2=(1,0);
// K_N = w0^-N K is the 2^N-dilated gasket.

Point2 gasket_vertex(int j);

struct AffineMap {
  Eigen::Matrix2d a;
  Point2 b;
  Point2 operator()(const Point2& x) const { return a * x + b; }
};

// w_j = dilation by 1/2 around v_j
std::vector<AffineMap> ifs_maps();

struct Edge {
  std::string word;  // cell address in K_N, over {0,1,2}
  int i = 0, j = 0;  // ordered vertex pair of the cell
  Point2 src, dst;
  double length = 0;
};

// All oriented cell edges of K_N with length >= 2^-m; 6 * 3^(N-j) edges of
// length 2^j for each j in [-m, N].
std::vector<Edge> enumerate_edges(int out_level, int depth, std::size_t budget = 10'000'000);

std::string edges_to_csv(const std::vector<Edge>& edges);

// The covering p: K_1 -> K (identity on K, a rotation on the two upper cells);
// all applicable branches must agree within 1e-12 at shared points.
Point2 covering_p(const Point2& x);

// phi: K -> K with p(x) = phi(w0(x)).
Point2 covering_phi(const Point2& x);

// Level shifts p_n: K_n -> K_(n-1) and phi_n: K_n -> K_n.
Point2 covering_p_level(const Point2& x, int n);
Point2 covering_phi_level(const Point2& x, int n);

using GasketFunction = std::function<double(const Point2&)>;

// sup over edges of |f(e+) - f(e-)| / length(e)
double edge_commutator_norm(const GasketFunction& f, const std::vector<Edge>& edges);

struct GasketScalingReport {
  double norm_pullback = 0;  // |[D, f o w0^k]| on edges(N, m)
  double norm_f = 0;         // |[D, f]| on edges(N, m-k)
  double ratio = 0;
  double expected = 0;  // 2^-k
};

GasketScalingReport pullback_scaling_check(const GasketFunction& f, int k, int out_level,
                                           int depth);

// {(2^-j, 6 * 3^(N-j)) : j = -m..N}
WeightedSpectrum gasket_spectrum(int out_level, int depth);

// Pseudo-random gasket points of K_level via deep random addresses.
std::vector<Point2> sample_gasket_points(int count, int level, unsigned seed);

}  // namespace nclab
