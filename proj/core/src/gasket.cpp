#include "nclab/gasket.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nclab {

namespace {

Eigen::Matrix2d rot2(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

AffineMap rotation_about(double angle, const Point2& center) {
  AffineMap m;
  m.a = rot2(angle);
  m.b = center - m.a * center;
  return m;
}

bool in_triangle(const Point2& x, const Point2& p0, const Point2& p1, const Point2& p2,
                 double tol = 1e-9) {
  Eigen::Matrix2d t;
  t.col(0) = p1 - p0;
  t.col(1) = p2 - p0;
  Eigen::Vector2d lam = t.colPivHouseholderQr().solve(x - p0);
  return lam(0) >= -tol && lam(1) >= -tol && lam(0) + lam(1) <= 1 + tol;
}

struct Branch {
  Point2 t0, t1, t2;  // triangle of the branch domain
  AffineMap map;
};

Point2 apply_branches(const Point2& x, const std::vector<Branch>& branches, const char* who) {
  std::vector<Point2> values;
  for (const auto& br : branches)
    if (in_triangle(x, br.t0, br.t1, br.t2)) values.push_back(br.map(x));
  if (values.empty()) throw std::domain_error(std::string(who) + ": point outside domain");
  for (size_t i = 1; i < values.size(); ++i)
    if ((values[i] - values[0]).norm() > 1e-12)
      throw std::logic_error(std::string(who) + ": branch values disagree on overlap");
  return values.front();
}

}  // namespace

Point2 gasket_vertex(int j) {
  switch (j) {
    case 0: return {0.0, 0.0};
    case 1: return {0.5, std::sqrt(3.0) / 2.0};
    case 2: return {1.0, 0.0};
    default: throw std::invalid_argument("gasket_vertex: j must be 0, 1 or 2");
  }
}

std::vector<AffineMap> ifs_maps() {
  std::vector<AffineMap> maps;
  for (int j = 0; j < 3; ++j) {
    AffineMap m;
    m.a = 0.5 * Eigen::Matrix2d::Identity();
    m.b = 0.5 * gasket_vertex(j);  // v_j + (x - v_j)/2
    maps.push_back(m);
  }
  return maps;
}

std::vector<Edge> enumerate_edges(int out_level, int depth, std::size_t budget) {
  if (out_level < 0 || depth < 0) throw std::invalid_argument("enumerate_edges: bad levels");
  double cells = (std::pow(3.0, out_level + depth + 1) - 1) / 2;
  if (6 * cells > static_cast<double>(budget)) throw std::length_error("enumerate_edges: budget exceeded");

  auto maps = ifs_maps();
  const double scale = std::pow(2.0, out_level);
  std::vector<Edge> edges;

  // walk all cell addresses of length 0..N+m depth-first
  struct Frame {
    std::string word;
    AffineMap map;
  };
  std::vector<Frame> stack{{std::string{}, AffineMap{Eigen::Matrix2d::Identity(), Point2::Zero()}}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    Point2 verts[3];
    for (int t = 0; t < 3; ++t) verts[t] = scale * fr.map(gasket_vertex(t));
    const double len = scale * std::pow(0.5, static_cast<double>(fr.word.size()));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) edges.push_back({fr.word, i, j, verts[i], verts[j], len});
    if (static_cast<int>(fr.word.size()) < out_level + depth)
      for (int c = 2; c >= 0; --c) {
        AffineMap comp;
        comp.a = fr.map.a * maps[c].a;
        comp.b = fr.map.a * maps[c].b + fr.map.b;
        stack.push_back({fr.word + static_cast<char>('0' + c), comp});
      }
  }
  return edges;
}

std::string edges_to_csv(const std::vector<Edge>& edges) {
  auto fmt = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::string out = "word,i,j,x_src,y_src,x_dst,y_dst,length\n";
  for (const auto& e : edges)
    out += e.word + "," + std::to_string(e.i) + "," + std::to_string(e.j) + "," + fmt(e.src.x()) +
           "," + fmt(e.src.y()) + "," + fmt(e.dst.x()) + "," + fmt(e.dst.y()) + "," +
           fmt(e.length) + "\n";
  return out;
}

Point2 covering_p(const Point2& x) {
  const Point2 v0 = gasket_vertex(0), v1 = gasket_vertex(1), v2 = gasket_vertex(2);
  AffineMap id{Eigen::Matrix2d::Identity(), Point2::Zero()};
  // cells of K_1: K itself plus the two rotated upper/right copies
  std::vector<Branch> branches{
      {v0, v1, v2, id},
      {v1, 2 * v1, v1 + v2, rotation_about(4.0 * M_PI / 3.0, v1)},
      {v2, v1 + v2, 2 * v2, rotation_about(2.0 * M_PI / 3.0, v2)},
  };
  return apply_branches(x, branches, "covering_p");
}

Point2 covering_phi(const Point2& x) {
  const Point2 v0 = gasket_vertex(0), v1 = gasket_vertex(1), v2 = gasket_vertex(2);
  AffineMap dil{2.0 * Eigen::Matrix2d::Identity(), Point2::Zero()};  // w0^-1
  auto compose = [](const AffineMap& f, const AffineMap& g) {  // f o g
    return AffineMap{f.a * g.a, f.a * g.b + f.b};
  };
  std::vector<Branch> branches{
      {v0, 0.5 * v1, 0.5 * v2, dil},
      {0.5 * (v1 + v0), v1, 0.5 * (v1 + v2), compose(rotation_about(4.0 * M_PI / 3.0, v1), dil)},
      {0.5 * (v2 + v0), 0.5 * (v2 + v1), v2, compose(rotation_about(2.0 * M_PI / 3.0, v2), dil)},
  };
  return apply_branches(x, branches, "covering_phi");
}

Point2 covering_p_level(const Point2& x, int n) {
  if (n < 1) throw std::invalid_argument("covering_p_level: n must be >= 1");
  const double s = std::pow(2.0, n - 1);
  return s * covering_p(x / s);
}

Point2 covering_phi_level(const Point2& x, int n) {
  if (n < 0) throw std::invalid_argument("covering_phi_level: n must be >= 0");
  const double s = std::pow(2.0, n);
  return s * covering_phi(x / s);
}

double edge_commutator_norm(const GasketFunction& f, const std::vector<Edge>& edges) {
  double sup = 0;
  for (const auto& e : edges)
    sup = std::max(sup, std::abs(f(e.dst) - f(e.src)) / e.length);
  return sup;
}

GasketScalingReport pullback_scaling_check(const GasketFunction& f, int k, int out_level,
                                           int depth) {
  if (k < 0 || k > depth) throw std::invalid_argument("pullback_scaling_check: need 0 <= k <= m");
  GasketScalingReport rep;
  rep.expected = std::pow(0.5, k);
  const double s = std::pow(0.5, k);
  GasketFunction pullback = [&](const Point2& x) { return f(s * x); };
  rep.norm_pullback = edge_commutator_norm(pullback, enumerate_edges(out_level, depth));
  rep.norm_f = edge_commutator_norm(f, enumerate_edges(out_level, depth - k));
  rep.ratio = rep.norm_f > 0 ? rep.norm_pullback / rep.norm_f : 0.0;
  return rep;
}

WeightedSpectrum gasket_spectrum(int out_level, int depth) {
  WeightedSpectrum spec;
  spec.label = "gasket(N=" + std::to_string(out_level) + ",m=" + std::to_string(depth) + ")";
  for (int j = -depth; j <= out_level; ++j)
    spec.points.push_back({std::pow(2.0, -j), 6.0 * std::pow(3.0, out_level - j)});
  return spec;
}

std::vector<Point2> sample_gasket_points(int count, int level, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  auto maps = ifs_maps();
  const double scale = std::pow(2.0, level);
  std::vector<Point2> points;
  points.reserve(count);
  for (int n = 0; n < count; ++n) {
    // a 48-deep address pins the point to ~4e-15
    Point2 x = gasket_vertex(pick(rng));
    for (int d = 0; d < 48; ++d) x = maps[pick(rng)](x);
    points.push_back(scale * x);
  }
  return points;
}

}  // namespace nclab
