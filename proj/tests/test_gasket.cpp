#include "doctest.h"
#include "nclab/gasket.hpp"

using namespace nclab;

TEST_CASE("vertices and ifs maps") {
  CHECK(gasket_vertex(0) == Point2{0, 0});
  CHECK(gasket_vertex(1).y() == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK_THROWS(gasket_vertex(3));

  auto maps = ifs_maps();
  REQUIRE(maps.size() == 3);
  CHECK((maps[1](gasket_vertex(1)) - gasket_vertex(1)).norm() < 1e-15);  // fixed point
  CHECK((maps[0](gasket_vertex(2)) - Point2{0.5, 0}).norm() < 1e-15);
  CHECK((maps[2](gasket_vertex(0)) - Point2{0.5, 0}).norm() < 1e-15);
}

TEST_CASE("enumerate_edges counts and lengths") {
  auto e00 = enumerate_edges(0, 0);
  CHECK(e00.size() == 6);
  for (const auto& e : e00) {
    CHECK(e.length == doctest::Approx(1));
    CHECK((e.dst - e.src).norm() == doctest::Approx(e.length));
  }

  CHECK(enumerate_edges(1, 0).size() == 24);
  auto e11 = enumerate_edges(1, 1);
  CHECK(e11.size() == 78);
  int by_len[3] = {0, 0, 0};  // 2, 1, 1/2
  for (const auto& e : e11) {
    CHECK((e.dst - e.src).norm() == doctest::Approx(e.length));
    if (e.length == doctest::Approx(2)) ++by_len[0];
    else if (e.length == doctest::Approx(1)) ++by_len[1];
    else ++by_len[2];
  }
  CHECK(by_len[0] == 6);
  CHECK(by_len[1] == 18);
  CHECK(by_len[2] == 54);

  CHECK_THROWS(enumerate_edges(0, 20));  // budget
}

TEST_CASE("edges come in orientation-reversed pairs") {
  auto edges = enumerate_edges(0, 1);
  for (const auto& e : edges) {
    bool found = false;
    for (const auto& f : edges)
      if (f.word == e.word && f.i == e.j && f.j == e.i &&
          (f.src - e.dst).norm() < 1e-15 && (f.dst - e.src).norm() < 1e-15)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("edges_to_csv") {
  auto csv = edges_to_csv(enumerate_edges(0, 0));
  CHECK(csv.rfind("word,i,j,x_src,y_src,x_dst,y_dst,length\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  // full-precision coordinates round-trip through strtod
  auto pos = csv.find('\n') + 1;
  auto line = csv.substr(pos, csv.find('\n', pos) - pos);
  CHECK(line.find(",1,") != std::string::npos);
}

TEST_CASE("covering_p transcription") {
  const Point2 v0 = gasket_vertex(0), v1 = gasket_vertex(1), v2 = gasket_vertex(2);
  // identity on the base triangle
  for (const Point2& x : sample_gasket_points(50, 0, 7)) {
    CHECK((covering_p(x) - x).norm() < 1e-12);
  }
  // the upper cell folds down: 2 v1 -> v2, and the junction v1+v2 -> v0
  CHECK((covering_p(2 * v1) - v2).norm() < 1e-12);
  CHECK((covering_p(v1 + v2) - v0).norm() < 1e-12);
  CHECK((covering_p(v1) - v1).norm() < 1e-12);
  CHECK((covering_p(2 * v2) - v1).norm() < 1e-12);
  CHECK_THROWS(covering_p(Point2{-1, -1}));
}

TEST_CASE("p factors through phi") {
  for (const Point2& x : sample_gasket_points(300, 1, 11)) {
    Point2 lhs = covering_p(x);
    Point2 rhs = covering_phi(0.5 * x);  // phi(w0 x)
    CHECK((lhs - rhs).norm() < 1e-9);
  }
}

TEST_CASE("level shifts intertwine") {
  for (int n = 1; n <= 3; ++n) {
    for (const Point2& x : sample_gasket_points(150, n, 100 + n)) {
      Point2 lhs = covering_p_level(covering_phi_level(x, n), n);
      Point2 rhs = covering_phi_level(covering_p_level(x, n), n - 1);
      CHECK((lhs - rhs).norm() < 1e-9);
    }
  }
  CHECK_THROWS(covering_p_level(Point2{0, 0}, 0));
  CHECK_THROWS(covering_phi_level(Point2{0, 0}, -1));
}

TEST_CASE("edge_commutator_norm on coordinate functions") {
  auto edges = enumerate_edges(1, 2);
  CHECK(edge_commutator_norm([](const Point2&) { return 1.0; }, edges) == 0.0);
  CHECK(edge_commutator_norm([](const Point2& x) { return x.x(); }, edges) ==
        doctest::Approx(1));
  CHECK(edge_commutator_norm([](const Point2& x) { return x.y(); }, edges) ==
        doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("pullback_scaling_check") {
  auto id = pullback_scaling_check([](const Point2& x) { return x.x(); }, 0, 1, 2);
  CHECK(id.ratio == doctest::Approx(1));

  auto rep = pullback_scaling_check([](const Point2& x) { return x.x(); }, 2, 1, 3);
  CHECK(rep.expected == doctest::Approx(0.25));
  CHECK(rep.ratio == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS(pullback_scaling_check([](const Point2&) { return 0.0; }, 3, 1, 2));
}

TEST_CASE("gasket_spectrum") {
  auto s = gasket_spectrum(2, 1);
  REQUIRE(s.points.size() == 4);
  CHECK(s.total_weight() == doctest::Approx(240));
  CHECK(counting(s, 1.0) == doctest::Approx(24));  // the two coarse-cell levels
  CHECK(counting(s, 0.3) == doctest::Approx(6));
  CHECK(counting(s, 3.0) == doctest::Approx(240));
}

TEST_CASE("sample_gasket_points is deterministic and lands in the gasket hull") {
  auto a = sample_gasket_points(20, 0, 42);
  auto b = sample_gasket_points(20, 0, 42);
  REQUIRE(a.size() == 20);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (const auto& x : a) {
    CHECK(x.y() >= -1e-12);
    CHECK(x.x() >= x.y() / std::sqrt(3.0) - 1e-9);
    CHECK(x.x() <= 1 - x.y() / std::sqrt(3.0) + 1e-9);
  }
}
