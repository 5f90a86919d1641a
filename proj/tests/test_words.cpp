#include <random>

#include "doctest.h"
#include "nclab/words.hpp"

using namespace nclab;

namespace {
const Rational kTheta{1, 5};

RawWord random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), let(0, 3);
  RawWord w;
  for (int i = len(rng); i > 0; --i) w.letters.push_back(static_cast<Letter>(let(rng)));
  return w;
}
}  // namespace

TEST_CASE("parse_word grammar") {
  auto w = parse_word("U V");
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == Letter::U);
  CHECK(w.letters[1] == Letter::V);
  CHECK(w.scalar_exp == Rational{0});

  w = parse_word("V^2 U*^3");
  REQUIRE(w.letters.size() == 5);
  CHECK(w.letters[1] == Letter::V);
  CHECK(w.letters[2] == Letter::Ustar);

  w = parse_word("e(1/3) V* V");
  CHECK(w.scalar_exp == Rational{1, 3});
  CHECK(w.letters[0] == Letter::Vstar);

  CHECK_THROWS_AS(parse_word("U X"), WordSyntaxError);
  CHECK_THROWS_AS(parse_word(""), WordSyntaxError);
  CHECK_THROWS_AS(parse_word("e(1/0) U"), WordSyntaxError);
  try {
    parse_word("U V q");
  } catch (const WordSyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("normalize_word basics") {
  auto nf = normalize_word(parse_word("V* V"), kTheta);
  CHECK(nf == CrossedWord{});  // the identity monomial

  CHECK(normalize_word(parse_word("U V"), kTheta) ==
        normalize_word(parse_word("e(1/5) V U"), kTheta));

  nf = normalize_word(parse_word("U V V* U"), kTheta);
  CHECK(nf.phase == Rational{0});  // the two transported phases cancel
  CHECK(nf.u_pow == 2);
  CHECK(nf.v_pow == 1);
  CHECK(nf.vstar_pow == 1);
  CHECK(nf.str() == "e(0/1) U^2 V V*");
}

TEST_CASE("normal form matches the truncated matrix representation") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    RawWord w = random_word(rng, 12);
    auto nf = normalize_word(w, kTheta);
    auto a = eval_word_map(w, kTheta, 28, 28);
    auto b = eval_word_map(nf, kTheta, 28, 28);
    CHECK(interior_diff_norm(a, b, 12) < 1e-8);
  }
}

TEST_CASE("confluence under random strategies, exact phases") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 50; ++trial) {
    RawWord w = random_word(rng, 14);
    auto reference = normalize_word(w, kTheta);
    for (int s = 0; s < 20; ++s) {
      auto nf = normalize_word_random(w, kTheta, rng);
      CHECK(nf == reference);
    }
  }
}

TEST_CASE("termination in at most L^2 rule applications") {
  std::mt19937 rng(161803);
  for (int trial = 0; trial < 200; ++trial) {
    RawWord w = random_word(rng, 16);
    size_t applications = 0;
    normalize_word_random(w, kTheta, rng, &applications);
    CHECK(applications <= w.letters.size() * w.letters.size());
  }
}

TEST_CASE("eval_word encodes the defining relations") {
  const int n_cut = 16, m_cut = 16;
  ComplexMatrix uv = eval_word(parse_word("U V"), kTheta, n_cut, m_cut);
  ComplexMatrix vu = eval_word(parse_word("e(1/5) V U"), kTheta, n_cut, m_cut);
  CHECK(operator_norm(compress_interior(uv - vu, n_cut, m_cut)) < 1e-10);

  ComplexMatrix vsv = eval_word(parse_word("V* V"), kTheta, n_cut, m_cut);
  ComplexMatrix one = ComplexMatrix::Identity(vsv.rows(), vsv.cols());
  CHECK(operator_norm(compress_interior(vsv - one, n_cut, m_cut)) < 1e-12);

  // VV* is a proper projection; its defect sits at the truncation boundary
  ComplexMatrix vvs = eval_word(parse_word("V V*"), kTheta, n_cut, m_cut);
  CHECK(operator_norm(vvs - one) > 0.5);
  CHECK(operator_norm(vvs * vvs - vvs) < 1e-12);
}

TEST_CASE("eval_word equals the product of letter matrices") {
  ComplexMatrix u = eval_word(parse_word("U"), kTheta, 6, 6);
  ComplexMatrix v = eval_word(parse_word("V"), kTheta, 6, 6);
  ComplexMatrix w = eval_word(parse_word("U V V U*"), kTheta, 6, 6);
  CHECK(operator_norm(w - u * v * v * u.adjoint()) < 1e-13);
  CHECK_THROWS(eval_word(parse_word("U"), kTheta, 1, 1));
}

TEST_CASE("CrossedWord expand round-trips through normalization") {
  CrossedWord cw;
  cw.phase = Rational{2, 5};
  cw.u_pow = -2;
  cw.v_pow = 1;
  cw.vstar_pow = 2;
  CHECK(normalize_word(cw.expand(), kTheta) == cw);
}
