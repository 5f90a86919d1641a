#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nclab/matrix.hpp"
#include "nclab/rational.hpp"

namespace nclab {

// Words over the generators of the algebra spanned by a unitary U and an
// isometry V with UV = e(theta) VU, where e(x) := exp(2 pi i x).

enum class Letter : uint8_t { U, Ustar, V, Vstar };

struct RawWord {
  std::vector<Letter> letters;
  Rational scalar_exp{0};  // prefactor e(scalar_exp)
};

struct WordSyntaxError : std::runtime_error {
  size_t position;
  WordSyntaxError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: WORD := SCALAR? FACTOR+ ; SCALAR := 'e(' RATIONAL ')' ;
// FACTOR := ('U'|'U*'|'V'|'V*') ('^' INT)?
RawWord parse_word(const std::string& text);

// Normal form e(phase) U^j V^m V*^n.
struct CrossedWord {
  Rational phase{0};  // exponent in [0,1)
  long long u_pow = 0;
  long long v_pow = 0;
  long long vstar_pow = 0;

  bool operator==(const CrossedWord&) const = default;
  std::string str() const;  // e(p/q) U^j V^m V*^n
  RawWord expand() const;
};

// Rewriting state for strategy experiments; phase accumulates exactly.
struct RewriteState {
  std::vector<Letter> letters;
  Rational phase{0};
};

// Positions where some rule applies (cancellation U U*, U* U, V* V, or a
// phase swap moving V / V* right past U / U*).
std::vector<size_t> applicable_positions(const RewriteState& st);

// Applies the unique rule at position pos; returns false if none applies.
bool apply_rule_at(RewriteState& st, size_t pos, const Rational& theta);

// Confluent rewriting to the unique normal form (deterministic strategy).
CrossedWord normalize_word(const RawWord& w, const Rational& theta);

// Same normal form via a seeded random rule-application order; reports the
// number of rule applications (termination measure check: <= L^2).
CrossedWord normalize_word_random(const RawWord& w, const Rational& theta, std::mt19937& rng,
                                  size_t* applications = nullptr);

// Truncated concrete representation on C^(N+1) (x) C^(2M+1):
//   V shifts the first index up, U multiplies by e(n theta) and shifts the
//   Fourier mode up; adjoints are the truncated-matrix adjoints. The whole
// word acts as a partial permutation with exact phase bookkeeping.
struct MonomialMap {
  int n_dim;  // N + 1
  int m_dim;  // 2M + 1
  std::vector<int64_t> target;  // column -> row index, -1 if annihilated
  std::vector<Rational> phase;  // exponent; only meaningful where target >= 0
  Rational scalar{0};           // global prefactor exponent
};

MonomialMap eval_word_map(const RawWord& w, const Rational& theta, int n_cut, int m_cut);
MonomialMap eval_word_map(const CrossedWord& w, const Rational& theta, int n_cut, int m_cut);

// Dense materialization (equal to the product of the truncated generator
// matrices, evaluated left to right).
ComplexMatrix eval_word(const RawWord& w, const Rational& theta, int n_cut, int m_cut);
ComplexMatrix eval_word(const CrossedWord& w, const Rational& theta, int n_cut, int m_cut);

// Operator norm of A - B compressed to rows and columns with
// n in [margin, N-margin] and |mode| <= M-margin.
double interior_diff_norm(const MonomialMap& a, const MonomialMap& b, int margin);

// Interior compression of a dense matrix on the same index set.
ComplexMatrix compress_interior(const ComplexMatrix& op, int n_cut, int m_cut, int margin = 1);

}  // namespace nclab
