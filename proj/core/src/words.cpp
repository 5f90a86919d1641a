#include "nclab/words.hpp"

#include <cctype>
#include <stdexcept>

namespace nclab {

namespace {

bool is_u_type(Letter l) { return l == Letter::U || l == Letter::Ustar; }
bool is_v_type(Letter l) { return l == Letter::V || l == Letter::Vstar; }

bool cancels(Letter a, Letter b) {
  return (a == Letter::U && b == Letter::Ustar) || (a == Letter::Ustar && b == Letter::U) ||
         (a == Letter::Vstar && b == Letter::V);
}

// Phase gained when (v-type, u-type) at (pos, pos+1) swaps to (u-type, v-type),
// in units of theta. From UV = e(theta) VU and V*V = 1:
//   V U  -> e(-theta) U V        V U*  -> e(+theta) U* V
//   V* U -> e(+theta) U V*       V* U* -> e(-theta) U* V*
int swap_phase_sign(Letter v, Letter u) {
  const bool star_v = (v == Letter::Vstar);
  const bool star_u = (u == Letter::Ustar);
  return (star_v == star_u) ? -1 : +1;
}

}  // namespace

RawWord parse_word(const std::string& text) {
  RawWord w;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parse_int = [&]() -> long long {
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw WordSyntaxError("expected integer", i);
    return std::stoll(text.substr(start, i - start));
  };

  skip_ws();
  if (i < text.size() && text[i] == 'e') {
    ++i;
    if (i >= text.size() || text[i] != '(') throw WordSyntaxError("expected '(' after e", i);
    ++i;
    long long num = parse_int();
    long long den = 1;
    if (i < text.size() && text[i] == '/') { ++i; den = parse_int(); }
    if (den == 0) throw WordSyntaxError("zero denominator", i);
    if (i >= text.size() || text[i] != ')') throw WordSyntaxError("expected ')'", i);
    ++i;
    w.scalar_exp = mod_one(Rational{num, den});
  }

  skip_ws();
  if (i >= text.size()) throw WordSyntaxError("empty word", i);
  while (i < text.size()) {
    char c = text[i];
    Letter base;
    if (c == 'U') base = Letter::U;
    else if (c == 'V') base = Letter::V;
    else throw WordSyntaxError(std::string("unexpected character '") + c + "'", i);
    ++i;
    if (i < text.size() && text[i] == '*') {
      base = (base == Letter::U) ? Letter::Ustar : Letter::Vstar;
      ++i;
    }
    long long exp = 1;
    if (i < text.size() && text[i] == '^') { ++i; exp = parse_int(); }
    if (exp < 0) throw WordSyntaxError("negative exponent (use the adjoint letter)", i);
    for (long long k = 0; k < exp; ++k) w.letters.push_back(base);
    skip_ws();
  }
  return w;
}

std::vector<size_t> applicable_positions(const RewriteState& st) {
  std::vector<size_t> pos;
  for (size_t i = 0; i + 1 < st.letters.size(); ++i) {
    Letter a = st.letters[i], b = st.letters[i + 1];
    if (cancels(a, b) || (is_v_type(a) && is_u_type(b))) pos.push_back(i);
  }
  return pos;
}

bool apply_rule_at(RewriteState& st, size_t i, const Rational& theta) {
  if (i + 1 >= st.letters.size()) return false;
  Letter a = st.letters[i], b = st.letters[i + 1];
  if (cancels(a, b)) {
    st.letters.erase(st.letters.begin() + i, st.letters.begin() + i + 2);
    return true;
  }
  if (is_v_type(a) && is_u_type(b)) {
    st.phase = mod_one(st.phase + Rational{swap_phase_sign(a, b), 1} * theta);
    std::swap(st.letters[i], st.letters[i + 1]);
    return true;
  }
  return false;
}

static CrossedWord collect(const RewriteState& st, const Rational& scalar) {
  CrossedWord out;
  out.phase = mod_one(st.phase + scalar);
  for (Letter l : st.letters) {
    switch (l) {
      case Letter::U: ++out.u_pow; break;
      case Letter::Ustar: --out.u_pow; break;
      case Letter::V: ++out.v_pow; break;
      case Letter::Vstar: ++out.vstar_pow; break;
    }
  }
  return out;
}

CrossedWord normalize_word(const RawWord& w, const Rational& theta) {
  RewriteState st{w.letters, Rational{0}};
  bool changed = true;
  while (changed) {
    changed = false;
    auto pos = applicable_positions(st);
    if (!pos.empty()) changed = apply_rule_at(st, pos.front(), theta);
  }
  return collect(st, w.scalar_exp);
}

CrossedWord normalize_word_random(const RawWord& w, const Rational& theta, std::mt19937& rng,
                                  size_t* applications) {
  RewriteState st{w.letters, Rational{0}};
  size_t count = 0;
  for (;;) {
    auto pos = applicable_positions(st);
    if (pos.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, pos.size() - 1);
    apply_rule_at(st, pos[pick(rng)], theta);
    ++count;
  }
  if (applications) *applications = count;
  return collect(st, w.scalar_exp);
}

std::string CrossedWord::str() const {
  std::string s = "e(" + std::to_string(phase.numerator()) + "/" + std::to_string(phase.denominator()) + ")";
  std::string mono;
  auto app = [&](const std::string& gen, long long pow) {
    if (pow == 0) return;
    mono += " " + gen;
    if (pow != 1) mono += "^" + std::to_string(pow);
  };
  app("U", u_pow);
  app("V", v_pow);
  app("V*", vstar_pow);
  if (mono.empty()) mono = " 1";
  return s + mono;
}

RawWord CrossedWord::expand() const {
  RawWord w;
  w.scalar_exp = phase;
  for (long long k = 0; k < std::abs(u_pow); ++k)
    w.letters.push_back(u_pow > 0 ? Letter::U : Letter::Ustar);
  for (long long k = 0; k < v_pow; ++k) w.letters.push_back(Letter::V);
  for (long long k = 0; k < vstar_pow; ++k) w.letters.push_back(Letter::Vstar);
  return w;
}

MonomialMap eval_word_map(const RawWord& w, const Rational& theta, int n_cut, int m_cut) {
  if (n_cut < 2 || m_cut < 2) throw std::invalid_argument("eval_word_map: cutoffs must be >= 2");
  const int nd = n_cut + 1, md = 2 * m_cut + 1;
  MonomialMap map;
  map.n_dim = nd;
  map.m_dim = md;
  map.scalar = w.scalar_exp;
  map.target.resize(static_cast<size_t>(nd) * md);
  map.phase.assign(map.target.size(), Rational{0});

  for (int n = 0; n < nd; ++n) {
    for (int m = 0; m < md; ++m) {
      // basis vector (n, mode m - m_cut); apply letters right to left
      long long cn = n, cm = m - m_cut;
      Rational ph{0};
      bool alive = true;
      for (auto it = w.letters.rbegin(); it != w.letters.rend() && alive; ++it) {
        switch (*it) {
          case Letter::V:
            if (cn + 1 > n_cut) alive = false; else ++cn;
            break;
          case Letter::Vstar:
            if (cn == 0) alive = false; else --cn;
            break;
          case Letter::U:
            if (cm + 1 > m_cut) alive = false;
            else { ph += Rational{cn, 1} * theta; ++cm; }
            break;
          case Letter::Ustar:
            if (cm - 1 < -m_cut) alive = false;
            else { ph -= Rational{cn, 1} * theta; --cm; }
            break;
        }
      }
      size_t col = static_cast<size_t>(n) * md + m;
      if (alive) {
        map.target[col] = cn * md + (cm + m_cut);
        map.phase[col] = mod_one(ph);
      } else {
        map.target[col] = -1;
      }
    }
  }
  return map;
}

MonomialMap eval_word_map(const CrossedWord& w, const Rational& theta, int n_cut, int m_cut) {
  return eval_word_map(w.expand(), theta, n_cut, m_cut);
}

static ComplexMatrix materialize(const MonomialMap& map) {
  const Eigen::Index dim = static_cast<Eigen::Index>(map.n_dim) * map.m_dim;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const Complex two_pi_i{0.0, 2.0 * M_PI};
  for (Eigen::Index col = 0; col < dim; ++col) {
    if (map.target[col] < 0) continue;
    out(map.target[col], col) = std::exp(two_pi_i * to_double(map.phase[col] + map.scalar));
  }
  return out;
}

ComplexMatrix eval_word(const RawWord& w, const Rational& theta, int n_cut, int m_cut) {
  return materialize(eval_word_map(w, theta, n_cut, m_cut));
}

ComplexMatrix eval_word(const CrossedWord& w, const Rational& theta, int n_cut, int m_cut) {
  return materialize(eval_word_map(w, theta, n_cut, m_cut));
}

double interior_diff_norm(const MonomialMap& a, const MonomialMap& b, int margin) {
  if (a.n_dim != b.n_dim || a.m_dim != b.m_dim)
    throw std::invalid_argument("interior_diff_norm: size mismatch");
  const int nd = a.n_dim, md = b.m_dim;
  const int n_cut = nd - 1, m_cut = (md - 1) / 2;

  auto interior = [&](int64_t idx) {
    int n = static_cast<int>(idx / md), m = static_cast<int>(idx % md) - m_cut;
    return n >= margin && n <= n_cut - margin && std::abs(m) <= m_cut - margin;
  };

  const Complex two_pi_i{0.0, 2.0 * M_PI};
  struct Entry { int64_t row; Complex val; };
  std::vector<std::vector<Entry>> cols;
  for (int n = margin; n <= n_cut - margin; ++n) {
    for (int m = -m_cut + margin; m <= m_cut - margin; ++m) {
      size_t col = static_cast<size_t>(n) * md + (m + m_cut);
      std::vector<Entry> entries;
      if (a.target[col] >= 0 && interior(a.target[col]))
        entries.push_back({a.target[col], std::exp(two_pi_i * to_double(a.phase[col] + a.scalar))});
      if (b.target[col] >= 0 && interior(b.target[col])) {
        Complex v = -std::exp(two_pi_i * to_double(b.phase[col] + b.scalar));
        if (!entries.empty() && entries[0].row == b.target[col]) entries[0].val += v;
        else entries.push_back({b.target[col], v});
      }
      cols.push_back(std::move(entries));
    }
  }

  // Gram matrix of the (very sparse) difference columns.
  const Eigen::Index k = static_cast<Eigen::Index>(cols.size());
  if (k == 0) return 0.0;
  ComplexMatrix gram = ComplexMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      Complex s = 0;
      for (const auto& ei : cols[i])
        for (const auto& ej : cols[j])
          if (ei.row == ej.row) s += std::conj(ei.val) * ej.val;
      gram(j, i) = s;
    }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return top > 0 ? std::sqrt(top) : 0.0;
}

ComplexMatrix compress_interior(const ComplexMatrix& op, int n_cut, int m_cut, int margin) {
  const int md = 2 * m_cut + 1;
  std::vector<Eigen::Index> keep;
  for (int n = margin; n <= n_cut - margin; ++n)
    for (int m = -m_cut + margin; m <= m_cut - margin; ++m)
      keep.push_back(static_cast<Eigen::Index>(n) * md + (m + m_cut));
  ComplexMatrix out(keep.size(), keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      out(i, j) = op(keep[i], keep[j]);
  return out;
}

}  // namespace nclab
