#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nclab/crossed.hpp"
#include "nclab/gasket.hpp"
#include "nclab/report.hpp"
#include "nclab/rotation.hpp"
#include "nclab/spectrum.hpp"
#include "nclab/torus.hpp"
#include "nclab/uhf.hpp"
#include "nclab/words.hpp"

using namespace nclab;
using nlohmann::json;

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::vector<long long> parse_ints(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

Eigen::MatrixXi parse_square(const std::string& text) {
  auto vals = parse_ints(text);
  int p = static_cast<int>(std::lround(std::sqrt(static_cast<double>(vals.size()))));
  if (p * p != static_cast<int>(vals.size()) || p < 1)
    throw CLI::ValidationError("--b", "matrix needs a square number of entries");
  Eigen::MatrixXi b(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) b(i, j) = static_cast<int>(vals[i * p + j]);
  return b;
}

struct DimOpts {
  std::string model;
  int n_cut = 2048;          // nat
  int p = 2, k_cut = 64;     // torus
  int r = 2;                 // uhf
  double s = 2.0;
  int depth = 12;
  int out_level = 2, m_depth = 10;  // gasket
  int nat_cut = 0;                  // crossed factor; 0 = model default
  double grid_lo = 0, grid_hi = 0;
  int grid_n = 12;
  double expected = -1, tol = 0.1;
  std::string csv_path, out_path;
};

void add_dim_options(CLI::App* cmd, DimOpts& o) {
  cmd->add_option("--model", o.model, "nat|torus|uhf|gasket")
      ->required()
      ->check(CLI::IsMember({"nat", "torus", "uhf", "gasket"}));
  cmd->add_option("--N", o.n_cut, "nat cutoff");
  cmd->add_option("--p", o.p, "torus dimension");
  cmd->add_option("--K", o.k_cut, "torus frequency cutoff");
  cmd->add_option("--r", o.r, "UHF branching");
  cmd->add_option("--s", o.s, "UHF exponent");
  cmd->add_option("--depth", o.depth, "UHF spectrum depth");
  cmd->add_option("--out-level", o.out_level, "gasket outward level");
  cmd->add_option("--m", o.m_depth, "gasket inward depth");
  cmd->add_option("--grid-lo", o.grid_lo, "fit grid start (0 = model default)");
  cmd->add_option("--grid-hi", o.grid_hi, "fit grid end");
  cmd->add_option("--grid-n", o.grid_n, "fit grid size");
  cmd->add_option("--expected", o.expected, "expected slope (-1 = model default)");
  cmd->add_option("--tol", o.tol, "slope tolerance");
  cmd->add_option("--csv", o.csv_path, "write the spectrum as CSV");
  cmd->add_option("--out", o.out_path, "write the JSON report (default stdout)");
}

WeightedSpectrum dim_spectrum(const DimOpts& o, double& expected, json& echo) {
  echo["model"] = o.model;
  if (o.model == "nat") {
    expected = 1.0;
    echo["N"] = o.n_cut;
    return nat_spectrum(o.n_cut);
  }
  if (o.model == "torus") {
    expected = o.p;
    echo["p"] = o.p;
    echo["K"] = o.k_cut;
    return torus_spectrum(o.p, o.k_cut);
  }
  if (o.model == "uhf") {
    expected = 2.0 / o.s;
    echo["r"] = o.r;
    echo["s"] = o.s;
    echo["depth"] = o.depth;
    return ci_spectrum(o.r, o.s, o.depth);
  }
  expected = std::log2(3.0);
  echo["out_level"] = o.out_level;
  echo["m"] = o.m_depth;
  return gasket_spectrum(o.out_level, o.m_depth);
}

std::vector<double> dim_grid(const DimOpts& o) {
  if (o.grid_lo > 0 && o.grid_hi > o.grid_lo) return log_grid(o.grid_lo, o.grid_hi, o.grid_n);
  if (o.model == "nat") return dyadic_grid(8, std::max(16, o.n_cut / 2));
  if (o.model == "torus") return log_grid(8 * M_PI, M_PI * o.k_cut, o.grid_n);
  if (o.model == "uhf") {
    std::vector<double> g;
    for (int n = 1; n < o.depth; ++n) g.push_back(std::pow(o.r, (n + 0.5) * o.s));
    return g;
  }
  return dyadic_grid(2, std::pow(2.0, std::min(o.m_depth, 9)));
}

int run_dim(const DimOpts& o, bool crossed) {
  double expected = 0;
  json echo;
  WeightedSpectrum spec = dim_spectrum(o, expected, echo);
  std::vector<double> grid = dim_grid(o);
  std::vector<Assertion> assertions;
  json results;

  WeightedSpectrum s1, s2;
  if (crossed) {
    int nat_cut = o.nat_cut;
    if (nat_cut == 0) nat_cut = o.model == "uhf" ? 40000 : (o.model == "nat" ? 2048 : 1024);
    echo["nat"] = nat_cut;
    s1 = spec.compressed();
    s2 = nat_spectrum(nat_cut).compressed();
    spec = tensor_spectrum(s1, s2);
    expected += 1.0;
  }
  if (o.expected >= 0) expected = o.expected;

  auto fit = dimension_fit(spec, grid);
  results["slope"] = fit.slope;
  results["intercept"] = fit.intercept;
  results["max_tail_slope"] = fit.max_tail_slope;
  results["grid"] = grid;
  assertions.push_back(
      {"dimension-slope", std::abs(fit.slope - expected) <= o.tol, fit.slope, expected, o.tol});

  if (crossed) {
    bool sandwich_ok = true;
    for (double t : grid) sandwich_ok = sandwich_ok && sandwich_check(s1, s2, spec, t).ok;
    assertions.push_back({"counting-sandwich", sandwich_ok, sandwich_ok ? 1.0 : 0.0, 1.0, 0.0});
  }

  if (!o.csv_path.empty()) emit(o.csv_path, to_csv(spec));
  emit(o.out_path, make_report_json(echo.dump(), results.dump(), assertions));
  return all_passed(assertions) ? 0 : 1;
}

int run_lip(const std::string& b_text, const std::string& k_text, int horizon,
            const std::string& out_path) {
  auto cm = make_covering(parse_square(b_text));
  auto k = parse_ints(k_text);
  if (static_cast<int>(k.size()) != cm.p)
    throw CLI::ValidationError("--k", "frequency dimension mismatch");
  auto rep = lip_inequality_check(cm, single_mode(k), horizon);
  std::string element = "e_(";
  for (size_t i = 0; i < k.size(); ++i) element += (i ? "," : "") + std::to_string(k[i]);
  element += ")";
  emit(out_path, lip_report_json("torus", element, horizon, rep.norms, rep.sup, rep.envelope,
                                 rep.ok));
  return rep.ok ? 0 : 1;
}

int run_scaling(const std::string& model, int r, double s, int k_neg, int l_pos, int k,
                int out_level, int depth, const std::string& out_path) {
  json echo, results;
  std::vector<Assertion> assertions;
  echo["model"] = model;
  echo["k"] = k;
  if (model == "uhf") {
    echo["r"] = r;
    echo["s"] = s;
    echo["window"] = {-k_neg, l_pos};
    UHFParams p{r, s, k_neg, l_pos};
    WindowElement f;
    f.pos_lo = f.pos_hi = 0;
    f.matrix = ComplexMatrix::Zero(r, r);
    f.matrix(0, 0) = 1.0;
    auto rep = scaling_check(p, f, k);
    results["norm"] = rep.norm_f;
    results["norm_shifted"] = rep.norm_shifted;
    results["ratio"] = rep.ratio;
    results["boundary"] = rep.boundary;
    results["verdict"] = rep.verdict == ScalingVerdict::Ok
                             ? "ok"
                             : (rep.verdict == ScalingVerdict::Degenerate ? "degenerate"
                                                                          : "inconclusive");
    assertions.push_back({"scaling-ratio", rep.passed, rep.ratio, rep.expected, 1e-9});
  } else {
    echo["out_level"] = out_level;
    echo["m"] = depth;
    auto rep = pullback_scaling_check([](const Point2& x) { return x.x(); }, k, out_level, depth);
    results["norm"] = rep.norm_f;
    results["norm_pullback"] = rep.norm_pullback;
    results["ratio"] = rep.ratio;
    assertions.push_back({"scaling-ratio", std::abs(rep.ratio - rep.expected) <= 1e-12, rep.ratio,
                          rep.expected, 1e-12});
  }
  emit(out_path, make_report_json(echo.dump(), results.dump(), assertions));
  return all_passed(assertions) ? 0 : 1;
}

int run_covariance(const std::string& model, unsigned seed, const std::string& out_path) {
  json echo, results;
  echo["model"] = model;
  echo["seed"] = seed;
  double defect = 0, shift_norm = 0;

  auto finish = [&](const CovariantTruncation& t, const std::vector<ComplexMatrix>& blocks_alpha) {
    defect = check_covariance(t, blocks_alpha);
    ComplexMatrix dn = ComplexMatrix::Zero(t.n_cut + 1, t.n_cut + 1);
    for (int n = 0; n <= t.n_cut; ++n) dn(n, n) = n;
    shift_norm = operator_norm(
        commutator(kron(dn, ComplexMatrix::Identity(t.base_dim, t.base_dim)), t.shift));
  };

  if (model == "torus") {
    Eigen::MatrixXi b(1, 1);
    b << 2;
    auto cm = make_covering(b);
    finish(make_covariant_truncation(torus_covariant_blocks(cm, {1}, 4, 40)),
           torus_covariant_blocks(cm, {1}, 4, 40, 1));
  } else if (model == "rotation") {
    auto cm = make_covering(Eigen::MatrixXi(2 * Eigen::MatrixXi::Identity(2, 2)));
    finish(make_covariant_truncation(torus_covariant_blocks(cm, {1, 0}, 3, 10)),
           torus_covariant_blocks(cm, {1, 0}, 3, 10, 1));
  } else if (model == "uhf") {
    UHFParams p{2, 1.0, 2, 1};
    WindowElement f;
    f.pos_lo = f.pos_hi = 0;
    f.matrix = ComplexMatrix::Zero(2, 2);
    f.matrix(0, 0) = 1.0;
    std::vector<ComplexMatrix> blocks, blocks_alpha;
    for (int n = 0; n <= 2; ++n) {
      blocks.push_back(left_mult(p, shift_element(f, n)));
      blocks_alpha.push_back(left_mult(p, shift_element(f, n - 1)));
    }
    finish(make_covariant_truncation(std::move(blocks)), blocks_alpha);
  } else {
    auto pts = sample_gasket_points(120, 0, seed);
    auto f = [](const Point2& x) { return x.x() + 0.5 * x.y(); };
    auto diag_block = [&](int n) {
      ComplexMatrix d = ComplexMatrix::Zero(pts.size(), pts.size());
      for (size_t i = 0; i < pts.size(); ++i) d(i, i) = f(std::pow(0.5, n) * pts[i]);
      return d;
    };
    std::vector<ComplexMatrix> blocks, blocks_alpha;
    for (int n = 0; n <= 3; ++n) {
      blocks.push_back(diag_block(n));
      blocks_alpha.push_back(diag_block(n - 1));
    }
    finish(make_covariant_truncation(std::move(blocks)), blocks_alpha);
  }

  results["defect"] = defect;
  results["shift_commutator_norm"] = shift_norm;
  std::vector<Assertion> assertions{
      {"covariance-defect", defect < 1e-10, defect, 0.0, 1e-10},
      {"shift-contraction", shift_norm <= 1.0 + 1e-12, shift_norm, 1.0, 1e-12}};
  emit(out_path, make_report_json(echo.dump(), results.dump(), assertions));
  return all_passed(assertions) ? 0 : 1;
}

int run_gasket_cover(int out_level, int depth, int check_samples, unsigned seed,
                     const std::string& csv_path, const std::string& out_path) {
  if (check_samples > 0) {
    double worst = 0;
    for (const Point2& x : sample_gasket_points(check_samples, 1, seed))
      worst = std::max(worst, (covering_p(x) - covering_phi(0.5 * x)).norm());
    for (int n = 1; n <= 3; ++n)
      for (const Point2& x : sample_gasket_points(check_samples, n, seed + n)) {
        Point2 lhs = covering_p_level(covering_phi_level(x, n), n);
        Point2 rhs = covering_phi_level(covering_p_level(x, n), n - 1);
        worst = std::max(worst, (lhs - rhs).norm());
      }
    json echo, results;
    echo["samples"] = check_samples;
    echo["seed"] = seed;
    results["worst_identity_defect"] = worst;
    std::vector<Assertion> assertions{{"covering-identities", worst < 1e-9, worst, 0.0, 1e-9}};
    emit(out_path, make_report_json(echo.dump(), results.dump(), assertions));
    return all_passed(assertions) ? 0 : 1;
  }
  emit(csv_path, edges_to_csv(enumerate_edges(out_level, depth)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-triple toolbox"};
  // key=value config, applied per [subcommand] section; command-line flags override
  app.set_config("--config", "", "key=value configuration file; flags override");
  app.require_subcommand(1);
  unsigned seed = 0;
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();

  DimOpts dim_opts, crossed_opts;
  auto* dim = app.add_subcommand("dim", "spectral dimension of a model");
  add_dim_options(dim, dim_opts);

  auto* crossed = app.add_subcommand("crossed-dim", "spectral dimension of the crossed product");
  add_dim_options(crossed, crossed_opts);
  crossed->add_option("--nat", crossed_opts.nat_cut, "shift-factor cutoff (0 = default)");

  std::string lip_b = "2,0,0,2", lip_k = "1,0", lip_out;
  int lip_horizon = 20;
  auto* lip = app.add_subcommand("lip", "Lipschitz seminorm decay along the endomorphism");
  lip->add_option("--b", lip_b, "covering matrix, row-major");
  lip->add_option("--k", lip_k, "frequency vector");
  lip->add_option("--horizon", lip_horizon, "pullback horizon");
  lip->add_option("--out", lip_out, "write the JSON report");

  std::string sc_model = "uhf", sc_out;
  int sc_r = 2, sc_kneg = 2, sc_lpos = 1, sc_k = 1, sc_level = 1, sc_depth = 4;
  double sc_s = 1.0;
  auto* scaling = app.add_subcommand("scaling", "commutator scaling under the endomorphism");
  scaling->add_option("--model", sc_model)->check(CLI::IsMember({"uhf", "gasket"}));
  scaling->add_option("--r", sc_r);
  scaling->add_option("--s", sc_s);
  scaling->add_option("--k-neg", sc_kneg);
  scaling->add_option("--l-pos", sc_lpos);
  scaling->add_option("--k", sc_k, "endomorphism power");
  scaling->add_option("--out-level", sc_level);
  scaling->add_option("--depth", sc_depth);
  scaling->add_option("--out", sc_out);

  std::string cov_model = "torus", cov_out;
  auto* covariance = app.add_subcommand("covariance", "covariance defect of the truncation");
  covariance->add_option("--model", cov_model)
      ->check(CLI::IsMember({"torus", "rotation", "uhf", "gasket"}));
  covariance->add_option("--out", cov_out);

  std::string rw_theta = "1/5", rw_word;
  auto* rewrite = app.add_subcommand("rewrite", "normal form of a word in U, V");
  rewrite->add_option("--theta", rw_theta, "rational twist");
  rewrite->add_option("--word", rw_word)->required();

  int gc_level = 2, gc_depth = 4, gc_check = 0;
  std::string gc_csv, gc_out;
  auto* gasket_cover = app.add_subcommand("gasket-cover", "gasket edges and covering checks");
  gasket_cover->add_option("--out-level", gc_level);
  gasket_cover->add_option("--depth", gc_depth);
  gasket_cover->add_option("--check", gc_check, "verify covering identities on N samples");
  gasket_cover->add_option("--csv", gc_csv, "edge CSV output (default stdout)");
  gasket_cover->add_option("--out", gc_out, "JSON report for --check");

  auto* version = app.add_subcommand("report-version", "print tool and schema versions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dim->parsed()) return run_dim(dim_opts, false);
    if (crossed->parsed()) return run_dim(crossed_opts, true);
    if (lip->parsed()) return run_lip(lip_b, lip_k, lip_horizon, lip_out);
    if (scaling->parsed())
      return run_scaling(sc_model, sc_r, sc_s, sc_kneg, sc_lpos, sc_k, sc_level, sc_depth, sc_out);
    if (covariance->parsed()) return run_covariance(cov_model, seed, cov_out);
    if (rewrite->parsed()) {
      try {
        std::cout << normalize_word(parse_word(rw_word), parse_rational(rw_theta)).str() << '\n';
      } catch (const WordSyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return 2;
      }
      return 0;
    }
    if (gasket_cover->parsed())
      return run_gasket_cover(gc_level, gc_depth, gc_check, seed, gc_csv, gc_out);
    if (version->parsed()) {
      std::cout << "nclab 1.0.0 (report schema " << kReportSchemaVersion << ")\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
