#include "volterra_app/cli.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "volterra_app/acceptance.hpp"
#include "volterra_app/io.hpp"
#include "volterra_app/report.hpp"

namespace volterra::app {

namespace {

constexpr double kDefectResidue = 1e-12;
constexpr double kDunford = 1e-8;
constexpr double kSemigroup = 1e-8;
constexpr double kContraction = 1e-10;
constexpr double kHyFinal = 1e-3;
constexpr double kResolventRel = 1e-9;
constexpr double kCausal = 1e-5;
constexpr double kHomogeneous = 1e-12;
constexpr double kFitQ0 = 1e-3;
constexpr double kFitHigher = 1e-2;

struct Outcome {
  std::vector<ReportTable> tables;
  json extra = json::object();
};

bool all_pass(const Outcome& o) {
  for (const auto& t : o.tables)
    if (!t.all_pass()) return false;
  return true;
}

double min_eigenvalue(const Eigen::MatrixXcd& Q) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------- parametrix
Outcome run_parametrix(const OperatorSpec& op, int depth) {
  if (depth < 0) throw DomainError("--depth must be nonnegative");
  const Parametrix par = parametrix(operator_symbol(op), depth);
  ReportTable t(fmt::format("parametrix of {} (depth {})", op.name, depth));
  for (int s : par.symbol.degrees())
    t.add(fmt::format("q_{}: {} terms", s, par.symbol.graded_piece(s).term_count()), std::nullopt,
          par.symbol.graded_piece(s).max_abs_coefficient(), 0.0, 0.0);
  const auto lead = par.defect.leading_degree();
  t.add(fmt::format("highest defect degree (<= {})", -depth - 1), double(-depth - 1),
        lead ? std::optional<double>(*lead) : std::nullopt, lead ? std::max(0.0, double(*lead + depth + 1)) : 0.0,
        0.0);
  t.add("rounding residue in cancelled degrees", 0.0, par.cancellation_residue, par.cancellation_residue,
        kDefectResidue);
  Outcome o;
  o.tables.push_back(std::move(t));
  o.extra["operator"] = to_json(op);
  o.extra["depth"] = depth;
  o.extra["parametrix"] = to_json(par.symbol);
  o.extra["defect"] = to_json(par.defect);
  return o;
}

// ---------------------------------------------------------------- heat-coeffs
Outcome run_heat_coeffs(const OperatorSpec& op, int J, bool validate) {
  const HeatExpansion h = heat_coefficients(op, J);
  ReportTable t(fmt::format("heat coefficients of {} (J = {})", op.name, J));
  const Point origin{};
  for (const auto& c : h.terms)
    t.add(fmt::format("q_{}(0) = {}", c.j, format_trig(c.q)), c.q(origin).real(), std::nullopt, 0.0, 0.0);
  Outcome o;
  o.extra["operator"] = to_json(op);
  json coeffs = json::array();
  for (const auto& c : h.terms) coeffs.push_back({{"j", c.j}, {"exponent", c.exponent}, {"q", to_json(c.q)}});
  o.extra["coefficients"] = coeffs;
  o.tables.push_back(std::move(t));
  if (!validate) return o;

  // Fit with a few extra columns so the validated coefficients are not the last ones.
  const bool one_d = op.dim == 1;
  const auto times = one_d ? geometric_times(0.005, 0.05, 16) : geometric_times(0.075, 0.5, 16);
  const DiagonalFit fit = fit_diagonal_expansion(op, times, one_d ? 6 : 4, false, one_d ? 32 : 16, one_d ? 80 : 0);
  ReportTable v(fmt::format("fitted diagonal of e^(-tA) on {} grid points (n = {}, cond {:.1e})", fit.points.size(),
                            fit.modes, fit.condition));
  for (int j = 0; j <= std::min(J, 2); ++j) {
    double err = 0.0;
    for (std::size_t p = 0; p < fit.points.size(); ++p)
      err = std::max(err, std::abs(fit.coefficient(p, j) - h.q(j)(fit.points[p]).real()));
    v.add(fmt::format("q_{} at x = 0 (sup error over grid)", j), h.q(j)(fit.points[0]).real(), fit.coefficient(0, j),
          err, j == 0 ? kFitQ0 : kFitHigher);
  }
  o.tables.push_back(std::move(v));
  return o;
}

// ---------------------------------------------------------------- semigroup
Outcome run_semigroup(const OperatorSpec& op, int modes, const std::vector<double>& times, const std::string& check) {
  if (times.empty()) throw DomainError("--t needs at least one time");
  for (double t : times)
    if (!(t > 0.0)) throw DomainError("--t values must be positive");
  const DiscretizedOperator D = discretize(op, modes);
  const Eigen::MatrixXcd& Q = D.hermitian_part;
  const double mu = min_eigenvalue(Q);
  const bool psd = mu >= -1e-8;
  ReportTable t(fmt::format("semigroup of {} (n = {}, size {}, min eigenvalue {:.6f}{})", op.name, modes, D.size(), mu,
                            D.self_adjoint ? "" : ", Hermitian part"));
  if (check.empty()) {
    for (double s : times)
      t.add(fmt::format("||E_dunford({}) - E_eig({})||", s, s), std::nullopt, std::nullopt,
            spectral_norm(dunford_heat(D, s) - eig_heat(Q, s)), kDunford);
  } else if (check == "semigroup") {
    for (std::size_t i = 0; i < times.size(); ++i)
      for (std::size_t j = i + 1; j < times.size(); ++j) {
        const double a = times[i], b = times[j];
        const double e = spectral_norm(dunford_heat(D, a) * dunford_heat(D, b) - dunford_heat(D, a + b));
        t.add(fmt::format("||E({})E({}) - E({})||", a, b, a + b), std::nullopt, std::nullopt, e, kSemigroup);
      }
  } else if (check == "contraction") {
    for (double s : times) {
      const double bound = psd ? 1.0 : std::exp(-s * mu);
      const double norm = spectral_norm(dunford_heat(D, s));
      t.add(fmt::format("||E({})|| <= {}", s, psd ? "1" : fmt::format("e^({}*{:.6f})", -s, mu)), bound, norm,
            std::max(0.0, norm - bound), kContraction * bound);
    }
  } else if (check == "hy") {
    for (double s : times) {
      const Eigen::MatrixXcd reference = eig_heat(Q, s);
      double previous = std::numeric_limits<double>::infinity();
      for (double lambda : {1e1, 1e2, 1e3, 1e4}) {
        const double e = spectral_norm(hy_heat(Q, lambda, s) - reference);
        const bool last = lambda == 1e4;
        t.add(fmt::format("||e^(-{} Q_{:g}) - E({})||{}", s, lambda, s, last ? "" : " (decreasing)"), std::nullopt,
              std::nullopt, last ? e : (e < previous ? 0.0 : 1.0), last ? kHyFinal : 0.0);
        previous = e;
      }
    }
  } else if (check == "resolvent") {
    const auto samples = contour_samples(64, ContourQuadrature::s_max(*std::min_element(times.begin(), times.end())));
    const double c = resolvent_bound_check(Q, samples);
    // Analytic constant for a Hermitian matrix with spectrum in [mu, ∞).
    double bound = 0.0;
    for (complex l : samples) {
      const double dist = l.real() >= mu ? std::abs(l.imag()) : std::abs(l - complex(mu, 0.0));
      bound = std::max(bound, (1.0 + std::abs(l.imag())) / dist);
    }
    t.add("sup (1+|Im z|)||(Q-z)^-1|| on the contour", bound, c, std::max(0.0, c - bound), kResolventRel * bound);
  } else {
    throw DomainError("unknown --check '" + check + "'");
  }
  Outcome o;
  o.tables.push_back(std::move(t));
  o.extra["operator"] = to_json(op);
  o.extra["modes"] = modes;
  return o;
}

// ---------------------------------------------------------------- causality
Outcome run_causality(const OperatorSpec& op, int depth, const std::string& grid_text) {
  if (depth < 0) throw DomainError("--depth must be nonnegative");
  CausalityGrid grid = grid_text.empty() ? CausalityGrid::defaults(op.dim) : CausalityGrid::parse(grid_text);
  grid.validate(op.dim);
  const Parametrix par = parametrix(operator_symbol(op), depth);
  ReportTable t(fmt::format("causality of {} parametrix pieces (grid {}:{}:{}:{})", op.name, grid.nodes,
                            grid.half_width, grid.eps, grid.power));
  for (int s : par.symbol.degrees()) {
    const double ratio = causality_check(causal_kernel(par.symbol.graded_piece(s)), grid);
    t.add(fmt::format("q_{}: sup_(t<0)|k| / sup|k|", s), 0.0, ratio, ratio, kCausal);
  }
  Outcome o;
  o.tables.push_back(std::move(t));
  o.extra["operator"] = to_json(op);
  o.extra["depth"] = depth;
  return o;
}

// ---------------------------------------------------------------- deform
Outcome run_deform(const OperatorSpec& op, const std::vector<double>& lambdas, const std::vector<double>& hbars) {
  for (double l : lambdas)
    if (!(l > 0.0)) throw DomainError("--lambda values must be positive");
  for (double h : hbars)
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("--hbar values must lie in (0, 1]");
  const ParabolicSymbol q = parametrix(operator_symbol(op), 1).symbol;
  const int m = q.order();
  const ParabolicSymbol principal = q.graded_piece(m);

  ReportTable conv(fmt::format("model approximants of the depth-1 parametrix of {}", op.name));
  double lower = 0.0;
  for (int s : q.degrees())
    if (s < m) lower += q.graded_piece(s).max_abs_coefficient();
  for (double h : hbars) {
    // ħ^m q(ξ/ħ, τ/ħ²) − q_m = Σ_{s<m} ħ^{m−s} q_s, bounded by ħ·Σ|q_s| for ħ <= 1.
    const double d = (model_approximant(q, h) - principal).max_abs_coefficient();
    conv.add(fmt::format("hbar = {}: distance to principal piece", h), h * lower, d, std::max(0.0, d - h * lower),
             1e-12 * std::max(1.0, lower));
  }

  ReportTable hom(fmt::format("kernel homogeneity for {}", op.name));
  const auto samples = default_kernel_samples(op.dim);
  const ScaledFamily leading(principal);
  const ScaledFamily two_term(q);
  double scale = 0.0;
  for (const auto& s : samples) scale = std::max(scale, std::abs(leading.model_kernel().spatial(s.x, s.zeta, s.t)));
  for (double l : lambdas) {
    const double lead = homogeneity_defect(leading, l, samples).sup / scale;
    hom.add(fmt::format("lambda = {}: principal-piece defect (relative)", l), 0.0, lead, lead, kHomogeneous);
    const double two = homogeneity_defect(two_term, l, samples).sup / scale;
    hom.add(fmt::format("lambda = {}: 2-term defect (relative, informational)", l), std::nullopt, two, 0.0, 0.0);
    const double jac = measure_scaling_check(l, op.dim);
    const double want = std::pow(l, op.dim + 2);
    hom.add(fmt::format("lambda = {}: Jacobian of the dilation", l), want, jac, std::abs(jac - want),
            1e-12 * want);
  }
  Outcome o;
  o.tables = {conv, hom};
  o.extra["operator"] = to_json(op);
  return o;
}

// ---------------------------------------------------------------- validate
Outcome run_validate(const std::string& corpus, std::uint64_t seed) {
  AcceptanceOptions options;
  if (!corpus.empty()) options.corpus = corpus;
  if (!std::filesystem::is_directory(options.corpus))
    throw InputError(fmt::format("corpus directory '{}' not found", options.corpus.string()));
  options.seed = seed;
  Outcome o;
  json lines = json::array();
  for (const auto& r : run_acceptance(options, [](const CriterionResult& r) {
         std::cout << criterion_line(r) << std::endl;
       })) {
    o.tables.push_back(r.table);
    lines.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  o.extra["seed"] = seed;
  o.extra["criteria"] = lines;
  return o;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Volterra symbol calculus for heat operators on the flat torus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--out", out, "write tables to FILE (.json, otherwise CSV)");
  app.add_option("--seed", seed, "seed for random sample points")->capture_default_str();

  std::string op_path;
  int depth = 0, J = 0, modes = 0;
  bool validate = false;
  std::vector<double> times, lambdas, hbars;
  std::string check, grid, corpus;

  auto* par = app.add_subcommand("parametrix", "graded parametrix and its defect");
  par->add_option("--op", op_path, "operator JSON file")->required();
  par->add_option("--depth", depth, "number of correction steps")->required();

  auto* heat = app.add_subcommand("heat-coeffs", "diagonal heat coefficients q_j");
  heat->add_option("--op", op_path, "operator JSON file")->required();
  heat->add_option("--J", J, "highest index j")->required();
  heat->add_flag("--validate", validate, "compare with a least-squares fit of the numerical heat diagonal");

  auto* semi = app.add_subcommand("semigroup", "heat semigroup of the Galerkin truncation");
  semi->add_option("--op", op_path, "operator JSON file")->required();
  semi->add_option("--modes", modes, "Fourier cutoff n")->required();
  semi->add_option("--t", times, "times")->required();
  semi->add_option("--check", check, "semigroup|contraction|hy|resolvent")
      ->check(CLI::IsMember({"semigroup", "contraction", "hy", "resolvent"}));

  auto* caus = app.add_subcommand("causality", "support of the parametrix kernels in t");
  caus->add_option("--op", op_path, "operator JSON file")->required();
  caus->add_option("--depth", depth, "parametrix depth")->required();
  caus->add_option("--grid", grid, "nodes:half_width:eps:power");

  auto* def = app.add_subcommand("deform", "rescaled symbols and kernel homogeneity");
  def->add_option("--op", op_path, "operator JSON file")->required();
  def->add_option("--lambda", lambdas, "dilation factors")->required();
  def->add_option("--hbar", hbars, "deformation parameters in (0, 1]")->required();

  auto* val = app.add_subcommand("validate", "run the acceptance suite");
  val->add_option("--corpus", corpus, "directory of operator JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    Outcome o;
    if (*par) {
      o = run_parametrix(load_operator_spec(op_path), depth);
    } else if (*heat) {
      o = run_heat_coeffs(load_operator_spec(op_path), J, validate);
    } else if (*semi) {
      o = run_semigroup(load_operator_spec(op_path), modes, times, check);
    } else if (*caus) {
      o = run_causality(load_operator_spec(op_path), depth, grid);
    } else if (*def) {
      o = run_deform(load_operator_spec(op_path), lambdas, hbars);
    } else {
      o = run_validate(corpus, seed);
    }
    const bool pass = all_pass(o);
    if (!*val) {
      for (const auto& t : o.tables) t.print(std::cout);
      std::cout << (pass ? "PASS" : "FAIL") << '\n';
    }
    if (!out.empty()) write_tables(out, o.tables, o.extra);
    return pass ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CalculusMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace volterra::app
