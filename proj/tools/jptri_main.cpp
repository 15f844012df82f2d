// Command-line front end: construct the triangle polynomials, verify the
// orthogonality / series-coefficient conditions, and evaluate or tabulate the
// rational approximants of the two transforms.
//
// Exit codes: 0 success, 2 configuration error, 3 cross-check mismatch,
// 4 verification failure, 5 quadrature self-convergence failure, 6 pole.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jptri/hermite_pade.hpp"
#include "jptri/moments.hpp"
#include "jptri/poly.hpp"
#include "jptri/quadrature.hpp"
#include "jptri/rodrigues.hpp"
#include "jptri/serialize.hpp"

namespace {

using nlohmann::json;
using namespace jptri;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitVerify = 4;
constexpr int kExitQuadrature = 5;
constexpr int kExitPole = 6;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RawOptions {
  std::string alphas, betas, gamma, pairs;
  int max_degree = -1;
  int quad_nodes = 64;
  int quad_max_doublings = 6;
  double tol = 1e-14;
  double verify_tol = 1e-10;
  double grid_floor = 1.05;
  double pole_threshold = 1e-12;
  double zmin = 2.0, zmax = 20.0, wmin = 2.0, wmax = 20.0;
  int steps = 46;
  double z = 0.0, w = 0.0;
  std::string config_path, out, format = "csv", perturb;
  bool check_explicit = false;
};

struct Setup {
  ParamSet params;
  std::vector<IndexPair> pairs;
  bool exact = true;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Config-file values fill whatever was not given on the command line.
void merge_config_file(RawOptions& opts, CLI::App* cmd) {
  if (opts.config_path.empty()) return;
  std::ifstream in(opts.config_path);
  if (!in) throw ConfigError("cannot open config file: " + opts.config_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }
  auto take_str = [&](const char* key, std::string& slot, const char* flag) {
    if (doc.contains(key) && cmd->count(flag) == 0) slot = doc[key].get<std::string>();
  };
  auto take_int = [&](const char* key, int& slot, const char* flag) {
    if (doc.contains(key) && cmd->count(flag) == 0) slot = doc[key].get<int>();
  };
  auto take_dbl = [&](const char* key, double& slot, const char* flag) {
    if (doc.contains(key) && cmd->count(flag) == 0) slot = doc[key].get<double>();
  };
  take_str("alphas", opts.alphas, "--alphas");
  take_str("betas", opts.betas, "--betas");
  take_str("gamma", opts.gamma, "--gamma");
  take_str("pairs", opts.pairs, "--pairs");
  take_str("out", opts.out, "--out");
  take_str("format", opts.format, "--format");
  take_int("max_degree", opts.max_degree, "--max-degree");
  take_int("quad_nodes", opts.quad_nodes, "--quad-nodes");
  take_int("quad_max_doublings", opts.quad_max_doublings, "--quad-max-doublings");
  take_int("steps", opts.steps, "--steps");
  take_dbl("tol", opts.tol, "--tol");
  take_dbl("verify_tol", opts.verify_tol, "--verify-tol");
  take_dbl("floor", opts.grid_floor, "--floor");
  take_dbl("pole_threshold", opts.pole_threshold, "--pole-threshold");
  take_dbl("zmin", opts.zmin, "--zmin");
  take_dbl("zmax", opts.zmax, "--zmax");
  take_dbl("wmin", opts.wmin, "--wmin");
  take_dbl("wmax", opts.wmax, "--wmax");
  take_dbl("z", opts.z, "--z");
  take_dbl("w", opts.w, "--w");
}

Setup build_setup(const RawOptions& opts) {
  if (opts.alphas.empty() || opts.betas.empty() || opts.pairs.empty()) {
    throw ConfigError("--alphas, --betas and --pairs are required");
  }
  Setup setup;
  bool any_decimal = false;
  auto parse_list = [&](const std::string& text) {
    std::vector<Scalar> out;
    for (const auto& item : split(text, ',')) {
      ParsedScalar p = parse_scalar(item);
      any_decimal = any_decimal || p.was_decimal;
      out.push_back(p.value);
    }
    return out;
  };
  try {
    setup.params.alphas = parse_list(opts.alphas);
    setup.params.betas = parse_list(opts.betas);
    ParsedScalar g = parse_scalar(opts.gamma.empty() ? "0" : opts.gamma);
    any_decimal = any_decimal || g.was_decimal;
    setup.params.gamma = g.value;

    for (const auto& item : split(opts.pairs, ',')) {
      auto nk = split(item, ':');
      if (nk.size() != 2) throw ConfigError("bad pair '" + item + "', expected n:k");
      IndexPair pair{std::stoi(nk[0]), std::stoi(nk[1])};
      validate(pair);
      setup.pairs.push_back(pair);
    }
    setup.params.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (static_cast<int>(setup.pairs.size()) != setup.params.measure_count()) {
    throw ConfigError("need one n:k pair per measure");
  }
  if (any_decimal) {
    std::cerr << "warning: decimal parameter supplied; running in float mode,"
                 " residual checks use --verify-tol\n";
    for (auto& a : setup.params.alphas) a = Scalar::real(a.to_double());
    for (auto& b : setup.params.betas) b = Scalar::real(b.to_double());
    setup.params.gamma = Scalar::real(setup.params.gamma.to_double());
    setup.exact = false;
  }
  return setup;
}

int default_degree(const Setup& setup, int flag_value) {
  return flag_value >= 0 ? flag_value : total_order(setup.pairs) + 2;
}

std::string scalar_text(const Scalar& c) {
  if (!c.is_exact()) return format_double_shortest(c.to_double());
  const Rational& q = c.rational();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string mono_term_text(int l, int m) {
  std::string out;
  if (m > 0) out += m == 1 ? "w" : "w^" + std::to_string(m);
  if (l > 0) {
    if (!out.empty()) out += "*";
    out += l == 1 ? "z" : "z^" + std::to_string(l);
  }
  return out;
}

// Descending total degree, then descending w power.
std::string render_mono(const MonoPoly& p) {
  std::vector<std::pair<TermKey, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.l + a.first.m, db = b.first.l + b.first.m;
    if (da != db) return da > db;
    return a.first.m > b.first.m;
  });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string vars = mono_term_text(key.l, key.m);
    std::string coeff = scalar_text(mag);
    if (vars.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += vars;
    } else {
      out += coeff + "*" + vars;
    }
  }
  return out;
}

std::string render_bary(const BaryPoly& p) {
  if (p.terms().empty()) return "0";
  const int N = p.total_degree();
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += scalar_text(mag);
    if (key.l > 0) out += "*x^" + std::to_string(key.l);
    if (key.m > 0) out += "*y^" + std::to_string(key.m);
    const int s = N - key.l - key.m;
    if (s > 0) out += "*(1-x-y)^" + std::to_string(s);
  }
  return out;
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

int cmd_poly(const RawOptions& opts) {
  Setup setup = build_setup(opts);
  BaryPoly bary = jp_poly_operator(setup.params, setup.pairs);
  MonoPoly mono = bary_to_mono(bary);

  if (opts.check_explicit) {
    if (setup.params.measure_count() != 2) {
      throw ConfigError("--check-explicit needs exactly two measures");
    }
    BaryPoly closed = jp_poly_explicit(setup.params, setup.pairs);
    if (!identical(bary, closed)) {
      std::cerr << "cross-check failed: closed-form and operator coefficients differ\n";
      return kExitMismatch;
    }
  }

  std::cout << "triangle basis: " << render_bary(bary) << "\n";
  std::cout << "monomial basis: " << render_mono(mono) << "\n";

  if (!opts.out.empty()) {
    json doc;
    doc["bary"] = to_json(bary);
    doc["mono"] = to_json(mono);
    write_text(opts.out, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const RawOptions& opts) {
  Setup setup = build_setup(opts);
  const int D = default_degree(setup, opts.max_degree);

  BaryPoly poly = jp_poly_operator(setup.params, setup.pairs);
  if (!opts.perturb.empty()) {
    auto lm = split(opts.perturb, ':');
    if (lm.size() != 2) throw ConfigError("bad --perturb, expected l:m");
    try {
      poly.add_coeff(std::stoi(lm[0]), std::stoi(lm[1]),
                     setup.exact ? Scalar(1) : Scalar::real(1.0));
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }

  OrthogonalityReport ortho =
      verify_orthogonality(poly, setup.params, setup.pairs, D, opts.verify_tol);
  HpReport hp = check_hp_conditions(bary_to_mono(poly), setup.params, setup.pairs, D,
                                    opts.verify_tol);

  json doc;
  doc["mode"] = setup.exact ? "exact" : "float";
  doc["max_degree"] = D;
  doc["orthogonality"] = to_json(ortho);
  doc["hermite_pade"] = to_json(hp);
  doc["pass"] = ortho.pass && hp.pass;
  const std::string body = doc.dump(2) + "\n";
  if (!opts.out.empty()) {
    write_text(opts.out, body);
  } else {
    std::cout << body;
  }
  if (!ortho.pass || !hp.pass) {
    std::cerr << "verification failed: nonzero residual inside the condition set\n";
    return kExitVerify;
  }
  return kExitOk;
}

// Rules at q, 2q, 4q, ... for one measure, built on demand.
class OracleLadder {
 public:
  OracleLadder(const Setup& setup, int j, int q0, int max_doublings)
      : alpha_(setup.params.alphas[j].to_double()),
        beta_(setup.params.betas[j].to_double()),
        gamma_(setup.params.gamma.to_double()), q0_(q0),
        max_doublings_(max_doublings) {}

  const TriangleRule& level(int k) {
    while (static_cast<int>(rules_.size()) <= k) {
      rules_.push_back(
          build_rule(alpha_, beta_, gamma_, q0_ << rules_.size()));
    }
    return rules_[k];
  }
  int max_doublings() const { return max_doublings_; }

 private:
  double alpha_, beta_, gamma_;
  int q0_, max_doublings_;
  std::vector<TriangleRule> rules_;
};

// E_j with q doubled until two successive levels agree to rel_tol.
std::optional<double> oracle_E(OracleLadder& ladder, double z, double w,
                               double rel_tol) {
  auto f = [&](double x, double y) { return 1.0 / ((z - x) * (w - y)); };
  double coarse = integrate(ladder.level(0), f);
  for (int k = 1; k <= ladder.max_doublings(); ++k) {
    const double fine = integrate(ladder.level(k), f);
    const double scale = std::fabs(fine) > 0 ? std::fabs(fine) : 1.0;
    if (std::fabs(fine - coarse) <= rel_tol * scale) return fine;
    coarse = fine;
  }
  return std::nullopt;
}

int cmd_grid(const RawOptions& opts) {
  Setup setup = build_setup(opts);
  if (setup.params.measure_count() != 2) {
    throw ConfigError("grid needs exactly two measures");
  }
  if (opts.steps < 0) throw ConfigError("--steps must be nonnegative");
  if (opts.steps > 0 &&
      (opts.zmin <= opts.grid_floor || opts.wmin <= opts.grid_floor)) {
    throw ConfigError("grid bounds must stay above the floor (see --floor)");
  }
  if (opts.format != "csv" && opts.format != "json") {
    throw ConfigError("--format must be csv or json");
  }

  MonoPoly P = bary_to_mono(jp_poly_operator(setup.params, setup.pairs));
  std::vector<double> zs(opts.steps), ws(opts.steps);
  for (int i = 0; i < opts.steps; ++i) {
    const double t = opts.steps == 1 ? 0.0 : double(i) / (opts.steps - 1);
    zs[i] = opts.zmin + (opts.zmax - opts.zmin) * t;
    ws[i] = opts.wmin + (opts.wmax - opts.wmin) * t;
  }

  const std::string base = opts.out.empty() ? "grid" : opts.out;
  for (int j = 0; j < 2; ++j) {
    NumeratorState state(P, setup.params, j);
    OracleLadder ladder(setup, j, opts.quad_nodes, opts.quad_max_doublings);

    std::ostringstream csv;
    json rows = json::array();
    csv << "z,w,E,R,abs_err,rel_err\n";
    for (double w : ws) {
      for (double z : zs) {
        auto e = oracle_E(ladder, z, w, 1e-10);
        if (!e) {
          std::cerr << "quadrature self-convergence failed at z=" << z << " w=" << w
                    << "; raise --quad-nodes\n";
          return kExitQuadrature;
        }
        const double denom = P.evaluate(z, w);
        const bool pole =
            std::fabs(denom) <
            opts.pole_threshold * std::max(mono_magnitude(P, z, w), 1.0);
        csv << format_double_shortest(z) << "," << format_double_shortest(w) << ","
            << format_double_shortest(*e) << ",";
        if (pole) {
          csv << ",,\n";
          rows.push_back({z, w, *e, nullptr, nullptr, nullptr});
        } else {
          const double r = state.phi(z, w, opts.tol) / denom;
          const double abs_err = std::fabs(*e - r);
          const double rel_err = abs_err / std::fabs(*e);
          csv << format_double_shortest(r) << "," << format_double_shortest(abs_err)
              << "," << format_double_shortest(rel_err) << "\n";
          rows.push_back({z, w, *e, r, abs_err, rel_err});
        }
      }
    }

    const std::string suffix = "_m" + std::to_string(j + 1);
    if (opts.format == "csv") {
      write_text(base + suffix + ".csv", csv.str());
    } else {
      json doc;
      doc["measure"] = j + 1;
      doc["columns"] = {"z", "w", "E", "R", "abs_err", "rel_err"};
      doc["rows"] = rows;
      write_text(base + suffix + ".json", doc.dump(2) + "\n");
    }
  }
  return kExitOk;
}

int cmd_approx(const RawOptions& opts) {
  Setup setup = build_setup(opts);
  if (setup.params.measure_count() != 2) {
    throw ConfigError("approx needs exactly two measures");
  }
  if (opts.z <= opts.grid_floor || opts.w <= opts.grid_floor) {
    throw ConfigError("evaluation point must stay above the floor (see --floor)");
  }

  MonoPoly P = bary_to_mono(jp_poly_operator(setup.params, setup.pairs));
  const double denom = P.evaluate(opts.z, opts.w);
  if (std::fabs(denom) <
      opts.pole_threshold * std::max(mono_magnitude(P, opts.z, opts.w), 1.0)) {
    std::cerr << "denominator vanishes at the evaluation point\n";
    return kExitPole;
  }

  json doc;
  doc["z"] = opts.z;
  doc["w"] = opts.w;
  doc["P"] = denom;
  for (int j = 0; j < 2; ++j) {
    NumeratorState state(P, setup.params, j);
    OracleLadder ladder(setup, j, opts.quad_nodes, opts.quad_max_doublings);
    auto e = oracle_E(ladder, opts.z, opts.w, 1e-10);
    if (!e) {
      std::cerr << "quadrature self-convergence failed; raise --quad-nodes\n";
      return kExitQuadrature;
    }
    const double phi = state.phi(opts.z, opts.w, opts.tol);
    const double r = phi / denom;
    const std::string tag = std::to_string(j + 1);
    doc["phi" + tag] = phi;
    doc["E" + tag] = *e;
    doc["R" + tag] = r;
    doc["rel_err" + tag] = std::fabs(*e - r) / std::fabs(*e);
  }
  const std::string body = doc.dump(2) + "\n";
  if (!opts.out.empty()) {
    write_text(opts.out, body);
  } else {
    std::cout << body;
  }
  return kExitOk;
}

void attach_shared(CLI::App* cmd, RawOptions& opts) {
  cmd->add_option("--alphas", opts.alphas,
                  "comma-separated x exponents, one per measure");
  cmd->add_option("--betas", opts.betas,
                  "comma-separated y exponents, one per measure");
  cmd->add_option("--gamma", opts.gamma, "(1-x-y) exponent");
  cmd->add_option("--pairs", opts.pairs, "orders n:k per measure, e.g. 2:1,2:1");
  cmd->add_option("--max-degree", opts.max_degree,
                  "verification degree cap (default: total order + 2)");
  cmd->add_option("--quad-nodes", opts.quad_nodes, "quadrature nodes per direction");
  cmd->add_option("--quad-max-doublings", opts.quad_max_doublings,
                  "doubling attempts for oracle self-convergence");
  cmd->add_option("--tol", opts.tol, "series tolerance for the 2F1 evaluations");
  cmd->add_option("--verify-tol", opts.verify_tol, "float-mode residual tolerance");
  cmd->add_option("--floor", opts.grid_floor, "smallest admissible z or w");
  cmd->add_option("--pole-threshold", opts.pole_threshold,
                  "relative denominator threshold for pole cells");
  cmd->add_option("--config", opts.config_path, "JSON config file; flags override");
  cmd->add_option("--out", opts.out, "output file (or base path for grid)");
  cmd->add_option("--format", opts.format, "csv or json (grid output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bivariate multiple-orthogonal polynomials on the triangle and"
               " their rational approximants"};
  app.require_subcommand(1);

  RawOptions opts;
  CLI::App* poly = app.add_subcommand("poly", "construct and print the polynomial");
  poly->add_flag("--check-explicit", opts.check_explicit,
                 "cross-check the closed-form construction (two measures)");
  CLI::App* verify = app.add_subcommand("verify", "check the vanishing conditions");
  verify->add_option("--perturb", opts.perturb,
                     "add 1 to the bary coefficient l:m before verifying");
  CLI::App* grid = app.add_subcommand("grid", "emit E/R error grids per measure");
  grid->add_option("--zmin", opts.zmin, "grid lower bound in z");
  grid->add_option("--zmax", opts.zmax, "grid upper bound in z");
  grid->add_option("--wmin", opts.wmin, "grid lower bound in w");
  grid->add_option("--wmax", opts.wmax, "grid upper bound in w");
  grid->add_option("--steps", opts.steps, "points per axis (0 emits headers only)");
  CLI::App* approx =
      app.add_subcommand("approx", "evaluate the approximants at a point");
  approx->add_option("--z", opts.z, "evaluation point z");
  approx->add_option("--w", opts.w, "evaluation point w");

  for (CLI::App* cmd : {poly, verify, grid, approx}) attach_shared(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    merge_config_file(opts, cmd);
    if (cmd == poly) return cmd_poly(opts);
    if (cmd == verify) return cmd_verify(opts);
    if (cmd == grid) return cmd_grid(opts);
    return cmd_approx(opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PoleError& e) {
    std::cerr << e.what() << "\n";
    return kExitPole;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
