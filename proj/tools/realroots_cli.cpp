// Command-line front end: predictions from supports, Monte Carlo
// verification, dilation asymptotics, the ball-constant table, and the
// inequality property suite.
//
// Exit codes: 0 success, 2 validation/input error, 3 statistical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "realroots/json_io.hpp"
#include "realroots/mixed_volume.hpp"
#include "realroots/moments.hpp"
#include "realroots/root_count.hpp"

using nlohmann::json;
using namespace realroots;

namespace {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("REALROOTS_LOG");
    if (!env) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[realroots] " << msg << "\n";
}

std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    const std::size_t dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(token));
    } else {
      const int lo = std::stoi(token.substr(0, dots));
      const int hi = std::stoi(token.substr(dots + 2));
      for (int m = lo; m <= hi; ++m) out.push_back(m);
    }
    pos = comma + 1;
  }
  for (int m : out)
    if (m < 1) throw ParseError("dilation factors must be positive");
  if (out.empty()) throw ParseError("empty m-list");
  return out;
}

json ellipsoid_json(const Ellipsoid& e) {
  json shape = json::array();
  for (int i = 0; i < e.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < e.dim(); ++j) row.push_back(e.shape()(i, j));
    shape.push_back(row);
  }
  return json{{"dim", e.dim()}, {"shape", shape}};
}

json polytope_json(const LatticePolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& x : v) {
      if (denominator(x) == 1) {
        row.push_back(numerator(x).convert_to<std::int64_t>());
      } else {
        row.push_back(rational_to_string(x));
      }
    }
    verts.push_back(row);
  }
  return json{{"dim", p.dim()}, {"intrinsic_dim", p.intrinsic_dim()}, {"vertices", verts}};
}

std::vector<SupportSet> load_supports(const std::vector<std::string>& paths) {
  std::vector<SupportSet> supports;
  supports.reserve(paths.size());
  for (const auto& path : paths) {
    supports.push_back(load_support_file(path));
    log_info("loaded support " + path + " with " + std::to_string(supports.back().size()) +
             " points");
  }
  return supports;
}

int cmd_predict(const std::vector<std::string>& files, std::int64_t samples,
                std::uint64_t seed, int workers, const std::string& format) {
  const auto supports = load_supports(files);
  const int n = static_cast<int>(supports.size());

  std::vector<Ellipsoid> ells;
  std::vector<LatticePolytope> polys;
  for (const auto& s : supports) {
    ells.push_back(moment_matrix(s));
    polys.push_back(newton_polytope(s));
  }
  const MVEstimate mv = mixed_volume_ellipsoids(ells, samples, seed, workers);
  double nf = 1;
  for (int k = 2; k <= n; ++k) nf *= k;
  const double expected = nf * mv.value;
  const double bkk = bkk_count(supports);
  const double fraction = bkk > 0 ? std::clamp(expected / bkk, 0.0, 1.0) : 0.0;

  json report;
  report["expected_real"] = expected;
  report["bkk"] = bkk;
  report["fraction"] = fraction;
  report["deterministic"] = mv.samples == 0;
  report["samples"] = mv.samples;
  report["seed"] = seed;
  report["std_error"] = nf * mv.std_error;
  report["ellipsoids"] = json::array();
  report["polytopes"] = json::array();
  for (const auto& e : ells) report["ellipsoids"].push_back(ellipsoid_json(e));
  for (const auto& p : polys) report["polytopes"].push_back(polytope_json(p));

  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "expected_real = " << expected << "\nbkk = " << bkk
              << "\nfraction = " << fraction << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& files, std::int64_t samples,
               std::uint64_t seed, int workers, int grid, const std::string& kind,
               const std::string& format) {
  const auto supports = load_supports(files);
  const RootKind rk = kind == "complex" ? RootKind::kComplex : RootKind::kReal;

  double prediction = 0.0;
  if (rk == RootKind::kReal) {
    prediction = expected_real_roots(supports, std::max<std::int64_t>(samples, 10000), seed,
                                     workers);
  } else {
    prediction = bkk_count(supports);
  }

  RootCountDiagnostics diag;
  const MVEstimate mc = mc_expected_roots(supports, samples, seed, rk, workers, &diag, grid);
  const double z = mc.std_error > 0 ? (mc.value - prediction) / mc.std_error : 0.0;

  json report;
  report["kind"] = kind;
  report["prediction"] = prediction;
  report["estimate"] = mc.value;
  report["std_error"] = mc.std_error;
  report["z"] = z;
  report["samples"] = mc.samples;
  report["seed"] = seed;
  report["diagnostics"] = {{"resamples", diag.resamples},
                           {"newton_failures", diag.newton_failures},
                           {"grid", diag.grid}};

  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "kind        " << kind << "\n"
              << "prediction  " << prediction << "\n"
              << "estimate    " << mc.value << " +- " << mc.std_error << "\n"
              << "z-score     " << z << "\n"
              << "samples     " << mc.samples << " (resamples " << diag.resamples
              << ", newton failures " << diag.newton_failures << ", grid " << diag.grid
              << ")\n";
  }
  if (std::abs(z) > 4.0) {
    std::cerr << "verification failed: |z| = " << std::abs(z) << " > 4\n";
    return 3;
  }
  return 0;
}

int cmd_asymptotics(const std::string& body_file, const std::string& m_list,
                    int directions, const std::string& format) {
  const BodySpec body = load_body_file(body_file);
  const auto star = check_condition_star(body);
  if (!star.ok) throw ConditionStarViolated(star.note);
  const int n = body.dim();
  const auto ms = parse_m_list(m_list);

  std::vector<BodySpec> bodies(static_cast<std::size_t>(n), body);
  const double limit_eq8 = limit_real_fraction(bodies);
  const Ellipsoid limit_ell = limit_moment_matrix(body);

  const bool is_ball = body.is_ball();
  double limit_sec5 = 0.0;
  if (is_ball) {
    const auto b = beta_n(n);
    limit_sec5 = std::pow(b.closed_form / sigma_n(n), n / 2.0);
  }

  std::ostream& os = std::cout;
  if (format == "csv") {
    if (is_ball) {
      os << "# two candidate limit constants for ball bodies: limit_eq8 from the exact\n"
            "# second-moment integral, limit_sec5 from the raw beta_n/sigma_n ratio.\n"
            "# they agree only in one variable; the fraction column picks the winner.\n";
      os << "m,N_m,fraction,limit_eq8,limit_sec5,hausdorff\n";
    } else {
      os << "m,N_m,fraction,limit_eq8,hausdorff\n";
    }
  }
  for (const int m : ms) {
    const SupportSet support = dilate_and_intersect(body, m);
    std::vector<SupportSet> supports(static_cast<std::size_t>(n), support);
    const RootStatistics stats = real_fraction(supports, 0, 1);
    const Ellipsoid scaled = moment_matrix(support).scaled(1.0 / m);
    const double hd = hausdorff_distance(scaled, limit_ell, directions);
    if (format == "csv") {
      os << m << ',' << support.size() << ',' << stats.fraction << ',' << limit_eq8;
      if (is_ball) os << ',' << limit_sec5;
      os << ',' << hd << "\n";
    } else {
      os << "m=" << m << " N=" << support.size() << " fraction=" << stats.fraction
         << " limit=" << limit_eq8 << " hausdorff=" << hd << "\n";
    }
  }
  return 0;
}

int cmd_beta_table(int n_max, const std::string& format) {
  if (n_max < 1 || n_max > 64) throw ParseError("beta-table: n-max must be in 1..64");
  std::ostream& os = std::cout;
  if (format == "csv")
    os << "n,beta_closed,beta_quadrature,sigma,limit_sec5,limit_eq8\n";
  os.precision(15);
  for (int n = 1; n <= n_max; ++n) {
    const auto b = beta_n(n);
    const double sig = sigma_n(n);
    const double sec5 = std::pow(b.closed_form / sig, n / 2.0);
    const double eq8 = std::pow(sigma_n(n - 1) * b.closed_form / sig, n / 2.0);
    if (format == "csv") {
      os << n << ',' << b.closed_form << ',' << b.quadrature << ',' << sig << ',' << sec5
         << ',' << eq8 << "\n";
    } else {
      os << "n=" << n << " beta=" << b.closed_form << " (quadrature " << b.quadrature
         << ") sigma=" << sig << " limit_sec5=" << sec5 << " limit_eq8=" << eq8 << "\n";
    }
  }
  return 0;
}

SupportSet random_support(std::mt19937_64& rng, int dim, int freq_max, int pairs) {
  std::uniform_int_distribution<int> coord(-freq_max, freq_max);
  std::bernoulli_distribution with_zero(0.5);
  for (;;) {
    std::vector<LatticeVector> pts;
    if (with_zero(rng)) pts.push_back(LatticeVector(dim, 0));
    for (int k = 0; k < pairs; ++k) {
      LatticeVector v(dim);
      bool zero = true;
      for (auto& c : v) {
        c = coord(rng);
        zero &= c == 0;
      }
      if (zero) {
        --k;
        continue;
      }
      LatticeVector neg(dim);
      for (int i = 0; i < dim; ++i) neg[i] = -v[i];
      pts.push_back(v);
      pts.push_back(neg);
    }
    auto s = SupportSet::validate(pts);
    if (newton_polytope(s).intrinsic_dim() == dim) return s;
  }
}

int cmd_inequalities(int count, int triples, std::uint64_t seed, int freq_max) {
  std::mt19937_64 rng(seed);
  int violations = 0;

  int containment_checked = 0;
  for (int i = 0; i < count; ++i) {
    const auto s = random_support(rng, 2, freq_max, 3);
    const auto ell = moment_matrix(s);
    const auto conv = newton_polytope(s);
    if (!ellipsoid_in_polytope(ell, conv)) {
      ++violations;
      std::cerr << "containment violated for a support of size " << s.size() << "\n";
    }
    if (ellipsoid_volume(ell) > to_double(volume(conv)) + 1e-9) {
      ++violations;
      std::cerr << "volume inequality violated\n";
    }
    ++containment_checked;
  }
  std::cout << "containment and volume inequality: " << containment_checked << " supports, "
            << violations << " violations\n";

  int af_checked = 0;
  for (int i = 0; i < count / 2; ++i) {
    std::vector<SupportSet> pair = {random_support(rng, 2, freq_max, 3),
                                    random_support(rng, 2, freq_max, 3)};
    const auto gaps = af_inequality_gap(pair);
    const double scale =
        std::max({1.0, std::abs(gaps.quadratic_gap), std::abs(gaps.product_gap)});
    if (gaps.quadratic_gap < -1e-6 * scale || gaps.product_gap < -1e-6 * scale) {
      ++violations;
      std::cerr << "AF gap negative for a pair: " << gaps.quadratic_gap << ", "
                << gaps.product_gap << "\n";
    }
    ++af_checked;
  }
  std::cout << "Alexandrov-Fenchel pair gaps: " << af_checked << " pairs checked\n";

  af_checked = 0;
  for (int i = 0; i < triples; ++i) {
    std::vector<SupportSet> triple = {random_support(rng, 3, freq_max, 4),
                                      random_support(rng, 3, freq_max, 4),
                                      random_support(rng, 3, freq_max, 4)};
    const auto gaps = af_inequality_gap(triple);
    const double scale =
        std::max({1.0, std::abs(gaps.quadratic_gap), std::abs(gaps.product_gap)});
    if (gaps.quadratic_gap < -1e-6 * scale || gaps.product_gap < -1e-6 * scale) {
      ++violations;
      std::cerr << "AF gap negative for a triple: " << gaps.quadratic_gap << ", "
                << gaps.product_gap << "\n";
    }
    ++af_checked;
  }
  std::cout << "Alexandrov-Fenchel triple gaps: " << af_checked << " triples checked\n";

  if (violations > 0) {
    std::cerr << violations << " violations found\n";
    return 3;
  }
  std::cout << "all inequalities hold\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expected real roots of random trigonometric polynomial systems"};
  app.require_subcommand(1);

  std::vector<std::string> support_files;
  std::string body_file, m_list = "1..20", kind = "real", format;
  std::int64_t samples = 100000;
  std::uint64_t seed = 12345;
  int workers = 1, grid = 0, n_max = 20, count = 100, triples = 50, freq_max = 6;
  int directions = 512;

  auto* predict = app.add_subcommand("predict", "theorem predictions from support files");
  predict->add_option("--support", support_files, "support JSON file (repeatable)")
      ->required()
      ->expected(-1);
  predict->add_option("--samples", samples, "Monte Carlo samples if no exact shortcut");
  predict->add_option("--seed", seed, "RNG seed");
  predict->add_option("--workers", workers, "worker threads");
  predict->add_option("--format", format, "json|text")->default_str("json");

  auto* verify = app.add_subcommand("verify", "Monte Carlo root counts vs prediction");
  verify->add_option("--support", support_files, "support JSON file (repeatable)")
      ->required()
      ->expected(-1);
  verify->add_option("--samples", samples, "number of sampled systems");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_option("--grid", grid, "cells per axis for 2D counting (0 = auto)");
  verify->add_option("--kind", kind, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  verify->add_option("--format", format, "json|text")->default_str("text");

  auto* asym = app.add_subcommand("asymptotics", "dilation asymptotics of the real fraction");
  asym->add_option("--body", body_file, "body JSON file")->required();
  asym->add_option("--m-list", m_list, "dilations, e.g. 1,2,5 or 1..50");
  asym->add_option("--directions", directions, "directions for the Hausdorff column");
  asym->add_option("--format", format, "csv|text")->default_str("csv");

  auto* beta = app.add_subcommand("beta-table", "ball-asymptotics constants");
  beta->add_option("--n-max", n_max, "largest dimension (<= 64)");
  beta->add_option("--format", format, "csv|table")->default_str("csv");

  auto* ineq = app.add_subcommand("inequalities", "containment and AF property suite");
  ineq->add_option("--count", count, "number of random supports");
  ineq->add_option("--triples", triples, "number of random 3D triples");
  ineq->add_option("--seed", seed, "RNG seed");
  ineq->add_option("--freq-max", freq_max, "frequency bound for random supports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (predict->parsed())
      return cmd_predict(support_files, samples, seed, workers,
                         format.empty() ? "json" : format);
    if (verify->parsed())
      return cmd_verify(support_files, samples, seed, workers, grid, kind,
                        format.empty() ? "text" : format);
    if (asym->parsed())
      return cmd_asymptotics(body_file, m_list, directions, format.empty() ? "csv" : format);
    if (beta->parsed()) return cmd_beta_table(n_max, format.empty() ? "csv" : format);
    if (ineq->parsed()) return cmd_inequalities(count, triples, seed, freq_max);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
