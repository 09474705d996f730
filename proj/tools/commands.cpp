#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "acm/bounds.hpp"
#include "acm/generators.hpp"
#include "acm/matrix_io.hpp"
#include "acm/report.hpp"

namespace acm::cli {

namespace {

struct IndexArgs {
  std::string u_path, v_path, pair_path;
  std::string method = "trig";
  std::string format = "text";
  bool self_dual = false;
  bool polar = false;
  bool trigpoly = false;
  double unitary_tol = kDefaultUnitaryTol;
  double selfdual_tol = 1e-9;
  std::optional<double> gap_tol;
};

struct GenerateArgs {
  std::string kind = "cyclic_shift";
  int n = 8;
  int k = -1;
  std::uint64_t seed = 1;
  double noise = 0.0;
  std::string out = "pair";
};

struct BoundsArgs {
  std::string curve = "beta";
  double delta_max = 0.25;
  int points = 101;
};

struct CertifyArgs {
  double delta = kLogCertifiedDelta;
  int mesh = 64;
  double max_step = 0.2236;
  double acceptance = 0.95;
  std::string format = "text";
};

struct FourierArgs {
  int max_n = 5;
  int series_k = 7;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

int cmd_index(const IndexArgs& a, std::ostream& out) {
  Matrix U, V;
  bool self_dual = a.self_dual;
  if (!a.pair_path.empty()) {
    const PairFile pf = read_pair_file(a.pair_path);
    U = pf.U;
    V = pf.V;
    self_dual = true;
  } else {
    if (a.u_path.empty() || a.v_path.empty()) {
      throw Error(ErrorCode::ParseError, "index needs --u and --v, or --pair");
    }
    U = read_matrix_file(a.u_path);
    V = read_matrix_file(a.v_path);
  }
  if (a.polar) {
    U = unitary_part(U);
    V = unitary_part(V);
  }
  const UnitaryPair pair(std::move(U), std::move(V), a.unitary_tol);

  IndexOptions opt;
  opt.method = parse_index_method(a.method);
  opt.self_dual = self_dual;
  opt.use_trigpoly = a.trigpoly;
  opt.selfdual_tol = a.selfdual_tol;
  opt.gap_tol = a.gap_tol;
  const IndexReport report = compute_index_report(pair, opt);
  if (self_dual && a.format == "text") out << "selfdual_violation=" << report.selfdual_violation << '\n';
  out << (a.format == "csv" ? report.csv() : report.text());
  return report.exit_code() == 0 ? kExitOk : kExitUncertified;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  PairSpec spec;
  spec.kind = parse_pair_kind(a.kind);
  spec.n = a.n;
  spec.k = a.k;
  spec.seed = a.seed;
  spec.noise = a.noise;
  const UnitaryPair pair = generate_pair(spec);
  const std::string u_path = a.out + "_U.txt";
  const std::string v_path = a.out + "_V.txt";
  write_matrix_file(u_path, pair.U());
  write_matrix_file(v_path, pair.V());
  out << "U=" << u_path << "\nV=" << v_path << '\n';
  if (spec.kind == PairKind::SelfDualDoubling) {
    const std::string pair_path = a.out + "_pair.txt";
    write_pair_file(pair_path, {static_cast<int>(pair.dim() / 2), pair.U(), pair.V()});
    out << "pair=" << pair_path << '\n';
  }
  out << "dim=" << pair.dim() << "\ndelta=" << fmt(pair.delta()) << '\n';
  return kExitOk;
}

std::vector<double> delta_grid(const BoundsArgs& a) {
  if (a.points < 2 || !(a.delta_max > 0.0)) {
    throw Error(ErrorCode::ParseError, "--points must be >= 2 and --delta-max positive");
  }
  std::vector<double> grid;
  for (int i = 0; i < a.points; ++i) grid.push_back(a.delta_max * i / (a.points - 1));
  if (kCertifiedDelta <= a.delta_max) grid.push_back(kCertifiedDelta);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const std::vector<double> grid = delta_grid(a);
  if (a.curve == "beta") {
    const BoundEnvelope ef = eta_envelope_f(), eh = eta_envelope_h();
    out << "delta,eta_f,eta_h,beta\n";
    for (double d : grid) out << fmt(d) << ',' << fmt(ef(d)) << ',' << fmt(eh(d)) << ',' << fmt(beta(d)) << '\n';
  } else if (a.curve == "eta-f" || a.curve == "eta-h") {
    const auto& table = a.curve == "eta-f" ? eta_table_f() : eta_table_h();
    out << "delta";
    for (const TableRow& r : table) {
      out << ",n" << (r.line.degree < 0 ? std::string("inf") : std::to_string(r.line.degree));
    }
    out << ",envelope\n";
    const BoundEnvelope env = a.curve == "eta-f" ? eta_envelope_f() : eta_envelope_h();
    for (double d : grid) {
      out << fmt(d);
      for (const TableRow& r : table) out << ',' << fmt(r.line(d));
      out << ',' << fmt(env(d)) << '\n';
    }
  } else if (a.curve == "gap") {
    out << "delta,beta,gap,coarse\n";
    for (double d : grid) {
      const double b = beta(d);
      out << fmt(d) << ',' << fmt(b) << ',' << (b < 1.0 ? fmt(std::sqrt(1.0 - b)) : "NA") << ','
          << (d <= 0.2 ? fmt(coarse_gap_bound(d)) : "NA") << '\n';
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown curve '" + a.curve + "'");
  }
  return kExitOk;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  LogPathOptions opt;
  opt.points_per_stage = a.mesh;
  opt.max_step = a.max_step;
  opt.acceptance = a.acceptance;
  const CertificationReport report = certify_log_path(a.delta, opt);
  if (a.format == "csv") {
    out << report.csv();
  } else {
    out << "status=" << to_string(report.status) << '\n'
        << "delta=" << fmt(report.delta) << '\n'
        << "points=" << report.points.size() << '\n'
        << "max_bound=" << fmt(report.max_bound) << '\n'
        << "max_step=" << fmt(report.max_step) << '\n'
        << "endpoint_bound=" << fmt(report.points.back().bound) << '\n'
        << "message=" << report.message << '\n';
  }
  if (report.status != CertificationStatus::Pass) {
    err << "error: " << to_string(report.status) << ": " << report.message << '\n';
    return kExitError;
  }
  return kExitOk;
}

int cmd_fourier(const FourierArgs& a, std::ostream& out) {
  const FourierTable table = fourier_coefficients_h(a.max_n, a.series_k);
  const TrigPoly f = f_trigpoly();
  out.precision(10);
  out << "n,a_n_imag,b_n,c_n\n";
  for (int n = 0; n <= a.max_n; ++n) {
    const double an = n <= f.degree() ? f.coeff(n).imag() + 0.0 : 0.0;
    out << n << ',' << an << ',' << table.b(n) << ',' << table.c[n] << '\n';
  }
  if (!table.certified) {
    out << "# uncertified: series tail " << table.series_tail_bound << ", quadrature "
        << table.quadrature_error << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indices of almost commuting unitary matrices"};
  app.require_subcommand(1);

  IndexArgs ia;
  CLI::App* index = app.add_subcommand("index", "omega, kappa and kappa2 of a pair of unitaries");
  index->add_option("--u", ia.u_path, "matrix file for U");
  index->add_option("--v", ia.v_path, "matrix file for V");
  index->add_option("--pair", ia.pair_path, "self-dual pair file (implies --self-dual)");
  index->add_option("--method", ia.method, "trig | log")->check(CLI::IsMember({"trig", "log"}));
  index->add_flag("--self-dual", ia.self_dual, "also compute kappa2");
  index->add_flag("--polar", ia.polar, "replace U and V by their unitary parts");
  index->add_flag("--trigpoly", ia.trigpoly, "use the degree-5 trig polynomials");
  index->add_option("--format", ia.format,
                    "text (key=value) | csv with columns omega,kappa,kappa2,delta,method,"
                    "omega_valid,kappa_certified,log_certified,gap_measured,gap_guaranteed,"
                    "gap_coarse,distance_to_commuting,selfdual_distance_to_commuting")
      ->check(CLI::IsMember({"text", "csv"}));
  index->add_option("--unitary-tol", ia.unitary_tol, "unitarity tolerance")->capture_default_str();
  index->add_option("--selfdual-tol", ia.selfdual_tol, "self-duality tolerance")->capture_default_str();
  index->add_option("--gap-tol", ia.gap_tol, "signature gap tolerance (default 1e-8 * dim)");

  GenerateArgs ga;
  CLI::App* generate = app.add_subcommand("generate", "write a test pair to <out>_U.txt and <out>_V.txt");
  generate->add_option("--kind", ga.kind, "cyclic_shift | commuting_random | perturbed | direct_sum | selfdual_doubling")
      ->capture_default_str();
  generate->add_option("--n", ga.n, "dimension parameter")->capture_default_str();
  generate->add_option("--k", ga.k, "winding number for cyclic_shift")->capture_default_str();
  generate->add_option("--seed", ga.seed, "random seed")->capture_default_str();
  generate->add_option("--noise", ga.noise, "perturbation radius")->capture_default_str();
  generate->add_option("--out", ga.out, "output prefix")->capture_default_str();

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand(
      "bounds",
      "CSV curves: beta (delta,eta_f,eta_h,beta), eta-f / eta-h (delta, one column per "
      "table row, envelope), gap (delta,beta,gap,coarse)");
  bounds->add_option("--curve", ba.curve, "beta | eta-f | eta-h | gap")
      ->check(CLI::IsMember({"beta", "eta-f", "eta-h", "gap"}));
  bounds->add_option("--delta-max", ba.delta_max, "largest commutator norm")->capture_default_str();
  bounds->add_option("--points", ba.points, "grid points; 0.206007 is always added")->capture_default_str();

  CertifyArgs ca;
  CLI::App* certify = app.add_subcommand(
      "certify-log",
      "certify the homotopy to the log-method triple; csv columns stage,t,g_norm,eta_h,"
      "eta_h2,eta_q,bound");
  certify->add_option("--delta", ca.delta, "commutator norm")->capture_default_str();
  certify->add_option("--mesh", ca.mesh, "initial points per stage")->capture_default_str();
  certify->add_option("--max-step", ca.max_step, "step rule")->capture_default_str();
  certify->add_option("--acceptance", ca.acceptance, "bound must stay below this")->capture_default_str();
  certify->add_option("--format", ca.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

  FourierArgs fa;
  CLI::App* fourier = app.add_subcommand("fourier", "CSV n,a_n_imag,b_n,c_n of f, g and h");
  fourier->add_option("--max-n", fa.max_n, "largest n")->capture_default_str();
  fourier->add_option("--series-k", fa.series_k, "binomial terms kept")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (index->parsed()) return cmd_index(ia, out);
    if (generate->parsed()) return cmd_generate(ga, out);
    if (bounds->parsed()) return cmd_bounds(ba, out);
    if (certify->parsed()) return cmd_certify(ca, out, err);
    if (fourier->parsed()) return cmd_fourier(fa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace acm::cli
