#include "acm/report.hpp"

#include <sstream>

namespace acm {

namespace {

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "NA";
  std::ostringstream os;
  os.precision(12);
  os << *v;
  return os.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_string(IndexMethod method) { return method == IndexMethod::Log ? "log" : "trig"; }

IndexMethod parse_index_method(const std::string& name) {
  if (name == "trig") return IndexMethod::Trig;
  if (name == "log") return IndexMethod::Log;
  throw Error(ErrorCode::ParseError, "method must be 'trig' or 'log'");
}

IndexReport compute_index_report(const UnitaryPair& pair, const IndexOptions& options) {
  IndexReport r;
  r.method = options.method;
  r.delta = pair.delta();
  r.omega_valid = r.delta < 2.0 - kWindingDeltaMargin;
  r.kappa_certified = r.delta <= kCertifiedDelta;
  r.log_certified = r.delta <= kLogCertifiedDelta;

  if (r.omega_valid) {
    r.omega = winding_number(pair).omega;
    if (*r.omega != 0) r.distance_to_commuting = commuting_distance_bound(r.delta);
  }

  std::optional<SelfDualPair> sd;
  if (options.self_dual) {
    sd.emplace(pair, options.selfdual_tol);
    r.selfdual_violation = sd->symmetry_violation();
  }

  const BottMatrix B = options.method == IndexMethod::Log
                           ? build_BL(pair, sd ? std::optional<DualStructure>(sd->structure())
                                               : std::nullopt)
                           : (sd ? build_selfdual_B(*sd, options.use_trigpoly).bott
                                 : build_B(pair, options.use_trigpoly));
  r.gap_measured = B.gap;
  try {
    const int sig = signature_from_eigenvalues(
        B.eigenvalues, options.gap_tol.value_or(default_gap_tol(B.B.rows())));
    if (sig % 2 != 0) throw Error(ErrorCode::NumericalInconsistency, "odd signature");
    r.kappa = sig / 2;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GapClosed) throw;
    r.warnings.push_back(e.what());
  }

  if (sd) {
    try {
      r.kappa2 = pfaffian_sign(B.B, B.eigenvalues, sd->structure()).kappa2;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GapClosed) throw;
      r.warnings.push_back(e.what());
    }
    if (r.kappa2 && *r.kappa2 == -1 && r.kappa_certified) {
      r.selfdual_distance_to_commuting = selfdual_commuting_distance_bound(r.delta);
    }
  }

  const bool index_certified =
      options.method == IndexMethod::Log ? r.log_certified : r.kappa_certified;
  if (r.kappa && r.omega && index_certified && *r.kappa != *r.omega) {
    throw Error(ErrorCode::NumericalInconsistency,
                "certified kappa = " + std::to_string(*r.kappa) + " differs from omega = " +
                    std::to_string(*r.omega));
  }

  const double b = beta(r.delta);
  if (b < 1.0) {
    const GapBound g = guaranteed_gap(r.delta);
    r.gap_guaranteed = g.gap;
    r.gap_coarse = g.coarse;
  }
  if (!index_certified) {
    r.warnings.push_back("commutator norm above the certified threshold for the " +
                         to_string(options.method) + " method");
  }
  return r;
}

int IndexReport::exit_code() const {
  const bool certified = method == IndexMethod::Log ? log_certified : kappa_certified;
  const bool any_index = kappa.has_value() || kappa2.has_value();
  return (any_index && !certified) || (!kappa && !omega) ? 2 : 0;
}

std::string IndexReport::text() const {
  std::ostringstream os;
  os.precision(12);
  os << "omega=" << opt_str(omega) << '\n'
     << "kappa=" << opt_str(kappa) << '\n'
     << "kappa2=" << opt_str(kappa2) << '\n'
     << "delta=" << delta << '\n'
     << "method=" << to_string(method) << '\n'
     << "omega_valid=" << flag(omega_valid) << '\n'
     << "kappa_certified=" << flag(kappa_certified) << '\n'
     << "log_certified=" << flag(log_certified) << '\n'
     << "gap_measured=" << gap_measured << '\n'
     << "gap_guaranteed=" << opt_str(gap_guaranteed) << '\n'
     << "gap_coarse=" << opt_str(gap_coarse) << '\n'
     << "distance_to_commuting=" << opt_str(distance_to_commuting) << '\n'
     << "selfdual_distance_to_commuting=" << opt_str(selfdual_distance_to_commuting) << '\n';
  for (const std::string& w : warnings) os << "warning=" << w << '\n';
  return os.str();
}

std::string IndexReport::csv() const {
  std::ostringstream os;
  os.precision(12);
  os << "omega,kappa,kappa2,delta,method,omega_valid,kappa_certified,log_certified,"
        "gap_measured,gap_guaranteed,gap_coarse,distance_to_commuting,"
        "selfdual_distance_to_commuting\n"
     << opt_str(omega) << ',' << opt_str(kappa) << ',' << opt_str(kappa2) << ',' << delta << ','
     << to_string(method) << ',' << flag(omega_valid) << ',' << flag(kappa_certified) << ','
     << flag(log_certified) << ',' << gap_measured << ',' << opt_str(gap_guaranteed) << ','
     << opt_str(gap_coarse) << ',' << opt_str(distance_to_commuting) << ','
     << opt_str(selfdual_distance_to_commuting) << '\n';
  return os.str();
}

}  // namespace acm
