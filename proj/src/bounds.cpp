#include "acm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <sstream>

#include "acm/trig_fit.hpp"

namespace acm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Fast evaluation of a real trig polynomial as a0 + sum alpha_k cos kx + beta_k sin kx.
class RealTrig {
 public:
  explicit RealTrig(const TrigPoly& p) : a0_(p.coeff(0).real()) {
    if (!p.is_real_valued(1e-12)) {
      throw Error(ErrorCode::InvalidPolynomial, "approximant must be real valued");
    }
    for (int k = 1; k <= p.degree(); ++k) {
      alpha_.push_back(2.0 * p.coeff(k).real());
      beta_.push_back(-2.0 * p.coeff(k).imag());
    }
  }

  double operator()(double x) const {
    const double c1 = std::cos(x), s1 = std::sin(x);
    double c = 1.0, s = 0.0, sum = a0_;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      sum += alpha_[k] * c + beta_[k] * s;
    }
    return sum;
  }

 private:
  double a0_;
  std::vector<double> alpha_, beta_;
};

struct Range {
  double lo = kInf;
  double hi = -kInf;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double diam() const { return hi - lo; }
};

TrigPoly difference(const TrigPoly& a, const TrigPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<Complex> c(2 * n + 1);
  for (int k = -n; k <= n; ++k) c[k + n] = a.coeff(k) - b.coeff(k);
  return TrigPoly(std::move(c));
}

BoundLine grid_line(const RealFunction& err, double m, double err_lipschitz,
                    std::size_t grid_points) {
  if (grid_points < 2) throw Error(ErrorCode::InvalidPolynomial, "grid needs two points");
  Range r;
  const double s = 2.0 * kPi / static_cast<double>(grid_points);
  for (std::size_t j = 0; j < grid_points; ++j) r.add(err(-kPi + s * static_cast<double>(j)));
  BoundLine line;
  line.m = m;
  line.b = r.diam() + err_lipschitz * s;
  return line;
}

void check_drift(const TableRow& row, const char* table) {
  if (row.line.m > row.reference_m + 1e-3 || row.line.b > row.reference_b + 1e-3) {
    std::ostringstream os;
    os << table << " row " << row.line.degree << " recomputed as (" << row.line.m << ", "
       << row.line.b << ") against (" << row.reference_m << ", " << row.reference_b << ")";
    throw Error(ErrorCode::TableDrift, os.str());
  }
}

// One pass over [0, pi] measuring every truncation of f and h at once; both
// error functions are odd or even, so half a period determines the diameter.
struct StandardSweep {
  std::vector<TableRow> f_rows;
  std::vector<TableRow> h_rows;
};

StandardSweep run_standard_sweep() {
  const StandardTriple& st = standard_triple();
  const std::vector<double>& c = st.table.c;
  constexpr int kHRows = 6;
  const std::size_t cells = std::size_t{1} << 25;
  const double s = kPi / static_cast<double>(cells);

  std::vector<Range> h_err(kHRows);
  double f_max[3] = {0.0, 0.0, 0.0};  // max |f - f_n| for n = 0, 1, 2 sine terms
  for (std::size_t j = 0; j <= cells; ++j) {
    const double x = s * static_cast<double>(j);
    const double cx = std::cos(x), sx = std::sin(x);
    const double h = x <= kPi / 2 ? standard_envelope(x) : 0.0;
    double ck_prev = 1.0, ck = cx, hn = c[0];
    h_err[0].add(h - hn);
    for (int k = 1; k < kHRows; ++k) {
      hn += 2.0 * c[k] * ck;
      h_err[k].add(h - hn);
      const double next = 2.0 * cx * ck - ck_prev;
      ck_prev = ck;
      ck = next;
    }
    const double s3 = sx * (3.0 - 4.0 * sx * sx);
    const double s5 = sx * (5.0 - 20.0 * sx * sx + 16.0 * sx * sx * sx * sx);
    const double t1 = 150.0 / 128.0 * sx, t3 = 25.0 / 128.0 * s3, t5 = 3.0 / 128.0 * s5;
    f_max[0] = std::max(f_max[0], std::abs(t1 + t3 + t5));
    f_max[1] = std::max(f_max[1], std::abs(t3 + t5));
    f_max[2] = std::max(f_max[2], std::abs(t5));
  }

  StandardSweep out;
  const double f_ref_m[3] = {0.0, 1.171875, 1.7578125};
  const double f_ref_b[3] = {2.0, 0.4375, 0.04687};
  const double f_err_lip[3] = {240.0 / 128.0, 90.0 / 128.0, 15.0 / 128.0};
  for (int n = 0; n < 3; ++n) {
    TableRow row;
    row.line.provenance = LineProvenance::TableFRow;
    row.line.degree = n == 0 ? 0 : 2 * n - 1;
    row.line.m = f_ref_m[n] == 0.0 ? 0.0 : f_trigpoly().truncated(2 * n - 1).derivative_l1();
    row.line.b = 2.0 * f_max[n] + f_err_lip[n] * s;
    row.reference_m = f_ref_m[n];
    row.reference_b = f_ref_b[n];
    out.f_rows.push_back(row);
  }
  TableRow f_exact;
  f_exact.line = {f_trigpoly().derivative_l1(), 0.0, LineProvenance::TableFRow, -1};
  f_exact.reference_m = 1.875;
  f_exact.reference_b = 0.0;
  out.f_rows.push_back(f_exact);

  const double h_ref_m[kHRows] = {0.0, 0.359880, 0.862500, 1.258560, 1.446120, 1.48498};
  const double h_ref_b[kHRows] = {1.0, 0.732237, 0.350141, 0.106619, 0.017509, 0.004110};
  for (int n = 0; n < kHRows; ++n) {
    TableRow row;
    row.line.provenance = LineProvenance::TableHRow;
    row.line.degree = n;
    row.line.m = st.h5.truncated(n).derivative_l1();
    row.line.b = h_err[n].diam() + (kStandardHLipschitz + row.line.m) * s;
    row.reference_m = h_ref_m[n];
    row.reference_b = h_ref_b[n];
    out.h_rows.push_back(row);
  }
  TableRow h_exact;
  h_exact.line = {kHDerivativeFourierNorm, 0.0, LineProvenance::TableHRow, -1};
  h_exact.reference_m = kHDerivativeFourierNorm;
  h_exact.reference_b = 0.0;
  out.h_rows.push_back(h_exact);

  for (const TableRow& row : out.f_rows) check_drift(row, "f");
  for (const TableRow& row : out.h_rows) check_drift(row, "h");
  const double closed = h_derivative_fourier_bound();
  if (!(closed < kHDerivativeFourierCheck)) {
    throw Error(ErrorCode::TableDrift,
                "closed-form bound on sum |k c_k| is " + std::to_string(closed));
  }
  return out;
}

const StandardSweep& standard_sweep() {
  static const StandardSweep sweep = run_standard_sweep();
  return sweep;
}

}  // namespace

double BoundEnvelope::operator()(double delta) const {
  double best = kInf;
  for (const BoundLine& line : lines_) best = std::min(best, line(delta));
  return best;
}

BoundLine eta_line(const RealFunction& fn, const TrigPoly& approx, double fn_lipschitz,
                   std::size_t grid_points) {
  const RealTrig p(approx);
  const double m = approx.derivative_l1();
  return grid_line([&](double x) { return fn(x) - p(x); }, m, fn_lipschitz + m, grid_points);
}

BoundLine eta_line(const TrigPoly& fn, const TrigPoly& approx, std::size_t grid_points) {
  const TrigPoly diff = difference(fn, approx);
  const RealTrig e(diff);
  const double lip = diff.derivative_l1();
  if (lip == 0.0) return {approx.derivative_l1(), 0.0, LineProvenance::Computed, approx.degree()};
  BoundLine line = grid_line(e, approx.derivative_l1(), lip, grid_points);
  line.degree = approx.degree();
  return line;
}

double h_derivative_fourier_bound() {
  const double series = 0.25 + 16.0 / (15.0 * kPi) + 18.0 / (105.0 * kPi) + 4.0 / (315.0 * kPi) +
                        16.0 / (3465.0 * kPi) + std::log(81.0 / 77.0) / (4.0 * kPi);
  return 225.0 / std::sqrt(3256.0) * std::sqrt(407.0 / 302.0) * series;
}

double h_derivative_l1_partial(int K) {
  const int M = 1 << 16;
  if (K < 0 || K > M / 8) throw Error(ErrorCode::InvalidPolynomial, "K out of range");
  std::vector<double> h(M);
  for (int j = 0; j < M; ++j) h[j] = eval_h(-kPi + 2.0 * kPi * j / M);
  double total = 0.0;
  for (int k = 1; k <= K; ++k) {
    double ck = 0.0;
    for (int j = 0; j < M; ++j) ck += h[j] * std::cos(k * (-kPi + 2.0 * kPi * j / M));
    total += 2.0 * k * std::abs(ck / M);
  }
  return total;
}

const std::vector<TableRow>& eta_table_f() { return standard_sweep().f_rows; }
const std::vector<TableRow>& eta_table_h() { return standard_sweep().h_rows; }

BoundEnvelope eta_envelope_f() {
  BoundEnvelope env;
  for (const TableRow& row : eta_table_f()) env.add(row.line);
  return env;
}

BoundEnvelope eta_envelope_h() {
  BoundEnvelope env;
  for (const TableRow& row : eta_table_h()) env.add(row.line);
  return env;
}

double beta(double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidMatrix, "delta must be nonnegative");
  static const BoundEnvelope ef = eta_envelope_f();
  static const BoundEnvelope eh = eta_envelope_h();
  return 2.0 * eh(delta) + ef(delta);
}

double threshold_root() {
  double lo = 0.0, hi = 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (beta(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ThresholdReport threshold_consistency() {
  ThresholdReport r;
  r.root = threshold_root();
  r.beta_at_certified = beta(kCertifiedDelta);
  r.consistent = r.root >= 0.2060 && r.root <= 0.2061;
  return r;
}

double coarse_gap_bound(double delta) {
  if (!(delta >= 0.0 && delta <= 0.2)) {
    throw Error(ErrorCode::NoGuarantee, "coarse gap bound needs delta in [0, 0.2]");
  }
  return 0.95 * std::sqrt(1.0 - 5.0 * delta);
}

GapBound guaranteed_gap(double delta) {
  GapBound g;
  g.beta = beta(delta);
  if (g.beta >= 1.0) {
    std::ostringstream os;
    os << "beta(" << delta << ") = " << g.beta << " >= 1";
    throw Error(ErrorCode::NoGuarantee, os.str());
  }
  g.gap = std::sqrt(1.0 - g.beta);
  if (delta <= 0.2) g.coarse = coarse_gap_bound(delta);
  return g;
}

double variation_bound(double dU, double dV) {
  if (!(dU >= 0.0 && dV >= 0.0)) {
    throw Error(ErrorCode::InvalidMatrix, "distances must be nonnegative");
  }
  return std::min(beta(dV) + dU, beta(dV + dU));
}

// ---------------------------------------------------------------------------
// Homotopy certification.

namespace {

// Periodic reduction that keeps both endpoints -pi and pi, so cells ending at
// -pi see the left-hand limits.
double reduce(double x) { return std::abs(x) <= kPi ? x : wrap_angle(x); }

}  // namespace

double clamped_f(double x) {
  x = reduce(x);
  if (std::abs(x) <= kPi / 2) return eval_f(x);
  return x > 0 ? 1.0 : -1.0;
}

double path_F(int stage, double t, double x) {
  if (stage == 1) return clamped_f(x);
  return (1.0 - t) * clamped_f(x) + t * reduce(x) / kPi;
}

PathTriple path_functions(int stage, double t, double x) {
  if (stage != 1 && stage != 2) throw Error(ErrorCode::InvalidPolynomial, "stage must be 1 or 2");
  x = reduce(x);
  if (stage == 1) {
    const double g = (1.0 - t) * eval_g(x);
    const double f = std::abs(x) <= kPi / 2 ? eval_f(x)
                                            : (x > 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - g * g));
    return {f, g, eval_h(x)};
  }
  const double F = path_F(2, t, x);
  return {F, 0.0, std::sqrt(std::max(0.0, 1.0 - F * F))};
}

namespace {

enum class PathFn { H, H2, Q };

double phi(PathFn kind, double y) {
  const double r = std::max(0.0, 1.0 - y * y);
  switch (kind) {
    case PathFn::H: return std::sqrt(r);
    case PathFn::H2: return r;
    case PathFn::Q: return y * std::sqrt(r);
  }
  return 0.0;
}

// Exact range of phi over [y0, y1] within [-1, 1].
Range phi_range(PathFn kind, double y0, double y1) {
  y0 = std::clamp(y0, -1.0, 1.0);
  y1 = std::clamp(y1, -1.0, 1.0);
  Range r;
  r.add(phi(kind, y0));
  r.add(phi(kind, y1));
  const double crit[3] = {0.0, -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const int ncrit = kind == PathFn::Q ? 3 : 1;
  for (int i = kind == PathFn::Q ? 1 : 0; i < ncrit; ++i) {
    if (crit[i] > y0 && crit[i] < y1) r.add(phi(kind, crit[i]));
  }
  return r;
}

struct PathSpec {
  int stage;
  double t;
  PathFn kind;
  double F(double x) const { return path_F(stage, t, x); }
  double value(double x) const { return phi(kind, F(x)); }
  double F_second_bound() const {
    constexpr double kFSecond = 450.0 / 128.0;
    return stage == 1 ? kFSecond : (1.0 - t) * kFSecond;
  }
};

struct Cell {
  double a, b;
  double Fa, Fb, pa, pb;
  double hi, lo;
};

// Certified range of value - p over [-pi, pi] by cell enclosures, refining the
// cells that carry the extreme bound.
Range certified_error_range(const PathSpec& spec, const TrigPoly& poly, int base_cells) {
  const RealTrig p(poly);
  const double m = poly.derivative_l1();
  const double M2 = spec.F_second_bound();

  auto make_cell = [&](double a, double b, double Fa, double Fb, double pa, double pb) {
    const double w = b - a;
    const double slack_F = M2 * w * w / 8.0;
    const Range pr = phi_range(spec.kind, std::min(Fa, Fb) - slack_F, std::max(Fa, Fb) + slack_F);
    const double pmid = 0.5 * (pa + pb);
    return Cell{a, b, Fa, Fb, pa, pb, pr.hi - (pmid - m * w / 2.0), pr.lo - (pmid + m * w / 2.0)};
  };

  Range sampled;
  std::vector<Cell> cells;
  cells.reserve(base_cells);
  const double w = 2.0 * kPi / base_cells;
  double xa = -kPi, Fa = spec.F(xa), pa = p(xa);
  sampled.add(phi(spec.kind, Fa) - pa);
  for (int i = 0; i < base_cells; ++i) {
    const double xb = i + 1 == base_cells ? kPi : -kPi + w * (i + 1);
    const double Fb = spec.F(xb), pb = p(xb);
    sampled.add(phi(spec.kind, Fb) - pb);
    cells.push_back(make_cell(xa, xb, Fa, Fb, pa, pb));
    xa = xb;
    Fa = Fb;
    pa = pb;
  }

  auto refine = [&](bool upper) {
    auto worse = [upper](const Cell& x, const Cell& y) { return upper ? x.hi < y.hi : x.lo > y.lo; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(worse)> heap(worse, cells);
    for (int iter = 0; iter < 200000; ++iter) {
      const Cell top = heap.top();
      const double gap = upper ? top.hi - sampled.hi : sampled.lo - top.lo;
      if (gap <= 1e-8 || top.b - top.a < 1e-13) break;
      heap.pop();
      const double mid = 0.5 * (top.a + top.b);
      const double Fm = spec.F(mid), pm = p(mid);
      sampled.add(phi(spec.kind, Fm) - pm);
      heap.push(make_cell(top.a, mid, top.Fa, Fm, top.pa, pm));
      heap.push(make_cell(mid, top.b, Fm, top.Fb, pm, top.pb));
    }
    return upper ? heap.top().hi : heap.top().lo;
  };
  Range out;
  out.hi = refine(true);
  out.lo = refine(false);
  return out;
}

// Best certified line at delta among truncated Fourier series and one LP fit.
double eta_path_function(const PathSpec& spec, double delta, const LogPathOptions& opt) {
  const int M = 1 << 16;
  const int K = opt.fft_degree;
  std::vector<double> xs(M), vs(M);
  for (int j = 0; j < M; ++j) {
    xs[j] = -kPi + 2.0 * kPi * j / M;
    vs[j] = spec.value(xs[j]);
  }
  // Trapezoid-rule Fourier coefficients a_k, k = 0..K.
  std::vector<Complex> a(K + 1, Complex(0.0));
  for (int j = 0; j < M; ++j) {
    const Complex z = std::polar(1.0, -xs[j]);
    Complex w(1.0, 0.0);
    for (int k = 0; k <= K; ++k) {
      a[k] += vs[j] * w;
      w *= z;
    }
  }
  for (Complex& ak : a) ak /= static_cast<double>(M);
  if (spec.kind == PathFn::Q) {
    for (Complex& ak : a) ak = Complex(0.0, ak.imag());
  } else {
    for (Complex& ak : a) ak = Complex(ak.real(), 0.0);
  }

  // Sampled diameters of every truncation.
  std::vector<Range> err(K + 1);
  for (int j = 0; j < M; ++j) {
    const Complex z = std::polar(1.0, xs[j]);
    Complex w = z;
    double pn = a[0].real();
    err[0].add(vs[j] - pn);
    for (int k = 1; k <= K; ++k) {
      pn += 2.0 * (a[k] * w).real();
      err[k].add(vs[j] - pn);
      w *= z;
    }
  }
  int best = 0;
  double best_val = kInf, m = 0.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) m += 2.0 * k * std::abs(a[k]);
    const double v = m * delta + err[k].diam();
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  std::vector<Complex> full(2 * best + 1);
  for (int k = 0; k <= best; ++k) {
    full[best + k] = a[k];
    full[best - k] = std::conj(a[k]);
  }
  const TrigPoly truncated(std::move(full));

  // LP fit on a coarser grid.
  const int L = 2001;
  std::vector<double> lx(L), lv(L);
  for (int j = 0; j < L; ++j) {
    lx[j] = -kPi + 2.0 * kPi * j / (L - 1);
    lv[j] = spec.value(lx[j]);
  }
  const TrigPoly fitted = minimax_line_fit(
      lx, lv, spec.kind == PathFn::Q ? FitBasis::Sine : FitBasis::Cosine, opt.fit_degree, delta);

  double eta = kInf;
  for (const TrigPoly* poly : {&truncated, &fitted}) {
    const Range r = certified_error_range(spec, *poly, opt.certify_cells);
    eta = std::min(eta, poly->derivative_l1() * delta + r.diam());
  }
  return eta;
}

double sup_step(int s0, double t0, int s1, double t1) {
  const int G = 4096;
  double df = 0.0, dg = 0.0, dh = 0.0;
  for (int j = 0; j <= G; ++j) {
    const double x = -kPi + 2.0 * kPi * j / G;
    const PathTriple p = path_functions(s0, t0, x);
    const PathTriple q = path_functions(s1, t1, x);
    df = std::max(df, std::abs(p.f - q.f));
    dg = std::max(dg, std::abs(p.g - q.g));
    dh = std::max(dh, std::abs(p.h - q.h));
  }
  return df + dg + dh;
}

std::vector<double> stage_mesh(const std::vector<double>& explicit_mesh, int points) {
  std::vector<double> mesh = explicit_mesh;
  if (mesh.empty()) {
    if (points < 2) points = 2;
    for (int i = 0; i < points; ++i) mesh.push_back(static_cast<double>(i) / (points - 1));
  }
  for (double t : mesh) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::MeshViolation, "mesh values must lie in [0, 1]");
  }
  std::sort(mesh.begin(), mesh.end());
  return mesh;
}

}  // namespace

CertificationPoint certify_path_point(int stage, double t, double delta,
                                      const LogPathOptions& options) {
  if (stage != 1 && stage != 2) throw Error(ErrorCode::InvalidPolynomial, "stage must be 1 or 2");
  CertificationPoint pt;
  pt.stage = stage;
  pt.t = t;
  pt.g_norm = stage == 1 ? 1.0 - t : 0.0;
  pt.eta_h = eta_path_function({stage, t, PathFn::H}, delta, options);
  pt.eta_h2 = eta_path_function({stage, t, PathFn::H2}, delta, options);
  pt.eta_q = eta_path_function({stage, t, PathFn::Q}, delta, options);
  pt.bound = (pt.g_norm + 1.0) * pt.eta_h + 0.25 * pt.eta_h * pt.eta_h + 0.5 * pt.eta_h2 + pt.eta_q;
  return pt;
}

CertificationReport certify_log_path(double delta, const LogPathOptions& options) {
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidMatrix, "delta must be nonnegative");
  CertificationReport report;
  report.delta = delta;

  struct Node {
    int stage;
    double t;
  };
  std::vector<Node> nodes;
  for (double t : stage_mesh(options.stage1_mesh, options.points_per_stage)) nodes.push_back({1, t});
  for (double t : stage_mesh(options.stage2_mesh, options.points_per_stage)) nodes.push_back({2, t});

  // Step rule, refining by bisection inside a stage when allowed.
  std::vector<double> steps;
  bool violated = false;
  for (std::size_t i = 0; i + 1 < nodes.size();) {
    const Node a = nodes[i], b = nodes[i + 1];
    const double step = sup_step(a.stage, a.t, b.stage, b.t);
    if (step > options.max_step && options.refine && a.stage == b.stage && nodes.size() < 8192) {
      nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1, Node{a.stage, 0.5 * (a.t + b.t)});
      continue;
    }
    if (step > options.max_step) violated = true;
    steps.push_back(step);
    ++i;
  }
  report.steps = steps;
  report.max_step = steps.empty() ? 0.0 : *std::max_element(steps.begin(), steps.end());

  // Stage 1 leaves h, h^2 and q unchanged, so their eta values are shared.
  std::optional<CertificationPoint> stage1;
  for (const Node& n : nodes) {
    CertificationPoint pt;
    if (n.stage == 1 && stage1) {
      pt = *stage1;
      pt.t = n.t;
      pt.g_norm = 1.0 - n.t;
      pt.bound = (pt.g_norm + 1.0) * pt.eta_h + 0.25 * pt.eta_h * pt.eta_h + 0.5 * pt.eta_h2 +
                 pt.eta_q;
    } else {
      pt = certify_path_point(n.stage, n.t, delta, options);
      if (n.stage == 1) stage1 = pt;
    }
    report.points.push_back(pt);
    report.max_bound = std::max(report.max_bound, pt.bound);
  }

  std::ostringstream msg;
  if (violated) {
    report.status = CertificationStatus::MeshViolation;
    msg << "mesh step " << report.max_step << " exceeds " << options.max_step;
  } else {
    const auto worst = std::max_element(
        report.points.begin(), report.points.end(),
        [](const CertificationPoint& x, const CertificationPoint& y) { return x.bound < y.bound; });
    if (worst != report.points.end() && !(worst->bound < options.acceptance)) {
      report.status = CertificationStatus::CertificationFailed;
      msg << "bound " << worst->bound << " >= " << options.acceptance << " at stage "
          << worst->stage << ", t = " << worst->t;
    } else {
      msg << "max bound " << report.max_bound << " < " << options.acceptance << ", max step "
          << report.max_step << " <= " << options.max_step;
    }
  }
  report.message = msg.str();
  return report;
}

std::string CertificationReport::csv() const {
  std::ostringstream os;
  os.precision(10);
  os << "stage,t,g_norm,eta_h,eta_h2,eta_q,bound\n";
  for (const CertificationPoint& p : points) {
    os << p.stage << ',' << p.t << ',' << p.g_norm << ',' << p.eta_h << ',' << p.eta_h2 << ','
       << p.eta_q << ',' << p.bound << '\n';
  }
  return os.str();
}

void CertificationReport::require_pass() const {
  if (status == CertificationStatus::CertificationFailed) {
    throw Error(ErrorCode::CertificationFailed, message);
  }
  if (status == CertificationStatus::MeshViolation) throw Error(ErrorCode::MeshViolation, message);
}

std::string to_string(CertificationStatus status) {
  switch (status) {
    case CertificationStatus::Pass: return "PASS";
    case CertificationStatus::CertificationFailed: return "CertificationFailed";
    case CertificationStatus::MeshViolation: return "MeshViolation";
  }
  return "unknown";
}

}  // namespace acm
