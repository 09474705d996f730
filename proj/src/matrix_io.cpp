#include "acm/matrix_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace acm {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

// strtod wrapper that rejects empty matches.
bool read_double(const char*& p, double& out) {
  char* end = nullptr;
  errno = 0;
  out = std::strtod(p, &end);
  if (end == p || errno == ERANGE) return false;
  p = end;
  return true;
}

}  // namespace

Complex parse_complex(const std::string& token) {
  if (token.empty()) parse_fail("empty entry");
  const char* p = token.c_str();
  const char* end = p + token.size();

  // Pure imaginary shorthand: "i", "-i", "2.5i".
  if (token.back() == 'i' || token.back() == 'I') {
    bool has_real = false;
    for (const char* q = p + 1; q < end - 1; ++q) {
      if ((*q == '+' || *q == '-') && *(q - 1) != 'e' && *(q - 1) != 'E') has_real = true;
    }
    if (!has_real) {
      std::string body(p, end - 1);
      if (body.empty() || body == "+") return {0.0, 1.0};
      if (body == "-") return {0.0, -1.0};
      const char* b = body.c_str();
      double im = 0.0;
      if (!read_double(b, im) || *b != '\0') parse_fail("bad imaginary entry '" + token + "'");
      if (!std::isfinite(im)) parse_fail("non-finite entry '" + token + "'");
      return {0.0, im};
    }
  }

  double re = 0.0;
  if (!read_double(p, re)) parse_fail("bad real part in '" + token + "'");
  if (p == end) {
    if (!std::isfinite(re)) parse_fail("non-finite entry '" + token + "'");
    return {re, 0.0};
  }
  if (*p != '+' && *p != '-') parse_fail("expected sign before imaginary part in '" + token + "'");
  double im = 0.0;
  if (end - p == 2 && (p[1] == 'i' || p[1] == 'I')) {
    im = (*p == '-') ? -1.0 : 1.0;
    p += 1;
  } else if (!read_double(p, im)) {
    parse_fail("bad imaginary part in '" + token + "'");
  }
  if (p + 1 != end || (*p != 'i' && *p != 'I')) parse_fail("trailing characters in '" + token + "'");
  if (!std::isfinite(re) || !std::isfinite(im)) parse_fail("non-finite entry '" + token + "'");
  return {re, im};
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (std::signbit(z.imag())) {
    os << '-' << -z.imag();
  } else {
    os << '+' << z.imag();
  }
  os << 'i';
  return os.str();
}

Matrix read_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) parse_fail("missing dimension line");
  char* end = nullptr;
  long d = std::strtol(token.c_str(), &end, 10);
  if (*end != '\0' || d <= 0) parse_fail("bad dimension '" + token + "'");
  Matrix X(d, d);
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c) {
      if (!(in >> token)) parse_fail("matrix ended early at row " + std::to_string(r));
      X(r, c) = parse_complex(token);
    }
  }
  return X;
}

void write_matrix(std::ostream& out, const Matrix& X) {
  out << X.rows() << '\n';
  for (Eigen::Index r = 0; r < X.rows(); ++r) {
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
      if (c) out << ' ';
      out << format_complex(X(r, c));
    }
    out << '\n';
  }
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const Matrix& X) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot write '" + path + "'");
  write_matrix(out, X);
}

PairFile read_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::string tag;
  PairFile pf;
  if (!(in >> tag >> pf.N) || tag != "selfdual" || pf.N <= 0) {
    parse_fail("pair file must start with 'selfdual N'");
  }
  pf.U = read_matrix(in);
  pf.V = read_matrix(in);
  if (pf.U.rows() != 2 * pf.N || pf.V.rows() != 2 * pf.N) {
    parse_fail("pair file matrices must have dimension 2N");
  }
  return pf;
}

void write_pair_file(const std::string& path, const PairFile& pair) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot write '" + path + "'");
  out << "selfdual " << pair.N << '\n';
  write_matrix(out, pair.U);
  write_matrix(out, pair.V);
}

}  // namespace acm
