#include "lefscalc/rational.hpp"

#include "lefscalc/error.hpp"

#include <cctype>
#include <ostream>

namespace lefscalc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonSimplicialMap: return "NonSimplicialMap";
    case ErrorKind::FixedPointNotSimplicial: return "FixedPointNotSimplicial";
    case ErrorKind::NotLocalizable: return "NotLocalizable";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NoApplicableRegime: return "NoApplicableRegime";
    case ErrorKind::MissingNormalData: return "MissingNormalData";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::CellSpaceUnsupported: return "CellSpaceUnsupported";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::InconsistentPattern: return "InconsistentPattern";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FixedPointNotSimplicial: return 3;
    case ErrorKind::NotLocalizable:
    case ErrorKind::NotHyperbolic:
    case ErrorKind::NoApplicableRegime: return 4;
    case ErrorKind::Degenerate: return 5;
    case ErrorKind::NonSimplicialMap: return 6;
    default: return 2;
  }
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    value = value * 10 + (s[i] - '0');
  }
  out = negative ? Integer(-value) : value;
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
  value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  Integer p, q = 1;
  bool ok = parse_integer(text.substr(0, slash), p);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), q) && q != 0;
  }
  if (!ok) throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (norm.is_zero()) throw std::domain_error("gaussian division by zero");
  *this *= o.conj();
  re /= norm;
  im /= norm;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag = (abs(im) == Rational(1) ? std::string() : abs(im).to_string()) + "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.to_string() + (im.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace lefscalc
