#include "lefscalc/linalg.hpp"

#include "lefscalc/error.hpp"

#include <sstream>
#include <utility>

namespace lefscalc {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select(const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols) const {
  RationalMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  RationalMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

namespace {

RationalMatrix elementwise(const RationalMatrix& a, const RationalMatrix& b, int s) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += s > 0 ? b(i, j) : -b(i, j);
  return out;
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) { return elementwise(a, b, 1); }
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return elementwise(a, b, -1); }

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

Rational trace(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

RowEchelon row_echelon(RationalMatrix a) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& a) { return row_echelon(a).pivots.size(); }

Rational det(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  // Clear denominators row by row; det(a) = det(m) / prod(scale).
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, a(r, c).den());
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c).num() * (l / a(r, c).den());
    scale *= l;
  }

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return Rational(sign * m[n - 1][n - 1], scale);
}

RationalMatrix null_space(const RationalMatrix& a) {
  const RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

std::optional<Solution> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;

  Solution s;
  s.particular.assign(a.cols(), Rational());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced(r, a.cols());
  s.null_basis = null_space(a);
  return s;
}

// ---------------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long long>(k));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> v = coeffs_;
  const Rational lead = leading();
  for (auto& c : v) c /= lead;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != Rational(1)) os << mag;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(k) - b.coefficient(k);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

PolynomialDivision divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  RationalPolynomial remainder = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const std::size_t shift = remainder.degree() - b.degree();
    const Rational factor = remainder.leading() / b.leading();
    q[shift] += factor;
    remainder = remainder - RationalPolynomial::monomial(factor, shift) * b;
  }
  return {RationalPolynomial(std::move(q)), remainder};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  if (p.degree() == 0) return RationalPolynomial({Rational(1)});
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

RationalPolynomial char_poly(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > kCharPolyMaxDim)
    throw Error(ErrorKind::BoundExceeded, "characteristic polynomial dimension " + std::to_string(n) +
                                              " exceeds bound " + std::to_string(kCharPolyMaxDim));
  // c_n = 1; M_k = a M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(a M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -trace(a * m) / Rational(static_cast<long long>(k));
  }
  return RationalPolynomial(std::move(c));
}

namespace {

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RationalPolynomial r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(RationalPolynomial() - r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::size_t count_real_roots_geq(const RationalPolynomial& p, const Rational& c) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  RationalPolynomial q = square_free_part(p);
  std::size_t at_c = 0;
  if (q(c).is_zero()) {
    at_c = 1;
    q = divide(q, RationalPolynomial({-c, Rational(1)})).quotient;
  }
  if (q.degree() <= 0) return at_c;

  const auto seq = sturm_sequence(q);
  std::vector<int> at_point, at_infinity;
  for (const auto& s : seq) {
    at_point.push_back(s(c).sign());
    at_infinity.push_back(s.leading().sign());
  }
  return at_c + sign_variations(at_point) - sign_variations(at_infinity);
}

}  // namespace lefscalc
