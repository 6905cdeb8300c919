#pragma once

#include "lefscalc/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lefscalc {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeMismatch when the rows are ragged.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  RationalMatrix transpose() const;
  /// Submatrix on the given row and column index lists, in that order.
  RationalMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);

Rational trace(const RationalMatrix& a);

/// Reduced row echelon form and the pivot column of every nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination on the matrix scaled to
/// integer rows. Throws ShapeMismatch for non-square input.
Rational det(const RationalMatrix& a);

/// Columns form a basis of ker(a), read off the reduced echelon form (one
/// basis vector per free column, in column order).
RationalMatrix null_space(const RationalMatrix& a);

struct Solution {
  std::vector<Rational> particular;
  RationalMatrix null_basis;
};
/// Solves a x = b. Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Polynomial with rational coefficients, lowest degree first; the zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  /// Human-readable form in the variable t, highest degree first.
  std::string to_string() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};
PolynomialDivision divide(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);
/// p / gcd(p, p'), made monic.
RationalPolynomial square_free_part(const RationalPolynomial& p);

inline constexpr std::size_t kCharPolyMaxDim = 8;

/// det(tI - a) by Faddeev-LeVerrier. Throws ShapeMismatch for non-square
/// input and BoundExceeded above kCharPolyMaxDim.
RationalPolynomial char_poly(const RationalMatrix& a);

/// Number of distinct real roots of p in [c, inf), from the Sturm sequence
/// of the square-free part. Throws ZeroPolynomial.
std::size_t count_real_roots_geq(const RationalPolynomial& p, const Rational& c);

}  // namespace lefscalc
