#include "lefscalc/error.hpp"
#include "lefscalc/linalg.hpp"
#include "lefscalc/random_models.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lefscalc;

namespace {

RationalMatrix M(const std::vector<std::vector<Rational>>& rows) { return RationalMatrix::from_rows(rows); }

RationalPolynomial P(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4") == Rational(3) / Rational(2));
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational::parse("3/-6").to_string() == "-1/2");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("gaussian arithmetic") {
  const GaussianRational i(0, 1);
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1, 1) / GaussianRational(1, -1)) == i);
  CHECK(GaussianRational(Rational(1) / Rational(2), -2).to_string() == "1/2-2i");
  CHECK(GaussianRational(0, 3).to_string() == "3i");
}

TEST_CASE("det, rank, solve") {
  CHECK(det(RationalMatrix::identity(3)) == 1);
  CHECK(rank(RationalMatrix(2, 2)) == 0);
  CHECK(det(M({{1, 1}, {-1, 1}})) == 2);
  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), Error);

  const auto s = solve(M({{1, 2}, {2, 4}}), {3, 6});
  REQUIRE(s);
  CHECK(s->null_basis.cols() == 1);
  CHECK(!solve(M({{1, 2}, {2, 4}}), {3, 7}));
}

TEST_CASE("det against cofactor expansion") {
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(7, 1, i);
    const int n = uniform(rng, 1, 5);
    RationalMatrix a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = random_rational(rng);
    CAPTURE(i);
    CHECK(det(a) == oracle::cofactor_det(a));
    CHECK((rank(a) == static_cast<std::size_t>(n)) == !oracle::cofactor_det(a).is_zero());
  }
}

TEST_CASE("null space and solutions satisfy their equations") {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(7, 2, i);
    const int rows = uniform(rng, 1, 4), cols = uniform(rng, 1, 5);
    RationalMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a(r, c) = uniform(rng, 0, 2) == 0 ? Rational() : random_rational(rng);
    const RationalMatrix k = null_space(a);
    CHECK(k.cols() + rank(a) == static_cast<std::size_t>(cols));
    CHECK(a * k == RationalMatrix(rows, k.cols()));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = random_rational(rng);
    const auto s = solve(a, a * x);
    REQUIRE(s);
    CHECK(a * s->particular == a * x);
  }
}

TEST_CASE("characteristic polynomial") {
  // Companion matrix of t^3 - t - 1.
  const RationalMatrix c = M({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
  CHECK(char_poly(c) == P({-1, -1, 0, 1}));
  CHECK(char_poly(c).coefficients() == oracle::char_poly(c));
  CHECK(char_poly(RationalMatrix(0, 0)) == P({1}));

  for (int i = 0; i < 150; ++i) {
    Rng rng = make_rng(7, 3, i);
    const RationalMatrix a = random_matrix(rng, uniform(rng, 1, 5));
    CAPTURE(i);
    CHECK(char_poly(a).coefficients() == oracle::char_poly(a));
  }
  CHECK_THROWS_AS(char_poly(RationalMatrix::identity(kCharPolyMaxDim + 1)), Error);
}

TEST_CASE("real roots at or above a bound") {
  CHECK(count_real_roots_geq(P({-2, 1}), 1) == 1);
  CHECK(count_real_roots_geq(P({1, 0, 1}), 1) == 0);
  // (t-1)^2 (t+3)
  const RationalPolynomial p = P({-1, 1}) * P({-1, 1}) * P({3, 1});
  CHECK(count_real_roots_geq(p, 1) == 1);
  CHECK(oracle::count_roots_geq(p.coefficients(), 1) == 1);
  CHECK(count_real_roots_geq(p, -3) == 2);
  CHECK_THROWS_AS(count_real_roots_geq(RationalPolynomial(), 0), Error);

  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(7, 4, i);
    const RationalPolynomial q = char_poly(random_matrix(rng, uniform(rng, 1, 5)));
    const Rational c = random_rational(rng);
    CAPTURE(q.to_string());
    CAPTURE(c.to_string());
    CHECK(count_real_roots_geq(q, c) == static_cast<std::size_t>(oracle::count_roots_geq(q.coefficients(), c)));
  }
}

TEST_CASE("polynomial division and gcd") {
  const RationalPolynomial a = P({-1, 0, 1});  // t^2 - 1
  const RationalPolynomial b = P({-1, 1});     // t - 1
  const auto d = divide(a, b);
  CHECK(d.quotient == P({1, 1}));
  CHECK(d.remainder.is_zero());
  CHECK(gcd(a, P({1, 2, 1})) == P({1, 1}));
  CHECK(square_free_part(P({-1, 1}) * P({-1, 1}) * P({3, 1})) == P({-1, 1}) * P({3, 1}));
}
