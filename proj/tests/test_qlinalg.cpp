#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liefol/matrix.hpp"
#include "liefol/ratfunc.hpp"
#include "test_support.hpp"

using namespace liefol;

TEST_CASE("rank of small matrices") {
  CHECK(rank(QMatrix::identity(2)) == 2);
  CHECK(rank(QMatrix(3, 4)) == 0);
  QMatrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel bases are canonical") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());

  const auto zero_kernel = kernel_basis(QMatrix(2, 3));
  REQUIRE(zero_kernel.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(zero_kernel[i][j] == (i == j ? 1 : 0));

  QMatrix row{{Rational(1), Rational(1)}};
  const auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -1);
  CHECK(k[0][1] == 1);
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    const QMatrix m = testsupport::rand_matrix(rng, rows, cols);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) CHECK(is_zero_vec(m.mul_vec(v)));
  }
}

TEST_CASE("rationals stay in canonical reduced form") {
  const Rational q = Rational(6) / Rational(-4);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  const Rational sum = q + Rational(1) / Rational(2);
  CHECK(numerator(sum) == -1);
  CHECK(denominator(sum) == 1);
  CHECK(parse_rational("10/15") == Rational(2) / Rational(3));
}

TEST_CASE("row span reduction expresses vectors in the generators") {
  std::mt19937_64 rng(11);
  const QMatrix gens = testsupport::rand_matrix(rng, 4, 6);
  const RowSpan<Rational> span(gens);
  QVector combo(6, Rational(0));
  QVector coeffs = {Rational(2), Rational(-1), Rational(0), Rational(5)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) combo[j] += coeffs[i] * gens(i, j);
  const auto red = span.reduce(combo);
  REQUIRE(red.in_span);
  QVector back(6, Rational(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) back[j] += red.coords[i] * gens(i, j);
  CHECK(back == combo);
}

TEST_CASE("rank over Q(t)") {
  const RatFunc t = RatFunc::t();
  RatFuncMatrix a(2, 2);
  a(0, 0) = t;
  a(1, 1) = RatFunc(1);
  CHECK(rank_ratfunc(a).rank == 2);

  RatFuncMatrix b(2, 2);
  b(0, 0) = t;
  b(0, 1) = t * t;
  b(1, 0) = RatFunc(1);
  b(1, 1) = t;
  CHECK(rank_ratfunc(b).rank == 1);

  RatFuncMatrix c(1, 1);
  c(0, 0) = t - RatFunc(1);
  CHECK(rank_ratfunc(c).rank == 1);
}

TEST_CASE("Q(t) rank agrees with specialization away from pivot roots") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    RatFuncMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> cs(1 + rng() % 3);
        for (auto& x : cs) x = testsupport::rand_rational(rng, -3, 3);
        m(i, j) = RatFunc(QPoly(std::move(cs)));
      }
    const auto r = rank_ratfunc(m);
    for (long t0 = 1; t0 <= 40; ++t0) {
      bool admissible = true;
      for (const auto& piv : r.pivots) {
        if (piv.num().eval(Rational(t0)) == 0 || piv.den().eval(Rational(t0)) == 0)
          admissible = false;
      }
      if (!admissible) continue;
      QMatrix spec(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) spec(i, j) = *m(i, j).eval(Rational(t0));
      CHECK(rank(spec) == r.rank);
      break;
    }
  }
}

TEST_CASE("rational function arithmetic normalizes") {
  const RatFunc t = RatFunc::t();
  const RatFunc f = (t * t - RatFunc(1)) / (t - RatFunc(1));
  CHECK(f == t + RatFunc(1));  // gcd cancelled
  CHECK((f - f).is_zero());
  const RatFunc g = RatFunc(QPoly(std::vector<Rational>{Rational(0), Rational(2)}),
                            QPoly(std::vector<Rational>{Rational(4)}));
  CHECK(g.den().leading() == 1);  // monic denominator
  CHECK(g == t / RatFunc(2));
  CHECK_THROWS_AS(t / RatFunc(0), MathError);
}
