#include <catch2/catch_amalgamated.hpp>

#include "liefol/catalog.hpp"
#include "liefol/diff_form.hpp"

using namespace liefol;

namespace {

MultiPoly var(std::size_t nx, std::size_t i) { return MultiPoly::variable(nx, false, i); }

/// x0 dx2 - x2 dx0 on P^2, with its x1 content, from the field x1 d1.
OneFormResult p2_example() {
  PolyVectorField f = PolyVectorField::zero(2);
  f.comps[1] = var(3, 1);
  return defining_one_form({f});
}

}  // namespace

TEST_CASE("the defining form on P^2, contracted by hand") {
  const auto r = p2_example();
  // raw form x0 x1 dx2 - x1 x2 dx0, content x1
  DiffForm raw_expect(2, 1);
  raw_expect.add_term({2}, var(3, 0) * var(3, 1));
  raw_expect.add_term({0}, -(var(3, 1) * var(3, 2)));
  CHECK(r.raw == raw_expect);
  CHECK(r.content == var(3, 1));
  DiffForm expect(2, 1);
  expect.add_term({2}, var(3, 0));
  expect.add_term({0}, -var(3, 2));
  CHECK(r.omega == expect);
  CHECK(r.omega.interior(euler_field(2)).is_zero());
}

TEST_CASE("exterior derivative") {
  const auto w = p2_example().omega;
  const DiffForm dw = w.exterior_derivative();
  DiffForm expect(2, 2);
  expect.add_term({0, 2}, MultiPoly::constant(3, false, Rational(2)));
  CHECK(dw == expect);

  DiffForm constant(2, 1);
  constant.add_term({1}, MultiPoly::constant(3, false, Rational(5)));
  CHECK(constant.exterior_derivative().is_zero());

  CHECK(dw.exterior_derivative().is_zero());  // d d = 0
}

TEST_CASE("Frobenius integrability") {
  SECTION("the P^2 example is integrable") {
    CHECK(frobenius_check(p2_example().omega).integrable);
  }
  SECTION("the exceptional P^3 form is integrable") {
    const auto form = defining_one_form(exceptional_fields());
    const auto fr = frobenius_check(form.omega);
    CHECK(fr.integrable);
  }
  SECTION("the Sym^4 family on P^4 is integrable with degree-4 coefficients") {
    const auto form = defining_one_form(sym4_fields());
    CHECK(frobenius_check(form.omega).integrable);
    REQUIRE(form.omega.coefficient_degree().has_value());
    CHECK(*form.omega.coefficient_degree() == 4);
    CHECK(form.omega.interior(euler_field(4)).is_zero());
  }
  SECTION("a contact-type form is not, with the hand-computed residual") {
    DiffForm w(3, 1);
    w.add_term({0}, var(4, 2));
    w.add_term({1}, var(4, 0));
    w.add_term({2}, var(4, 1));
    const auto fr = frobenius_check(w);
    REQUIRE_FALSE(fr.integrable);
    DiffForm expect(3, 3);
    expect.add_term({0, 1, 2}, var(4, 0) + var(4, 1) + var(4, 2));
    CHECK(fr.residual == expect);
  }
  SECTION("only 1-forms are supported") {
    DiffForm two(3, 2);
    two.add_term({0, 1}, var(4, 2));
    CHECK_THROWS_AS(frobenius_check(two), InputError);
  }
}

TEST_CASE("defining form guards") {
  SECTION("dependent fields give the zero form") {
    PolyVectorField e = euler_field(2);
    CHECK_THROWS_AS(defining_one_form({e}), MathError);
  }
  SECTION("field count must be n - 1") {
    PolyVectorField f = PolyVectorField::zero(3);
    f.comps[1] = var(4, 0);
    CHECK_THROWS_AS(defining_one_form({f}), InputError);
  }
}

TEST_CASE("singular ideal and Kupka classification") {
  const auto w = p2_example().omega;
  SECTION("singular ideal generators are the coefficients") {
    const auto gens = singular_ideal(w);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == -var(3, 2));
    CHECK(gens[1] == var(3, 0));
  }
  SECTION("point classes") {
    const ProjPoint kupka{QVector{Rational(0), Rational(1), Rational(0)}};
    const ProjPoint regular{QVector{Rational(1), Rational(0), Rational(0)}};
    const auto labels = kupka_classify(w, {kupka, regular});
    CHECK(labels[0] == PointClass::Kupka);
    CHECK(labels[1] == PointClass::Regular);
  }
  SECTION("a retained divisorial factor produces non-Kupka singular points") {
    // scale by x0: now Z(omega) has the divisor {x0 = 0}
    DiffForm scaled(2, 1);
    scaled.add_term({2}, var(3, 0) * var(3, 0));
    scaled.add_term({0}, -(var(3, 0) * var(3, 2)));
    const ProjPoint p{QVector{Rational(0), Rational(1), Rational(0)}};
    CHECK(kupka_classify(scaled, {p})[0] == PointClass::NonKupkaSingular);
    // the negative control: content extraction detects exactly that factor
    const auto content = content_and_primitive(singular_ideal(scaled));
    CHECK(content.content == var(3, 0));
  }
}

TEST_CASE("reduced forms have coprime coefficients") {
  for (const auto& omega : {p2_example().omega, defining_one_form(exceptional_fields()).omega}) {
    const auto content = content_and_primitive(singular_ideal(omega));
    CHECK(content.content == MultiPoly::constant(omega.ambient() + 1, false, Rational(1)));
  }
}

TEST_CASE("degree bookkeeping") {
  const auto form = defining_one_form(exceptional_fields());
  REQUIRE(form.omega.coefficient_degree().has_value());
  CHECK(*form.omega.coefficient_degree() == 3);
  const auto dw = form.omega.exterior_derivative();
  CHECK(*dw.coefficient_degree() == 2);  // one less than omega
}

TEST_CASE("wedge is graded-commutative") {
  DiffForm a(3, 1), b(3, 2);
  a.add_term({0}, var(4, 1));
  a.add_term({2}, var(4, 3));
  b.add_term({1, 3}, var(4, 0));
  b.add_term({0, 1}, var(4, 2));
  const DiffForm ab = a.wedge(b);
  const DiffForm ba = b.wedge(a);
  CHECK(ab == ba.scaled(Rational(-1)).scaled(Rational(-1)));  // (-1)^(1*2) = +1
  CHECK(ab == ba);
  const DiffForm aa = a.wedge(a);
  CHECK(aa.is_zero());  // odd-degree square
}
