#include <doctest.h>

#include "lefschetz/poly.hpp"

using namespace lefschetz;

namespace {

const FieldSpec kPrime = FieldSpec::prime(65521);
const FieldSpec kRat = FieldSpec::rational();

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Poly var(const FieldSpec& f, Side side, int nvars, int i) {
  Monomial m(std::vector<int>(nvars, 0));
  m.exps[i] = 1;
  return Poly::monomial_term(f, side, m, Scalar::one(f));
}

}  // namespace

TEST_CASE("monomial basis enumeration") {
  auto b22 = monomial_basis(2, 2);
  REQUIRE(b22.size() == 3);
  CHECK(b22[0].exps == std::vector<int>{2, 0});
  CHECK(b22[1].exps == std::vector<int>{1, 1});
  CHECK(b22[2].exps == std::vector<int>{0, 2});
  CHECK(monomial_basis(5, 2).size() == 15);
  CHECK(monomial_basis(5, 5).size() == 126);
  MonomialIndexer idx(5, 5);
  for (int i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.at(i)) == i);
  for (int i = 0; i + 1 < idx.size(); ++i) CHECK(graded_lex_before(idx.at(i), idx.at(i + 1)));
}

TEST_CASE("multiplication") {
  Poly x0 = var(kRat, Side::op, 2, 0), x1 = var(kRat, Side::op, 2, 1);
  Poly prod = multiply(x0, x1);
  CHECK(prod.coeff(mono({1, 1})) == Scalar(kRat, 1));
  CHECK(prod.terms().size() == 1);

  Poly sum = x0 + x1;
  Poly sq = multiply(sum, sum);
  CHECK(sq.coeff(mono({2, 0})) == Scalar(kRat, 1));
  CHECK(sq.coeff(mono({1, 1})) == Scalar(kRat, 2));
  CHECK(sq.coeff(mono({0, 2})) == Scalar(kRat, 1));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    Poly f = random_poly(kPrime, 3, 2, Side::op, rng);
    Poly g = random_poly(kPrime, 3, 3, Side::op, rng);
    CHECK(multiply(f, g) == multiply(g, f));
  }
  CHECK_THROWS_AS(multiply(var(kRat, Side::op, 2, 0), var(kRat, Side::target, 2, 0)),
                  malformed_input);
}

TEST_CASE("differentiation action") {
  // x0 acting on u0^2 -> 2 u0
  Poly u0sq = Poly::monomial_term(kRat, Side::target, mono({2, 0}), Scalar(kRat, 1));
  Poly d = differentiate(var(kRat, Side::op, 2, 0), u0sq);
  CHECK(d.coeff(mono({1, 0})) == Scalar(kRat, 2));
  CHECK(d.terms().size() == 1);

  // x0^2 acting on u0 u1 -> 0 (exponent shortfall)
  Poly x0sq = Poly::monomial_term(kRat, Side::op, mono({2, 0}), Scalar(kRat, 1));
  Poly u0u1 = Poly::monomial_term(kRat, Side::target, mono({1, 1}), Scalar(kRat, 1));
  CHECK(differentiate(x0sq, u0u1).is_zero());

  // x0 x1 acting on (u0 + u1)^2 -> 2, matching 2! * f(1,1).
  Poly usum = Poly::monomial_term(kRat, Side::target, mono({1, 0}), Scalar(kRat, 1)) +
              Poly::monomial_term(kRat, Side::target, mono({0, 1}), Scalar(kRat, 1));
  Poly usq = multiply(usum, usum);
  Poly x0x1 = Poly::monomial_term(kRat, Side::op, mono({1, 1}), Scalar(kRat, 1));
  Poly res = differentiate(x0x1, usq);
  CHECK(res.degree() == 0);
  CHECK(res.coeff(mono({0, 0})) == Scalar(kRat, 2));

  CHECK_THROWS_AS(differentiate(x0sq, Poly::monomial_term(kRat, Side::target, mono({1, 0}),
                                                          Scalar(kRat, 1))),
                  degree_error);
}

TEST_CASE("derivatives commute and the action is multiplicative") {
  Rng rng(17);
  for (int t = 0; t < 8; ++t) {
    Poly g = random_poly(kPrime, 3, 4, Side::target, rng);
    Poly a = random_poly(kPrime, 3, 1, Side::op, rng);
    Poly b = random_poly(kPrime, 3, 2, Side::op, rng);
    CHECK(differentiate(a, differentiate(b, g)) == differentiate(b, differentiate(a, g)));
    CHECK(differentiate(multiply(a, b), g) == differentiate(a, differentiate(b, g)));
  }
}

TEST_CASE("pairing") {
  Poly x0sq = Poly::monomial_term(kRat, Side::op, mono({2, 0}), Scalar(kRat, 1));
  Poly u0sq = Poly::monomial_term(kRat, Side::target, mono({2, 0}), Scalar(kRat, 1));
  Poly x0x1 = Poly::monomial_term(kRat, Side::op, mono({1, 1}), Scalar(kRat, 1));
  CHECK(pairing(x0sq, u0sq) == Scalar(kRat, 2));
  CHECK(pairing(x0x1, u0sq).is_zero());

  // Gram matrix of the monomial bases is diagonal with factorial entries.
  MonomialIndexer idx(3, 3);
  for (int i = 0; i < idx.size(); ++i)
    for (int j = 0; j < idx.size(); ++j) {
      Scalar v = pairing(Poly::monomial_term(kPrime, Side::op, idx.at(i), Scalar::one(kPrime)),
                         Poly::monomial_term(kPrime, Side::target, idx.at(j), Scalar::one(kPrime)));
      if (i == j) {
        CHECK(v == monomial_factorial(kPrime, idx.at(i)));
        CHECK_FALSE(v.is_zero());
      } else {
        CHECK(v.is_zero());
      }
    }
}

TEST_CASE("pairing against evaluation: <f, p^d> = d! f(p)") {
  for (int d = 2; d <= 3; ++d) {
    for (int t = 0; t < 20; ++t) {
      Rng rng = derive_stream(100 + d, "pairing-eval", t);
      const FieldSpec& f = t % 2 ? kPrime : kRat;
      int n = 4;
      Poly op = random_poly(f, n, d, Side::op, rng);
      std::vector<Scalar> pt;
      for (int i = 0; i < n; ++i) pt.push_back(Scalar::random(f, rng));
      Poly linear(f, n, 1, Side::target);
      for (int i = 0; i < n; ++i) {
        Monomial ui(std::vector<int>(n, 0));
        ui.exps[i] = 1;
        linear.add_term(ui, pt[i]);
      }
      Scalar lhs = linear.is_zero() ? Scalar::zero(f) : pairing(op, power(linear, d));
      Scalar dfact = Scalar::one(f);
      for (int i = 2; i <= d; ++i) dfact *= Scalar(f, i);
      CHECK(lhs == dfact * evaluate(op, pt));
    }
  }
}

TEST_CASE("evaluation") {
  Poly x0sq = Poly::monomial_term(kRat, Side::op, mono({2, 0, 0}), Scalar(kRat, 1));
  CHECK(evaluate(x0sq, {Scalar(kRat, 3), Scalar(kRat, 0), Scalar(kRat, 5)}) == Scalar(kRat, 9));
  Rng rng(3);
  Poly f = random_poly(kRat, 3, 2, Side::op, rng);
  CHECK(evaluate(f, std::vector<Scalar>(3, Scalar::zero(kRat))).is_zero());
  Poly x0x1 = Poly::monomial_term(kPrime, Side::op, mono({1, 1, 0, 0, 0}), Scalar(kPrime, 1));
  std::vector<Scalar> pt{Scalar(kPrime, 1), Scalar(kPrime, 1), Scalar(kPrime, 0),
                         Scalar(kPrime, 0), Scalar(kPrime, 0)};
  CHECK(evaluate(x0x1, pt) == Scalar(kPrime, 1));
}

TEST_CASE("powers of linear forms") {
  Poly x0 = var(kRat, Side::op, 2, 0);
  Poly cube = power(x0, 3);
  CHECK(cube.coeff(mono({3, 0})) == Scalar(kRat, 1));
  CHECK(cube.terms().size() == 1);

  Rng rng(23);
  for (int t = 0; t < 6; ++t) {
    Poly linear = random_poly(kPrime, 3, 1, Side::op, rng);
    Poly acc = Poly::monomial_term(kPrime, Side::op, mono({0, 0, 0}), Scalar::one(kPrime));
    for (int j = 1; j <= 5; ++j) {
      acc = multiply(acc, linear);  // independent route: iterated products
      CHECK(power(linear, j) == acc);
    }
  }
}

TEST_CASE("exact division") {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const FieldSpec& f = t % 2 ? kPrime : kRat;
    Poly a = random_nonzero_poly(f, 3, 2, Side::op, rng);
    Poly b = random_nonzero_poly(f, 3, 3, Side::op, rng);
    CHECK(exact_div(multiply(a, b), b) == a);
    CHECK(exact_div(multiply(a, b), a) == b);
  }
  Poly x0 = var(kRat, Side::op, 2, 0), x1 = var(kRat, Side::op, 2, 1);
  CHECK_THROWS_AS(exact_div(multiply(x0, x0) + multiply(x1, x1), x0), malformed_input);
}

TEST_CASE("canonical text form") {
  Poly g(kRat, 5, 5, Side::target);
  g.add_term(mono({1, 1, 1, 1, 1}), Scalar(kRat, 1));
  CHECK(g.text() == "u0*u1*u2*u3*u4");
  CHECK(Poly::parse(kRat, 5, 5, Side::target, g.text()) == g);

  Poly f(kRat, 2, 2, Side::op);
  f.add_term(mono({2, 0}), Scalar(kRat, 1));
  f.add_term(mono({1, 1}), Scalar::parse(kRat, "-2/3"));
  f.add_term(mono({0, 2}), Scalar(kRat, 5));
  CHECK(f.text() == "x0^2 - 2/3*x0*x1 + 5*x1^2");
  CHECK(Poly::parse(kRat, 2, 2, Side::op, f.text()) == f);

  Poly zero(kPrime, 3, 2, Side::op);
  CHECK(zero.text() == "0");
  CHECK(Poly::parse(kPrime, 3, 2, Side::op, "0") == zero);

  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const FieldSpec& fld = t % 2 ? kPrime : kRat;
    Side side = t % 3 ? Side::op : Side::target;
    Poly p = random_poly(fld, 3, 2, side, rng);
    CHECK(Poly::parse(fld, 3, 2, side, p.text()) == p);
  }
}
