#pragma once

#include <map>
#include <string>
#include <vector>

#include "lefschetz/field.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

// Homogeneous polynomials live on one of two sides of the apolarity duality:
// `op` polynomials (in x) act as constant-coefficient differential operators on
// `target` polynomials (in u).
enum class Side { op, target };

// Homogeneous polynomial of a fixed degree in a fixed number of variables.
// The zero polynomial keeps its degree tag, so degree preconditions stay
// decidable. Terms are stored sparsely in graded-lex order with no explicit
// zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GradedLexBefore>;

  Poly(const FieldSpec& f, int nvars, int degree, Side side);
  static Poly monomial_term(const FieldSpec& f, Side side, const Monomial& m, const Scalar& c);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Side side() const { return side_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;

  // Adds c*m into the polynomial, dropping the term if it cancels to zero.
  void add_term(const Monomial& m, const Scalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Dense coefficient vector indexed by the graded-lex basis of this degree.
  std::vector<Scalar> dense(const MonomialIndexer& basis) const;
  static Poly from_dense(const FieldSpec& f, Side side, const MonomialIndexer& basis,
                         const std::vector<Scalar>& coords);

  // Canonical text: terms in graded-lex order, `c*v0^a0*...` with unit
  // coefficients and zero exponents elided; variables are x_i on the operator
  // side and u_i on the target side.
  std::string text() const;
  static Poly parse(const FieldSpec& f, int nvars, int degree, Side side,
                    const std::string& text);

 private:
  FieldSpec field_;
  int nvars_;
  int degree_;
  Side side_;
  TermMap terms_;
};

// Ring multiplication of same-side polynomials.
Poly multiply(const Poly& f, const Poly& g);

// Macaulay–Matlis action: x^a sends u^b to (prod b_i!/(b_i-a_i)!) u^{b-a}.
// Requires deg tgt >= deg op and, over F_p, p > deg tgt.
Poly differentiate(const Poly& op, const Poly& tgt);

// Apolarity pairing of equal-degree op/target polynomials; the degree-0 value
// of the differentiation action. Satisfies <f, p^d> = d! f(p).
Scalar pairing(const Poly& op, const Poly& tgt);

// Substitution of a point into an operator-side polynomial.
Scalar evaluate(const Poly& f, const std::vector<Scalar>& point);

// j-th power of a linear form, by multinomial expansion.
Poly power(const Poly& linear, int j);

// Exact quotient f / g of homogeneous polynomials (throws if not divisible).
Poly exact_div(const Poly& f, const Poly& g);

// Uniform random homogeneous polynomial with dense coefficients.
Poly random_poly(const FieldSpec& f, int nvars, int degree, Side side, Rng& rng);
Poly random_nonzero_poly(const FieldSpec& f, int nvars, int degree, Side side, Rng& rng);

// Falling-factorial product prod b_i!/(b_i-a_i)! as a field scalar.
Scalar derivative_coefficient(const FieldSpec& f, const Monomial& op, const Monomial& tgt);

// a! = prod a_i! as a field scalar.
Scalar monomial_factorial(const FieldSpec& f, const Monomial& m);

}  // namespace lefschetz
