#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"

namespace lefschetz {

std::int64_t binomial(int n, int k);

// Exponent-vector monomial in a fixed number of variables.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const;
  bool divides(const Monomial& m) const;  // componentwise <=
  Monomial operator*(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const;  // requires m.divides(*this)

  bool operator==(const Monomial& m) const { return exps == m.exps; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }
};

// Enumeration order for monomials: lower degree first, then descending
// lexicographic on exponent vectors (x0^k comes first within a degree).
// This order indexes every matrix column in the library.
bool graded_lex_before(const Monomial& a, const Monomial& b);

struct GradedLexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_before(a, b);
  }
};

// All monomials of the given degree, in graded-lex order.
// Size is C(nvars - 1 + degree, degree).
std::vector<Monomial> monomial_basis(int nvars, int degree);

// Bidirectional index for the degree-k monomial basis.
class MonomialIndexer {
 public:
  MonomialIndexer(int nvars, int degree);

  int size() const { return static_cast<int>(list_.size()); }
  const Monomial& at(int i) const { return list_[i]; }
  const std::vector<Monomial>& list() const { return list_; }
  int index_of(const Monomial& m) const;

 private:
  std::vector<Monomial> list_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace lefschetz
