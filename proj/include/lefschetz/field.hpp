#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

// Coefficient field: arbitrary-precision rationals, or F_p for an odd prime p.
// Everything downstream is exact; there is no floating point anywhere.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::uint64_t p() const { return p_; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;  // 0 for the rational field
};

bool is_prime_u64(std::uint64_t n);

// Exact field element. Prime-field values are canonical residues in [0, p);
// rational values are kept in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()), v_(mpq_class(0)) {}
  Scalar(const FieldSpec& f, std::int64_t n);
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  static Scalar from_rational(mpq_class q);
  static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Residue in [0, p); prime field only.
  std::uint64_t residue() const;
  // Rational value; rational field only.
  const mpq_class& rational() const;

  // Decimal integer or "a/b"; round-trips bit-exactly through parse().
  std::string to_string() const;
  static Scalar parse(const FieldSpec& f, const std::string& text);

  static Scalar random(const FieldSpec& f, Rng& rng);
  static Scalar random_nonzero(const FieldSpec& f, Rng& rng);

 private:
  void check_same_field(const Scalar& o) const;
  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> v_;
};

// Modular helpers on canonical residues.
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace lefschetz
