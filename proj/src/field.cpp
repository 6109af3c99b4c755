#include "lefschetz/field.hpp"

namespace lefschetz {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > 0x7FFFFFFFULL) throw malformed_input("prime modulus too large (need p < 2^31)");
  if (!is_prime_u64(p)) throw malformed_input("modulus " + std::to_string(p) + " is not prime");
  if (p == 2) throw malformed_input("prime field must have odd characteristic");
  return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::describe() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw malformed_input("division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar::Scalar(const FieldSpec& f, std::int64_t n) : field_(f) {
  if (f.is_prime()) {
    std::int64_t p = static_cast<std::int64_t>(f.p());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  } else {
    v_ = mpq_class(static_cast<long>(n));
  }
}

Scalar Scalar::from_rational(mpq_class q) {
  Scalar s;
  s.field_ = FieldSpec::rational();
  q.canonicalize();
  s.v_ = std::move(q);
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
  if (!f.is_prime()) throw malformed_input("from_residue requires a prime field");
  Scalar s;
  s.field_ = f;
  s.v_ = r % f.p();
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw malformed_input("mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.v_ = mod_add(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p());
  else
    r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.v_ = mod_sub(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p());
  else
    r.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime())
    r.v_ = mod_mul(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p());
  else
    r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) {
    std::uint64_t a = std::get<std::uint64_t>(v_);
    r.v_ = a == 0 ? a : field_.p() - a;
  } else {
    r.v_ = mpq_class(-std::get<mpq_class>(v_));
  }
  return r;
}

Scalar Scalar::inv() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_prime()) {
    r.v_ = mod_inv(std::get<std::uint64_t>(v_), field_.p());
  } else {
    const mpq_class& q = std::get<mpq_class>(v_);
    if (q == 0) throw malformed_input("division by zero");
    r.v_ = mpq_class(1 / q);
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.is_prime()) return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw malformed_input("residue() on a rational scalar");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw malformed_input("rational() on a prime-field scalar");
  return std::get<mpq_class>(v_);
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw malformed_input("empty scalar literal");
  if (f.is_prime()) {
    if (text.find('/') != std::string::npos)
      throw malformed_input("fractional literal over a prime field: " + text);
    mpz_class z;
    if (z.set_str(text, 10) != 0) throw malformed_input("bad integer literal: " + text);
    mpz_class p(static_cast<unsigned long>(f.p()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return from_residue(f, r.get_ui());
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw malformed_input("bad rational literal: " + text);
  if (q.get_den() == 0) throw malformed_input("zero denominator: " + text);
  q.canonicalize();
  return from_rational(q);
}

Scalar Scalar::random(const FieldSpec& f, Rng& rng) {
  if (f.is_prime()) return from_residue(f, rng.below(f.p()));
  // Small integers keep rational runs exact and readable.
  return Scalar(f, rng.between(-9, 9));
}

Scalar Scalar::random_nonzero(const FieldSpec& f, Rng& rng) {
  for (;;) {
    Scalar s = random(f, rng);
    if (!s.is_zero()) return s;
  }
}

}  // namespace lefschetz
