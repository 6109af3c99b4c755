#include "lefschetz/poly.hpp"

#include <sstream>

namespace lefschetz {

Poly::Poly(const FieldSpec& f, int nvars, int degree, Side side)
    : field_(f), nvars_(nvars), degree_(degree), side_(side) {
  if (nvars < 1 || degree < 0) throw malformed_input("bad polynomial shape");
}

Poly Poly::monomial_term(const FieldSpec& f, Side side, const Monomial& m, const Scalar& c) {
  Poly p(f, m.nvars(), m.degree(), side);
  p.add_term(m, c);
  return p;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) throw malformed_input("term variable count mismatch");
  if (m.degree() != degree_) throw degree_error("term degree mismatch");
  if (c.field() != field_) throw malformed_input("mixed-field coefficient");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_ || side_ != o.side_ || field_ != o.field_)
    throw malformed_input("incompatible polynomial addition");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Poly Poly::scaled(const Scalar& c) const {
  Poly r(field_, nvars_, degree_, side_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && degree_ == o.degree_ &&
         side_ == o.side_ && terms_ == o.terms_;
}

std::vector<Scalar> Poly::dense(const MonomialIndexer& basis) const {
  std::vector<Scalar> v(basis.size(), Scalar::zero(field_));
  for (const auto& [m, c] : terms_) v[basis.index_of(m)] = c;
  return v;
}

Poly Poly::from_dense(const FieldSpec& f, Side side, const MonomialIndexer& basis,
                      const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != basis.size())
    throw malformed_input("dense coordinate length mismatch");
  int nvars = basis.size() > 0 ? basis.at(0).nvars() : 1;
  int degree = basis.size() > 0 ? basis.at(0).degree() : 0;
  Poly p(f, nvars, degree, side);
  for (int i = 0; i < basis.size(); ++i) p.add_term(basis.at(i), coords[i]);
  return p;
}

Poly multiply(const Poly& f, const Poly& g) {
  if (f.side() != g.side()) throw malformed_input("cannot multiply across sides");
  if (f.nvars() != g.nvars()) throw malformed_input("variable count mismatch");
  if (f.field() != g.field()) throw malformed_input("mixed-field product");
  Poly r(f.field(), f.nvars(), f.degree() + g.degree(), f.side());
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Scalar derivative_coefficient(const FieldSpec& f, const Monomial& op, const Monomial& tgt) {
  Scalar c = Scalar::one(f);
  for (int i = 0; i < op.nvars(); ++i) {
    for (int t = tgt.exps[i]; t > tgt.exps[i] - op.exps[i]; --t)
      c *= Scalar(f, t);
  }
  return c;
}

Scalar monomial_factorial(const FieldSpec& f, const Monomial& m) {
  Scalar c = Scalar::one(f);
  for (int e : m.exps)
    for (int t = 2; t <= e; ++t) c *= Scalar(f, t);
  return c;
}

Poly differentiate(const Poly& op, const Poly& tgt) {
  if (op.side() != Side::op || tgt.side() != Side::target)
    throw malformed_input("differentiate wants an operator acting on a target");
  if (op.nvars() != tgt.nvars()) throw malformed_input("variable count mismatch");
  if (op.field() != tgt.field()) throw malformed_input("mixed-field action");
  if (op.degree() > tgt.degree()) throw degree_error("operator degree exceeds target degree");
  const FieldSpec& f = op.field();
  if (f.is_prime() && f.p() <= static_cast<std::uint64_t>(tgt.degree()))
    throw unsupported_operation("characteristic too small for the differentiation action");
  Poly r(f, op.nvars(), tgt.degree() - op.degree(), Side::target);
  for (const auto& [ma, ca] : op.terms())
    for (const auto& [mb, cb] : tgt.terms()) {
      if (!ma.divides(mb)) continue;
      r.add_term(mb.quotient(ma), ca * cb * derivative_coefficient(f, ma, mb));
    }
  return r;
}

Scalar pairing(const Poly& op, const Poly& tgt) {
  if (op.degree() != tgt.degree()) throw degree_error("pairing needs equal degrees");
  Poly c = differentiate(op, tgt);
  Monomial unit(std::vector<int>(op.nvars(), 0));
  return c.coeff(unit);
}

Scalar evaluate(const Poly& f, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw malformed_input("point length mismatch");
  Scalar acc = Scalar::zero(f.field());
  for (const auto& [m, c] : f.terms()) {
    Scalar t = c;
    for (int i = 0; i < m.nvars(); ++i)
      for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly power(const Poly& linear, int j) {
  if (linear.degree() != 1) throw degree_error("power() expects a linear form");
  if (j < 0) throw degree_error("negative power");
  Poly r = Poly::monomial_term(linear.field(), linear.side(),
                               Monomial(std::vector<int>(linear.nvars(), 0)),
                               Scalar::one(linear.field()));
  for (int i = 0; i < j; ++i) r = multiply(r, linear);
  return r;
}

Poly exact_div(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw malformed_input("division by the zero polynomial");
  if (f.nvars() != g.nvars() || f.side() != g.side() || f.field() != g.field())
    throw malformed_input("incompatible exact division");
  if (f.is_zero()) return Poly(f.field(), f.nvars(), std::max(0, f.degree() - g.degree()), f.side());
  if (f.degree() < g.degree()) throw malformed_input("inexact polynomial division");
  Poly rem = f;
  Poly q(f.field(), f.nvars(), f.degree() - g.degree(), f.side());
  const auto& glead = *g.terms().begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    if (!glead.first.divides(rlead.first)) throw malformed_input("inexact polynomial division");
    Monomial qm = rlead.first.quotient(glead.first);
    Scalar qc = rlead.second / glead.second;
    q.add_term(qm, qc);
    rem = rem - multiply(Poly::monomial_term(f.field(), f.side(), qm, qc), g);
  }
  return q;
}

Poly random_poly(const FieldSpec& f, int nvars, int degree, Side side, Rng& rng) {
  Poly p(f, nvars, degree, side);
  for (const Monomial& m : monomial_basis(nvars, degree)) p.add_term(m, Scalar::random(f, rng));
  return p;
}

Poly random_nonzero_poly(const FieldSpec& f, int nvars, int degree, Side side, Rng& rng) {
  for (;;) {
    Poly p = random_poly(f, nvars, degree, side, rng);
    if (!p.is_zero()) return p;
  }
}

namespace {

std::string var_name(Side side, int i) {
  return (side == Side::op ? "x" : "u") + std::to_string(i);
}

std::string term_text(Side side, const Monomial& m, const Scalar& c) {
  std::ostringstream os;
  bool unit = c.is_one();
  bool has_vars = m.degree() > 0;
  if (!unit || !has_vars) os << c.to_string();
  bool first = unit && has_vars;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first || !unit || !has_vars) os << "*";
    first = false;
    os << var_name(side, i);
    if (m.exps[i] > 1) os << "^" << m.exps[i];
  }
  return os.str();
}

}  // namespace

std::string Poly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t = term_text(side_, m, c);
    if (first) {
      os << t;
      first = false;
      continue;
    }
    if (!t.empty() && t[0] == '-')
      os << " - " << t.substr(1);
    else
      os << " + " << t;
  }
  return os.str();
}

namespace {

Monomial parse_monomial_part(int nvars, Side side, const std::string& part) {
  // A single factor: "x3" or "u3^2".
  char want = side == Side::op ? 'x' : 'u';
  if (part.empty() || part[0] != want)
    throw malformed_input("bad variable factor '" + part + "'");
  std::size_t caret = part.find('^');
  std::string idx = caret == std::string::npos ? part.substr(1) : part.substr(1, caret - 1);
  int var = std::stoi(idx);
  int exp = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
  if (var < 0 || var >= nvars || exp < 1) throw malformed_input("bad factor '" + part + "'");
  Monomial m(std::vector<int>(nvars, 0));
  m.exps[var] = exp;
  return m;
}

}  // namespace

Poly Poly::parse(const FieldSpec& f, int nvars, int degree, Side side, const std::string& text) {
  Poly p(f, nvars, degree, side);
  if (text == "0") return p;
  // Split into signed terms on " + " / " - ".
  std::vector<std::pair<bool, std::string>> parts;  // (negated, body)
  std::size_t pos = 0;
  bool neg = false;
  while (pos < text.size()) {
    std::size_t plus = text.find(" + ", pos);
    std::size_t minus = text.find(" - ", pos);
    std::size_t cut = std::min(plus, minus);
    parts.emplace_back(neg, text.substr(pos, cut == std::string::npos ? cut : cut - pos));
    if (cut == std::string::npos) break;
    neg = cut == minus;
    pos = cut + 3;
  }
  for (auto& [negated, body] : parts) {
    // Split factors on '*'.
    std::vector<std::string> factors;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t star = body.find('*', start);
      factors.push_back(body.substr(start, star == std::string::npos ? star : star - start));
      if (star == std::string::npos) break;
      start = star + 1;
    }
    Scalar c = Scalar::one(f);
    Monomial m(std::vector<int>(nvars, 0));
    bool saw_coeff = false;
    for (const std::string& part : factors) {
      if (part.empty()) throw malformed_input("empty factor in term '" + body + "'");
      if (part[0] == 'x' || part[0] == 'u') {
        m = m * parse_monomial_part(nvars, side, part);
      } else {
        if (saw_coeff) throw malformed_input("two coefficients in term '" + body + "'");
        c = Scalar::parse(f, part);
        saw_coeff = true;
      }
    }
    if (negated) c = -c;
    p.add_term(m, c);
  }
  return p;
}

}  // namespace lefschetz
