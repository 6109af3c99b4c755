#include "lefschetz/inverse_system.hpp"

namespace lefschetz {

Subspace annihilator(const Algebra& a, int k) {
  if (k < 0 || k > a.socle_degree()) throw malformed_input("annihilator degree out of range");
  const FieldSpec& f = a.field();
  const MonomialIndexer& ambient = a.ambient_basis(k);
  const Matrix& ibasis = a.ideal(k).basis();
  // <x^a, u^b> = delta_ab * a!, so the pairing matrix is the ideal basis with
  // columns scaled by the monomial factorials.
  Matrix pairing_rows(f, ibasis.rows(), ambient.size());
  for (int j = 0; j < ambient.size(); ++j) {
    Scalar fact = monomial_factorial(f, ambient.at(j));
    for (int i = 0; i < ibasis.rows(); ++i)
      pairing_rows.set(i, j, ibasis.at(i, j) * fact);
  }
  return kernel_basis(pairing_rows);
}

Poly dual_socle_generator(const Algebra& a) {
  if (!a.regular())
    throw unsupported_operation("dual socle generator needs a regular presentation");
  int M = a.socle_degree();
  Subspace top = annihilator(a, M);
  if (top.dim() != 1) throw malformed_input("socle slice is not one-dimensional");
  // The echelon basis row already has leading coefficient 1.
  return Poly::from_dense(a.field(), Side::target, a.ambient_basis(M), top.basis().row(0));
}

bool derivative_span_check(const Algebra& a, int k) {
  if (!a.regular()) throw unsupported_operation("derivative span needs a regular presentation");
  int M = a.socle_degree();
  if (k < 0 || k > M) throw malformed_input("derivative order out of range");
  Poly g = dual_socle_generator(a);
  const FieldSpec& f = a.field();
  const MonomialIndexer& target = a.ambient_basis(M - k);
  std::vector<Monomial> ops = monomial_basis(a.m() + 1, k);
  Matrix rows(f, static_cast<int>(ops.size()), target.size());
  for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
    Poly op = Poly::monomial_term(f, Side::op, ops[i], Scalar::one(f));
    std::vector<Scalar> v = differentiate(op, g).dense(target);
    for (int j = 0; j < target.size(); ++j) rows.set(i, j, v[j]);
  }
  Subspace span(f, target.size(), rows);
  return span == annihilator(a, M - k);
}

Poly apply_to_socle(const Algebra& a, const Poly& q) {
  if (!a.regular()) throw unsupported_operation("socle application needs a regular presentation");
  if (q.side() != Side::op) throw malformed_input("expected an operator-side polynomial");
  return differentiate(q, dual_socle_generator(a));
}

VertexSpace vertex_space(const Algebra& a, const Poly& q) {
  const FieldSpec& f = a.field();
  int n = a.m() + 1;
  Poly qg = apply_to_socle(a, q);
  if (qg.is_zero())
    return VertexSpace{Subspace::full(f, n), true};
  if (qg.degree() == 0)
    return VertexSpace{Subspace::full(f, n), false};  // constants are killed by every derivative
  MonomialIndexer down(n, qg.degree() - 1);
  Matrix cols(f, down.size(), n);
  for (int i = 0; i < n; ++i) {
    Monomial xi(std::vector<int>(n, 0));
    xi.exps[i] = 1;
    Poly di = differentiate(Poly::monomial_term(f, Side::op, xi, Scalar::one(f)), qg);
    std::vector<Scalar> v = di.dense(down);
    for (int r = 0; r < down.size(); ++r) cols.set(r, i, v[r]);
  }
  return VertexSpace{kernel_basis(cols), false};
}

bool veronese_certificate(const Instance& inst, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != inst.m() + 1)
    throw malformed_input("point length mismatch");
  bool all_zero = true;
  for (const Scalar& c : point)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw malformed_input("the zero vector is not a projective point");
  const FieldSpec& f = inst.field();
  Poly linear(f, inst.m() + 1, 1, Side::target);
  for (int i = 0; i <= inst.m(); ++i) {
    Monomial ui(std::vector<int>(inst.m() + 1, 0));
    ui.exps[i] = 1;
    linear.add_term(ui, point[i]);
  }
  Poly pd = power(linear, inst.d());
  // Ann of the span equals Ann of the generating set.
  for (const Poly& g : inst.generators())
    if (!pairing(g, pd).is_zero()) return false;
  return true;
}

namespace {

std::uint64_t reduce_coefficient(const Scalar& c, std::uint64_t pprime) {
  if (c.field().is_prime()) return c.residue() % pprime;
  const mpq_class& q = c.rational();
  mpz_class p(static_cast<unsigned long>(pprime));
  mpz_class den = q.get_den() % p;
  if (den == 0) throw malformed_input("coefficient denominator not invertible mod scan prime");
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  std::uint64_t inv = mod_inv(den.get_ui(), pprime);
  return mod_mul(num.get_ui(), inv, pprime);
}

}  // namespace

ZeroScan common_zero_scan(const Instance& inst, std::uint64_t scan_prime, std::int64_t budget) {
  if (!is_prime_u64(scan_prime)) throw malformed_input("scan modulus must be prime");
  int n = inst.m() + 1;
  // |P^m(F_p')| = 1 + p' + ... + p'^m, clamped against the budget.
  std::int64_t total = 0, pw = 1;
  for (int i = 0; i < n && total <= budget; ++i) {
    total += pw;
    pw *= static_cast<std::int64_t>(scan_prime);
  }
  if (total > budget) throw unsupported_operation("common-zero scan exceeds the point budget");

  // Reduced generators as exponent/coefficient lists mod p'.
  struct Term {
    const std::vector<int>* exps;
    std::uint64_t c;
  };
  std::vector<std::vector<Term>> gens;
  for (const Poly& g : inst.generators()) {
    std::vector<Term> terms;
    for (const auto& [mono, coef] : g.terms()) {
      std::uint64_t c = reduce_coefficient(coef, scan_prime);
      if (c != 0) terms.push_back(Term{&mono.exps, c});
    }
    gens.push_back(std::move(terms));
  }

  ZeroScan result;
  std::vector<std::uint64_t> pt(n, 0);
  auto vanishes_all = [&]() {
    for (const auto& terms : gens) {
      std::uint64_t acc = 0;
      for (const Term& t : terms) {
        std::uint64_t v = t.c;
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < (*t.exps)[i]; ++e) v = mod_mul(v, pt[i], scan_prime);
        acc = mod_add(acc, v, scan_prime);
      }
      if (acc != 0) return false;
    }
    return true;
  };

  // Normalized representatives with first nonzero coordinate 1, enumerated so
  // lex-lower coordinate vectors come first.
  for (int lead = n - 1; lead >= 0; --lead) {
    int free_vars = n - 1 - lead;
    std::int64_t count = 1;
    for (int i = 0; i < free_vars; ++i) count *= static_cast<std::int64_t>(scan_prime);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      for (int i = 0; i < n; ++i) pt[i] = 0;
      pt[lead] = 1;
      std::int64_t rest = idx;
      for (int i = n - 1; i > lead; --i) {
        pt[i] = static_cast<std::uint64_t>(rest % scan_prime);
        rest /= scan_prime;
      }
      ++result.points_scanned;
      if (vanishes_all()) {
        result.zero = pt;
        return result;
      }
    }
  }
  return result;
}

}  // namespace lefschetz
