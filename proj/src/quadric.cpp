#include "lefschetz/quadric.hpp"

namespace lefschetz {

Matrix gram(const Poly& q) {
  if (q.degree() != 2 || q.side() != Side::op) throw malformed_input("gram expects a quadric");
  const FieldSpec& f = q.field();
  int n = q.nvars();
  Scalar half = Scalar(f, 2).inv();
  Matrix g(f, n, n);
  for (const auto& [mono, coef] : q.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (mono.exps[v] == 2) i = j = v;
      if (mono.exps[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      g.set(i, i, coef);
    } else {
      g.set(i, j, coef * half);
      g.set(j, i, coef * half);
    }
  }
  return g;
}

int quadric_rank(const Poly& q) { return gram(q).rank(); }

namespace {

void require_quadric_backend(const Algebra& a) {
  if (a.d() != 2) throw unsupported_operation("quadric stratum operations need d = 2");
}

Poly ideal_combination(const Algebra& a, const std::vector<Scalar>& coeffs) {
  Poly q(a.field(), a.m() + 1, 2, Side::op);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    q = q + a.instance().generators()[i].scaled(coeffs[i]);
  return q;
}

}  // namespace

RankHistogram stratum_sample(const Algebra& a, int samples, std::uint64_t seed) {
  require_quadric_backend(a);
  const FieldSpec& f = a.field();
  int n = a.m() + 1;
  Rng rng = derive_stream(seed, "stratum-sample");
  RankHistogram h;
  h.counts.assign(n + 1, 0);
  h.samples = samples;
  for (int t = 0; t < samples; ++t) {
    std::vector<Scalar> c;
    bool nonzero = false;
    while (!nonzero) {
      c.clear();
      for (int i = 0; i < n; ++i) c.push_back(Scalar::random(f, rng));
      for (const Scalar& x : c)
        if (!x.is_zero()) nonzero = true;
    }
    int r = quadric_rank(ideal_combination(a, c));
    ++h.counts[r];
  }
  if (f.is_prime()) {
    // Anomaly when the full-rank frequency drops below 1 - samples*(m+1)/p.
    double freq = static_cast<double>(h.counts[n]) / samples;
    double bound = 1.0 - static_cast<double>(samples) * n / static_cast<double>(f.p());
    h.anomaly = freq < bound;
  }
  return h;
}

namespace {

// Gram rank of lam*G1 + mu*G2 over F_p, on raw residue matrices.
int pencil_point_rank(const Matrix& g1, const Matrix& g2, std::uint64_t lam, std::uint64_t mu) {
  const FieldSpec& f = g1.field();
  Scalar sl = Scalar::from_residue(f, lam), sm = Scalar::from_residue(f, mu);
  return (g1.scaled(sl) + g2.scaled(sm)).rank();
}

}  // namespace

PencilProfile pencil_profile(const Algebra& a, const Poly& q1, const Poly& q2,
                             std::int64_t enumeration_limit) {
  require_quadric_backend(a);
  const FieldSpec& f = a.field();
  if (!f.is_prime()) throw unsupported_operation("pencil profile needs the prime backend");
  const MonomialIndexer& amb2 = a.ambient_basis(2);
  if (!a.ideal(2).contains(q1.dense(amb2)) || !a.ideal(2).contains(q2.dense(amb2)))
    throw malformed_input("pencil members must lie in I_2");
  {
    Matrix two(f, 2, amb2.size());
    std::vector<Scalar> v1 = q1.dense(amb2), v2 = q2.dense(amb2);
    for (int j = 0; j < amb2.size(); ++j) {
      two.set(0, j, v1[j]);
      two.set(1, j, v2[j]);
    }
    if (two.rank() != 2) throw malformed_input("pencil members must be independent");
  }

  std::uint64_t p = f.p();
  Matrix g1 = gram(q1), g2 = gram(q2);
  int n = a.m() + 1;
  PencilProfile out;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidate_points;
  bool enumerate_all = static_cast<std::int64_t>(p) <= enumeration_limit;

  if (!enumerate_all) {
    // det(lam G1 + mu G2) is a binary form of degree m+1; interpolate
    // q(t) = det(t G1 + G2) from m+2 values, then rank only at its roots.
    int deg = n;
    std::vector<std::uint64_t> xs, ys;
    for (int i = 0; i <= deg; ++i) {
      xs.push_back(static_cast<std::uint64_t>(i));
      ys.push_back((g1.scaled(Scalar(f, i)) + g2).det().residue());
    }
    // Lagrange interpolation to coefficients.
    std::vector<std::uint64_t> coeff(deg + 1, 0);
    for (int i = 0; i <= deg; ++i) {
      std::vector<std::uint64_t> basis{1};
      std::uint64_t denom = 1;
      for (int j = 0; j <= deg; ++j) {
        if (j == i) continue;
        std::vector<std::uint64_t> next(basis.size() + 1, 0);
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t + 1] = mod_add(next[t + 1], basis[t], p);
          next[t] = mod_sub(next[t], mod_mul(basis[t], xs[j], p), p);
        }
        basis = std::move(next);
        denom = mod_mul(denom, mod_sub(xs[i], xs[j], p), p);
      }
      std::uint64_t scale = mod_mul(ys[i], mod_inv(denom, p), p);
      for (std::size_t t = 0; t < basis.size(); ++t)
        coeff[t] = mod_add(coeff[t], mod_mul(basis[t], scale, p), p);
    }
    bool identically_zero = true;
    for (std::uint64_t c : coeff)
      if (c != 0) identically_zero = false;

    if (identically_zero) {
      enumerate_all = true;  // no determinant information; rank every point
    } else {
      out.via_roots = true;
      out.points_scanned = static_cast<std::int64_t>(p) + 1;
      for (std::uint64_t t = 0; t < p; ++t) {
        std::uint64_t v = 0;
        for (int c = static_cast<int>(coeff.size()) - 1; c >= 0; --c)
          v = mod_add(mod_mul(v, t, p), coeff[c], p);
        if (v == 0) candidate_points.emplace_back(t, 1);
      }
      if (coeff[deg] == 0) candidate_points.emplace_back(1, 0);  // det(G1) = 0
      out.pencil_rank = n;  // det is nonzero somewhere on the pencil
    }
  }

  if (enumerate_all) {
    out.points_scanned = static_cast<std::int64_t>(p) + 1;
    candidate_points.emplace_back(1, 0);
    for (std::uint64_t t = 0; t < p; ++t) candidate_points.emplace_back(t, 1);
  }

  std::vector<PencilPoint> ranked;
  int max_rank = out.pencil_rank;
  for (auto [lam, mu] : candidate_points) {
    int r = pencil_point_rank(g1, g2, lam, mu);
    max_rank = std::max(max_rank, r);
    ranked.push_back(PencilPoint{lam, mu, r});
  }
  out.pencil_rank = max_rank;
  out.degenerate_pencil = max_rank < n;
  for (const PencilPoint& pp : ranked)
    if (pp.rank < out.pencil_rank) out.degenerate_points.push_back(pp);
  return out;
}

int incidence_dim(const Algebra& a, const ElementClass& z, const ElementClass& w) {
  require_quadric_backend(a);
  if (z.degree != 1 || w.degree != 1) throw degree_error("incidence probe expects linear classes");
  const FieldSpec& f = a.field();
  int n = a.m() + 1;
  {
    Matrix two(f, 2, n);
    for (int j = 0; j < n; ++j) {
      two.set(0, j, z.coords[j]);
      two.set(1, j, w.coords[j]);
    }
    if (two.rank() != 2) throw malformed_input("incidence probe expects independent forms");
  }
  const MonomialIndexer& amb2 = a.ambient_basis(2);
  Poly zl = a.lift(z), wl = a.lift(w);
  Matrix rows(f, 2 * n, amb2.size());
  for (int i = 0; i < n; ++i) {
    Monomial xi(std::vector<int>(n, 0));
    xi.exps[i] = 1;
    Poly xip = Poly::monomial_term(f, Side::op, xi, Scalar::one(f));
    std::vector<Scalar> rz = multiply(zl, xip).dense(amb2);
    std::vector<Scalar> rw = multiply(wl, xip).dense(amb2);
    for (int j = 0; j < amb2.size(); ++j) {
      rows.set(i, j, rz[j]);
      rows.set(n + i, j, rw[j]);
    }
  }
  Subspace span_zw(f, amb2.size(), rows);
  return span_zw.intersection(a.ideal(2)).dim();
}

RankOneScan veronese_scan(const Algebra& a, std::uint64_t small_prime, std::int64_t budget,
                          std::uint64_t seed) {
  require_quadric_backend(a);
  if (!is_prime_u64(small_prime)) throw malformed_input("scan modulus must be prime");
  const FieldSpec& f = a.field();
  int n = a.m() + 1;

  std::int64_t total = 0, pw = 1;
  for (int i = 0; i < n && total <= budget; ++i) {
    total += pw;
    pw *= static_cast<std::int64_t>(small_prime);
  }

  RankOneScan out;
  auto probe = [&](const std::vector<std::uint64_t>& c) {
    std::vector<Scalar> lifted;
    lifted.reserve(c.size());
    for (std::uint64_t ci : c) lifted.push_back(Scalar(f, static_cast<std::int64_t>(ci)));
    if (quadric_rank(ideal_combination(a, lifted)) == 1) out.hits.push_back(c);
  };

  if (total <= budget) {
    std::vector<std::uint64_t> c(n, 0);
    for (int lead = n - 1; lead >= 0; --lead) {
      std::int64_t count = 1;
      for (int i = 0; i < n - 1 - lead; ++i) count *= static_cast<std::int64_t>(small_prime);
      for (std::int64_t idx = 0; idx < count; ++idx) {
        for (int i = 0; i < n; ++i) c[i] = 0;
        c[lead] = 1;
        std::int64_t rest = idx;
        for (int i = n - 1; i > lead; --i) {
          c[i] = static_cast<std::uint64_t>(rest % small_prime);
          rest /= small_prime;
        }
        ++out.points_scanned;
        probe(c);
      }
    }
  } else {
    out.exhaustive = false;
    Rng rng = derive_stream(seed, "veronese-scan");
    for (std::int64_t t = 0; t < budget; ++t) {
      std::vector<std::uint64_t> c(n, 0);
      bool nonzero = false;
      while (!nonzero) {
        for (int i = 0; i < n; ++i) {
          c[i] = rng.below(small_prime);
          if (c[i] != 0) nonzero = true;
        }
      }
      ++out.points_scanned;
      probe(c);
    }
  }
  return out;
}

}  // namespace lefschetz
