#include "lefschetz/wlp.hpp"

#include <algorithm>

#include "lefschetz/quadric.hpp"

namespace lefschetz {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

void require_regular(const Algebra& a, const char* what) {
  if (!a.regular())
    throw unsupported_operation(std::string(what) + " needs a regular presentation");
}

Poly coordinate_form(const FieldSpec& f, int nvars, int i) {
  Monomial xi(std::vector<int>(nvars, 0));
  xi.exps[i] = 1;
  return Poly::monomial_term(f, Side::op, xi, Scalar::one(f));
}

bool independent_linear(const Algebra& a, const std::vector<const ElementClass*>& zs) {
  const FieldSpec& f = a.field();
  int n = a.hf(1);
  Matrix m(f, static_cast<int>(zs.size()), n);
  for (int i = 0; i < static_cast<int>(zs.size()); ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, zs[i]->coords[j]);
  return m.rank() == static_cast<int>(zs.size());
}

// Best sampled rank of mu_{L^j} at degree k, with early stop at the target.
RankRecord sample_rank(const Algebra& a, int k, int j, int trials, Rng& rng) {
  RankRecord rec;
  rec.k = k;
  rec.j = j;
  rec.hf_from = a.hf(k);
  rec.hf_to = a.hf(k + j);
  rec.target = std::min(rec.hf_from, rec.hf_to);
  for (int t = 0; t < trials; ++t) {
    Poly linear = a.lift(a.random_nonzero_class(1, rng));
    Poly f = j == 1 ? linear : power(linear, j);
    int r = a.mult_map(f, k).rank();
    rec.best = std::max(rec.best, r);
    rec.trials_used = t + 1;
    if (rec.best == rec.target) break;
  }
  rec.verdict = rec.best == rec.target ? Verdict::pass : Verdict::inconclusive;
  return rec;
}

// Settle a sampled miss over the rational backend: the symbolic rank IS the
// generic rank, and rank is lower semicontinuous in L, so it certifies either
// outcome exactly.
void certify_rational(const Algebra& a, RankRecord& rec, std::string& note);

Verdict combine(const std::vector<RankRecord>& rows) {
  Verdict overall = Verdict::pass;
  for (const RankRecord& r : rows) {
    if (r.verdict == Verdict::fail) return Verdict::fail;
    if (r.verdict == Verdict::inconclusive) overall = Verdict::inconclusive;
  }
  return overall;
}

}  // namespace

LefschetzReport wlp_check(const Algebra& a, int trials, std::uint64_t seed) {
  require_regular(a, "WLP check");
  LefschetzReport rep;
  rep.seed = seed;
  for (int k = 0; k < a.socle_degree(); ++k) {
    Rng rng = derive_stream(seed, "wlp", static_cast<std::uint64_t>(k));
    RankRecord rec = sample_rank(a, k, 1, trials, rng);
    if (rec.verdict == Verdict::inconclusive && a.field().is_rational())
      certify_rational(a, rec, rep.note);
    rep.rows.push_back(rec);
  }
  rep.overall = combine(rep.rows);
  return rep;
}

LefschetzReport slp_check(const Algebra& a, int trials, std::uint64_t seed) {
  require_regular(a, "SLP check");
  LefschetzReport rep;
  rep.seed = seed;
  for (int j = 1; j <= a.socle_degree(); ++j) {
    for (int k = 0; k + j <= a.socle_degree(); ++k) {
      Rng rng = derive_stream(seed, "slp", static_cast<std::uint64_t>(j * 64 + k));
      RankRecord rec = sample_rank(a, k, j, trials, rng);
      if (rec.verdict == Verdict::inconclusive && a.field().is_rational())
        certify_rational(a, rec, rep.note);
      rep.rows.push_back(rec);
    }
  }
  rep.overall = combine(rep.rows);
  return rep;
}

InjectivityReport injectivity_check(const Algebra& a, int trials, std::uint64_t seed) {
  require_regular(a, "injectivity check");
  int k = a.d() - 1;
  InjectivityReport rep;
  rep.k = k;
  rep.target = a.hf(k);
  if (a.hf(k + 1) < a.hf(k))
    throw unsupported_operation("injectivity at degree d-1 needs m >= 2");
  Rng rng = derive_stream(seed, "injectivity");
  for (int t = 0; t < trials; ++t) {
    Poly z = a.lift(a.random_nonzero_class(1, rng));
    int r = a.mult_map(z, k).rank();
    if (t == 0) rep.first_trial_rank = r;
    rep.best = std::max(rep.best, r);
    rep.trials_used = t + 1;
    if (rep.best == rep.target) break;
  }
  rep.verdict = rep.best == rep.target ? Verdict::pass : Verdict::inconclusive;
  return rep;
}

Subspace q_space(const Algebra& a, const ElementClass& z) {
  require_regular(a, "kernel fiber");
  if (z.degree != 1) throw degree_error("q_space expects a linear class");
  return kernel_basis(a.mult_map(a.lift(z), a.critical_degree()));
}

Subspace z_space(const Algebra& a, const ElementClass& q) {
  require_regular(a, "kernel fiber");
  return kernel_basis(a.mult_map(a.lift(q), 1));
}

namespace {

ElementClass combine_classes(const FieldSpec& f, const std::vector<ElementClass>& base,
                             const std::vector<std::uint64_t>& coeffs) {
  ElementClass out;
  out.degree = base[0].degree;
  out.coords.assign(base[0].coords.size(), Scalar::zero(f));
  for (std::size_t b = 0; b < base.size(); ++b) {
    Scalar c = Scalar::from_residue(f, coeffs[b]);
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
      out.coords[i] += base[b].coords[i] * c;
  }
  return out;
}

}  // namespace

LocusScan locus_scan(const Algebra& a, ScanGeometry geometry, ScanDegree mode, int samples,
                     std::uint64_t seed, std::int64_t point_budget) {
  require_regular(a, "locus scan");
  const FieldSpec& f = a.field();
  if (!f.is_prime()) throw unsupported_operation("locus scan needs the prime backend");
  std::uint64_t p = f.p();
  int t = mode == ScanDegree::critical ? a.critical_degree() : a.d() - 1;

  LocusScan out;
  out.seed = seed;
  int dim_geom = geometry == ScanGeometry::line ? 2 : 3;
  if (dim_geom > a.hf(1))
    throw malformed_input("scan geometry does not fit inside P(A_1)");
  const char* stream = geometry == ScanGeometry::line ? "locus-line" : "locus-plane";

  for (int si = 0; si < samples; ++si) {
    int hits_before = out.hit_points;
    Rng rng = derive_stream(seed, stream, static_cast<std::uint64_t>(si));
    // A random pencil/net of linear forms.
    std::vector<ElementClass> base;
    for (;;) {
      base.clear();
      for (int i = 0; i < dim_geom; ++i) base.push_back(a.random_nonzero_class(1, rng));
      std::vector<const ElementClass*> ptrs;
      for (const ElementClass& e : base) ptrs.push_back(&e);
      if (independent_linear(a, ptrs)) break;
    }
    // mu_z is linear in z, so the maps along the family are combinations of
    // the precomputed base maps; the scan itself runs on raw residues.
    int rows = a.hf(t + 1), cols = a.hf(t);
    std::vector<std::vector<std::uint64_t>> maps;
    for (const ElementClass& e : base) {
      Matrix m = a.mult_map(a.lift(e), t);
      std::vector<std::uint64_t> raw(static_cast<std::size_t>(rows) * cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          raw[static_cast<std::size_t>(i) * cols + j] = m.at(i, j).residue();
      maps.push_back(std::move(raw));
    }

    std::vector<std::uint64_t> combined(static_cast<std::size_t>(rows) * cols);
    auto visit_point = [&](const std::vector<std::uint64_t>& coeffs) {
      for (std::size_t i = 0; i < combined.size(); ++i) {
        std::uint64_t acc = 0;
        for (int b = 0; b < dim_geom; ++b)
          acc = mod_add(acc, mod_mul(coeffs[b], maps[b][i], p), p);
        combined[i] = acc;
      }
      ++out.points_scanned;
      std::vector<std::vector<std::uint64_t>> ker = fastfp::kernel(combined, rows, cols, p);
      if (ker.empty()) return;
      ++out.hit_points;
      ElementClass z = combine_classes(f, base, coeffs);
      for (const std::vector<std::uint64_t>& row : ker) {
        ElementClass q{t, {}};
        q.coords.reserve(cols);
        for (std::uint64_t v : row) q.coords.push_back(Scalar::from_residue(f, v));
        KernelPair pair;
        pair.z = z;
        pair.q = q;
        pair.q_dim = static_cast<int>(ker.size());
        pair.z_dim = z_space(a, q).dim();
        out.pairs.push_back(std::move(pair));
      }
    };

    if (geometry == ScanGeometry::line) {
      visit_point({1, 0});
      for (std::uint64_t c = 0; c < p; ++c) visit_point({c, 1});
    } else {
      std::int64_t full = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p) +
                          static_cast<std::int64_t>(p) + 1;
      if (full <= point_budget) {
        visit_point({1, 0, 0});
        for (std::uint64_t b = 0; b < p; ++b) visit_point({b, 1, 0});
        for (std::uint64_t b = 0; b < p; ++b)
          for (std::uint64_t c = 0; c < p; ++c) visit_point({b, c, 1});
      } else {
        out.exhaustive = false;
        for (std::int64_t i = 0; i < point_budget; ++i) {
          std::vector<std::uint64_t> coeffs(3, 0);
          bool nonzero = false;
          while (!nonzero)
            for (int b = 0; b < 3; ++b) {
              coeffs[b] = rng.below(p);
              if (coeffs[b] != 0) nonzero = true;
            }
          visit_point(coeffs);
        }
      }
    }
    out.hits_per_sample.push_back(out.hit_points - hits_before);
  }
  return out;
}

bool coker_duality_check(const Algebra& a, const ElementClass& q) {
  require_regular(a, "cokernel duality");
  if (q.is_zero()) throw malformed_input("cokernel duality expects a nonzero class");
  int t = q.degree;
  int k = a.socle_degree() - t - 1;
  if (k < 0) throw degree_error("class degree too large for cokernel duality");
  Poly ql = a.lift(q);
  int rank = a.mult_map(ql, k).rank();
  int coker = a.hf(k + t) - rank;
  return coker == z_space(a, q).dim();
}

bool z_space_bound_check(const Algebra& a, const std::vector<KernelPair>& pairs) {
  if (a.m() != 4 || a.d() != 2)
    throw unsupported_operation("the kernel-fiber bound is specific to m = 4, d = 2");
  for (const KernelPair& pair : pairs) {
    if (pair.q.is_zero()) continue;
    if (z_space(a, pair.q).dim() > 2) return false;
  }
  return true;
}

InclusionReport kernel_inclusion_check(const Algebra& a, const KernelPair& pair) {
  if (a.m() != 4 || a.d() != 2)
    throw unsupported_operation("the kernel inclusion check is specific to m = 4, d = 2");
  require_regular(a, "kernel inclusion");
  const FieldSpec& f = a.field();
  int s = a.critical_degree();
  Poly ql = a.lift(pair.q);

  // Span of z_space(Q) * A_1 inside A_2.
  Subspace zq = z_space(a, pair.q);
  int n = a.hf(1);
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < zq.dim(); ++i) {
    Poly w = a.lift(ElementClass{1, zq.basis().row(i)});
    for (int j = 0; j < n; ++j)
      rows.push_back(a.normal_form(multiply(w, coordinate_form(f, n, j))));
  }
  Matrix span = rows.empty() ? Matrix(f, 0, a.hf(2)) : Matrix::from_rows(f, rows);
  Subspace za1(f, a.hf(2), span);

  InclusionReport rep;
  rep.za1_dim = za1.dim();
  Matrix mq = a.mult_map(ql, s);
  rep.za1_in_kernel = true;
  for (int i = 0; i < za1.dim(); ++i) {
    std::vector<Scalar> image = mq.apply(za1.basis().row(i));
    for (const Scalar& c : image)
      if (!c.is_zero()) rep.za1_in_kernel = false;
  }
  rep.q_squared_zero = a.class_of(multiply(ql, ql)).is_zero();
  return rep;
}

PairSpanStats pair_span_check(const Algebra& a, int samples, std::uint64_t seed) {
  require_regular(a, "pair span check");
  if (a.d() != 2) throw unsupported_operation("pair span bounds are stated for d = 2");
  const FieldSpec& f = a.field();
  int n = a.hf(1);
  int bound = 2 * a.m() - 1;

  PairSpanStats stats;
  stats.min_image_dim = a.hf(2) + 1;

  auto image_dim = [&](const ElementClass& z, const ElementClass& w) {
    Poly zl = a.lift(z), wl = a.lift(w);
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      Poly xi = coordinate_form(f, n, i);
      rows.push_back(a.normal_form(multiply(zl, xi)));
      rows.push_back(a.normal_form(multiply(wl, xi)));
    }
    return Subspace(f, a.hf(2), Matrix::from_rows(f, rows)).dim();
  };

  auto record = [&](const ElementClass& z, const ElementClass& w, bool structured) {
    int img = image_dim(z, w);
    int inter = incidence_dim(a, z, w);
    ++stats.samples_used;
    stats.min_image_dim = std::min(stats.min_image_dim, img);
    stats.max_image_dim = std::max(stats.max_image_dim, img);
    stats.max_intersection_dim = std::max(stats.max_intersection_dim, inter);
    if (img < bound) ++stats.image_violations;
    if (inter > 2) ++stats.intersection_violations;
    if (structured && img == bound) stats.coordinate_equality = true;
  };

  auto unit_class = [&](int i) {
    ElementClass e{1, std::vector<Scalar>(n, Scalar::zero(f))};
    e.coords[i] = Scalar::one(f);
    return e;
  };

  // Structured pairs: every coordinate pair.
  for (int i = 0; i < n && stats.samples_used < samples; ++i)
    for (int j = i + 1; j < n && stats.samples_used < samples; ++j)
      record(unit_class(i), unit_class(j), true);

  // Locus points paired with fresh random forms (prime backend only).
  if (f.is_prime()) {
    LocusScan scan = locus_scan(a, ScanGeometry::line, ScanDegree::critical, 1,
                                derive_stream(seed, "pair-span-locus").next());
    Rng rng = derive_stream(seed, "pair-span-locus-partners");
    int used = 0;
    for (const KernelPair& pair : scan.pairs) {
      if (stats.samples_used >= samples || used >= 16) break;
      ElementClass w = a.random_nonzero_class(1, rng);
      while (!independent_linear(a, {&pair.z, &w})) w = a.random_nonzero_class(1, rng);
      record(pair.z, w, false);
      ++used;
    }
  }

  // Fresh random pairs.
  Rng rng = derive_stream(seed, "pair-span-random");
  while (stats.samples_used < samples) {
    ElementClass z = a.random_nonzero_class(1, rng);
    ElementClass w = a.random_nonzero_class(1, rng);
    if (!independent_linear(a, {&z, &w})) continue;
    record(z, w, false);
  }
  return stats;
}

bool point_span_check(const Algebra& a, const std::vector<Scalar>& point) {
  require_regular(a, "point span check");
  if (a.d() != 2) throw unsupported_operation("point span check is stated for d = 2");
  const FieldSpec& f = a.field();
  int n = a.hf(1);
  if (static_cast<int>(point.size()) != n) throw malformed_input("point length mismatch");
  bool nonzero = false;
  for (const Scalar& c : point)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) throw malformed_input("the zero vector is not a projective point");

  // V = linear forms vanishing at the point.
  Matrix eval_row(f, 1, n);
  for (int i = 0; i < n; ++i) eval_row.set(0, i, point[i]);
  Subspace vanishing = kernel_basis(eval_row);

  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < vanishing.dim(); ++i) {
    Poly v = a.lift(ElementClass{1, vanishing.basis().row(i)});
    for (int j = 0; j < n; ++j)
      rows.push_back(a.normal_form(multiply(v, coordinate_form(f, n, j))));
  }
  Subspace va1(f, a.hf(2), Matrix::from_rows(f, rows));
  return va1.dim() == a.hf(2);
}

ProductProbe pair_product_probe(const Algebra& a, const ElementClass& z) {
  require_regular(a, "product probe");
  ProductProbe probe;
  Subspace ker = q_space(a, z);
  probe.kernel_dim = ker.dim();
  for (int i = 0; i < ker.dim(); ++i)
    for (int j = i; j < ker.dim(); ++j) {
      Poly qi = a.lift(ElementClass{a.critical_degree(), ker.basis().row(i)});
      Poly qj = a.lift(ElementClass{a.critical_degree(), ker.basis().row(j)});
      ++probe.pairs_checked;
      if (a.class_of(multiply(qi, qj)).is_zero()) ++probe.zero_products;
    }
  return probe;
}

int generic_rank(const Algebra& a, int k, int j) {
  require_regular(a, "generic rank");
  const FieldSpec& f = a.field();
  int n = a.m() + 1;
  int rows = a.hf(k + j), cols = a.hf(k);
  if (rows == 0 || cols == 0) return 0;

  // Symbolic entries of mu_{L^j} with L = sum a_i x_i: the coefficient of a^e
  // is multinomial(j; e) times the matrix of multiplication by x^e.
  std::vector<Monomial> exps = monomial_basis(n, j);
  std::vector<std::vector<Poly>> entries(
      rows, std::vector<Poly>(cols, Poly(f, n, j, Side::op)));
  for (const Monomial& e : exps) {
    Scalar multinomial = Scalar::one(f);
    {
      for (int t = 2; t <= j; ++t) multinomial *= Scalar(f, t);
      multinomial = multinomial / monomial_factorial(f, e);
    }
    Matrix m = a.mult_map(Poly::monomial_term(f, Side::op, e, Scalar::one(f)), k);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        Scalar coef = m.at(r, c) * multinomial;
        if (!coef.is_zero()) entries[r][c].add_term(e, coef);
      }
  }

  // Fraction-free (Bareiss) elimination: every update divides exactly by the
  // previous pivot, so entries stay polynomial.
  Poly prev = Poly::monomial_term(f, Side::op, Monomial(std::vector<int>(n, 0)), Scalar::one(f));
  int rank = 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!entries[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) std::swap(entries[piv], entries[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int cc = c + 1; cc < cols; ++cc)
        entries[i][cc] = exact_div(
            multiply(entries[r][c], entries[i][cc]) - multiply(entries[i][c], entries[r][cc]),
            prev);
      entries[i][c] = Poly(f, n, entries[i][c].degree(), Side::op);
    }
    prev = entries[r][c];
    ++rank;
    ++r;
  }
  return rank;
}

int generic_rank(const Algebra& a, int k) { return generic_rank(a, k, 1); }

namespace {

void certify_rational(const Algebra& a, RankRecord& rec, std::string& note) {
  int g = generic_rank(a, rec.k, rec.j);
  if (g == rec.target) {
    rec.verdict = Verdict::pass;
    rec.best = g;
    note = "sampling missed at degree " + std::to_string(rec.k) +
           "; symbolic generic rank meets the target";
  } else {
    rec.verdict = Verdict::fail;
    note = "symbolic generic rank " + std::to_string(g) + " < target " +
           std::to_string(rec.target) + " at degree " + std::to_string(rec.k) +
           " certifies failure for every linear form";
  }
}

}  // namespace

}  // namespace lefschetz
