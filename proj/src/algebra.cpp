#include "lefschetz/algebra.hpp"

namespace lefschetz {

std::int64_t koszul_hf(int m, int d, int k) {
  if (k < 0) return 0;
  std::int64_t acc = 0;
  for (int j = 0; j * d <= k && j <= m + 1; ++j) {
    std::int64_t t = binomial(m + 1, j) * binomial(m + k - j * d, m);
    acc += (j % 2 == 0) ? t : -t;
  }
  return acc;
}

Algebra Algebra::build(const Instance& inst, int up_to) {
  int M = inst.socle_degree();
  if (up_to < 0) up_to = M + 1;
  if (up_to < M + 1) throw malformed_input("algebra must be built through degree M+1");
  return Algebra(inst, up_to);
}

Algebra::Algebra(Instance inst, int up_to)
    : inst_(std::move(inst)), M_(inst_.socle_degree()), s_((M_ + 1) / 2 - 1), up_to_(up_to) {
  const FieldSpec& f = inst_.field();
  int n = inst_.m() + 1;
  int d = inst_.d();
  degrees_.reserve(up_to_ + 1);
  hf_.reserve(up_to_ + 1);

  for (int k = 0; k <= up_to_; ++k) {
    MonomialIndexer ambient(n, k);
    int dim = ambient.size();

    Matrix span(f, 0, dim);
    if (k >= d) {
      MonomialIndexer shifts(n, k - d);
      Matrix rows(f, shifts.size() * n, dim);
      int r = 0;
      for (const Poly& g : inst_.generators()) {
        for (int si = 0; si < shifts.size(); ++si) {
          const Monomial& mu = shifts.at(si);
          for (const auto& [mono, coef] : g.terms())
            rows.set(r, ambient.index_of(mono * mu), coef);
          ++r;
        }
      }
      span = std::move(rows);
    }
    Subspace ideal(f, dim, span);

    std::vector<bool> is_pivot(dim, false);
    for (int i = 0; i < ideal.dim(); ++i) {
      for (int j = 0; j < dim; ++j)
        if (!ideal.basis().at(i, j).is_zero()) {
          is_pivot[j] = true;
          break;
        }
    }
    std::vector<Monomial> std_monomials;
    std::vector<int> std_cols;
    for (int j = 0; j < dim; ++j)
      if (!is_pivot[j]) {
        std_monomials.push_back(ambient.at(j));
        std_cols.push_back(j);
      }

    // Normal form: v - sum_j v[pivot_j] * basis_j, restricted to the standard
    // columns. As a matrix it has a unit at each standard column and the
    // negated basis coefficients at the pivot columns.
    int h = static_cast<int>(std_cols.size());
    Matrix proj(f, h, dim);
    {
      std::vector<int> pivot_cols;
      for (int j = 0; j < dim; ++j)
        if (is_pivot[j]) pivot_cols.push_back(j);
      for (int c = 0; c < h; ++c) {
        proj.set(c, std_cols[c], Scalar::one(f));
        for (std::size_t bi = 0; bi < pivot_cols.size(); ++bi)
          proj.set(c, pivot_cols[bi],
                   -ideal.basis().at(static_cast<int>(bi), std_cols[c]));
      }
    }

    hf_.push_back(h);
    degrees_.push_back(DegreeData{std::move(ambient), std::move(ideal),
                                  std::move(std_monomials), std::move(proj)});
  }

  verdict_.regular = true;
  for (int k = 0; k <= std::min(up_to_, M_ + 1); ++k) {
    if (hf_[k] != koszul_hf(inst_.m(), d, k)) {
      verdict_.regular = false;
      verdict_.witness_degree = k;
      break;
    }
  }
}

const Algebra::DegreeData& Algebra::deg(int k) const {
  if (k < 0 || k > up_to_) throw malformed_input("degree " + std::to_string(k) + " not built");
  return degrees_[k];
}

int Algebra::hf(int k) const {
  if (k < 0) return 0;
  if (k > up_to_) {
    if (verdict_.regular) return 0;
    throw malformed_input("Hilbert function not materialized beyond built degree");
  }
  return hf_[k];
}

const MonomialIndexer& Algebra::ambient_basis(int k) const { return deg(k).ambient; }
const Subspace& Algebra::ideal(int k) const { return deg(k).ideal; }
const std::vector<Monomial>& Algebra::std_basis(int k) const { return deg(k).std_monomials; }
const Matrix& Algebra::projector(int k) const { return deg(k).projector; }

std::vector<Scalar> Algebra::normal_form(const Poly& f) const {
  return deg(f.degree()).projector.apply(f.dense(deg(f.degree()).ambient));
}

ElementClass Algebra::class_of(const Poly& f) const {
  return ElementClass{f.degree(), normal_form(f)};
}

Poly Algebra::lift(const ElementClass& e) const {
  const DegreeData& dd = deg(e.degree);
  if (e.coords.size() != dd.std_monomials.size())
    throw malformed_input("class coordinate length mismatch");
  Poly p(field(), inst_.m() + 1, e.degree, Side::op);
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    p.add_term(dd.std_monomials[i], e.coords[i]);
  return p;
}

ElementClass Algebra::random_class(int k, Rng& rng) const {
  std::vector<Scalar> coords;
  coords.reserve(hf(k));
  for (int i = 0; i < hf(k); ++i) coords.push_back(Scalar::random(field(), rng));
  return ElementClass{k, std::move(coords)};
}

ElementClass Algebra::random_nonzero_class(int k, Rng& rng) const {
  if (hf(k) == 0) throw malformed_input("no nonzero classes in an empty graded piece");
  for (;;) {
    ElementClass e = random_class(k, rng);
    if (!e.is_zero()) return e;
  }
}

Matrix Algebra::mult_map(const Poly& f, int k) const {
  int j = f.degree();
  if (k < 0 || k + j > up_to_) throw malformed_input("multiplication map outside built range");
  const DegreeData& src = deg(k);
  const DegreeData& dst = deg(k + j);
  Matrix out(field(), hf_[k + j], hf_[k]);
  std::vector<Scalar> dense(dst.ambient.size(), Scalar::zero(field()));
  for (int c = 0; c < static_cast<int>(src.std_monomials.size()); ++c) {
    for (Scalar& x : dense) x = Scalar::zero(field());
    const Monomial& b = src.std_monomials[c];
    for (const auto& [mono, coef] : f.terms()) dense[dst.ambient.index_of(mono * b)] = coef;
    std::vector<Scalar> col = dst.projector.apply(dense);
    for (int r = 0; r < static_cast<int>(col.size()); ++r) out.set(r, c, col[r]);
  }
  return out;
}

Matrix Algebra::duality_pairing(int k) const {
  if (!verdict_.regular)
    throw unsupported_operation("duality pairing needs a regular presentation");
  if (k < 0 || k > M_) throw malformed_input("pairing degree out of range");
  const DegreeData& top = deg(M_);
  const DegreeData& a = deg(k);
  const DegreeData& b = deg(M_ - k);
  Matrix out(field(), hf_[k], hf_[M_ - k]);
  for (int i = 0; i < hf_[k]; ++i)
    for (int j = 0; j < hf_[M_ - k]; ++j) {
      Monomial prod = a.std_monomials[i] * b.std_monomials[j];
      out.set(i, j, top.projector.at(0, top.ambient.index_of(prod)));
    }
  return out;
}

bool Algebra::symmetry_check(const Poly& L) const {
  if (M_ % 2 == 0)
    throw unsupported_operation("symmetry of the critical multiplication needs odd socle degree");
  if (L.degree() != 1) throw degree_error("symmetry check expects a linear form");
  Matrix phi = mult_map(L, s_);                 // HF(s+1) x HF(s)
  Matrix pair = duality_pairing(s_ + 1);        // HF(s+1) x HF(s)
  Matrix b = phi.transpose() * pair;            // bilinear form on A_s
  return b == b.transpose();
}

Scalar Algebra::socle_coord(const Poly& a, const Poly& b) const {
  if (a.degree() + b.degree() != M_) throw degree_error("socle coordinate needs degrees summing to M");
  Poly prod = multiply(a, b);
  std::vector<Scalar> nf = normal_form(prod);
  return nf.empty() ? Scalar::zero(field()) : nf[0];
}

RegularityVerdict is_regular_sequence(const Instance& inst) {
  return Algebra::build(inst).regularity();
}

}  // namespace lefschetz
