#include "lefschetz/subspace.hpp"

namespace lefschetz {

namespace {

Matrix drop_zero_rows(const Matrix& echelon, int nonzero_rows) {
  Matrix out(echelon.field(), nonzero_rows, echelon.cols());
  for (int i = 0; i < nonzero_rows; ++i)
    for (int j = 0; j < echelon.cols(); ++j) out.set(i, j, echelon.at(i, j));
  return out;
}

}  // namespace

Subspace::Subspace(const FieldSpec& f, int ambient, const Matrix& span_rows)
    : ambient_(ambient), basis_(f, 0, ambient) {
  if (span_rows.cols() != ambient) throw malformed_input("ambient dimension mismatch");
  if (span_rows.field() != f) throw malformed_input("mixed-field subspace");
  Matrix::Rref rr = span_rows.rref();
  basis_ = drop_zero_rows(rr.reduced, static_cast<int>(rr.pivots.size()));
}

Subspace Subspace::zero(const FieldSpec& f, int ambient) {
  return Subspace(f, ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& f, int ambient) {
  return Subspace(f, ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw malformed_input("ambient dimension mismatch in sum");
  return Subspace(field(), ambient_, basis_.stacked(o.basis_));
}

Subspace Subspace::intersection(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw malformed_input("ambient dimension mismatch in intersection");
  // Zassenhaus: reduce [U | U; V | 0]; rows with zero left block carry the
  // intersection in their right block.
  const FieldSpec& f = field();
  int n = ambient_;
  Matrix big(f, dim() + o.dim(), 2 * n);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < n; ++j) {
      big.set(i, j, basis_.at(i, j));
      big.set(i, n + j, basis_.at(i, j));
    }
  for (int i = 0; i < o.dim(); ++i)
    for (int j = 0; j < n; ++j) big.set(dim() + i, j, o.basis_.at(i, j));
  Matrix::Rref rr = big.rref();
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i) {
    if (rr.pivots[i] < n) continue;  // left block nonzero
    std::vector<Scalar> right(n, Scalar::zero(f));
    for (int j = 0; j < n; ++j) right[j] = rr.reduced.at(i, n + j);
    rows.push_back(std::move(right));
  }
  Matrix span = rows.empty() ? Matrix(f, 0, n) : Matrix::from_rows(f, rows);
  return Subspace(f, n, span);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw malformed_input("vector length mismatch");
  std::vector<Scalar> w = v;
  for (int i = 0; i < dim(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) { lead = j; break; }
    if (lead < 0) continue;
    if (w[lead].is_zero()) continue;
    Scalar f = w[lead];  // echelon rows have unit leading entries
    for (int j = lead; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
  }
  for (const Scalar& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  return Subspace(m.field(), m.cols(), m.kernel());
}

}  // namespace lefschetz
