#pragma once

#include "lefschetz/matrix.hpp"

namespace lefschetz {

// Linear subspace of F^ambient, carried by its reduced-echelon basis. The
// echelon form is the canonical representative: two subspaces are equal iff
// their basis matrices are entrywise equal.
class Subspace {
 public:
  // Spans the row space of `span_rows` (rows need not be independent).
  Subspace(const FieldSpec& f, int ambient, const Matrix& span_rows);
  static Subspace zero(const FieldSpec& f, int ambient);
  static Subspace full(const FieldSpec& f, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }

  Subspace sum(const Subspace& o) const;
  Subspace intersection(const Subspace& o) const;
  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_;
  Matrix basis_;
};

// Right kernel of M as a subspace of F^cols.
Subspace kernel_basis(const Matrix& m);

}  // namespace lefschetz
