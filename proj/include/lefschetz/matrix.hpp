#pragma once

#include <initializer_list>
#include <vector>

#include "lefschetz/field.hpp"

namespace lefschetz {

// Dense matrix over one FieldSpec, row-major. Values are immutable after
// construction except through set(), which is only used while assembling.
class Matrix {
 public:
  Matrix(const FieldSpec& f, int rows, int cols);
  static Matrix identity(const FieldSpec& f, int n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Scalar v);

  std::vector<Scalar> row(int r) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * v
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix stacked(const Matrix& below) const;

  struct Rref;
  Rref rref() const;
  int rank() const;
  // Rows span the right kernel {v : M v = 0}, in reduced echelon form.
  Matrix kernel() const;

  Scalar det() const;  // square only

 private:
  void check_field(const Scalar& v) const;
  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

struct Matrix::Rref {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

// Raw-buffer elimination over F_p for tight scan loops (locus and pencil
// scans run these millions of times). Matrix::rref dispatches here on the
// prime path, so there is exactly one elimination implementation per field.
namespace fastfp {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t p);

// Right-kernel basis of a row-major buffer, as canonical echelon rows.
std::vector<std::vector<std::uint64_t>> kernel(std::vector<std::uint64_t> a, int rows, int cols,
                                               std::uint64_t p);

}  // namespace fastfp

}  // namespace lefschetz
