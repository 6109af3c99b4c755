#include "lefschetz/matrix.hpp"

#include <algorithm>

namespace lefschetz {

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw malformed_input("negative matrix dimension");
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw malformed_input("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::check_field(const Scalar& v) const {
  if (v.field() != field_) throw malformed_input("mixed-field matrix entry");
}

void Matrix::set(int r, int c, Scalar v) {
  check_field(v);
  e_[static_cast<std::size_t>(r) * cols_ + c] = std::move(v);
}

std::vector<Scalar> Matrix::row(int r) const {
  return std::vector<Scalar>(e_.begin() + static_cast<std::size_t>(r) * cols_,
                             e_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw malformed_input("mixed-field matrix product");
  if (cols_ != o.rows_) throw malformed_input("inner dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    std::uint64_t p = field_.p();
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        std::uint64_t a = at(i, k).residue();
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          std::uint64_t acc = r.at(i, j).residue();
          acc = mod_add(acc, mod_mul(a, o.at(k, j).residue(), p), p);
          r.e_[static_cast<std::size_t>(i) * r.cols_ + j] = Scalar::from_residue(field_, acc);
        }
      }
  } else {
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.e_[static_cast<std::size_t>(i) * r.cols_ + j] += a * o.at(k, j);
      }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw malformed_input("shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw malformed_input("shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw malformed_input("vector length mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (field_ != below.field_ || cols_ != below.cols_) throw malformed_input("stack mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

// Reduced row echelon over F_p on a raw residue buffer. This is the hot path:
// every rank/kernel/span computation in the library lands here.
std::vector<int> fastfp::rref(std::vector<std::uint64_t>& a, int rows, int cols,
                              std::uint64_t p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i) * cols + c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * cols + j],
                  a[static_cast<std::size_t>(r) * cols + j]);
    std::uint64_t inv = mod_inv(a[static_cast<std::size_t>(r) * cols + c], p);
    for (int j = c; j < cols; ++j) {
      std::uint64_t& x = a[static_cast<std::size_t>(r) * cols + j];
      x = mod_mul(x, inv, p);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = a[static_cast<std::size_t>(i) * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        std::uint64_t& x = a[static_cast<std::size_t>(i) * cols + j];
        x = mod_sub(x, mod_mul(f, a[static_cast<std::size_t>(r) * cols + j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> fastfp::kernel(std::vector<std::uint64_t> a, int rows,
                                                       int cols, std::uint64_t p) {
  std::vector<int> piv = fastfp::rref(a, rows, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  int nullity = cols - static_cast<int>(piv.size());
  std::vector<std::uint64_t> basis(static_cast<std::size_t>(nullity) * cols, 0);
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    basis[static_cast<std::size_t>(k) * cols + c] = 1;
    for (std::size_t j = 0; j < piv.size(); ++j) {
      std::uint64_t v = a[j * cols + c];
      basis[static_cast<std::size_t>(k) * cols + piv[j]] = v == 0 ? 0 : p - v;
    }
    ++k;
  }
  fastfp::rref(basis, nullity, cols, p);  // canonical echelon representative
  std::vector<std::vector<std::uint64_t>> out(nullity);
  for (int i = 0; i < nullity; ++i)
    out[i].assign(basis.begin() + static_cast<std::size_t>(i) * cols,
                  basis.begin() + static_cast<std::size_t>(i + 1) * cols);
  return out;
}

namespace {

// Rational path. Fractions stay reduced (mpq keeps canonical form), so every
// intermediate entry is a ratio of minors of the input: polynomial bit growth.
std::vector<int> rref_rational(std::vector<mpq_class>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i) * cols + c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * cols + j],
                  a[static_cast<std::size_t>(r) * cols + j]);
    mpq_class inv = 1 / a[static_cast<std::size_t>(r) * cols + c];
    for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(r) * cols + j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      mpq_class f = a[static_cast<std::size_t>(i) * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i) * cols + j] -= f * a[static_cast<std::size_t>(r) * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Rref Matrix::rref() const {
  Matrix out(field_, rows_, cols_);
  std::vector<int> pivots;
  if (field_.is_prime()) {
    std::vector<std::uint64_t> a(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) a[i] = e_[i].residue();
    pivots = fastfp::rref(a, rows_, cols_, field_.p());
    for (std::size_t i = 0; i < a.size(); ++i)
      out.e_[i] = Scalar::from_residue(field_, a[i]);
  } else {
    std::vector<mpq_class> a(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) a[i] = e_[i].rational();
    pivots = rref_rational(a, rows_, cols_);
    for (std::size_t i = 0; i < a.size(); ++i)
      out.e_[i] = Scalar::from_rational(a[i]);
  }
  return Rref{std::move(out), std::move(pivots)};
}

int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

Matrix Matrix::kernel() const {
  Rref rr = rref();
  const std::vector<int>& piv = rr.pivots;
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  int nullity = cols_ - static_cast<int>(piv.size());
  Matrix basis(field_, nullity, cols_);
  int k = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    basis.set(k, c, Scalar::one(field_));
    for (std::size_t j = 0; j < piv.size(); ++j)
      basis.set(k, piv[j], -rr.reduced.at(static_cast<int>(j), c));
    ++k;
  }
  // Canonicalize so subspace equality is entrywise equality.
  return basis.rref().reduced;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw malformed_input("determinant of a non-square matrix");
  // Plain elimination tracking the product of pivots.
  if (field_.is_prime()) {
    std::uint64_t p = field_.p();
    std::vector<std::uint64_t> a(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) a[i] = e_[i].residue();
    std::uint64_t d = 1;
    bool neg = false;
    for (int c = 0; c < cols_; ++c) {
      int piv = -1;
      for (int i = c; i < rows_; ++i)
        if (a[static_cast<std::size_t>(i) * cols_ + c] != 0) { piv = i; break; }
      if (piv < 0) return Scalar::zero(field_);
      if (piv != c) {
        neg = !neg;
        for (int j = 0; j < cols_; ++j)
          std::swap(a[static_cast<std::size_t>(piv) * cols_ + j],
                    a[static_cast<std::size_t>(c) * cols_ + j]);
      }
      std::uint64_t pv = a[static_cast<std::size_t>(c) * cols_ + c];
      d = mod_mul(d, pv, p);
      std::uint64_t inv = mod_inv(pv, p);
      for (int i = c + 1; i < rows_; ++i) {
        std::uint64_t f = mod_mul(a[static_cast<std::size_t>(i) * cols_ + c], inv, p);
        if (f == 0) continue;
        for (int j = c; j < cols_; ++j) {
          std::uint64_t& x = a[static_cast<std::size_t>(i) * cols_ + j];
          x = mod_sub(x, mod_mul(f, a[static_cast<std::size_t>(c) * cols_ + j], p), p);
        }
      }
    }
    if (neg) d = d == 0 ? 0 : p - d;
    return Scalar::from_residue(field_, d);
  }
  std::vector<mpq_class> a(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) a[i] = e_[i].rational();
  mpq_class d = 1;
  bool neg = false;
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int i = c; i < rows_; ++i)
      if (a[static_cast<std::size_t>(i) * cols_ + c] != 0) { piv = i; break; }
    if (piv < 0) return Scalar::zero(field_);
    if (piv != c) {
      neg = !neg;
      for (int j = 0; j < cols_; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * cols_ + j],
                  a[static_cast<std::size_t>(c) * cols_ + j]);
    }
    mpq_class pv = a[static_cast<std::size_t>(c) * cols_ + c];
    d *= pv;
    for (int i = c + 1; i < rows_; ++i) {
      mpq_class f = a[static_cast<std::size_t>(i) * cols_ + c] / pv;
      if (f == 0) continue;
      for (int j = c; j < cols_; ++j)
        a[static_cast<std::size_t>(i) * cols_ + j] -= f * a[static_cast<std::size_t>(c) * cols_ + j];
    }
  }
  if (neg) d = -d;
  return Scalar::from_rational(d);
}

}  // namespace lefschetz
