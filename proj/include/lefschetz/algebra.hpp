#pragma once

#include <memory>
#include <optional>

#include "lefschetz/instance.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/subspace.hpp"

namespace lefschetz {

// Coefficient of t^k in ((1 - t^d) / (1 - t))^(m+1): the Hilbert function a
// complete intersection of m+1 degree-d forms must have.
std::int64_t koszul_hf(int m, int d, int k);

struct RegularityVerdict {
  bool regular = false;
  int witness_degree = -1;  // first degree where HF departs from the Koszul value
};

// Residue class in A_k, as coordinates over the standard monomial basis.
struct ElementClass {
  int degree = 0;
  std::vector<Scalar> coords;

  bool is_zero() const {
    for (const Scalar& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

// The graded quotient A = S/I, materialized degree by degree up to M+1.
//
// Per degree k it stores: the span I_k of the degree-k multiples of the
// generators, the standard monomials (non-pivot columns of the reduced span
// under graded-lex), and the projector taking an S^k coefficient vector to its
// unique normal-form coordinates on the standard monomials.
class Algebra {
 public:
  static Algebra build(const Instance& inst, int up_to = -1);  // default M+1

  const Instance& instance() const { return inst_; }
  const FieldSpec& field() const { return inst_.field(); }
  int m() const { return inst_.m(); }
  int d() const { return inst_.d(); }
  int socle_degree() const { return M_; }     // M = (m+1)(d-1)
  int critical_degree() const { return s_; }  // s = ceil(M/2) - 1
  int built_up_to() const { return up_to_; }

  int hf(int k) const;
  const MonomialIndexer& ambient_basis(int k) const;
  const Subspace& ideal(int k) const;
  const std::vector<Monomial>& std_basis(int k) const;
  const Matrix& projector(int k) const;

  RegularityVerdict regularity() const { return verdict_; }
  bool regular() const { return verdict_.regular; }

  // Normal-form coordinates of f on the standard basis of its degree.
  std::vector<Scalar> normal_form(const Poly& f) const;
  ElementClass class_of(const Poly& f) const;
  // Representative supported on the standard monomials.
  Poly lift(const ElementClass& e) const;
  ElementClass random_class(int k, Rng& rng) const;
  ElementClass random_nonzero_class(int k, Rng& rng) const;

  // Matrix of multiplication by f from A_k to A_{k+deg f}, in standard bases.
  Matrix mult_map(const Poly& f, int k) const;

  // Multiplication pairing A_k x A_{M-k} -> A_M = field; entry (i,j) is the
  // socle coordinate of std_k[i] * std_{M-k}[j]. Perfect iff A is Gorenstein,
  // which build() has verified through the Hilbert function when regular.
  Matrix duality_pairing(int k) const;

  // Whether mu_L: A_s -> A_{s+1}, written against dual bases through the
  // multiplication pairing, is a symmetric matrix. Needs M odd.
  bool symmetry_check(const Poly& L) const;

  // Coordinate of a*b in A_M (deg a + deg b = M).
  Scalar socle_coord(const Poly& a, const Poly& b) const;

 private:
  struct DegreeData {
    MonomialIndexer ambient;
    Subspace ideal;
    std::vector<Monomial> std_monomials;
    Matrix projector;
  };

  Algebra(Instance inst, int up_to);
  const DegreeData& deg(int k) const;

  Instance inst_;
  int M_, s_, up_to_;
  std::vector<DegreeData> degrees_;
  std::vector<int> hf_;
  RegularityVerdict verdict_;
};

// Decision by Hilbert-function comparison against the Koszul prediction
// through degree M+1 (a nonempty zero locus keeps every HF(A,k) >= 1, so any
// failure of regularity shows up by then).
RegularityVerdict is_regular_sequence(const Instance& inst);

}  // namespace lefschetz
