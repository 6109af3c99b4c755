#pragma once

#include "lefschetz/algebra.hpp"

namespace lefschetz {

// Rank stratification of the degree-2 slice of the ideal: Gram matrices,
// random-sample histograms, pencil determinant profiles and rank-1 scans.

// Symmetric Gram matrix G with Q(x) = x^T G x. Off-diagonal entries are half
// the mixed coefficients (odd characteristic or rationals, which FieldSpec
// already guarantees).
Matrix gram(const Poly& q);
int quadric_rank(const Poly& q);

struct RankHistogram {
  std::vector<std::int64_t> counts;  // counts[r] = samples of rank r, r in [0, m+1]
  int samples = 0;
  bool anomaly = false;  // full-rank frequency below 1 - samples*(m+1)/p
};

// Gram ranks of random nonzero elements of I_2 (zero coefficient vectors are
// rejected and resampled). Requires d = 2.
RankHistogram stratum_sample(const Algebra& a, int samples, std::uint64_t seed);

struct PencilPoint {
  std::uint64_t lam = 0, mu = 0;  // residues of the point (lam : mu)
  int rank = 0;
};

struct PencilProfile {
  bool degenerate_pencil = false;  // determinant vanishes identically
  int pencil_rank = 0;             // max Gram rank along the pencil
  std::int64_t points_scanned = 0;
  bool via_roots = false;  // determinant root-finding path (large p)
  std::vector<PencilPoint> degenerate_points;  // rank below pencil_rank
};

// Rank profile of the pencil {lam Q1 + mu Q2}. For p <= enumeration_limit every
// point of P^1(F_p) is ranked directly; for larger p the degree-(m+1) pencil
// determinant is interpolated and only its roots are ranked (points off the
// root set have full rank exactly). Prime backend; Q1, Q2 must be independent
// members of I_2.
PencilProfile pencil_profile(const Algebra& a, const Poly& q1, const Poly& q2,
                             std::int64_t enumeration_limit = 4099);

// dim(<z,w>U* and I_2): the number of independent quadrics of I_2 through the
// codimension-2 plane {z = w = 0}. Always <= 2 for a complete intersection;
// the value 2 flags an extremal incidence. Requires d = 2 and independent z, w.
int incidence_dim(const Algebra& a, const ElementClass& z, const ElementClass& w);

struct RankOneScan {
  std::vector<std::vector<std::uint64_t>> hits;  // normalized F_p' coefficient vectors
  std::int64_t points_scanned = 0;
  bool exhaustive = true;
};

// Scans P(I_2)(F_p') for rank-1 members (squares of linear forms up to scalar).
// Exhaustive while the projective point count fits the budget, otherwise
// point-sampled. Requires d = 2.
RankOneScan veronese_scan(const Algebra& a, std::uint64_t small_prime, std::int64_t budget = 200000,
                          std::uint64_t seed = 0);

}  // namespace lefschetz
