#pragma once

#include "lefschetz/algebra.hpp"
#include "lefschetz/subspace.hpp"

namespace lefschetz {

enum class Verdict { pass, fail, inconclusive, degenerate };
const char* verdict_name(Verdict v);

// One row of a maximal-rank report: the map A_k -> A_{k+j} against the target
// rank min(HF(k), HF(k+j)), with the best rank seen over the sampled forms.
struct RankRecord {
  int k = 0;
  int j = 1;
  int hf_from = 0;
  int hf_to = 0;
  int target = 0;
  int best = 0;
  int trials_used = 0;
  Verdict verdict = Verdict::inconclusive;
};

struct LefschetzReport {
  std::vector<RankRecord> rows;
  Verdict overall = Verdict::inconclusive;
  std::uint64_t seed = 0;
  std::string note;  // set when a rational-backend verdict was certified symbolically
};

// Maximal rank of multiplication by a fresh random linear form at every degree
// k in [0, M-1]. A degree passes as soon as one sample meets the target. Over
// the rational backend a miss is settled exactly by the symbolic generic rank;
// over a prime field a miss stays inconclusive (sampling cannot refute
// genericity).
LefschetzReport wlp_check(const Algebra& a, int trials, std::uint64_t seed);

// Same for all powers L^j, j >= 1, k + j <= M.
LefschetzReport slp_check(const Algebra& a, int trials, std::uint64_t seed);

struct InjectivityReport {
  int k = 0;        // d - 1
  int target = 0;   // HF(d-1)
  int best = 0;
  int first_trial_rank = 0;
  int trials_used = 0;
  Verdict verdict = Verdict::inconclusive;
};

// Injectivity of mu_z : A_{d-1} -> A_d for random z (needs m >= 2 so that
// HF(d) >= HF(d-1)).
InjectivityReport injectivity_check(const Algebra& a, int trials, std::uint64_t seed);

// Q-side kernel fiber {Q in A_s : zQ = 0}, in A_s standard coordinates.
Subspace q_space(const Algebra& a, const ElementClass& z);

// z-side kernel fiber {w in A_1 : wQ = 0}, in A_1 standard coordinates.
// Defined for Q of any degree t with t + 1 <= M + 1.
Subspace z_space(const Algebra& a, const ElementClass& q);

// Harvested point of the incidence {zQ = 0} with its two fiber dimensions.
struct KernelPair {
  ElementClass z;  // degree 1
  ElementClass q;  // degree s (critical mode) or d-1 (injectivity mode)
  int q_dim = 0;   // dim {Q' : zQ' = 0} at the degree of q
  int z_dim = 0;   // dim {w : wq = 0}
};

enum class ScanGeometry { line, plane };
enum class ScanDegree { critical, injectivity };

struct LocusScan {
  std::vector<KernelPair> pairs;
  int hit_points = 0;              // scanned points with nonzero kernel
  std::vector<int> hits_per_sample;
  std::int64_t points_scanned = 0;
  bool exhaustive = true;          // false when a plane was point-sampled
  std::uint64_t seed = 0;
};

// Scans random pencils (lines) or nets (planes) of linear forms over F_p for
// points of the non-Lefschetz locus at the critical degree s, or at d-1 in
// injectivity mode. Lines are scanned exhaustively (p+1 points); planes are
// exhaustive only while p^2+p+1 fits the point budget, otherwise point-sampled.
// Prime backend only. Hits are ordered by scan index, then kernel basis index.
LocusScan locus_scan(const Algebra& a, ScanGeometry geometry, ScanDegree mode, int samples,
                     std::uint64_t seed, std::int64_t point_budget = 200000);

// dim coker(mu_Q : A_k -> A_{M-1}) == dim {w in A_1 : wQ = 0}, with
// k = M - deg(Q) - 1: the multiplication pairing makes the two maps mutually
// dual. Exact, no sampling. Rejects the zero class.
bool coker_duality_check(const Algebra& a, const ElementClass& q);

// All harvested nonzero classes Q of the critical degree satisfy
// dim z_space(Q) <= 2. Specific to m = 4, d = 2.
bool z_space_bound_check(const Algebra& a, const std::vector<KernelPair>& pairs);

struct InclusionReport {
  bool za1_in_kernel = false;  // asserted part: z_space(Q) A_1 lies in ker mu_Q
  int za1_dim = 0;
  bool q_squared_zero = false;  // reported, not asserted
};

// The unconditional kernel inclusion for a harvested pair at m = 4, d = 2.
InclusionReport kernel_inclusion_check(const Algebra& a, const KernelPair& pair);

struct PairSpanStats {
  int samples_used = 0;
  int min_image_dim = 0;
  int max_image_dim = 0;
  int max_intersection_dim = 0;
  int image_violations = 0;         // dim <z,w>A_1 < 2m-1
  int intersection_violations = 0;  // dim(<z,w>U* and I_2) > 2
  bool coordinate_equality = false; // some coordinate pair meets 2m-1 exactly
};

// Samples distinct pairs (z, w): every coordinate pair, locus points when the
// backend allows, then fresh random pairs, and accumulates the two exact
// bounds: image dimension >= 2m-1 and ideal-intersection dimension <= 2.
// Requires d = 2.
PairSpanStats pair_span_check(const Algebra& a, int samples, std::uint64_t seed);

// With V the m-dimensional space of linear forms vanishing at the given point,
// checks V * A_1 = A_2. Requires d = 2 and a nonzero point.
bool point_span_check(const Algebra& a, const std::vector<Scalar>& point);

struct ProductProbe {
  int kernel_dim = 0;
  int pairs_checked = 0;
  int zero_products = 0;
};

// For Q, Q' running over a kernel basis of q_space(z), reports whether QQ'
// vanishes in A_{2s}. Purely exploratory: nothing is asserted either way.
ProductProbe pair_product_probe(const Algebra& a, const ElementClass& z);

// Exact rank of mu_{L^j} : A_k -> A_{k+j} for symbolic L = sum a_i x_i, by
// fraction-free elimination over the polynomial ring in the a_i. This is the
// generic rank: it equals max_L rank over the algebraic closure.
int generic_rank(const Algebra& a, int k, int j);
int generic_rank(const Algebra& a, int k);

}  // namespace lefschetz
