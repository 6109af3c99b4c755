#pragma once

#include <optional>

#include "lefschetz/algebra.hpp"

namespace lefschetz {

// Macaulay inverse system machinery: the graded annihilator of I inside the
// dual polynomial ring S^*U (u-variables), its socle generator, and the
// certificates it supports.

// Ann(I_k) under the apolarity pairing, as a subspace of S^kU in the
// graded-lex u-monomial coordinates. dim = dim S^k - dim I_k.
Subspace annihilator(const Algebra& a, int k);

// Generator of the one-dimensional top slice Ann(I)_M, normalized so the
// graded-lex leading coefficient is 1. Requires a regular presentation.
Poly dual_socle_generator(const Algebra& a);

// Whether the span of all order-k partials of the socle generator equals
// Ann(I)_{M-k} (as canonical subspaces).
bool derivative_span_check(const Algebra& a, int k);

// Q(g): the operator Q applied to the socle generator. Zero iff the class of
// Q in A_{deg Q} is zero.
Poly apply_to_socle(const Algebra& a, const Poly& q);

struct VertexSpace {
  Subspace space;    // {z in U^*: dz(Q(g)) = 0}, in x-coordinates
  bool degenerate;   // Q(g) = 0, i.e. Q lies in the ideal
};

// Vertex space of the cone cut out by Q(g). Matches the multiplication kernel
// {z in A_1 : zQ = 0} computed algebraically (cross-checked in the tests).
VertexSpace vertex_space(const Algebra& a, const Poly& q);

// Whether p^d annihilates I_d, i.e. whether [p^d] lies in P(Ann(I_d)).
// Equivalent to p being a common zero of all generators.
bool veronese_certificate(const Instance& inst, const std::vector<Scalar>& point);

struct ZeroScan {
  std::optional<std::vector<std::uint64_t>> zero;  // normalized residues mod p'
  std::int64_t points_scanned = 0;
};

// Exhaustive search of P^m(F_p') for a common zero of the generators after
// coefficient reduction mod p'. A hit certifies non-regularity of the reduced
// system; absence proves nothing (heuristic probe). The first zero in the
// deterministic enumeration order wins.
ZeroScan common_zero_scan(const Instance& inst, std::uint64_t scan_prime,
                          std::int64_t budget = 2000000);

}  // namespace lefschetz
