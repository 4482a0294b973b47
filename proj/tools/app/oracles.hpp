#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Reference computations that share no code with the library: plain integer
// matrices mod p, explicit formulas, and brute-force enumeration.
namespace projmon::app::oracle {

using IMat = std::vector<std::int64_t>;  // row-major n x n, entries in [0, p)

IMat mul(const IMat& a, const IMat& b, std::size_t n, std::int64_t p);

/// Size of the monoid generated by gens (identity included), or 0 past cap.
std::size_t closure_size(const std::vector<IMat>& gens, std::size_t n, std::int64_t p, std::size_t cap = 200000);

/// p_ij (e_i -> e_j) restricted to the sum-zero subspace of F^{n+1}, in the basis e_k - e_0.
std::vector<IMat> type_a_generators(std::size_t n, std::int64_t p);

/// Projection with kernel <k> and image <l> on F^2.
IMat projection2(std::int64_t k1, std::int64_t k2, std::int64_t l1, std::int64_t l2, std::int64_t p);

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

std::int64_t type_a_order(std::int64_t n, bool char2);
std::int64_t type_b_order(std::int64_t n, std::int64_t t);
std::int64_t gmpn_order(std::int64_t m, std::int64_t p, std::int64_t n);

/// Multiplicative order of a mod p.
std::int64_t order_mod(std::int64_t a, std::int64_t p);

/// Strongly connected tournaments on {0, .., v-1}, counted over all orientations.
std::size_t strongly_connected_tournaments(std::size_t v);

/// Maps {0..n} -> {0..n}: non-bijective ones, and defect-1 idempotents.
std::size_t non_bijective_maps(std::size_t n);
std::size_t defect_one_idempotents(std::size_t n);

/// Lines and planes of GF(p)^n (n <= 3) invariant under every matrix.
std::size_t invariant_proper_subspaces(const std::vector<IMat>& gens, std::size_t n, std::int64_t p);

/// Every invariant subspace of GF(p)^n (n <= 3) has an invariant complement.
bool completely_reducible(const std::vector<IMat>& gens, std::size_t n, std::int64_t p);

}  // namespace projmon::app::oracle
