#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kron/matrix.hpp"

namespace kron {

// Number of r-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(int n, int r, int q);

// Total number of subspaces of F_q^n (sum over all ranks).
std::uint64_t subspace_total(int n, int q);

// Visits every subspace of F_q^dim exactly once. Each subspace is handed
// over as its reduced row echelon basis (rank x dim matrix, rows = basis);
// this canonical form is the representative used for all dedup keys.
// Order: rank ascending, then pivot columns lexicographic, then free
// entries as a little-endian odometer. Throws Refusal if q^dim exceeds
// `bound` (0 disables the check).
void for_each_subspace(const FieldPtr& f, int dim,
                       const std::function<void(const Matrix&)>& fn,
                       std::uint64_t bound = 0);

// Convenience: all subspaces collected into a vector (small dims only).
std::vector<Matrix> all_subspaces(const FieldPtr& f, int dim,
                                  std::uint64_t bound = 0);

// Reduce `v` (1 x dim row) modulo the row span of the RREF basis.
Matrix reduce_mod(const Matrix& rref_basis, const Matrix& v);

// Whether the row span of `rref_basis` contains every row of `vs`.
bool span_contains(const Matrix& rref_basis, const Matrix& vs);

// Row span of `vs` in canonical form (RREF with zero rows dropped).
Matrix row_span(const Matrix& vs);

// Pivot columns of an RREF matrix.
std::vector<int> rref_pivots(const Matrix& rref_basis);

// Standard basis vectors (as rows) at the non-pivot columns: a complement
// of the row span inside F_q^dim.
Matrix echelon_complement(const Matrix& rref_basis, int dim);

}  // namespace kron
