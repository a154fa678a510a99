#pragma once

#include "kron/rep.hpp"

namespace kron {

// Shift functor: the source space of the image is the kernel of the stacked
// map [M_1 ... M_n] : M1^n -> M2, its sink space is M1, and the arrows are
// the block projections restricted to the kernel. On dimension vectors of
// indecomposables other than the sink simple this realizes sigma_dim.
// Defined on every representation; sink-simple summands are killed, so the
// output is fixed only up to isomorphism (downstream comparisons use
// is_isomorphic, never matrix equality).
KronRep sigma_rep(const KronRep& M);

// Inverse shift: sink space = cokernel of the stacked column map
// [M_1; ...; M_n] : M1 -> M2^n, source space = M2, arrows = the block
// restrictions of the cokernel projection.
KronRep sigma_inv_rep(const KronRep& M);

KronRep tau_rep(const KronRep& M);      // sigma applied twice
KronRep tau_inv_rep(const KronRep& M);  // inverse shift applied twice

// Whether iterated translation kills M. Preprojectives lose total dimension
// strictly at every shift, which both bounds the loop and allows an early
// exit as soon as the dimension fails to drop.
bool is_preprojective(const KronRep& M);
bool is_preinjective(const KronRep& M);

// No indecomposable summand is preprojective or preinjective. Needs a full
// decomposition; Refusal from the idempotent scan propagates.
bool is_regular_rep(const KronRep& M, std::uint64_t bound = 1ull << 20);

}  // namespace kron
