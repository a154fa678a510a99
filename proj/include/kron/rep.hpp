#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kron/k0.hpp"
#include "kron/linalg.hpp"
#include "kron/matrix.hpp"
#include "kron/rng.hpp"

namespace kron {

// A representation of the n-Kronecker quiver, n in {2, 3}: two spaces of
// dimensions d1 (source) and d2 (sink) and n matrices of shape d2 x d1
// acting on column vectors of the source space.
struct KronRep {
  FieldPtr field;
  int n_arrows = 3;
  int d1 = 0, d2 = 0;
  std::vector<Matrix> mats;

  KronRep(FieldPtr f, int n, int d1_, int d2_);
  KronRep(FieldPtr f, int n, int d1_, int d2_, std::vector<Matrix> ms);

  DimVec dim() const { return DimVec(d1, d2); }
  long long total_dim() const { return d1 + d2; }
  bool is_zero_rep() const { return d1 == 0 && d2 == 0; }
  bool operator==(const KronRep& o) const;
};

// A morphism component pair: f1 : M1 -> N1 (e1 x d1), f2 : M2 -> N2
// (e2 x d2), satisfying f2 M_rho = N_rho f1 for every arrow.
struct HomPair {
  Matrix f1, f2;
};

// Submodule described by reduced-echelon row bases of U1 <= M1, U2 <= M2
// with every arrow image of U1 inside U2.
struct SubmoduleHandle {
  Matrix b1, b2;  // r1 x d1 and r2 x d2, rows = basis
  DimVec dim() const { return DimVec(b1.rows(), b2.rows()); }
};

KronRep zero_rep(FieldPtr f, int n, int d1, int d2);
KronRep direct_sum(const KronRep& a, const KronRep& b);
KronRep random_rep(SplitMix64& rng, FieldPtr f, int n, int d1, int d2);

// Basis of Hom(M, N) as intertwiner pairs; DomainError on field mismatch.
std::vector<HomPair> hom_space(const KronRep& M, const KronRep& N);
int hom_dim(const KronRep& M, const KronRep& N);
int end_dim(const KronRep& M);

// Structure of the endomorphism ring found by enumerating all q^dim(End)
// elements: idempotent count, invertible count, and whether it is local
// with residue field F_q.
struct EndScan {
  int dim = 0;
  std::uint64_t idempotents = 0;  // includes 0 and 1
  std::uint64_t units = 0;
  bool local = false;         // no idempotents besides 0, 1
  bool scalar_local = false;  // local and exactly q^(dim-1) non-units
};
EndScan scan_end(const KronRep& M, std::uint64_t bound);

// True iff the only idempotent endomorphisms are 0 and the identity,
// checked exhaustively. Refusal when q^dim(End) exceeds `bound`.
bool is_indecomposable(const KronRep& M, std::uint64_t bound = 1ull << 20);

// End(M) local with residue field F_q: every endomorphism is a scalar plus
// a nilpotent. The finite-field stand-in for geometric indecomposability.
bool is_scalar_local(const KronRep& M, std::uint64_t bound = 1ull << 20);

// Indecomposable direct summands, via recursive idempotent splitting.
// The zero representation decomposes into the empty list.
std::vector<KronRep> decompose(const KronRep& M, std::uint64_t bound = 1ull << 20);

// Exhaustive isomorphism test: dimension vectors agree and some element of
// Hom(M, N) has both components invertible. A seeded random pre-pass finds
// witnesses early; absence is certified by full enumeration (Refusal if
// q^dim(Hom) exceeds `bound` and no witness was found).
bool is_isomorphic(const KronRep& M, const KronRep& N,
                   std::uint64_t bound = 1ull << 20);

// Base change in the arrow space: mats'_i = sum_j g_ij mats_j. The matrix g
// must be invertible n x n over the same field.
KronRep arrow_change(const KronRep& M, const Matrix& g);

// Base change in the module spaces: N_rho = g2 M_rho g1^{-1}, i.e. (g1, g2)
// is an isomorphism M -> result.
KronRep conjugate(const KronRep& M, const Matrix& g1, const Matrix& g2);

// Searches GL_n(F_q) for g with arrow_change(N, g) isomorphic to M.
// Feasible for q <= 4 (n = 3); larger fields are refused.
std::optional<Matrix> a_equivalent(const KronRep& M, const KronRep& N,
                                   std::uint64_t iso_bound = 1ull << 20);

KronRep dual(const KronRep& M);

// Smallest arrow-closed pair containing the generators; each generator is a
// length d1 + d2 coordinate vector. One application of the arrows suffices.
SubmoduleHandle sub_generated(const KronRep& M,
                              const std::vector<std::vector<Scalar>>& gens);

// Handle built from spanning sets (rows); closes U2 under nothing -- caller
// guarantees closure, which is_submodule can verify.
SubmoduleHandle make_handle(const KronRep& M, const Matrix& rows1,
                            const Matrix& rows2);

bool is_submodule(const KronRep& M, const SubmoduleHandle& U);

// The representation carried by a submodule, in the handle's basis.
KronRep sub_rep(const KronRep& M, const SubmoduleHandle& U);

// Factor representation M/U in the echelon-complement basis.
KronRep quotient(const KronRep& M, const SubmoduleHandle& U);

// Restriction to the 2-Kronecker subalgebra spanned by two independent
// arrow-space vectors (n = 3 input).
KronRep restrict_k2(const KronRep& M, const std::vector<Scalar>& b1,
                    const std::vector<Scalar>& b2);

// A nonzero arrow-space vector annihilating M, if any (n = 3).
std::optional<std::vector<Scalar>> faithful_annihilator(const KronRep& M);

// All invertible n x n matrices over f, ordered by entry encoding. Cached.
const std::vector<Matrix>& gl_list(const FieldPtr& f, int n);

}  // namespace kron
