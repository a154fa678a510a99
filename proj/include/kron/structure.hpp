#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kron/bgp.hpp"
#include "kron/rep.hpp"
#include "kron/zoo.hpp"

namespace kron {

// Visits every submodule (U1, U2) of M exactly once: for each subspace U1
// of the source, the span W of its arrow images is computed and every
// subspace of the sink containing W is paired with it. Refusal when the
// subspace enumeration bound is exceeded.
void enumerate_submodules(const KronRep& M,
                          const std::function<void(const SubmoduleHandle&)>& fn,
                          std::uint64_t subspace_bound = 1ull << 24);

std::vector<SubmoduleHandle> all_submodules(const KronRep& M,
                                            std::uint64_t subspace_bound = 1ull
                                                                           << 24);

// The raw quantifier: every submodule has a preprojective submodule side or
// a preinjective factor side. Assumes M is regular and nonzero.
bool elementary_criterion(const KronRep& M,
                          std::uint64_t subspace_bound = 1ull << 24);

// Checked front end: DomainError unless M is nonzero and regular.
bool is_elementary(const KronRep& M, std::uint64_t subspace_bound = 1ull << 24,
                   std::uint64_t decompose_bound = 1ull << 20);

// A proper nonzero submodule with regular submodule and regular factor, if
// one exists; absent exactly when M is elementary. Enumerates subspace
// pairs naively and classifies parts by full decomposition, so it shares no
// quantifier machinery with elementary_criterion.
std::optional<std::pair<SubmoduleHandle, KronRep>> nonelementarity_witness(
    const KronRep& M, std::uint64_t subspace_bound = 1ull << 24,
    std::uint64_t decompose_bound = 1ull << 20);

struct FiltrationChain {
  std::vector<SubmoduleHandle> steps;  // strictly ascending, first 0, last M
  std::vector<KronRep> factors;        // factors[i] = steps[i+1] / steps[i]
};

enum class FiltrationStrategy { MinSub, MaxSub };

// Chain with elementary factors. At every step the candidates are the
// submodules U strictly above the current term whose factor is elementary
// and whose remaining quotient M/U is regular; MinSub takes the candidate
// with the lexicographically smallest (dim, canonical key), MaxSub the
// largest proper one (the full module once nothing proper remains).
FiltrationChain elementary_filtration(const KronRep& M,
                                      FiltrationStrategy strategy,
                                      std::uint64_t subspace_bound = 1ull << 24,
                                      std::uint64_t decompose_bound = 1ull
                                                                      << 20);

bool validate_filtration(const KronRep& M, const FiltrationChain& chain);

// Scans source vectors (projectively) for one annihilated by some arrow
// vector; on success pads the generated submodule with sink vectors to a
// (1,2) handle. Requires n = 3 and 2 <= d2 <= d1 + 1. Absence is data: over
// a finite field an annihilating pair may simply not exist.
std::optional<SubmoduleHandle> find_u12(const KronRep& M);

// Constructive normal form for elementary (2,2) modules: basis of the
// source, annihilator arrows, corrected third arrow, rescalings. The
// returned base changes carry M exactly onto build_X. Absent only when an
// intermediate step degenerates, which cannot happen for scalar-local
// elementary input.
struct XNormalForm {
  Scalar kappa, nu;
  Matrix arrow_g;   // 3x3 arrow base change
  Matrix m1_basis;  // columns: new source basis
  Matrix m2_basis;  // columns: new sink basis
};
std::optional<XNormalForm> x_normal_form(const KronRep& M);

// Classification of indecomposable non-elementary (2,2) modules into the
// two tree forms, with base changes carrying M exactly onto
// build_nonelem_tree(variant).
struct NonelemNormalForm {
  TreeVariant variant;
  Matrix arrow_g, m1_basis, m2_basis;
};
std::optional<NonelemNormalForm> nonelem_normal_form(const KronRep& M);

// The representation written in the given bases: P2^{-1} M_rho P1.
KronRep in_bases(const KronRep& M, const Matrix& p1, const Matrix& p2);

struct CoeffQuiver {
  int top = 0, bottom = 0, n_arrows = 3;
  struct Edge {
    int top_v, bottom_v, arrow;
  };
  std::vector<Edge> edges;  // one per nonzero matrix entry
};

CoeffQuiver coefficient_quiver(const KronRep& M, const Matrix& p1,
                               const Matrix& p2, const Matrix& g);
CoeffQuiver coefficient_quiver(const KronRep& M);  // standard bases

// Connected and edge count = vertex count - 1 (multi-edges count).
bool is_tree(const CoeffQuiver& q);

// Exhaustive search for bases making the coefficient quiver a tree. Base
// changes are enumerated modulo diagonal rescalings, which never move a
// zero entry; the bound applies to the reduced candidate count.
struct TreeWitness {
  Matrix p1, p2, g;
};
std::optional<TreeWitness> tree_module_search(const KronRep& M,
                                              std::uint64_t bound = 10000000);

// End dimension of the restriction of M to each 2-dimensional arrow
// subspace (q^2 + q + 1 of them), with the subspace's echelon basis.
std::vector<std::pair<Matrix, int>> k2_restriction_profile(const KronRep& M);

// Checks the canonical inclusion of build_X into its t-fold shift: finds an
// injective morphism, forms the quotient, and compares it with the direct
// sum of doubled preinjectives I_0 ... I_{t-1}; also checks the dimension
// identity sigma^t(2,2) = (2,2) + sum_i 2 sigma^i(1,0).
struct ShiftTowerReport {
  int t = 0;
  DimVec shifted_dim;
  bool embedding_found = false;
  bool quotient_matches = false;
  bool dims_match = false;
  std::vector<DimVec> summand_dims;  // of the expected quotient pieces
  bool pass() const { return embedding_found && quotient_matches && dims_match; }
};
ShiftTowerReport verify_shift_tower(int t, FieldPtr f);

}  // namespace kron
