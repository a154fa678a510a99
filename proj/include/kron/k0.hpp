#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kron {

// Element of K0 of the 3-Kronecker path algebra, identified with Z^2.
// Entries may be negative; DimVec below is the non-negative restriction.
struct K0Vec {
  long long x = 0, y = 0;
  bool operator==(const K0Vec& o) const { return x == o.x && y == o.y; }
  bool operator!=(const K0Vec& o) const { return !(*this == o); }
  bool operator<(const K0Vec& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

struct DimVec {
  long long x = 0, y = 0;
  DimVec() = default;
  DimVec(long long x_, long long y_);  // throws DomainError if negative
  K0Vec k0() const { return {x, y}; }
  bool operator==(const DimVec& o) const { return x == o.x && y == o.y; }
  bool operator!=(const DimVec& o) const { return !(*this == o); }
  bool operator<(const DimVec& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

// The shift on dimension vectors: (x, y) -> (3x - y, x).
K0Vec sigma_dim(K0Vec v);
// Its inverse: (x, y) -> (y, 3y - x).
K0Vec sigma_inv_dim(K0Vec v);
// Duality: component swap.
K0Vec delta(K0Vec v);

// Tits form x^2 + y^2 - 3xy; negative exactly on regular dimension vectors.
long long tits_q(K0Vec v);
// Euler bilinear form d1 e1 + d2 e2 - 3 d1 e2; bilinear(v, v) = tits_q(v).
long long bilinear(K0Vec d, K0Vec e);

bool is_regular_dim(DimVec v);

// Fundamental domain F = {(x, y) : 2x <= 3y and y <= x}.
bool in_fundamental_domain(DimVec v);

enum class Move { Sigma, SigmaInv, Delta };
K0Vec apply_move(K0Vec v, Move m);
std::string move_name(Move m);

struct ReduceResult {
  DimVec representative;
  std::vector<Move> word;  // applied left to right to the input
};

// Shortest word over {delta, sigma^-, sigma} (tried in that order) carrying
// a regular vector into F. BFS with memoization; depth capped at
// `max_depth`, exceeding it raises Refusal. Non-regular input: DomainError.
ReduceResult reduce_to_F(DimVec v, int max_depth = 64);

enum class SigmaType { Bristle, XType, None };

// Orbit type of a regular vector: Bristle if reduction lands on (1,1),
// XType if on (2,2), None otherwise.
SigmaType sigma_type(DimVec v);
std::string sigma_type_name(SigmaType t);

// True iff v is regular with Tits form -1 or -4: exactly the dimension
// vectors carrying an elementary module.
bool exists_elementary_dim(DimVec v);

}  // namespace kron
