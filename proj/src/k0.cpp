#include "kron/k0.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "kron/error.hpp"

namespace kron {

DimVec::DimVec(long long x_, long long y_) : x(x_), y(y_) {
  if (x < 0 || y < 0) throw DomainError("DimVec entries must be non-negative");
}

K0Vec sigma_dim(K0Vec v) { return {3 * v.x - v.y, v.x}; }
K0Vec sigma_inv_dim(K0Vec v) { return {v.y, 3 * v.y - v.x}; }
K0Vec delta(K0Vec v) { return {v.y, v.x}; }

long long tits_q(K0Vec v) { return v.x * v.x + v.y * v.y - 3 * v.x * v.y; }

long long bilinear(K0Vec d, K0Vec e) {
  return d.x * e.x + d.y * e.y - 3 * d.x * e.y;
}

bool is_regular_dim(DimVec v) { return tits_q(v.k0()) < 0; }

bool in_fundamental_domain(DimVec v) {
  return 2 * v.x <= 3 * v.y && v.y <= v.x;
}

K0Vec apply_move(K0Vec v, Move m) {
  switch (m) {
    case Move::Sigma: return sigma_dim(v);
    case Move::SigmaInv: return sigma_inv_dim(v);
    case Move::Delta: return delta(v);
  }
  return v;
}

std::string move_name(Move m) {
  switch (m) {
    case Move::Sigma: return "sigma";
    case Move::SigmaInv: return "sigma_inv";
    case Move::Delta: return "delta";
  }
  return "";
}

ReduceResult reduce_to_F(DimVec v, int max_depth) {
  if (!is_regular_dim(v))
    throw DomainError("reduce_to_F requires a regular dimension vector");
  // Regular vectors stay strictly positive under the whole group action,
  // so intermediate states remain DimVecs.
  struct Node {
    K0Vec vec;
    int depth;
  };
  const Move order[3] = {Move::Delta, Move::SigmaInv, Move::Sigma};
  std::map<K0Vec, std::pair<K0Vec, Move>> parent;  // child -> (parent, move)
  K0Vec start = v.k0();
  if (in_fundamental_domain(v)) return {v, {}};
  std::deque<Node> queue{{start, 0}};
  parent[start] = {start, Move::Delta};
  while (!queue.empty()) {
    Node n = queue.front();
    queue.pop_front();
    if (n.depth >= max_depth)
      throw Refusal("reduce_to_F: search depth " + std::to_string(max_depth) +
                    " exhausted");
    for (Move m : order) {
      K0Vec w = apply_move(n.vec, m);
      if (parent.count(w)) continue;
      parent[w] = {n.vec, m};
      DimVec dw(w.x, w.y);
      if (in_fundamental_domain(dw)) {
        std::vector<Move> word;
        K0Vec cur = w;
        while (cur != start) {
          auto [p, mv] = parent[cur];
          word.push_back(mv);
          cur = p;
        }
        std::reverse(word.begin(), word.end());
        return {dw, word};
      }
      queue.push_back({w, n.depth + 1});
    }
  }
  throw Refusal("reduce_to_F: search space exhausted");
}

SigmaType sigma_type(DimVec v) {
  if (!is_regular_dim(v))
    throw DomainError("sigma_type requires a regular dimension vector");
  DimVec rep = reduce_to_F(v).representative;
  if (rep == DimVec(1, 1)) return SigmaType::Bristle;
  if (rep == DimVec(2, 2)) return SigmaType::XType;
  return SigmaType::None;
}

std::string sigma_type_name(SigmaType t) {
  switch (t) {
    case SigmaType::Bristle: return "bristle";
    case SigmaType::XType: return "x";
    case SigmaType::None: return "none";
  }
  return "";
}

bool exists_elementary_dim(DimVec v) {
  if (!is_regular_dim(v)) return false;
  long long q = tits_q(v.k0());
  return q == -1 || q == -4;
}

}  // namespace kron
