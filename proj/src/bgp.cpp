#include "kron/bgp.hpp"

#include "kron/error.hpp"

namespace kron {

KronRep sigma_rep(const KronRep& M) {
  const int n = M.n_arrows;
  Matrix stacked = hstack(M.mats);  // d2 x (n * d1)
  Matrix ker = kernel_basis(stacked);
  const int k = ker.cols();
  std::vector<Matrix> mats;
  for (int rho = 0; rho < n; ++rho) {
    Matrix proj(M.field, M.d1, k);
    for (int i = 0; i < M.d1; ++i)
      for (int j = 0; j < k; ++j) proj.set(i, j, ker.at(rho * M.d1 + i, j));
    mats.push_back(std::move(proj));
  }
  return KronRep(M.field, n, k, M.d1, std::move(mats));
}

KronRep sigma_inv_rep(const KronRep& M) {
  const int n = M.n_arrows;
  Matrix stacked = vstack(M.mats);  // (n * d2) x d1
  auto [proj, cokdim] = cokernel_projection(stacked);
  std::vector<Matrix> mats;
  for (int rho = 0; rho < n; ++rho) {
    Matrix block(M.field, cokdim, M.d2);
    for (int i = 0; i < cokdim; ++i)
      for (int j = 0; j < M.d2; ++j) block.set(i, j, proj.at(i, rho * M.d2 + j));
    mats.push_back(std::move(block));
  }
  return KronRep(M.field, n, M.d2, cokdim, std::move(mats));
}

KronRep tau_rep(const KronRep& M) { return sigma_rep(sigma_rep(M)); }
KronRep tau_inv_rep(const KronRep& M) {
  return sigma_inv_rep(sigma_inv_rep(M));
}

bool is_preprojective(const KronRep& M) {
  KronRep v = M;
  const long long max_steps = 2 * (M.total_dim() + 2);
  for (long long step = 0; step < max_steps; ++step) {
    if (v.total_dim() == 0) return true;
    KronRep w = sigma_rep(v);
    if (w.total_dim() >= v.total_dim()) return false;
    v = std::move(w);
  }
  return v.total_dim() == 0;
}

bool is_preinjective(const KronRep& M) {
  KronRep v = M;
  const long long max_steps = 2 * (M.total_dim() + 2);
  for (long long step = 0; step < max_steps; ++step) {
    if (v.total_dim() == 0) return true;
    KronRep w = sigma_inv_rep(v);
    if (w.total_dim() >= v.total_dim()) return false;
    v = std::move(w);
  }
  return v.total_dim() == 0;
}

bool is_regular_rep(const KronRep& M, std::uint64_t bound) {
  for (const KronRep& part : decompose(M, bound))
    if (is_preprojective(part) || is_preinjective(part)) return false;
  return true;
}

}  // namespace kron
