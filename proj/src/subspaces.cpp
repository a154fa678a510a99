#include "kron/subspaces.hpp"

#include <algorithm>

#include "kron/error.hpp"
#include "kron/linalg.hpp"

namespace kron {

std::uint64_t gaussian_binomial(int n, int r, int q) {
  if (r < 0 || r > n) return 0;
  // Product formula (q^n - q^i) / (q^r - q^i); exact over the rationals,
  // evaluated as numerator/denominator of 64-bit products (small n only).
  __int128 num = 1, den = 1;
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t qr = 1;
  for (int i = 0; i < r; ++i) qr *= static_cast<std::uint64_t>(q);
  std::uint64_t qi = 1;
  for (int i = 0; i < r; ++i) {
    num *= (qn - qi);
    den *= (qr - qi);
    qi *= static_cast<std::uint64_t>(q);
  }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t subspace_total(int n, int q) {
  std::uint64_t s = 0;
  for (int r = 0; r <= n; ++r) s += gaussian_binomial(n, r, q);
  return s;
}

void for_each_subspace(const FieldPtr& f, int dim,
                       const std::function<void(const Matrix&)>& fn,
                       std::uint64_t bound) {
  if (bound > 0) {
    long double size = 1;
    for (int i = 0; i < dim; ++i) size *= f->q();
    if (size > static_cast<long double>(bound))
      throw Refusal("subspace enumeration refused: q^dim = q^" +
                    std::to_string(dim) + " over " + f->name() +
                    " exceeds bound " + std::to_string(bound));
  }
  const int q = f->q();
  for (int r = 0; r <= dim; ++r) {
    // pivot columns: combinations of {0..dim-1} of size r, lexicographic
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // free cells: (row i, col c) with c > piv[i], c not a pivot
      std::vector<std::pair<int, int>> free_cells;
      std::vector<bool> is_piv(dim, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < r; ++i)
        for (int c = piv[i] + 1; c < dim; ++c)
          if (!is_piv[c]) free_cells.emplace_back(i, c);

      std::vector<Scalar> digits(free_cells.size(), 0);
      while (true) {
        Matrix basis(f, r, dim);
        for (int i = 0; i < r; ++i) basis.set(i, piv[i], 1);
        for (std::size_t t = 0; t < free_cells.size(); ++t)
          basis.set(free_cells[t].first, free_cells[t].second, digits[t]);
        fn(basis);
        // odometer
        std::size_t t = 0;
        while (t < digits.size()) {
          if (++digits[t] < q) break;
          digits[t] = 0;
          ++t;
        }
        if (t == digits.size()) break;
      }

      // next pivot combination
      if (r == 0) break;
      int i = r - 1;
      while (i >= 0 && piv[i] == dim - r + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Matrix> all_subspaces(const FieldPtr& f, int dim,
                                  std::uint64_t bound) {
  std::vector<Matrix> out;
  for_each_subspace(f, dim, [&](const Matrix& b) { out.push_back(b); }, bound);
  return out;
}

Matrix reduce_mod(const Matrix& rref_basis, const Matrix& v) {
  const Field& F = *v.field();
  Matrix w = v;
  std::vector<int> piv = rref_pivots(rref_basis);
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
    Scalar c = w.at(0, piv[i]);
    if (c == 0) continue;
    for (int j = 0; j < w.cols(); ++j)
      w.set(0, j, F.sub(w.at(0, j), F.mul(c, rref_basis.at(i, j))));
  }
  return w;
}

bool span_contains(const Matrix& rref_basis, const Matrix& vs) {
  for (int r = 0; r < vs.rows(); ++r)
    if (!reduce_mod(rref_basis, vs.row(r)).is_zero()) return false;
  return true;
}

Matrix row_span(const Matrix& vs) {
  Matrix r = vs;
  int rk = row_reduce(r);
  Matrix out(vs.field(), rk, vs.cols());
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < vs.cols(); ++j) out.set(i, j, r.at(i, j));
  return out;
}

std::vector<int> rref_pivots(const Matrix& rref_basis) {
  std::vector<int> piv;
  for (int i = 0; i < rref_basis.rows(); ++i)
    for (int c = 0; c < rref_basis.cols(); ++c)
      if (rref_basis.at(i, c) != 0) {
        piv.push_back(c);
        break;
      }
  return piv;
}

Matrix echelon_complement(const Matrix& rref_basis, int dim) {
  std::vector<int> piv = rref_pivots(rref_basis);
  std::vector<bool> is_piv(dim, false);
  for (int c : piv) is_piv[c] = true;
  Matrix out(rref_basis.field(), dim - static_cast<int>(piv.size()), dim);
  int i = 0;
  for (int c = 0; c < dim; ++c)
    if (!is_piv[c]) out.set(i++, c, 1);
  return out;
}

}  // namespace kron
