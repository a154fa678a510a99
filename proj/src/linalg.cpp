#include "kron/linalg.hpp"

#include "kron/error.hpp"

namespace kron {

int row_reduce(Matrix& m, std::vector<int>* pivots) {
  const Field& F = *m.field();
  int rank = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) {
        Scalar t = m.at(rank, j);
        m.set(rank, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    Scalar s = F.inv(m.at(rank, c));
    for (int j = c; j < m.cols(); ++j) m.set(rank, j, F.mul(s, m.at(rank, j)));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      Scalar v = m.at(r, c);
      if (v == 0) continue;
      for (int j = c; j < m.cols(); ++j)
        m.set(r, j, F.sub(m.at(r, j), F.mul(v, m.at(rank, j))));
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

int rank(const Matrix& m) {
  Matrix c = m;
  return row_reduce(c);
}

Matrix kernel_basis(const Matrix& m) {
  const Field& F = *m.field();
  Matrix r = m;
  std::vector<int> pivots;
  int rk = row_reduce(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix out(m.field(), m.cols(), m.cols() - rk);
  int idx = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out.set(c, idx, 1);
    for (int i = 0; i < rk; ++i)
      out.set(pivots[i], idx, F.neg(r.at(i, c)));
    ++idx;
  }
  return out;
}

Matrix image_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots;
  row_reduce(r, &pivots);
  Matrix out(m.field(), m.rows(), static_cast<int>(pivots.size()));
  for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
    for (int i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, pivots[j]));
  return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw DomainError("solve: shape mismatch");
  Matrix aug = hstack({m, rhs});
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  // A pivot landing in the rhs block means inconsistency.
  for (int c : pivots)
    if (c >= m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      x.set(pivots[i], j, aug.at(i, m.cols() + j));
  return x;
}

std::pair<Matrix, int> cokernel_projection(const Matrix& m) {
  Matrix left_null = kernel_basis(m.transposed());  // rows x (rows-rank)
  return {left_null.transposed(), left_null.cols()};
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix aug = hstack({m, Matrix::identity(m.field(), m.rows())});
  std::vector<int> pivots;
  int rk = row_reduce(aug, &pivots);
  if (rk != m.rows()) return std::nullopt;
  for (int c : pivots)
    if (c >= m.cols()) return std::nullopt;
  Matrix out(m.field(), m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) out.set(i, j, aug.at(i, m.cols() + j));
  return out;
}

}  // namespace kron
