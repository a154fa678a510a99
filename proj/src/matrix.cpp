#include "kron/matrix.hpp"

#include "kron/error.hpp"

namespace kron {

Matrix Matrix::identity(const Field* f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f,
                         std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw DomainError("ragged row list in Matrix::from_rows");
    int j = 0;
    for (int v : row) m.set(i, j++, static_cast<Scalar>(v % f->q()));
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (Scalar v : e_)
    if (v != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_->same_as(*o.f_) && e_ == o.e_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  const Field& F = *f_;
  Matrix out(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      Scalar a = at(i, t);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        Scalar prod = F.mul(a, o.at(t, j));
        out.set(i, j, F.add(out.at(i, j), prod));
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("matrix sum shape mismatch");
  Matrix out(f_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    out.e_[i] = f_->add(e_[i], o.e_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError("matrix difference shape mismatch");
  Matrix out(f_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    out.e_[i] = f_->sub(e_[i], o.e_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar c) const {
  Matrix out(f_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = f_->mul(c, e_[i]);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::col(int c) const {
  Matrix out(f_, rows_, 1);
  for (int i = 0; i < rows_; ++i) out.set(i, 0, at(i, c));
  return out;
}

Matrix Matrix::row(int r) const {
  Matrix out(f_, 1, cols_);
  for (int j = 0; j < cols_; ++j) out.set(0, j, at(r, j));
  return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DomainError("hstack of no blocks");
  int rows = blocks.front().rows();
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DomainError("hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(blocks.front().field(), rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) out.set(i, off + j, b.at(i, j));
    off += b.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DomainError("vstack of no blocks");
  int cols = blocks.front().cols();
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DomainError("vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(blocks.front().field(), rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) out.set(off + i, j, b.at(i, j));
    off += b.rows();
  }
  return out;
}

}  // namespace kron
