#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "kron/field.hpp"

namespace kron {

// Dense row-major matrix over a small finite field. Zero-row and zero-column
// matrices are legal values; immutable use after construction is the norm.
// Fields are interned singletons (Field::get), so matrices reference them
// by plain pointer; hot loops churn matrix temporaries and must not touch
// a shared refcount.
class Matrix {
 public:
  Matrix(const Field* f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * cols, 0) {}
  Matrix(const FieldPtr& f, int rows, int cols) : Matrix(f.get(), rows, cols) {}

  static Matrix identity(const Field* f, int n);
  static Matrix identity(const FieldPtr& f, int n) { return identity(f.get(), n); }
  static Matrix from_rows(const FieldPtr& f,
                          std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field* field() const { return f_; }

  Scalar at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Scalar v) { e_[static_cast<std::size_t>(r) * cols_ + c] = v; }

  const std::vector<Scalar>& entries() const { return e_; }
  std::vector<Scalar>& entries() { return e_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar c) const;
  Matrix transposed() const;

  Matrix col(int c) const;
  Matrix row(int r) const;

 private:
  const Field* f_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

// Horizontal / vertical concatenation of equally shaped blocks.
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

}  // namespace kron
