#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kron/matrix.hpp"

namespace kron {

// In-place reduction to reduced row echelon form. Returns the rank; if
// `pivots` is given it receives the pivot column indices in order.
int row_reduce(Matrix& m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

// Columns form a basis of the null space {x : m x = 0}; cols() - rank(m)
// of them, derived from the reduced echelon form (canonical).
Matrix kernel_basis(const Matrix& m);

// Columns of the input at its pivot positions: a basis of the column space.
Matrix image_basis(const Matrix& m);

// One solution X of m X = rhs (free variables set to zero), or nullopt when
// the system is inconsistent. Shapes must agree.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

// Surjection P from the codomain of m with kernel = image(m), together with
// the cokernel dimension rows(m) - rank(m).
std::pair<Matrix, int> cokernel_projection(const Matrix& m);

bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace kron
