#include <set>

#include "doctest.h"
#include "kron/error.hpp"
#include "kron/linalg.hpp"
#include "kron/rng.hpp"
#include "kron/subspaces.hpp"
#include "kron/zoo.hpp"

using namespace kron;

namespace {

Matrix random_matrix(SplitMix64& rng, const FieldPtr& f, int r, int c) {
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.set(i, j, static_cast<Scalar>(rng.below(f->q())));
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(rank(Matrix::identity(f2, 2)) == 2);
  CHECK(rank(Matrix(f2, 3, 4)) == 0);
  // beta of the X module has a single nonzero entry
  KronRep x = build_X(f2);
  CHECK(rank(x.mats[1]) == 1);
}

TEST_CASE("kernel examples") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(kernel_basis(Matrix::identity(f2, 4)).cols() == 0);
  CHECK(kernel_basis(Matrix(f2, 1, 3)).cols() == 3);
  KronRep x = build_X(f2);
  Matrix stacked = hstack({x.mats[0], x.mats[1], x.mats[2]});
  REQUIRE(stacked.rows() == 2);
  REQUIRE(stacked.cols() == 6);
  CHECK(kernel_basis(stacked).cols() == 4);
}

TEST_CASE("kernel columns are independent solutions") {
  SplitMix64 rng(7);
  for (int p : {2, 3, 5}) {
    FieldPtr f = Field::get(p, 1);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix m = random_matrix(rng, f, 3, 5);
      Matrix ker = kernel_basis(m);
      CHECK((m * ker).is_zero());
      CHECK(rank(ker) == ker.cols());
      CHECK(rank(m) + ker.cols() == m.cols());
    }
  }
}

TEST_CASE("image basis spans the column space") {
  SplitMix64 rng(11);
  FieldPtr f = Field::get(3, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, f, 4, 3);
    Matrix img = image_basis(m);
    CHECK(img.cols() == rank(m));
    CHECK(rank(hstack({img, m})) == rank(m));
  }
}

TEST_CASE("solve round trip, 1000 seeded trials per field") {
  for (int p : {2, 3, 5, 7})
    for (int k : {1, 2, 3}) {
      FieldPtr f = Field::get(p, k);
      SplitMix64 rng(1000 + p * 10 + k);
      for (int trial = 0; trial < 1000; ++trial) {
        Matrix m = random_matrix(rng, f, 3, 4);
        Matrix x = random_matrix(rng, f, 4, 1);
        Matrix rhs = m * x;
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m * (*sol) == rhs);
      }
    }
}

TEST_CASE("solve reports inconsistency") {
  FieldPtr f = Field::get(2, 1);
  Matrix m(f, 2, 1);  // zero map
  Matrix rhs(f, 2, 1);
  rhs.set(0, 0, 1);
  CHECK(!solve(m, rhs).has_value());
}

TEST_CASE("cokernel examples") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(cokernel_projection(Matrix::identity(f2, 3)).second == 0);
  CHECK(cokernel_projection(Matrix(f2, 2, 1)).second == 2);
  // stacked column map of the source simple: empty map out of k
  KronRep s1 = build_S1(f2);
  Matrix stacked = vstack({s1.mats[0], s1.mats[1], s1.mats[2]});
  CHECK(stacked.rows() == 0);
  CHECK(cokernel_projection(stacked).second == 0);
}

TEST_CASE("cokernel projection kills the image") {
  SplitMix64 rng(23);
  FieldPtr f = Field::get(3, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(rng, f, 4, 2);
    auto [proj, dim] = cokernel_projection(m);
    CHECK(dim == m.rows() - rank(m));
    CHECK((proj * m).is_zero());
    CHECK(rank(proj) == dim);
  }
}

TEST_CASE("inverse") {
  SplitMix64 rng(31);
  FieldPtr f = Field::get(5, 1);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, f, 3, 3);
    auto inv = inverse(m);
    if (!inv) continue;
    ++found;
    CHECK((*inv) * m == Matrix::identity(f, 3));
    CHECK(m * (*inv) == Matrix::identity(f, 3));
  }
  CHECK(found > 10);
}

TEST_CASE("gaussian binomials against tuple counting") {
  // Count independent r-tuples and divide by |GL_r|.
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      FieldPtr f = Field::get(q, 1);
      for (int r = 0; r <= n; ++r) {
        std::uint64_t tuples = 0, glr = 0;
        std::uint64_t total = 1;
        for (int i = 0; i < n * r; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
          Matrix m(f, r, n);
          std::uint64_t c = code;
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) {
              m.set(i, j, static_cast<Scalar>(c % q));
              c /= q;
            }
          if (rank(m) == r) ++tuples;
        }
        std::uint64_t totr = 1;
        for (int i = 0; i < r * r; ++i) totr *= q;
        for (std::uint64_t code = 0; code < totr; ++code) {
          Matrix m(f, r, r);
          std::uint64_t c = code;
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
              m.set(i, j, static_cast<Scalar>(c % q));
              c /= q;
            }
          if (rank(m) == r) ++glr;
        }
        CHECK(gaussian_binomial(n, r, q) == tuples / (glr == 0 ? 1 : glr));
      }
    }
}

TEST_CASE("subspace enumeration counts") {
  FieldPtr f2 = Field::get(2, 1);
  FieldPtr f3 = Field::get(3, 1);
  CHECK(all_subspaces(f2, 0).size() == 1);
  CHECK(all_subspaces(f2, 2).size() == 5);
  CHECK(all_subspaces(f3, 4).size() == 212);  // 1 + 40 + 130 + 40 + 1
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    int p = (q == 4 || q == 8) ? 2 : (q == 9 ? 3 : q);
    int k = (q == 4 || q == 9) ? 2 : (q == 8 ? 3 : 1);
    FieldPtr f = Field::get(p, k);
    for (int dim = 0; dim <= 4; ++dim) {
      std::uint64_t count = 0;
      for_each_subspace(f, dim, [&](const Matrix&) { ++count; });
      CHECK(count == subspace_total(dim, q));
    }
  }
}

TEST_CASE("subspaces are canonical and distinct") {
  FieldPtr f3 = Field::get(3, 1);
  std::set<std::vector<Scalar>> seen;
  std::uint64_t count = 0;
  for_each_subspace(f3, 3, [&](const Matrix& b) {
    ++count;
    Matrix copy = b;
    row_reduce(copy);
    CHECK(copy == b);  // already reduced echelon
    std::vector<Scalar> key{static_cast<Scalar>(b.rows())};
    for (Scalar v : b.entries()) key.push_back(v);
    CHECK(seen.insert(key).second);
  });
  CHECK(count == subspace_total(3, 3));
}

TEST_CASE("subspace enumeration bound refusal") {
  FieldPtr f7 = Field::get(7, 3);
  CHECK_THROWS_AS(for_each_subspace(f7, 4, [](const Matrix&) {}, 1 << 20),
                  Refusal);
}

TEST_CASE("span helpers") {
  FieldPtr f2 = Field::get(2, 1);
  Matrix rows(f2, 2, 3);
  rows.set(0, 0, 1);
  rows.set(0, 2, 1);
  rows.set(1, 1, 1);
  Matrix span = row_span(rows);
  CHECK(span.rows() == 2);
  Matrix v(f2, 1, 3);
  v.set(0, 0, 1);
  v.set(0, 1, 1);
  v.set(0, 2, 1);
  CHECK(span_contains(span, v));
  Matrix w(f2, 1, 3);
  w.set(0, 2, 1);
  CHECK(!span_contains(span, w));
  Matrix comp = echelon_complement(span, 3);
  CHECK(comp.rows() == 1);
  CHECK(rank(vstack({span, comp})) == 3);
}
