#include <algorithm>
#include <set>

#include "doctest.h"
#include "kron/bgp.hpp"
#include "kron/error.hpp"
#include "kron/rep.hpp"
#include "kron/rng.hpp"
#include "kron/subspaces.hpp"
#include "kron/zoo.hpp"

using namespace kron;

namespace {

// Brute-force intertwiner count: enumerate every pair (f1, f2) and test the
// commuting condition directly. Independent of the solver.
std::uint64_t count_intertwiners(const KronRep& M, const KronRep& N) {
  const int q = M.field->q();
  const int cells1 = N.d1 * M.d1, cells2 = N.d2 * M.d2;
  std::uint64_t total = 1;
  for (int i = 0; i < cells1 + cells2; ++i) total *= q;
  std::uint64_t found = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    Matrix f1(M.field, N.d1, M.d1), f2(M.field, N.d2, M.d2);
    for (int i = 0; i < N.d1; ++i)
      for (int j = 0; j < M.d1; ++j) {
        f1.set(i, j, static_cast<Scalar>(c % q));
        c /= q;
      }
    for (int i = 0; i < N.d2; ++i)
      for (int j = 0; j < M.d2; ++j) {
        f2.set(i, j, static_cast<Scalar>(c % q));
        c /= q;
      }
    bool ok = true;
    for (int rho = 0; rho < M.n_arrows && ok; ++rho)
      ok = (f2 * M.mats[rho]) == (N.mats[rho] * f1);
    if (ok) ++found;
  }
  return found;
}

std::multiset<std::pair<int, int>> dim_multiset(const std::vector<KronRep>& parts) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& p : parts) out.insert({p.d1, p.d2});
  return out;
}

Matrix random_gl(SplitMix64& rng, const FieldPtr& f, int n) {
  const auto& list = gl_list(f, n);
  return list[rng.below(list.size())];
}

}  // namespace

TEST_CASE("hom dimensions match the brute-force oracle") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  KronRep S1 = build_S1(f2), S2 = build_S2(f2), P1 = build_P1(f2);

  // Oracle counts are q^dim.
  CHECK(count_intertwiners(S1, S2) == 1);  // only zero
  CHECK(hom_dim(S1, S2) == 0);

  CHECK(count_intertwiners(X, X) == 2);
  CHECK(end_dim(X) == 1);

  CHECK(count_intertwiners(P1, X) == 4);
  CHECK(hom_dim(P1, X) == 2);
}

TEST_CASE("hom from projectives equals the bilinear form") {
  // No extensions out of a projective, so hom dim = Euler form.
  FieldPtr f2 = Field::get(2, 1);
  KronRep P1 = build_P1(f2), S2 = build_S2(f2);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int d1 = 1 + static_cast<int>(rng.below(3));
    int d2 = 1 + static_cast<int>(rng.below(3));
    KronRep N = random_rep(rng, f2, 3, d1, d2);
    long long predicted = bilinear({1, 3}, {d1, d2});
    CHECK(hom_dim(P1, N) == predicted);
    CHECK(hom_dim(S2, N) == d2);  // bilinear((0,1),(d1,d2)) = d2
  }
}

TEST_CASE("hom field mismatch raises") {
  KronRep a = build_X(Field::get(2, 1));
  KronRep b = build_X(Field::get(3, 1));
  CHECK_THROWS_AS(hom_space(a, b), DomainError);
}

TEST_CASE("indecomposability") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(is_indecomposable(build_S1(f2)));
  CHECK(is_indecomposable(build_X(f2)));
  CHECK(!is_indecomposable(direct_sum(build_B(f2, 0), build_B(f2, 1))));
  CHECK(!is_indecomposable(zero_rep(f2, 3, 0, 0)));
}

TEST_CASE("scalar locality separates the quadratic-point modules") {
  // alpha = identity, beta = companion matrix of an irreducible quadratic:
  // indecomposable with endomorphisms forming the quadratic extension.
  FieldPtr f2 = Field::get(2, 1);
  KronRep m(f2, 3, 2, 2);
  m.mats[0] = Matrix::identity(f2, 2);
  m.mats[1] = Matrix::from_rows(f2, {{0, 1}, {1, 1}});
  CHECK(is_indecomposable(m));
  CHECK(!is_scalar_local(m));
  CHECK(end_dim(m) == 2);
  CHECK(is_scalar_local(build_X(f2)));
}

TEST_CASE("decompose") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  auto parts = decompose(X);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == X);

  auto twoS1 = decompose(direct_sum(build_S1(f2), build_S1(f2)));
  CHECK(twoS1.size() == 2);

  auto mixed = decompose(direct_sum(build_B(f2, 0), build_V(f2, 1, 2)));
  CHECK(dim_multiset(mixed) ==
        std::multiset<std::pair<int, int>>{{1, 1}, {2, 1}});

  CHECK(decompose(zero_rep(f2, 3, 0, 0)).empty());
}

TEST_CASE("decompose is stable under base change (Krull-Schmidt)") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep sum = direct_sum(build_B(f2, 0), build_V(f2, 1, 2));
  sum = direct_sum(sum, build_S2(f2));
  auto reference = dim_multiset(decompose(sum));
  SplitMix64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix g1 = random_gl(rng, f2, sum.d1);
    Matrix g2 = random_gl(rng, f2, sum.d2);
    KronRep conj = conjugate(sum, g1, g2);
    CHECK(dim_multiset(decompose(conj)) == reference);
  }
}

TEST_CASE("scans refuse instead of degrading when bounds are tight") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep zero22 = zero_rep(f2, 3, 2, 2);
  KronRep b_plus = direct_sum(build_B(f2, 0),
                              direct_sum(build_S1(f2), build_S2(f2)));
  REQUIRE(zero22.d1 == b_plus.d1);
  REQUIRE(zero22.d2 == b_plus.d2);
  // Not isomorphic and the hom space is too large for a 4-element scan.
  CHECK_THROWS_AS(is_isomorphic(zero22, b_plus, 4), Refusal);
  CHECK_THROWS_AS(decompose(zero22, 4), Refusal);
  CHECK_THROWS_AS(is_indecomposable(zero22, 4), Refusal);
}

TEST_CASE("isomorphism") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  CHECK(is_isomorphic(X, X));
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix g1 = random_gl(rng, f2, 2), g2 = random_gl(rng, f2, 2);
    CHECK(is_isomorphic(X, conjugate(X, g1, g2)));
  }
  CHECK(!is_isomorphic(X, build_nonelem_tree(f2, TreeVariant::Left)));
  CHECK(!is_isomorphic(X, build_Y(f2)));
  CHECK(is_isomorphic(zero_rep(f2, 3, 0, 0), zero_rep(f2, 3, 0, 0)));
}

TEST_CASE("arrow change") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  CHECK(arrow_change(X, Matrix::identity(f2, 3)) == X);

  // Swapping the two nilpotent arrows swaps the matrices.
  Matrix swap(f2, 3, 3);
  swap.set(0, 0, 1);
  swap.set(1, 2, 1);
  swap.set(2, 1, 1);
  KronRep swapped = arrow_change(X, swap);
  CHECK(swapped.mats[0] == X.mats[0]);
  CHECK(swapped.mats[1] == X.mats[2]);
  CHECK(swapped.mats[2] == X.mats[1]);

  CHECK_THROWS_AS(arrow_change(X, Matrix(f2, 3, 3)), DomainError);
}

TEST_CASE("arrow change is a group action") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep r2 = build_k2_regular_R(2, f2);
  for (const Matrix& g : gl_list(f2, 2))
    for (const Matrix& h : gl_list(f2, 2))
      CHECK(arrow_change(r2, g * h) == arrow_change(arrow_change(r2, h), g));

  FieldPtr f3 = Field::get(3, 1);
  SplitMix64 rng(55);
  KronRep m = random_rep(rng, f3, 3, 2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix g = random_gl(rng, f3, 3), h = random_gl(rng, f3, 3);
    CHECK(arrow_change(m, g * h) == arrow_change(arrow_change(m, h), g));
  }
}

TEST_CASE("arrow change is an equivalence: hom spaces are untouched") {
  // Twisting both sides by the same arrow base change never moves the hom
  // space; in particular End(arrow_change(M, g)) = End(M). (Twisting one
  // side does change it: B supported on arrow 0 and B supported on arrow 1
  // are an arrow swap apart yet admit no nonzero morphism.)
  FieldPtr f3 = Field::get(3, 1);
  SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    KronRep m = random_rep(rng, f3, 3, 2, 2);
    KronRep n = random_rep(rng, f3, 3, 2, 2);
    Matrix g = random_gl(rng, f3, 3);
    CHECK(hom_dim(arrow_change(m, g), arrow_change(n, g)) == hom_dim(m, n));
    CHECK(end_dim(arrow_change(m, g)) == end_dim(m));
  }
  FieldPtr f2 = Field::get(2, 1);
  CHECK(hom_dim(build_B(f2, 0), build_B(f2, 1)) == 0);
}

TEST_CASE("a-equivalence") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  SplitMix64 rng(31);
  Matrix g = random_gl(rng, f2, 3);
  auto w = a_equivalent(X, arrow_change(X, g));
  REQUIRE(w.has_value());
  CHECK(is_isomorphic(X, arrow_change(arrow_change(X, g), *w)));
  CHECK(!a_equivalent(X, build_Y(f2)).has_value());
  CHECK_THROWS_AS(a_equivalent(build_X(Field::get(5, 1)),
                               build_X(Field::get(5, 1))),
                  Refusal);
}

TEST_CASE("duality") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(is_isomorphic(dual(build_S1(f2)), build_S2(f2)));
  KronRep b = dual(build_B(f2, 0));
  CHECK(b.d1 == 1);
  CHECK(b.d2 == 1);
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    KronRep m = random_rep(rng, f2, 3, 1 + rng.below(3), 1 + rng.below(3));
    KronRep dd = dual(dual(m));
    CHECK(dd == m);  // transpose twice is literal identity
    K0Vec d = delta({m.d1, m.d2});
    CHECK(dual(m).d1 == d.x);
    CHECK(dual(m).d2 == d.y);
  }
}

TEST_CASE("generated submodules") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);

  SubmoduleHandle h = sub_generated(X, {{1, 0, 0, 0}});
  CHECK(h.b1.rows() == 1);
  CHECK(h.b2.rows() == 2);
  CHECK(is_submodule(X, h));

  // Every nonzero source vector generates total dimension 3.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (a == 0 && b == 0) continue;
      SubmoduleHandle g = sub_generated(
          X, {{static_cast<Scalar>(a), static_cast<Scalar>(b), 0, 0}});
      CHECK(g.b1.rows() + g.b2.rows() == 3);
    }

  SubmoduleHandle empty = sub_generated(X, {});
  CHECK(empty.b1.rows() == 0);
  CHECK(empty.b2.rows() == 0);
}

TEST_CASE("generated submodules close under arrows on the full (2,2) space") {
  FieldPtr f2 = Field::get(2, 1);
  for (std::uint64_t code = 0; code < 4096; ++code) {
    KronRep m(f2, 3, 2, 2);
    std::uint64_t c = code;
    for (int rho = 0; rho < 3; ++rho)
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
          m.mats[rho].set(r, col, static_cast<Scalar>(c & 1));
          c >>= 1;
        }
    for (int v = 1; v < 16; ++v) {
      std::vector<Scalar> gen{static_cast<Scalar>(v & 1),
                              static_cast<Scalar>((v >> 1) & 1),
                              static_cast<Scalar>((v >> 2) & 1),
                              static_cast<Scalar>((v >> 3) & 1)};
      CHECK(is_submodule(m, sub_generated(m, {gen})));
    }
  }
}

TEST_CASE("quotients") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  SubmoduleHandle zero{Matrix(f2, 0, 2), Matrix(f2, 0, 2)};
  CHECK(quotient(X, zero) == X);

  SubmoduleHandle lam = sub_generated(X, {{1, 0, 0, 0}});
  KronRep q = quotient(X, lam);
  CHECK(q.d1 == 1);
  CHECK(q.d2 == 0);
  CHECK(is_isomorphic(q, build_S1(f2)));

  // The central copy of X inside Y has semisimple quotient of length 2.
  KronRep Y = build_Y(f2);
  SubmoduleHandle xsub = sub_generated(Y, {{0, 1, 0, 0, 0, 0},
                                           {0, 0, 1, 0, 0, 0}});
  CHECK(xsub.b1.rows() == 2);
  CHECK(xsub.b2.rows() == 2);
  CHECK(is_isomorphic(sub_rep(Y, xsub), X));
  KronRep qy = quotient(Y, xsub);
  CHECK(is_isomorphic(qy, direct_sum(build_S1(f2), build_S1(f2))));

  // Non-closed handle is rejected.
  SubmoduleHandle bad{row_span(Matrix::identity(f2, 2)), Matrix(f2, 0, 2)};
  CHECK_THROWS_AS(quotient(X, bad), DomainError);
}

TEST_CASE("quotient representative independent of complement choice") {
  FieldPtr f3 = Field::get(3, 1);
  SplitMix64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    KronRep m = random_rep(rng, f3, 3, 2, 2);
    SubmoduleHandle h = sub_generated(
        m, {{static_cast<Scalar>(1 + rng.below(2)), static_cast<Scalar>(rng.below(3)),
             0, 0}});
    KronRep q = quotient(m, h);
    // Conjugating the ambient module leaves the quotient class unchanged.
    Matrix g1 = random_gl(rng, f3, 2), g2 = random_gl(rng, f3, 2);
    KronRep mc = conjugate(m, g1, g2);
    Matrix nb1 = row_span(h.b1 * g1.transposed());
    Matrix nb2 = row_span(h.b2 * g2.transposed());
    KronRep qc = quotient(mc, SubmoduleHandle{nb1, nb2});
    CHECK(is_isomorphic(q, qc));
  }
}

TEST_CASE("restriction to a 2-arrow subalgebra") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  KronRep nil = restrict_k2(X, {0, 1, 0}, {0, 0, 1});
  CHECK(nil.n_arrows == 2);
  CHECK(nil.mats[0] == X.mats[1]);
  CHECK(nil.mats[1] == X.mats[2]);

  KronRep withalpha = restrict_k2(X, {1, 0, 0}, {0, 1, 0});
  CHECK(rank(withalpha.mats[0]) == 2);

  CHECK(end_dim(restrict_k2(X, {0, 1, 0}, {0, 0, 1})) == 2);
  CHECK(end_dim(restrict_k2(X, {1, 0, 0}, {0, 1, 0})) == 2);
  CHECK(end_dim(restrict_k2(X, {1, 1, 0}, {0, 1, 1})) == 2);

  CHECK_THROWS_AS(restrict_k2(X, {1, 1, 0}, {1, 1, 0}), DomainError);
}

TEST_CASE("annihilators in the arrow space") {
  FieldPtr f2 = Field::get(2, 1);
  auto wb = faithful_annihilator(build_B(f2, 0));
  REQUIRE(wb.has_value());
  CHECK((*wb)[0] == 0);  // supported away from the active arrow

  CHECK(!faithful_annihilator(build_X(f2)).has_value());

  auto wz = faithful_annihilator(zero_rep(f2, 3, 1, 1));
  REQUIRE(wz.has_value());
  CHECK(((*wz)[0] != 0 || (*wz)[1] != 0 || (*wz)[2] != 0));
}
