#include "doctest.h"
#include "kron/error.hpp"
#include "kron/k0.hpp"
#include "kron/rng.hpp"

using namespace kron;

TEST_CASE("shift formulas") {
  CHECK(sigma_dim({2, 2}) == K0Vec{4, 2});
  CHECK(sigma_dim({1, 1}) == K0Vec{2, 1});
  CHECK(sigma_dim({0, 1}) == K0Vec{-1, 0});
  CHECK(sigma_inv_dim({4, 2}) == K0Vec{2, 2});
  CHECK(sigma_inv_dim({2, 1}) == K0Vec{1, 1});
  CHECK(sigma_inv_dim({3, 2}) == K0Vec{2, 3});
  CHECK(delta(K0Vec{3, 2}) == K0Vec{2, 3});
  CHECK(delta(K0Vec{5, 5}) == K0Vec{5, 5});
}

TEST_CASE("tits form and bilinear form") {
  CHECK(tits_q({1, 1}) == -1);
  CHECK(tits_q({4, 2}) == -4);
  CHECK(tits_q({1, 0}) == 1);
  CHECK(bilinear({1, 2}, {3, 1}) == 2);
  CHECK(bilinear({1, 3}, {2, 2}) == 2);
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    K0Vec v{static_cast<long long>(rng.below(199)) - 99,
            static_cast<long long>(rng.below(199)) - 99};
    CHECK(bilinear(v, v) == tits_q(v));
  }
}

TEST_CASE("regularity and fundamental domain membership") {
  CHECK(is_regular_dim(DimVec(1, 1)));
  CHECK(!is_regular_dim(DimVec(1, 0)));
  CHECK(is_regular_dim(DimVec(3, 2)));
  CHECK(tits_q({3, 2}) == -5);
  CHECK(in_fundamental_domain(DimVec(2, 2)));
  CHECK(!in_fundamental_domain(DimVec(4, 2)));
  CHECK(in_fundamental_domain(DimVec(3, 2)));
}

TEST_CASE("reduction into the fundamental domain") {
  auto r1 = reduce_to_F(DimVec(4, 2));
  CHECK(r1.representative == DimVec(2, 2));
  CHECK(r1.word == std::vector<Move>{Move::SigmaInv});

  auto r2 = reduce_to_F(DimVec(2, 3));
  CHECK(r2.representative == DimVec(3, 2));
  CHECK(r2.word == std::vector<Move>{Move::Delta});

  auto r3 = reduce_to_F(DimVec(13, 5));
  CHECK(r3.representative == DimVec(1, 1));
  CHECK(r3.word ==
        std::vector<Move>{Move::SigmaInv, Move::SigmaInv, Move::SigmaInv});

  CHECK_THROWS_AS(reduce_to_F(DimVec(1, 0)), DomainError);
}

TEST_CASE("reduction word replays onto the representative") {
  SplitMix64 rng(17);
  for (int i = 0; i < 300; ++i) {
    DimVec v(1 + static_cast<long long>(rng.below(60)),
             1 + static_cast<long long>(rng.below(60)));
    if (!is_regular_dim(v)) continue;
    auto r = reduce_to_F(v);
    K0Vec cur = v.k0();
    for (Move m : r.word) cur = apply_move(cur, m);
    CHECK(cur == r.representative.k0());
    CHECK(in_fundamental_domain(r.representative));
  }
}

TEST_CASE("sigma type") {
  CHECK(sigma_type(DimVec(2, 1)) == SigmaType::Bristle);
  CHECK(sigma_type(DimVec(4, 2)) == SigmaType::XType);
  CHECK(sigma_type(DimVec(3, 3)) == SigmaType::None);
  CHECK_THROWS_AS(sigma_type(DimVec(3, 1)), DomainError);
}

TEST_CASE("sigma type is constant along orbits") {
  SplitMix64 rng(29);
  int tested = 0;
  while (tested < 1000) {
    DimVec v(1 + static_cast<long long>(rng.below(30)),
             1 + static_cast<long long>(rng.below(30)));
    if (!is_regular_dim(v)) continue;
    ++tested;
    SigmaType t = sigma_type(v);
    K0Vec cur = v.k0();
    int len = static_cast<int>(rng.below(5));
    for (int i = 0; i < len; ++i) {
      Move m = static_cast<Move>(rng.below(3));
      cur = apply_move(cur, m);
    }
    CHECK(sigma_type(DimVec(cur.x, cur.y)) == t);
  }
}

TEST_CASE("elementary dimension vectors") {
  CHECK(exists_elementary_dim(DimVec(2, 2)));
  CHECK(!exists_elementary_dim(DimVec(3, 2)));
  CHECK(!exists_elementary_dim(DimVec(1, 0)));
}

TEST_CASE("q-invariance under the group, small box") {
  for (long long x = -40; x <= 40; ++x)
    for (long long y = -40; y <= 40; ++y) {
      K0Vec v{x, y};
      CHECK(tits_q(sigma_dim(v)) == tits_q(v));
      CHECK(tits_q(delta(v)) == tits_q(v));
      CHECK(sigma_inv_dim(sigma_dim(v)) == v);
      CHECK(sigma_dim(sigma_inv_dim(v)) == v);
    }
}

TEST_CASE("slope descent for regular vectors") {
  for (long long x = 1; x <= 60; ++x)
    for (long long y = 1; x + y <= 100; ++y) {
      DimVec v(x, y);
      if (!is_regular_dim(v)) continue;
      K0Vec s = sigma_dim(v.k0());
      REQUIRE(s.x > 0);
      CHECK(v.y * s.x > s.y * v.x);
    }
}

TEST_CASE("descent into regularity for deep fundamental-domain points") {
  // (x, y) in F with y >= 4 implies (x-1, y-2) is regular.
  for (long long x = 1; x <= 120; ++x)
    for (long long y = 4; x + y <= 200; ++y) {
      DimVec v(x, y);
      if (!in_fundamental_domain(v)) continue;
      CHECK(is_regular_dim(DimVec(x - 1, y - 2)));
    }
}
