#include "doctest.h"
#include "kron/bgp.hpp"
#include "kron/census.hpp"
#include "kron/k0.hpp"
#include "kron/zoo.hpp"

using namespace kron;

TEST_CASE("shift of the simples") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(sigma_rep(build_S2(f2)).total_dim() == 0);

  KronRep s1s = sigma_rep(build_S1(f2));
  CHECK(s1s.d1 == 3);
  CHECK(s1s.d2 == 1);

  CHECK(sigma_inv_rep(build_S1(f2)).total_dim() == 0);

  KronRep p = sigma_inv_rep(build_S2(f2));
  CHECK(p.d1 == 1);
  CHECK(p.d2 == 3);
  CHECK(is_isomorphic(p, build_P1(f2)));
}

TEST_CASE("shift of X is Y") {
  for (int q : {2, 3}) {
    FieldPtr f = Field::get(q, 1);
    KronRep sx = sigma_rep(build_X(f));
    CHECK(sx.d1 == 4);
    CHECK(sx.d2 == 2);
    CHECK(is_isomorphic(sx, build_Y(f)));
  }
}

TEST_CASE("round trips on regular modules") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep X = build_X(f2);
  CHECK(is_isomorphic(sigma_inv_rep(sigma_rep(X)), X));
  CHECK(is_isomorphic(sigma_rep(sigma_inv_rep(X)), X));
  KronRep B = build_B(f2, 1);
  CHECK(is_isomorphic(sigma_inv_rep(sigma_rep(B)), B));
}

TEST_CASE("translate") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(tau_rep(build_P1(f2)).total_dim() == 0);
  KronRep tx = tau_rep(build_X(f2));
  CHECK(tx.d1 == 10);
  CHECK(tx.d2 == 4);
  CHECK(tau_inv_rep(build_S1(f2)).total_dim() == 0);
}

TEST_CASE("preprojective / preinjective predicates") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(is_preprojective(build_S2(f2)));
  CHECK(is_preprojective(build_P1(f2)));
  CHECK(!is_preprojective(build_X(f2)));
  CHECK(is_preinjective(build_S1(f2)));
  for (int i = 0; i <= 4; ++i) CHECK(is_preinjective(build_I(i, f2)));
  CHECK(!is_preinjective(build_B(f2, 0)));
  // zero module is both
  CHECK(is_preprojective(zero_rep(f2, 3, 0, 0)));
  CHECK(is_preinjective(zero_rep(f2, 3, 0, 0)));
}

TEST_CASE("regular predicate") {
  FieldPtr f2 = Field::get(2, 1);
  CHECK(is_regular_rep(build_X(f2)));
  CHECK(!is_regular_rep(direct_sum(build_X(f2), build_S1(f2))));
  CHECK(is_regular_rep(direct_sum(build_B(f2, 0), build_B(f2, 1))));
}

TEST_CASE("dimension coherence on the small censuses") {
  FieldPtr f2 = Field::get(2, 1);
  for (DimVec d : {DimVec(1, 1), DimVec(2, 1)}) {
    enumerate_reps(d, f2,
                   [&](std::uint64_t, const KronRep& m) {
                     if (!is_indecomposable(m)) return;
                     KronRep s = sigma_rep(m);
                     K0Vec expect = sigma_dim({m.d1, m.d2});
                     CHECK(s.d1 == expect.x);
                     CHECK(s.d2 == expect.y);
                     CHECK(is_isomorphic(sigma_inv_rep(s), m));
                     // exactly one of the three classes
                     int flags = (is_preprojective(m) ? 1 : 0) +
                                 (is_preinjective(m) ? 1 : 0) +
                                 (is_regular_rep(m) ? 1 : 0);
                     CHECK(flags == 1);
                   },
                   1 << 20);
  }
}

TEST_CASE("the shift works for 2-arrow representations too") {
  FieldPtr f2 = Field::get(2, 1);
  KronRep r = build_k2_regular_R(2, f2);
  KronRep s = sigma_rep(r);
  CHECK(s.d1 == 2);  // 2x - y on (2,2) for the 2-arrow form
  CHECK(s.d2 == 2);
  CHECK(is_regular_rep(r));
  CHECK(!is_preprojective(r));
  // 2-arrow preprojective chain member (1,2)
  KronRep pre(f2, 2, 1, 2);
  pre.mats[0].set(0, 0, 1);
  pre.mats[1].set(1, 0, 1);
  CHECK(is_preprojective(pre));
  CHECK(!is_preinjective(pre));
}
