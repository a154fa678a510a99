#include "doctest.h"
#include "kron/config.hpp"
#include "kron/error.hpp"
#include "kron/json_io.hpp"
#include "kron/rng.hpp"
#include "kron/zoo.hpp"

using namespace kron;

TEST_CASE("representation JSON round trip is bit exact") {
  SplitMix64 rng(5150);
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    FieldPtr f = Field::get(p, k);
    for (int trial = 0; trial < 10; ++trial) {
      int n = rng.below(2) ? 3 : 2;
      KronRep m = random_rep(rng, f, n, static_cast<int>(rng.below(4)),
                             static_cast<int>(rng.below(4)));
      Json j = rep_to_json(m);
      KronRep back = rep_from_json(j);
      CHECK(back == m);
      CHECK(rep_to_json(back) == j);
    }
  }
}

TEST_CASE("malformed representation JSON is rejected") {
  CHECK_THROWS_AS(rep_from_json(Json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS(rep_from_json(Json::parse("{\"p\":2}")), ParseError);
  CHECK_THROWS_AS(
      rep_from_json(Json::parse(
          R"({"p":2,"k":1,"n":3,"d":[1,1],"mats":[[[1]],[[0]]]})")),
      ParseError);  // wrong arrow count
  CHECK_THROWS_AS(
      rep_from_json(Json::parse(
          R"({"p":2,"k":1,"n":3,"d":[1,1],"mats":[[[2]],[[0]],[[0]]]})")),
      ParseError);  // entry out of range
  CHECK_THROWS_AS(
      rep_from_json(Json::parse(
          R"({"p":4,"k":1,"n":3,"d":[1,1],"mats":[[[1]],[[0]],[[0]]]})")),
      ParseError);  // 4 is not prime
  CHECK_THROWS_AS(
      rep_from_json(Json::parse(
          R"({"p":2,"k":1,"n":3,"d":[2,1],"mats":[[[1]],[[0]],[[0]]]})")),
      ParseError);  // ragged row
}

TEST_CASE("zoo catalog entries all serialize") {
  FieldPtr f2 = Field::get(2, 1);
  for (const std::string& name :
       {"X", "Y", "B:0", "V:1,2", "S1", "S2", "P1", "I:2", "T:left", "T:right",
        "M", "N", "R:2"}) {
    KronRep m = build_by_name(name, f2);
    CHECK(rep_from_json(rep_to_json(m)) == m);
  }
}

TEST_CASE("DOT output is stable") {
  FieldPtr f2 = Field::get(2, 1);
  CoeffQuiver q = coefficient_quiver(build_B(f2, 1));
  CHECK(coeff_quiver_dot(q) ==
        "digraph coeffquiver {\n"
        "  rankdir=TB;\n"
        "  t0 [shape=box,label=\"t0\"];\n"
        "  b0 [shape=circle,label=\"b0\"];\n"
        "  t0 -> b0 [label=\"1\"];\n"
        "}\n");
}

TEST_CASE("config round trip and validation") {
  Config c;
  c.subspace_bound = 12345;
  c.jobs = 3;
  c.sample_seed = 99;
  Config back = Config::parse(c.serialize());
  CHECK(back.serialize() == c.serialize());

  CHECK_THROWS_AS(Config::parse("nonsense"), ParseError);
  CHECK_THROWS_AS(Config::parse("unknown_key = 1"), ParseError);
  CHECK_THROWS_AS(Config::parse("jobs = 0"), ParseError);
  CHECK_THROWS_AS(Config::parse("jobs = abc"), ParseError);
  Config commented = Config::parse("# comment\n\njobs = 2\n");
  CHECK(commented.jobs == 2);
}
