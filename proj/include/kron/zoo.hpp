#pragma once

#include <string>
#include <vector>

#include "kron/rep.hpp"

namespace kron {

// Description of a representation by its coefficient quiver: bipartite
// vertex sets (top = source basis, bottom = sink basis) and labeled edges;
// every listed edge becomes a matrix entry equal to 1.
struct CoeffQuiverSpec {
  int n_arrows = 3;
  int top = 0, bottom = 0;
  struct Edge {
    int top_v, bottom_v, arrow;
  };
  std::vector<Edge> edges;
};

KronRep from_coeff_quiver(const CoeffQuiverSpec& spec, FieldPtr f);

// The (2,2) module with an invertible arrow and two complementary nilpotent
// arrows; the unique elementary form at (2,2) up to arrow base change.
KronRep build_X(FieldPtr f);
// Its shift image: dimension vector (4,2), the elementary form there.
KronRep build_Y(FieldPtr f);
// Length-2 indecomposable supported on a single arrow.
KronRep build_B(FieldPtr f, int arrow);
// Length-3 indecomposable with simple socle, annihilated by the arrow not
// listed: arrows i, j act as the two coordinate projections.
KronRep build_V(FieldPtr f, int arrow_i, int arrow_j);

KronRep build_S1(FieldPtr f);
KronRep build_S2(FieldPtr f);
KronRep build_P1(FieldPtr f);
// i-fold shift of the injective simple: the preinjective series, dims
// (1,0), (3,1), (8,3), (21,8), ...
KronRep build_I(int i, FieldPtr f);

enum class TreeVariant { Left, Right };
// The two indecomposable non-elementary (2,2) forms: Left is faithful
// (three distinct arrows on a 3-edge tree), Right is annihilated by the
// third arrow (invertible + nilpotent pair).
KronRep build_nonelem_tree(FieldPtr f, TreeVariant variant);

// (3,3) and (4,3) regular modules with two genuinely different elementary
// filtrations each; used as filtration fixtures.
KronRep build_example_M(FieldPtr f);
KronRep build_example_N(FieldPtr f);

// Regular 2-Kronecker module of dimension (t, t) with simple regular socle
// (k, k; 1, 0): identity plus a nilpotent Jordan block. Its coefficient
// quiver is a path with 2t vertices.
KronRep build_k2_regular_R(int t, FieldPtr f);

// Name-based access for the CLI: "X", "Y", "B:0", "V:1,2", "S1", "S2",
// "P1", "I:3", "T:left", "T:right", "M", "N", "R:2".
KronRep build_by_name(const std::string& name, FieldPtr f);
std::vector<std::pair<std::string, std::string>> zoo_catalog();

}  // namespace kron
