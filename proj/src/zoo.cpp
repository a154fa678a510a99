#include "kron/zoo.hpp"

#include <set>

#include "kron/bgp.hpp"
#include "kron/error.hpp"

namespace kron {

KronRep from_coeff_quiver(const CoeffQuiverSpec& spec, FieldPtr f) {
  if (spec.n_arrows != 2 && spec.n_arrows != 3)
    throw DomainError("coefficient quiver: n_arrows must be 2 or 3");
  if (spec.top < 0 || spec.bottom < 0)
    throw DomainError("coefficient quiver: negative vertex count");
  std::set<std::tuple<int, int, int>> seen;
  KronRep out(std::move(f), spec.n_arrows, spec.top, spec.bottom);
  for (const auto& e : spec.edges) {
    if (e.top_v < 0 || e.top_v >= spec.top || e.bottom_v < 0 ||
        e.bottom_v >= spec.bottom || e.arrow < 0 || e.arrow >= spec.n_arrows)
      throw DomainError("coefficient quiver: edge index out of range");
    if (!seen.insert({e.top_v, e.bottom_v, e.arrow}).second)
      throw DomainError("coefficient quiver: duplicate edge");
    out.mats[e.arrow].set(e.bottom_v, e.top_v, 1);
  }
  return out;
}

KronRep build_X(FieldPtr f) {
  // alpha = identity, beta(a,b) = (b,0), gamma(a,b) = (0,a)
  CoeffQuiverSpec s;
  s.top = 2;
  s.bottom = 2;
  s.edges = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 2}};
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_Y(FieldPtr f) {
  // Four top vertices; the central block (tops 1,2 over the two bottoms)
  // repeats the X pattern, the outer tops attach by gamma and beta.
  CoeffQuiverSpec s;
  s.top = 4;
  s.bottom = 2;
  s.edges = {{1, 0, 0}, {2, 1, 0},   // alpha verticals
             {2, 0, 1}, {3, 1, 1},   // beta
             {1, 1, 2}, {0, 0, 2}};  // gamma
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_B(FieldPtr f, int arrow) {
  if (arrow < 0 || arrow > 2) throw DomainError("build_B: arrow must be 0..2");
  CoeffQuiverSpec s;
  s.top = 1;
  s.bottom = 1;
  s.edges = {{0, 0, arrow}};
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_V(FieldPtr f, int arrow_i, int arrow_j) {
  if (arrow_i < 0 || arrow_i > 2 || arrow_j < 0 || arrow_j > 2 ||
      arrow_i == arrow_j)
    throw DomainError("build_V: need two distinct arrows in 0..2");
  CoeffQuiverSpec s;
  s.top = 2;
  s.bottom = 1;
  s.edges = {{0, 0, arrow_i}, {1, 0, arrow_j}};
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_S1(FieldPtr f) { return KronRep(std::move(f), 3, 1, 0); }
KronRep build_S2(FieldPtr f) { return KronRep(std::move(f), 3, 0, 1); }

KronRep build_P1(FieldPtr f) {
  CoeffQuiverSpec s;
  s.top = 1;
  s.bottom = 3;
  s.edges = {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}};
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_I(int i, FieldPtr f) {
  if (i < 0 || i > 10) throw DomainError("build_I: index must be 0..10");
  KronRep m = build_S1(std::move(f));
  for (int t = 0; t < i; ++t) m = sigma_rep(m);
  return m;
}

KronRep build_nonelem_tree(FieldPtr f, TreeVariant variant) {
  CoeffQuiverSpec s;
  s.top = 2;
  s.bottom = 2;
  if (variant == TreeVariant::Left) {
    // arrows alpha: u -> w1, beta: v -> w1, gamma: v -> w2
    s.edges = {{0, 0, 0}, {1, 0, 1}, {1, 1, 2}};
  } else {
    // arrows alpha: u -> w1, v -> w2; beta: v -> w1; gamma acts as zero
    s.edges = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}};
  }
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_example_M(FieldPtr f) {
  // Tops u1 u2 u3 over bottoms w1 w2 w3; the right four vertices carry the
  // X pattern, u1 hangs off by gamma and u2 maps left by beta.
  CoeffQuiverSpec s;
  s.top = 3;
  s.bottom = 3;
  s.edges = {{1, 1, 0}, {2, 2, 0},              // alpha
             {1, 0, 1}, {2, 1, 1},              // beta
             {0, 0, 2}, {1, 2, 2}};             // gamma
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_example_N(FieldPtr f) {
  // Tops u1..u4 over bottoms w1 w2 w3; tops u3, u4 over w2, w3 carry the X
  // pattern, the left tail attaches by beta and alpha.
  CoeffQuiverSpec s;
  s.top = 4;
  s.bottom = 3;
  s.edges = {{1, 0, 0}, {2, 1, 0}, {3, 2, 0},   // alpha
             {0, 0, 1}, {1, 1, 1}, {3, 1, 1},   // beta
             {2, 2, 2}};                        // gamma
  return from_coeff_quiver(s, std::move(f));
}

KronRep build_k2_regular_R(int t, FieldPtr f) {
  if (t < 1) throw DomainError("build_k2_regular_R: t must be >= 1");
  KronRep out(std::move(f), 2, t, t);
  for (int i = 0; i < t; ++i) out.mats[0].set(i, i, 1);
  for (int i = 1; i < t; ++i) out.mats[1].set(i - 1, i, 1);
  return out;
}

namespace {

std::vector<int> parse_args(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

KronRep build_by_name(const std::string& name, FieldPtr f) {
  std::string base = name, args;
  std::size_t colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    args = name.substr(colon + 1);
  }
  try {
    if (base == "X") return build_X(f);
    if (base == "Y") return build_Y(f);
    if (base == "S1") return build_S1(f);
    if (base == "S2") return build_S2(f);
    if (base == "P1") return build_P1(f);
    if (base == "M") return build_example_M(f);
    if (base == "N") return build_example_N(f);
    if (base == "B") {
      auto a = parse_args(args.empty() ? "0" : args);
      return build_B(f, a.at(0));
    }
    if (base == "V") {
      auto a = args.empty() ? std::vector<int>{1, 2} : parse_args(args);
      return build_V(f, a.at(0), a.at(1));
    }
    if (base == "I") {
      auto a = parse_args(args.empty() ? "0" : args);
      return build_I(a.at(0), f);
    }
    if (base == "R") {
      auto a = parse_args(args.empty() ? "1" : args);
      return build_k2_regular_R(a.at(0), f);
    }
    if (base == "T") {
      if (args == "left") return build_nonelem_tree(f, TreeVariant::Left);
      if (args == "right") return build_nonelem_tree(f, TreeVariant::Right);
      throw DomainError("T takes :left or :right");
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("bad parameter in zoo name: " + name);
  } catch (const std::out_of_range&) {
    throw DomainError("missing parameter in zoo name: " + name);
  }
  throw DomainError("unknown zoo name: " + name);
}

std::vector<std::pair<std::string, std::string>> zoo_catalog() {
  return {
      {"X", "(2,2) elementary form: invertible arrow plus two complementary nilpotents"},
      {"Y", "(4,2) elementary form, the shift image of X"},
      {"B:i", "(1,1) indecomposable supported on arrow i"},
      {"V:i,j", "(2,1) indecomposable with arrows i, j acting as coordinate projections"},
      {"S1", "(1,0) simple at the source (injective)"},
      {"S2", "(0,1) simple at the sink (projective)"},
      {"P1", "(1,3) indecomposable projective at the source"},
      {"I:i", "i-fold shift of S1: preinjective series (1,0), (3,1), (8,3), ..."},
      {"T:left", "(2,2) faithful tree module (not elementary)"},
      {"T:right", "(2,2) tree module annihilated by the third arrow (not elementary)"},
      {"M", "(3,3) regular module with two distinct elementary filtrations"},
      {"N", "(4,3) regular module with two distinct elementary filtrations"},
      {"R:t", "2-Kronecker regular module (t,t) with socle (k,k;1,0)"},
  };
}

}  // namespace kron
