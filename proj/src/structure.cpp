#include "kron/structure.hpp"

#include <algorithm>
#include <tuple>

#include "kron/error.hpp"
#include "kron/subspaces.hpp"

namespace kron {

void enumerate_submodules(const KronRep& M,
                          const std::function<void(const SubmoduleHandle&)>& fn,
                          std::uint64_t subspace_bound) {
  std::vector<Matrix> sink_spaces = all_subspaces(M.field, M.d2, subspace_bound);
  for_each_subspace(
      M.field, M.d1,
      [&](const Matrix& b1) {
        // Span of all arrow images of U1.
        std::vector<Matrix> imgs;
        imgs.emplace_back(Matrix(M.field, 0, M.d2));
        for (int r = 0; r < b1.rows(); ++r) {
          Matrix u = b1.row(r).transposed();
          for (int rho = 0; rho < M.n_arrows; ++rho)
            imgs.push_back((M.mats[rho] * u).transposed());
        }
        Matrix w = row_span(vstack(imgs));
        for (const Matrix& b2 : sink_spaces) {
          if (b2.rows() < w.rows()) continue;
          if (!span_contains(b2, w)) continue;
          fn({b1, b2});
        }
      },
      subspace_bound);
}

std::vector<SubmoduleHandle> all_submodules(const KronRep& M,
                                            std::uint64_t subspace_bound) {
  std::vector<SubmoduleHandle> out;
  enumerate_submodules(M, [&](const SubmoduleHandle& h) { out.push_back(h); },
                       subspace_bound);
  return out;
}

bool elementary_criterion(const KronRep& M, std::uint64_t subspace_bound) {
  bool ok = true;
  enumerate_submodules(
      M,
      [&](const SubmoduleHandle& U) {
        if (!ok) return;
        long long usz = U.b1.rows() + U.b2.rows();
        if (usz == 0 || usz == M.total_dim()) return;  // trivial ends
        if (is_preprojective(sub_rep(M, U))) return;
        if (is_preinjective(quotient(M, U))) return;
        ok = false;
      },
      subspace_bound);
  return ok;
}

bool is_elementary(const KronRep& M, std::uint64_t subspace_bound,
                   std::uint64_t decompose_bound) {
  if (M.total_dim() == 0)
    throw DomainError("is_elementary: the zero module is not in scope");
  if (!is_regular_rep(M, decompose_bound))
    throw DomainError("is_elementary: input is not regular");
  return elementary_criterion(M, subspace_bound);
}

std::optional<std::pair<SubmoduleHandle, KronRep>> nonelementarity_witness(
    const KronRep& M, std::uint64_t subspace_bound,
    std::uint64_t decompose_bound) {
  if (M.total_dim() == 0)
    throw DomainError("nonelementarity_witness: the zero module is not in scope");
  if (!is_regular_rep(M, decompose_bound))
    throw DomainError("nonelementarity_witness: input is not regular");
  std::vector<Matrix> s1 = all_subspaces(M.field, M.d1, subspace_bound);
  std::vector<Matrix> s2 = all_subspaces(M.field, M.d2, subspace_bound);
  for (const Matrix& b1 : s1)
    for (const Matrix& b2 : s2) {
      SubmoduleHandle h{b1, b2};
      long long usz = b1.rows() + b2.rows();
      if (usz == 0 || usz == M.total_dim()) continue;
      if (!is_submodule(M, h)) continue;
      KronRep sub = sub_rep(M, h);
      KronRep quo = quotient(M, h);
      if (sub.total_dim() == 0 || quo.total_dim() == 0) continue;
      if (!is_regular_rep(sub, decompose_bound)) continue;
      if (!is_regular_rep(quo, decompose_bound)) continue;
      return std::make_pair(h, quo);
    }
  return std::nullopt;
}

namespace {

// Canonical entry vector of a representation computed in echelon bases;
// used to order filtration step candidates deterministically.
std::vector<int> rep_key(const KronRep& m) {
  std::vector<int> key;
  for (const Matrix& mat : m.mats)
    for (Scalar v : mat.entries()) key.push_back(v);
  return key;
}

// Rows of the inner handle expressed in the coordinates of the outer one.
SubmoduleHandle handle_in_sub(const SubmoduleHandle& outer,
                              const SubmoduleHandle& inner) {
  auto express = [](const Matrix& outer_rows, const Matrix& inner_rows) {
    auto c = solve(outer_rows.transposed(), inner_rows.transposed());
    if (!c) throw DomainError("filtration step: chain terms not nested");
    return row_span(c->transposed());
  };
  return {express(outer.b1, inner.b1), express(outer.b2, inner.b2)};
}

}  // namespace

FiltrationChain elementary_filtration(const KronRep& M,
                                      FiltrationStrategy strategy,
                                      std::uint64_t subspace_bound,
                                      std::uint64_t decompose_bound) {
  if (M.total_dim() == 0)
    throw DomainError("elementary_filtration: the zero module is not in scope");
  if (!is_regular_rep(M, decompose_bound))
    throw DomainError("elementary_filtration: input is not regular");

  FiltrationChain chain;
  SubmoduleHandle cur{Matrix(M.field, 0, M.d1), Matrix(M.field, 0, M.d2)};
  chain.steps.push_back(cur);

  while (cur.b1.rows() + cur.b2.rows() < M.total_dim()) {
    struct Candidate {
      SubmoduleHandle handle;
      KronRep factor;
      bool full;
      std::pair<int, int> dims;
      std::vector<int> factor_key, quotient_key, handle_key;
    };
    std::optional<Candidate> best;
    bool want_min = (strategy == FiltrationStrategy::MinSub);
    enumerate_submodules(
        M,
        [&](const SubmoduleHandle& U) {
          long long usz = U.b1.rows() + U.b2.rows();
          long long csz = cur.b1.rows() + cur.b2.rows();
          if (usz <= csz) return;
          if (!span_contains(U.b1, cur.b1) || !span_contains(U.b2, cur.b2))
            return;
          // factor = U / cur inside the subrepresentation on U
          KronRep subU = sub_rep(M, U);
          SubmoduleHandle inner = handle_in_sub(U, cur);
          KronRep factor = quotient(subU, inner);
          if (factor.total_dim() == 0) return;
          if (!is_regular_rep(factor, decompose_bound)) return;
          if (!elementary_criterion(factor, subspace_bound)) return;
          KronRep rest = quotient(M, U);
          if (usz < M.total_dim() && !is_regular_rep(rest, decompose_bound))
            return;
          Candidate cand{U,
                         factor,
                         usz == M.total_dim(),
                         {U.b1.rows(), U.b2.rows()},
                         rep_key(factor),
                         rep_key(rest),
                         {}};
          for (Scalar v : U.b1.entries()) cand.handle_key.push_back(v);
          for (Scalar v : U.b2.entries()) cand.handle_key.push_back(v);
          if (!best) {
            best = std::move(cand);
            return;
          }
          bool better;
          if (want_min) {
            // Smallest step: dimensions ascending, then the canonical
            // factor key.
            better = std::tie(cand.dims, cand.factor_key, cand.quotient_key,
                              cand.handle_key) <
                     std::tie(best->dims, best->factor_key, best->quotient_key,
                              best->handle_key);
          } else if (cand.full != best->full) {
            // Largest proper step; the full module only when nothing
            // proper qualifies.
            better = best->full;
          } else if (cand.dims != best->dims) {
            better = cand.dims > best->dims;
          } else {
            // Among equal dimensions prefer the step leaving the most
            // canonical remainder.
            better = std::tie(cand.quotient_key, cand.factor_key,
                              cand.handle_key) <
                     std::tie(best->quotient_key, best->factor_key,
                              best->handle_key);
          }
          if (better) best = std::move(cand);
        },
        subspace_bound);
    if (!best)
      throw DomainError("elementary_filtration: no admissible step found");
    chain.steps.push_back(best->handle);
    chain.factors.push_back(best->factor);
    cur = best->handle;
  }
  return chain;
}

bool validate_filtration(const KronRep& M, const FiltrationChain& chain) {
  if (chain.steps.empty()) return false;
  if (chain.steps.front().b1.rows() != 0 || chain.steps.front().b2.rows() != 0)
    return false;
  const SubmoduleHandle& last = chain.steps.back();
  if (last.b1.rows() != M.d1 || last.b2.rows() != M.d2) return false;
  if (chain.factors.size() + 1 != chain.steps.size()) return false;
  long long dim_sum1 = 0, dim_sum2 = 0;
  for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
    const SubmoduleHandle& a = chain.steps[i];
    const SubmoduleHandle& b = chain.steps[i + 1];
    if (!is_submodule(M, b)) return false;
    if (!span_contains(b.b1, a.b1) || !span_contains(b.b2, a.b2)) return false;
    long long asz = a.b1.rows() + a.b2.rows();
    long long bsz = b.b1.rows() + b.b2.rows();
    if (bsz <= asz) return false;
    const KronRep& f = chain.factors[i];
    if (f.total_dim() == 0) return false;
    if (f.d1 != b.b1.rows() - a.b1.rows() || f.d2 != b.b2.rows() - a.b2.rows())
      return false;
    if (!is_regular_rep(f)) return false;
    if (!elementary_criterion(f)) return false;
    dim_sum1 += f.d1;
    dim_sum2 += f.d2;
  }
  return dim_sum1 == M.d1 && dim_sum2 == M.d2;
}

namespace {

// Annihilator of a source vector inside the arrow space: kernel of
// a |-> (sum_i a_i M_i) u.
Matrix annihilator_of(const KronRep& M, const Matrix& u) {
  Matrix sys(M.field, M.d2, M.n_arrows);
  for (int i = 0; i < M.n_arrows; ++i) {
    Matrix img = M.mats[i] * u;
    for (int r = 0; r < M.d2; ++r) sys.set(r, i, img.at(r, 0));
  }
  return kernel_basis(sys);  // n x (dim Ann)
}

// sum_i avec_i M_i as a d2 x d1 matrix.
Matrix arrow_matrix(const KronRep& M, const Matrix& avec) {
  Matrix out(M.field, M.d2, M.d1);
  for (int i = 0; i < M.n_arrows; ++i) {
    Scalar c = avec.at(i, 0);
    if (c == 0) continue;
    out = out + M.mats[i].scaled(c);
  }
  return out;
}

Matrix apply_arrow_vector(const KronRep& M, const Matrix& avec,
                          const Matrix& u) {
  return arrow_matrix(M, avec) * u;
}

// Projective representatives: all vectors with first nonzero entry 1,
// in odometer order.
std::vector<Matrix> projective_vectors(const FieldPtr& f, int dim) {
  std::vector<Matrix> out;
  std::vector<Scalar> digits(dim, 0);
  const int q = f->q();
  auto next = [&]() {
    std::size_t t = 0;
    while (t < digits.size()) {
      if (++digits[t] < q) return true;
      digits[t] = 0;
      ++t;
    }
    return false;
  };
  while (next()) {
    int first = -1;
    for (int i = 0; i < dim; ++i)
      if (digits[i] != 0) {
        first = i;
        break;
      }
    if (first < 0 || digits[first] != 1) continue;
    Matrix v(f, dim, 1);
    for (int i = 0; i < dim; ++i) v.set(i, 0, digits[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<SubmoduleHandle> find_u12(const KronRep& M) {
  if (M.n_arrows != 3)
    throw DomainError("find_u12: input must be 3-Kronecker");
  if (!(2 <= M.d2 && M.d2 <= M.d1 + 1))
    throw DomainError("find_u12: requires 2 <= d2 <= d1 + 1");
  for (const Matrix& u : projective_vectors(M.field, M.d1)) {
    Matrix ann = annihilator_of(M, u);
    if (ann.cols() == 0) continue;
    // Lambda u, annihilated by the found arrow vector, has sink part of
    // dimension at most 2; pad with sink vectors to reach (1,2).
    std::vector<Scalar> gen(M.d1 + M.d2, 0);
    for (int i = 0; i < M.d1; ++i) gen[i] = u.at(i, 0);
    SubmoduleHandle h = sub_generated(M, {gen});
    Matrix b2 = h.b2;
    for (int c = 0; c < M.d2 && b2.rows() < 2; ++c) {
      Matrix e(M.field, 1, M.d2);
      e.set(0, c, 1);
      if (!span_contains(b2, e)) b2 = row_span(vstack({b2, e}));
    }
    return SubmoduleHandle{h.b1, b2};
  }
  return std::nullopt;
}

KronRep in_bases(const KronRep& M, const Matrix& p1, const Matrix& p2) {
  auto p2inv = inverse(p2);
  if (!p2inv || !is_invertible(p1))
    throw DomainError("in_bases: bases must be invertible");
  std::vector<Matrix> mats;
  for (const Matrix& m : M.mats) mats.push_back((*p2inv) * m * p1);
  return KronRep(M.field, M.n_arrows, M.d1, M.d2, std::move(mats));
}

std::optional<XNormalForm> x_normal_form(const KronRep& M) {
  if (M.n_arrows != 3 || M.d1 != 2 || M.d2 != 2)
    throw DomainError("x_normal_form: input must be a (2,2) 3-Kronecker module");
  if (!is_indecomposable(M))
    throw DomainError("x_normal_form: input must be indecomposable");
  if (!is_elementary(M))
    throw DomainError("x_normal_form: input must be elementary");
  const Field& F = *M.field;

  Matrix u(M.field, 2, 1), v(M.field, 2, 1);
  u.set(0, 0, 1);
  v.set(1, 0, 1);
  Matrix ann_u = annihilator_of(M, u);
  Matrix ann_v = annihilator_of(M, v);
  if (ann_u.cols() != 1 || ann_v.cols() != 1) return std::nullopt;
  Matrix beta = ann_u.col(0), gamma = ann_v.col(0);
  if (rank(hstack({beta, gamma})) != 2) return std::nullopt;

  Matrix w1 = apply_arrow_vector(M, beta, v);
  Matrix w2 = apply_arrow_vector(M, gamma, u);
  Matrix T = hstack({w1, w2});
  auto Tinv = inverse(T);
  if (!Tinv) return std::nullopt;

  // Third arrow: first standard vector off the span of the annihilators.
  Matrix alpha(M.field, 3, 1);
  for (int i = 0; i < 3; ++i) {
    Matrix cand(M.field, 3, 1);
    cand.set(i, 0, 1);
    if (rank(hstack({beta, gamma, cand})) == 3) {
      alpha = cand;
      break;
    }
  }

  Matrix au = (*Tinv) * apply_arrow_vector(M, alpha, u);
  Matrix av = (*Tinv) * apply_arrow_vector(M, alpha, v);
  Scalar kappa = au.at(0, 0), lambda = au.at(1, 0);
  Scalar mu = av.at(0, 0), nu = av.at(1, 0);
  if (kappa == 0 || nu == 0) return std::nullopt;

  // alpha' = alpha - mu beta - lambda gamma; beta' = kappa beta;
  // gamma' = nu gamma.
  Matrix g(M.field, 3, 3);
  for (int j = 0; j < 3; ++j) {
    g.set(0, j, F.sub(alpha.at(j, 0),
                      F.add(F.mul(mu, beta.at(j, 0)),
                            F.mul(lambda, gamma.at(j, 0)))));
    g.set(1, j, F.mul(kappa, beta.at(j, 0)));
    g.set(2, j, F.mul(nu, gamma.at(j, 0)));
  }

  XNormalForm out{kappa, nu, g, hstack({u, v}),
                  hstack({w1.scaled(kappa), w2.scaled(nu)})};
  return out;
}

std::optional<NonelemNormalForm> nonelem_normal_form(const KronRep& M) {
  if (M.n_arrows != 3 || M.d1 != 2 || M.d2 != 2)
    throw DomainError(
        "nonelem_normal_form: input must be a (2,2) 3-Kronecker module");
  if (!is_indecomposable(M))
    throw DomainError("nonelem_normal_form: input must be indecomposable");
  if (is_elementary(M))
    throw DomainError("nonelem_normal_form: input must not be elementary");
  const Field& F = *M.field;
  const int q = F.q();

  auto ann = faithful_annihilator(M);
  if (ann) {
    // Annihilated branch: a two-arrow module; bring the pair to
    // (identity, nilpotent Jordan).
    Matrix c(M.field, 3, 1);
    for (int i = 0; i < 3; ++i) c.set(i, 0, (*ann)[i]);
    Matrix a1(M.field, 3, 1), a2(M.field, 3, 1);
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
      for (int j = i + 1; j < 3 && !found; ++j) {
        Matrix e1(M.field, 3, 1), e2(M.field, 3, 1);
        e1.set(i, 0, 1);
        e2.set(j, 0, 1);
        if (rank(hstack({e1, e2, c})) == 3) {
          a1 = e1;
          a2 = e2;
          found = true;
        }
      }
    Matrix A = arrow_matrix(M, a1);
    Matrix B = arrow_matrix(M, a2);
    // Invertible pencil member x A + y B over projective pairs.
    std::optional<std::pair<Scalar, Scalar>> combo;
    for (int t = 0; t <= q && !combo; ++t) {
      Scalar x = (t == q) ? 0 : 1;
      Scalar y = (t == q) ? 1 : static_cast<Scalar>(t);
      Matrix cand = A.scaled(x) + B.scaled(y);
      if (is_invertible(cand)) combo = {x, y};
    }
    if (!combo) return std::nullopt;
    auto [x, y] = *combo;
    Scalar x2 = (x == 0) ? 1 : 0;
    Scalar y2 = (x == 0) ? 0 : 1;
    Matrix A2 = A.scaled(x) + B.scaled(y);
    Matrix B2 = A.scaled(x2) + B.scaled(y2);
    auto A2inv = inverse(A2);
    // Eigenvalue making the second member nilpotent of rank 1.
    std::optional<Scalar> lam;
    Matrix N(M.field, 2, 2);
    for (int l = 0; l < q && !lam; ++l) {
      Matrix cand = B2 - A2.scaled(static_cast<Scalar>(l));
      Matrix lin = (*A2inv) * cand;
      if (rank(cand) == 1 && (lin * lin).is_zero()) {
        lam = static_cast<Scalar>(l);
        N = cand;
      }
    }
    if (!lam) return std::nullopt;
    Matrix lin = (*A2inv) * N;
    Matrix ker = kernel_basis(lin);
    Matrix u0 = ker.col(0);
    Matrix v(M.field, 2, 1);
    for (int i = 0; i < 2; ++i) {
      Matrix e(M.field, 2, 1);
      e.set(i, 0, 1);
      if (rank(hstack({u0, e})) == 2) {
        v = e;
        break;
      }
    }
    // N v = a * A2 u0; rescale u so that N v = A2 u.
    Matrix z = N * v;
    Matrix w = A2 * u0;
    Scalar a = 0;
    for (int i = 0; i < 2; ++i)
      if (w.at(i, 0) != 0) {
        a = F.mul(z.at(i, 0), F.inv(w.at(i, 0)));
        break;
      }
    if (a == 0) return std::nullopt;
    Matrix u = u0.scaled(a);
    Matrix g(M.field, 3, 3);
    for (int j = 0; j < 3; ++j) {
      g.set(0, j, F.add(F.mul(x, a1.at(j, 0)), F.mul(y, a2.at(j, 0))));
      Scalar b2j = F.add(F.mul(x2, a1.at(j, 0)), F.mul(y2, a2.at(j, 0)));
      g.set(1, j, F.sub(b2j, F.mul(*lam, g.at(0, j))));
      g.set(2, j, c.at(j, 0));
    }
    Matrix p1 = hstack({u, v});
    Matrix p2 = hstack({A2 * u, A2 * v});
    return NonelemNormalForm{TreeVariant::Right, g, p1, p2};
  }

  // Faithful branch: find a source vector generating a (1,1) submodule.
  std::optional<Matrix> u;
  for (const Matrix& cand : projective_vectors(M.field, 2)) {
    Matrix imgs = hstack({M.mats[0] * cand, M.mats[1] * cand, M.mats[2] * cand});
    if (rank(imgs) == 1) {
      u = cand;
      break;
    }
  }
  if (!u) return std::nullopt;
  Matrix B_ann = annihilator_of(M, *u);  // 3 x 2
  if (B_ann.cols() != 2) return std::nullopt;
  std::optional<Matrix> v;
  Matrix alpha(M.field, 3, 1);
  for (const Matrix& cand : projective_vectors(M.field, 2)) {
    if (rank(hstack({*u, cand})) != 2) continue;
    Matrix a = annihilator_of(M, cand);
    if (a.cols() == 1) {
      v = cand;
      alpha = a.col(0);
      break;
    }
  }
  if (!v) return std::nullopt;
  Matrix Au = apply_arrow_vector(M, alpha, *u);
  if (Au.is_zero()) return std::nullopt;
  // beta in the annihilator plane of u with beta(v) = alpha(u).
  Matrix bv1 = apply_arrow_vector(M, B_ann.col(0), *v);
  Matrix bv2 = apply_arrow_vector(M, B_ann.col(1), *v);
  auto coeffs = solve(hstack({bv1, bv2}), Au);
  if (!coeffs) return std::nullopt;
  Matrix beta =
      B_ann.col(0).scaled(coeffs->at(0, 0)) + B_ann.col(1).scaled(coeffs->at(1, 0));
  Matrix gamma(M.field, 3, 1);
  for (int i = 0; i < 2; ++i) {
    if (rank(hstack({beta, B_ann.col(i)})) == 2) {
      gamma = B_ann.col(i);
      break;
    }
  }
  Matrix Cv = apply_arrow_vector(M, gamma, *v);
  Matrix p2 = hstack({Au, Cv});
  if (!is_invertible(p2)) return std::nullopt;
  Matrix g(M.field, 3, 3);
  for (int j = 0; j < 3; ++j) {
    g.set(0, j, alpha.at(j, 0));
    g.set(1, j, beta.at(j, 0));
    g.set(2, j, gamma.at(j, 0));
  }
  return NonelemNormalForm{TreeVariant::Left, g, hstack({*u, *v}), p2};
}

CoeffQuiver coefficient_quiver(const KronRep& M, const Matrix& p1,
                               const Matrix& p2, const Matrix& g) {
  KronRep changed = in_bases(arrow_change(M, g), p1, p2);
  CoeffQuiver out;
  out.top = M.d1;
  out.bottom = M.d2;
  out.n_arrows = M.n_arrows;
  for (int rho = 0; rho < M.n_arrows; ++rho)
    for (int r = 0; r < M.d2; ++r)
      for (int c = 0; c < M.d1; ++c)
        if (changed.mats[rho].at(r, c) != 0) out.edges.push_back({c, r, rho});
  return out;
}

CoeffQuiver coefficient_quiver(const KronRep& M) {
  return coefficient_quiver(M, Matrix::identity(M.field, M.d1),
                            Matrix::identity(M.field, M.d2),
                            Matrix::identity(M.field, M.n_arrows));
}

bool is_tree(const CoeffQuiver& q) {
  const int v = q.top + q.bottom;
  if (v == 0) return false;
  if (static_cast<int>(q.edges.size()) != v - 1) return false;
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v;
  for (const auto& e : q.edges) {
    int a = find(e.top_v), b = find(q.top + e.bottom_v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

namespace {

// Representatives of GL modulo right-multiplication by diagonal matrices:
// the first nonzero entry of every column is 1.
std::vector<Matrix> gl_column_classes(const FieldPtr& f, int n) {
  std::vector<Matrix> out;
  for (const Matrix& m : gl_list(f, n)) {
    bool canonical = true;
    for (int c = 0; c < n && canonical; ++c)
      for (int r = 0; r < n; ++r) {
        if (m.at(r, c) == 0) continue;
        canonical = (m.at(r, c) == 1);
        break;
      }
    if (canonical) out.push_back(m);
  }
  return out;
}

// Representatives modulo left-multiplication by diagonals: first nonzero
// entry of every row is 1.
std::vector<Matrix> gl_row_classes(const FieldPtr& f, int n) {
  std::vector<Matrix> out;
  for (const Matrix& m : gl_list(f, n)) {
    bool canonical = true;
    for (int r = 0; r < n && canonical; ++r)
      for (int c = 0; c < n; ++c) {
        if (m.at(r, c) == 0) continue;
        canonical = (m.at(r, c) == 1);
        break;
      }
    if (canonical) out.push_back(m);
  }
  return out;
}

}  // namespace

std::optional<TreeWitness> tree_module_search(const KronRep& M,
                                              std::uint64_t bound) {
  std::vector<Matrix> p1s = gl_column_classes(M.field, M.d1);
  std::vector<Matrix> p2s = gl_column_classes(M.field, M.d2);
  std::vector<Matrix> gs = gl_row_classes(M.field, M.n_arrows);
  std::uint64_t count = static_cast<std::uint64_t>(p1s.size()) * p2s.size() *
                        gs.size();
  if (count > bound)
    throw Refusal("tree_module_search refused: " + std::to_string(count) +
                  " base-change classes exceed bound " + std::to_string(bound));
  const int target_edges = M.d1 + M.d2 - 1;
  std::vector<Matrix> p2invs;
  p2invs.reserve(p2s.size());
  for (const Matrix& p2 : p2s) p2invs.push_back(*inverse(p2));

  for (const Matrix& g : gs) {
    KronRep changed = arrow_change(M, g);
    for (const Matrix& p1 : p1s) {
      std::vector<Matrix> right;
      right.reserve(M.n_arrows);
      for (int rho = 0; rho < M.n_arrows; ++rho)
        right.push_back(changed.mats[rho] * p1);
      for (std::size_t pi = 0; pi < p2s.size(); ++pi) {
        CoeffQuiver quiver;
        quiver.top = M.d1;
        quiver.bottom = M.d2;
        quiver.n_arrows = M.n_arrows;
        int edges = 0;
        bool over = false;
        for (int rho = 0; rho < M.n_arrows && !over; ++rho) {
          Matrix entry = p2invs[pi] * right[rho];
          for (int r = 0; r < M.d2 && !over; ++r)
            for (int c = 0; c < M.d1; ++c)
              if (entry.at(r, c) != 0) {
                if (++edges > target_edges) {
                  over = true;
                  break;
                }
                quiver.edges.push_back({c, r, rho});
              }
        }
        if (over) continue;
        if (is_tree(quiver)) return TreeWitness{p1, p2s[pi], g};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Matrix, int>> k2_restriction_profile(const KronRep& M) {
  if (M.n_arrows != 3)
    throw DomainError("k2_restriction_profile: input must be 3-Kronecker");
  std::vector<std::pair<Matrix, int>> out;
  for_each_subspace(M.field, 3, [&](const Matrix& b) {
    if (b.rows() != 2) return;
    std::vector<Scalar> v1(3), v2(3);
    for (int j = 0; j < 3; ++j) {
      v1[j] = b.at(0, j);
      v2[j] = b.at(1, j);
    }
    out.emplace_back(b, end_dim(restrict_k2(M, v1, v2)));
  });
  return out;
}

ShiftTowerReport verify_shift_tower(int t, FieldPtr f) {
  if (t < 1 || t > 3)
    throw DomainError("verify_shift_tower: t must be between 1 and 3");
  ShiftTowerReport report;
  report.t = t;
  KronRep X = build_X(f);
  KronRep T = X;
  for (int i = 0; i < t; ++i) T = sigma_rep(T);
  report.shifted_dim = T.dim();

  // Dimension identity in K0.
  K0Vec lhs = {2, 2};
  for (int i = 0; i < t; ++i) lhs = sigma_dim(lhs);
  K0Vec rhs = {2, 2};
  K0Vec s1 = {1, 0};
  for (int i = 0; i < t; ++i) {
    rhs.x += 2 * s1.x;
    rhs.y += 2 * s1.y;
    s1 = sigma_dim(s1);
  }
  report.dims_match = (lhs == rhs);

  // Injective morphism X -> sigma^t X: exhaustive scan of the hom space.
  std::vector<HomPair> hom = hom_space(X, T);
  const int q = f->q();
  std::vector<Scalar> coeff(hom.size(), 0);
  std::optional<HomPair> mono;
  auto advance = [&]() {
    std::size_t i = 0;
    while (i < coeff.size()) {
      if (++coeff[i] < q) return true;
      coeff[i] = 0;
      ++i;
    }
    return false;
  };
  while (advance()) {
    Matrix f1(f, T.d1, X.d1), f2(f, T.d2, X.d2);
    const Field& F = *f;
    for (std::size_t b = 0; b < hom.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (int r = 0; r < T.d1; ++r)
        for (int c = 0; c < X.d1; ++c)
          f1.set(r, c, F.add(f1.at(r, c), F.mul(coeff[b], hom[b].f1.at(r, c))));
      for (int r = 0; r < T.d2; ++r)
        for (int c = 0; c < X.d2; ++c)
          f2.set(r, c, F.add(f2.at(r, c), F.mul(coeff[b], hom[b].f2.at(r, c))));
    }
    if (rank(f1) == X.d1 && rank(f2) == X.d2) {
      mono = HomPair{f1, f2};
      break;
    }
  }
  if (!mono) return report;
  report.embedding_found = true;

  SubmoduleHandle image{row_span(mono->f1.transposed()),
                        row_span(mono->f2.transposed())};
  KronRep Q = quotient(T, image);

  std::vector<KronRep> pieces;
  KronRep I = build_S1(f);
  for (int i = 0; i < t; ++i) {
    pieces.push_back(I);
    pieces.push_back(I);
    I = sigma_rep(I);
  }
  KronRep D = pieces.front();
  report.summand_dims.push_back(pieces.front().dim());
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    D = direct_sum(D, pieces[i]);
    report.summand_dims.push_back(pieces[i].dim());
  }
  report.quotient_matches = is_isomorphic(Q, D, 1ull << 22);
  return report;
}

}  // namespace kron
