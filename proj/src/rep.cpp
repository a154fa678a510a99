#include "kron/rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "kron/error.hpp"
#include "kron/subspaces.hpp"

namespace kron {

namespace {

// q^e compared against a bound without overflow.
bool power_within(int q, int e, std::uint64_t bound) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > bound / static_cast<std::uint64_t>(q)) return false;
    v *= static_cast<std::uint64_t>(q);
  }
  return v <= bound;
}

std::uint64_t power_u64(int q, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) v *= static_cast<std::uint64_t>(q);
  return v;
}

// Linear combination of hom basis pairs with the given coefficients.
HomPair combine(const std::vector<HomPair>& basis,
                const std::vector<Scalar>& coeff, const FieldPtr& f, int e1,
                int d1, int e2, int d2) {
  Matrix f1(f, e1, d1), f2(f, e2, d2);
  const Field& F = *f;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    Scalar c = coeff[t];
    if (c == 0) continue;
    for (int i = 0; i < e1; ++i)
      for (int j = 0; j < d1; ++j)
        f1.set(i, j, F.add(f1.at(i, j), F.mul(c, basis[t].f1.at(i, j))));
    for (int i = 0; i < e2; ++i)
      for (int j = 0; j < d2; ++j)
        f2.set(i, j, F.add(f2.at(i, j), F.mul(c, basis[t].f2.at(i, j))));
  }
  return {std::move(f1), std::move(f2)};
}

bool odometer_next(std::vector<Scalar>& digits, int q) {
  std::size_t t = 0;
  while (t < digits.size()) {
    if (++digits[t] < q) return true;
    digits[t] = 0;
    ++t;
  }
  return false;
}

}  // namespace

KronRep::KronRep(FieldPtr f, int n, int d1_, int d2_)
    : field(std::move(f)), n_arrows(n), d1(d1_), d2(d2_) {
  if (n != 2 && n != 3) throw DomainError("KronRep: n_arrows must be 2 or 3");
  if (d1 < 0 || d2 < 0) throw DomainError("KronRep: negative dimension");
  for (int i = 0; i < n; ++i) mats.emplace_back(field, d2, d1);
}

KronRep::KronRep(FieldPtr f, int n, int d1_, int d2_, std::vector<Matrix> ms)
    : field(std::move(f)), n_arrows(n), d1(d1_), d2(d2_), mats(std::move(ms)) {
  if (n != 2 && n != 3) throw DomainError("KronRep: n_arrows must be 2 or 3");
  if (static_cast<int>(mats.size()) != n)
    throw DomainError("KronRep: arrow count mismatch");
  for (const Matrix& m : mats)
    if (m.rows() != d2 || m.cols() != d1 || !m.field()->same_as(*field))
      throw DomainError("KronRep: matrix shape or field mismatch");
}

bool KronRep::operator==(const KronRep& o) const {
  return n_arrows == o.n_arrows && d1 == o.d1 && d2 == o.d2 &&
         field->same_as(*o.field) && mats == o.mats;
}

KronRep zero_rep(FieldPtr f, int n, int d1, int d2) {
  return KronRep(std::move(f), n, d1, d2);
}

KronRep direct_sum(const KronRep& a, const KronRep& b) {
  if (!a.field->same_as(*b.field) || a.n_arrows != b.n_arrows)
    throw DomainError("direct_sum: incompatible representations");
  KronRep out(a.field, a.n_arrows, a.d1 + b.d1, a.d2 + b.d2);
  for (int r = 0; r < a.n_arrows; ++r) {
    for (int i = 0; i < a.d2; ++i)
      for (int j = 0; j < a.d1; ++j) out.mats[r].set(i, j, a.mats[r].at(i, j));
    for (int i = 0; i < b.d2; ++i)
      for (int j = 0; j < b.d1; ++j)
        out.mats[r].set(a.d2 + i, a.d1 + j, b.mats[r].at(i, j));
  }
  return out;
}

KronRep random_rep(SplitMix64& rng, FieldPtr f, int n, int d1, int d2) {
  KronRep out(f, n, d1, d2);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j)
        out.mats[r].set(i, j, static_cast<Scalar>(rng.below(f->q())));
  return out;
}

std::vector<HomPair> hom_space(const KronRep& M, const KronRep& N) {
  if (!M.field->same_as(*N.field))
    throw DomainError("hom_space: field mismatch");
  if (M.n_arrows != N.n_arrows)
    throw DomainError("hom_space: arrow count mismatch");
  const FieldPtr& f = M.field;
  const Field& F = *f;
  const int d1 = M.d1, d2 = M.d2, e1 = N.d1, e2 = N.d2, n = M.n_arrows;
  const int unknowns = e1 * d1 + e2 * d2;
  Matrix sys(f, n * e2 * d1, unknowns);
  int row = 0;
  for (int rho = 0; rho < n; ++rho)
    for (int r = 0; r < e2; ++r)
      for (int c = 0; c < d1; ++c) {
        for (int s = 0; s < d2; ++s)
          sys.set(row, e1 * d1 + r * d2 + s, M.mats[rho].at(s, c));
        for (int t = 0; t < e1; ++t) {
          int col = t * d1 + c;
          sys.set(row, col, F.sub(sys.at(row, col), N.mats[rho].at(r, t)));
        }
        ++row;
      }
  Matrix ker = kernel_basis(sys);
  std::vector<HomPair> basis;
  basis.reserve(ker.cols());
  for (int b = 0; b < ker.cols(); ++b) {
    Matrix f1(f, e1, d1), f2(f, e2, d2);
    for (int t = 0; t < e1; ++t)
      for (int c = 0; c < d1; ++c) f1.set(t, c, ker.at(t * d1 + c, b));
    for (int r = 0; r < e2; ++r)
      for (int s = 0; s < d2; ++s)
        f2.set(r, s, ker.at(e1 * d1 + r * d2 + s, b));
    basis.push_back({std::move(f1), std::move(f2)});
  }
  return basis;
}

int hom_dim(const KronRep& M, const KronRep& N) {
  return static_cast<int>(hom_space(M, N).size());
}

int end_dim(const KronRep& M) { return hom_dim(M, M); }

EndScan scan_end(const KronRep& M, std::uint64_t bound) {
  std::vector<HomPair> basis = hom_space(M, M);
  EndScan out;
  out.dim = static_cast<int>(basis.size());
  const int q = M.field->q();
  if (out.dim == 0) {
    // Zero representation: End = 0, the single element is both 0 and 1.
    out.idempotents = 1;
    out.units = 1;
    out.local = false;
    out.scalar_local = false;
    return out;
  }
  if (!power_within(q, out.dim, bound))
    throw Refusal("endomorphism scan refused: q^" + std::to_string(out.dim) +
                  " over " + M.field->name() + " exceeds bound " +
                  std::to_string(bound));
  std::vector<Scalar> coeff(basis.size(), 0);
  do {
    HomPair e = combine(basis, coeff, M.field, M.d1, M.d1, M.d2, M.d2);
    if (e.f1 * e.f1 == e.f1 && e.f2 * e.f2 == e.f2) ++out.idempotents;
    if (is_invertible(e.f1) && is_invertible(e.f2)) ++out.units;
  } while (odometer_next(coeff, q));
  out.local = (out.idempotents == 2);
  std::uint64_t nonunits = power_u64(q, out.dim) - out.units;
  out.scalar_local = out.local && nonunits == power_u64(q, out.dim - 1);
  return out;
}

bool is_indecomposable(const KronRep& M, std::uint64_t bound) {
  if (M.total_dim() == 0) return false;
  // End = scalars is the common case; skip the scan.
  std::vector<HomPair> basis = hom_space(M, M);
  if (basis.size() == 1) return true;
  return scan_end(M, bound).local;
}

bool is_scalar_local(const KronRep& M, std::uint64_t bound) {
  if (M.total_dim() == 0) return false;
  std::vector<HomPair> basis = hom_space(M, M);
  if (basis.size() == 1) return true;
  return scan_end(M, bound).scalar_local;
}

namespace {

// First nontrivial idempotent in enumeration order, or nullopt.
std::optional<HomPair> find_idempotent(const KronRep& M, std::uint64_t bound) {
  std::vector<HomPair> basis = hom_space(M, M);
  const int q = M.field->q();
  if (basis.size() <= 1) return std::nullopt;
  if (!power_within(q, static_cast<int>(basis.size()), bound))
    throw Refusal("idempotent search refused: q^" +
                  std::to_string(basis.size()) + " over " + M.field->name() +
                  " exceeds bound " + std::to_string(bound));
  Matrix id1 = Matrix::identity(M.field, M.d1);
  Matrix id2 = Matrix::identity(M.field, M.d2);
  std::vector<Scalar> coeff(basis.size(), 0);
  while (odometer_next(coeff, q)) {
    HomPair e = combine(basis, coeff, M.field, M.d1, M.d1, M.d2, M.d2);
    if (e.f1 * e.f1 != e.f1 || e.f2 * e.f2 != e.f2) continue;
    bool zero = e.f1.is_zero() && e.f2.is_zero();
    bool ident = e.f1 == id1 && e.f2 == id2;
    if (!zero && !ident) return e;
  }
  return std::nullopt;
}

KronRep sub_rep_cols(const KronRep& M, const Matrix& b1cols,
                     const Matrix& b2cols) {
  std::vector<Matrix> mats;
  for (int rho = 0; rho < M.n_arrows; ++rho) {
    auto c = solve(b2cols, M.mats[rho] * b1cols);
    if (!c) throw DomainError("sub_rep: columns are not arrow-closed");
    mats.push_back(*c);
  }
  return KronRep(M.field, M.n_arrows, b1cols.cols(), b2cols.cols(),
                 std::move(mats));
}

}  // namespace

std::vector<KronRep> decompose(const KronRep& M, std::uint64_t bound) {
  if (M.total_dim() == 0) return {};
  std::optional<HomPair> e = find_idempotent(M, bound);
  if (!e) return {M};
  Matrix im1 = image_basis(e->f1), im2 = image_basis(e->f2);
  Matrix k1 = kernel_basis(e->f1), k2 = kernel_basis(e->f2);
  KronRep part1 = sub_rep_cols(M, im1, im2);
  KronRep part2 = sub_rep_cols(M, k1, k2);
  std::vector<KronRep> out = decompose(part1, bound);
  std::vector<KronRep> rest = decompose(part2, bound);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_isomorphic(const KronRep& M, const KronRep& N, std::uint64_t bound) {
  if (!M.field->same_as(*N.field) || M.n_arrows != N.n_arrows) return false;
  if (M.d1 != N.d1 || M.d2 != N.d2) return false;
  if (M.total_dim() == 0) return true;
  std::vector<HomPair> basis = hom_space(M, N);
  if (basis.empty()) return false;
  const int q = M.field->q();
  auto invertible_pair = [](const HomPair& h) {
    return is_invertible(h.f1) && is_invertible(h.f2);
  };
  // Seeded random pre-pass: invertible pairs are plentiful when they exist.
  SplitMix64 rng(0x6b726f6eULL ^ (static_cast<std::uint64_t>(M.d1) << 32) ^
                 static_cast<std::uint64_t>(M.d2 * 131 + q));
  std::vector<Scalar> coeff(basis.size(), 0);
  for (int trial = 0; trial < 128; ++trial) {
    bool nonzero = false;
    for (auto& c : coeff) {
      c = static_cast<Scalar>(rng.below(q));
      nonzero |= (c != 0);
    }
    if (!nonzero) continue;
    HomPair h = combine(basis, coeff, M.field, N.d1, M.d1, N.d2, M.d2);
    if (invertible_pair(h)) return true;
  }
  if (!power_within(q, static_cast<int>(basis.size()), bound))
    throw Refusal("isomorphism scan refused: q^" + std::to_string(basis.size()) +
                  " over " + M.field->name() + " exceeds bound " +
                  std::to_string(bound) + " and no witness was found");
  std::fill(coeff.begin(), coeff.end(), 0);
  while (odometer_next(coeff, q)) {
    HomPair h = combine(basis, coeff, M.field, N.d1, M.d1, N.d2, M.d2);
    if (invertible_pair(h)) return true;
  }
  return false;
}

KronRep arrow_change(const KronRep& M, const Matrix& g) {
  if (g.rows() != M.n_arrows || g.cols() != M.n_arrows)
    throw DomainError("arrow_change: base change must be n x n");
  if (!g.field()->same_as(*M.field))
    throw DomainError("arrow_change: field mismatch");
  if (!is_invertible(g)) throw DomainError("arrow_change: singular base change");
  const Field& F = *M.field;
  std::vector<Matrix> mats;
  for (int i = 0; i < M.n_arrows; ++i) {
    Matrix mi(M.field, M.d2, M.d1);
    for (int j = 0; j < M.n_arrows; ++j) {
      Scalar c = g.at(i, j);
      if (c == 0) continue;
      for (int r = 0; r < M.d2; ++r)
        for (int s = 0; s < M.d1; ++s)
          mi.set(r, s, F.add(mi.at(r, s), F.mul(c, M.mats[j].at(r, s))));
    }
    mats.push_back(std::move(mi));
  }
  return KronRep(M.field, M.n_arrows, M.d1, M.d2, std::move(mats));
}

KronRep conjugate(const KronRep& M, const Matrix& g1, const Matrix& g2) {
  auto g1inv = inverse(g1);
  if (!g1inv || !is_invertible(g2))
    throw DomainError("conjugate: base changes must be invertible");
  std::vector<Matrix> mats;
  for (int rho = 0; rho < M.n_arrows; ++rho)
    mats.push_back(g2 * M.mats[rho] * (*g1inv));
  return KronRep(M.field, M.n_arrows, M.d1, M.d2, std::move(mats));
}

std::optional<Matrix> a_equivalent(const KronRep& M, const KronRep& N,
                                   std::uint64_t iso_bound) {
  if (M.n_arrows != 3 || N.n_arrows != 3)
    throw DomainError("a_equivalent: only 3-Kronecker representations");
  if (!M.field->same_as(*N.field))
    throw DomainError("a_equivalent: field mismatch");
  if (M.field->q() > 4)
    throw Refusal("a_equivalent: GL_3 scan refused for q = " +
                  std::to_string(M.field->q()) + " > 4");
  if (M.d1 != N.d1 || M.d2 != N.d2) return std::nullopt;
  for (const Matrix& g : gl_list(M.field, 3))
    if (is_isomorphic(M, arrow_change(N, g), iso_bound)) return g;
  return std::nullopt;
}

KronRep dual(const KronRep& M) {
  std::vector<Matrix> mats;
  for (const Matrix& m : M.mats) mats.push_back(m.transposed());
  return KronRep(M.field, M.n_arrows, M.d2, M.d1, std::move(mats));
}

SubmoduleHandle sub_generated(const KronRep& M,
                              const std::vector<std::vector<Scalar>>& gens) {
  Matrix g1(M.field, static_cast<int>(gens.size()), M.d1);
  Matrix g2(M.field, static_cast<int>(gens.size()), M.d2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].size()) != M.d1 + M.d2)
      throw DomainError("sub_generated: generator length must be d1 + d2");
    for (int j = 0; j < M.d1; ++j) g1.set(static_cast<int>(i), j, gens[i][j]);
    for (int j = 0; j < M.d2; ++j)
      g2.set(static_cast<int>(i), j, gens[i][M.d1 + j]);
  }
  Matrix b1 = row_span(g1);
  // One arrow application closes the pair: paths in K(n) have length <= 1.
  std::vector<Matrix> pieces{g2};
  for (int r = 0; r < b1.rows(); ++r) {
    Matrix u = b1.row(r).transposed();
    for (int rho = 0; rho < M.n_arrows; ++rho)
      pieces.push_back((M.mats[rho] * u).transposed());
  }
  Matrix b2 = row_span(vstack(pieces));
  return {b1, b2};
}

SubmoduleHandle make_handle(const KronRep& M, const Matrix& rows1,
                            const Matrix& rows2) {
  if (rows1.cols() != M.d1 || rows2.cols() != M.d2)
    throw DomainError("make_handle: basis width mismatch");
  return {row_span(rows1), row_span(rows2)};
}

bool is_submodule(const KronRep& M, const SubmoduleHandle& U) {
  if (U.b1.cols() != M.d1 || U.b2.cols() != M.d2) return false;
  for (int r = 0; r < U.b1.rows(); ++r) {
    Matrix u = U.b1.row(r).transposed();
    for (int rho = 0; rho < M.n_arrows; ++rho) {
      Matrix img = (M.mats[rho] * u).transposed();
      if (!span_contains(U.b2, img)) return false;
    }
  }
  return true;
}

KronRep sub_rep(const KronRep& M, const SubmoduleHandle& U) {
  if (!is_submodule(M, U))
    throw DomainError("sub_rep: handle is not arrow-closed");
  return sub_rep_cols(M, U.b1.transposed(), U.b2.transposed());
}

KronRep quotient(const KronRep& M, const SubmoduleHandle& U) {
  if (!is_submodule(M, U))
    throw DomainError("quotient: handle is not arrow-closed");
  Matrix comp1 = echelon_complement(U.b1, M.d1);
  Matrix comp2 = echelon_complement(U.b2, M.d2);
  std::vector<int> comp2_cols = rref_pivots(comp2);
  std::vector<Matrix> mats;
  for (int rho = 0; rho < M.n_arrows; ++rho) {
    Matrix q(M.field, comp2.rows(), comp1.rows());
    for (int c = 0; c < comp1.rows(); ++c) {
      Matrix img = (M.mats[rho] * comp1.row(c).transposed()).transposed();
      Matrix red = reduce_mod(U.b2, img);
      for (int r = 0; r < comp2.rows(); ++r)
        q.set(r, c, red.at(0, comp2_cols[r]));
    }
    mats.push_back(std::move(q));
  }
  return KronRep(M.field, M.n_arrows, comp1.rows(), comp2.rows(),
                 std::move(mats));
}

KronRep restrict_k2(const KronRep& M, const std::vector<Scalar>& b1,
                    const std::vector<Scalar>& b2) {
  if (M.n_arrows != 3)
    throw DomainError("restrict_k2: input must be a 3-Kronecker representation");
  if (b1.size() != 3 || b2.size() != 3)
    throw DomainError("restrict_k2: arrow vectors must have length 3");
  Matrix pair(M.field, 2, 3);
  for (int j = 0; j < 3; ++j) {
    pair.set(0, j, b1[j]);
    pair.set(1, j, b2[j]);
  }
  if (rank(pair) != 2)
    throw DomainError("restrict_k2: arrow vectors must be independent");
  const Field& F = *M.field;
  auto comb = [&](const std::vector<Scalar>& c) {
    Matrix out(M.field, M.d2, M.d1);
    for (int i = 0; i < 3; ++i) {
      if (c[i] == 0) continue;
      for (int r = 0; r < M.d2; ++r)
        for (int s = 0; s < M.d1; ++s)
          out.set(r, s, F.add(out.at(r, s), F.mul(c[i], M.mats[i].at(r, s))));
    }
    return out;
  };
  return KronRep(M.field, 2, M.d1, M.d2, {comb(b1), comb(b2)});
}

std::optional<std::vector<Scalar>> faithful_annihilator(const KronRep& M) {
  if (M.n_arrows != 3)
    throw DomainError("faithful_annihilator: input must be 3-Kronecker");
  Matrix eval(M.field, M.d1 * M.d2, 3);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < M.d2; ++r)
      for (int c = 0; c < M.d1; ++c)
        eval.set(r * M.d1 + c, i, M.mats[i].at(r, c));
  Matrix ker = kernel_basis(eval);
  if (ker.cols() == 0) return std::nullopt;
  std::vector<Scalar> out(3);
  for (int i = 0; i < 3; ++i) out[i] = ker.at(i, 0);
  return out;
}

const std::vector<Matrix>& gl_list(const FieldPtr& f, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(f->p(), f->k(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const int q = f->q();
  if (!power_within(q, n * n, 1ull << 25))
    throw Refusal("gl_list: q^(n^2) enumeration too large for q = " +
                  std::to_string(q) + ", n = " + std::to_string(n));
  std::vector<Matrix> list;
  std::vector<Scalar> digits(static_cast<std::size_t>(n) * n, 0);
  do {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.set(i, j, digits[static_cast<std::size_t>(i) * n + j]);
    if (is_invertible(m)) list.push_back(std::move(m));
  } while (odometer_next(digits, q));
  auto [pos, inserted] = cache.emplace(key, std::move(list));
  return pos->second;
}

}  // namespace kron
