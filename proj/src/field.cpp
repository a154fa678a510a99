#include "kron/field.hpp"

#include <map>
#include <mutex>

#include "kron/error.hpp"

namespace kron {

namespace {

int pow_int(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Little-endian coefficient vector of the element with the given code.
std::vector<int> decode_poly(int code, int p, int len) {
  std::vector<int> c(len, 0);
  for (int i = 0; i < len; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int eval_poly(const std::vector<int>& c, int x, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    v = (v * x + c[i]) % p;
  return v;
}

// Product of two elements modulo the monic modulus, all little-endian.
int poly_mul_mod(int a, int b, int p, int k, const std::vector<int>& mod) {
  std::vector<int> pa = decode_poly(a, p, k), pb = decode_poly(b, p, k);
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
  // Reduce: modulus is monic of degree k.
  for (int d = 2 * k - 2; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p * p) % p;
  }
  int code = 0;
  for (int i = k - 1; i >= 0; --i) code = code * p + prod[i];
  return code;
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k), q_(pow_int(p, k)) {
  if ((p != 2 && p != 3 && p != 5 && p != 7) || k < 1 || k > 3)
    throw DomainError("field must be F_{p^k} with p in {2,3,5,7} and k <= 3");

  std::vector<int> mod;  // little-endian, degree k, monic
  if (k_ > 1) {
    // Smallest code whose monic polynomial x^k + ... has no root in F_p.
    // For degree 2 and 3 that is exactly irreducibility.
    for (int code = 1; code < q_; ++code) {
      std::vector<int> c = decode_poly(code, p_, k_);
      c.push_back(1);
      bool has_root = false;
      for (int x = 0; x < p_ && !has_root; ++x)
        if (eval_poly(c, x, p_) == 0) has_root = true;
      if (!has_root) {
        mod = c;
        break;
      }
    }
    modulus_.assign(mod.begin(), mod.end());
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    std::vector<int> pa = decode_poly(a, p_, k_);
    // negation, digit-wise
    int ncode = 0;
    for (int i = k_ - 1; i >= 0; --i) ncode = ncode * p_ + (p_ - pa[i]) % p_;
    neg_[a] = static_cast<Scalar>(ncode);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> pb = decode_poly(b, p_, k_);
      int scode = 0;
      for (int i = k_ - 1; i >= 0; --i)
        scode = scode * p_ + (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = static_cast<Scalar>(scode);
      int mcode = (k_ == 1) ? (a * b) % p_ : poly_mul_mod(a, b, p_, k_, mod);
      mul_[a * q_ + b] = static_cast<Scalar>(mcode);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Scalar>(b);
        break;
      }
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  return inv_[a];
}

std::string Field::name() const { return "F" + std::to_string(q_); }

FieldPtr Field::get(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(p, k));
  cache[key] = f;
  return f;
}

}  // namespace kron
