#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kron {

using Scalar = std::uint16_t;

// Arithmetic tables for F_{p^k} with p in {2,3,5,7} and k in {1,2,3},
// so q = p^k <= 343. Elements are encoded as integers 0..q-1: the element
// sum_i c_i x^i carries the code sum_i c_i p^i (monomial encoding). For
// k > 1 the modulus is the monic irreducible polynomial of degree k over
// F_p with the smallest code; the choice is fixed so serialized data is
// stable across builds.
class Field {
 public:
  static std::shared_ptr<const Field> get(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  Scalar add(Scalar a, Scalar b) const { return add_[a * q_ + b]; }
  Scalar sub(Scalar a, Scalar b) const { return add_[a * q_ + neg_[b]]; }
  Scalar mul(Scalar a, Scalar b) const { return mul_[a * q_ + b]; }
  Scalar neg(Scalar a) const { return neg_[a]; }
  Scalar inv(Scalar a) const;  // throws DomainError on 0
  Scalar one() const { return 1; }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

  // Modulus coefficients, little-endian, including the leading 1 (empty for
  // k = 1).
  const std::vector<Scalar>& modulus() const { return modulus_; }

  std::string name() const;

 private:
  Field(int p, int k);

  int p_, k_, q_;
  std::vector<Scalar> modulus_;
  std::vector<Scalar> add_, mul_;
  std::vector<Scalar> neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace kron
