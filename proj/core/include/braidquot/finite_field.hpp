// Small finite fields F_q with fixed, table-driven arithmetic.
// Elements are indices 0..q-1 encoding base-p digit vectors of polynomial
// residues (index = sum digit_i * p^i), so 0 and 1 are the field's 0 and 1.
// Prime powers use fixed irreducible polynomials; construction self-checks
// that every nonzero element is invertible, which certifies irreducibility.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidquot {

class FqField {
 public:
  // Cached lookup; throws Error for unsupported q.
  static const FqField& get(int q);
  static bool supported(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return deg_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;  // throws on 0
  std::uint8_t pow(std::uint8_t a, long long e) const;

  // Smallest element index that generates the multiplicative group.
  std::uint8_t multiplicative_generator() const { return gen_; }

  // "0", "1", "2", "x", "x+1", "2x+2", ... (polynomial form for q = p^r, r>1)
  std::string to_string(std::uint8_t a) const;
  // Low-to-high coefficient list of the modulus, e.g. x^2+x+1 -> {1,1,1}.
  const std::vector<std::uint8_t>& modulus() const { return mod_; }

 private:
  explicit FqField(int q);
  std::size_t idx(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int q_ = 0, p_ = 0, deg_ = 1;
  std::uint8_t gen_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
  std::vector<std::uint8_t> mod_;
};

}  // namespace braidquot
