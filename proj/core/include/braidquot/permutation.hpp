// Permutations on {0..degree-1}. Composition acts on the right:
//   point ^ (a*b) == (point ^ a) ^ b
// i.e. compose(a, b) applies a first, then b. The convention is frozen by a
// test vector in the suite; serialized cycle notation is 1-based.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidquot {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint8_t apply(std::uint8_t point) const { return img_[point]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool is_identity() const;
  bool is_even() const;  // parity from the cycle decomposition

  bool operator==(const Permutation&) const = default;

  friend Permutation compose(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  // "(1 2 3)(4 5)" with 1-based points; identity prints as "()".
  std::string to_cycles() const;
  static Permutation from_cycles(const std::string& text, int degree);

 private:
  std::vector<std::uint8_t> img_;
};

Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace braidquot
