// Square 2x2 / 3x3 matrices over FqField, row-major, entries stored as field
// element indices. Vectors act on the ROW side (v * M), so the induced point
// permutations compose in the same right-action order as Permutation.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "braidquot/finite_field.hpp"

namespace braidquot {

struct Matrix {
  std::uint8_t dim = 0;
  std::array<std::uint8_t, 9> e{};  // row-major, first dim*dim entries used

  std::uint8_t at(int r, int c) const { return e[r * dim + c]; }
  std::uint8_t& at(int r, int c) { return e[r * dim + c]; }
  bool operator==(const Matrix&) const = default;
};

Matrix mat_identity(int dim);
Matrix mat_mul(const FqField& f, const Matrix& a, const Matrix& b);
std::uint8_t mat_det(const FqField& f, const Matrix& a);
Matrix mat_inverse(const FqField& f, const Matrix& a);  // throws if singular

// Rescale so the first nonzero entry (row-major) is 1; used when the group is
// a projective quotient so scalar multiples share one canonical form.
Matrix projective_canon(const FqField& f, const Matrix& a);

// "[[1,0],[2,1]]" with entries in FqField::to_string form.
std::string mat_to_string(const FqField& f, const Matrix& a);

}  // namespace braidquot
