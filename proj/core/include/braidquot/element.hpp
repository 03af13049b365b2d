// Packed group-element storage. A GroupHandle realizes elements either as
// permutations of up to 32 points or as small matrices over a fixed field;
// both flatten to a short byte string so closure and lookup hash one type.
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>

#include "braidquot/finite_field.hpp"
#include "braidquot/matrix.hpp"
#include "braidquot/permutation.hpp"

namespace braidquot {

inline constexpr int kMaxDegree = 32;

struct Element {
  std::uint8_t len = 0;
  std::array<std::uint8_t, kMaxDegree> b{};

  bool operator==(const Element& o) const {
    return len == o.len && std::memcmp(b.data(), o.b.data(), len) == 0;
  }
  bool operator<(const Element& o) const {
    if (len != o.len) return len < o.len;
    return std::memcmp(b.data(), o.b.data(), len) < 0;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    // FNV-1a over the used bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < e.len; ++i) h = (h ^ e.b[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// Everything needed to interpret/combine packed elements of one handle.
struct ElementContext {
  enum class Kind { permutation, matrix } kind = Kind::permutation;
  int degree = 0;                   // points (permutation) or dim (matrix)
  bool projective = false;          // canonicalize scalar multiples (matrix)
  const FqField* field = nullptr;   // matrix kind only

  static ElementContext perm(int degree);
  static ElementContext mat(int dim, const FqField& f, bool projective);
};

Element pack(const ElementContext& ctx, const Permutation& p);
Element pack(const ElementContext& ctx, const Matrix& m);
Permutation unpack_perm(const ElementContext& ctx, const Element& e);
Matrix unpack_matrix(const ElementContext& ctx, const Element& e);

Element elem_identity(const ElementContext& ctx);
Element elem_compose(const ElementContext& ctx, const Element& a, const Element& b);
Element elem_inverse(const ElementContext& ctx, const Element& a);

// Cycle notation (1-based) or matrix entry list, for reports and files.
std::string elem_to_string(const ElementContext& ctx, const Element& e);

}  // namespace braidquot
