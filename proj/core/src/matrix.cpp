#include "braidquot/matrix.hpp"

#include <sstream>

#include "braidquot/error.hpp"

namespace braidquot {

Matrix mat_identity(int dim) {
  Matrix m{};
  m.dim = static_cast<std::uint8_t>(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const FqField& f, const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) throw Error("matrix dimension mismatch");
  Matrix r{};
  r.dim = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      std::uint8_t s = 0;
      for (int k = 0; k < a.dim; ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

std::uint8_t mat_det(const FqField& f, const Matrix& a) {
  if (a.dim == 2)
    return f.sub(f.mul(a.at(0, 0), a.at(1, 1)), f.mul(a.at(0, 1), a.at(1, 0)));
  if (a.dim == 3) {
    auto minor = [&](int r0, int r1, int c0, int c1) {
      return f.sub(f.mul(a.at(r0, c0), a.at(r1, c1)), f.mul(a.at(r0, c1), a.at(r1, c0)));
    };
    std::uint8_t d = f.mul(a.at(0, 0), minor(1, 2, 1, 2));
    d = f.sub(d, f.mul(a.at(0, 1), minor(1, 2, 0, 2)));
    d = f.add(d, f.mul(a.at(0, 2), minor(1, 2, 0, 1)));
    return d;
  }
  throw Error("mat_det: unsupported dimension");
}

Matrix mat_inverse(const FqField& f, const Matrix& a) {
  std::uint8_t det = mat_det(f, a);
  if (det == 0) throw Error("mat_inverse: singular matrix");
  std::uint8_t di = f.inv(det);
  Matrix r{};
  r.dim = a.dim;
  if (a.dim == 2) {
    r.at(0, 0) = f.mul(di, a.at(1, 1));
    r.at(0, 1) = f.mul(di, f.neg(a.at(0, 1)));
    r.at(1, 0) = f.mul(di, f.neg(a.at(1, 0)));
    r.at(1, 1) = f.mul(di, a.at(0, 0));
    return r;
  }
  // 3x3: transposed cofactor matrix scaled by 1/det.
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a.at(r0, c0), a.at(r1, c1)), f.mul(a.at(r0, c1), a.at(r1, c0)));
  };
  static constexpr int others[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint8_t cof =
          minor(others[i][0], others[i][1], others[j][0], others[j][1]);
      if ((i + j) & 1) cof = f.neg(cof);
      r.at(j, i) = f.mul(di, cof);
    }
  return r;
}

Matrix projective_canon(const FqField& f, const Matrix& a) {
  std::uint8_t lead = 0;
  for (int i = 0; i < a.dim * a.dim && lead == 0; ++i) lead = a.e[i];
  if (lead == 0) throw Error("projective_canon: zero matrix");
  if (lead == 1) return a;
  std::uint8_t s = f.inv(lead);
  Matrix r = a;
  for (int i = 0; i < a.dim * a.dim; ++i) r.e[i] = f.mul(a.e[i], s);
  return r;
}

std::string mat_to_string(const FqField& f, const Matrix& a) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < a.dim; ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < a.dim; ++j) {
      if (j) out << ',';
      out << f.to_string(a.at(i, j));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace braidquot
