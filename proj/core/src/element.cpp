#include "braidquot/element.hpp"

#include "braidquot/error.hpp"

namespace braidquot {

ElementContext ElementContext::perm(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw Error("permutation degree out of range: " + std::to_string(degree));
  ElementContext ctx;
  ctx.kind = Kind::permutation;
  ctx.degree = degree;
  return ctx;
}

ElementContext ElementContext::mat(int dim, const FqField& f, bool projective) {
  if (dim != 2 && dim != 3)
    throw Error("matrix dimension out of range: " + std::to_string(dim));
  ElementContext ctx;
  ctx.kind = Kind::matrix;
  ctx.degree = dim;
  ctx.projective = projective;
  ctx.field = &f;
  return ctx;
}

Element pack(const ElementContext& ctx, const Permutation& p) {
  if (ctx.kind != ElementContext::Kind::permutation)
    throw Error("pack: context is not permutation-kind");
  if (p.degree() != ctx.degree)
    throw Error("pack: permutation degree does not match context");
  Element e;
  e.len = static_cast<std::uint8_t>(ctx.degree);
  for (int i = 0; i < ctx.degree; ++i) e.b[i] = p.apply(static_cast<std::uint8_t>(i));
  return e;
}

Element pack(const ElementContext& ctx, const Matrix& m) {
  if (ctx.kind != ElementContext::Kind::matrix)
    throw Error("pack: context is not matrix-kind");
  if (m.dim != ctx.degree) throw Error("pack: matrix dimension does not match context");
  Matrix c = ctx.projective ? projective_canon(*ctx.field, m) : m;
  Element e;
  e.len = static_cast<std::uint8_t>(ctx.degree * ctx.degree);
  for (int i = 0; i < e.len; ++i) e.b[i] = c.e[i];
  return e;
}

Permutation unpack_perm(const ElementContext& ctx, const Element& e) {
  if (ctx.kind != ElementContext::Kind::permutation)
    throw Error("unpack_perm: context is not permutation-kind");
  std::vector<std::uint8_t> img(e.b.begin(), e.b.begin() + e.len);
  return Permutation(std::move(img));
}

Matrix unpack_matrix(const ElementContext& ctx, const Element& e) {
  if (ctx.kind != ElementContext::Kind::matrix)
    throw Error("unpack_matrix: context is not matrix-kind");
  Matrix m{};
  m.dim = static_cast<std::uint8_t>(ctx.degree);
  for (int i = 0; i < e.len; ++i) m.e[i] = e.b[i];
  return m;
}

Element elem_identity(const ElementContext& ctx) {
  if (ctx.kind == ElementContext::Kind::permutation)
    return pack(ctx, Permutation::identity(ctx.degree));
  return pack(ctx, mat_identity(ctx.degree));
}

Element elem_compose(const ElementContext& ctx, const Element& a, const Element& b) {
  if (ctx.kind == ElementContext::Kind::permutation) {
    Element r;
    r.len = a.len;
    // point ^ (a*b) == (point ^ a) ^ b, directly on packed image tables
    for (int i = 0; i < a.len; ++i) r.b[i] = b.b[a.b[i]];
    return r;
  }
  return pack(ctx, mat_mul(*ctx.field, unpack_matrix(ctx, a), unpack_matrix(ctx, b)));
}

Element elem_inverse(const ElementContext& ctx, const Element& a) {
  if (ctx.kind == ElementContext::Kind::permutation) {
    Element r;
    r.len = a.len;
    for (int i = 0; i < a.len; ++i) r.b[a.b[i]] = static_cast<std::uint8_t>(i);
    return r;
  }
  return pack(ctx, mat_inverse(*ctx.field, unpack_matrix(ctx, a)));
}

std::string elem_to_string(const ElementContext& ctx, const Element& e) {
  if (ctx.kind == ElementContext::Kind::permutation)
    return unpack_perm(ctx, e).to_cycles();
  return mat_to_string(*ctx.field, unpack_matrix(ctx, e));
}

}  // namespace braidquot
