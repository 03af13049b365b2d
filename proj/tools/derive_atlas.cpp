// Derives the bundled generator files for M11, M10 and PSU(3,3) from first
// principles, self-checking every step, and writes them to a data directory
// (default ./data). Run once; the files are committed and re-certified by
// their order lines at every load.
//
//   M11   : automorphism group of the Steiner system S(4,5,11), whose blocks
//           are the weight-5 supports of the [11,6,5] ternary cyclic code
//           generated by a quintic factor of x^11 - 1 over F_3.
//   M10   : stabilizer of the last point in that degree-11 action.
//   PSU33 : unitary transvections preserving the hermitian form
//           h(x,y) = sum x_k y_k^3 on F_9^3, acting on the 28 isotropic
//           projective points.
#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"
#include "braidquot/finite_field.hpp"
#include "braidquot/matrix.hpp"
#include "braidquot/permutation.hpp"

using namespace braidquot;

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("derive_atlas self-check failed: " + what);
}

// ---- ternary polynomial helpers (coefficients low -> high, mod 3) ----

using Poly = std::vector<int>;

Poly poly_mod(Poly r, const Poly& d) {
  const int dd = static_cast<int>(d.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    const int c = r[i] % 3;
    if (c == 0) continue;
    // d is monic: subtract c * x^(i-dd) * d
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = ((r[i - dd + j] - c * d[j]) % 3 + 3) % 3;
  }
  r.resize(dd);
  return r;
}

bool is_zero(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](int c) { return c % 3 == 0; });
}

// Lexicographically first monic quintic dividing x^11 - 1 over F_3.
Poly quintic_factor() {
  Poly target(12, 0);
  target[0] = 2;  // -1
  target[11] = 1;
  for (int idx = 0; idx < 243; ++idx) {
    Poly g(6, 0);
    g[5] = 1;
    int t = idx;
    for (int i = 0; i < 5; ++i) {
      g[i] = t % 3;
      t /= 3;
    }
    if (is_zero(poly_mod(target, g))) return g;
  }
  throw ValidationError("no quintic factor of x^11 - 1 over F_3 found");
}

// ---- Steiner system S(4,5,11) from the [11,6,5] cyclic code ----

std::vector<std::uint16_t> steiner_blocks() {
  const Poly g = quintic_factor();
  // Basis: x^k * g mod (x^11 - 1) for k = 0..5; x^11 == 1 is a plain rotate
  // since deg(x^k g) <= 10.
  std::vector<std::array<int, 11>> basis;
  for (int k = 0; k <= 5; ++k) {
    std::array<int, 11> row{};
    for (int i = 0; i < 6; ++i) row[(i + k) % 11] = g[i];
    basis.push_back(row);
  }
  std::set<std::uint16_t> supports;
  for (int idx = 0; idx < 729; ++idx) {
    std::array<int, 11> word{};
    int t = idx;
    for (int k = 0; k <= 5; ++k) {
      const int c = t % 3;
      t /= 3;
      if (c == 0) continue;
      for (int i = 0; i < 11; ++i) word[i] = (word[i] + c * basis[k][i]) % 3;
    }
    int weight = 0;
    std::uint16_t mask = 0;
    for (int i = 0; i < 11; ++i)
      if (word[i] % 3 != 0) {
        ++weight;
        mask |= static_cast<std::uint16_t>(1u << i);
      }
    if (weight == 5) supports.insert(mask);
  }
  std::vector<std::uint16_t> blocks(supports.begin(), supports.end());
  check(blocks.size() == 66, "expected 66 weight-5 supports");

  // Steiner property: every 4-subset of the 11 points lies in exactly one block.
  for (int a = 0; a < 11; ++a)
    for (int b = a + 1; b < 11; ++b)
      for (int c = b + 1; c < 11; ++c)
        for (int d = c + 1; d < 11; ++d) {
          const std::uint16_t quad = static_cast<std::uint16_t>(
              (1u << a) | (1u << b) | (1u << c) | (1u << d));
          int hits = 0;
          for (std::uint16_t blk : blocks)
            if ((blk & quad) == quad) ++hits;
          check(hits == 1, "4-subset not in exactly one block");
        }
  return blocks;
}

// All permutations of 11 points preserving the block set, by depth-first
// image assignment with incremental block checks.
std::vector<Permutation> block_automorphisms(const std::vector<std::uint16_t>& blocks) {
  std::vector<std::vector<std::uint16_t>> by_max(11);
  for (std::uint16_t blk : blocks) {
    int top = 0;
    for (int i = 0; i < 11; ++i)
      if (blk & (1u << i)) top = i;
    by_max[top].push_back(blk);
  }
  std::vector<Permutation> found;
  std::array<std::uint8_t, 11> img{};
  std::uint16_t used = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 11) {
      found.emplace_back(std::vector<std::uint8_t>(img.begin(), img.end()));
      return;
    }
    for (int target = 0; target < 11; ++target) {
      if (used & (1u << target)) continue;
      img[depth] = static_cast<std::uint8_t>(target);
      used |= static_cast<std::uint16_t>(1u << target);
      bool ok = true;
      for (std::uint16_t blk : by_max[depth]) {
        std::uint16_t image = 0;
        for (int i = 0; i <= depth; ++i)
          if (blk & (1u << i)) image |= static_cast<std::uint16_t>(1u << img[i]);
        if (!std::binary_search(blocks.begin(), blocks.end(), image)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
      used &= static_cast<std::uint16_t>(~(1u << target));
    }
  };
  rec(rec, 0);
  return found;
}

// ---- generic helpers over raw permutation lists ----

std::set<std::vector<std::uint8_t>> close_raw(const std::vector<Permutation>& gens,
                                              int degree) {
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue[0].images());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Permutation& g : gens) {
      Permutation next = compose(queue[head], g);
      if (seen.insert(next.images()).second) queue.push_back(next);
    }
  return seen;
}

// Smallest-first greedy generating set drawn from `all` (which must be the
// element list of a group, any order).
std::vector<Permutation> greedy_generators(std::vector<Permutation> all, int degree) {
  std::sort(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
    return a.images() < b.images();
  });
  std::vector<Permutation> gens;
  while (true) {
    const auto closure = close_raw(gens, degree);
    if (closure.size() == all.size()) break;
    bool grew = false;
    for (const Permutation& cand : all)
      if (!cand.is_identity() && !closure.contains(cand.images())) {
        gens.push_back(cand);
        grew = true;
        break;
      }
    check(grew, "greedy generator search stalled");
  }
  return gens;
}

void write_file(const std::string& dir, const std::string& name,
                const GeneratorFile& gf) {
  // Certify before writing: the closure of the listed generators must have
  // exactly the declared order.
  const auto closure = close_raw(gf.generators, gf.degree);
  check(closure.size() == gf.order, name + ": generator closure != declared order");
  const std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << gf.serialize();
  std::cout << "wrote " << path << " (degree " << gf.degree << ", order "
            << gf.order << ", " << gf.generators.size() << " generators)\n";
}

// ---- PSU(3,3) from unitary transvections ----

std::vector<Permutation> psu33_transvection_perms() {
  const FqField& f = FqField::get(9);
  auto conj = [&](std::uint8_t a) { return f.pow(a, 3); };
  auto herm = [&](const std::array<std::uint8_t, 3>& x,
                  const std::array<std::uint8_t, 3>& y) {
    std::uint8_t s = 0;
    for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(x[k], conj(y[k])));
    return s;
  };

  std::vector<std::array<std::uint8_t, 3>> iso;
  for (const auto& p : projective_plane_points(9))
    if (herm(p, p) == 0) iso.push_back(p);
  check(iso.size() == 28, "expected 28 isotropic points");

  std::vector<std::uint8_t> trace_zero;
  for (int a = 1; a < 9; ++a)
    if (f.add(static_cast<std::uint8_t>(a), f.pow(static_cast<std::uint8_t>(a), 3)) == 0)
      trace_zero.push_back(static_cast<std::uint8_t>(a));
  check(trace_zero.size() == 2, "expected 2 nonzero trace-zero scalars in F_9");

  std::vector<Permutation> perms;
  for (const auto& v : iso)
    for (std::uint8_t a : trace_zero) {
      // T[i][j] = delta_ij + a * conj(v_i) * v_j, so x*T = x + a*h(x,v)*v.
      Matrix t = mat_identity(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          t.at(i, j) = f.add(t.at(i, j), f.mul(a, f.mul(conj(v[i]), v[j])));
      // Unitarity: h(e_i T, e_j T) == delta_ij for the standard basis.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          std::array<std::uint8_t, 3> ri{t.at(i, 0), t.at(i, 1), t.at(i, 2)};
          std::array<std::uint8_t, 3> rj{t.at(j, 0), t.at(j, 1), t.at(j, 2)};
          check(herm(ri, rj) == (i == j ? 1 : 0), "transvection not unitary");
        }
      // Induced permutation of the isotropic points.
      std::vector<std::uint8_t> img(iso.size());
      for (std::size_t pi = 0; pi < iso.size(); ++pi) {
        std::array<std::uint8_t, 3> w{};
        for (int j = 0; j < 3; ++j) {
          std::uint8_t s = 0;
          for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(iso[pi][k], t.at(k, j)));
          w[j] = s;
        }
        int lead = -1;
        for (int j = 0; j < 3 && lead < 0; ++j)
          if (w[j] != 0) lead = j;
        check(lead >= 0, "transvection image collapsed");
        const std::uint8_t s = f.inv(w[lead]);
        for (int j = 0; j < 3; ++j) w[j] = f.mul(w[j], s);
        const auto it = std::find(iso.begin(), iso.end(), w);
        check(it != iso.end(), "transvection does not preserve isotropic points");
        img[pi] = static_cast<std::uint8_t>(it - iso.begin());
      }
      perms.emplace_back(std::move(img));
    }
  return perms;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    // M11 and M10.
    const auto blocks = steiner_blocks();
    std::vector<Permutation> autos = block_automorphisms(blocks);
    check(autos.size() == 7920, "automorphism count of S(4,5,11) != 7920");

    GeneratorFile m11;
    m11.degree = 11;
    m11.order = 7920;
    m11.source =
        "automorphism group of the Steiner system S(4,5,11); blocks are the "
        "weight-5 supports of the [11,6,5] ternary cyclic code; derived and "
        "certified by tools/derive_atlas";
    m11.generators = greedy_generators(autos, 11);
    write_file(dir, "m11.gens", m11);

    std::vector<Permutation> stab;
    for (const Permutation& p : autos)
      if (p.apply(10) == 10)
        stab.emplace_back(
            std::vector<std::uint8_t>(p.images().begin(), p.images().begin() + 10));
    check(stab.size() == 720, "point stabilizer in M11 has order != 720");

    GeneratorFile m10;
    m10.degree = 10;
    m10.order = 720;
    m10.source =
        "stabilizer of the last point of the degree-11 action of M11, on the "
        "remaining 10 points; derived and certified by tools/derive_atlas";
    m10.generators = greedy_generators(stab, 10);
    write_file(dir, "m10.gens", m10);

    // PSU(3,3).
    std::vector<Permutation> trans = psu33_transvection_perms();
    const auto closure = close_raw(trans, 28);
    check(closure.size() == 6048, "unitary transvection closure != 6048");
    std::vector<Permutation> all;
    all.reserve(closure.size());
    for (const auto& images : closure) all.emplace_back(images);

    GeneratorFile psu;
    psu.degree = 28;
    psu.order = 6048;
    psu.source =
        "unitary transvections preserving the hermitian form sum x_k*y_k^3 on "
        "F_9^3, acting on the 28 isotropic projective points; derived and "
        "certified by tools/derive_atlas";
    psu.generators = greedy_generators(all, 28);
    write_file(dir, "psu33.gens", psu);
  } catch (const std::exception& e) {
    std::cerr << "derive_atlas: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
