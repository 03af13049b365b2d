// Emits the bundled relator window files data/bnp5.rel .. data/bnp8.rel for
// the commutator subgroups of the braid groups on 5..8 strands.
//
// Derivation sketch. B_n is the semidirect product of B_n' with the infinite
// cyclic group generated by s1 (exponent sum). Rewriting the standard braid
// presentation against the transversal {s1^k} yields generators
//   W_k = s1^k s2 s1^-(k+1)          (one per exponent k)
//   c_i = s_{i+2} s1^-1              (independent of k: s_{i+2} commutes
//                                     with s1 for i >= 1)
// and relator families, one per braid relator and exponent k:
//   (recursion)   W_{k+2} = W_k^-1 W_{k+1}        from the s1 s2 braid relator
//   (braid-c1)    W_k c1 W_{k+2} c1^-1 W_{k+1}^-1 c1^-1   from the s2 s3 one
//   (shift)       W_k c_i W_{k+1}^-1 c_i^-1, i >= 2        from [s2, s_{i+2}]
// plus k-independent families among the c_i (braid and commutation, images
// of the relators not involving s1 or s2) and w = u c1 u^-1 defining the
// extra generator w = s2 s3 s1^-1 s2^-1.
//
// The recursion eliminates every W_k in favor of u = W_0 and v = W_1, so the
// file ships a finite window of the k-indexed families (k in a small band
// around 0, with W words expanded in u, v). Over a finite target the missing
// exponents are recovered exactly by tower_check, which walks the periodic
// orbit of (u, v) under (x, y) -> (y, x^-1 y). Every emitted line is also
// certified against the Artin action of B_n on a free group by the test
// suite, so a transcription bug in this generator cannot survive CI.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "braidquot/error.hpp"
#include "braidquot/presentation.hpp"

using namespace braidquot;

namespace {

// Generator indices in the emitted file: u=0, v=1, w=2, c_i = 2+i.
constexpr int kU = 0;
constexpr int kV = 1;
constexpr int kW = 2;
int c(int i) { return 2 + i; }

Word reduced_concat(const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// W words over {u, v} via the recursion, both directions from (W_0, W_1).
std::map<int, Word> w_words(int lo, int hi) {
  std::map<int, Word> W;
  W[0] = Word{{kU, 1}};
  W[1] = Word{{kV, 1}};
  for (int k = 2; k <= hi; ++k) W[k] = reduced_concat(inverse_of(W[k - 2]), W[k - 1]);
  for (int k = -1; k >= lo; --k) W[k] = reduced_concat(W[k + 1], inverse_of(W[k + 2]));
  return W;
}

Presentation window_presentation(int n) {
  Presentation p;
  p.kind = Presentation::Kind::bn_prime;
  p.n = n;
  p.generators = {"u", "v", "w"};
  for (int i = 1; i <= n - 3; ++i) p.generators.push_back("c" + std::to_string(i));

  const auto W = w_words(-1, 3);
  // Shift family, k in {-1..2}: W_k c_i W_{k+1}^-1 c_i^-1 for i in {2..n-3}.
  for (int k = -1; k <= 2; ++k)
    for (int i = 2; i <= n - 3; ++i) {
      Word r = W.at(k);
      r.push_back({c(i), 1});
      r = reduced_concat(r, inverse_of(W.at(k + 1)));
      r.push_back({c(i), -1});
      p.relators.push_back(std::move(r));
    }
  // Braid interaction with c1, k in {-1..1}:
  // W_k c1 W_{k+2} c1^-1 W_{k+1}^-1 c1^-1.
  for (int k = -1; k <= 1; ++k) {
    Word r = W.at(k);
    r.push_back({c(1), 1});
    r = reduced_concat(r, W.at(k + 2));
    r.push_back({c(1), -1});
    r = reduced_concat(r, inverse_of(W.at(k + 1)));
    r.push_back({c(1), -1});
    p.relators.push_back(std::move(r));
  }
  // Braid relations among consecutive c's.
  for (int j = 1; j + 1 <= n - 3; ++j)
    p.relators.push_back(Word{{c(j), 1}, {c(j + 1), 1}, {c(j), 1},
                              {c(j + 1), -1}, {c(j), -1}, {c(j + 1), -1}});
  // Distant c's commute.
  for (int a = 1; a <= n - 3; ++a)
    for (int b = a + 2; b <= n - 3; ++b)
      p.relators.push_back(Word{{c(a), 1}, {c(b), 1}, {c(a), -1}, {c(b), -1}});
  // w is the conjugate u c1 u^-1.
  p.relators.push_back(Word{{kU, 1}, {c(1), 1}, {kU, -1}, {kW, -1}});

  // Odd-index c's pairwise commute and are mutually conjugate; if any two of
  // them share an image, the whole image collapses to the trivial group.
  Hint odd;
  for (int i = 1; i <= n - 3; i += 2) odd.tuple.push_back(c(i));
  odd.collapse = Hint::Collapse::trivial;
  if (odd.tuple.size() >= 2) p.hints.push_back(odd);
  if (n - 3 >= 4) {
    Hint even;
    even.tuple = {c(2), c(4)};
    even.collapse = Hint::Collapse::trivial;
    p.hints.push_back(even);
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(out_dir);
  for (int n = 5; n <= 8; ++n) {
    const Presentation p = window_presentation(n);
    const PresValidation v = validate_presentation(p);
    if (!v.ok) {
      std::cerr << "n = " << n << ": relator index " << v.failed.front()
                << " fails under canonical images; refusing to write\n";
      return 1;
    }
    // Round-trip through the text format before writing.
    const std::string text = serialize_presentation(p);
    const Presentation back = parse_presentation_text(text);
    if (back.generators != p.generators || back.relators.size() != p.relators.size() ||
        back.hints.size() != p.hints.size()) {
      std::cerr << "n = " << n << ": serialize/parse round trip mismatch\n";
      return 1;
    }
    const std::string path = out_dir + "/bnp" + std::to_string(n) + ".rel";
    std::ofstream out(path);
    out << "# Relator window for the commutator subgroup of the braid group on "
        << n << " strands.\n"
        << "# Generated by tools/derive_relators; see that file for the derivation\n"
        << "# and tests/test_presentations.cpp for the machine certification.\n"
        << text;
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    std::cout << path << ": " << p.relators.size() << " relators, " << p.hints.size()
              << " hints\n";
  }
  return 0;
}
