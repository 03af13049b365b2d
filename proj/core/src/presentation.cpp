#include "braidquot/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "braidquot/catalog.hpp"
#include "braidquot/element.hpp"
#include "braidquot/error.hpp"

namespace braidquot {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Letter parse_letter(const std::string& tok, const std::vector<std::string>& names) {
  std::string base = tok;
  int exp = 1;
  if (auto caret = tok.find('^'); caret != std::string::npos) {
    base = tok.substr(0, caret);
    const std::string suffix = tok.substr(caret + 1);
    if (suffix == "-1") {
      exp = -1;
    } else if (suffix == "1") {
      exp = 1;
    } else {
      throw ParseError("bad exponent '" + suffix + "' in letter '" + tok +
                       "' (only ^1 and ^-1 are allowed)");
    }
  }
  const auto it = std::find(names.begin(), names.end(), base);
  if (it == names.end())
    throw ParseError("unknown generator '" + base + "' in letter '" + tok + "'");
  return Letter{static_cast<int>(it - names.begin()), exp};
}

// Transposition (i-1 i), zero based, in S_n.
Permutation adjacent_transposition(int i, int n) {
  std::vector<std::uint8_t> im(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) im[static_cast<size_t>(p)] = static_cast<std::uint8_t>(p);
  std::swap(im[static_cast<size_t>(i - 1)], im[static_cast<size_t>(i)]);
  return Permutation(im);
}

}  // namespace

Word inverse_of(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->gen, -it->exp});
  return out;
}

int Presentation::generator_index(const std::string& name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

Presentation braid_presentation(int n) {
  if (n < 3) throw Error("braid presentation requires n >= 3, got " + std::to_string(n));
  Presentation p;
  p.kind = Presentation::Kind::braid;
  p.n = n;
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back("s" + std::to_string(i));
  // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  for (int i = 0; i + 1 < n - 1; ++i) {
    p.relators.push_back(Word{{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}});
  }
  // [s_i, s_j] = 1 for j - i >= 2
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 2; j < n - 1; ++j)
      p.relators.push_back(Word{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  // Odd-index generators pairwise commute and are mutually conjugate: a
  // natural symmetric tuple to seed the search. A one-element tuple prunes
  // nothing, so it is only attached from n = 4 up.
  Hint h;
  for (int i = 0; i < n - 1; i += 2) h.tuple.push_back(i);
  h.collapse = Hint::Collapse::cyclic;
  if (h.tuple.size() >= 2) p.hints.push_back(h);
  return p;
}

Presentation parse_presentation_text(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_generators = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string what = "line " + std::to_string(lineno);
    if (toks[0] == "GENERATORS") {
      if (saw_generators) throw ParseError(what + ": duplicate GENERATORS line");
      if (toks.size() < 2) throw ParseError(what + ": GENERATORS needs at least one name");
      p.generators.assign(toks.begin() + 1, toks.end());
      for (size_t a = 0; a < p.generators.size(); ++a)
        for (size_t b = a + 1; b < p.generators.size(); ++b)
          if (p.generators[a] == p.generators[b])
            throw ParseError(what + ": repeated generator name '" + p.generators[a] + "'");
      saw_generators = true;
    } else if (toks[0] == "RELATOR") {
      if (!saw_generators) throw ParseError(what + ": RELATOR before GENERATORS");
      if (toks.size() < 2) throw ParseError(what + ": empty RELATOR");
      Word w;
      for (size_t t = 1; t < toks.size(); ++t) w.push_back(parse_letter(toks[t], p.generators));
      p.relators.push_back(std::move(w));
    } else if (toks[0] == "HINT") {
      if (!saw_generators) throw ParseError(what + ": HINT before GENERATORS");
      if (toks.size() < 5 || toks[1] != "TSS")
        throw ParseError(what + ": expected HINT TSS <names...> COLLAPSE <cyclic|trivial>");
      const auto collapse_at = std::find(toks.begin(), toks.end(), "COLLAPSE");
      if (collapse_at == toks.end() || collapse_at + 2 != toks.end())
        throw ParseError(what + ": HINT needs a trailing COLLAPSE <cyclic|trivial>");
      Hint h;
      for (auto it = toks.begin() + 2; it != collapse_at; ++it) {
        const Letter l = parse_letter(*it, p.generators);
        if (l.exp != 1) throw ParseError(what + ": hint members must be bare generator names");
        if (std::find(h.tuple.begin(), h.tuple.end(), l.gen) != h.tuple.end())
          throw ParseError(what + ": repeated hint member '" + *it + "'");
        h.tuple.push_back(l.gen);
      }
      if (h.tuple.size() < 2) throw ParseError(what + ": hint needs at least two members");
      const std::string& mode = *(collapse_at + 1);
      if (mode == "cyclic") {
        h.collapse = Hint::Collapse::cyclic;
      } else if (mode == "trivial") {
        h.collapse = Hint::Collapse::trivial;
      } else {
        throw ParseError(what + ": unknown collapse consequence '" + mode + "'");
      }
      p.hints.push_back(std::move(h));
    } else {
      throw ParseError(what + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_generators) throw ParseError("presentation text has no GENERATORS line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "GENERATORS";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators) out << "RELATOR " << word_to_string(r, p.generators) << '\n';
  for (const auto& h : p.hints) {
    out << "HINT TSS";
    for (int g : h.tuple) out << ' ' << p.generators[static_cast<size_t>(g)];
    out << " COLLAPSE" << (h.collapse == Hint::Collapse::cyclic ? " cyclic" : " trivial")
        << '\n';
  }
  return out.str();
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << names.at(static_cast<size_t>(w[i].gen));
    if (w[i].exp == -1) out << "^-1";
  }
  return out.str();
}

Word word_from_string(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  for (const auto& tok : split_ws(text)) w.push_back(parse_letter(tok, names));
  return w;
}

std::vector<Permutation> canonical_images(const Presentation& p) {
  const int n = p.n;
  std::vector<Permutation> sigma;  // sigma[i] = image of s_{i+1}
  for (int i = 1; i <= n - 1; ++i) sigma.push_back(adjacent_transposition(i, n));
  if (p.kind == Presentation::Kind::braid) return sigma;
  // u = s2 s1^-1, v = s1 s2 s1^-2, w = s2 s3 s1^-1 s2^-1, c_i = s_{i+2} s1^-1;
  // transpositions are involutions, so inverses need no special casing.
  std::vector<Permutation> out;
  out.push_back(compose(sigma[1], sigma[0]));                                  // u
  out.push_back(compose(sigma[0], sigma[1]));                                  // v
  out.push_back(compose(compose(sigma[1], sigma[2]), compose(sigma[0], sigma[1])));  // w
  for (int i = 1; i <= n - 3; ++i)
    out.push_back(compose(sigma[static_cast<size_t>(i + 1)], sigma[0]));
  if (out.size() != p.generators.size())
    throw Error("canonical image count mismatch for n = " + std::to_string(n));
  return out;
}

PresValidation validate_presentation(const Presentation& p) {
  const auto images = canonical_images(p);
  PresValidation v;
  for (size_t r = 0; r < p.relators.size(); ++r) {
    if (!evaluate_word(p.relators[r], images, p.n).is_identity()) {
      v.ok = false;
      v.failed.push_back(static_cast<int>(r));
    }
  }
  return v;
}

Permutation evaluate_word(const Word& w, std::span<const Permutation> images, int degree) {
  Permutation acc = Permutation::identity(degree);
  for (const Letter& l : w) {
    const Permutation& g = images[static_cast<size_t>(l.gen)];
    acc = compose(acc, l.exp > 0 ? g : g.inverse());
  }
  return acc;
}

Eid evaluate_word(const Word& w, const Group& g, std::span<const Eid> images) {
  Eid acc = g.identity();
  for (const Letter& l : w) {
    const Eid im = images[static_cast<size_t>(l.gen)];
    acc = g.product(acc, l.exp > 0 ? im : g.inverse(im));
  }
  return acc;
}

Presentation bn_prime_presentation(int n) {
  return bn_prime_presentation(n, data_dir() + "/bnp" + std::to_string(n) + ".rel");
}

Presentation bn_prime_presentation(int n, const std::string& relator_path) {
  if (n < 5)
    throw Error("B_n' presentation requires n >= 5, got " + std::to_string(n));
  std::ifstream in(relator_path);
  if (!in) throw ParseError("cannot open relator file '" + relator_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Presentation p = parse_presentation_text(buf.str());
  p.kind = Presentation::Kind::bn_prime;
  p.n = n;
  std::vector<std::string> expected = {"u", "v", "w"};
  for (int i = 1; i <= n - 3; ++i) expected.push_back("c" + std::to_string(i));
  if (p.generators != expected)
    throw ValidationError("relator file '" + relator_path +
                          "' does not declare the u v w c1.. generator list for n = " +
                          std::to_string(n));
  const PresValidation v = validate_presentation(p);
  if (!v.ok)
    throw ValidationError("relator file '" + relator_path + "': relator index " +
                          std::to_string(v.failed.front()) +
                          " does not hold under the canonical alternating images");
  return p;
}

bool tower_check(const Presentation& p, const Group& g, std::span<const Eid> images) {
  if (p.kind != Presentation::Kind::bn_prime)
    throw Error("tower_check applies to B_n' presentations only");
  if (images.size() != p.generators.size())
    throw Error("tower_check needs one image per generator");
  for (const Word& r : p.relators)
    if (evaluate_word(r, g, images) != g.identity()) return false;
  // Indices: u=0, v=1, w=2, c_i = 2+i.
  const Eid c1 = images[3];
  const Eid c1_inv = g.inverse(c1);
  std::vector<Eid> cs;  // c_2 .. c_{n-3}
  for (int i = 2; i <= p.n - 3; ++i) cs.push_back(images[static_cast<size_t>(2 + i)]);
  // Walk the periodic orbit of (x, y) -> (y, x^-1 y). At orbit index k the
  // pair holds the images of the k-th and (k+1)-st conjugates of u by the
  // deleted generator, so checking both families here checks them for every
  // exponent at once.
  const Eid x0 = images[0];
  const Eid y0 = images[1];
  Eid x = x0;
  Eid y = y0;
  const uint64_t cap = static_cast<uint64_t>(g.order()) * g.order() + 1;
  for (uint64_t step = 0; step < cap; ++step) {
    for (const Eid c : cs)
      if (g.conjugate(g.inverse(c), x) != y) return false;
    // x c1 (x^-1 y) c1^-1 y^-1 c1^-1 = 1
    Eid t = g.product(x, c1);
    t = g.product(t, g.product(g.inverse(x), y));
    t = g.product(t, c1_inv);
    t = g.product(t, g.inverse(y));
    t = g.product(t, c1_inv);
    if (t != g.identity()) return false;
    const Eid nx = y;
    const Eid ny = g.product(g.inverse(x), y);
    x = nx;
    y = ny;
    if (x == x0 && y == y0) return true;
  }
  throw Error("orbit walk failed to close; this cannot happen in a finite group");
}

}  // namespace braidquot
