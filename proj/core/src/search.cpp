#include "braidquot/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <thread>
#include <utility>

#include "braidquot/error.hpp"

namespace braidquot {

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::noncyclic: return "noncyclic";
    case SearchMode::nontrivial: return "nontrivial";
    case SearchMode::all: return "all";
  }
  throw Error("unknown search mode");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::none: return "none";
    case Verdict::inconclusive: return "inconclusive";
  }
  throw Error("unknown verdict");
}

SearchMode parse_mode(const std::string& text) {
  if (text == "noncyclic") return SearchMode::noncyclic;
  if (text == "nontrivial") return SearchMode::nontrivial;
  if (text == "all") return SearchMode::all;
  throw Error("unknown search mode '" + text + "' (expected noncyclic, nontrivial, or all)");
}

namespace {

struct RelatorInfo {
  Word word;
  std::vector<int> gens;  // distinct generators occurring, ascending
  std::vector<int> occ;   // occurrence count, parallel to gens
  bool plain_exponents = true;  // every letter has exponent +1 or -1

  int occurrences_of(int gen) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == gen) return occ[i];
    return 0;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Generators forced to share a conjugacy class by relator shape alone:
//   g^e a^f g^-e b^-f = 1 (any cyclic rotation)  =>  a ~ b
//   a b a b^-1 a^-1 b^-1 = 1 (braid shape)       =>  a ~ b
std::vector<int> conjugate_families(const Presentation& p) {
  UnionFind uf(static_cast<int>(p.generators.size()));
  for (const Word& w : p.relators) {
    if (w.size() == 4) {
      for (int rot = 0; rot < 4; ++rot) {
        const Letter& l0 = w[rot];
        const Letter& l1 = w[(rot + 1) % 4];
        const Letter& l2 = w[(rot + 2) % 4];
        const Letter& l3 = w[(rot + 3) % 4];
        if (l0.gen == l2.gen && l0.exp == -l2.exp && l1.exp == -l3.exp &&
            std::abs(l1.exp) == 1)
          uf.unite(l1.gen, l3.gen);
      }
    } else if (w.size() == 6) {
      bool braid_shape = w[0].gen == w[2].gen && w[2].gen == w[4].gen &&
                         w[1].gen == w[3].gen && w[3].gen == w[5].gen &&
                         w[0].exp == 1 && w[1].exp == 1 && w[2].exp == 1 &&
                         w[3].exp == -1 && w[4].exp == -1 && w[5].exp == -1;
      if (braid_shape) uf.unite(w[0].gen, w[1].gen);
    }
  }
  std::vector<int> family(p.generators.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    family[i] = uf.find(static_cast<int>(i));
  return family;
}

// Whether assignments collapsing a hint tuple to a single image may still
// satisfy the mode. COLLAPSE cyclic kicks in from five strands (the
// difference of two odd-indexed generators normally generates the whole
// commutator subgroup from there on); COLLAPSE trivial is applied from seven.
// Below those thresholds the collapsed branch is searched outright.
bool collapsed_allowed(const Presentation& p, SearchMode mode) {
  if (mode == SearchMode::all) return true;
  if (p.kind == Presentation::Kind::braid) return p.n <= 4;
  return p.n <= 6;
}

struct Shared {
  const Presentation& p;
  const Group& g;
  SearchMode mode;
  SearchOptions opts;
  std::vector<RelatorInfo> rels;
  std::vector<std::vector<int>> rels_of_gen;
  std::vector<int> family;
  int ngen = 0;
  int anchor = 0;  // generator whose image is canonicalized to a class rep
};

struct RootBranch {
  std::vector<std::pair<int, Eid>> pre;  // (generator, image) preassignments
  bool anchor_class_reps_only = false;   // generic branch symmetry reduction
};

struct BranchResult {
  std::optional<Assignment> witness;  // canonical form
  std::uint64_t nodes = 0;
  std::uint64_t rounds = 0;
  bool capped = false;
};

struct State {
  std::vector<DynBitset> dom;
  std::vector<char> assigned;
  std::vector<Eid> val;
  std::vector<char> rel_ok;
  std::vector<char> hint_ok;
  std::vector<char> family_applied;  // indexed by family root generator
};

Eid eval_letters(const Shared& sh, const Word& w, std::size_t begin, std::size_t end,
                 const std::vector<Eid>& val) {
  Eid acc = sh.g.identity();
  for (std::size_t i = begin; i < end; ++i)
    acc = sh.g.product(acc, sh.g.power(val[w[i].gen], w[i].exp));
  return acc;
}

Eid eval_word_cyclic(const Shared& sh, const Word& w, std::size_t start,
                     std::size_t count, const std::vector<Eid>& val) {
  Eid acc = sh.g.identity();
  for (std::size_t i = 0; i < count; ++i) {
    const Letter& l = w[(start + i) % w.size()];
    acc = sh.g.product(acc, sh.g.power(val[l.gen], l.exp));
  }
  return acc;
}

void assign(State& st, int gen, Eid v) {
  st.assigned[gen] = 1;
  st.val[gen] = v;
  st.dom[gen].reset_all();
  st.dom[gen].set(v);
}

// Replace dom[gen] by its intersection with `keep` (a sorted id list).
// Returns false if the result is empty.
bool intersect_with_list(State& st, int gen, const std::vector<Eid>& keep) {
  DynBitset nd(st.dom[gen].size(), false);
  for (Eid id : keep)
    if (st.dom[gen].test(id)) nd.set(id);
  bool changed = !(nd == st.dom[gen]);
  st.dom[gen] = std::move(nd);
  if (changed && st.dom[gen].none()) return false;
  return true;
}

enum class PropResult { ok, contradiction };

// Narrow domains to a fixed point. Contradictions (empty domain, violated
// relator, rejected hint image) abort the node.
PropResult propagate(const Shared& sh, State& st, BranchResult& out) {
  const std::size_t order = sh.g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    ++out.rounds;

    // Conjugate families: once any member is assigned, the rest must stay in
    // the image's conjugacy class.
    for (int gen = 0; gen < sh.ngen; ++gen) {
      if (!st.assigned[gen]) continue;
      int root = sh.family[gen];
      if (st.family_applied[root]) continue;
      st.family_applied[root] = 1;
      const ConjClasses& cc = sh.g.conjugacy_classes();
      const DynBitset& bits = sh.g.class_bits(cc.class_of[st.val[gen]]);
      for (int other = 0; other < sh.ngen; ++other) {
        if (other == gen || sh.family[other] != root || st.assigned[other]) continue;
        std::size_t before = st.dom[other].count();
        st.dom[other] &= bits;
        std::size_t after = st.dom[other].count();
        if (after == 0) return PropResult::contradiction;
        if (after != before) changed = true;
      }
    }

    for (std::size_t ri = 0; ri < sh.rels.size(); ++ri) {
      if (st.rel_ok[ri]) continue;
      const RelatorInfo& r = sh.rels[ri];
      int unknown = -1;
      int unknown_count = 0;
      for (int gen : r.gens) {
        if (!st.assigned[gen]) {
          unknown = gen;
          ++unknown_count;
        }
      }
      if (unknown_count == 0) {
        if (eval_letters(sh, r.word, 0, r.word.size(), st.val) != sh.g.identity())
          return PropResult::contradiction;
        st.rel_ok[ri] = 1;
        continue;
      }
      if (unknown_count > 1) continue;

      const int x = unknown;
      const int occ = r.occurrences_of(x);
      bool narrowed = false;
      if (occ == 1 && r.plain_exponents) {
        // A x^e B = 1  =>  x^e = A^-1 B^-1.
        std::size_t pos = 0;
        while (r.word[pos].gen != x) ++pos;
        Eid a = eval_letters(sh, r.word, 0, pos, st.val);
        Eid b = eval_letters(sh, r.word, pos + 1, r.word.size(), st.val);
        Eid xe = sh.g.product(sh.g.inverse(a), sh.g.inverse(b));
        Eid cand = r.word[pos].exp == 1 ? xe : sh.g.inverse(xe);
        if (!st.dom[x].test(cand)) return PropResult::contradiction;
        if (!st.assigned[x]) {
          assign(st, x, cand);
          changed = true;
        }
        continue;
      }
      if (occ == 2 && r.plain_exponents) {
        std::size_t i = 0;
        while (r.word[i].gen != x) ++i;
        std::size_t j = i + 1;
        while (r.word[j].gen != x) ++j;
        if (r.word[i].exp == -r.word[j].exp) {
          // Rotate to x^e A x^-e B = 1 with A, B assigned:
          //   e = +1: x a x^-1 = b^-1, so x carries a to b^-1;
          //   e = -1: x b^-1 x^-1 = a, so x carries b^-1 to a.
          Eid a = eval_word_cyclic(sh, r.word, i + 1, j - i - 1, st.val);
          Eid b = eval_word_cyclic(sh, r.word, j + 1, r.word.size() - (j - i) - 1, st.val);
          std::vector<Eid> t = r.word[i].exp == 1
                                   ? sh.g.transporter(a, sh.g.inverse(b))
                                   : sh.g.transporter(sh.g.inverse(b), a);
          std::size_t before = st.dom[x].count();
          if (!intersect_with_list(st, x, t)) return PropResult::contradiction;
          if (st.dom[x].count() != before) narrowed = true;
          if (st.dom[x].none()) return PropResult::contradiction;
          goto after_narrowing;
        }
        // fall through to the direct filter for same-sign double occurrences
      }
      {
        // Direct filter: try each candidate value in place.
        if (st.dom[x].count() > (std::size_t{1} << 17)) continue;
        DynBitset nd(order, false);
        std::vector<Eid>& scratch = st.val;
        for (std::size_t v = st.dom[x].next_set(0); v < order;
             v = st.dom[x].next_set(v + 1)) {
          scratch[x] = static_cast<Eid>(v);
          if (eval_letters(sh, r.word, 0, r.word.size(), scratch) == sh.g.identity())
            nd.set(v);
        }
        if (nd.none()) return PropResult::contradiction;
        if (!(nd == st.dom[x])) {
          st.dom[x] = std::move(nd);
          narrowed = true;
        }
      }
    after_narrowing:
      if (narrowed) {
        changed = true;
        if (st.dom[x].count() == 1 && !st.assigned[x])
          assign(st, x, static_cast<Eid>(st.dom[x].next_set(0)));
      }
    }

    // Hint images: once a hint tuple is fully assigned it must either be
    // collapsed (all equal, where the collapse policy allows searching on)
    // or a genuine totally symmetric set — images of a totally symmetric
    // tuple have cardinality 1 or full size.
    for (std::size_t hi = 0; hi < sh.p.hints.size(); ++hi) {
      if (st.hint_ok[hi]) continue;
      const Hint& h = sh.p.hints[hi];
      bool all = true;
      for (int gen : h.tuple)
        if (!st.assigned[gen]) {
          all = false;
          break;
        }
      if (!all) continue;
      std::vector<Eid> images;
      images.reserve(h.tuple.size());
      for (int gen : h.tuple) images.push_back(st.val[gen]);
      bool all_equal = std::all_of(images.begin(), images.end(),
                                   [&](Eid e) { return e == images[0]; });
      if (all_equal) {
        if (!collapsed_allowed(sh.p, sh.mode)) return PropResult::contradiction;
      } else {
        std::vector<Eid> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          return PropResult::contradiction;  // partial collapse is impossible
        if (!is_totally_symmetric(sh.g, sorted).ok) return PropResult::contradiction;
      }
      st.hint_ok[hi] = 1;
    }
  }
  return PropResult::ok;
}

int pick_variable(const Shared& sh, const State& st) {
  for (const Hint& h : sh.p.hints)
    for (int gen : h.tuple)
      if (!st.assigned[gen]) return gen;
  int best = -1;
  int best_score = -1;
  for (int gen = 0; gen < sh.ngen; ++gen) {
    if (st.assigned[gen]) continue;
    int score = 0;
    for (int ri : sh.rels_of_gen[gen]) {
      for (int other : sh.rels[ri].gens) {
        if (other != gen && st.assigned[other]) {
          ++score;
          break;
        }
      }
    }
    if (score > best_score) {
      best_score = score;
      best = gen;
    }
  }
  return best;
}

bool mode_satisfied(const Shared& sh, const Assignment& a) {
  switch (sh.mode) {
    case SearchMode::all: return true;
    case SearchMode::noncyclic:
      return std::any_of(a.begin(), a.end(), [&](Eid e) { return e != a[0]; });
    case SearchMode::nontrivial:
      return std::any_of(a.begin(), a.end(),
                         [&](Eid e) { return e != sh.g.identity(); });
  }
  throw Error("unknown search mode");
}

bool accept_completion(const Shared& sh, const State& st) {
  Assignment a(st.val.begin(), st.val.end());
  if (!mode_satisfied(sh, a)) return false;
  if (sh.p.kind == Presentation::Kind::bn_prime && !tower_check(sh.p, sh.g, a))
    return false;
  if (!verify(sh.p, sh.g, a, sh.mode))
    throw Error("internal: search completion failed independent verification");
  return true;
}

// Depth-first search under `st`. Returns true when a witness was recorded
// (the branch stops at its first witness, which is deterministic).
bool dfs(const Shared& sh, State& st, BranchResult& out) {
  if (propagate(sh, st, out) == PropResult::contradiction) return false;
  int var = pick_variable(sh, st);
  if (var < 0) {
    if (!accept_completion(sh, st)) return false;
    out.witness = canonicalize_witness(sh.p, sh.g, Assignment(st.val.begin(), st.val.end()));
    return true;
  }
  const std::size_t order = sh.g.order();
  for (std::size_t v = st.dom[var].next_set(0); v < order;
       v = st.dom[var].next_set(v + 1)) {
    ++out.nodes;
    if (out.nodes > sh.opts.node_cap) {
      out.capped = true;
      return false;
    }
    State child = st;
    assign(child, var, static_cast<Eid>(v));
    if (dfs(sh, child, out)) return true;
    if (out.capped) return false;
  }
  return false;
}

BranchResult run_branch(const Shared& sh, const RootBranch& rb) {
  BranchResult out;
  const std::size_t order = sh.g.order();
  State st;
  st.dom.assign(sh.ngen, DynBitset(order, true));
  st.assigned.assign(sh.ngen, 0);
  st.val.assign(sh.ngen, sh.g.identity());
  st.rel_ok.assign(sh.rels.size(), 0);
  st.hint_ok.assign(sh.p.hints.size(), 0);
  st.family_applied.assign(sh.ngen, 0);
  for (const auto& [gen, image] : rb.pre) assign(st, gen, image);
  if (rb.anchor_class_reps_only) {
    const ConjClasses& cc = sh.g.conjugacy_classes();
    DynBitset reps(order, false);
    for (Eid r : cc.representative) reps.set(r);
    st.dom[sh.anchor] &= reps;
  }
  dfs(sh, st, out);
  return out;
}

}  // namespace

SearchReport search(const Presentation& p, const Group& g, SearchMode mode,
                    const SearchOptions& opts, const std::string& group_label) {
  const auto t0 = std::chrono::steady_clock::now();
  if (mode == SearchMode::noncyclic && p.kind != Presentation::Kind::braid)
    throw Error("mode noncyclic applies to braid presentations only");
  if (mode == SearchMode::nontrivial && p.kind != Presentation::Kind::bn_prime)
    throw Error("mode nontrivial applies to commutator-subgroup presentations only");

  Shared sh{p, g, mode, opts, {}, {}, {}, 0, 0};
  sh.ngen = static_cast<int>(p.generators.size());
  sh.rels.reserve(p.relators.size());
  for (const Word& w : p.relators) {
    RelatorInfo info;
    info.word = w;
    for (const Letter& l : w) {
      if (std::abs(l.exp) != 1) info.plain_exponents = false;
      auto it = std::find(info.gens.begin(), info.gens.end(), l.gen);
      if (it == info.gens.end()) {
        info.gens.push_back(l.gen);
        info.occ.push_back(1);
      } else {
        ++info.occ[it - info.gens.begin()];
      }
    }
    std::vector<std::size_t> order_idx(info.gens.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](std::size_t a, std::size_t b) { return info.gens[a] < info.gens[b]; });
    std::vector<int> sg, so;
    for (std::size_t i : order_idx) {
      sg.push_back(info.gens[i]);
      so.push_back(info.occ[i]);
    }
    info.gens = std::move(sg);
    info.occ = std::move(so);
    sh.rels.push_back(std::move(info));
  }
  sh.rels_of_gen.assign(sh.ngen, {});
  for (std::size_t ri = 0; ri < sh.rels.size(); ++ri)
    for (int gen : sh.rels[ri].gens)
      sh.rels_of_gen[gen].push_back(static_cast<int>(ri));
  sh.family = conjugate_families(p);
  sh.anchor = p.hints.empty() ? 0 : p.hints.front().tuple.front();

  SearchReport rep;
  rep.presentation =
      (p.kind == Presentation::Kind::braid ? "bn:" : "bnp:") + std::to_string(p.n);
  rep.group = group_label;
  rep.mode = mode;

  // Root branches: candidate images for the first hint tuple are the
  // cardinality-k totally symmetric classes (ascending member order — total
  // symmetry conjugates any other ordering onto it) plus, where the collapse
  // policy requires searching them, one collapsed branch per conjugacy
  // class representative. Without hints a single branch runs with the
  // anchor generator restricted to class representatives.
  std::vector<RootBranch> roots;
  if (p.hints.empty()) {
    roots.push_back(RootBranch{{}, true});
  } else {
    const Hint& h = p.hints.front();
    const int k = static_cast<int>(h.tuple.size());
    TssInventory inv = enumerate_tss(g, k, opts.tss_cap,
                                     group_label.empty() ? "target" : group_label);
    rep.stats.tss_candidates = inv.classes.size();
    for (const TotSymSet& cls : inv.classes) {
      RootBranch rb;
      for (int i = 0; i < k; ++i) rb.pre.emplace_back(h.tuple[i], cls.members[i]);
      roots.push_back(std::move(rb));
    }
    if (collapsed_allowed(p, mode)) {
      const ConjClasses& cc = g.conjugacy_classes();
      for (Eid r : cc.representative) {
        RootBranch rb;
        for (int gen : h.tuple) rb.pre.emplace_back(gen, r);
        roots.push_back(std::move(rb));
      }
    }
  }
  rep.stats.root_branches = roots.size();

  std::vector<BranchResult> results(roots.size());
  int nthreads = opts.threads > 0
                     ? opts.threads
                     : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  nthreads = std::min<int>(nthreads, static_cast<int>(roots.size()));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) results[i] = run_branch(sh, roots[i]);
  } else {
    // Conjugacy classes, centralizers, and transporter tables are filled
    // lazily behind locks; touch them once up front so workers only read.
    g.conjugacy_classes();
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
      workers.emplace_back([&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= roots.size()) return;
          results[i] = run_branch(sh, roots[i]);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }

  std::set<Assignment> canon;
  for (const BranchResult& r : results) {
    rep.stats.nodes_expanded += r.nodes;
    rep.stats.propagation_rounds += r.rounds;
    if (r.capped) ++rep.stats.capped_branches;
    if (r.witness) canon.insert(*r.witness);
  }
  rep.witnesses.assign(canon.begin(), canon.end());
  rep.exhaustive = rep.stats.capped_branches == 0;
  if (!rep.witnesses.empty())
    rep.verdict = Verdict::found;
  else if (rep.exhaustive)
    rep.verdict = Verdict::none;
  else
    rep.verdict = Verdict::inconclusive;
  rep.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool verify(const Presentation& p, const Group& g, const Assignment& a, SearchMode mode) {
  if (a.size() != p.generators.size())
    throw Error("assignment size does not match generator count");
  if (mode == SearchMode::noncyclic && p.kind != Presentation::Kind::braid)
    throw Error("mode noncyclic applies to braid presentations only");
  if (mode == SearchMode::nontrivial && p.kind != Presentation::Kind::bn_prime)
    throw Error("mode nontrivial applies to commutator-subgroup presentations only");
  const ElementContext& ctx = g.context();
  const Element id = elem_identity(ctx);
  for (const Word& w : p.relators) {
    Element acc = id;
    for (const Letter& l : w) {
      Element e = g.element(a[l.gen]);
      if (l.exp < 0) e = elem_inverse(ctx, e);
      for (int rep = 0; rep < std::abs(l.exp); ++rep) acc = elem_compose(ctx, acc, e);
    }
    if (!(acc == id)) return false;
  }
  switch (mode) {
    case SearchMode::all: return true;
    case SearchMode::noncyclic:
      return std::any_of(a.begin(), a.end(), [&](Eid e) { return e != a[0]; });
    case SearchMode::nontrivial:
      return std::any_of(a.begin(), a.end(),
                         [&](Eid e) { return e != g.identity(); });
  }
  throw Error("unknown search mode");
}

Assignment canonicalize_witness(const Presentation& p, const Group& g, const Assignment& a) {
  if (a.size() != p.generators.size())
    throw Error("assignment size does not match generator count");
  const int anchor = p.hints.empty() ? 0 : p.hints.front().tuple.front();
  const ConjClasses& cc = g.conjugacy_classes();
  const Eid rep = cc.representative[cc.class_of[a[anchor]]];
  Assignment best;
  for (Eid h : g.transporter(a[anchor], rep)) {
    Assignment cand(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) cand[i] = g.conjugate(h, a[i]);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  if (best.empty()) throw Error("internal: empty transporter while canonicalizing");
  return best;
}

EqCheckReport eq1_incompatibility_check(const Group& g, const std::string& label) {
  EqCheckReport rep;
  rep.group = label;
  TssInventory inv = enumerate_tss(g, 3, 10'000'000, label.empty() ? "target" : label);
  if (inv.classes.empty())
    throw Error("group has no cardinality-3 totally symmetric set");
  auto braids = [&](Eid a, Eid b) {
    return g.product(g.product(a, b), a) == g.product(g.product(b, a), b);
  };
  const std::size_t order = g.order();
  for (const TotSymSet& cls : inv.classes) {
    EqTripleReport row;
    row.members = cls.members;
    const Eid t1 = cls.members[0], t2 = cls.members[1], t3 = cls.members[2];
    row.klein_type = g.product(t1, t2) == t3;
    std::vector<Eid> x2, x4;
    for (std::size_t e = 0; e < order; ++e) {
      const Eid x = static_cast<Eid>(e);
      if (braids(t1, x) && braids(x, t2) && g.commutes(x, t3)) x2.push_back(x);
      if (g.commutes(x, t1) && braids(t2, x) && braids(x, t3)) x4.push_back(x);
    }
    for (Eid a : x2) {
      for (Eid b : x4) {
        if (g.commutes(a, b)) {
          row.extension_found = true;
          row.extension = {a, b};
          break;
        }
      }
      if (row.extension_found) break;
    }
    rep.any_extension = rep.any_extension || row.extension_found;
    rep.triples.push_back(std::move(row));
  }
  return rep;
}

}  // namespace braidquot
