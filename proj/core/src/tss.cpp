#include "braidquot/tss.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <map>
#include <set>

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"

namespace braidquot {
namespace {

void check_ids(const Group& g, std::span<const Eid> members) {
  for (size_t a = 0; a < members.size(); ++a) {
    if (members[a] >= g.order())
      throw Error("element id " + std::to_string(members[a]) + " out of range");
    for (size_t b = a + 1; b < members.size(); ++b)
      if (members[a] == members[b])
        throw Error("repeated element id " + std::to_string(members[a]));
  }
}

// Witness swapping positions i and i+1 of the tuple while fixing the rest:
// smallest id in transporter(t_i, t_{i+1}) that also maps t_{i+1} back to
// t_i and centralizes every other member.
std::optional<Eid> find_witness(const Group& g, std::span<const Eid> members, size_t i) {
  DynBitset fixers(g.order());
  fixers.set_all();
  for (size_t j = 0; j < members.size(); ++j)
    if (j != i && j != i + 1) fixers &= g.centralizer_bits(members[j]);
  for (Eid h : g.transporter(members[i], members[i + 1]))
    if (fixers.test(h) && g.conjugate(h, members[i + 1]) == members[i]) return h;
  return std::nullopt;
}

std::vector<Eid> sorted_conjugate(const Group& g, const std::vector<Eid>& set, Eid h) {
  std::vector<Eid> out;
  out.reserve(set.size());
  for (Eid m : set) out.push_back(g.conjugate(h, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugation orbit of a set, as sorted id tuples. Returns the full orbit;
// the canonical key is its minimum. `budget` guards runaway orbits.
std::set<std::vector<Eid>> set_orbit(const Group& g, std::vector<Eid> start,
                                     std::uint64_t budget) {
  std::sort(start.begin(), start.end());
  std::set<std::vector<Eid>> seen{start};
  std::vector<std::vector<Eid>> frontier{std::move(start)};
  while (!frontier.empty()) {
    std::vector<std::vector<Eid>> next;
    for (const auto& s : frontier)
      for (Eid gen : g.generator_ids()) {
        auto t = sorted_conjugate(g, s, gen);
        if (seen.insert(t).second) {
          if (seen.size() > budget)
            throw CapExceeded("conjugation orbit of a candidate set exceeded " +
                              std::to_string(budget) + " sets");
          next.push_back(std::move(t));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TssCheck is_totally_symmetric(const Group& g, std::span<const Eid> members) {
  check_ids(g, members);
  TssCheck out;
  for (size_t a = 0; a < members.size(); ++a)
    for (size_t b = a + 1; b < members.size(); ++b)
      if (!g.commutes(members[a], members[b])) {
        out.refusal = "members at positions " + std::to_string(a) + " and " +
                      std::to_string(b) + " do not commute";
        return out;
      }
  const ConjClasses& cc = g.conjugacy_classes();
  for (size_t b = 1; b < members.size(); ++b)
    if (cc.class_of[members[b]] != cc.class_of[members[0]]) {
      out.refusal = "members at positions 0 and " + std::to_string(b) +
                    " lie in different conjugacy classes";
      return out;
    }
  for (size_t i = 0; i + 1 < members.size(); ++i) {
    const auto w = find_witness(g, members, i);
    if (!w) {
      out.refusal = "no witness realizes the transposition of positions " +
                    std::to_string(i) + " and " + std::to_string(i + 1);
      return out;
    }
    out.witnesses.push_back(*w);
  }
  out.ok = true;
  return out;
}

std::vector<Eid> set_orbit_canonical(const Group& g, std::span<const Eid> members) {
  check_ids(g, members);
  const auto orbit = set_orbit(g, {members.begin(), members.end()},
                               std::numeric_limits<std::uint64_t>::max());
  return *orbit.begin();
}

TssInventory enumerate_tss(const Group& g, int k, std::uint64_t cap,
                           const std::string& label) {
  if (k < 2)
    throw Error("inventories for k < 2 are refused: every singleton is trivially "
                "totally symmetric");
  const ConjClasses& cc = g.conjugacy_classes();
  std::atomic<std::uint64_t> work{0};

  // One task per conjugacy class. A totally symmetric set lies inside a
  // single class and is conjugate to one whose first member is the class
  // representative (conjugate by the witness chain of any member), so the
  // search roots every candidate at the representative and lets the orbit
  // computation merge rediscoveries.
  auto scan_class = [&](size_t ci) {
    std::map<std::vector<Eid>, std::uint64_t> found;  // canonical set -> orbit size
    const Eid rep = cc.representative[ci];
    if (cc.members[ci].size() < static_cast<size_t>(k)) return found;
    // Every member commutes with the first member, which can be taken to be
    // the class representative, so the candidate pool is the class cut down
    // to the representative's centralizer. For large classes (those with
    // small centralizers) this collapses the quadratic commutation bitmap to
    // nearly nothing.
    DynBitset poolbits = g.class_bits(static_cast<Eid>(ci));
    poolbits &= g.centralizer_bits(rep);
    std::vector<Eid> M;
    poolbits.for_each_set([&](size_t id) { M.push_back(static_cast<Eid>(id)); });
    const size_t nm = M.size();
    if (nm < static_cast<size_t>(k)) return found;
    if (M[0] != rep) throw Error("internal: representative missing from its own pool");
    std::vector<DynBitset> comm(nm, DynBitset(nm));
    for (size_t a = 0; a < nm; ++a)
      for (size_t b = a + 1; b < nm; ++b)
        if (g.commutes(M[a], M[b])) {
          comm[a].set(b);
          comm[b].set(a);
        }
    std::set<std::vector<Eid>> seen;  // all orbit members met so far, this class
    std::vector<size_t> prefix{0};    // pool-local indices; tuple starts at the rep
    std::vector<Eid> ids(static_cast<size_t>(k));
    DynBitset allowed = comm[0];
    auto dfs = [&](auto&& self, const DynBitset& avail, size_t last) -> void {
      if (prefix.size() == static_cast<size_t>(k)) {
        if (work.fetch_add(1) + 1 > cap)
          throw CapExceeded("TSS enumeration exceeded its work cap of " +
                            std::to_string(cap));
        for (size_t t = 0; t < prefix.size(); ++t) ids[t] = M[prefix[t]];
        if (seen.count(ids)) return;  // an already-counted orbit
        for (size_t i = 0; i + 1 < ids.size(); ++i)
          if (!find_witness(g, ids, i)) return;
        auto orbit = set_orbit(g, ids, cap);
        work.fetch_add(orbit.size());
        found.emplace(*orbit.begin(), orbit.size());
        seen.merge(std::move(orbit));
        return;
      }
      // Enough commuting candidates must remain to fill the tuple.
      if (avail.count() + prefix.size() < static_cast<size_t>(k)) return;
      for (size_t nxt = avail.next_set(last + 1); nxt < nm; nxt = avail.next_set(nxt + 1)) {
        DynBitset narrowed = avail;
        narrowed &= comm[nxt];
        prefix.push_back(nxt);
        self(self, narrowed, nxt);
        prefix.pop_back();
      }
    };
    dfs(dfs, allowed, 0);
    return found;
  };

  std::vector<std::future<std::map<std::vector<Eid>, std::uint64_t>>> tasks;
  for (size_t ci = 0; ci < cc.count(); ++ci)
    tasks.push_back(std::async(std::launch::async, scan_class, ci));
  std::map<std::vector<Eid>, std::uint64_t> merged;
  for (auto& t : tasks)
    for (auto& [canon, orbit] : t.get()) merged.emplace(canon, orbit);

  TssInventory inv;
  inv.group = label;
  inv.k = k;
  for (const auto& [canon, orbit] : merged) {
    TotSymSet t;
    t.members = canon;
    const TssCheck chk = is_totally_symmetric(g, t.members);
    if (!chk.ok)
      throw Error("internal: canonical orbit representative failed re-verification (" +
                  chk.refusal + ")");
    t.witnesses = chk.witnesses;
    t.orbit_size = orbit;
    inv.classes.push_back(std::move(t));
  }
  return inv;
}

int tss_p_value(const Group& g, const TotSymSet& t) {
  if (t.members.size() < 2) throw Error("p-values need at least two members");
  const int m = g.element_order(t.members[0]);
  for (int p = 1; p <= m; ++p) {
    const Eid want = g.power(t.members[0], p);
    bool all = true;
    for (size_t j = 1; j < t.members.size() && all; ++j)
      all = g.power(t.members[j], p) == want;
    if (all) return p;
  }
  throw Error("internal: no p-value below the common element order");
}

SpanBoundReport check_span_bound(const Group& g, const TotSymSet& t) {
  SpanBoundReport r;
  const int k = static_cast<int>(t.members.size());
  r.group_order = g.order();
  r.span_order = g.subgroup_order(t.members);
  r.p = tss_p_value(g, t);
  r.span_bound = ipow(static_cast<std::uint64_t>(r.p), k - 1);
  r.ambient_bound = ipow(2, k - 1) * factorial(k);
  if (r.span_order < r.span_bound)
    throw ValidationError("span bound violated: |<T>| = " + std::to_string(r.span_order) +
                          " < " + std::to_string(r.span_bound) + " = p^(k-1) with p = " +
                          std::to_string(r.p));
  if (r.group_order < r.ambient_bound)
    throw ValidationError("ambient bound violated: |G| = " + std::to_string(r.group_order) +
                          " < " + std::to_string(r.ambient_bound) + " = 2^(k-1) k!");
  return r;
}

namespace {

GlProbeResult gl_probe(int dim, int q, int k) {
  GlProbeResult out;
  out.group = "GL" + std::to_string(dim) + ":" + std::to_string(q);
  out.k = k;
  const Group g = build_gl(dim, q);
  out.group_order = g.order();
  out.inventory = enumerate_tss(g, k, 10'000'000, out.group);
  for (const TotSymSet& t : out.inventory.classes) {
    std::vector<std::string> row;
    for (Eid m : t.members) row.push_back(g.describe(m));
    out.printable.push_back(std::move(row));
  }
  return out;
}

}  // namespace

GlProbeResult gl2_tss_search(int q, int k) { return gl_probe(2, q, k); }

GlProbeResult gl_open_question_probe(int n, int q) {
  if (n < 3 || n > 4)
    throw Error("the GL probe supports n = 3 (any supported q) and n = 4 (tiny q); "
                "matrices stop at dimension 3");
  return gl_probe(n - 1, q, n);
}

}  // namespace braidquot
