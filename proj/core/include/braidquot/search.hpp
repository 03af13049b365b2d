// Homomorphism existence search: decide whether a presentation admits a
// non-cyclic (braid) or non-trivial (commutator subgroup) homomorphism into
// a finite group. The root of the search tree branches over the target's
// totally symmetric sets (one ordered tuple per conjugacy class of sets) as
// candidate images of the presentation's hint tuple; constraint propagation
// over element-id bitsets handles the remaining generators; verdicts of
// "none" are only emitted for exhaustively covered searches.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "braidquot/group.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/tss.hpp"

namespace braidquot {

enum class SearchMode { noncyclic, nontrivial, all };
enum class Verdict { found, none, inconclusive };

std::string to_string(SearchMode m);
std::string to_string(Verdict v);
SearchMode parse_mode(const std::string& text);

// One image per presentation generator, indexed like Presentation::generators.
using Assignment = std::vector<Eid>;

struct SearchOptions {
  int threads = 0;                          // 0: hardware concurrency
  std::uint64_t node_cap = 200'000'000;     // per root branch; hit => inconclusive
  std::uint64_t tss_cap = 10'000'000;       // inventory work cap
};

struct SearchStats {
  std::uint64_t tss_candidates = 0;     // TSS classes offered at the root
  std::uint64_t root_branches = 0;      // TSS branches + collapsed/generic ones
  std::uint64_t nodes_expanded = 0;     // assignments tried across all branches
  std::uint64_t propagation_rounds = 0;
  std::uint64_t capped_branches = 0;
  double wall_seconds = 0.0;  // informational; excluded from determinism claims
};

struct SearchReport {
  std::string presentation;  // "bn:<n>" or "bnp:<n>"
  std::string group;
  SearchMode mode = SearchMode::all;
  Verdict verdict = Verdict::inconclusive;
  // At most one witness per root branch, canonicalized (first hint image
  // conjugated onto its class representative, then lexicographically least),
  // deduplicated and sorted; every entry passes verify().
  std::vector<Assignment> witnesses;
  SearchStats stats;
  bool exhaustive = false;  // full coverage; always true when verdict == none
};

// Mode validity: noncyclic needs a braid presentation, nontrivial a
// commutator-subgroup one; `all` accepts either. Throws Error otherwise.
// A "none" verdict means no homomorphism with the mode's property exists —
// for commutator-subgroup presentations the completion check closes the gap
// between the shipped relator window and the full group, see tower_check.
SearchReport search(const Presentation& p, const Group& g, SearchMode mode,
                    const SearchOptions& opts = {},
                    const std::string& group_label = "");

// Independent witness check: evaluates every relator by raw element
// composition (not the search's id tables) and applies the mode predicate.
bool verify(const Presentation& p, const Group& g, const Assignment& a, SearchMode mode);

// Conjugate the whole assignment so the anchor generator's image (first hint
// member, else generator 0) becomes its class representative, then pick the
// lexicographically least tuple among the available conjugations.
Assignment canonicalize_witness(const Presentation& p, const Group& g, const Assignment& a);

// The hand argument killing Klein-type root branches, replayed in-group: for
// each cardinality-3 totally symmetric class (t1,t2,t3), look for a pair
// (x2, x4) with x2 braiding with t1 and t2 while commuting with t3, x4
// braiding with t2 and t3 while commuting with t1, and x2 commuting with x4
// (the constraints adjacent strand images would have to satisfy). Reports
// per class whether such an extension exists.
struct EqTripleReport {
  std::vector<Eid> members;
  bool klein_type = false;  // t1 * t2 == t3
  bool extension_found = false;
  std::array<Eid, 2> extension = {0, 0};  // (x2, x4) when found
};
struct EqCheckReport {
  std::string group;
  std::vector<EqTripleReport> triples;
  bool any_extension = false;
};
// Throws Error if the group has no cardinality-3 totally symmetric set.
EqCheckReport eq1_incompatibility_check(const Group& g, const std::string& label = "");

}  // namespace braidquot
