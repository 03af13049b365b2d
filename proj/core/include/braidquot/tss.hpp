// Totally symmetric sets: tuples of pairwise-commuting, mutually conjugate
// elements such that every permutation of the tuple is realized by
// conjugation in the ambient group. Witnesses are stored for adjacent
// transpositions only; those generate the full symmetric group on the
// positions, so arbitrary permutations follow by composition.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braidquot/group.hpp"

namespace braidquot {

struct TotSymSet {
  std::vector<Eid> members;    // ascending element ids, pairwise distinct
  std::vector<Eid> witnesses;  // witnesses[i] swaps members i and i+1, fixes the rest
  std::uint64_t orbit_size = 0;  // size of the conjugation orbit of the set
};

struct TssInventory {
  std::string group;  // catalog token or free-text label
  int k = 0;
  // One representative per conjugation orbit (the lexicographically smallest
  // sorted id tuple in its orbit), sorted; every cardinality-k totally
  // symmetric set in the group is conjugate to exactly one entry.
  std::vector<TotSymSet> classes;
};

struct TssCheck {
  bool ok = false;
  std::vector<Eid> witnesses;  // filled iff ok
  std::string refusal;         // names the first failed condition otherwise
};

// Decide total symmetry of an ordered tuple. Conditions are checked in a
// fixed order (commutation, single conjugacy class, witnesses for each
// adjacent transposition) and the refusal message names the first failure.
// Throws Error on out-of-range or repeated ids.
TssCheck is_totally_symmetric(const Group& g, std::span<const Eid> members);

// Complete inventory of cardinality-k sets up to conjugacy (k >= 2; k = 1
// would list every element to no purpose and is refused). Work is capped by
// `cap` candidate completions / orbit nodes; exceeding it throws CapExceeded
// rather than returning a silently truncated inventory.
TssInventory enumerate_tss(const Group& g, int k,
                           std::uint64_t cap = 10'000'000,
                           const std::string& label = "");

// Smallest p >= 1 with t_1^p = t_2^p = ... (members being distinct forces
// p >= 2 for k >= 2; p divides... is at most the common element order).
int tss_p_value(const Group& g, const TotSymSet& t);

struct SpanBoundReport {
  std::uint64_t span_order = 0;     // |<members>|
  std::uint64_t group_order = 0;    // |G|
  int p = 0;                        // tss_p_value
  std::uint64_t span_bound = 0;     // p^(k-1)        <= span_order
  std::uint64_t ambient_bound = 0;  // 2^(k-1) * k!   <= group_order
};
// Evaluate both order bounds for a totally symmetric set. A violation would
// falsify the theory this library is built on, so it throws ValidationError
// loudly instead of returning a flag that could be ignored.
SpanBoundReport check_span_bound(const Group& g, const TotSymSet& t);

// Canonical conjugation-orbit key of an arbitrary set of elements: the
// lexicographically least sorted id tuple in its orbit. Two sets are
// conjugate iff their keys are equal.
std::vector<Eid> set_orbit_canonical(const Group& g, std::span<const Eid> members);

// Exhaustive GL probes. The groups are built internally, so results carry
// printable element descriptions alongside raw ids.
struct GlProbeResult {
  std::string group;
  std::uint64_t group_order = 0;
  int k = 0;
  TssInventory inventory;
  std::vector<std::vector<std::string>> printable;  // member matrices per class
};
// Cardinality-k sets in GL_2(F_q); for k = 3 the expected inventory is empty
// for every supported q.
GlProbeResult gl2_tss_search(int q, int k);
// Cardinality-n sets in GL_{n-1}(F_q): an exploratory probe of an open
// existence question; no ground truth is asserted beyond n = 3.
GlProbeResult gl_open_question_probe(int n, int q);

}  // namespace braidquot
