#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"
#include "braidquot/group.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/search.hpp"
#include "braidquot/tss.hpp"
#include "doctest.h"
#include "naive_search.hpp"

namespace bq = braidquot;
using bq::Assignment;
using bq::SearchMode;
using bq::Verdict;

namespace {

bq::SearchReport run(const bq::Presentation& p, const std::string& token,
                     SearchMode mode, const bq::SearchOptions& opts = {}) {
  bq::Group g = bq::build_group(token);
  return bq::search(p, g, mode, opts, token);
}

void check_witnesses(const bq::Presentation& p, const bq::Group& g,
                     const bq::SearchReport& rep) {
  REQUIRE(!rep.witnesses.empty());
  for (const Assignment& a : rep.witnesses) {
    CHECK(bq::verify(p, g, a, rep.mode));
    CHECK(a == bq::canonicalize_witness(p, g, a));
  }
  CHECK(std::is_sorted(rep.witnesses.begin(), rep.witnesses.end()));
  CHECK(std::adjacent_find(rep.witnesses.begin(), rep.witnesses.end()) ==
        rep.witnesses.end());
}

}  // namespace

TEST_CASE("five-strand positive controls land in the expected groups") {
  bq::Presentation bn5 = bq::braid_presentation(5);
  bq::Group s5 = bq::build_group("S:5");
  bq::SearchReport rep = bq::search(bn5, s5, SearchMode::noncyclic, {}, "S:5");
  CHECK(rep.verdict == Verdict::found);
  CHECK(rep.exhaustive);
  CHECK(rep.presentation == "bn:5");
  CHECK(rep.group == "S:5");
  check_witnesses(bn5, s5, rep);
  CHECK(rep.stats.tss_candidates > 0);
  CHECK(rep.stats.root_branches == rep.stats.tss_candidates);  // collapse pruned

  bq::Presentation bnp5 = bq::bn_prime_presentation(5);
  bq::Group a5 = bq::build_group("A:5");
  bq::SearchReport rep2 = bq::search(bnp5, a5, SearchMode::nontrivial, {}, "A:5");
  CHECK(rep2.verdict == Verdict::found);
  CHECK(rep2.presentation == "bnp:5");
  check_witnesses(bnp5, a5, rep2);
  // No hints on five strands: a single generic branch must stay complete.
  CHECK(rep2.stats.root_branches == 1);
  CHECK(rep2.stats.tss_candidates == 0);
}

TEST_CASE("six strands admit no noncyclic images in the three 720-element targets") {
  bq::Presentation bn6 = bq::braid_presentation(6);
  for (const std::string& token : {std::string("A:6"), std::string("PGL2:9"),
                                   std::string("M10")}) {
    CAPTURE(token);
    bq::SearchReport rep = run(bn6, token, SearchMode::noncyclic);
    CHECK(rep.verdict == Verdict::none);
    CHECK(rep.exhaustive);
    CHECK(rep.witnesses.empty());
    // At six strands collapsed branches are excluded, so the root is exactly
    // the totally symmetric inventory.
    CHECK(rep.stats.root_branches == rep.stats.tss_candidates);
  }
}

TEST_CASE("commutator-subgroup verdicts at six and seven strands") {
  bq::Presentation bnp6 = bq::bn_prime_presentation(6);

  bq::SearchReport none = run(bnp6, "PSL2:7", SearchMode::nontrivial);
  CHECK(none.verdict == Verdict::none);
  CHECK(none.exhaustive);
  // Six strands still search the collapsed branches, one per conjugacy class.
  bq::Group psl27 = bq::build_group("PSL2:7");
  CHECK(none.stats.root_branches ==
        none.stats.tss_candidates + psl27.conjugacy_classes().count());

  bq::Group a6 = bq::build_group("A:6");
  bq::SearchReport found = bq::search(bnp6, a6, SearchMode::nontrivial, {}, "A:6");
  CHECK(found.verdict == Verdict::found);
  check_witnesses(bnp6, a6, found);

  bq::Presentation bnp7 = bq::bn_prime_presentation(7);
  bq::SearchReport seven = run(bnp7, "PSL2:8", SearchMode::nontrivial);
  CHECK(seven.verdict == Verdict::none);
  CHECK(seven.exhaustive);
  // From seven strands on, collapsed branches are pruned.
  CHECK(seven.stats.root_branches == seven.stats.tss_candidates);
}

TEST_CASE("pruned verdicts match the naive forward-checking oracle") {
  const std::vector<std::string> tokens = {"S:4", "A:4",  "A:5",
                                           "C:12", "D:6", "SL2:3"};
  bq::Presentation bn5 = bq::braid_presentation(5);
  bq::Presentation bn6 = bq::braid_presentation(6);
  bq::Presentation bnp5 = bq::bn_prime_presentation(5);
  bq::Presentation bnp6 = bq::bn_prime_presentation(6);
  struct Combo {
    const bq::Presentation* p;
    SearchMode mode;
  };
  const std::vector<Combo> combos = {
      {&bn5, SearchMode::noncyclic}, {&bn5, SearchMode::all},
      {&bn6, SearchMode::noncyclic}, {&bnp5, SearchMode::nontrivial},
      {&bnp5, SearchMode::all},      {&bnp6, SearchMode::nontrivial},
  };
  for (const std::string& token : tokens) {
    bq::Group g = bq::build_group(token);
    for (const Combo& combo : combos) {
      CAPTURE(token);
      CAPTURE(bq::to_string(combo.mode));
      CAPTURE(combo.p->n);
      bq::SearchReport rep = bq::search(*combo.p, g, combo.mode, {}, token);
      bq::testing::NaiveResult naive = bq::testing::naive_search(*combo.p, g, combo.mode);
      REQUIRE(rep.verdict != Verdict::inconclusive);
      CHECK((rep.verdict == Verdict::found) == naive.found);
    }
  }
}

TEST_CASE("witness lists and statistics are deterministic across thread counts") {
  bq::Presentation bnp6 = bq::bn_prime_presentation(6);
  bq::Group a6 = bq::build_group("A:6");
  bq::SearchOptions one;
  one.threads = 1;
  bq::SearchOptions four;
  four.threads = 4;
  bq::SearchReport r1 = bq::search(bnp6, a6, SearchMode::nontrivial, one, "A:6");
  bq::SearchReport r4 = bq::search(bnp6, a6, SearchMode::nontrivial, four, "A:6");
  bq::SearchReport again = bq::search(bnp6, a6, SearchMode::nontrivial, four, "A:6");
  for (const bq::SearchReport* other : {&r4, &again}) {
    CHECK(r1.verdict == other->verdict);
    CHECK(r1.witnesses == other->witnesses);
    CHECK(r1.exhaustive == other->exhaustive);
    CHECK(r1.stats.tss_candidates == other->stats.tss_candidates);
    CHECK(r1.stats.root_branches == other->stats.root_branches);
    CHECK(r1.stats.nodes_expanded == other->stats.nodes_expanded);
    CHECK(r1.stats.propagation_rounds == other->stats.propagation_rounds);
    CHECK(r1.stats.capped_branches == other->stats.capped_branches);
  }
}

TEST_CASE("inner automorphisms preserve witnesses and their canonical form") {
  bq::Presentation bn5 = bq::braid_presentation(5);
  bq::Group s5 = bq::build_group("S:5");
  bq::SearchReport rep = bq::search(bn5, s5, SearchMode::noncyclic, {}, "S:5");
  REQUIRE(!rep.witnesses.empty());
  const Assignment& w = rep.witnesses.front();
  std::mt19937 rng(98765);
  std::uniform_int_distribution<bq::Eid> pick(0, static_cast<bq::Eid>(s5.order() - 1));
  for (int trial = 0; trial < 20; ++trial) {
    bq::Eid h = pick(rng);
    Assignment moved(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) moved[i] = s5.conjugate(h, w[i]);
    CHECK(bq::verify(bn5, s5, moved, SearchMode::noncyclic));
    CHECK(bq::canonicalize_witness(bn5, s5, moved) ==
          bq::canonicalize_witness(bn5, s5, w));
  }
}

TEST_CASE("naive witnesses map hint tuples to collapsed or inventoried images") {
  for (const std::string& token : {std::string("S:4"), std::string("A:5")}) {
    CAPTURE(token);
    bq::Group g = bq::build_group(token);
    bq::Presentation bn5 = bq::braid_presentation(5);
    bq::testing::NaiveResult naive =
        bq::testing::naive_search(bn5, g, SearchMode::all, 100);
    REQUIRE(naive.found);  // cyclic images always exist
    const bq::Hint& hint = bn5.hints.front();
    bq::TssInventory inv = bq::enumerate_tss(g, static_cast<int>(hint.tuple.size()));
    std::set<std::vector<bq::Eid>> keys;
    for (const bq::TotSymSet& cls : inv.classes) keys.insert(cls.members);
    for (const Assignment& a : naive.witnesses) {
      std::vector<bq::Eid> images;
      for (int gen : hint.tuple) images.push_back(a[gen]);
      bool all_equal = std::all_of(images.begin(), images.end(),
                                   [&](bq::Eid e) { return e == images[0]; });
      if (all_equal) continue;
      std::sort(images.begin(), images.end());
      REQUIRE(std::adjacent_find(images.begin(), images.end()) == images.end());
      CHECK(bq::is_totally_symmetric(g, images).ok);
      CHECK(keys.count(bq::set_orbit_canonical(g, images)) == 1);
    }
  }
}

TEST_CASE("node caps surface as inconclusive, never as none") {
  bq::Presentation bnp5 = bq::bn_prime_presentation(5);
  bq::Group a5 = bq::build_group("A:5");
  bq::SearchOptions strangled;
  strangled.node_cap = 0;
  bq::SearchReport capped = bq::search(bnp5, a5, SearchMode::nontrivial, strangled, "A:5");
  CHECK(capped.verdict == Verdict::inconclusive);
  CHECK(!capped.exhaustive);
  CHECK(capped.witnesses.empty());
  CHECK(capped.stats.capped_branches == 1);

  bq::SearchReport full = bq::search(bnp5, a5, SearchMode::nontrivial, {}, "A:5");
  CHECK(full.verdict == Verdict::found);
  CHECK(full.exhaustive);
}

TEST_CASE("extension-pair analysis for three-element totally symmetric sets") {
  bq::Group s4 = bq::build_group("S:4");
  bq::EqCheckReport klein = bq::eq1_incompatibility_check(s4, "S:4");
  REQUIRE(!klein.triples.empty());
  CHECK(!klein.any_extension);
  for (const bq::EqTripleReport& row : klein.triples) {
    CHECK(row.klein_type);
    CHECK(!row.extension_found);
  }

  bq::Group psl27 = bq::build_group("PSL2:7");
  CHECK(!bq::eq1_incompatibility_check(psl27, "PSL2:7").any_extension);

  bq::Group s6 = bq::build_group("S:6");
  bq::EqCheckReport wide = bq::eq1_incompatibility_check(s6, "S:6");
  CHECK(wide.any_extension);
  auto braids = [&](bq::Eid a, bq::Eid b) {
    return s6.product(s6.product(a, b), a) == s6.product(s6.product(b, a), b);
  };
  bool saw_extension = false;
  for (const bq::EqTripleReport& row : wide.triples) {
    if (!row.extension_found) continue;
    saw_extension = true;
    const bq::Eid t1 = row.members[0], t2 = row.members[1], t3 = row.members[2];
    const bq::Eid x2 = row.extension[0], x4 = row.extension[1];
    CHECK(braids(t1, x2));
    CHECK(braids(x2, t2));
    CHECK(s6.commutes(x2, t3));
    CHECK(s6.commutes(x4, t1));
    CHECK(braids(t2, x4));
    CHECK(braids(x4, t3));
    CHECK(s6.commutes(x2, x4));
  }
  CHECK(saw_extension);

  bq::Group c12 = bq::build_group("C:12");
  CHECK_THROWS_AS(bq::eq1_incompatibility_check(c12, "C:12"), bq::Error);
}

TEST_CASE("search argument validation and witness verification") {
  CHECK(bq::parse_mode("noncyclic") == SearchMode::noncyclic);
  CHECK(bq::parse_mode("nontrivial") == SearchMode::nontrivial);
  CHECK(bq::parse_mode("all") == SearchMode::all);
  CHECK_THROWS_AS(bq::parse_mode("weird"), bq::Error);
  for (SearchMode m : {SearchMode::noncyclic, SearchMode::nontrivial, SearchMode::all})
    CHECK(bq::parse_mode(bq::to_string(m)) == m);
  CHECK(bq::to_string(Verdict::found) == "found");
  CHECK(bq::to_string(Verdict::none) == "none");
  CHECK(bq::to_string(Verdict::inconclusive) == "inconclusive");

  bq::Presentation bn5 = bq::braid_presentation(5);
  bq::Presentation bnp5 = bq::bn_prime_presentation(5);
  bq::Group a5 = bq::build_group("A:5");
  CHECK_THROWS_AS(bq::search(bn5, a5, SearchMode::nontrivial), bq::Error);
  CHECK_THROWS_AS(bq::search(bnp5, a5, SearchMode::noncyclic), bq::Error);

  bq::Group s5 = bq::build_group("S:5");
  bq::SearchReport rep = bq::search(bn5, s5, SearchMode::noncyclic, {}, "S:5");
  REQUIRE(!rep.witnesses.empty());
  Assignment corrupt = rep.witnesses.front();
  corrupt[1] = s5.identity();
  CHECK(!bq::verify(bn5, s5, corrupt, SearchMode::noncyclic));
  CHECK_THROWS_AS(bq::verify(bn5, s5, Assignment{0, 1}, SearchMode::noncyclic),
                  bq::Error);

  // Canonical form: anchor image sits on its class representative, the form
  // is idempotent, and it is minimal among all conjugations reaching that.
  const Assignment& w = rep.witnesses.front();
  const int anchor = bn5.hints.front().tuple.front();
  const bq::ConjClasses& cc = s5.conjugacy_classes();
  CHECK(w[anchor] == cc.representative[cc.class_of[w[anchor]]]);
  CHECK(bq::canonicalize_witness(bn5, s5, w) == w);
  Assignment best;
  for (bq::Eid h : s5.transporter(w[anchor], w[anchor])) {
    Assignment cand(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cand[i] = s5.conjugate(h, w[i]);
    if (best.empty() || cand < best) best = cand;
  }
  CHECK(w == best);
}
