// Tests for the reporting layer: the order-bound calculator, presentation
// tokens, the runbook, and the stability of the JSON reports.
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"
#include "braidquot/group.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/report.hpp"
#include "braidquot/search.hpp"
#include "braidquot/tss.hpp"

using namespace braidquot;

namespace {

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<unsigned>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

nlohmann::ordered_json strip_wall(nlohmann::ordered_json j) {
  if (j.contains("stats")) j["stats"].erase("wall_seconds");
  if (j.contains("items"))
    for (auto& item : j["items"]) item.erase("wall_seconds");
  return j;
}

}  // namespace

TEST_CASE("order bound values and growth") {
  // Spot values, including the three usually quoted: 6, 648, 9720.
  CHECK(bound(5).bound == 6);
  CHECK(bound(6).bound == 54);
  CHECK(bound(7).bound == 54);
  CHECK(bound(8).bound == 648);
  CHECK(bound(9).bound == 648);
  CHECK(bound(10).bound == 9720);
  CHECK(bound(11).bound == 9720);
  CHECK(bound(12).bound == 174960);

  for (int n = 5; n <= 16; ++n) {
    const BoundReport r = bound(n);
    const int half = n / 2;
    CHECK(r.n == n);
    CHECK(r.bound == ipow(3, half - 1) * factorial(half));
    CHECK(r.prior_bound == ipow(2, half - 1) * factorial(half));
    CHECK(r.bound > r.prior_bound);  // strict already from n = 5 on
  }

  CHECK_THROWS_AS(bound(4), Error);
  CHECK_THROWS_AS(bound(0), Error);
  CHECK_THROWS_AS(bound(-3), Error);
}

TEST_CASE("presentation tokens round trip") {
  const Presentation b6 = presentation_from_token("bn:6");
  CHECK(b6.kind == Presentation::Kind::braid);
  CHECK(b6.n == 6);
  CHECK(b6.generators.size() == 5);

  const Presentation p7 = presentation_from_token("bnp:7");
  CHECK(p7.kind == Presentation::Kind::bn_prime);
  CHECK(p7.n == 7);
  CHECK(p7.generators.size() == 7);  // u v w c1..c4

  CHECK_THROWS_AS(presentation_from_token(""), Error);
  CHECK_THROWS_AS(presentation_from_token("bn"), Error);
  CHECK_THROWS_AS(presentation_from_token("bn:"), Error);
  CHECK_THROWS_AS(presentation_from_token("bn:x"), Error);
  CHECK_THROWS_AS(presentation_from_token("bn:6x"), Error);
  CHECK_THROWS_AS(presentation_from_token("b:6"), Error);
  CHECK_THROWS_AS(presentation_from_token("bn:2"), Error);   // braid needs n >= 3
  CHECK_THROWS_AS(presentation_from_token("bnp:4"), Error);  // commutator needs n >= 5
}

TEST_CASE("runbook single items and selection") {
  RunbookOptions one;
  one.only_item = 1;
  const RunbookReport r1 = run_runbook(one);
  REQUIRE(r1.items.size() == 1);
  CHECK(r1.items[0].id == 1);
  CHECK(r1.items[0].expected == "none");
  CHECK(r1.items[0].observed == "none");
  CHECK(r1.items[0].ok);
  CHECK_FALSE(r1.items[0].slow);
  CHECK(r1.items[0].invocation ==
        "hom check --presentation bnp:6 --group PSL2:7 --mode nontrivial");
  CHECK(r1.all_ok);
  CHECK_FALSE(r1.any_inconclusive);

  one.only_item = 13;
  const RunbookReport r13 = run_runbook(one);
  REQUIRE(r13.items.size() == 1);
  CHECK(r13.items[0].observed == "empty");
  CHECK(r13.items[0].ok);

  one.only_item = 14;
  const RunbookReport r14 = run_runbook(one);
  REQUIRE(r14.items.size() == 1);
  CHECK(r14.items[0].observed == "flagged PSL2:13 PSL2:16");
  CHECK(r14.items[0].ok);

  one.only_item = 9;  // slow item still reachable by id
  const RunbookReport r9 = run_runbook(one);
  REQUIRE(r9.items.size() == 1);
  CHECK(r9.items[0].slow);
  CHECK(r9.items[0].ok);

  one.only_item = 99;
  CHECK_THROWS_AS(run_runbook(one), Error);
}

TEST_CASE("default runbook profile skips the slow items and passes") {
  std::ostringstream progress;
  RunbookOptions opts;
  opts.progress = &progress;
  const RunbookReport rep = run_runbook(opts);

  std::set<int> ids;
  for (const RunbookItem& it : rep.items) ids.insert(it.id);
  CHECK(ids == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 13, 14, 15});
  for (const RunbookItem& it : rep.items) {
    CAPTURE(it.id);
    CHECK(it.ok);
    CHECK_FALSE(it.inconclusive);
    CHECK(it.observed == it.expected);
  }
  CHECK(rep.all_ok);
  CHECK_FALSE(rep.any_inconclusive);
  CHECK(progress.str().find("item 1:") != std::string::npos);
  CHECK(progress.str().find("item 9:") == std::string::npos);
}

TEST_CASE("json reports are stable across fresh runs") {
  const Presentation p = presentation_from_token("bnp:6");

  nlohmann::ordered_json first, second;
  {
    Group g = build_group("A:6");
    SearchOptions o;
    o.threads = 1;
    first = to_json(search(p, g, SearchMode::nontrivial, o, "A:6"), g);
  }
  {
    Group g = build_group("A:6");
    SearchOptions o;
    o.threads = 4;  // thread count must not leak into the report
    second = to_json(search(p, g, SearchMode::nontrivial, o, "A:6"), g);
  }
  CHECK(render_json(strip_wall(first)) == render_json(strip_wall(second)));

  // The same holds for inventories and runbook reports.
  Group s6 = build_group("S:6");
  const std::string inv1 = render_json(to_json(enumerate_tss(s6, 3, 1u << 22, "S:6"), s6));
  const std::string inv2 = render_json(to_json(enumerate_tss(s6, 3, 1u << 22, "S:6"), s6));
  CHECK(inv1 == inv2);

  RunbookOptions ro;
  ro.only_item = 2;
  const std::string rb1 = render_json(strip_wall(to_json(run_runbook(ro))));
  ro.threads = 3;
  const std::string rb2 = render_json(strip_wall(to_json(run_runbook(ro))));
  CHECK(rb1 == rb2);
}

TEST_CASE("json report shapes") {
  const BoundReport br = bound(8);
  const nlohmann::ordered_json bj = to_json(br);
  CHECK(bj["version"] == kReportVersion);
  CHECK(bj["kind"] == "bound");
  CHECK(bj["n"] == 8);
  CHECK(bj["bound"] == 648);
  CHECK(bj["prior_bound"] == 192);

  Group g = build_group("S:5");
  const Presentation p = presentation_from_token("bn:5");
  const SearchReport sr = search(p, g, SearchMode::noncyclic, {}, "S:5");
  const nlohmann::ordered_json sj = to_json(sr, g);
  CHECK(sj["kind"] == "search");
  CHECK(sj["presentation"] == "bn:5");
  CHECK(sj["group"] == "S:5");
  CHECK(sj["mode"] == "noncyclic");
  CHECK(sj["verdict"] == "found");
  CHECK(sj["exhaustive"] == true);
  REQUIRE(sj["witnesses"].size() >= 1);
  const auto& w0 = sj["witnesses"][0];
  REQUIRE(w0["ids"].size() == 4);
  REQUIRE(w0["elements"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Eid id = w0["ids"][i].get<Eid>();
    CHECK(w0["elements"][i].get<std::string>() == g.describe(id));
  }
  CHECK(sj["stats"].contains("nodes_expanded"));
  CHECK(sj["stats"].contains("wall_seconds"));

  const nlohmann::ordered_json tj = to_json(enumerate_tss(g, 2, 1u << 22, "S:5"), g);
  CHECK(tj["kind"] == "tss");
  CHECK(tj["group"] == "S:5");
  CHECK(tj["k"] == 2);
  for (const auto& cls : tj["classes"]) {
    CHECK(cls["members"].size() == 2);
    CHECK(cls["members_printable"].size() == 2);
    CHECK(cls["witnesses_printable"].size() == 1);
    CHECK(cls["orbit_size"].get<std::uint64_t>() >= 1);
  }

  const nlohmann::ordered_json oj = order_table_json(verify_order_table());
  CHECK(oj["kind"] == "order_table");
  CHECK(oj["rows"].size() == 20);
  CHECK(oj["flagged_count"] == 2);

  const nlohmann::ordered_json gj = to_json(gl2_tss_search(4, 3));
  CHECK(gj["kind"] == "gl_probe");
  CHECK(gj["group"] == "GL2:4");
  CHECK(gj["k"] == 3);
  CHECK(gj["classes"].empty());

  // Rendered text must parse back as JSON and end with a newline.
  const std::string text = render_json(sj);
  CHECK(text.back() == '\n');
  const nlohmann::json reparsed = nlohmann::json::parse(text);
  CHECK(reparsed["kind"] == "search");
}
