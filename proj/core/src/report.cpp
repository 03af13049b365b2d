#include "braidquot/report.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "braidquot/error.hpp"

namespace braidquot {

Presentation presentation_from_token(const std::string& token) {
  auto colon = token.find(':');
  if (colon == std::string::npos)
    throw Error("presentation token must look like bn:<n> or bnp:<n>, got '" + token + "'");
  const std::string kind = token.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(token.substr(colon + 1), &used);
    if (colon + 1 + used != token.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error("bad strand count in presentation token '" + token + "'");
  }
  if (kind == "bn") return braid_presentation(n);
  if (kind == "bnp") return bn_prime_presentation(n);
  throw Error("unknown presentation kind '" + kind + "' (expected bn or bnp)");
}

BoundReport bound(int n) {
  if (n < 5) throw Error("bound(n) requires n >= 5");
  const int half = n / 2;
  BoundReport r;
  r.n = n;
  std::uint64_t fact = 1;
  for (int i = 2; i <= half; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t three = 1, two = 1;
  for (int i = 0; i < half - 1; ++i) {
    three *= 3;
    two *= 2;
  }
  r.bound = three * fact;
  r.prior_bound = two * fact;
  return r;
}

namespace {

struct HomItem {
  int id;
  const char* presentation;
  const char* group;
  SearchMode mode;
  const char* expected;
  bool slow;
  const char* claim;
};

constexpr HomItem kHomItems[] = {
    {1, "bnp:6", "PSL2:7", SearchMode::nontrivial, "none", false,
     "six-strand commutator subgroup has no nontrivial image in PSL(2,7)"},
    {2, "bn:6", "PGL2:9", SearchMode::noncyclic, "none", false,
     "six-strand braid group has no noncyclic image in PGL(2,9)"},
    {3, "bn:6", "M10", SearchMode::noncyclic, "none", false,
     "six-strand braid group has no noncyclic image in M10"},
    {4, "bnp:7", "PSL2:8", SearchMode::nontrivial, "none", false,
     "seven-strand commutator subgroup has no nontrivial image in PSL(2,8)"},
    {5, "bnp:7", "PSL2:11", SearchMode::nontrivial, "none", false,
     "seven-strand commutator subgroup has no nontrivial image in PSL(2,11)"},
    {6, "bnp:7", "PSL2:13", SearchMode::nontrivial, "none", false,
     "seven-strand commutator subgroup has no nontrivial image in PSL(2,13)"},
    {7, "bnp:7", "PSL2:16", SearchMode::nontrivial, "none", false,
     "seven-strand commutator subgroup has no nontrivial image in PSL(2,16)"},
    {8, "bnp:7", "PSL2:17", SearchMode::nontrivial, "none", false,
     "seven-strand commutator subgroup has no nontrivial image in PSL(2,17)"},
    {9, "bnp:8", "PSL3:3", SearchMode::nontrivial, "none", true,
     "eight-strand commutator subgroup has no nontrivial image in PSL(3,3)"},
    {10, "bnp:8", "PSU3:3", SearchMode::nontrivial, "none", true,
     "eight-strand commutator subgroup has no nontrivial image in PSU(3,3)"},
    {11, "bnp:8", "M11", SearchMode::nontrivial, "none", true,
     "eight-strand commutator subgroup has no nontrivial image in M11"},
    {12, "bnp:8", "PSL3:4", SearchMode::nontrivial, "none", true,
     "eight-strand commutator subgroup has no nontrivial image in PSL(3,4)"},
};

RunbookItem run_hom_item(const HomItem& spec, int threads) {
  RunbookItem item;
  item.id = spec.id;
  item.claim = spec.claim;
  item.expected = spec.expected;
  item.slow = spec.slow;
  item.invocation = std::string("hom check --presentation ") + spec.presentation +
                    " --group " + spec.group + " --mode " + to_string(spec.mode);
  const auto t0 = std::chrono::steady_clock::now();
  Presentation p = presentation_from_token(spec.presentation);
  Group g = build_group(spec.group);
  SearchOptions opts;
  opts.threads = threads;
  SearchReport rep = search(p, g, spec.mode, opts, spec.group);
  item.observed = to_string(rep.verdict);
  item.inconclusive = rep.verdict == Verdict::inconclusive;
  item.ok = !item.inconclusive && item.observed == item.expected;
  item.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return item;
}

RunbookItem run_gl_sweep() {
  RunbookItem item;
  item.id = 13;
  item.claim = "GL2 over F_q has no cardinality-3 totally symmetric set, q in {2,3,4,5}";
  item.invocation = "tss probe --n 3 --q 2|3|4|5";
  item.expected = "empty";
  const auto t0 = std::chrono::steady_clock::now();
  std::string bad;
  for (int q : {2, 3, 4, 5}) {
    GlProbeResult r = gl2_tss_search(q, 3);
    if (!r.inventory.classes.empty()) bad += (bad.empty() ? "" : ",") + r.group;
  }
  item.observed = bad.empty() ? "empty" : "nonempty:" + bad;
  item.ok = bad.empty();
  item.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return item;
}

RunbookItem run_order_table() {
  RunbookItem item;
  item.id = 14;
  item.claim = "computed simple-group orders match the printed table except two known typos";
  item.invocation = "catalog verify";
  item.expected = "flagged PSL2:13 PSL2:16";
  const auto t0 = std::chrono::steady_clock::now();
  std::string flagged;
  for (const OrderTableRow& row : verify_order_table())
    if (row.flagged) flagged += (flagged.empty() ? "" : " ") + row.spec;
  item.observed = "flagged " + flagged;
  item.ok = item.observed == item.expected;
  item.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return item;
}

RunbookItem run_positive_controls(int threads) {
  RunbookItem item;
  item.id = 15;
  item.claim = "standard symmetric and alternating images exist for n in {5,6,7,8}";
  item.invocation = "hom check --presentation bn:<n>|bnp:<n> --group S:<n>|A:<n> "
                    "--mode noncyclic|nontrivial";
  item.expected = "all found";
  const auto t0 = std::chrono::steady_clock::now();
  std::string missing;
  for (int n = 5; n <= 8; ++n) {
    struct Run {
      Presentation p;
      std::string group;
      SearchMode mode;
    };
    const Run runs[] = {
        {braid_presentation(n), "S:" + std::to_string(n), SearchMode::noncyclic},
        {bn_prime_presentation(n), "A:" + std::to_string(n), SearchMode::nontrivial},
    };
    for (const Run& r : runs) {
      Group g = build_group(r.group);
      SearchOptions opts;
      opts.threads = threads;
      SearchReport rep = search(r.p, g, r.mode, opts, r.group);
      bool ok = rep.verdict == Verdict::found;
      for (const Assignment& a : rep.witnesses)
        ok = ok && verify(r.p, g, a, r.mode);
      if (!ok) missing += (missing.empty() ? "" : ",") + r.group;
    }
  }
  item.observed = missing.empty() ? "all found" : "missing:" + missing;
  item.ok = missing.empty();
  item.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return item;
}

void note(const RunbookOptions& opts, const RunbookItem& item) {
  if (!opts.progress) return;
  (*opts.progress) << "item " << item.id << ": " << (item.ok ? "ok" : "MISMATCH")
                   << " (expected " << item.expected << ", observed " << item.observed
                   << ", " << item.wall_seconds << "s) — " << item.claim << '\n';
}

}  // namespace

RunbookReport run_runbook(const RunbookOptions& opts) {
  RunbookReport rep;
  auto selected = [&](int id, bool slow) {
    if (opts.only_item != 0) return id == opts.only_item;
    return opts.include_slow || !slow;
  };
  for (const HomItem& h : kHomItems) {
    if (!selected(h.id, h.slow)) continue;
    rep.items.push_back(run_hom_item(h, opts.threads));
    note(opts, rep.items.back());
  }
  if (selected(13, false)) {
    rep.items.push_back(run_gl_sweep());
    note(opts, rep.items.back());
  }
  if (selected(14, false)) {
    rep.items.push_back(run_order_table());
    note(opts, rep.items.back());
  }
  if (selected(15, false)) {
    rep.items.push_back(run_positive_controls(opts.threads));
    note(opts, rep.items.back());
  }
  if (rep.items.empty()) throw Error("no runbook item with the requested id");
  rep.all_ok = true;
  for (const RunbookItem& item : rep.items) {
    rep.all_ok = rep.all_ok && item.ok;
    rep.any_inconclusive = rep.any_inconclusive || item.inconclusive;
  }
  return rep;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "bound";
  j["n"] = r.n;
  j["bound"] = r.bound;
  j["prior_bound"] = r.prior_bound;
  return j;
}

nlohmann::ordered_json to_json(const RunbookReport& r) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "runbook";
  j["items"] = nlohmann::ordered_json::array();
  for (const RunbookItem& item : r.items) {
    nlohmann::ordered_json ji;
    ji["id"] = item.id;
    ji["claim"] = item.claim;
    ji["invocation"] = item.invocation;
    ji["expected"] = item.expected;
    ji["observed"] = item.observed;
    ji["ok"] = item.ok;
    ji["slow"] = item.slow;
    ji["inconclusive"] = item.inconclusive;
    ji["wall_seconds"] = item.wall_seconds;
    j["items"].push_back(std::move(ji));
  }
  j["all_ok"] = r.all_ok;
  j["any_inconclusive"] = r.any_inconclusive;
  return j;
}

nlohmann::ordered_json to_json(const SearchReport& r, const Group& g) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "search";
  j["presentation"] = r.presentation;
  j["group"] = r.group;
  j["mode"] = to_string(r.mode);
  j["verdict"] = to_string(r.verdict);
  j["exhaustive"] = r.exhaustive;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const Assignment& a : r.witnesses) {
    nlohmann::ordered_json jw;
    jw["ids"] = a;
    auto printable = nlohmann::ordered_json::array();
    for (Eid e : a) printable.push_back(g.describe(e));
    jw["elements"] = std::move(printable);
    j["witnesses"].push_back(std::move(jw));
  }
  j["stats"]["tss_candidates"] = r.stats.tss_candidates;
  j["stats"]["root_branches"] = r.stats.root_branches;
  j["stats"]["nodes_expanded"] = r.stats.nodes_expanded;
  j["stats"]["propagation_rounds"] = r.stats.propagation_rounds;
  j["stats"]["capped_branches"] = r.stats.capped_branches;
  j["stats"]["wall_seconds"] = r.stats.wall_seconds;
  return j;
}

nlohmann::ordered_json to_json(const TssInventory& inv, const Group& g) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "tss";
  j["group"] = inv.group;
  j["k"] = inv.k;
  j["class_count"] = inv.classes.size();
  j["classes"] = nlohmann::ordered_json::array();
  for (const TotSymSet& t : inv.classes) {
    nlohmann::ordered_json jc;
    jc["members"] = t.members;
    auto mp = nlohmann::ordered_json::array();
    for (Eid e : t.members) mp.push_back(g.describe(e));
    jc["members_printable"] = std::move(mp);
    jc["witnesses"] = t.witnesses;
    auto wp = nlohmann::ordered_json::array();
    for (Eid e : t.witnesses) wp.push_back(g.describe(e));
    jc["witnesses_printable"] = std::move(wp);
    jc["orbit_size"] = t.orbit_size;
    j["classes"].push_back(std::move(jc));
  }
  return j;
}

nlohmann::ordered_json to_json(const GlProbeResult& r) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "gl_probe";
  j["group"] = r.group;
  j["group_order"] = r.group_order;
  j["k"] = r.k;
  j["class_count"] = r.inventory.classes.size();
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.inventory.classes.size(); ++i) {
    nlohmann::ordered_json jc;
    jc["members"] = r.inventory.classes[i].members;
    jc["members_printable"] = r.printable[i];
    jc["orbit_size"] = r.inventory.classes[i].orbit_size;
    j["classes"].push_back(std::move(jc));
  }
  return j;
}

nlohmann::ordered_json order_table_json(const std::vector<OrderTableRow>& rows) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["kind"] = "order_table";
  j["rows"] = nlohmann::ordered_json::array();
  std::size_t flagged = 0;
  for (const OrderTableRow& row : rows) {
    nlohmann::ordered_json jr;
    jr["label"] = row.label;
    jr["spec"] = row.spec;
    jr["printed"] = row.printed;
    jr["computed"] = row.computed;
    jr["flagged"] = row.flagged;
    if (row.flagged) ++flagged;
    j["rows"].push_back(std::move(jr));
  }
  j["flagged_count"] = flagged;
  return j;
}

std::string render_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace braidquot
