// Command-line front end: totally-symmetric-set inventories, homomorphism
// existence checks, the reproduction runbook, the order-bound calculator,
// and catalog verification. Exit codes: 0 = expectations met / decisive
// result, 1 = expectation mismatch, 2 = inconclusive (a capped search),
// 3 = usage or runtime error.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"
#include "braidquot/group.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/report.hpp"
#include "braidquot/search.hpp"
#include "braidquot/tss.hpp"

namespace bq = braidquot;

namespace {

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  const std::string text = bq::render_json(j);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bq::Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.good()) throw bq::Error("failed writing '" + path + "'");
}

int cmd_tss_enumerate(const std::string& group_token, int k,
                      const std::string& json_path, std::uint64_t cap) {
  bq::Group g = bq::build_group(group_token);
  bq::TssInventory inv = bq::enumerate_tss(g, k, cap, group_token);
  std::cout << group_token << " (order " << g.order() << "), cardinality " << k
            << ": " << inv.classes.size() << " class"
            << (inv.classes.size() == 1 ? "" : "es") << "\n";
  for (std::size_t i = 0; i < inv.classes.size(); ++i) {
    const bq::TotSymSet& t = inv.classes[i];
    std::cout << "  class " << i << " (orbit size " << t.orbit_size << "):";
    for (bq::Eid e : t.members) std::cout << ' ' << g.describe(e);
    std::cout << "\n    witnesses:";
    for (bq::Eid e : t.witnesses) std::cout << ' ' << g.describe(e);
    std::cout << '\n';
  }
  if (!json_path.empty()) write_json(json_path, bq::to_json(inv, g));
  return 0;
}

int cmd_tss_probe(int n, int q, const std::string& json_path) {
  bq::GlProbeResult r = bq::gl_open_question_probe(n, q);
  std::cout << r.group << " (order " << r.group_order << "), cardinality " << r.k
            << ": " << r.inventory.classes.size() << " class"
            << (r.inventory.classes.size() == 1 ? "" : "es") << "\n";
  for (std::size_t i = 0; i < r.inventory.classes.size(); ++i) {
    std::cout << "  class " << i << ":";
    for (const std::string& m : r.printable[i]) std::cout << ' ' << m;
    std::cout << '\n';
  }
  if (!json_path.empty()) write_json(json_path, bq::to_json(r));
  return 0;
}

int cmd_hom_check(const std::string& pres_token, const std::string& group_token,
                  const std::string& mode_text, const std::string& json_path,
                  int threads, std::uint64_t node_cap, const std::string& expect) {
  bq::Presentation p = bq::presentation_from_token(pres_token);
  bq::Group g = bq::build_group(group_token);
  bq::SearchMode mode = bq::parse_mode(mode_text);
  bq::SearchOptions opts;
  opts.threads = threads;
  opts.node_cap = node_cap;
  bq::SearchReport rep = bq::search(p, g, mode, opts, group_token);
  std::cout << rep.presentation << " -> " << group_token << " [" << mode_text
            << "]: " << bq::to_string(rep.verdict)
            << (rep.exhaustive ? " (exhaustive)" : " (not exhaustive)") << "\n"
            << "  tss classes " << rep.stats.tss_candidates << ", root branches "
            << rep.stats.root_branches << ", nodes " << rep.stats.nodes_expanded
            << ", " << rep.stats.wall_seconds << "s\n";
  for (const bq::Assignment& a : rep.witnesses) {
    std::cout << "  witness:";
    for (std::size_t i = 0; i < a.size(); ++i)
      std::cout << ' ' << p.generators[i] << "=" << g.describe(a[i]);
    std::cout << '\n';
  }
  if (!json_path.empty()) write_json(json_path, bq::to_json(rep, g));
  if (rep.verdict == bq::Verdict::inconclusive) return 2;
  if (!expect.empty() && expect != bq::to_string(rep.verdict)) return 1;
  return 0;
}

int cmd_reproduce(bool slow, int item, int threads, const std::string& json_path) {
  bq::RunbookOptions opts;
  opts.include_slow = slow;
  opts.only_item = item;
  opts.threads = threads;
  opts.progress = &std::cout;
  bq::RunbookReport rep = bq::run_runbook(opts);
  std::size_t ok = 0;
  for (const bq::RunbookItem& it : rep.items) ok += it.ok ? 1 : 0;
  std::cout << "runbook: " << ok << "/" << rep.items.size() << " items ok\n";
  if (!json_path.empty()) write_json(json_path, bq::to_json(rep));
  if (!rep.all_ok) return rep.any_inconclusive && ok == rep.items.size() ? 2 : 1;
  return 0;
}

int cmd_bound(int n, const std::string& json_path) {
  bq::BoundReport r = bq::bound(n);
  std::cout << "n=" << r.n << ": bound " << r.bound << " (prior bound "
            << r.prior_bound << ")\n";
  if (!json_path.empty()) write_json(json_path, bq::to_json(r));
  return 0;
}

int cmd_catalog_verify(const std::string& json_path) {
  std::vector<bq::OrderTableRow> rows = bq::verify_order_table();
  std::size_t flagged = 0;
  for (const bq::OrderTableRow& row : rows) {
    std::cout << "  " << row.label << " (" << row.spec << "): computed "
              << row.computed << ", printed " << row.printed
              << (row.flagged ? "  <-- printed value differs" : "") << '\n';
    flagged += row.flagged ? 1 : 0;
  }
  std::cout << rows.size() << " rows, " << flagged << " flagged\n";
  if (!json_path.empty()) write_json(json_path, bq::order_table_json(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally symmetric sets and homomorphism searches in finite groups"};
  app.require_subcommand(1);

  auto* tss = app.add_subcommand("tss", "Totally symmetric set inventories");
  tss->require_subcommand(1);
  std::string te_group;
  int te_k = 0;
  std::string te_json;
  std::uint64_t te_cap = 10'000'000;
  auto* te = tss->add_subcommand("enumerate",
                                 "Enumerate cardinality-k totally symmetric classes");
  te->add_option("--group", te_group, "catalog token, e.g. S:6 or PSL2:7")->required();
  te->add_option("--k", te_k, "set cardinality (>= 2)")->required();
  te->add_option("--json", te_json, "write a JSON report to this path ('-' = stdout)");
  te->add_option("--cap", te_cap, "work cap for the enumeration");

  int tp_n = 3, tp_q = 2;
  std::string tp_json;
  auto* tp = tss->add_subcommand(
      "probe", "Search GL_{n-1}(F_q) for cardinality-n totally symmetric sets");
  tp->add_option("--n", tp_n, "set cardinality; the matrix group has rank n-1")
      ->required();
  tp->add_option("--q", tp_q, "field size")->required();
  tp->add_option("--json", tp_json, "write a JSON report to this path ('-' = stdout)");

  auto* hom = app.add_subcommand("hom", "Homomorphism existence checks");
  hom->require_subcommand(1);
  std::string hc_pres, hc_group, hc_mode, hc_json, hc_expect;
  int hc_threads = 0;
  std::uint64_t hc_cap = bq::SearchOptions{}.node_cap;
  auto* hc = hom->add_subcommand("check", "Decide whether a qualifying map exists");
  hc->add_option("--presentation", hc_pres, "bn:<n> (braid) or bnp:<n> (commutator)")
      ->required();
  hc->add_option("--group", hc_group, "catalog token for the target group")->required();
  hc->add_option("--mode", hc_mode, "noncyclic, nontrivial, or all")->required();
  hc->add_option("--json", hc_json, "write the JSON report to this path ('-' = stdout)");
  hc->add_option("--threads", hc_threads, "worker threads (0 = hardware)");
  hc->add_option("--cap", hc_cap, "node cap per root branch");
  hc->add_option("--expect", hc_expect,
                 "exit 1 unless the verdict matches (found or none)");

  bool rp_slow = false;
  int rp_item = 0, rp_threads = 0;
  std::string rp_json;
  auto* rp = app.add_subcommand("reproduce", "Run the expected-verdict runbook");
  rp->add_flag("--slow", rp_slow, "include the eight-strand targets (items 9-12)");
  rp->add_option("--item", rp_item, "run a single item by id (1-15)");
  rp->add_option("--threads", rp_threads, "worker threads per search (0 = hardware)");
  rp->add_option("--json", rp_json, "write the JSON report to this path ('-' = stdout)");

  int bd_n = 0;
  std::string bd_json;
  auto* bd = app.add_subcommand("bound",
                                "Smallest possible noncyclic quotient order, by strands");
  bd->add_option("--n", bd_n, "strand count (>= 5)")->required();
  bd->add_option("--json", bd_json, "write a JSON report to this path ('-' = stdout)");

  auto* cat = app.add_subcommand("catalog", "Catalog utilities");
  cat->require_subcommand(1);
  std::string cv_json;
  auto* cv = cat->add_subcommand("verify", "Rebuild the simple-group order table");
  cv->add_option("--json", cv_json, "write a JSON report to this path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (te->parsed()) return cmd_tss_enumerate(te_group, te_k, te_json, te_cap);
    if (tp->parsed()) return cmd_tss_probe(tp_n, tp_q, tp_json);
    if (hc->parsed())
      return cmd_hom_check(hc_pres, hc_group, hc_mode, hc_json, hc_threads, hc_cap,
                           hc_expect);
    if (rp->parsed()) return cmd_reproduce(rp_slow, rp_item, rp_threads, rp_json);
    if (bd->parsed()) return cmd_bound(bd_n, bd_json);
    if (cv->parsed()) return cmd_catalog_verify(cv_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  std::cerr << "error: no subcommand\n";
  return 3;
}
