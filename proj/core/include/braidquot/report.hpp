// Reproduction runbook, order-bound calculator, and stable JSON emission.
// The runbook pins each expected verdict as data so any drift in the engine
// fails loudly; JSON output has a fixed key order and a version field, and
// is byte-identical across runs once the wall-time fields are stripped.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidquot/catalog.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/search.hpp"
#include "braidquot/tss.hpp"

namespace braidquot {

inline constexpr const char* kReportVersion = "1.0";

// "bn:<n>" -> braid presentation, "bnp:<n>" -> commutator-subgroup
// presentation (relator file loaded from the bundled data directory).
Presentation presentation_from_token(const std::string& token);

struct BoundReport {
  int n = 0;
  std::uint64_t bound = 0;        // 3^(floor(n/2)-1) * floor(n/2)!
  std::uint64_t prior_bound = 0;  // 2^(floor(n/2)-1) * floor(n/2)!
};
// Smallest order a noncyclic braid-group quotient can have, by strand count.
// Throws Error for n < 5.
BoundReport bound(int n);

struct RunbookItem {
  int id = 0;
  std::string claim;       // short human-readable statement of the check
  std::string invocation;  // equivalent single-item CLI command
  std::string expected;
  std::string observed;
  bool ok = false;
  bool slow = false;          // excluded unless explicitly requested
  bool inconclusive = false;  // a capped search (never counts as ok)
  double wall_seconds = 0.0;
};

struct RunbookReport {
  std::vector<RunbookItem> items;
  bool all_ok = false;
  bool any_inconclusive = false;
};

struct RunbookOptions {
  bool include_slow = false;
  int only_item = 0;  // 0 = all selected items, else a single id
  int threads = 0;    // forwarded to each search
  std::ostream* progress = nullptr;  // one line per completed item
};

// The full expected-verdict table, ids 1..15 (1..12 homomorphism
// nonexistence checks, 13 the GL2 sweep, 14 the order table, 15 positive
// controls). Items 9..12 are the slow eight-strand targets.
RunbookReport run_runbook(const RunbookOptions& opts = {});

nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const RunbookReport& r);
nlohmann::ordered_json to_json(const SearchReport& r, const Group& g);
nlohmann::ordered_json to_json(const TssInventory& inv, const Group& g);
nlohmann::ordered_json to_json(const GlProbeResult& r);
nlohmann::ordered_json order_table_json(const std::vector<OrderTableRow>& rows);

// Serialize with 2-space indentation and a trailing newline.
std::string render_json(const nlohmann::ordered_json& j);

}  // namespace braidquot
