// Named group constructors. Specs are short tokens (S:5, PSL2:7, M11, ...);
// every build is validated against a known order formula or the generator
// file's order line, so a wrong generating set is a hard failure rather than
// a silently smaller group.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "braidquot/group.hpp"
#include "braidquot/permutation.hpp"

namespace braidquot {

struct GroupSpec {
  enum class Family { S, A, C, D, GL2, SL2, PSL2, PGL2, PSL3, PSU3, M10, M11, file };

  Family family = Family::S;
  int param = 0;     // n or q; unused for M10/M11/file
  std::string path;  // file family only

  // Grammar: S:n | A:n | C:n | D:n | GL2:q | SL2:q | PSL2:q | PGL2:q |
  //          PSL3:q | PSU3:3 | M10 | M11 | file:<path>
  static GroupSpec parse(const std::string& token);
  std::string to_string() const;
};

// Order the named group must have (formula or known constant). For the file
// family this reads the file's order header.
std::uint64_t expected_order(const GroupSpec& spec);

// Build and enumerate the group; throws ValidationError if the closure's
// order disagrees with expected_order.
Group build_group(const GroupSpec& spec);
Group build_group(const std::string& token);

// GL_dim(F_q) as a matrix-kind handle (dim 2 or 3), order-validated.
Group build_gl(int dim, int q);

// Text format: `degree N` / `order M` / `source <free text>`, then one
// generator per line in 1-based cycle notation.
struct GeneratorFile {
  int degree = 0;
  std::uint64_t order = 0;
  std::string source;
  std::vector<Permutation> generators;

  static GeneratorFile parse(const std::string& text);
  static GeneratorFile load(const std::string& path);
  std::string serialize() const;
};

// Directory holding bundled .gens/.rel files: $BRAIDQUOT_DATA_DIR, else the
// source-tree data directory baked in at compile time, else ./data.
std::string data_dir();

// Every buildable catalog token (all families, all supported parameters)
// whose expected order is at most max_order, in a fixed family-major order.
// Used by the property suites that quantify over "all catalog groups".
std::vector<std::string> catalog_grid(std::uint64_t max_order);

// Projective line P^1(F_q): q+1 points as canonical row vectors (first
// nonzero coordinate 1), in a fixed enumeration order; a matrix acts by
// v -> canon(v * M), giving a right action compatible with compose().
std::vector<std::array<std::uint8_t, 2>> projective_line_points(int q);
Permutation projective_line_action(const FqField& f, const Matrix& m);

// Projective plane P^2(F_q): q^2+q+1 points, same conventions.
std::vector<std::array<std::uint8_t, 3>> projective_plane_points(int q);
Permutation projective_plane_action(const FqField& f, const Matrix& m);

// The reference list of simple non-abelian groups of order <= 8!/2, with the
// order each row prints in the source table vs. the order computed here
// (formula-validated closure). Discrepancies are flagged, never corrected.
struct OrderTableRow {
  std::string label;        // e.g. "PSL(2,13)"
  std::string spec;         // catalog token used to build it
  std::uint64_t printed;    // order as printed in the reference table
  std::uint64_t computed;   // order of the built group
  bool flagged;             // printed != computed
};
std::vector<OrderTableRow> verify_order_table();

}  // namespace braidquot
