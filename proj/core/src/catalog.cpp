#include "braidquot/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "braidquot/error.hpp"

namespace braidquot {
namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int parse_param(const std::string& token, std::size_t colon) {
  if (colon == std::string::npos || colon + 1 >= token.size())
    throw ParseError("group spec '" + token + "': missing parameter");
  const std::string tail = token.substr(colon + 1);
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("group spec '" + token + "': bad parameter '" + tail + "'");
  if (tail.size() > 4)
    throw ParseError("group spec '" + token + "': parameter out of range");
  return std::stoi(tail);
}

void require(bool ok, const std::string& token, const char* what) {
  if (!ok) throw ParseError("group spec '" + token + "': " + what);
}

bool projective_q_ok(int q) {
  // Needs the q+1 projective-line points to fit the permutation degree cap.
  return FqField::supported(q) && q + 1 <= kMaxDegree;
}

Permutation transposition01(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  img[0] = 1;
  img[1] = 0;
  return Permutation(std::move(img));
}

Permutation three_cycle012(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  img[0] = 1;
  img[1] = 2;
  img[2] = 0;
  return Permutation(std::move(img));
}

Permutation full_cycle(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % n);
  return Permutation(std::move(img));
}

// (1 2 ... n-1) fixing point 0; even exactly when n is even.
Permutation cycle_fixing_zero(int n) {
  std::vector<std::uint8_t> img(n);
  img[0] = 0;
  for (int i = 1; i < n; ++i) img[i] = static_cast<std::uint8_t>(i % (n - 1) + 1);
  return Permutation(std::move(img));
}

Permutation ngon_reflection(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((n - i) % n);
  return Permutation(std::move(img));
}

Matrix transvection(int dim, int row, int col, std::uint8_t a) {
  Matrix m = mat_identity(dim);
  m.at(row, col) = a;
  return m;
}

// Upper and lower elementary transvections with entries gamma^k for
// k < [F_q : F_p]; those powers span F_q additively, so the transvections
// they parameterize generate the full special linear group. The order check
// after closure certifies this.
std::vector<Matrix> sl_generators(int dim, const FqField& f) {
  std::vector<Matrix> gens;
  std::uint8_t a = 1;
  for (int k = 0; k < f.degree(); ++k) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j) gens.push_back(transvection(dim, i, j, a));
    a = f.mul(a, f.multiplicative_generator());
  }
  return gens;
}

Matrix diag_gamma(int dim, const FqField& f) {
  Matrix m = mat_identity(dim);
  m.at(0, 0) = f.multiplicative_generator();
  return m;
}

Group close_perm(int degree, const std::vector<Permutation>& gens) {
  ElementContext ctx = ElementContext::perm(degree);
  std::vector<Element> packed;
  packed.reserve(gens.size());
  for (const Permutation& p : gens) packed.push_back(pack(ctx, p));
  return Group::close(ctx, std::move(packed));
}

Group close_line_images(int q, const std::vector<Matrix>& mats) {
  const FqField& f = FqField::get(q);
  std::vector<Permutation> gens;
  gens.reserve(mats.size());
  for (const Matrix& m : mats) gens.push_back(projective_line_action(f, m));
  return close_perm(q + 1, gens);
}

Group load_gens_group(const std::string& path) {
  GeneratorFile gf = GeneratorFile::load(path);
  Group g = close_perm(gf.degree, gf.generators);
  if (g.order() != gf.order)
    throw ValidationError(path + ": closure has order " +
                          std::to_string(g.order()) + ", file declares " +
                          std::to_string(gf.order));
  return g;
}

std::string bundled(const std::string& name) {
  return data_dir() + "/" + name;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& token) {
  GroupSpec s;
  const std::size_t colon = token.find(':');
  const std::string head = token.substr(0, colon);
  if (head == "M10" || head == "M11") {
    require(colon == std::string::npos, token, "takes no parameter");
    s.family = head == "M10" ? Family::M10 : Family::M11;
    return s;
  }
  if (head == "file") {
    require(colon != std::string::npos && colon + 1 < token.size(), token,
            "missing path");
    s.family = Family::file;
    s.path = token.substr(colon + 1);
    return s;
  }
  s.param = parse_param(token, colon);
  const int n = s.param;
  if (head == "S" || head == "A") {
    s.family = head == "S" ? Family::S : Family::A;
    require(n >= 2 && n <= 12, token, "n must be in 2..12");
  } else if (head == "C") {
    s.family = Family::C;
    require(n >= 1 && n <= kMaxDegree, token, "n must be in 1..32");
  } else if (head == "D") {
    s.family = Family::D;
    require(n >= 3 && n <= 16, token, "n must be in 3..16");
  } else if (head == "GL2" || head == "SL2") {
    s.family = head == "GL2" ? Family::GL2 : Family::SL2;
    require(FqField::supported(n) && n <= 31, token, "q must be a supported prime power <= 31");
  } else if (head == "PSL2" || head == "PGL2") {
    s.family = head == "PSL2" ? Family::PSL2 : Family::PGL2;
    require(projective_q_ok(n), token, "q must be a supported prime power <= 31");
  } else if (head == "PSL3") {
    s.family = Family::PSL3;
    require(FqField::supported(n) && n <= 5, token, "q must be in {2,3,4,5}");
  } else if (head == "PSU3") {
    s.family = Family::PSU3;
    require(n == 3, token, "only PSU3:3 is available");
  } else {
    throw ParseError("group spec '" + token + "': unknown family '" + head + "'");
  }
  return s;
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::S: return "S:" + std::to_string(param);
    case Family::A: return "A:" + std::to_string(param);
    case Family::C: return "C:" + std::to_string(param);
    case Family::D: return "D:" + std::to_string(param);
    case Family::GL2: return "GL2:" + std::to_string(param);
    case Family::SL2: return "SL2:" + std::to_string(param);
    case Family::PSL2: return "PSL2:" + std::to_string(param);
    case Family::PGL2: return "PGL2:" + std::to_string(param);
    case Family::PSL3: return "PSL3:" + std::to_string(param);
    case Family::PSU3: return "PSU3:3";
    case Family::M10: return "M10";
    case Family::M11: return "M11";
    case Family::file: return "file:" + path;
  }
  return "?";
}

std::uint64_t expected_order(const GroupSpec& spec) {
  const std::uint64_t q = spec.param;
  switch (spec.family) {
    case GroupSpec::Family::S: return factorial(spec.param);
    case GroupSpec::Family::A: return factorial(spec.param) / 2;
    case GroupSpec::Family::C: return q;
    case GroupSpec::Family::D: return 2 * q;
    case GroupSpec::Family::GL2: return (q * q - 1) * (q * q - q);
    case GroupSpec::Family::SL2: return q * (q * q - 1);
    case GroupSpec::Family::PSL2: return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    case GroupSpec::Family::PGL2: return q * (q * q - 1);
    case GroupSpec::Family::PSL3:
      return q * q * q * (q * q * q - 1) * (q * q - 1) /
             std::gcd<std::uint64_t>(3, q - 1);
    case GroupSpec::Family::PSU3: return 6048;
    case GroupSpec::Family::M10: return 720;
    case GroupSpec::Family::M11: return 7920;
    case GroupSpec::Family::file: return GeneratorFile::load(spec.path).order;
  }
  return 0;
}

Group build_group(const GroupSpec& spec) {
  const int n = spec.param;
  Group g = [&]() -> Group {
    switch (spec.family) {
      case GroupSpec::Family::S:
        if (n == 2) return close_perm(2, {transposition01(2)});
        return close_perm(n, {transposition01(n), full_cycle(n)});
      case GroupSpec::Family::A:
        if (n == 2) return close_perm(2, {});
        if (n % 2 == 1) return close_perm(n, {three_cycle012(n), full_cycle(n)});
        return close_perm(n, {three_cycle012(n), cycle_fixing_zero(n)});
      case GroupSpec::Family::C:
        if (n == 1) return close_perm(1, {});
        return close_perm(n, {full_cycle(n)});
      case GroupSpec::Family::D:
        return close_perm(n, {full_cycle(n), ngon_reflection(n)});
      case GroupSpec::Family::GL2:
        return build_gl(2, n);
      case GroupSpec::Family::SL2: {
        const FqField& f = FqField::get(n);
        ElementContext ctx = ElementContext::mat(2, f, false);
        std::vector<Element> gens;
        for (const Matrix& m : sl_generators(2, f)) gens.push_back(pack(ctx, m));
        return Group::close(ctx, std::move(gens));
      }
      case GroupSpec::Family::PSL2:
        return close_line_images(n, sl_generators(2, FqField::get(n)));
      case GroupSpec::Family::PGL2: {
        const FqField& f = FqField::get(n);
        std::vector<Matrix> mats = sl_generators(2, f);
        mats.push_back(diag_gamma(2, f));
        return close_line_images(n, mats);
      }
      case GroupSpec::Family::PSL3: {
        const FqField& f = FqField::get(n);
        std::vector<Permutation> gens;
        for (const Matrix& m : sl_generators(3, f))
          gens.push_back(projective_plane_action(f, m));
        return close_perm(n * n + n + 1, gens);
      }
      case GroupSpec::Family::PSU3:
        return load_gens_group(bundled("psu33.gens"));
      case GroupSpec::Family::M10:
        return load_gens_group(bundled("m10.gens"));
      case GroupSpec::Family::M11:
        return load_gens_group(bundled("m11.gens"));
      case GroupSpec::Family::file:
        return load_gens_group(spec.path);
    }
    throw Error("unreachable");
  }();
  const std::uint64_t want = expected_order(spec);
  if (g.order() != want)
    throw ValidationError(spec.to_string() + ": closure has order " +
                          std::to_string(g.order()) + ", expected " +
                          std::to_string(want));
  return g;
}

Group build_group(const std::string& token) {
  return build_group(GroupSpec::parse(token));
}

Group build_gl(int dim, int q) {
  const FqField& f = FqField::get(q);
  ElementContext ctx = ElementContext::mat(dim, f, false);
  std::vector<Element> gens;
  for (const Matrix& m : sl_generators(dim, f)) gens.push_back(pack(ctx, m));
  gens.push_back(pack(ctx, diag_gamma(dim, f)));
  Group g = Group::close(ctx, std::move(gens));
  std::uint64_t want = 1;  // prod_{k<dim} (q^dim - q^k)
  std::uint64_t qd = 1;
  for (int k = 0; k < dim; ++k) qd *= q;
  std::uint64_t qk = 1;
  for (int k = 0; k < dim; ++k) {
    want *= qd - qk;
    qk *= q;
  }
  if (g.order() != want)
    throw ValidationError("GL" + std::to_string(dim) + ":" + std::to_string(q) +
                          ": closure has order " + std::to_string(g.order()) +
                          ", expected " + std::to_string(want));
  return g;
}

GeneratorFile GeneratorFile::parse(const std::string& text) {
  GeneratorFile gf;
  std::istringstream in(text);
  std::string line;
  int header = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header == 0) {
      if (line.rfind("degree ", 0) != 0)
        throw ParseError("generator file: expected 'degree N', got '" + line + "'");
      gf.degree = std::stoi(line.substr(7));
      if (gf.degree < 1 || gf.degree > kMaxDegree)
        throw ParseError("generator file: degree out of range");
      ++header;
    } else if (header == 1) {
      if (line.rfind("order ", 0) != 0)
        throw ParseError("generator file: expected 'order M', got '" + line + "'");
      gf.order = std::stoull(line.substr(6));
      ++header;
    } else if (header == 2) {
      if (line.rfind("source ", 0) != 0)
        throw ParseError("generator file: expected 'source ...', got '" + line + "'");
      gf.source = line.substr(7);
      ++header;
    } else {
      gf.generators.push_back(Permutation::from_cycles(line, gf.degree));
    }
  }
  if (header < 3) throw ParseError("generator file: truncated header");
  return gf;
}

GeneratorFile GeneratorFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string GeneratorFile::serialize() const {
  std::ostringstream out;
  out << "degree " << degree << "\n";
  out << "order " << order << "\n";
  out << "source " << source << "\n";
  for (const Permutation& p : generators) out << p.to_cycles() << "\n";
  return out.str();
}

std::string data_dir() {
  if (const char* env = std::getenv("BRAIDQUOT_DATA_DIR")) return env;
#ifdef BRAIDQUOT_SOURCE_DATA_DIR
  if (std::filesystem::is_directory(BRAIDQUOT_SOURCE_DATA_DIR))
    return BRAIDQUOT_SOURCE_DATA_DIR;
#endif
  return "./data";
}

std::vector<std::string> catalog_grid(std::uint64_t max_order) {
  std::vector<std::string> out;
  auto add = [&](const std::string& token) {
    if (expected_order(GroupSpec::parse(token)) <= max_order) out.push_back(token);
  };
  for (int n = 2; n <= 12; ++n) add("S:" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) add("A:" + std::to_string(n));
  for (int n = 1; n <= 32; ++n) add("C:" + std::to_string(n));
  for (int n = 3; n <= 16; ++n) add("D:" + std::to_string(n));
  for (int q = 2; q <= 31; ++q) {
    if (!FqField::supported(q)) continue;
    add("GL2:" + std::to_string(q));
    add("SL2:" + std::to_string(q));
    if (projective_q_ok(q)) {
      add("PSL2:" + std::to_string(q));
      add("PGL2:" + std::to_string(q));
    }
    if (q <= 5) add("PSL3:" + std::to_string(q));
  }
  add("PSU3:3");
  add("M10");
  add("M11");
  return out;
}

std::vector<std::array<std::uint8_t, 2>> projective_line_points(int q) {
  const FqField& f = FqField::get(q);
  std::vector<std::array<std::uint8_t, 2>> points;
  auto canon = [&](std::uint8_t a, std::uint8_t b) -> std::array<std::uint8_t, 2> {
    if (a != 0) return {1, f.mul(b, f.inv(a))};
    return {0, 1};
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      auto p = canon(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      if (std::find(points.begin(), points.end(), p) == points.end())
        points.push_back(p);
    }
  return points;
}

Permutation projective_line_action(const FqField& f, const Matrix& m) {
  const auto points = projective_line_points(f.q());
  std::vector<std::uint8_t> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& v = points[i];
    // Row vector times matrix.
    std::uint8_t x = f.add(f.mul(v[0], m.at(0, 0)), f.mul(v[1], m.at(1, 0)));
    std::uint8_t y = f.add(f.mul(v[0], m.at(0, 1)), f.mul(v[1], m.at(1, 1)));
    std::array<std::uint8_t, 2> w;
    if (x != 0)
      w = {1, f.mul(y, f.inv(x))};
    else if (y != 0)
      w = {0, 1};
    else
      throw Error("projective_line_action: singular matrix");
    const auto it = std::find(points.begin(), points.end(), w);
    img[i] = static_cast<std::uint8_t>(it - points.begin());
  }
  return Permutation(std::move(img));
}

std::vector<std::array<std::uint8_t, 3>> projective_plane_points(int q) {
  const FqField& f = FqField::get(q);
  std::vector<std::array<std::uint8_t, 3>> points;
  auto canon = [&](std::array<std::uint8_t, 3> v) {
    for (int i = 0; i < 3; ++i)
      if (v[i] != 0) {
        const std::uint8_t s = f.inv(v[i]);
        for (int j = 0; j < 3; ++j) v[j] = f.mul(v[j], s);
        return v;
      }
    throw Error("projective point cannot be zero");
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        auto p = canon({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                        static_cast<std::uint8_t>(c)});
        if (std::find(points.begin(), points.end(), p) == points.end())
          points.push_back(p);
      }
  return points;
}

Permutation projective_plane_action(const FqField& f, const Matrix& m) {
  const auto points = projective_plane_points(f.q());
  std::vector<std::uint8_t> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& v = points[i];
    std::array<std::uint8_t, 3> w{};
    for (int j = 0; j < 3; ++j) {
      std::uint8_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(v[k], m.at(k, j)));
      w[j] = s;
    }
    int lead = -1;
    for (int j = 0; j < 3 && lead < 0; ++j)
      if (w[j] != 0) lead = j;
    if (lead < 0) throw Error("projective_plane_action: singular matrix");
    const std::uint8_t s = f.inv(w[lead]);
    for (int j = 0; j < 3; ++j) w[j] = f.mul(w[j], s);
    const auto it = std::find(points.begin(), points.end(), w);
    img[i] = static_cast<std::uint8_t>(it - points.begin());
  }
  return Permutation(std::move(img));
}

std::vector<OrderTableRow> verify_order_table() {
  // Rows in the reference table's reading order, with its printed orders.
  static const struct {
    const char* label;
    const char* spec;
    std::uint64_t printed;
  } rows[] = {
      {"A5", "A:5", 60},
      {"PSL(2,7)", "PSL2:7", 168},
      {"A6 = PSL(2,9)", "PSL2:9", 360},
      {"PSL(2,8)", "PSL2:8", 504},
      {"PSL(2,11)", "PSL2:11", 660},
      {"PSL(2,13)", "PSL2:13", 1096},
      {"PSL(2,17)", "PSL2:17", 2448},
      {"A7", "A:7", 2520},
      {"PSL(2,19)", "PSL2:19", 3420},
      {"PSL(2,16)", "PSL2:16", 4040},
      {"PSL(3,3)", "PSL3:3", 5616},
      {"G2(2)' = PSU(3,3)", "PSU3:3", 6048},
      {"PSL(2,23)", "PSL2:23", 6072},
      {"PSL(2,25)", "PSL2:25", 7800},
      {"M11", "M11", 7920},
      {"PSL(2,27)", "PSL2:27", 9828},
      {"PSL(2,29)", "PSL2:29", 12180},
      {"PSL(2,31)", "PSL2:31", 14880},
      {"A8", "A:8", 20160},
      {"PSL(3,4)", "PSL3:4", 20160},
  };
  std::vector<OrderTableRow> out;
  for (const auto& r : rows) {
    Group g = build_group(r.spec);
    out.push_back({r.label, r.spec, r.printed, g.order(),
                   r.printed != g.order()});
  }
  return out;
}

}  // namespace braidquot
