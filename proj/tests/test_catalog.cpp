// Catalog: spec parsing, validated constructors, generator files, projective
// actions and the reference order table.
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "braidquot/catalog.hpp"
#include "braidquot/error.hpp"
#include "braidquot/group.hpp"
#include "doctest.h"

using namespace braidquot;

namespace {

std::multiset<std::size_t> class_sizes(const Group& g) {
  std::multiset<std::size_t> sizes;
  for (const auto& m : g.conjugacy_classes().members) sizes.insert(m.size());
  return sizes;
}

}  // namespace

TEST_CASE("group spec grammar") {
  for (const char* token : {"S:5", "A:6", "C:12", "D:6", "GL2:5", "SL2:3",
                            "PSL2:7", "PGL2:9", "PSL3:4", "PSU3:3", "M10", "M11",
                            "file:some/path.gens"}) {
    GroupSpec s = GroupSpec::parse(token);
    CHECK(s.to_string() == token);
  }
  CHECK(GroupSpec::parse("S:5").family == GroupSpec::Family::S);
  CHECK(GroupSpec::parse("PSL2:7").param == 7);
  CHECK(GroupSpec::parse("file:a:b").path == "a:b");

  for (const char* bad : {"", "S", "S:", "S:x", "S:1", "S:13", "Q:5", "D:2",
                          "D:17", "PSL2:6", "PSL2:49", "PSL3:7", "PSU3:4",
                          "M10:5", "M12", "file:", "GL2:49"}) {
    CHECK_THROWS_AS(GroupSpec::parse(bad), ParseError);
  }
}

TEST_CASE("expected orders") {
  CHECK(expected_order(GroupSpec::parse("S:5")) == 120);
  CHECK(expected_order(GroupSpec::parse("A:8")) == 20160);
  CHECK(expected_order(GroupSpec::parse("C:9")) == 9);
  CHECK(expected_order(GroupSpec::parse("D:12")) == 24);
  CHECK(expected_order(GroupSpec::parse("GL2:5")) == 480);
  CHECK(expected_order(GroupSpec::parse("SL2:5")) == 120);
  CHECK(expected_order(GroupSpec::parse("PSL2:7")) == 168);
  CHECK(expected_order(GroupSpec::parse("PSL2:9")) == 360);
  CHECK(expected_order(GroupSpec::parse("PGL2:9")) == 720);
  CHECK(expected_order(GroupSpec::parse("PSL3:3")) == 5616);
  CHECK(expected_order(GroupSpec::parse("PSL3:4")) == 20160);
  CHECK(expected_order(GroupSpec::parse("PSU3:3")) == 6048);
  CHECK(expected_order(GroupSpec::parse("M10")) == 720);
  CHECK(expected_order(GroupSpec::parse("M11")) == 7920);
}

TEST_CASE("permutation family builds") {
  CHECK(build_group("S:5").order() == 120);
  CHECK(build_group("S:2").order() == 2);
  CHECK(build_group("A:6").order() == 360);
  CHECK(build_group("A:4").order() == 12);
  CHECK(build_group("C:7").order() == 7);
  CHECK(build_group("C:1").order() == 1);
  CHECK(build_group("D:6").order() == 12);
  CHECK(build_group("D:12").order() == 24);
}

TEST_CASE("matrix family builds") {
  CHECK(build_group("GL2:2").order() == 6);
  CHECK(build_group("GL2:3").order() == 48);
  CHECK(build_group("GL2:4").order() == 180);
  CHECK(build_group("GL2:5").order() == 480);
  CHECK(build_group("SL2:5").order() == 120);
  CHECK(build_group("SL2:9").order() == 720);
  CHECK(build_gl(3, 2).order() == 168);
}

TEST_CASE("projective family builds") {
  Group psl27 = build_group("PSL2:7");
  CHECK(psl27.order() == 168);
  CHECK(psl27.context().degree == 8);

  Group pgl29 = build_group("PGL2:9");
  CHECK(pgl29.order() == 720);
  CHECK(pgl29.context().degree == 10);

  Group psl33 = build_group("PSL3:3");
  CHECK(psl33.order() == 5616);
  CHECK(psl33.context().degree == 13);

  // PSL(2,9) and A6 agree on order and class-size multiset (weak
  // isomorphism check; both should be {1,40,40,45,72,72,90}).
  Group psl29 = build_group("PSL2:9");
  Group a6 = build_group("A:6");
  CHECK(psl29.order() == a6.order());
  CHECK(class_sizes(psl29) == class_sizes(a6));
}

TEST_CASE("projective line points and action") {
  CHECK(projective_line_points(5).size() == 6);
  CHECK(projective_line_points(9).size() == 10);
  CHECK(projective_plane_points(3).size() == 13);
  CHECK(projective_plane_points(4).size() == 21);

  const FqField& f = FqField::get(7);
  Matrix id = mat_identity(2);
  CHECK(projective_line_action(f, id).is_identity());

  // The action is a homomorphism compatible with compose().
  Matrix a = mat_identity(2);
  a.at(0, 1) = 1;  // [[1,1],[0,1]]
  Matrix b = mat_identity(2);
  b.at(1, 0) = 3;  // [[1,0],[3,1]]
  CHECK(projective_line_action(f, mat_mul(f, a, b)) ==
        compose(projective_line_action(f, a), projective_line_action(f, b)));
  CHECK_THROWS_AS(projective_line_action(f, Matrix{2, {}}), Error);
}

TEST_CASE("bundled generator files") {
  Group m10 = build_group("M10");
  CHECK(m10.order() == 720);
  CHECK(m10.context().degree == 10);
  // M10 is not S6-like: it has no element of order 6 but does have order-8
  // elements, unlike the other order-720 permutation candidates.
  bool has8 = false, has6 = false;
  for (Eid x = 0; x < m10.order(); ++x) {
    const int o = m10.element_order(x);
    has8 |= o == 8;
    has6 |= o == 6;
  }
  CHECK(has8);
  CHECK(!has6);

  Group m11 = build_group("M11");
  CHECK(m11.order() == 7920);
  CHECK(m11.conjugacy_classes().count() == 10);

  Group psu = build_group("PSU3:3");
  CHECK(psu.order() == 6048);
  CHECK(psu.context().degree == 28);
}

TEST_CASE("generator file round trip") {
  const std::string text =
      "degree 4\norder 12\nsource hand-written test fixture\n"
      "(1 2 3)\n(2 3 4)\n";
  GeneratorFile gf = GeneratorFile::parse(text);
  CHECK(gf.degree == 4);
  CHECK(gf.order == 12);
  CHECK(gf.source == "hand-written test fixture");
  REQUIRE(gf.generators.size() == 2);
  CHECK(gf.serialize() == text);
  GeneratorFile again = GeneratorFile::parse(gf.serialize());
  CHECK(again.generators[0] == gf.generators[0]);
  CHECK(again.generators[1] == gf.generators[1]);

  CHECK_THROWS_AS(GeneratorFile::parse("order 5\ndegree 4\nsource x\n"), ParseError);
  CHECK_THROWS_AS(GeneratorFile::parse("degree 4\norder 5\n"), ParseError);
  CHECK_THROWS_AS(GeneratorFile::parse("degree 99\norder 5\nsource x\n"), ParseError);
}

TEST_CASE("file-backed group spec") {
  const std::string path = "test_a4_tmp.gens";
  {
    std::ofstream out(path);
    out << "degree 4\norder 12\nsource test fixture\n(1 2 3)\n(2 3 4)\n";
  }
  Group g = build_group("file:" + path);
  CHECK(g.order() == 12);

  {
    std::ofstream out(path);
    out << "degree 4\norder 99\nsource wrong order on purpose\n(1 2 3)\n(2 3 4)\n";
  }
  CHECK_THROWS_AS(build_group("file:" + path), ValidationError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(build_group("file:" + path), ParseError);
}

TEST_CASE("order table has exactly the two known flags") {
  const auto rows = verify_order_table();
  REQUIRE(rows.size() == 20);
  std::map<std::string, const OrderTableRow*> flagged;
  for (const auto& r : rows) {
    if (r.flagged) flagged[r.spec] = &r;
    CHECK(r.computed == expected_order(GroupSpec::parse(r.spec)));
  }
  REQUIRE(flagged.size() == 2);
  REQUIRE(flagged.count("PSL2:13") == 1);
  REQUIRE(flagged.count("PSL2:16") == 1);
  CHECK(flagged["PSL2:13"]->printed == 1096);
  CHECK(flagged["PSL2:13"]->computed == 1092);
  CHECK(flagged["PSL2:16"]->printed == 4040);
  CHECK(flagged["PSL2:16"]->computed == 4080);
}
