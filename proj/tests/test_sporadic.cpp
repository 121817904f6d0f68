#include <map>
#include <set>

#include "doctest.h"

#include "trigen/class_algebra.hpp"
#include "trigen/errors.hpp"
#include "trigen/oracle.hpp"

using namespace trigen;

namespace {

std::string data(std::string const &name) { return std::string(TRIGEN_DATA_DIR) + "/" + name; }

struct Bundle {
  CharacterTable table;
  PermGroup group;
  Bundle(char const *ctb, char const *prm)
      : table(load_table(data(ctb))), group(load_prm(data(prm))) {}
};

Bundle &j1() {
  static Bundle b("j1.ctb", "j1.prm");
  return b;
}
Bundle &j2() {
  static Bundle b("j2.ctb", "j2_100.prm");
  return b;
}
ClassIdentification const &j1_id() {
  static ClassIdentification id(j1().group, j1().table);
  return id;
}
ClassIdentification const &j2_id() {
  static ClassIdentification id(j2().group, j2().table);
  return id;
}

// Fusion expected up to Galois conjugation: compare families, not classes.
void check_fusion(FusionMap const &f, std::vector<std::string> const &want) {
  auto const &g = f.super();
  REQUIRE(want.size() == f.map().size());
  for (std::size_t h = 0; h < want.size(); ++h) {
    CAPTURE(f.sub().class_name(h));
    CHECK(g.galois_family(f(h)) == g.galois_family(g.class_index(want[h])));
  }
}

} // namespace

TEST_CASE("bundled tables pass lint") {
  for (auto name : {"j1.ctb", "j2.ctb", "u3_3.ctb", "l3_2_2.ctb"}) {
    CAPTURE(name);
    auto t = load_table(data(name));
    CHECK(lint_table(t).empty());
    Integer total = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c)
      total += t.class_size(c);
    CHECK(total == t.group_order);
  }
  CHECK(j1().table.group_order == 175560);
  CHECK(j2().table.group_order == 604800);
  CHECK(load_table(data("u3_3.ctb")).group_order == 6048);
}

TEST_CASE("J1 on 266 points") {
  auto const &id = j1_id();
  auto const &t = j1().table;
  CHECK(j1().group.order() == 175560);
  CHECK(id.class_set(t.class_index("2A")).size() == 1463);
  CHECK(fixed_points(id.representative("11A")) == 2);
  CHECK(fixed_points(id.representative("2A")) == 10);
  // The stabilizer is L2(11): no element of order 7, 15 or 19 fixes a point.
  for (auto name : {"7A", "15A", "19A", "10A"})
    CHECK(fixed_points(id.representative(name)) == 0);
  for (std::size_t c = 0; c < t.class_count(); ++c)
    for (unsigned k = 1; k < t.element_order(c); ++k)
      if (t.element_order(t.power(c, k)) < 10)
        CHECK(id.class_of(id.representative(c).pow(k)) == t.power(c, k));
}

TEST_CASE("J2 on 100 points") {
  auto const &id = j2_id();
  auto const &t = j2().table;
  std::map<std::string, std::string> shapes{{"2A", "1^20 2^40"}, {"2B", "2^50"},
                                            {"3A", "1^10 3^30"}, {"3B", "1^4 3^32"},
                                            {"7A", "1^2 7^14"}};
  for (auto const &[name, shape] : shapes) {
    CAPTURE(name);
    CHECK(cycle_type(id.representative(name)).to_string() == shape);
    auto m = find_family_member(j2().group, t, t.class_index(name));
    CHECK(cycle_type(m).to_string() == shape);
  }
  CHECK(id.class_set(t.class_index("2B")).size() == 2520);
}

TEST_CASE("brute force against the character formula") {
  auto const &t1 = j1().table;
  auto const &t2 = j2().table;
  struct Case {
    ClassIdentification const &id;
    CharacterTable const &t;
    char const *a, *b, *c;
  };
  for (auto const &k : {Case{j1_id(), t1, "2A", "3A", "7A"}, Case{j1_id(), t1, "2A", "3A", "19A"},
                        Case{j1_id(), t1, "2A", "5A", "11A"}, Case{j1_id(), t1, "2A", "2A", "5B"},
                        Case{j2_id(), t2, "2B", "3B", "7A"}, Case{j2_id(), t2, "2A", "3B", "7A"},
                        Case{j2_id(), t2, "2B", "3A", "12A"}}) {
    auto a = k.t.class_index(k.a), b = k.t.class_index(k.b), c = k.t.class_index(k.c);
    CAPTURE(k.t.group_name);
    CAPTURE(k.c);
    CHECK(xi3(k.t, a, b, c) == xi3_oracle(k.id, a, b, c));
  }
}

TEST_CASE("fusions into J1") {
  auto l = load_table(data("l2_11.ctb"));
  PermGroup lg(load_prm(data("j1_l2_11.prm")));
  auto lid = identify_classes(lg, l);
  check_fusion(infer_fusion(lid, j1_id()), {"1A", "2A", "3A", "5A", "5B", "6A", "11A", "11A"});

  auto f = load_table(data("11_10.ctb"));
  PermGroup fg(load_prm(data("j1_11_10.prm")));
  auto fid = identify_classes(fg, f);
  check_fusion(infer_fusion(fid, j1_id()),
               {"1A", "11A", "10B", "5B", "10A", "5A", "2A", "5A", "10A", "5B", "10B"});
}

TEST_CASE("fusions into J2") {
  auto u = load_table(data("u3_3.ctb"));
  PermGroup ug(load_prm(data("j2_u3_3.prm")));
  check_fusion(infer_fusion(identify_classes(ug, u), j2_id()),
               {"1A", "2A", "3A", "3B", "4A", "4A", "4A", "6A", "7A", "7A", "8A", "8A", "12A",
                "12A"});
  auto m = load_table(data("l3_2_2.ctb"));
  PermGroup mg(load_prm(data("j2_l3_2_2.prm")));
  check_fusion(infer_fusion(identify_classes(mg, m), j2_id()),
               {"1A", "2A", "3B", "4A", "7A", "2B", "6B", "8A", "8A"});
}

TEST_CASE("copies in coset actions") {
  PermGroup g1(load_prm(data("j1_1596.prm")));
  CHECK(g1.order() == 175560);
  CHECK(copies_containing(g1, find_family_member(g1, j1().table, j1().table.class_index("11A"))) == 1);
  PermGroup g2(load_prm(data("j2_1800.prm")));
  CHECK(g2.order() == 604800);
  CHECK(copies_containing(g2, find_family_member(g2, j2().table, j2().table.class_index("7A"))) == 1);
  // On 266 points the stabilizer is L2(11), which has one class of order 11
  // per family, two fixed points.
  CHECK(copies_containing(j1().group, j1_id().representative("11A")) == 2);
}
