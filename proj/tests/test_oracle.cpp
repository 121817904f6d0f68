#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "trigen/class_algebra.hpp"
#include "trigen/errors.hpp"
#include "trigen/oracle.hpp"

using namespace trigen;

namespace {

// TRIGEN_DATA_DIR in the environment points the suite at another data set.
std::string data(std::string const &name) {
  char const *dir = std::getenv("TRIGEN_DATA_DIR");
  return std::string(dir ? dir : TRIGEN_DATA_DIR) + "/" + name;
}

struct Small {
  char const *name;
  CharacterTable table;
  PermGroup group;
};

std::vector<Small> small_groups() {
  std::vector<Small> out;
  for (auto stem : {"a5", "l2_11", "11_10"})
    out.push_back({stem, load_table(data(std::string(stem) + ".ctb")),
                   PermGroup(load_prm(data(std::string(stem) + ".prm")))});
  return out;
}

// Size of <a, b> by closure, independent of the stabilizer chain.
std::size_t closure_size(Perm const &a, Perm const &b) {
  PermSet seen{Perm(a.degree())};
  std::vector<Perm> queue{Perm(a.degree())};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Perm const *s : {&a, &b}) {
      auto y = queue[k] * *s;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  return seen.size();
}

} // namespace

TEST_CASE("labelling follows the power maps") {
  for (auto const &s : small_groups()) {
    CAPTURE(s.name);
    auto id = identify_classes(s.group, s.table);
    auto const &t = s.table;
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      auto const &r = id.representative(c);
      CHECK(element_order(r) == t.element_order(c));
      CHECK(id.class_set(c).size() == t.class_size(c));
      unsigned o = t.element_order(c);
      for (unsigned k = 1; k < 2 * o; ++k)
        CHECK(id.class_of(r.pow(k)) == t.power(c, k));
    }
  }
}

TEST_CASE("classes partition the group") {
  for (auto const &s : small_groups()) {
    CAPTURE(s.name);
    auto id = identify_classes(s.group, s.table);
    RandomElements r(s.group, 5);
    for (int i = 0; i < 50; ++i) {
      auto x = r.next();
      auto c = id.class_of(x);
      for (std::size_t d = 0; d < s.table.class_count(); ++d)
        CHECK(id.class_set(d).contains(x) == (c == d));
    }
  }
}

TEST_CASE("brute-force xi3 agrees with the character formula") {
  for (auto const &s : small_groups()) {
    CAPTURE(s.name);
    auto id = identify_classes(s.group, s.table);
    std::size_t k = s.table.class_count();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(xi3(s.table, a, b, c) == xi3_oracle(id, a, b, c, {.jobs = 1}));
        }
  }
}

TEST_CASE("thread count does not change the count") {
  auto s = small_groups()[1];
  auto id = identify_classes(s.group, s.table);
  auto const &t = s.table;
  auto want = xi3_oracle(id, t.class_index("3A"), t.class_index("5A"), t.class_index("11A"), {.jobs = 1});
  for (unsigned j : {2u, 3u, 7u})
    CHECK(xi3_oracle(id, t.class_index("3A"), t.class_index("5A"), t.class_index("11A"), {.jobs = j}) == want);
  CHECK(want == 22);
}

TEST_CASE("generating pairs") {
  auto s = small_groups()[0];
  auto id = identify_classes(s.group, s.table);
  auto const &t = s.table;
  auto i2 = t.class_index("2A"), i3 = t.class_index("3A"), i5 = t.class_index("5A");
  // A (2,3,5) pair always generates A5; products of two involutions give
  // dihedral groups.
  CHECK(xi3_star_oracle(id, i2, i3, i5) == 5);
  CHECK(xi3_star_oracle(id, i2, i2, i2) == 0);
  CHECK(xi3_star_oracle(id, i2, i2, i3) == 0);
  CHECK(xi3_star_oracle(id, i2, i3, i5, {.stop_after = 2}) == 2);

  for (auto const &l : small_groups()) {
    CAPTURE(l.name);
    auto lid = identify_classes(l.group, l.table);
    std::size_t k = l.table.class_count();
    for (std::size_t a = 1; a < k; ++a)
      for (std::size_t b = a; b < k; ++b)
        for (std::size_t c = 1; c < k; ++c) {
          auto const &z = lid.representative(c);
          std::uint64_t brute = 0;
          for (auto const *x : lid.class_set(a).items) {
            auto y = x->inverse() * z;
            if (lid.class_set(b).contains(y) && closure_size(*x, y) == l.group.order())
              ++brute;
          }
          CHECK(xi3_star_oracle(lid, a, b, c) == brute);
        }
  }
}

TEST_CASE("counts do not depend on the representative") {
  auto s = small_groups()[1];
  auto id = identify_classes(s.group, s.table);
  auto const &t = s.table;
  auto i2 = t.class_index("2A"), i3 = t.class_index("3A"), i11 = t.class_index("11A");
  auto want = xi3_star_oracle(id, i2, i3, i11);
  CHECK(want == 11);
  RandomElements r(s.group, 9);
  for (int i = 0; i < 5; ++i) {
    auto z = id.representative(i11).conjugate_by(r.next());
    CHECK(xi3_oracle(id, i2, i3, z) == 11);
    CHECK(xi3_star_oracle(id, i2, i3, z) == want);
  }
}

TEST_CASE("copies of a point stabilizer") {
  // L2(11) on 11 points is the action on the cosets of A5. The number of
  // conjugates of H containing c is |C_G(c)| * sum over the H-classes
  // fusing to c of 1 / |C_H(h)|.
  auto s = small_groups()[1];
  auto id = identify_classes(s.group, s.table);
  auto const &t = s.table;
  std::map<std::string, std::size_t> want{{"1A", 11}, {"2A", 3}, {"3A", 2}, {"5A", 1},
                                          {"5B", 1},  {"6A", 0}, {"11A", 0}, {"11B", 0}};
  for (auto const &[name, n] : want) {
    CAPTURE(name);
    CHECK(copies_containing(s.group, id.representative(name)) == n);
    CHECK(copies_containing(s.group, find_family_member(s.group, t, t.class_index(name))) == n);
  }
  CHECK_THROWS_AS(copies_containing(s.group, Perm::from_cycles(11, {{1, 2}})), Error);
}

TEST_CASE("fusion read off from representatives") {
  auto l = small_groups()[1];
  auto a5 = load_table(data("a5.ctb"));
  auto sub = l.group.stabilizer(0);
  REQUIRE(sub.order() == 60);
  auto sid = identify_classes(sub, a5);
  auto lid = identify_classes(l.group, l.table);
  auto f = infer_fusion(sid, lid);
  auto name = [&](char const *c) { return l.table.class_name(f.map()[a5.class_index(c)]); };
  CHECK(name("1A") == "1A");
  CHECK(name("2A") == "2A");
  CHECK(name("3A") == "3A");
  std::set<std::string> fives{name("5A"), name("5B")};
  CHECK(fives == std::set<std::string>{"5A", "5B"});
}

TEST_CASE("wrong generators") {
  auto a5 = small_groups()[0];
  auto l = load_table(data("l2_11.ctb"));
  CHECK_THROWS_AS(identify_classes(a5.group, l), OrderMismatch);
  CHECK_THROWS_AS(find_family_member(a5.group, l, 1), OrderMismatch);
}

TEST_CASE("indistinguishable classes") {
  // In C2 x C2 the three involutions agree in everything the classifier
  // can see.
  auto t = parse_table(R"(group V4
order 4
soluble true
classes 1A 2A 2B 2C
orders 1 2 2 2
centralizers 4 4 4 4
powermap 2: 1A 1A 1A 1A
char 1 1 1 1
char 1 1 -1 -1
char 1 -1 1 -1
char 1 -1 -1 1
)");
  PermGroup v({Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  CHECK_THROWS_AS(identify_classes(v, t), AmbiguousClasses);
}
