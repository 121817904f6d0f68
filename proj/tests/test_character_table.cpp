#include <cstdlib>
#include <algorithm>
#include <map>
#include <sstream>

#include "doctest.h"

#include "trigen/character_table.hpp"
#include "trigen/errors.hpp"

using namespace trigen;

namespace {

// TRIGEN_DATA_DIR in the environment points the suite at another data set.
std::string data(std::string const &name) {
  char const *dir = std::getenv("TRIGEN_DATA_DIR");
  return std::string(dir ? dir : TRIGEN_DATA_DIR) + "/" + name;
}

bool has_check(std::vector<Diagnostic> const &d, std::string const &check, std::string const &needle) {
  return std::any_of(d.begin(), d.end(), [&](Diagnostic const &x) {
    return x.check == check && x.message.find(needle) != std::string::npos;
  });
}

constexpr char const *kTrivial = R"(group 1
order 1
soluble true
classes 1A
orders 1
centralizers 1
char 1
)";

constexpr char const *kC4Short = R"(group C4
order 4
soluble true
classes 1A 4A 2A 4B
orders 1 4 2 4
centralizers 4 4 4 4
char 1 1 1 1
char 1 E(4) -1
char 1 -1 1 -1
char 1 -E(4) -1 E(4)
)";

} // namespace

TEST_CASE("11:10 reproduces the partial table") {
  auto t = load_table(data("11_10.ctb"));
  auto one = t.class_index("1A"), two = t.class_index("2A"), eleven = t.class_index("11A");
  CHECK(t.classes[one].centralizer_order == 110);
  CHECK(t.classes[two].centralizer_order == 10);
  CHECK(t.classes[eleven].centralizer_order == 11);
  CHECK(t.class_size(eleven) == 10);
  CHECK(t.class_size(two) == 11);
  CHECK(t.class_size(one) == 1);

  // Ten linear characters with 2A values +-1 five times each, plus one of
  // degree 10 vanishing on 2A.
  std::map<long, int> deg, at2;
  for (auto const &chi : t.irreducibles) {
    ++deg[chi[one].to_rational().get_num().get_si()];
    ++at2[chi[two].to_rational().get_num().get_si()];
  }
  CHECK(deg == std::map<long, int>{{1, 10}, {10, 1}});
  CHECK(at2 == std::map<long, int>{{-1, 5}, {0, 1}, {1, 5}});
  Rational sq = 0;
  for (auto const &chi : t.irreducibles)
    sq += (chi[two] * chi[two].conjugate()).to_rational();
  CHECK(sq == 10);
  CHECK(lint_table(t).empty());
}

TEST_CASE("the printed 11A column breaks orthogonality") {
  // Table 1 gives chi_11(11A) = 1; orthogonality with the identity column
  // forces -1, which is what the bundled table carries.
  auto t = load_table(data("11_10.ctb"));
  auto eleven = t.class_index("11A");
  std::size_t big = 0;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    if (t.degree(i) == 10)
      big = i;
  CHECK(t.irreducibles[big][eleven] == Cyclotomic(-1));
  auto printed = t;
  printed.irreducibles[big][eleven] = Cyclotomic(1);
  CHECK(has_check(lint_table(printed), "column-orthogonality", "11A"));
}

TEST_CASE("11:10 from Frobenius group theory") {
  // Elements x -> ax + b of AGL(1,11). Classes: the identity, the ten
  // translations, and for each a != 1 the eleven maps with that slope.
  // Linear characters factor through a = 2^k: lambda_j = zeta_10^{jk}; the
  // degree-10 character is induced from a nontrivial character of Z/11.
  auto t = load_table(data("11_10.ctb"));
  std::size_t gen = 0;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    if (t.element_order(c) == 10) {
      gen = c;
      break;
    }
  // Column of slope 2^k is the class gen^k; the translations are 11A.
  std::vector<std::size_t> column(11);
  for (unsigned k = 0; k < 10; ++k)
    column[k] = t.power(gen, k);
  column[10] = t.class_index("11A");
  std::vector<std::size_t> sorted = column;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(std::unique(sorted.begin(), sorted.end()) == sorted.end());

  std::vector<std::vector<Cyclotomic>> built;
  for (unsigned j = 0; j < 10; ++j) {
    std::vector<Cyclotomic> row(11);
    for (unsigned k = 0; k < 10; ++k)
      row[k] = Cyclotomic::root_of_unity(10, static_cast<long>(j * k));
    row[10] = 1;
    built.push_back(row);
  }
  std::vector<Cyclotomic> induced(11, Cyclotomic(0));
  induced[0] = 10;
  induced[10] = -1;
  built.push_back(induced);

  auto key = [](std::vector<Cyclotomic> const &v) {
    std::string s;
    for (auto const &x : v)
      s += x.to_string() + "|";
    return s;
  };
  std::vector<std::string> want, got;
  for (auto const &row : built)
    want.push_back(key(row));
  for (auto const &chi : t.irreducibles) {
    std::vector<Cyclotomic> row;
    for (auto c : column)
      row.push_back(chi[c]);
    got.push_back(key(row));
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(want == got);
}

TEST_CASE("parse") {
  SUBCASE("trivial group") {
    auto t = parse_table(kTrivial);
    CHECK(t.class_count() == 1);
    CHECK(t.class_size(0) == 1);
    CHECK(lint_table(t).empty());
  }
  SUBCASE("short character row") {
    CHECK_THROWS_AS(parse_table(kC4Short), DimensionMismatch);
  }
  SUBCASE("duplicate class name") {
    auto bad = std::string(R"(group X
order 2
soluble true
classes 1A 1A
orders 1 2
centralizers 2 2
char 1 1
char 1 -1
)");
    CHECK_THROWS_AS(parse_table(bad), ParseError);
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_table("group X\norder 2\nsoluble maybe\n");
      FAIL("expected a ParseError");
    } catch (ParseError const &e) {
      CHECK(e.where() == 3);
    }
  }
  SUBCASE("identity must come first") {
    auto bad = std::string(R"(group C2
order 2
soluble true
classes 2A 1A
orders 2 1
centralizers 2 2
char 1 1
char -1 1
)");
    CHECK_THROWS_AS(parse_table(bad), Error);
  }
  SUBCASE("unknown class") {
    auto t = parse_table(kTrivial);
    CHECK_THROWS_AS(t.class_index("2A"), UnknownClass);
  }
}

TEST_CASE("bundled small tables") {
  for (auto name : {"a5.ctb", "l2_11.ctb", "11_10.ctb"}) {
    CAPTURE(name);
    auto t = load_table(data(name));
    CHECK(lint_table(t).empty());

    Integer total = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c)
      total += t.class_size(c);
    CHECK(total == t.group_order);

    Integer squares = 0;
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
      CHECK(t.degree(i) > 0);
      squares += t.degree(i) * t.degree(i);
    }
    CHECK(squares == t.group_order);

    auto again = parse_table(t.serialize());
    CHECK(again.serialize() == t.serialize());
    CHECK(parse_table(again.serialize()).serialize() == again.serialize());
  }
}

TEST_CASE("lint catches perturbations") {
  auto t = load_table(data("a5.ctb"));
  SUBCASE("one value off by one") {
    auto bad = t;
    auto c = bad.class_index("3A");
    bad.irreducibles[1][c] = bad.irreducibles[1][c] + Cyclotomic(1);
    auto d = lint_table(bad);
    CHECK(has_check(d, "column-orthogonality", "3A"));
  }
  SUBCASE("wrong degree") {
    auto bad = t;
    bad.irreducibles[4][0] = Cyclotomic(6);
    CHECK(has_check(lint_table(bad), "degree-sum", ""));
  }
  SUBCASE("broken power map") {
    auto bad = t;
    bad.classes[bad.class_index("5A")].power_maps[2] = bad.class_index("5A");
    CHECK(has_check(lint_table(bad), "power-map", "5A"));
  }
  SUBCASE("bad centralizer") {
    auto bad = t;
    bad.classes[1].centralizer_order = 8;
    CHECK(!lint_table(bad).empty());
  }
}

TEST_CASE("power maps and Galois families") {
  auto t = load_table(data("l2_11.ctb"));
  auto a = t.class_index("11A"), b = t.class_index("11B");
  CHECK(t.power(a, 2) == b);
  CHECK(t.power(a, 11) == 0);
  CHECK(t.power(a, -1) == t.inverse_class(a));
  CHECK(t.galois_family(b) == std::vector<std::size_t>{a, b});
  CHECK(t.galois_family(t.class_index("2A")) == std::vector<std::size_t>{t.class_index("2A")});
  auto s = load_table(data("a5.ctb"));
  CHECK(s.inverse_class(s.class_index("5A")) == s.class_index("5A"));
}
