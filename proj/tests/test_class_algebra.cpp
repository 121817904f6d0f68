#include <cstdlib>
#include <numeric>

#include "doctest.h"

#include "trigen/class_algebra.hpp"
#include "trigen/errors.hpp"

using namespace trigen;

namespace {

// TRIGEN_DATA_DIR in the environment points the suite at another data set.
std::string data(std::string const &name) {
  char const *dir = std::getenv("TRIGEN_DATA_DIR");
  return std::string(dir ? dir : TRIGEN_DATA_DIR) + "/" + name;
}

std::vector<CharacterTable> small_tables() {
  return {load_table(data("a5.ctb")), load_table(data("l2_11.ctb")),
          load_table(data("11_10.ctb"))};
}

unsigned exponent(CharacterTable const &t) {
  unsigned e = 1;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    e = std::lcm(e, t.element_order(c));
  return e;
}

} // namespace

TEST_CASE("values quoted for small groups") {
  auto l = load_table(data("l2_11.ctb"));
  auto f = load_table(data("11_10.ctb"));
  auto L = [&](char const *n) { return l.class_index(n); };
  CHECK(xi3(l, L("2A"), L("3A"), L("11A")) == 11);
  CHECK(xi3(l, L("2A"), L("5A"), L("11A")) == 11);
  CHECK(xi3(l, L("3A"), L("5A"), L("11A")) == 22);
  CHECK(xi4(l, L("2A"), L("2A"), L("2A"), L("11A")) == 242);
  CHECK(xi4(f, f.class_index("2A"), f.class_index("2A"), f.class_index("2A"),
            f.class_index("11A")) == 0);
}

TEST_CASE("identity entries") {
  for (auto const &t : small_tables()) {
    CAPTURE(t.group_name);
    CHECK(xi4(t, 0, 0, 0, 0) == 1);
    for (std::size_t c = 0; c < t.class_count(); ++c)
      for (std::size_t d = 0; d < t.class_count(); ++d)
        CHECK(xi3(t, 0, c, d) == (c == d ? 1 : 0));
  }
}

TEST_CASE("class algebra identities") {
  for (auto const &t : small_tables()) {
    CAPTURE(t.group_name);
    std::size_t k = t.class_count();
    unsigned e = exponent(t);
    std::vector<Integer> cube(k * k * k);
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Integer & {
      return cube[(a * k + b) * k + c];
    };
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          at(a, b, c) = xi3(t, a, b, c);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        // Every pair (x, y) in C1 x C2 has its product in exactly one class.
        Integer total = 0;
        for (std::size_t c = 0; c < k; ++c) {
          auto const &v = at(a, b, c);
          total += v * t.class_size(c);
          // ab = c  <=>  b^-1 a^-1 = c^-1.
          CHECK(v == at(t.inverse_class(b), t.inverse_class(a), t.inverse_class(c)));
          for (unsigned j = 1; j < e; ++j)
            if (std::gcd(j, e) == 1)
              CHECK(v == at(t.power(a, j), t.power(b, j), t.power(c, j)));
        }
        CHECK(total == t.class_size(a) * t.class_size(b));
      }
  }
}

TEST_CASE("xi4 by associativity") {
  for (auto const &t : small_tables()) {
    CAPTURE(t.group_name);
    std::size_t k = t.class_count();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; b += 2)
        for (std::size_t c = 0; c < k; c += 3)
          for (std::size_t d = 0; d < k; ++d) {
            // Split abc = d at the class e of ab.
            Integer sum = 0;
            for (std::size_t x = 0; x < k; ++x)
              sum += xi3(t, a, b, x) * xi3(t, x, c, d);
            CHECK(xi4(t, a, b, c, d) == sum);
          }
  }
}

TEST_CASE("tuples") {
  auto t = load_table(data("a5.ctb"));
  auto tuple = ClassTuple::from_names(t, {"2A", "3A", "5A"});
  CHECK(tuple.target() == t.class_index("5A"));
  CHECK(tuple.to_string() == "(2A,3A,5A)");
  CHECK(xi(tuple) == xi3(t, 1, 2, 3));
  CHECK_THROWS_AS(ClassTuple::from_names(t, {"2A", "9Z", "5A"}), UnknownClass);
  CHECK_THROWS_AS(ClassTuple(t, {1, 2}), Error);
  CHECK_THROWS_AS(ClassTuple(t, {1, 2, 99}), Error);
}

TEST_CASE("non-integral results are fatal") {
  auto t = load_table(data("a5.ctb"));
  t.irreducibles[4][t.class_index("3A")] = Cyclotomic(Rational(1, 2));
  CHECK_THROWS_AS(xi3(t, 1, 2, 2), NotIntegral);
}

TEST_CASE("fusion and sigma") {
  auto a5 = load_table(data("a5.ctb"));
  auto l = load_table(data("l2_11.ctb"));
  // A5 is a maximal subgroup of L2(11); its order-5 classes fuse to the
  // two classes 5A and 5B in some order. Either order gives the same sigma
  // for Galois-stable questions, so take the identity pairing.
  auto f = FusionMap::from_names(a5, l, {"1A", "2A", "3A", "5A", "5B"});
  CHECK(f.preimages(l.class_index("5A")) == std::vector<std::size_t>{3});
  CHECK(f.preimages(l.class_index("11A")).empty());

  SUBCASE("sigma equals xi_H when the classes are single") {
    auto tuple = ClassTuple::from_names(l, {"2A", "3A", "5A"});
    CHECK(sigma_h(f, tuple, a5.class_index("5A")) == xi3(a5, 1, 2, 3));
  }
  SUBCASE("no preimage gives zero") {
    auto tuple = ClassTuple::from_names(l, {"6A", "2A", "5A"});
    CHECK(sigma_h(f, tuple, a5.class_index("5A")) == 0);
  }
  SUBCASE("target must fuse to the tuple target") {
    auto tuple = ClassTuple::from_names(l, {"2A", "3A", "5B"});
    CHECK_THROWS_AS(sigma_h(f, tuple, a5.class_index("5A")), Error);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(FusionMap::from_names(a5, l, {"1A", "2A", "3A", "5A"}), DimensionMismatch);
    CHECK_THROWS_AS(FusionMap::from_names(a5, l, {"1A", "3A", "3A", "5A", "5B"}), Error);
    CHECK_THROWS_AS(FusionMap::from_names(a5, l, {"2A", "2A", "3A", "5A", "5B"}), Error);
  }
}
