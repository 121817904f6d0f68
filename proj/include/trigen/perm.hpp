#ifndef TRIGEN_PERM_HPP
#define TRIGEN_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace trigen {

/// Points are 0-based internally; PRM files and printed cycles are 1-based.
using Point = std::uint16_t;

/// Permutation of a fixed degree stored as an image array.
///
/// Composition convention, used everywhere in this library: `p * q` applies
/// p first and then q, i.e. (p * q)(x) = q(p(x)). This is the right-action
/// convention x^(pq) = (x^p)^q of GAP and the ATLAS, so products of class
/// representatives read the same way as in the published tables.
class Perm {
public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws Error unless `images` is a bijection of 0..n-1.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from 1-based cycles, e.g. {{1,2},{3,4,5}}.
  static Perm from_cycles(std::size_t degree, std::vector<std::vector<std::size_t>> const &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::vector<Point> const &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  Perm pow(long k) const;
  /// x^-1 * this * x.
  Perm conjugate_by(Perm const &x) const;

  friend Perm operator*(Perm const &p, Perm const &q);
  friend bool operator==(Perm const &a, Perm const &b) = default;
  friend auto operator<=>(Perm const &a, Perm const &b) = default;

  /// Disjoint cycle notation, 1-based, fixed points omitted; "()" for the
  /// identity.
  std::string to_string() const;

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(Perm const &p) const noexcept;
};

/// Cycle structure: cycle length -> multiplicity.
class CycleType {
public:
  CycleType() = default;
  CycleType(std::size_t degree, std::map<std::size_t, std::size_t> counts);

  std::size_t degree() const noexcept { return degree_; }
  std::map<std::size_t, std::size_t> const &counts() const noexcept { return counts_; }
  /// Total number of cycles, fixed points included.
  std::size_t cycles() const noexcept;

  friend bool operator==(CycleType const &, CycleType const &) = default;
  friend auto operator<=>(CycleType const &, CycleType const &) = default;

  /// Exponential notation such as "1^20 2^40".
  std::string to_string() const;

private:
  std::size_t degree_ = 0;
  std::map<std::size_t, std::size_t> counts_;
};

std::size_t element_order(Perm const &p);
CycleType cycle_type(Perm const &p);
std::size_t fixed_points(Perm const &p);

/// Recovers the cycle type of an element of order m on n points from the
/// fixed-point counts of its powers: `fixes[d]` = fix(g^d) for every
/// divisor d of m. Points on cycles of length exactly d number
/// fix(g^d) minus the points on shorter cycles whose length divides d.
/// Throws Error when the counts admit no nonnegative solution.
CycleType cycle_type_from_fixpoints(std::size_t n, std::size_t order,
                                    std::map<std::size_t, std::size_t> const &fixes);

std::ostream &operator<<(std::ostream &os, Perm const &p);
std::ostream &operator<<(std::ostream &os, CycleType const &c);

/// Reads the PRM format: a `degree <n>` line followed by one permutation per
/// line as n images of the points 1..n; `#` starts a comment. Throws
/// ParseError with the 1-based line number.
std::vector<Perm> parse_prm(std::istream &in);
std::vector<Perm> load_prm(std::string const &path);
std::string serialize_prm(std::span<Perm const> perms);

} // namespace trigen

#endif // TRIGEN_PERM_HPP
