#ifndef TRIGEN_PERM_GROUP_HPP
#define TRIGEN_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "trigen/cyclotomic.hpp"
#include "trigen/perm.hpp"

namespace trigen {

using PermSet = std::unordered_set<Perm, PermHash>;

/// Permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain. Base points are chosen as the smallest
/// point moved by the element that forces a new level.
///
/// The chain is built in the constructor; afterwards the object is
/// immutable and safe to query from several threads.
class PermGroup {
public:
  /// Throws Error if `generators` is empty or the degrees differ.
  explicit PermGroup(std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const &generators() const noexcept { return generators_; }

  Integer order() const;
  bool contains(Perm const &p) const;

  std::vector<Point> const &base() const noexcept { return base_; }
  /// Strong generators fixing the first `level` base points.
  std::vector<Perm> const &strong_generators(std::size_t level) const {
    return levels_.at(level).gens;
  }

  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;

  /// Point stabilizer, generated by Schreier generators and trimmed to the
  /// ones that enlarge the subgroup built so far.
  PermGroup stabilizer(Point p) const;

private:
  struct Level {
    Point point;
    std::vector<Perm> gens;
    // transversal[x] maps the base point to x; empty if x is outside the orbit.
    std::vector<std::optional<Perm>> transversal;
    std::vector<Point> orbit;
  };

  void schreier_sims();
  void rebuild_orbit(Level &lvl) const;
  // Sifts g through levels starting at `from`; returns the residue and the
  // level at which sifting stopped (levels_.size() when it passed them all).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

/// Deterministic product-replacement generator of random group elements.
class RandomElements {
public:
  RandomElements(PermGroup const &g, std::uint64_t seed = 1);
  Perm next();

private:
  std::vector<Perm> state_;
  Perm accumulator_;
  std::mt19937_64 rng_;
};

/// The conjugacy class of `rep` under `g`, by closure under conjugation by
/// the generators. Throws BoundExceeded once more than `size_bound` elements
/// have been found.
PermSet conjugacy_class_orbit(PermGroup const &g, Perm const &rep, std::size_t size_bound);

/// Size of the class of `rep`, stopping with BoundExceeded past `size_bound`.
std::size_t conjugacy_class_size(PermGroup const &g, Perm const &rep, std::size_t size_bound);

} // namespace trigen

#endif // TRIGEN_PERM_GROUP_HPP
