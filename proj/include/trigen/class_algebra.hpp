#ifndef TRIGEN_CLASS_ALGEBRA_HPP
#define TRIGEN_CLASS_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trigen/character_table.hpp"

namespace trigen {

/// (C1, C2, C3) or (C1, C2, C3, C4); the last entry is the class of the
/// fixed element c (or d).
class ClassTuple {
public:
  ClassTuple(CharacterTable const &table, std::vector<std::size_t> entries);
  /// Resolves labels such as {"2A", "3A", "7A"}. Throws UnknownClass.
  static ClassTuple from_names(CharacterTable const &table,
                               std::vector<std::string> const &names);

  CharacterTable const &table() const noexcept { return *table_; }
  std::vector<std::size_t> const &entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t target() const noexcept { return entries_.back(); }
  std::string to_string() const;

private:
  CharacterTable const *table_;
  std::vector<std::size_t> entries_;
};

/// Number of (a, b) in C1 x C2 with ab = c, c a fixed element of C3.
Integer xi3(CharacterTable const &t, std::size_t c1, std::size_t c2, std::size_t c3);

/// Number of (a, b, c) in C1 x C2 x C3 with abc = d, d a fixed element of C4.
Integer xi4(CharacterTable const &t, std::size_t c1, std::size_t c2, std::size_t c3,
            std::size_t c4);

/// xi3 or xi4 according to the tuple length.
Integer xi(ClassTuple const &tuple);

/// Class fusion from a subgroup table into a group table.
class FusionMap {
public:
  /// Throws DimensionMismatch when `map` does not cover every subgroup
  /// class, and Error when it breaks order preservation or does not send
  /// the identity to the identity.
  FusionMap(CharacterTable const &sub, CharacterTable const &super, std::vector<std::size_t> map);
  /// Fusion given as one group-class label per subgroup class.
  static FusionMap from_names(CharacterTable const &sub, CharacterTable const &super,
                              std::vector<std::string> const &names);

  CharacterTable const &sub() const noexcept { return *sub_; }
  CharacterTable const &super() const noexcept { return *super_; }
  std::vector<std::size_t> const &map() const noexcept { return map_; }
  std::size_t operator()(std::size_t h_class) const { return map_.at(h_class); }

  /// Subgroup classes fusing into group class `g_class`.
  std::vector<std::size_t> preimages(std::size_t g_class) const;

private:
  CharacterTable const *sub_;
  CharacterTable const *super_;
  std::vector<std::size_t> map_;
};

/// Pairs (or triples) counted by xi that lie inside H, for the fixed c in
/// the H-class `target_in_h`: the sum of xi_H over all H-class preimages of
/// the leading G-classes. Throws Error when `target_in_h` does not fuse to
/// the tuple's target class.
Integer sigma_h(FusionMap const &f, ClassTuple const &g_classes, std::size_t target_in_h);

} // namespace trigen

#endif // TRIGEN_CLASS_ALGEBRA_HPP
