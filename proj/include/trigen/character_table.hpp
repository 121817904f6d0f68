#ifndef TRIGEN_CHARACTER_TABLE_HPP
#define TRIGEN_CHARACTER_TABLE_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trigen/cyclotomic.hpp"

namespace trigen {

struct ClassInfo {
  std::string name;
  unsigned element_order = 1;
  Integer centralizer_order;
  /// prime p -> index of the class containing g^p.
  std::map<unsigned, std::size_t> power_maps;
};

/// Ordinary character table. Classes are ordered as read, identity first;
/// `irreducibles[i][j]` is chi_i on class j.
class CharacterTable {
public:
  std::string group_name;
  Integer group_order;
  bool soluble = false;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;

  std::size_t class_count() const noexcept { return classes.size(); }

  /// Exact-match lookup. Throws UnknownClass.
  std::size_t class_index(std::string_view name) const;
  std::string const &class_name(std::size_t i) const { return classes.at(i).name; }
  unsigned element_order(std::size_t i) const { return classes.at(i).element_order; }

  /// |G| / |C_G(g)|.
  Integer class_size(std::size_t i) const;

  /// chi_i(1) as an integer. Throws NotIntegral if the stored degree is not
  /// a positive integer.
  Integer degree(std::size_t i) const;

  /// Class of g^k, composed from the stored prime power maps. Throws Error
  /// when a prime needed for k mod o(g) has no power map.
  std::size_t power(std::size_t cls, long k) const;

  /// Class of g^-1.
  std::size_t inverse_class(std::size_t cls) const;

  /// Classes {g^j : gcd(j, o(g)) = 1} containing `cls`, in table order.
  std::vector<std::size_t> galois_family(std::size_t cls) const;

  /// CTB text for this table; parse_table(serialize()) reproduces it.
  std::string serialize() const;
};

/// Reads the CTB line format. Performs structural checks only (square
/// table, divisibility of orders and centralizers, identity class first,
/// unique names); orthogonality is left to lint_table. Throws ParseError
/// carrying the 1-based line number, or DimensionMismatch.
CharacterTable parse_table(std::istream &in);
CharacterTable parse_table(std::string_view text);
CharacterTable load_table(std::string const &path);

struct Diagnostic {
  std::string check;
  std::string message;
};

/// Every violated table invariant, one entry per violation. Empty iff the
/// table is consistent.
std::vector<Diagnostic> lint_table(CharacterTable const &t);

} // namespace trigen

#endif // TRIGEN_CHARACTER_TABLE_HPP
