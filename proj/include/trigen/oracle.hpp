#ifndef TRIGEN_ORACLE_HPP
#define TRIGEN_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "trigen/character_table.hpp"
#include "trigen/class_algebra.hpp"
#include "trigen/perm_group.hpp"

// Brute-force counterparts of the character-theoretic counts. Nothing here
// reads character values except the final sanity check of a labelling.

namespace trigen {

/// An enumerated conjugacy class, with an index for splitting work.
struct ClassSet {
  PermSet members;
  std::vector<Perm const *> items;

  bool contains(Perm const &p) const { return members.count(p) != 0; }
  std::size_t size() const noexcept { return items.size(); }
};

struct IdentifyOptions {
  /// Largest class that may be enumerated, in elements.
  std::size_t size_bound = 100000;
  std::uint64_t seed = 1;
  /// Random elements drawn before giving up on an unseen class.
  std::size_t max_samples = 20000;
};

/// Sorts elements of a permutation group into the Galois families of a
/// character table. A family is the set of classes {g^j : gcd(j, o(g)) = 1};
/// families of the same order are told apart by the families of their
/// prime powers, then by enumerated class size.
class Classifier {
public:
  Classifier(PermGroup const &g, CharacterTable const &t, std::size_t size_bound);

  PermGroup const &group() const noexcept { return *group_; }
  CharacterTable const &table() const noexcept { return *table_; }
  std::size_t size_bound() const noexcept { return size_bound_; }

  /// Smallest class index of the family containing x. Throws
  /// AmbiguousClasses when two families cannot be separated, Error when x
  /// matches no family.
  std::size_t family_of(Perm const &x);

  /// The enumerated class of x; reuses a set found earlier when x is in it.
  std::shared_ptr<ClassSet const> class_containing(Perm const &x);

private:
  std::shared_ptr<ClassSet const> lookup(Perm const &x) const;

  PermGroup const *group_;
  CharacterTable const *table_;
  std::size_t size_bound_;
  std::vector<std::size_t> family_;                   // class -> family id
  std::map<std::size_t, std::vector<std::size_t>> power_families_; // family -> families of g^p
  std::map<unsigned, std::vector<std::size_t>> by_order_;          // order -> family ids
  std::vector<std::pair<std::size_t, std::shared_ptr<ClassSet const>>> seen_;
};

/// Binds every table class to a concrete permutation.
///
/// Within a Galois family the labels follow the power maps: families are
/// handled by increasing element order, and the representative r of a
/// family is given the first label whose prime powers land in the classes
/// the table prescribes among already labelled classes. The remaining
/// members get r^k. A family with no such constraint (for example J1's
/// 19A/19B/19C) takes the first label, so labels are fixed up to Galois
/// conjugation only.
class ClassIdentification {
public:
  /// Throws OrderMismatch when |g| differs from the table's group order.
  ClassIdentification(PermGroup const &g, CharacterTable const &t, IdentifyOptions opts = {});

  PermGroup const &group() const noexcept { return *group_; }
  CharacterTable const &table() const noexcept { return *table_; }

  Perm const &representative(std::size_t cls) const { return reps_.at(cls); }
  Perm const &representative(std::string_view label) const;

  /// Enumerated class, computed on first use and cached. Thread-safe.
  /// Throws BoundExceeded, or Error when the size disagrees with the table.
  ClassSet const &class_set(std::size_t cls) const;

  /// Table class of an arbitrary element of the group.
  std::size_t class_of(Perm const &x) const;

  /// Number of fixed points of each representative.
  std::vector<std::size_t> permutation_character() const;

private:
  PermGroup const *group_;
  CharacterTable const *table_;
  IdentifyOptions opts_;
  std::vector<Perm> reps_;
  mutable std::unique_ptr<Classifier> classifier_;
  mutable std::mutex lock_;
  mutable std::map<std::size_t, std::shared_ptr<ClassSet const>> sets_;
};

ClassIdentification identify_classes(PermGroup const &g, CharacterTable const &t,
                                     IdentifyOptions opts = {});

/// Some element of the Galois family of `cls`, found by random search. Cycle
/// type and fixed points are constant on a family, so this is enough for
/// Ree certificates and copy counts. Throws Error after `max_samples`.
Perm find_family_member(PermGroup const &g, CharacterTable const &t, std::size_t cls,
                        IdentifyOptions opts = {});

struct OracleOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// xi3_star_oracle only: stop once this many generating pairs are found.
  /// The result is then min(true count, stop_after).
  std::optional<std::uint64_t> stop_after;
};

/// Pairs (a, b) in C1 x C2 with ab = c, for the class representative c of C3.
std::uint64_t xi3_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                         std::size_t c3, OracleOptions const &opts = {});
/// Same, for an explicit c.
std::uint64_t xi3_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                         Perm const &c, OracleOptions const &opts = {});

/// The pairs counted by xi3_oracle that generate the whole group.
std::uint64_t xi3_star_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                              std::size_t c3, OracleOptions const &opts = {});
std::uint64_t xi3_star_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                              Perm const &c, OracleOptions const &opts = {});

/// True when <a, b> is all of g.
bool generates(PermGroup const &g, Perm const &a, Perm const &b);

/// In an action on the cosets of H, the number of conjugates of H that
/// contain c. Throws Error when c is not in g.
std::size_t copies_containing(PermGroup const &g, Perm const &c);

/// Fusion of H into G read off from class representatives. `sub` must act
/// on the same points as `super`, as a subgroup.
FusionMap infer_fusion(ClassIdentification const &sub, ClassIdentification const &super);

} // namespace trigen

#endif // TRIGEN_ORACLE_HPP
