#ifndef TRIGEN_ANALYSIS_HPP
#define TRIGEN_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigen/character_table.hpp"
#include "trigen/class_algebra.hpp"
#include "trigen/perm.hpp"
#include "trigen/perm_group.hpp"

namespace trigen {

enum class TriangleKind { Finite, Euclidean, Hyperbolic };

struct TriangleClass {
  TriangleKind kind;
  /// Finite only: "cyclic", "dihedral", "A4", "S4" or "A5", and the order.
  std::string group;
  std::uint64_t order = 0;
};

/// Δ(l,m,n) is finite iff 1/l + 1/m + 1/n > 1. Arguments in any order.
TriangleClass triangle_classify(unsigned l, unsigned m, unsigned n);

/// True when l, m, n are pairwise coprime; a group generated that way has
/// no soluble quotient, so no soluble subgroup can be generated that way.
bool coprime_no_soluble_quotient(unsigned l, unsigned m, unsigned n);

/// One way of knowing how many conjugates of H contain the fixed element c.
struct CopiesSource {
  enum class Kind {
    Supplied, ///< a number from the scenario, optionally for one class only
    Action,   ///< fixed points of c in the action on the cosets of H
    Fusion,   ///< |C_G(c)| * sum of 1/|C_H(h)| over the preimages h of c
  };
  Kind kind = Kind::Supplied;
  std::uint64_t value = 0;
  std::optional<std::string> target;
  std::shared_ptr<PermGroup const> action;
  std::string label; ///< as written in the scenario, for reports
};

struct SubgroupRecord {
  std::string name;
  Integer order;
  bool soluble = false;
  std::shared_ptr<CharacterTable const> table;
  std::optional<FusionMap> fusion;
  std::vector<CopiesSource> copies;
};

enum class Pruning { None, Soluble, OrderNotDivisible };

struct LedgerEntry {
  std::string subgroup;
  Pruning pruned = Pruning::None;
  std::optional<Integer> sigma;
  std::optional<std::uint64_t> copies;
  Integer product = 0;
  /// Why the entry is incomplete, or empty.
  std::string missing;
};

struct ContributionLedger {
  Integer xi_total;
  std::vector<LedgerEntry> entries;
  /// xi_total minus the sum of the products; a lower bound for xi* when
  /// the ledger is complete.
  Integer lower_bound;
  bool complete = true;

  bool all_pruned() const;
};

/// Contributions of the listed maximal subgroups to xi for one tuple.
/// Soluble subgroups are pruned when the orders are pairwise coprime
/// (3-tuples only), and any subgroup whose order is not divisible by the lcm
/// of the element orders is pruned. Sigma is the largest fusion-summed
/// structure constant over the H-classes fusing to the target. Throws Error
/// when two copy sources disagree. An empty subgroup list makes the ledger
/// incomplete.
ContributionLedger build_ledger(ClassTuple const &tuple,
                                std::vector<SubgroupRecord> const &subgroups);

/// Copies of H containing an element of G-class `target`, from one source.
/// Returns nullopt when a Supplied source is for another class.
std::optional<std::uint64_t> resolve_copies(CopiesSource const &src, SubgroupRecord const &h,
                                            CharacterTable const &g, std::size_t target);

struct ReeCertificate {
  std::size_t degree = 0;
  std::vector<CycleType> types;
  std::size_t total = 0;
  std::size_t bound = 0;
  bool violated = false;
};

/// Ree's inequality for s = types.size() permutations on n points whose
/// product is the identity and which generate a transitive group: the cycle
/// counts satisfy total <= (s - 2) n + 2. Throws Error when s < 3 or a type
/// has another degree.
ReeCertificate ree_test(std::size_t n, std::vector<CycleType> const &types);

/// Ree test for a class tuple in a transitive action of G, using one element
/// per class. Throws OrderMismatch when the action is not of G, Error when
/// it is intransitive.
ReeCertificate ree_for_tuple(PermGroup const &action, ClassTuple const &tuple);

/// A generation question: one tuple with everything known about it.
struct Question {
  std::shared_ptr<CharacterTable const> table;
  ClassTuple tuple;
  std::vector<SubgroupRecord> subgroups;
  /// Transitive action of G on which to run Ree's test, when given.
  std::shared_ptr<PermGroup const> ree_action;
  std::vector<std::string> external;
};

enum class Conclusion { Generated, NotGenerated, Inconclusive };
enum class Reason {
  TrianglesFinite,
  ZeroStructureConstant,
  ReeViolation,
  PositiveLowerBound,
  NoEligibleSubgroup,
  Unresolved
};

struct Verdict {
  Conclusion conclusion;
  Reason reason;
  Integer xi;
  std::optional<TriangleClass> triangle;
  std::optional<ContributionLedger> ledger;
  std::optional<ReeCertificate> ree;
  std::vector<std::string> notes;
};

/// In order: finite triangle group smaller than G; xi = 0; Ree violation;
/// positive lower bound from a complete ledger; otherwise Inconclusive.
Verdict decide(Question const &q);

std::string_view to_string(TriangleKind k);
std::string_view to_string(Pruning p);
std::string_view to_string(Conclusion c);
std::string_view to_string(Reason r);

} // namespace trigen

#endif // TRIGEN_ANALYSIS_HPP
