#include "trigen/analysis.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "trigen/errors.hpp"
#include "trigen/oracle.hpp"

namespace trigen {

TriangleClass triangle_classify(unsigned l, unsigned m, unsigned n) {
  std::array<unsigned, 3> v{l, m, n};
  std::sort(v.begin(), v.end());
  if (v[0] == 0)
    throw Error("triangle group orders must be positive");
  auto [a, b, c] = v;
  // Sign of 1/a + 1/b + 1/c - 1, cleared of denominators.
  long long s = static_cast<long long>(b) * c + static_cast<long long>(a) * c +
                static_cast<long long>(a) * b - static_cast<long long>(a) * b * c;
  if (s == 0)
    return {TriangleKind::Euclidean, "", 0};
  if (s < 0)
    return {TriangleKind::Hyperbolic, "", 0};
  if (a == 1)
    return {TriangleKind::Finite, "cyclic", std::gcd(b, c)};
  if (b == 2)
    return {TriangleKind::Finite, "dihedral", 2ull * c};
  switch (c) {
  case 3:
    return {TriangleKind::Finite, "A4", 12};
  case 4:
    return {TriangleKind::Finite, "S4", 24};
  default:
    return {TriangleKind::Finite, "A5", 60};
  }
}

bool coprime_no_soluble_quotient(unsigned l, unsigned m, unsigned n) {
  return std::gcd(l, m) == 1 && std::gcd(l, n) == 1 && std::gcd(m, n) == 1;
}

bool ContributionLedger::all_pruned() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](LedgerEntry const &e) { return e.pruned != Pruning::None; });
}

std::optional<std::uint64_t> resolve_copies(CopiesSource const &src, SubgroupRecord const &h,
                                            CharacterTable const &g, std::size_t target) {
  switch (src.kind) {
  case CopiesSource::Kind::Supplied:
    if (src.target && *src.target != g.class_name(target))
      return std::nullopt;
    return src.value;
  case CopiesSource::Kind::Fusion: {
    if (!h.fusion)
      throw Error(h.name + ": copies from fusion need a fusion map");
    Rational sum = 0;
    for (auto p : h.fusion->preimages(target))
      sum += Rational(g.classes[target].centralizer_order,
                      h.fusion->sub().classes[p].centralizer_order);
    sum.canonicalize();
    if (sum.get_den() != 1)
      throw Error(h.name + ": fusion gives a non-integral number of copies");
    return sum.get_num().get_ui();
  }
  case CopiesSource::Kind::Action: {
    auto const &a = *src.action;
    if (a.order() != g.group_order)
      throw OrderMismatch(h.name + ": the action " + src.label + " has order " +
                          a.order().get_str() + ", not " + g.group_order.get_str());
    if (!a.is_transitive() || Integer(a.degree()) * h.order != g.group_order)
      throw Error(h.name + ": " + src.label + " is not an action on the cosets of a subgroup of order " +
                  h.order.get_str());
    return copies_containing(a, find_family_member(a, g, target));
  }
  }
  return std::nullopt;
}

ContributionLedger build_ledger(ClassTuple const &tuple,
                                std::vector<SubgroupRecord> const &subgroups) {
  auto const &g = tuple.table();
  ContributionLedger ledger;
  ledger.xi_total = xi(tuple);
  ledger.lower_bound = ledger.xi_total;
  ledger.complete = !subgroups.empty();

  std::vector<unsigned> orders;
  for (auto e : tuple.entries())
    orders.push_back(g.element_order(e));
  unsigned lcm = std::accumulate(orders.begin(), orders.end(), 1u,
                                 [](unsigned a, unsigned b) { return std::lcm(a, b); });
  bool coprime =
      orders.size() == 3 && coprime_no_soluble_quotient(orders[0], orders[1], orders[2]);

  for (auto const &h : subgroups) {
    LedgerEntry e;
    e.subgroup = h.name;
    if (coprime && h.soluble)
      e.pruned = Pruning::Soluble;
    else if (h.order % lcm != 0)
      e.pruned = Pruning::OrderNotDivisible;
    if (e.pruned != Pruning::None) {
      ledger.entries.push_back(std::move(e));
      continue;
    }

    if (!h.fusion) {
      e.missing = "no fusion map";
      ledger.complete = false;
      ledger.entries.push_back(std::move(e));
      continue;
    }
    Integer sigma = 0;
    for (auto p : h.fusion->preimages(tuple.target()))
      sigma = std::max(sigma, sigma_h(*h.fusion, tuple, p));
    e.sigma = sigma;

    for (auto const &src : h.copies) {
      auto n = resolve_copies(src, h, g, tuple.target());
      if (!n)
        continue;
      if (e.copies && *e.copies != *n)
        throw Error(h.name + ": copy counts disagree (" + std::to_string(*e.copies) + " and " +
                    std::to_string(*n) + " from " + src.label + ")");
      e.copies = n;
    }
    if (e.copies) {
      e.product = sigma * Integer(static_cast<unsigned long>(*e.copies));
    } else if (sigma != 0) {
      e.missing = "no copy count for " + g.class_name(tuple.target());
      ledger.complete = false;
    }
    ledger.lower_bound -= e.product;
    ledger.entries.push_back(std::move(e));
  }
  return ledger;
}

ReeCertificate ree_test(std::size_t n, std::vector<CycleType> const &types) {
  if (types.size() < 3)
    throw Error("Ree's test needs at least three permutations");
  ReeCertificate cert;
  cert.degree = n;
  cert.types = types;
  for (auto const &t : types) {
    if (t.degree() != n)
      throw DimensionMismatch("cycle type on " + std::to_string(t.degree()) +
                              " points in a test on " + std::to_string(n));
    cert.total += t.cycles();
  }
  cert.bound = (types.size() - 2) * n + 2;
  cert.violated = cert.total > cert.bound;
  return cert;
}

ReeCertificate ree_for_tuple(PermGroup const &action, ClassTuple const &tuple) {
  auto const &t = tuple.table();
  if (action.order() != t.group_order)
    throw OrderMismatch("the action has order " + action.order().get_str() + ", the table " +
                        t.group_name + " has order " + t.group_order.get_str());
  if (!action.is_transitive())
    throw Error("Ree's test needs a transitive action");
  // a b = c becomes a b c^-1 = 1; c^-1 has the cycle type of c.
  std::vector<CycleType> types;
  for (auto e : tuple.entries())
    types.push_back(cycle_type(find_family_member(action, t, e)));
  return ree_test(action.degree(), types);
}

Verdict decide(Question const &q) {
  auto const &t = *q.table;
  Verdict v{Conclusion::Inconclusive, Reason::Unresolved, xi(q.tuple), {}, {}, {}, {}};
  for (auto const &ref : q.external)
    v.notes.push_back("external: " + ref);
  v.ledger = build_ledger(q.tuple, q.subgroups);
  if (q.ree_action)
    v.ree = ree_for_tuple(*q.ree_action, q.tuple);

  auto const &e = q.tuple.entries();
  if (e.size() == 3) {
    v.triangle = triangle_classify(t.element_order(e[0]), t.element_order(e[1]),
                                   t.element_order(e[2]));
    if (v.triangle->kind == TriangleKind::Finite && v.triangle->order < t.group_order) {
      v.conclusion = Conclusion::NotGenerated;
      v.reason = Reason::TrianglesFinite;
      return v;
    }
  }
  if (v.xi == 0) {
    v.conclusion = Conclusion::NotGenerated;
    v.reason = Reason::ZeroStructureConstant;
    return v;
  }
  if (v.ree && v.ree->violated) {
    v.conclusion = Conclusion::NotGenerated;
    v.reason = Reason::ReeViolation;
    return v;
  }
  if (!v.ledger->complete) {
    if (q.subgroups.empty())
      v.notes.push_back("no maximal subgroups listed");
    for (auto const &x : v.ledger->entries)
      if (!x.missing.empty())
        v.notes.push_back(x.subgroup + ": " + x.missing);
    return v;
  }
  if (v.ledger->lower_bound > 0) {
    v.conclusion = Conclusion::Generated;
    v.reason = v.ledger->all_pruned() ? Reason::NoEligibleSubgroup : Reason::PositiveLowerBound;
    return v;
  }
  v.notes.push_back("subgroup contributions cover xi");
  return v;
}

std::string_view to_string(TriangleKind k) {
  switch (k) {
  case TriangleKind::Finite:
    return "Finite";
  case TriangleKind::Euclidean:
    return "Euclidean";
  case TriangleKind::Hyperbolic:
    return "Hyperbolic";
  }
  return "?";
}

std::string_view to_string(Pruning p) {
  switch (p) {
  case Pruning::None:
    return "none";
  case Pruning::Soluble:
    return "soluble";
  case Pruning::OrderNotDivisible:
    return "order";
  }
  return "?";
}

std::string_view to_string(Conclusion c) {
  switch (c) {
  case Conclusion::Generated:
    return "Generated";
  case Conclusion::NotGenerated:
    return "NotGenerated";
  case Conclusion::Inconclusive:
    return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
  case Reason::TrianglesFinite:
    return "TrianglesFinite";
  case Reason::ZeroStructureConstant:
    return "ZeroStructureConstant";
  case Reason::ReeViolation:
    return "ReeViolation";
  case Reason::PositiveLowerBound:
    return "PositiveLowerBound";
  case Reason::NoEligibleSubgroup:
    return "NoEligibleSubgroup";
  case Reason::Unresolved:
    return "Unresolved";
  }
  return "?";
}

} // namespace trigen
