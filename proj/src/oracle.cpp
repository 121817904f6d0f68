#include "trigen/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::shared_ptr<ClassSet const> enumerate_class(PermGroup const &g, Perm const &x,
                                                std::size_t bound) {
  auto s = std::make_shared<ClassSet>();
  s->members = conjugacy_class_orbit(g, x, bound);
  s->items.reserve(s->members.size());
  for (auto const &p : s->members)
    s->items.push_back(&p);
  return s;
}

unsigned worker_count(OracleOptions const &opts) {
  unsigned n = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  return std::max(1u, n);
}

} // namespace

Classifier::Classifier(PermGroup const &g, CharacterTable const &t, std::size_t size_bound)
    : group_(&g), table_(&t), size_bound_(size_bound), family_(t.class_count()) {
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    family_[c] = t.galois_family(c).front();
    if (family_[c] != c)
      continue;
    unsigned o = t.element_order(c);
    by_order_[o].push_back(c);
    auto &pf = power_families_[c];
    for (unsigned p : prime_divisors(o))
      pf.push_back(family_[t.power(c, p)] == c ? c : t.galois_family(t.power(c, p)).front());
  }
}

std::shared_ptr<ClassSet const> Classifier::lookup(Perm const &x) const {
  for (auto const &[f, s] : seen_)
    if (s->contains(x))
      return s;
  return nullptr;
}

std::size_t Classifier::family_of(Perm const &x) {
  unsigned o = static_cast<unsigned>(element_order(x));
  auto it = by_order_.find(o);
  if (it == by_order_.end())
    throw Error("the group has an element of order " + std::to_string(o) + " but the table " +
                table_->group_name + " has no such class");
  std::vector<std::size_t> cands = it->second;
  if (cands.size() == 1)
    return cands[0];

  auto primes = prime_divisors(o);
  for (std::size_t i = 0; i < primes.size() && cands.size() > 1; ++i) {
    std::size_t fp = family_of(x.pow(primes[i]));
    std::erase_if(cands, [&](std::size_t f) { return power_families_.at(f)[i] != fp; });
  }
  if (cands.empty())
    throw Error("element of order " + std::to_string(o) +
                " has powers matching no class of the table");
  if (cands.size() == 1)
    return cands[0];

  for (auto const &[f, s] : seen_)
    if (std::find(cands.begin(), cands.end(), f) != cands.end() && s->contains(x))
      return f;

  auto s = enumerate_class(*group_, x, size_bound_);
  std::vector<std::size_t> sized;
  for (auto f : cands)
    if (table_->class_size(f) == s->size())
      sized.push_back(f);
  if (sized.empty())
    throw Error("a class of " + std::to_string(s->size()) + " elements of order " +
                std::to_string(o) + " matches no class of the table");
  if (sized.size() > 1) {
    std::string names;
    for (auto f : sized)
      names += (names.empty() ? "" : ", ") + table_->class_name(f);
    throw AmbiguousClasses("classes " + names +
                           " agree in order, power maps and size and cannot be told apart");
  }
  seen_.emplace_back(sized[0], s);
  return sized[0];
}

std::shared_ptr<ClassSet const> Classifier::class_containing(Perm const &x) {
  std::size_t f = family_of(x);
  if (auto s = lookup(x))
    return s;
  auto s = enumerate_class(*group_, x, size_bound_);
  seen_.emplace_back(f, s);
  return s;
}

ClassIdentification::ClassIdentification(PermGroup const &g, CharacterTable const &t,
                                         IdentifyOptions opts)
    : group_(&g), table_(&t), opts_(opts) {
  if (g.order() != t.group_order)
    throw OrderMismatch("the generators give a group of order " + g.order().get_str() +
                        ", the table " + t.group_name + " has order " +
                        t.group_order.get_str());
  classifier_ = std::make_unique<Classifier>(g, t, opts.size_bound);

  std::map<unsigned, std::size_t> wanted; // order -> families still missing
  std::map<std::size_t, Perm> found;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    if (t.galois_family(c).front() == c)
      ++wanted[t.element_order(c)];
  found.emplace(0, Perm(g.degree()));
  --wanted[1];
  std::size_t missing = t.class_count() - 1;
  for (std::size_t c = 1; c < t.class_count(); ++c)
    if (t.galois_family(c).front() != c)
      --missing;

  RandomElements random(g, opts.seed);
  for (std::size_t n = 0; missing > 0 && n < opts.max_samples; ++n) {
    Perm x = random.next();
    std::size_t o = element_order(x);
    for (std::size_t d = 1; d < o && missing > 0; ++d) {
      if (o % d != 0 || wanted[static_cast<unsigned>(o / d)] == 0)
        continue;
      Perm y = x.pow(static_cast<long>(d));
      std::size_t f = classifier_->family_of(y);
      if (found.emplace(f, y).second) {
        --wanted[static_cast<unsigned>(o / d)];
        --missing;
      }
    }
  }
  if (missing > 0) {
    std::string names;
    for (std::size_t c = 0; c < t.class_count(); ++c)
      if (t.galois_family(c).front() == c && !found.count(c))
        names += (names.empty() ? "" : " ") + t.class_name(c);
    throw Error("no element found for the classes " + names + " after " +
                std::to_string(opts.max_samples) + " random elements");
  }

  // Label inside each family, lower orders first so that power images are
  // already labelled.
  std::vector<std::size_t> families;
  for (auto const &[f, r] : found)
    families.push_back(f);
  std::stable_sort(families.begin(), families.end(), [&](std::size_t a, std::size_t b) {
    return t.element_order(a) < t.element_order(b);
  });
  reps_.assign(t.class_count(), Perm(g.degree()));
  std::vector<bool> labelled(t.class_count());
  for (auto f : families) {
    Perm const &r = found.at(f);
    auto members = t.galois_family(f);
    unsigned o = t.element_order(f);
    std::optional<std::size_t> chosen;
    for (auto cj : members) {
      bool ok = true;
      for (unsigned p : prime_divisors(o)) {
        std::size_t d = t.power(cj, p);
        if (t.galois_family(d).size() == 1)
          continue;
        if (!labelled[d])
          throw Error("power map of " + t.class_name(cj) + " leads to the unlabelled class " +
                      t.class_name(d));
        if (!class_set(d).contains(r.pow(p))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen = cj;
        break;
      }
    }
    if (!chosen)
      throw AmbiguousClasses("no labelling of the family of " + t.class_name(f) +
                             " agrees with the power maps");
    for (auto ci : members)
      for (unsigned k = 1; k <= o; ++k)
        if (std::gcd(k, o) == 1 && t.power(*chosen, k) == ci) {
          reps_[ci] = r.pow(k);
          labelled[ci] = true;
          break;
        }
  }

  // The permutation character must decompose into irreducibles with
  // nonnegative integer multiplicities.
  auto pi = permutation_character();
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    Cyclotomic sum(0);
    for (std::size_t c = 0; c < t.class_count(); ++c)
      sum = sum + Cyclotomic(Rational(Integer(t.class_size(c) * static_cast<unsigned long>(pi[c])))) *
                      t.irreducibles[i][c].conjugate();
    if (!sum.is_rational())
      throw Error("class identification failed: irrational permutation character multiplicity");
    Rational m = sum.to_rational() / Rational(t.group_order);
    if (m.get_den() != 1 || m < 0)
      throw Error("class identification failed: permutation character multiplicity " +
                  m.get_str() + " for character " + std::to_string(i + 1));
  }
}

Perm const &ClassIdentification::representative(std::string_view label) const {
  return representative(table_->class_index(label));
}

ClassSet const &ClassIdentification::class_set(std::size_t cls) const {
  std::lock_guard<std::mutex> guard(lock_);
  auto it = sets_.find(cls);
  if (it != sets_.end())
    return *it->second;
  auto s = classifier_->class_containing(reps_.at(cls));
  if (table_->class_size(cls) != s->size())
    throw Error("class " + table_->class_name(cls) + " has " + std::to_string(s->size()) +
                " elements, the table says " + table_->class_size(cls).get_str());
  return *sets_.emplace(cls, std::move(s)).first->second;
}

std::size_t ClassIdentification::class_of(Perm const &x) const {
  std::size_t f;
  {
    std::lock_guard<std::mutex> guard(lock_);
    f = classifier_->family_of(x);
  }
  auto members = table_->galois_family(f);
  if (members.size() == 1)
    return f;
  for (auto m : members)
    if (class_set(m).contains(x))
      return m;
  throw Error("element matches no class of the family of " + table_->class_name(f));
}

std::vector<std::size_t> ClassIdentification::permutation_character() const {
  std::vector<std::size_t> out;
  for (auto const &r : reps_)
    out.push_back(fixed_points(r));
  return out;
}

ClassIdentification identify_classes(PermGroup const &g, CharacterTable const &t,
                                     IdentifyOptions opts) {
  return ClassIdentification(g, t, opts);
}

Perm find_family_member(PermGroup const &g, CharacterTable const &t, std::size_t cls,
                        IdentifyOptions opts) {
  if (g.order() != t.group_order)
    throw OrderMismatch("the generators give a group of order " + g.order().get_str() +
                        ", the table " + t.group_name + " has order " +
                        t.group_order.get_str());
  if (t.element_order(cls) == 1)
    return Perm(g.degree());
  Classifier classify(g, t, opts.size_bound);
  std::size_t target = t.galois_family(cls).front();
  std::size_t want = t.element_order(cls);
  RandomElements random(g, opts.seed);
  for (std::size_t n = 0; n < opts.max_samples; ++n) {
    Perm x = random.next();
    std::size_t o = element_order(x);
    if (o % want != 0)
      continue;
    Perm y = x.pow(static_cast<long>(o / want));
    if (classify.family_of(y) == target)
      return y;
  }
  throw Error("no element of class " + t.class_name(cls) + " found after " +
              std::to_string(opts.max_samples) + " random elements");
}

bool generates(PermGroup const &g, Perm const &a, Perm const &b) {
  if (g.is_transitive()) {
    std::vector<bool> seen(g.degree());
    std::vector<Point> orbit{0};
    seen[0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (Perm const *s : {&a, &b}) {
        Point y = (*s)(orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    if (orbit.size() != g.degree())
      return false;
  }
  return PermGroup({a, b}).order() == g.order();
}

namespace {

std::uint64_t count_pairs(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                          Perm const &c, OracleOptions const &opts, bool star) {
  if (c.degree() != id.group().degree())
    throw Error("fixed element has the wrong degree");
  ClassSet const &s1 = id.class_set(c1);
  ClassSet const &s2 = id.class_set(c2);
  // Walk the smaller class and test the partner for membership in the other.
  bool walk_first = s1.size() <= s2.size();
  ClassSet const &walk = walk_first ? s1 : s2;
  ClassSet const &test = walk_first ? s2 : s1;

  unsigned jobs = std::min<unsigned>(worker_count(opts),
                                     static_cast<unsigned>(std::max<std::size_t>(1, walk.size())));
  std::uint64_t limit = opts.stop_after.value_or(UINT64_MAX);
  std::atomic<std::uint64_t> total{0};
  auto work = [&](unsigned part) {
    std::uint64_t local = 0;
    for (std::size_t i = part; i < walk.size(); i += jobs) {
      if (star && total.load(std::memory_order_relaxed) >= limit)
        break;
      Perm const &x = *walk.items[i];
      // ab = c: b = a^-1 c when walking C1, a = c b^-1 when walking C2.
      Perm y = walk_first ? x.inverse() * c : c * x.inverse();
      if (!test.contains(y))
        continue;
      if (star) {
        bool gen = walk_first ? generates(id.group(), x, y) : generates(id.group(), y, x);
        if (!gen)
          continue;
        total.fetch_add(1, std::memory_order_relaxed);
      } else {
        ++local;
      }
    }
    total.fetch_add(local, std::memory_order_relaxed);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned p = 0; p < jobs; ++p)
      pool.emplace_back(work, p);
    for (auto &th : pool)
      th.join();
  }
  return star ? std::min(total.load(), limit) : total.load();
}

} // namespace

std::uint64_t xi3_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                         Perm const &c, OracleOptions const &opts) {
  return count_pairs(id, c1, c2, c, opts, false);
}

std::uint64_t xi3_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                         std::size_t c3, OracleOptions const &opts) {
  return count_pairs(id, c1, c2, id.representative(c3), opts, false);
}

std::uint64_t xi3_star_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                              Perm const &c, OracleOptions const &opts) {
  return count_pairs(id, c1, c2, c, opts, true);
}

std::uint64_t xi3_star_oracle(ClassIdentification const &id, std::size_t c1, std::size_t c2,
                              std::size_t c3, OracleOptions const &opts) {
  return count_pairs(id, c1, c2, id.representative(c3), opts, true);
}

std::size_t copies_containing(PermGroup const &g, Perm const &c) {
  if (!g.contains(c))
    throw Error("element is not in the group");
  return fixed_points(c);
}

FusionMap infer_fusion(ClassIdentification const &sub, ClassIdentification const &super) {
  if (sub.group().degree() != super.group().degree())
    throw Error("subgroup and group act on different numbers of points");
  for (auto const &s : sub.group().generators())
    if (!super.group().contains(s))
      throw Error("a subgroup generator is not in the group");
  std::vector<std::size_t> map;
  for (std::size_t c = 0; c < sub.table().class_count(); ++c)
    map.push_back(super.class_of(sub.representative(c)));
  return FusionMap(sub.table(), super.table(), std::move(map));
}

} // namespace trigen
