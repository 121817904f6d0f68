#include "trigen/perm_group.hpp"

#include <deque>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

std::optional<Point> smallest_moved_point(Perm const &p) {
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p(static_cast<Point>(i)) != i)
      return static_cast<Point>(i);
  return std::nullopt;
}

} // namespace

PermGroup::PermGroup(std::vector<Perm> generators) : generators_(std::move(generators)) {
  if (generators_.empty())
    throw Error("a permutation group needs at least one generator");
  degree_ = generators_[0].degree();
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw Error("generators have different degrees");
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level &lvl) const {
  lvl.transversal.assign(degree_, std::nullopt);
  lvl.orbit.assign(1, lvl.point);
  lvl.transversal[lvl.point] = Perm(degree_);
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    Point x = lvl.orbit[k];
    for (auto const &s : lvl.gens) {
      Point y = s(x);
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = *lvl.transversal[x] * s;
        lvl.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Point x = g(levels_[l].point);
    auto const &u = levels_[l].transversal[x];
    if (!u)
      return {std::move(g), l};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  std::vector<Perm> gens;
  for (auto const &g : generators_)
    if (!g.is_identity())
      gens.push_back(g);

  auto fixes_base = [&](Perm const &p, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (p(levels_[l].point) != levels_[l].point)
        return false;
    return true;
  };

  for (auto const &s : gens)
    if (fixes_base(s, levels_.size()))
      levels_.push_back({*smallest_moved_point(s), {}, {}, {}});
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (auto const &s : gens)
      if (fixes_base(s, l))
        levels_[l].gens.push_back(s);
    rebuild_orbit(levels_[l]);
  }

  // Holt's SCHREIERSIMS: make level i complete, assuming all deeper levels
  // already are; any non-sifting Schreier generator is pushed down and the
  // work restarts at the deepest level it touched.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    Level &lvl = levels_[i];
    for (std::size_t k = 0; !changed && k < lvl.orbit.size(); ++k) {
      Point beta = lvl.orbit[k];
      for (std::size_t si = 0; !changed && si < lvl.gens.size(); ++si) {
        Perm const &s = lvl.gens[si];
        Perm g = *lvl.transversal[beta] * s * lvl.transversal[s(beta)]->inverse();
        if (g.is_identity())
          continue;
        auto [h, j] = strip(std::move(g), static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && h.is_identity())
          continue;
        if (j == levels_.size())
          levels_.push_back({*smallest_moved_point(h), {}, {}, {}});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        changed = true;
      }
    }
    if (!changed)
      --i;
  }
  for (auto const &l : levels_)
    base_.push_back(l.point);
}

Integer PermGroup::order() const {
  Integer n = 1;
  for (auto const &l : levels_)
    n *= static_cast<unsigned long>(l.orbit.size());
  return n;
}

bool PermGroup::contains(Perm const &p) const {
  if (p.degree() != degree_)
    return false;
  auto [h, j] = strip(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_)
    throw Error("point out of range");
  std::vector<bool> seen(degree_);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &s : generators_) {
      Point y = s(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_);
  std::vector<std::vector<Point>> out;
  for (std::size_t p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(static_cast<Point>(p));
    for (auto x : orb)
      seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbit(0).size() == degree_; }

PermGroup PermGroup::stabilizer(Point p) const {
  if (p >= degree_)
    throw Error("point out of range");
  std::vector<std::optional<Perm>> u(degree_);
  std::vector<Point> orb{p};
  u[p] = Perm(degree_);
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &s : generators_) {
      Point y = s(orb[k]);
      if (!u[y]) {
        u[y] = *u[orb[k]] * s;
        orb.push_back(y);
      }
    }

  std::vector<Perm> gens{Perm(degree_)};
  PermGroup sub(gens);
  for (auto beta : orb)
    for (auto const &s : generators_) {
      Perm g = *u[beta] * s * u[s(beta)]->inverse();
      if (g.is_identity() || sub.contains(g))
        continue;
      if (gens.size() == 1 && gens[0].is_identity())
        gens.clear();
      gens.push_back(std::move(g));
      sub = PermGroup(gens);
    }
  return sub;
}

RandomElements::RandomElements(PermGroup const &g, std::uint64_t seed)
    : accumulator_(g.degree()), rng_(seed) {
  for (auto const &p : g.generators())
    state_.push_back(p);
  for (std::size_t k = 0; state_.size() < 10; ++k)
    state_.push_back(state_[k]);
  for (int warm = 0; warm < 60; ++warm)
    next();
}

Perm RandomElements::next() {
  std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
  std::size_t i = pick(rng_), j = pick(rng_);
  while (j == i)
    j = pick(rng_);
  if (rng_() & 1)
    state_[i] = state_[i] * state_[j];
  else
    state_[i] = state_[i] * state_[j].inverse();
  accumulator_ = accumulator_ * state_[i];
  return accumulator_;
}

PermSet conjugacy_class_orbit(PermGroup const &g, Perm const &rep, std::size_t size_bound) {
  if (rep.degree() != g.degree())
    throw Error("class representative has the wrong degree");
  PermSet seen{rep};
  // Set nodes are stable, so the queue can point into the set.
  std::deque<Perm const *> queue{&*seen.begin()};
  while (!queue.empty()) {
    Perm const *x = queue.front();
    queue.pop_front();
    for (auto const &s : g.generators()) {
      auto [it, inserted] = seen.insert(x->conjugate_by(s));
      if (!inserted)
        continue;
      if (seen.size() > size_bound)
        throw BoundExceeded("conjugacy class exceeds the bound of " +
                            std::to_string(size_bound) + " elements");
      queue.push_back(&*it);
    }
  }
  return seen;
}

std::size_t conjugacy_class_size(PermGroup const &g, Perm const &rep, std::size_t size_bound) {
  return conjugacy_class_orbit(g, rep, size_bound).size();
}

} // namespace trigen
