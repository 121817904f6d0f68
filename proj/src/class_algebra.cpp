#include "trigen/class_algebra.hpp"

#include <sstream>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

void check_index(CharacterTable const &t, std::size_t c) {
  if (c >= t.class_count())
    throw UnknownClass("class index " + std::to_string(c) + " out of range for " + t.group_name);
}

Integer to_count(Cyclotomic const &v, CharacterTable const &t, std::string const &what) {
  if (!v.is_rational())
    throw NotIntegral(what + " in " + t.group_name + " evaluated to irrational " + v.to_string());
  Rational q = v.to_rational();
  if (q.get_den() != 1 || q < 0)
    throw NotIntegral(what + " in " + t.group_name + " evaluated to " + q.get_str());
  return q.get_num();
}

std::string names(CharacterTable const &t, std::initializer_list<std::size_t> cs) {
  std::string s = "(";
  for (auto c : cs) {
    if (s.size() > 1)
      s += ',';
    s += t.class_name(c);
  }
  return s + ")";
}

} // namespace

ClassTuple::ClassTuple(CharacterTable const &table, std::vector<std::size_t> entries)
    : table_(&table), entries_(std::move(entries)) {
  if (entries_.size() != 3 && entries_.size() != 4)
    throw DimensionMismatch("a class tuple has 3 or 4 entries, got " +
                            std::to_string(entries_.size()));
  for (auto c : entries_)
    check_index(table, c);
}

ClassTuple ClassTuple::from_names(CharacterTable const &table,
                                  std::vector<std::string> const &labels) {
  std::vector<std::size_t> idx;
  for (auto const &n : labels)
    idx.push_back(table.class_index(n));
  return ClassTuple(table, std::move(idx));
}

std::string ClassTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      s += ',';
    s += table_->class_name(entries_[i]);
  }
  return s + ")";
}

Integer xi3(CharacterTable const &t, std::size_t c1, std::size_t c2, std::size_t c3) {
  for (auto c : {c1, c2, c3})
    check_index(t, c);
  Cyclotomic sum;
  for (std::size_t i = 0; i < t.class_count(); ++i) {
    auto const &chi = t.irreducibles[i];
    if (chi[c1].is_zero() || chi[c2].is_zero() || chi[c3].is_zero())
      continue;
    Cyclotomic term = chi[c1] * chi[c2] * chi[c3].conjugate();
    sum += term * Cyclotomic(Rational(1) / Rational(t.degree(i)));
  }
  Rational scale = Rational(t.class_size(c1) * t.class_size(c2)) / Rational(t.group_order);
  return to_count(sum * Cyclotomic(scale), t, "xi" + names(t, {c1, c2, c3}));
}

Integer xi4(CharacterTable const &t, std::size_t c1, std::size_t c2, std::size_t c3,
            std::size_t c4) {
  for (auto c : {c1, c2, c3, c4})
    check_index(t, c);
  Cyclotomic sum;
  for (std::size_t i = 0; i < t.class_count(); ++i) {
    auto const &chi = t.irreducibles[i];
    if (chi[c1].is_zero() || chi[c2].is_zero() || chi[c3].is_zero() || chi[c4].is_zero())
      continue;
    Integer d = t.degree(i);
    Cyclotomic term = chi[c1] * chi[c2] * chi[c3] * chi[c4].conjugate();
    sum += term * Cyclotomic(Rational(1) / Rational(d * d));
  }
  Rational scale = Rational(t.class_size(c1) * t.class_size(c2) * t.class_size(c3)) /
                   Rational(t.group_order);
  return to_count(sum * Cyclotomic(scale), t, "xi" + names(t, {c1, c2, c3, c4}));
}

Integer xi(ClassTuple const &tuple) {
  auto const &e = tuple.entries();
  if (e.size() == 3)
    return xi3(tuple.table(), e[0], e[1], e[2]);
  return xi4(tuple.table(), e[0], e[1], e[2], e[3]);
}

FusionMap::FusionMap(CharacterTable const &sub, CharacterTable const &super,
                     std::vector<std::size_t> map)
    : sub_(&sub), super_(&super), map_(std::move(map)) {
  if (map_.size() != sub.class_count())
    throw DimensionMismatch("fusion " + sub.group_name + " -> " + super.group_name + " has " +
                            std::to_string(map_.size()) + " entries for " +
                            std::to_string(sub.class_count()) + " classes");
  for (std::size_t h = 0; h < map_.size(); ++h) {
    check_index(super, map_[h]);
    if (sub.element_order(h) != super.element_order(map_[h]))
      throw Error("fusion " + sub.group_name + " -> " + super.group_name + " sends " +
                  sub.class_name(h) + " to " + super.class_name(map_[h]) +
                  ", which has a different element order");
  }
  if (map_[0] != 0)
    throw Error("fusion " + sub.group_name + " -> " + super.group_name +
                " does not send the identity to the identity");
}

FusionMap FusionMap::from_names(CharacterTable const &sub, CharacterTable const &super,
                                std::vector<std::string> const &labels) {
  std::vector<std::size_t> idx;
  for (auto const &n : labels)
    idx.push_back(super.class_index(n));
  return FusionMap(sub, super, std::move(idx));
}

std::vector<std::size_t> FusionMap::preimages(std::size_t g_class) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < map_.size(); ++h)
    if (map_[h] == g_class)
      out.push_back(h);
  return out;
}

Integer sigma_h(FusionMap const &f, ClassTuple const &g_classes, std::size_t target_in_h) {
  if (&g_classes.table() != &f.super() && g_classes.table().group_name != f.super().group_name)
    throw Error("class tuple is not over the fusion's group " + f.super().group_name);
  check_index(f.sub(), target_in_h);
  if (f(target_in_h) != g_classes.target())
    throw Error("subgroup class " + f.sub().class_name(target_in_h) + " fuses to " +
                f.super().class_name(f(target_in_h)) + ", not to the target class " +
                f.super().class_name(g_classes.target()));

  auto const &e = g_classes.entries();
  auto const &h = f.sub();
  auto d1 = f.preimages(e[0]);
  auto d2 = f.preimages(e[1]);
  Integer total;
  if (e.size() == 3) {
    for (auto a : d1)
      for (auto b : d2)
        total += xi3(h, a, b, target_in_h);
    return total;
  }
  auto d3 = f.preimages(e[2]);
  for (auto a : d1)
    for (auto b : d2)
      for (auto c : d3)
        total += xi4(h, a, b, c, target_in_h);
  return total;
}

} // namespace trigen
