#include "trigen/character_table.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

std::vector<std::string> split_ws(std::string const &s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;)
    out.push_back(w);
  return out;
}

Integer parse_positive(std::string const &word, std::size_t line) {
  Integer v;
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos ||
      v.set_str(word, 10) != 0 || v <= 0)
    throw ParseError("expected a positive integer, got '" + word + "'", line);
  return v;
}

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

} // namespace

std::size_t CharacterTable::class_index(std::string_view name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name)
      return i;
  throw UnknownClass("group " + group_name + " has no class '" + std::string(name) + "'");
}

Integer CharacterTable::class_size(std::size_t i) const {
  return group_order / classes.at(i).centralizer_order;
}

Integer CharacterTable::degree(std::size_t i) const {
  Cyclotomic const &d = irreducibles.at(i).at(0);
  if (!d.is_rational() || d.to_rational().get_den() != 1 || d.to_rational() <= 0)
    throw NotIntegral("degree of character " + std::to_string(i + 1) + " of " + group_name +
                      " is " + d.to_string());
  return d.to_rational().get_num();
}

std::size_t CharacterTable::power(std::size_t cls, long k) const {
  long m = classes.at(cls).element_order;
  long e = ((k % m) + m) % m;
  if (e == 0)
    return 0;
  std::size_t cur = cls;
  for (long p = 2; e > 1; ++p) {
    while (e % p == 0) {
      auto const &pm = classes[cur].power_maps;
      auto it = pm.find(static_cast<unsigned>(p));
      if (it == pm.end())
        throw Error("table " + group_name + " has no " + std::to_string(p) +
                    "-power map for class " + classes[cur].name);
      cur = it->second;
      e /= p;
    }
  }
  return cur;
}

std::size_t CharacterTable::inverse_class(std::size_t cls) const {
  return power(cls, static_cast<long>(element_order(cls)) - 1);
}

std::vector<std::size_t> CharacterTable::galois_family(std::size_t cls) const {
  unsigned m = element_order(cls);
  std::set<std::size_t> fam{cls};
  for (unsigned j = 2; j < m; ++j)
    if (std::gcd(j, m) == 1)
      fam.insert(power(cls, j));
  return {fam.begin(), fam.end()};
}

std::string CharacterTable::serialize() const {
  std::ostringstream os;
  os << "group " << group_name << '\n';
  os << "order " << group_order.get_str() << '\n';
  os << "soluble " << (soluble ? "true" : "false") << '\n';
  os << "classes";
  for (auto const &c : classes)
    os << ' ' << c.name;
  os << "\norders";
  for (auto const &c : classes)
    os << ' ' << c.element_order;
  os << "\ncentralizers";
  for (auto const &c : classes)
    os << ' ' << c.centralizer_order.get_str();
  os << '\n';
  if (!classes.empty())
    for (auto const &[p, unused] : classes[0].power_maps) {
      os << "powermap " << p << ':';
      for (auto const &c : classes)
        os << ' ' << classes[c.power_maps.at(p)].name;
      os << '\n';
    }
  for (auto const &row : irreducibles) {
    os << "char";
    for (auto const &v : row)
      os << ' ' << v.to_string();
    os << '\n';
  }
  return os.str();
}

CharacterTable parse_table(std::istream &in) {
  std::vector<Line> lines;
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto words = split_ws(raw);
    if (words.empty())
      continue;
    auto kw_end = raw.find(words[0]) + words[0].size();
    lines.push_back({n, words[0], raw.substr(kw_end)});
  }

  CharacterTable t;
  bool have_name = false, have_order = false, have_soluble = false;
  std::size_t classes_line = 0;
  std::vector<Line const *> orders, centralizers, powermaps, chars;
  std::size_t last_line = lines.empty() ? 0 : lines.back().number;

  for (auto const &l : lines) {
    auto words = split_ws(l.rest);
    if (l.keyword == "group") {
      if (words.empty())
        throw ParseError("group needs a name", l.number);
      t.group_name = words[0];
      have_name = true;
    } else if (l.keyword == "order") {
      if (words.size() != 1)
        throw ParseError("order takes one integer", l.number);
      t.group_order = parse_positive(words[0], l.number);
      have_order = true;
    } else if (l.keyword == "soluble") {
      if (words.size() != 1 || (words[0] != "true" && words[0] != "false"))
        throw ParseError("soluble takes true or false", l.number);
      t.soluble = words[0] == "true";
      have_soluble = true;
    } else if (l.keyword == "classes") {
      if (classes_line)
        throw ParseError("classes given twice", l.number);
      classes_line = l.number;
      std::set<std::string> seen;
      for (auto const &w : words) {
        if (!seen.insert(w).second)
          throw ParseError("duplicate class name '" + w + "'", l.number);
        t.classes.push_back({w, 1, Integer(0), {}});
      }
      if (t.classes.empty())
        throw ParseError("no classes", l.number);
    } else if (l.keyword == "orders") {
      orders.push_back(&l);
    } else if (l.keyword == "centralizers") {
      centralizers.push_back(&l);
    } else if (l.keyword == "powermap") {
      powermaps.push_back(&l);
    } else if (l.keyword == "char") {
      chars.push_back(&l);
    } else {
      throw ParseError("unknown keyword '" + l.keyword + "'", l.number);
    }
  }

  if (!have_name)
    throw ParseError("missing 'group' line", last_line);
  if (!have_order)
    throw ParseError("missing 'order' line", last_line);
  if (!have_soluble)
    throw ParseError("missing 'soluble' line", last_line);
  if (!classes_line)
    throw ParseError("missing 'classes' line", last_line);
  if (orders.size() != 1)
    throw ParseError("expected exactly one 'orders' line", last_line);
  if (centralizers.size() != 1)
    throw ParseError("expected exactly one 'centralizers' line", last_line);

  std::size_t k = t.classes.size();
  auto row_of = [&](Line const &l) {
    auto words = split_ws(l.rest);
    if (words.size() != k)
      throw DimensionMismatch("line " + std::to_string(l.number) + ": " + l.keyword + " has " +
                              std::to_string(words.size()) + " entries for " +
                              std::to_string(k) + " classes");
    return words;
  };

  auto ow = row_of(*orders[0]);
  auto cw = row_of(*centralizers[0]);
  for (std::size_t j = 0; j < k; ++j) {
    Integer o = parse_positive(ow[j], orders[0]->number);
    if (!o.fits_uint_p())
      throw ParseError("element order too large", orders[0]->number);
    if (t.group_order % o != 0)
      throw ParseError("element order " + ow[j] + " does not divide the group order",
                       orders[0]->number);
    t.classes[j].element_order = static_cast<unsigned>(o.get_ui());
    Integer c = parse_positive(cw[j], centralizers[0]->number);
    if (t.group_order % c != 0)
      throw ParseError("centralizer order " + cw[j] + " does not divide the group order",
                       centralizers[0]->number);
    t.classes[j].centralizer_order = c;
  }
  if (t.classes[0].element_order != 1 || t.classes[0].centralizer_order != t.group_order)
    throw ParseError("the identity class must come first", orders[0]->number);

  for (auto const *l : powermaps) {
    auto colon = l->rest.find(':');
    if (colon == std::string::npos)
      throw ParseError("powermap needs '<p>:'", l->number);
    auto pw = split_ws(l->rest.substr(0, colon));
    if (pw.size() != 1)
      throw ParseError("powermap needs one prime", l->number);
    Integer p = parse_positive(pw[0], l->number);
    if (!p.fits_uint_p() || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0)
      throw ParseError("powermap exponent " + pw[0] + " is not prime", l->number);
    unsigned prime = static_cast<unsigned>(p.get_ui());
    Line rest{l->number, "powermap", l->rest.substr(colon + 1)};
    auto names = row_of(rest);
    for (std::size_t j = 0; j < k; ++j) {
      if (t.classes[j].power_maps.count(prime))
        throw ParseError("powermap " + pw[0] + " given twice", l->number);
      std::size_t img;
      try {
        img = t.class_index(names[j]);
      } catch (UnknownClass const &) {
        throw ParseError("powermap names unknown class '" + names[j] + "'", l->number);
      }
      t.classes[j].power_maps[prime] = img;
    }
  }

  if (chars.size() != k)
    throw DimensionMismatch("table " + t.group_name + " has " + std::to_string(chars.size()) +
                            " characters for " + std::to_string(k) + " classes");
  for (auto const *l : chars) {
    auto words = row_of(*l);
    std::vector<Cyclotomic> row;
    row.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      try {
        row.push_back(parse_cyclotomic(words[j], t.classes[j].element_order));
      } catch (ParseError const &e) {
        throw ParseError(std::string(e.what()) + " in class " + t.classes[j].name, l->number);
      }
    }
    t.irreducibles.push_back(std::move(row));
  }
  return t;
}

CharacterTable parse_table(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_table(is);
}

CharacterTable load_table(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open table file " + path);
  return parse_table(in);
}

std::vector<Diagnostic> lint_table(CharacterTable const &t) {
  std::vector<Diagnostic> out;
  std::size_t k = t.class_count();
  auto report = [&](std::string check, std::string msg) {
    out.push_back({std::move(check), std::move(msg)});
  };

  if (t.irreducibles.size() != k) {
    report("square", std::to_string(t.irreducibles.size()) + " characters for " +
                         std::to_string(k) + " classes");
    return out;
  }

  Integer total;
  for (std::size_t j = 0; j < k; ++j)
    total += t.class_size(j);
  if (total != t.group_order)
    report("class-sizes", "class sizes sum to " + total.get_str() + ", not |G| = " +
                              t.group_order.get_str());

  Integer degree_squares;
  bool degrees_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    try {
      Integer d = t.degree(i);
      degree_squares += d * d;
    } catch (NotIntegral const &e) {
      report("degree", e.what());
      degrees_ok = false;
    }
  }
  if (degrees_ok && degree_squares != t.group_order)
    report("degree-sum", "sum of squared degrees is " + degree_squares.get_str() +
                             ", not |G| = " + t.group_order.get_str());

  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      conj[i][j] = t.irreducibles[i][j].conjugate();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = i; l < k; ++l) {
      Cyclotomic sum;
      for (std::size_t j = 0; j < k; ++j)
        sum += t.irreducibles[i][j] * conj[l][j] * Cyclotomic(Rational(t.class_size(j)));
      Cyclotomic want = i == l ? Cyclotomic(Rational(t.group_order)) : Cyclotomic(0);
      if (sum != want)
        report("row-orthogonality", "characters " + std::to_string(i + 1) + " and " +
                                        std::to_string(l + 1) + ": inner product " +
                                        sum.to_string() + ", expected " + want.to_string());
    }

  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = j; m < k; ++m) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < k; ++i)
        sum += t.irreducibles[i][j] * conj[i][m];
      Cyclotomic want =
          j == m ? Cyclotomic(Rational(t.classes[j].centralizer_order)) : Cyclotomic(0);
      if (sum != want)
        report("column-orthogonality", "classes " + t.classes[j].name + " and " +
                                           t.classes[m].name + ": sum " + sum.to_string() +
                                           ", expected " + want.to_string());
    }

  for (std::size_t j = 0; j < k; ++j) {
    unsigned o = t.classes[j].element_order;
    for (auto const &[p, img] : t.classes[j].power_maps) {
      unsigned want = o / std::gcd(o, p);
      if (t.classes[img].element_order != want) {
        report("power-map", t.classes[j].name + "^" + std::to_string(p) + " = " +
                                t.classes[img].name + " has order " +
                                std::to_string(t.classes[img].element_order) + ", expected " +
                                std::to_string(want));
        continue;
      }
      if (o % p == 0)
        continue;
      // chi(g^p) is chi(g) under zeta -> zeta^p when p is coprime to o(g).
      for (std::size_t i = 0; i < k; ++i) {
        if (t.irreducibles[i][img] != t.irreducibles[i][j].galois(o, p))
          report("power-map", "character " + std::to_string(i + 1) + " on " +
                                  t.classes[img].name + " is not the Galois image of its value on " +
                                  t.classes[j].name + " under E(" + std::to_string(o) + ") -> E(" +
                                  std::to_string(o) + ")^" + std::to_string(p));
      }
    }
  }
  return out;
}

} // namespace trigen
