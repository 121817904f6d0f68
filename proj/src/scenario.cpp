#include "trigen/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

namespace fs = std::filesystem;

struct Entry {
  std::string value;
  std::size_t line;
};

struct Section {
  std::string kind;
  std::size_t line;
  std::map<std::string, Entry> keys;

  Entry const *find(std::string const &k) const {
    auto it = keys.find(k);
    return it == keys.end() ? nullptr : &it->second;
  }
  Entry const &need(std::string const &k) const {
    if (auto e = find(k))
      return *e;
    throw ParseError("[" + kind + "] needs " + k + "=", line);
  }
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string const &s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (auto t = trim(item); !t.empty())
      out.push_back(t);
  return out;
}

std::vector<Section> read_sections(std::istream &in) {
  static const std::map<std::string, std::vector<std::string>> allowed{
      {"group", {"table", "gens"}},
      {"tuple", {"classes"}},
      {"subgroup", {"name", "order", "soluble", "table", "fusion", "copies"}},
      {"ree", {"action", "classes"}},
      {"external", {"ref", "classes"}},
  };
  std::vector<Section> out;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("unterminated section header", no);
      auto kind = trim(line.substr(1, line.size() - 2));
      if (!allowed.count(kind))
        throw ParseError("unknown section [" + kind + "]", no);
      out.push_back({kind, no, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value", no);
    if (out.empty())
      throw ParseError("key outside any section", no);
    auto key = trim(line.substr(0, eq));
    auto const &keys = allowed.at(out.back().kind);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError("unknown key " + key + " in [" + out.back().kind + "]", no);
    if (!out.back().keys.emplace(key, Entry{trim(line.substr(eq + 1)), no}).second)
      throw ParseError("duplicate key " + key, no);
  }
  return out;
}

bool parse_bool(Entry const &e) {
  if (e.value == "true")
    return true;
  if (e.value == "false")
    return false;
  throw ParseError("expected true or false, got '" + e.value + "'", e.line);
}

std::uint64_t parse_count(std::string const &s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer, got '" + s + "'", line);
  return std::stoull(s);
}

class Loader {
public:
  explicit Loader(fs::path base) : base_(std::move(base)) {}

  fs::path resolve(std::string const &p) const { return base_ / p; }

  std::shared_ptr<CharacterTable const> table(Entry const &e) {
    auto path = resolve(e.value);
    auto key = path.lexically_normal().string();
    if (auto it = tables_.find(key); it != tables_.end())
      return it->second;
    if (!fs::exists(path))
      throw ParseError("no such table file " + path.string(), e.line);
    auto t = std::make_shared<CharacterTable const>(load_table(path.string()));
    auto diags = lint_table(*t);
    if (!diags.empty())
      throw Error(path.string() + " fails lint: " + diags.front().check + ": " +
                  diags.front().message);
    tables_.emplace(key, t);
    return t;
  }

  std::shared_ptr<PermGroup const> group(std::string const &rel, std::size_t line) {
    auto path = resolve(rel);
    auto key = path.lexically_normal().string();
    if (auto it = groups_.find(key); it != groups_.end())
      return it->second;
    if (!fs::exists(path))
      throw ParseError("no such permutation file " + path.string(), line);
    auto g = std::make_shared<PermGroup const>(load_prm(path.string()));
    groups_.emplace(key, g);
    return g;
  }

private:
  fs::path base_;
  std::map<std::string, std::shared_ptr<CharacterTable const>> tables_;
  std::map<std::string, std::shared_ptr<PermGroup const>> groups_;
};

std::vector<std::string> fusion_labels(Entry const &e, Loader const &loader) {
  if (e.value.find(',') == std::string::npos) {
    auto path = loader.resolve(e.value);
    if (fs::exists(path)) {
      std::ifstream in(path);
      std::string text, raw;
      while (std::getline(in, raw))
        text += raw.substr(0, raw.find('#')) + ",";
      for (auto &ch : text)
        if (ch == ' ' || ch == '\t' || ch == '\n')
          ch = ',';
      return split_list(text);
    }
  }
  return split_list(e.value);
}

SubgroupRecord subgroup(Section const &s, CharacterTable const &g, Loader &loader) {
  SubgroupRecord h;
  h.name = s.need("name").value;
  if (auto e = s.find("table"))
    h.table = loader.table(*e);
  if (auto e = s.find("order")) {
    try {
      h.order = Integer(e->value);
    } catch (std::invalid_argument const &) {
      throw ParseError("bad order '" + e->value + "'", e->line);
    }
    if (h.order <= 0)
      throw ParseError("order must be positive", e->line);
  } else if (h.table) {
    h.order = h.table->group_order;
  } else {
    throw ParseError("[subgroup] needs order= or table=", s.line);
  }
  if (auto e = s.find("soluble")) {
    h.soluble = parse_bool(*e);
    if (h.table && h.table->soluble != h.soluble)
      throw ParseError(h.name + ": soluble flag disagrees with its table", e->line);
  } else if (h.table) {
    h.soluble = h.table->soluble;
  } else {
    throw ParseError("[subgroup] needs soluble= or table=", s.line);
  }
  if (h.table && h.table->group_order != h.order)
    throw ParseError(h.name + ": order disagrees with its table", s.line);
  if (g.group_order % h.order != 0)
    throw ParseError(h.name + ": order does not divide |G|", s.line);

  if (auto e = s.find("fusion")) {
    if (!h.table)
      throw ParseError(h.name + ": fusion= needs table=", e->line);
    try {
      h.fusion = FusionMap::from_names(*h.table, g, fusion_labels(*e, loader));
    } catch (UnknownClass const &) {
      throw;
    } catch (Error const &x) {
      throw ParseError(h.name + ": " + x.what(), e->line);
    }
  }
  if (auto e = s.find("copies")) {
    for (auto const &item : split_list(e->value)) {
      CopiesSource src;
      src.label = item;
      if (item == "fusion") {
        if (!s.find("fusion"))
          throw ParseError(h.name + ": copies=fusion needs fusion=", e->line);
        src.kind = CopiesSource::Kind::Fusion;
      } else if (item.rfind("action:", 0) == 0) {
        src.kind = CopiesSource::Kind::Action;
        src.action = loader.group(item.substr(7), e->line);
      } else if (auto colon = item.find(':'); colon != std::string::npos) {
        src.target = item.substr(0, colon);
        g.class_index(*src.target);
        src.value = parse_count(item.substr(colon + 1), e->line);
      } else {
        src.value = parse_count(item, e->line);
      }
      h.copies.push_back(std::move(src));
    }
  }
  return h;
}

} // namespace

Scenario parse_scenario(std::istream &in, fs::path const &base_dir, std::string name) {
  auto sections = read_sections(in);
  Loader loader(base_dir);
  Scenario sc;
  sc.name = std::move(name);

  Section const *group = nullptr;
  for (auto const &s : sections)
    if (s.kind == "group") {
      if (group)
        throw ParseError("second [group] section", s.line);
      group = &s;
    }
  if (!group) {
    for (auto const &s : sections)
      throw ParseError("[" + s.kind + "] without a [group] section", s.line);
    return sc;
  }
  sc.table = loader.table(group->need("table"));
  if (auto e = group->find("gens")) {
    sc.gens = loader.group(e->value, e->line);
    sc.gens_path = loader.resolve(e->value);
  }
  auto const &g = *sc.table;

  std::vector<SubgroupRecord> subgroups;
  for (auto const &s : sections)
    if (s.kind == "subgroup")
      subgroups.push_back(subgroup(s, g, loader));

  for (auto const &s : sections)
    if (s.kind == "tuple") {
      auto const &e = s.need("classes");
      auto names = split_list(e.value);
      if (names.size() != 3 && names.size() != 4)
        throw ParseError("a tuple has 3 or 4 classes", e.line);
      sc.questions.push_back({sc.table, ClassTuple::from_names(g, names), subgroups, nullptr, {}});
    }

  // Sections that attach to tuples, by class list or to all of them.
  auto targets = [&](Section const &s) {
    std::vector<Question *> out;
    auto e = s.find("classes");
    std::optional<ClassTuple> want;
    if (e)
      want = ClassTuple::from_names(g, split_list(e->value));
    for (auto &q : sc.questions)
      if (!want || q.tuple.entries() == want->entries())
        out.push_back(&q);
    if (e && out.empty())
      throw ParseError("classes=" + e->value + " matches no [tuple]", e->line);
    return out;
  };
  for (auto const &s : sections) {
    if (s.kind == "ree") {
      auto action = loader.group(s.need("action").value, s.need("action").line);
      for (auto *q : targets(s))
        q->ree_action = action;
    } else if (s.kind == "external") {
      auto ref = s.need("ref").value;
      for (auto *q : targets(s))
        q->external.push_back(ref);
    }
  }
  return sc;
}

Scenario load_scenario(fs::path const &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  return parse_scenario(in, path.parent_path(), path.stem().string());
}

} // namespace trigen
