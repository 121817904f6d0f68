#include "trigen/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

bool needs_escape(char c) {
  return c == '%' || c == ' ' || c == '=' || static_cast<unsigned char>(c) < 0x20 || c == 0x7f;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (needs_escape(c)) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", static_cast<unsigned char>(c));
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

int hex(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  return -1;
}

std::string unescape(std::string_view s, std::size_t offset) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (i + 2 >= s.size() || hex(s[i + 1]) < 0 || hex(s[i + 2]) < 0)
      throw ParseError("bad escape", offset + i + 1);
    out += static_cast<char>(hex(s[i + 1]) * 16 + hex(s[i + 2]));
    i += 2;
  }
  return out;
}

std::string join(std::vector<std::string> const &v, char const *sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

std::string tuple_key(ClassTuple const &t) {
  std::vector<std::string> names;
  for (auto e : t.entries())
    names.push_back(t.table().class_name(e));
  return join(names, ",");
}

std::string verdict_string(Verdict const &v) {
  return std::string(to_string(v.conclusion)) + "(" + std::string(to_string(v.reason)) + ")";
}

} // namespace

Record &Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::optional<std::string> Record::get(std::string_view key) const {
  for (auto const &[k, v] : fields)
    if (k == key)
      return v;
  return std::nullopt;
}

std::string format_record(Record const &r) {
  std::string out;
  for (auto const &[k, v] : r.fields) {
    if (!out.empty())
      out += ' ';
    out += k + "=" + escape(v);
  }
  return out;
}

Record parse_record(std::string_view line) {
  Record r;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    auto end = line.find(' ', i);
    if (end == std::string_view::npos)
      end = line.size();
    auto field = line.substr(i, end - i);
    auto eq = field.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("expected key=value", i + 1);
    auto key = field.substr(0, eq);
    if (std::any_of(key.begin(), key.end(), needs_escape))
      throw ParseError("bad key", i + 1);
    r.add(std::string(key), unescape(field.substr(eq + 1), i + eq + 1));
    i = end;
  }
  return r;
}

std::vector<Record> parse_records(std::istream &in) {
  std::vector<Record> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(' ') == std::string::npos)
      continue;
    try {
      out.push_back(parse_record(line));
    } catch (ParseError const &e) {
      throw ParseError(std::string("record: ") + e.what(), no);
    }
  }
  return out;
}

ReportRow analyze_question(std::string const &scenario, Question const &q) {
  return {scenario, tuple_key(q.tuple), decide(q), std::nullopt, std::nullopt, {}};
}

void attach_oracle(ReportRow &row, Question const &q, ClassIdentification const &id,
                   OracleOptions const &opts) {
  auto const &e = q.tuple.entries();
  if (e.size() != 3)
    return;
  row.oracle_xi = xi3_oracle(id, e[0], e[1], e[2], opts);
  row.oracle_xi_star = xi3_star_oracle(id, e[0], e[1], e[2], opts);
  auto const &v = row.verdict;
  if (Integer(static_cast<unsigned long>(*row.oracle_xi)) != v.xi)
    row.problems.push_back("oracle xi " + std::to_string(*row.oracle_xi) + " differs from " +
                           v.xi.get_str());
  Integer star(static_cast<unsigned long>(*row.oracle_xi_star));
  if (v.ledger && v.ledger->complete && star < v.ledger->lower_bound)
    row.problems.push_back("oracle xi* is below the ledger bound");
  if (v.conclusion == Conclusion::Generated && star == 0)
    row.problems.push_back("Generated but the oracle finds no generating pair");
  if (v.conclusion == Conclusion::NotGenerated && star != 0)
    row.problems.push_back("NotGenerated but the oracle finds generating pairs");
}

std::vector<Record> row_records(ReportRow const &row) {
  auto const &v = row.verdict;
  std::vector<Record> out;
  Record r;
  r.add("record", "row").add("scenario", row.scenario).add("tuple", row.tuple);
  r.add("xi", v.xi.get_str());
  if (v.ledger) {
    Integer sum = v.ledger->xi_total - v.ledger->lower_bound;
    r.add("contributions", sum.get_str());
    r.add("bound", v.ledger->lower_bound.get_str());
    r.add("complete", v.ledger->complete ? "yes" : "no");
  }
  if (v.triangle) {
    r.add("triangle", std::string(to_string(v.triangle->kind)));
    if (v.triangle->kind == TriangleKind::Finite)
      r.add("triangle_group", v.triangle->group + ":" + std::to_string(v.triangle->order));
  }
  if (v.ree) {
    r.add("ree_total", std::to_string(v.ree->total));
    r.add("ree_bound", std::to_string(v.ree->bound));
    r.add("ree", v.ree->violated ? "violated" : "satisfied");
  }
  if (row.oracle_xi)
    r.add("oracle_xi", std::to_string(*row.oracle_xi));
  if (row.oracle_xi_star)
    r.add("oracle_xi_star", std::to_string(*row.oracle_xi_star));
  r.add("conclusion", std::string(to_string(v.conclusion)));
  r.add("reason", std::string(to_string(v.reason)));
  out.push_back(std::move(r));

  if (v.ledger)
    for (auto const &e : v.ledger->entries) {
      Record c;
      c.add("record", "contribution").add("scenario", row.scenario).add("tuple", row.tuple);
      c.add("subgroup", e.subgroup).add("pruned", std::string(to_string(e.pruned)));
      if (e.sigma)
        c.add("sigma", e.sigma->get_str());
      if (e.copies)
        c.add("copies", std::to_string(*e.copies));
      c.add("product", e.product.get_str());
      if (!e.missing.empty())
        c.add("missing", e.missing);
      out.push_back(std::move(c));
    }
  for (auto const &n : v.notes)
    out.push_back(Record{}.add("record", "note").add("scenario", row.scenario).add("tuple", row.tuple).add("text", n));
  for (auto const &p : row.problems)
    out.push_back(Record{}.add("record", "problem").add("scenario", row.scenario).add("tuple", row.tuple).add("text", p));
  return out;
}

std::string row_text(ReportRow const &row) {
  auto const &v = row.verdict;
  std::ostringstream os;
  os << "(" << row.tuple << ")  xi = " << v.xi;
  if (v.ledger && v.ledger->complete && v.ledger->lower_bound != v.xi)
    os << "  bound = " << v.ledger->lower_bound;
  if (row.oracle_xi)
    os << "  oracle xi = " << *row.oracle_xi << ", xi* = " << *row.oracle_xi_star;
  os << "  ->  " << verdict_string(v) << "\n";
  if (v.triangle && v.triangle->kind == TriangleKind::Finite)
    os << "    triangle group finite: " << v.triangle->group << " of order " << v.triangle->order
       << "\n";
  if (v.ree) {
    std::vector<std::string> types;
    for (auto const &t : v.ree->types)
      types.push_back(t.to_string());
    os << "    Ree: " << join(types, " / ") << ": " << v.ree->total
       << (v.ree->violated ? " > " : " <= ") << v.ree->bound << "\n";
  }
  if (v.ledger)
    for (auto const &e : v.ledger->entries) {
      os << "    " << e.subgroup << ": ";
      if (e.pruned != Pruning::None)
        os << "pruned (" << (e.pruned == Pruning::Soluble ? "soluble" : "order") << ")";
      else if (!e.missing.empty())
        os << e.missing;
      else
        os << "sigma " << *e.sigma << " x " << (e.copies ? std::to_string(*e.copies) : "-")
           << " copies = " << e.product;
      os << "\n";
    }
  for (auto const &n : v.notes)
    os << "    note: " << n << "\n";
  for (auto const &p : row.problems)
    os << "    PROBLEM: " << p << "\n";
  return os.str();
}

namespace {

struct Reference {
  long value;
  char const *classes;
};

// Reference structure constants.
const std::vector<Reference> kJ1Table{
    {49, "2A,3A,7A"},    {55, "2A,3A,11A"},  {38, "2A,3A,19A"},  {49, "2A,5A,7A"},
    {44, "2A,5A,11A"},   {57, "2A,5A,19A"},  {209, "2A,7A,11A"}, {209, "2A,7A,19A"},
    {133, "2A,11A,19A"}, {189, "3A,5A,7A"},  {198, "3A,5A,11A"}, {171, "3A,5A,19A"},
    {858, "3A,7A,11A"},  {836, "3A,7A,19A"}, {494, "3A,11A,19A"}, {858, "5A,7A,11A"},
    {836, "5A,7A,19A"},  {513, "5A,11A,19A"}, {2299, "7A,11A,19A"}};

const std::vector<Reference> kJ2Table{
    {0, "2A,3A,7A"},  {7, "2A,3B,7A"},  {0, "2B,3A,7A"},  {70, "2B,3B,7A"},
    {0, "2A,5A,7A"},  {7, "2A,5C,7A"},  {7, "2B,5A,7A"},  {49, "2B,5C,7A"},
    {0, "3A,5A,7A"},  {14, "3A,5C,7A"}, {56, "3B,5A,7A"}, {343, "3B,5C,7A"}};

std::vector<std::string> split(std::string const &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string x;
  while (std::getline(in, x, ','))
    out.push_back(x);
  return out;
}

// Value of f() as a string, or the error it raised; a broken data file is
// report content, not a reason to stop.
template <class F> std::string attempt(F f) {
  try {
    return f();
  } catch (std::exception const &e) {
    return std::string("error: ") + e.what();
  }
}

class Builder {
public:
  Report report;

  void failure(std::string const &section, std::string const &message) {
    ++report.mismatches;
    report.records.push_back(
        Record{}.add("record", "error").add("section", section).add("text", message));
    report.text += "  ERROR: " + message + "\n";
  }

  template <class F> void section(std::string const &name, F f) {
    try {
      f();
    } catch (std::exception const &e) {
      failure(name, e.what());
    }
  }

  void heading(std::string const &h) { report.text += "\n" + h + "\n" + std::string(h.size(), '-') + "\n"; }

  void check(Record r, std::string const &what, std::string const &expected, std::string const &got,
             std::string const &known = "") {
    bool ok = expected == got;
    std::string status = ok ? "ok" : known.empty() ? "MISMATCH" : "known";
    if (!ok && known.empty())
      ++report.mismatches;
    r.add("expected", expected).add("computed", got).add("status", status);
    if (!known.empty())
      r.add("annotation", known);
    report.records.push_back(std::move(r));
    std::ostringstream os;
    os << "  " << std::left << std::setw(34) << what << std::right << std::setw(8) << got;
    if (!ok)
      os << "   expected " << expected << (known.empty() ? "  MISMATCH" : "  (known)");
    report.text += os.str() + "\n";
    if (!known.empty())
      report.text += "    note: " + known + "\n";
  }
};

using Tables = std::map<std::string, std::optional<CharacterTable>>;

void table_rows(Builder &b, CharacterTable const &t, std::string const &kind,
                std::vector<Reference> const &rows) {
  b.heading("Structure constants of " + t.group_name);
  for (auto const &p : rows) {
    b.check(Record{}.add("record", kind).add("tuple", p.classes),
            "xi(" + std::string(p.classes) + ")", std::to_string(p.value),
            attempt([&] { return xi(ClassTuple::from_names(t, split(p.classes))).get_str(); }));
    if (kind == "j1-table" && std::string(p.classes) == "2A,5A,11A") {
      std::string known =
          "the table value is 44 while the generation argument for (2,5,11) quotes 55; "
          "the character table gives 44 and the bound 44 - 22 = 22 is still positive";
      b.report.records.push_back(
          Record{}.add("record", "note").add("tuple", p.classes).add("text", known));
      b.report.text += "    note: " + known + "\n";
    }
  }
}

void four_class(Builder &b, CharacterTable const &t, long expected) {
  b.check(Record{}.add("record", "four-class").add("group", t.group_name).add("tuple", "2A,2A,2A,11A"),
          "xi_" + t.group_name + "(2A,2A,2A,11A)", std::to_string(expected), attempt([&] {
            return xi(ClassTuple::from_names(t, {"2A", "2A", "2A", "11A"})).get_str();
          }));
}

std::string sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return join(v, " ");
}

void frobenius_columns(Builder &b, CharacterTable const &t) {
  for (auto const &[cls, c] : std::map<std::string, long>{{"1A", 110}, {"2A", 10}, {"11A", 11}})
    b.check(Record{}.add("record", "table1").add("class", cls).add("field", "centralizer"),
            "centralizer of " + cls, std::to_string(c),
            t.classes[t.class_index(cls)].centralizer_order.get_str());

  auto column = [&](std::string const &cls) {
    std::vector<std::string> v;
    for (auto const &chi : t.irreducibles)
      v.push_back(chi[t.class_index(cls)].to_string());
    return sorted(v);
  };
  // Printed columns as multisets: degrees 1^10 10; on 2A five each of
  // 1 and -1 and a 0; on 11A 1 throughout.
  std::vector<std::string> p1(10, "1"), p2{"0"}, p11(11, "1");
  p1.push_back("10");
  for (int i = 0; i < 5; ++i) {
    p2.push_back("1");
    p2.push_back("-1");
  }
  b.check(Record{}.add("record", "table1").add("class", "1A").add("field", "column"),
          "column 1A", sorted(p1), column("1A"));
  b.check(Record{}.add("record", "table1").add("class", "2A").add("field", "column"),
          "column 2A", sorted(p2), column("2A"));
  b.check(Record{}.add("record", "table1").add("class", "11A").add("field", "column"),
          "column 11A", sorted(p11), column("11A"),
          "the printed value 1 for the degree-10 character on 11A breaks column orthogonality "
          "with 1A (10 + 10 != 0); the bundled table carries -1, and the four-class value is 0 "
          "either way");
}

void l2_11_sigmas(Builder &b, std::filesystem::path const &scenario) {
  std::map<std::string, long> sigmas{{"2A,3A,11A", 11}, {"2A,5A,11A", 11}, {"3A,5A,11A", 22}};
  auto sc = load_scenario(scenario);
  for (auto const &q : sc.questions) {
    auto key = tuple_key(q.tuple);
    if (!sigmas.count(key))
      continue;
    for (auto const &e : build_ledger(q.tuple, q.subgroups).entries)
      if (e.subgroup == "L2(11)")
        b.check(Record{}.add("record", "sigma").add("subgroup", "L2(11)").add("tuple", key),
                "sigma_L2(11)(" + key + ")", std::to_string(sigmas[key]),
                e.sigma ? e.sigma->get_str() : "none");
  }
}

// Expected verdicts by tuple; an entry with a reason is compared in full.
void verdicts(Builder &b, std::filesystem::path const &scenario,
              std::map<std::string, std::string> const &expected, std::string const &fallback) {
  auto sc = load_scenario(scenario);
  for (auto const &q : sc.questions) {
    auto row = analyze_question(sc.name, q);
    auto it = expected.find(row.tuple);
    auto want = it == expected.end() ? fallback : it->second;
    auto got = want.find('(') == std::string::npos ? std::string(to_string(row.verdict.conclusion))
                                                   : verdict_string(row.verdict);
    b.check(Record{}.add("record", "verdict").add("scenario", sc.name).add("tuple", row.tuple),
            "(" + row.tuple + ")", want, got);
  }
}

} // namespace

Report reference_report(std::filesystem::path const &data_dir, std::filesystem::path const &scenario_dir) {
  Builder b;
  Tables tables;
  for (auto name : {"j1", "j2", "l2_11", "11_10"})
    b.section(name, [&] { tables[name] = load_table((data_dir / (std::string(name) + ".ctb")).string()); });
  auto with = [&](char const *name, auto f) {
    if (auto const &t = tables[name])
      f(*t);
  };

  with("j1", [&](CharacterTable const &t) { table_rows(b, t, "j1-table", kJ1Table); });
  with("j2", [&](CharacterTable const &t) { table_rows(b, t, "j2-table", kJ2Table); });

  b.heading("Four-class constants");
  with("j1", [&](CharacterTable const &t) { four_class(b, t, 17908); });
  with("l2_11", [&](CharacterTable const &t) { four_class(b, t, 242); });
  with("11_10", [&](CharacterTable const &t) { four_class(b, t, 0); });

  b.heading("Partial table of 11:10");
  with("11_10", [&](CharacterTable const &t) { b.section("table1", [&] { frobenius_columns(b, t); }); });

  b.heading("Subgroup counts in L2(11) via fusion");
  b.section("sigma", [&] { l2_11_sigmas(b, scenario_dir / "j1_all.scn"); });

  b.heading("Verdicts for J1, triples of distinct primes");
  b.section("j1_all", [&] {
    verdicts(b, scenario_dir / "j1_all.scn", {{"2A,3A,5A", "NotGenerated(TrianglesFinite)"}},
             "Generated");
  });
  b.heading("Verdict for J1, three involutions");
  b.section("j1_involutions",
            [&] { verdicts(b, scenario_dir / "j1_involutions.scn", {}, "Generated"); });
  b.heading("Verdicts for J2");
  b.section("j2_557", [&] {
    verdicts(b, scenario_dir / "j2_557.scn",
             {{"2A,3A,7A", "NotGenerated(ZeroStructureConstant)"},
              {"2A,3B,7A", "NotGenerated(ReeViolation)"},
              {"2B,3A,7A", "NotGenerated(ZeroStructureConstant)"},
              {"2A,5A,7A", "NotGenerated(ZeroStructureConstant)"},
              {"3A,5A,7A", "NotGenerated(ZeroStructureConstant)"}},
             "Generated");
  });

  b.report.records.push_back(
      Record{}.add("record", "summary").add("mismatches", std::to_string(b.report.mismatches)));
  b.report.text += "\n" + std::to_string(b.report.mismatches) + " unexpected mismatches\n";
  return b.report;
}

} // namespace trigen
