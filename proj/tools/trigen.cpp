// trigen: structure constants, generation verdicts and brute-force checks.
//
// Exit codes: 0 ok, 1 malformed input / lint failure / order mismatch /
// oracle disagreement, 2 unknown class label, 3 some verdict inconclusive,
// 4 class identification ambiguous.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigen/analysis.hpp"
#include "trigen/character_table.hpp"
#include "trigen/class_algebra.hpp"
#include "trigen/errors.hpp"
#include "trigen/manifest.hpp"
#include "trigen/oracle.hpp"
#include "trigen/perm.hpp"
#include "trigen/perm_group.hpp"
#include "trigen/report.hpp"
#include "trigen/scenario.hpp"

namespace fs = std::filesystem;
using namespace trigen;

namespace {

enum Exit { Ok = 0, Failure = 1, Unknown = 2, Inconclusive = 3, Ambiguous = 4 };

struct Globals {
  unsigned jobs = 0;
  std::string format = "text";
  bool timestamps = false;

  bool records() const { return format == "records"; }
};

std::vector<std::string> split(std::string const &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string x;
  while (std::getline(in, x, ','))
    if (!x.empty())
      out.push_back(x);
  return out;
}

void stamp(Globals const &g) {
  if (!g.timestamps || g.records())
    return;
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  std::cout << "# " << buf << "\n";
}

void emit(Record const &r) { std::cout << format_record(r) << "\n"; }

// Loads a table and refuses it unless it lints clean.
CharacterTable checked_table(std::string const &path) {
  auto t = load_table(path);
  auto diags = lint_table(t);
  if (!diags.empty()) {
    for (auto const &d : diags)
      std::cerr << path << ": " << d.check << ": " << d.message << "\n";
    throw Error(path + " fails lint");
  }
  return t;
}

std::vector<std::size_t> class_indices(CharacterTable const &t, std::string const &labels) {
  std::vector<std::size_t> out;
  for (auto const &l : split(labels))
    out.push_back(t.class_index(l));
  return out;
}

int cmd_xi(Globals const &g, std::string const &table, std::string const &classes) {
  auto t = checked_table(table);
  auto tuple = ClassTuple::from_names(t, split(classes));
  auto value = xi(tuple);
  stamp(g);
  if (g.records())
    emit(Record{}.add("record", "xi").add("group", t.group_name).add("tuple", classes).add("xi", value.get_str()));
  else
    std::cout << value << "\n";
  return Ok;
}

int cmd_analyze(Globals const &g, std::string const &path, bool with_oracle) {
  auto sc = load_scenario(path);
  std::optional<ClassIdentification> id;
  if (with_oracle && !sc.questions.empty()) {
    if (!sc.gens)
      throw Error(path + ": --with-oracle needs gens= in [group]");
    id.emplace(*sc.gens, *sc.table);
  }
  OracleOptions opts{g.jobs, std::nullopt};
  stamp(g);
  if (!g.records() && sc.table)
    std::cout << sc.name << ": " << sc.table->group_name << ", " << sc.questions.size()
              << " tuples\n";
  int code = Ok;
  bool problems = false;
  for (auto const &q : sc.questions) {
    auto row = analyze_question(sc.name, q);
    if (id)
      attach_oracle(row, q, *id, opts);
    if (row.verdict.conclusion == Conclusion::Inconclusive)
      code = Inconclusive;
    problems = problems || !row.problems.empty();
    if (g.records())
      for (auto const &r : row_records(row))
        emit(r);
    else
      std::cout << row_text(row);
  }
  return problems ? Failure : code;
}

int cmd_oracle(Globals const &g, std::string const &gens, std::string const &table,
               std::string const &classes, bool star, std::optional<std::uint64_t> stop_after) {
  auto t = checked_table(table);
  auto idx = class_indices(t, classes);
  if (idx.size() != 3)
    throw Error("the oracle counts class triples");
  PermGroup group(load_prm(gens));
  ClassIdentification id(group, t);
  OracleOptions opts{g.jobs, stop_after};
  auto value = star ? xi3_star_oracle(id, idx[0], idx[1], idx[2], opts)
                    : xi3_oracle(id, idx[0], idx[1], idx[2], opts);
  stamp(g);
  if (g.records()) {
    Record r;
    r.add("record", star ? "oracle-star" : "oracle").add("group", t.group_name).add("tuple", classes);
    r.add(star ? "xi_star" : "xi", std::to_string(value));
    if (star && stop_after)
      r.add("stop_after", std::to_string(*stop_after));
    emit(r);
  } else {
    std::cout << value << "\n";
  }
  return Ok;
}

int cmd_ree(Globals const &g, std::string const &gens, std::string const &table,
            std::string const &classes) {
  auto t = checked_table(table);
  PermGroup group(load_prm(gens));
  auto cert = ree_for_tuple(group, ClassTuple::from_names(t, split(classes)));
  stamp(g);
  std::vector<std::string> types;
  for (auto const &c : cert.types)
    types.push_back(c.to_string());
  if (g.records()) {
    Record r;
    r.add("record", "ree").add("group", t.group_name).add("tuple", classes);
    r.add("degree", std::to_string(cert.degree));
    for (std::size_t i = 0; i < types.size(); ++i)
      r.add("type" + std::to_string(i + 1), types[i]);
    r.add("total", std::to_string(cert.total)).add("bound", std::to_string(cert.bound));
    r.add("ree", cert.violated ? "violated" : "satisfied");
    emit(r);
  } else {
    for (std::size_t i = 0; i < types.size(); ++i)
      std::cout << (i ? " / " : "") << types[i];
    std::cout << "\n"
              << cert.total << (cert.violated ? " > " : " <= ") << cert.bound
              << (cert.violated ? " VIOLATED" : " SATISFIED") << "\n";
  }
  return Ok;
}

int cmd_lint(Globals const &g, std::vector<std::string> const &tables) {
  stamp(g);
  int code = Ok;
  for (auto const &path : tables) {
    auto t = load_table(path);
    auto diags = lint_table(t);
    if (!diags.empty())
      code = Failure;
    if (g.records()) {
      emit(Record{}.add("record", "lint").add("table", path).add("group", t.group_name)
               .add("diagnostics", std::to_string(diags.size())));
      for (auto const &d : diags)
        emit(Record{}.add("record", "diagnostic").add("table", path).add("check", d.check).add("message", d.message));
    } else {
      std::cout << path << ": " << (diags.empty() ? "ok" : std::to_string(diags.size()) + " problems") << "\n";
      for (auto const &d : diags)
        std::cout << "  " << d.check << ": " << d.message << "\n";
    }
  }
  return code;
}

int cmd_report(Globals const &g, std::string const &data_dir, std::string const &scenario_dir,
               bool allow_dirty) {
  std::string dirty;
  try {
    auto check = verify_manifest(data_dir);
    if (!check.clean())
      dirty = "bundled data differs from " + data_dir + "/SHA256SUMS:\n" + check.summary();
  } catch (ParseError const &) {
    throw;
  } catch (Error const &e) {
    dirty = std::string(e.what()) + "\n";
  }
  if (!dirty.empty()) {
    std::cerr << dirty;
    if (!allow_dirty) {
      std::cerr << "rerun with --allow-dirty-data to report anyway\n";
      return Failure;
    }
  }
  auto report = reference_report(data_dir, scenario_dir);
  stamp(g);
  if (g.records())
    for (auto const &r : report.records)
      emit(r);
  else
    std::cout << report.text;
  return Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decides (p,q,r)-generation questions from character tables and permutation groups"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "Oracle worker threads (0 = all cores)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_flag("--timestamps", g.timestamps, "Prefix text output with the time of the run");

  std::string table, classes, gens, scenario;
  std::vector<std::string> tables;
  bool with_oracle = false, star = false, allow_dirty = false;
  std::optional<std::uint64_t> stop_after;
  std::string data_dir = TRIGEN_DATA_DIR, scenario_dir = TRIGEN_SCENARIO_DIR;

  auto *xi_cmd = app.add_subcommand("xi", "Structure constant of 3 or 4 classes from a table");
  xi_cmd->add_option("--table", table)->required();
  xi_cmd->add_option("--classes", classes, "Comma-separated labels; the last is fixed")->required();

  auto *analyze = app.add_subcommand("analyze", "Decide every tuple of a scenario");
  analyze->add_option("scenario", scenario)->required();
  analyze->add_flag("--with-oracle", with_oracle, "Cross-check each triple by brute force");

  auto *oracle = app.add_subcommand("oracle", "Brute-force count from permutation generators");
  oracle->add_option("--gens", gens)->required();
  oracle->add_option("--table", table)->required();
  oracle->add_option("--classes", classes)->required();
  oracle->add_flag("--star", star, "Count only generating pairs");
  oracle->add_option("--stop-after", stop_after, "With --star: stop after this many");

  auto *ree = app.add_subcommand("ree", "Ree's inequality for a class tuple");
  ree->add_option("--gens", gens)->required();
  ree->add_option("--table", table)->required();
  ree->add_option("--classes", classes)->required();

  auto *lint = app.add_subcommand("lint", "Check character-table invariants");
  lint->add_option("--table,tables", tables)->required();

  auto *report = app.add_subcommand("report-paper", "Recompute the bundled reference results");
  report->add_option("--data-dir", data_dir);
  report->add_option("--scenario-dir", scenario_dir);
  report->add_flag("--allow-dirty-data", allow_dirty);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? Ok : Failure;
  }

  try {
    if (*xi_cmd)
      return cmd_xi(g, table, classes);
    if (*analyze)
      return cmd_analyze(g, scenario, with_oracle);
    if (*oracle)
      return cmd_oracle(g, gens, table, classes, star, stop_after);
    if (*ree)
      return cmd_ree(g, gens, table, classes);
    if (*lint)
      return cmd_lint(g, tables);
    if (*report)
      return cmd_report(g, data_dir, scenario_dir, allow_dirty);
  } catch (UnknownClass const &e) {
    std::cerr << "trigen: " << e.what() << "\n";
    return Unknown;
  } catch (AmbiguousClasses const &e) {
    std::cerr << "trigen: " << e.what() << "\n";
    return Ambiguous;
  } catch (std::exception const &e) {
    std::cerr << "trigen: " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}
