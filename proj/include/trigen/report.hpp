#ifndef TRIGEN_REPORT_HPP
#define TRIGEN_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigen/analysis.hpp"
#include "trigen/oracle.hpp"
#include "trigen/scenario.hpp"

namespace trigen {

/// One line of machine-readable output: space-separated key=value pairs.
/// Values escape '%', ' ', '=' and control characters as %XX.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record &add(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  friend bool operator==(Record const &, Record const &) = default;
};

std::string format_record(Record const &r);
/// Throws ParseError with the 1-based column.
Record parse_record(std::string_view line);
/// Skips blank lines. Throws ParseError with the line number.
std::vector<Record> parse_records(std::istream &in);

struct ReportRow {
  std::string scenario;
  std::string tuple; ///< "2A,3A,7A"
  Verdict verdict;
  std::optional<std::uint64_t> oracle_xi;
  std::optional<std::uint64_t> oracle_xi_star;
  /// Disagreements between the oracle and the analysis.
  std::vector<std::string> problems;
};

ReportRow analyze_question(std::string const &scenario, Question const &q);

/// Fills the oracle columns of a 3-class row and checks them against the
/// verdict: oracle xi equals xi, xi* is at least the ledger bound, xi* > 0
/// for Generated, xi* = 0 for NotGenerated.
void attach_oracle(ReportRow &row, Question const &q, ClassIdentification const &id,
                   OracleOptions const &opts);

/// A row plus one record per ledger entry and note.
std::vector<Record> row_records(ReportRow const &row);
std::string row_text(ReportRow const &row);

struct Report {
  std::vector<Record> records;
  std::string text;
  std::size_t mismatches = 0;
};

/// Recomputes the reference J1 and J2 structure-constant tables, the
/// four-class and subgroup counts, the 11:10 partial-table check and the
/// generation verdicts from the bundled data, listing every disagreement with
/// the reference values.
Report reference_report(std::filesystem::path const &data_dir,
                        std::filesystem::path const &scenario_dir);

} // namespace trigen

#endif // TRIGEN_REPORT_HPP
