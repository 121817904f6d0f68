#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "doctest.h"

#include "trigen/errors.hpp"
#include "trigen/manifest.hpp"
#include "trigen/report.hpp"

using namespace trigen;
namespace fs = std::filesystem;

namespace {

fs::path scratch(std::string const &name) {
  auto dir = fs::temp_directory_path() / ("trigen_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(fs::path const &p, std::string const &text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("records escape separators and round-trip") {
  Record r;
  r.add("record", "note").add("text", "a b=c%d\n").add("empty", "");
  auto line = format_record(r);
  CHECK(line == "record=note text=a%20b%3Dc%25d%0A empty=");
  CHECK(parse_record(line) == r);
  CHECK(r.get("text") == "a b=c%d\n");
  CHECK_FALSE(r.get("missing"));
}

TEST_CASE("records round-trip arbitrary printable values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ch(0, 127), len(0, 12);
  for (int i = 0; i < 500; ++i) {
    Record r;
    for (int k = 0; k < 3; ++k) {
      std::string v;
      for (int n = len(rng); n > 0; --n)
        v += static_cast<char>(ch(rng));
      r.add("k" + std::to_string(k), v);
    }
    auto line = format_record(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(parse_record(line) == r);
  }
}

TEST_CASE("malformed records report their position") {
  auto col = [](std::string const &s) {
    try {
      parse_record(s);
    } catch (ParseError const &e) {
      return e.where();
    }
    return std::size_t{0};
  };
  CHECK(col("a=1 b") == 5);
  CHECK(col("=1") == 1);
  CHECK(col("a=%4") == 3);
  CHECK(col("a=%zz") == 3);

  std::istringstream in("a=1\n\nb=2\nbroken\n");
  try {
    parse_records(in);
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.where() == 4);
  }
  std::istringstream ok("a=1\n\nb=2\n");
  CHECK(parse_records(ok).size() == 2);
}

TEST_CASE("manifest detects modified, missing and unlisted files") {
  auto dir = scratch("manifest");
  write(dir / "a.ctb", "one\n");
  write(dir / "b.prm", "two\n");
  write(dir / "notes.txt", "ignored\n");
  write_manifest(dir);
  CHECK(verify_manifest(dir).clean());
  // sha256("one\n")
  CHECK(sha256_file(dir / "a.ctb") ==
        "2c8b08da5ce60398e1f19af0e5dccc744df274b826abe585eaba68c525434806");

  write(dir / "a.ctb", "One\n");
  write(dir / "c.ctb", "three\n");
  fs::remove(dir / "b.prm");
  auto check = verify_manifest(dir);
  CHECK_FALSE(check.clean());
  CHECK(check.modified == std::vector<std::string>{"a.ctb"});
  CHECK(check.missing == std::vector<std::string>{"b.prm"});
  CHECK(check.unlisted == std::vector<std::string>{"c.ctb"});

  write(dir / "SHA256SUMS", "nonsense\n");
  CHECK_THROWS_AS(verify_manifest(dir), ParseError);
  fs::remove(dir / "SHA256SUMS");
  CHECK_THROWS_AS(verify_manifest(dir), Error);
  fs::remove_all(dir);
}

TEST_CASE("bundled data matches its manifest") {
  auto check = verify_manifest(TRIGEN_DATA_DIR);
  INFO(check.summary());
  CHECK(check.clean());
}

TEST_CASE("reference report reproduces every reference value") {
  auto report = reference_report(TRIGEN_DATA_DIR, TRIGEN_SCENARIO_DIR);
  INFO(report.text);
  CHECK(report.mismatches == 0);

  auto find = [&](std::string const &kind, std::string const &key, std::string const &value) {
    for (auto const &r : report.records)
      if (r.get("record") == kind && r.get(key) == value)
        return r;
    FAIL("no record " << kind << " " << key << "=" << value);
    return Record{};
  };
  auto r = find("j1-table", "tuple", "2A,5A,11A");
  CHECK(r.get("computed") == "44");
  CHECK(r.get("status") == "ok");
  CHECK(find("note", "tuple", "2A,5A,11A").get("text")->find("55") != std::string::npos);
  CHECK(find("j2-table", "tuple", "3B,5C,7A").get("computed") == "343");
  auto b = find("verdict", "scenario", "j1_involutions");
  CHECK(b.get("tuple") == "2A,2A,2A,11A");
  CHECK(b.get("computed") == "Generated");
  auto t1 = report.records;
  auto known = std::count_if(t1.begin(), t1.end(),
                             [](Record const &x) { return x.get("status") == "known"; });
  CHECK(known == 1);

  // Machine-readable output parses back to the same records.
  std::stringstream out;
  for (auto const &rec : report.records)
    out << format_record(rec) << "\n";
  CHECK(parse_records(out) == report.records);

  // Deterministic.
  CHECK(reference_report(TRIGEN_DATA_DIR, TRIGEN_SCENARIO_DIR).records == report.records);
}

TEST_CASE("reference report lists perturbed data instead of failing") {
  auto dir = scratch("report");
  fs::copy(TRIGEN_DATA_DIR, dir / "data");
  fs::copy(TRIGEN_SCENARIO_DIR, dir / "scenarios");

  // chi_2(3A) = 2 becomes 3: xi values move and the table no longer lints.
  auto path = dir / "data" / "j1.ctb";
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  auto text = buf.str();
  auto pos = text.find("char 56 0 2 ");
  REQUIRE(pos != std::string::npos);
  text[pos + 10] = '3';
  write(path, text);
  CHECK(verify_manifest(dir / "data").modified == std::vector<std::string>{"j1.ctb"});

  auto report = reference_report(dir / "data", dir / "scenarios");
  CHECK(report.mismatches > 0);
  auto errors = std::count_if(report.records.begin(), report.records.end(),
                              [](Record const &r) { return r.get("record") == "error"; });
  CHECK(errors >= 2); // both J1 scenarios refuse the table
  CHECK(report.records.back().get("mismatches") == std::to_string(report.mismatches));

  fs::remove(dir / "data" / "j2.ctb");
  CHECK(reference_report(dir / "data", dir / "scenarios").mismatches > report.mismatches);
  fs::remove_all(dir);
}
