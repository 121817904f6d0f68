#ifndef TRIGEN_SCENARIO_HPP
#define TRIGEN_SCENARIO_HPP

#include <filesystem>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "trigen/analysis.hpp"

// Scenario files, sectioned key=value text:
//
//   [group]      table=<ctb>  gens=<prm>          (gens optional, used by oracles)
//   [tuple]      classes=2A,3A,11A                (repeated, one question each)
//   [subgroup]   name= order= soluble= table= fusion= copies=   (repeated)
//   [ree]        action=<prm> classes=...         (classes optional: all tuples)
//   [external]   ref=<text> classes=...           (annotation only)
//
// fusion is an inline comma list of group class labels, one per subgroup
// class, or the path of a file holding such a list. copies is a comma list
// of sources: an integer, <class>:<integer>, action:<prm>, or fusion. All
// sources that apply to a tuple must agree. Paths are relative to the
// scenario file. Subgroup, ree and external sections apply to every tuple
// wherever they appear in the file.

namespace trigen {

struct Scenario {
  std::string name;
  std::shared_ptr<CharacterTable const> table;
  std::shared_ptr<PermGroup const> gens;
  std::filesystem::path gens_path;
  std::vector<Question> questions;
};

/// Throws ParseError with a line number for malformed input, and Error when
/// a referenced file is unusable or a table fails lint.
Scenario parse_scenario(std::istream &in, std::filesystem::path const &base_dir,
                        std::string name = "scenario");
Scenario load_scenario(std::filesystem::path const &path);

} // namespace trigen

#endif // TRIGEN_SCENARIO_HPP
