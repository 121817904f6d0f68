#ifndef TRIGEN_MANIFEST_HPP
#define TRIGEN_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace trigen {

/// Lowercase hex SHA-256 of a file's contents. Throws Error if unreadable.
std::string sha256_file(std::filesystem::path const &path);

struct ManifestCheck {
  std::vector<std::string> modified;
  std::vector<std::string> missing;
  /// Data files (.ctb, .prm) present but not listed.
  std::vector<std::string> unlisted;

  bool clean() const { return modified.empty() && missing.empty() && unlisted.empty(); }
  std::string summary() const;
};

/// Checks `dir` against `dir/SHA256SUMS` (sha256sum format). Throws Error
/// when the manifest itself is absent, ParseError on a malformed line.
ManifestCheck verify_manifest(std::filesystem::path const &dir);

/// Writes `dir/SHA256SUMS` for every .ctb and .prm file in `dir`.
void write_manifest(std::filesystem::path const &dir);

} // namespace trigen

#endif // TRIGEN_MANIFEST_HPP
