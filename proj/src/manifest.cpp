#include "trigen/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>

#include <openssl/evp.h>

#include "trigen/errors.hpp"

namespace trigen {

namespace fs = std::filesystem;

namespace {

bool is_data_file(fs::path const &p) {
  auto ext = p.extension();
  return ext == ".ctb" || ext == ".prm";
}

std::vector<std::string> data_files(fs::path const &dir) {
  std::vector<std::string> out;
  for (auto const &e : fs::directory_iterator(dir))
    if (e.is_regular_file() && is_data_file(e.path()))
      out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::string sha256_file(fs::path const &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw Error("sha256 unavailable");
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0)
      EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  static char const digits[] = "0123456789abcdef";
  std::string hex;
  for (unsigned i = 0; i < len; ++i) {
    hex += digits[md[i] >> 4];
    hex += digits[md[i] & 15];
  }
  return hex;
}

std::string ManifestCheck::summary() const {
  std::string out;
  auto list = [&](char const *what, std::vector<std::string> const &v) {
    for (auto const &f : v)
      out += std::string(what) + ": " + f + "\n";
  };
  list("modified", modified);
  list("missing", missing);
  list("unlisted", unlisted);
  return out;
}

ManifestCheck verify_manifest(fs::path const &dir) {
  std::ifstream in(dir / "SHA256SUMS");
  if (!in)
    throw Error("no manifest " + (dir / "SHA256SUMS").string());
  std::map<std::string, std::string> listed;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.empty())
      continue;
    // "<64 hex>  name" or "<64 hex> *name"
    if (line.size() < 67 || line[64] != ' ' || (line[65] != ' ' && line[65] != '*'))
      throw ParseError("malformed manifest line", no);
    listed[line.substr(66)] = line.substr(0, 64);
  }
  ManifestCheck check;
  for (auto const &[name, digest] : listed) {
    auto p = dir / name;
    if (!fs::exists(p))
      check.missing.push_back(name);
    else if (sha256_file(p) != digest)
      check.modified.push_back(name);
  }
  for (auto const &f : data_files(dir))
    if (!listed.count(f))
      check.unlisted.push_back(f);
  return check;
}

void write_manifest(fs::path const &dir) {
  std::ofstream out(dir / "SHA256SUMS");
  for (auto const &f : data_files(dir))
    out << sha256_file(dir / f) << "  " << f << "\n";
  if (!out)
    throw Error("cannot write " + (dir / "SHA256SUMS").string());
}

} // namespace trigen
