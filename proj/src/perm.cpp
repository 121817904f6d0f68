#include "trigen/perm.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "trigen/errors.hpp"

namespace trigen {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > std::size_t(1) << 16)
    throw Error("degree " + std::to_string(degree) + " exceeds the supported maximum 65536");
  std::iota(images_.begin(), images_.end(), Point(0));
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > std::size_t(1) << 16)
    throw Error("degree exceeds the supported maximum 65536");
  std::vector<bool> seen(images_.size());
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::vector<std::vector<std::size_t>> const &cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point(0));
  for (auto const &cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::size_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw Error("cycle point out of range");
      img[from - 1] = static_cast<Point>(to - 1);
    }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm operator*(Perm const &p, Perm const &q) {
  if (p.degree() != q.degree())
    throw Error("cannot multiply permutations of degrees " + std::to_string(p.degree()) +
                " and " + std::to_string(q.degree()));
  Perm r = p;
  for (auto &x : r.images_)
    x = q.images_[x];
  return r;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm result(degree());
  while (e) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Perm Perm::conjugate_by(Perm const &x) const {
  if (x.degree() != degree())
    throw Error("conjugating permutation has the wrong degree");
  // x^-1 p x maps x(i) to x(p(i)).
  Perm r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[x.images_[i]] = x.images_[images_[i]];
  return r;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree());
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i)
        os << ',';
      os << j + 1;
      seen[j] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::size_t PermHash::operator()(Perm const &p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

CycleType::CycleType(std::size_t degree, std::map<std::size_t, std::size_t> counts)
    : degree_(degree) {
  std::size_t covered = 0;
  for (auto const &[len, mult] : counts) {
    if (len == 0)
      throw Error("cycle length 0");
    if (mult)
      counts_[len] = mult;
    covered += len * mult;
  }
  if (covered != degree)
    throw Error("cycle type covers " + std::to_string(covered) + " points, degree is " +
                std::to_string(degree));
}

std::size_t CycleType::cycles() const noexcept {
  std::size_t c = 0;
  for (auto const &[len, mult] : counts_)
    c += mult;
  return c;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto const &[len, mult] : counts_) {
    if (!first)
      os << ' ';
    first = false;
    os << len << '^' << mult;
  }
  return os.str();
}

CycleType cycle_type(Perm const &p) {
  std::map<std::size_t, std::size_t> counts;
  std::vector<bool> seen(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p(static_cast<Point>(j))) {
      seen[j] = true;
      ++len;
    }
    ++counts[len];
  }
  return CycleType(p.degree(), std::move(counts));
}

std::size_t element_order(Perm const &p) {
  std::size_t order = 1;
  std::vector<bool> seen(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p(static_cast<Point>(j))) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::size_t fixed_points(Perm const &p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    n += p(static_cast<Point>(i)) == i;
  return n;
}

CycleType cycle_type_from_fixpoints(std::size_t n, std::size_t order,
                                    std::map<std::size_t, std::size_t> const &fixes) {
  if (order == 0)
    throw Error("element order must be positive");
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t d = 1; d <= order; ++d) {
    if (order % d != 0)
      continue;
    auto it = fixes.find(d);
    if (it == fixes.end())
      throw Error("missing fixed-point count for the power " + std::to_string(d));
    if (it->second > n)
      throw Error("fixed-point count exceeds the degree");
    std::size_t shorter = 0;
    for (auto const &[len, mult] : counts)
      if (d % len == 0)
        shorter += len * mult;
    if (it->second < shorter || (it->second - shorter) % d != 0)
      throw Error("inconsistent fixed-point counts at the power " + std::to_string(d));
    counts[d] = (it->second - shorter) / d;
  }
  if (fixes.at(order) != n)
    throw Error("g^order must fix every point");
  return CycleType(n, std::move(counts));
}

std::ostream &operator<<(std::ostream &os, Perm const &p) { return os << p.to_string(); }
std::ostream &operator<<(std::ostream &os, CycleType const &c) { return os << c.to_string(); }

std::vector<Perm> parse_prm(std::istream &in) {
  std::vector<Perm> out;
  std::size_t degree = 0;
  bool have_degree = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream is(raw);
    std::vector<std::string> words;
    for (std::string w; is >> w;)
      words.push_back(w);
    if (words.empty())
      continue;
    if (!have_degree) {
      if (words.size() != 2 || words[0] != "degree")
        throw ParseError("expected 'degree <n>'", line);
      try {
        std::size_t used = 0;
        long long d = std::stoll(words[1], &used);
        if (used != words[1].size() || d < 1 || d > (1 << 16))
          throw ParseError("bad degree '" + words[1] + "'", line);
        degree = static_cast<std::size_t>(d);
      } catch (std::logic_error const &) {
        throw ParseError("bad degree '" + words[1] + "'", line);
      }
      have_degree = true;
      continue;
    }
    if (words.size() != degree)
      throw ParseError("permutation has " + std::to_string(words.size()) +
                           " images, degree is " + std::to_string(degree),
                       line);
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(words[i], &used);
      } catch (std::logic_error const &) {
        used = 0;
      }
      if (used != words[i].size() || v < 1 || static_cast<std::size_t>(v) > degree)
        throw ParseError("bad image '" + words[i] + "'", line);
      img[i] = static_cast<Point>(v - 1);
    }
    try {
      out.emplace_back(std::move(img));
    } catch (Error const &) {
      throw ParseError("images do not form a permutation", line);
    }
  }
  if (!have_degree)
    throw ParseError("missing 'degree' line", 0);
  return out;
}

std::vector<Perm> load_prm(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open permutation file " + path);
  return parse_prm(in);
}

std::string serialize_prm(std::span<Perm const> perms) {
  if (perms.empty())
    throw Error("cannot serialize an empty permutation list");
  std::ostringstream os;
  os << "degree " << perms[0].degree() << '\n';
  for (auto const &p : perms) {
    for (std::size_t i = 0; i < p.degree(); ++i)
      os << (i ? " " : "") << p(static_cast<Point>(i)) + 1;
    os << '\n';
  }
  return os.str();
}

} // namespace trigen
