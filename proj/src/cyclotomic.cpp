#include "trigen/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "trigen/errors.hpp"

namespace trigen {

namespace {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

// Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4.
unsigned field_conductor(unsigned n) { return n % 4 == 2 ? n / 2 : n; }

unsigned lcm(unsigned a, unsigned b) { return std::lcm(a, b); }

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Reduces sum_k poly[k] x^k modulo x^n - 1 and then modulo Phi_n.
std::vector<Rational> reduce(unsigned n, std::vector<Rational> poly) {
  if (poly.size() > n) {
    for (std::size_t k = n; k < poly.size(); ++k)
      if (poly[k] != 0)
        poly[k % n] += poly[k];
    poly.resize(n);
  }
  auto const &phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t top = poly.size(); top-- > deg;) {
    if (poly[top] == 0)
      continue;
    Rational lead = poly[top];
    std::size_t shift = top - deg;
    for (std::size_t i = 0; i < deg; ++i)
      if (phi[i] != 0)
        poly[shift + i] -= lead * Rational(static_cast<long>(phi[i]));
    poly[top] = 0;
  }
  poly.resize(deg);
  return poly;
}

std::vector<Rational> lift(std::vector<Rational> const &coeffs, unsigned from, unsigned to) {
  if (from == to)
    return coeffs;
  unsigned step = to / from;
  std::vector<Rational> poly(to);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0)
      poly[(k * step) % to] += coeffs[k];
  return reduce(to, std::move(poly));
}

// Embedding data for Q(zeta_m) inside Q(zeta_n): the basis zeta_m^i in
// Q(zeta_n) coordinates, and a left inverse supported on pivot rows.
struct Embedding {
  std::vector<std::vector<Rational>> basis;   // phi(m) columns, each phi(n) long
  std::vector<std::size_t> pivots;            // phi(m) row indices
  std::vector<std::vector<Rational>> inverse; // phi(m) x phi(m), acts on pivot rows
};

Embedding build_embedding(unsigned n, unsigned m) {
  Embedding e;
  unsigned pm = totient(m);
  for (unsigned i = 0; i < pm; ++i) {
    std::vector<Rational> unit(pm);
    unit[i] = 1;
    e.basis.push_back(lift(unit, m, n));
  }
  std::size_t rows = e.basis.empty() ? 0 : e.basis[0].size();

  // Greedy pivot rows: keep a row-echelon copy of the chosen rows.
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> lead;
  for (std::size_t r = 0; r < rows && e.pivots.size() < pm; ++r) {
    std::vector<Rational> row(pm);
    for (unsigned c = 0; c < pm; ++c)
      row[c] = e.basis[c][r];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (row[lead[k]] == 0)
        continue;
      Rational f = row[lead[k]] / echelon[k][lead[k]];
      for (unsigned c = 0; c < pm; ++c)
        row[c] -= f * echelon[k][c];
    }
    std::size_t l = 0;
    while (l < pm && row[l] == 0)
      ++l;
    if (l == pm)
      continue;
    echelon.push_back(std::move(row));
    lead.push_back(l);
    e.pivots.push_back(r);
  }

  // Invert the pivot-row submatrix by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(pm, std::vector<Rational>(2 * pm));
  for (unsigned i = 0; i < pm; ++i) {
    for (unsigned c = 0; c < pm; ++c)
      a[i][c] = e.basis[c][e.pivots[i]];
    a[i][pm + i] = 1;
  }
  for (unsigned col = 0; col < pm; ++col) {
    unsigned p = col;
    while (a[p][col] == 0)
      ++p;
    std::swap(a[p], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto &x : a[col])
      x *= inv;
    for (unsigned r = 0; r < pm; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col];
      for (unsigned c = 0; c < 2 * pm; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  e.inverse.assign(pm, std::vector<Rational>(pm));
  for (unsigned i = 0; i < pm; ++i)
    for (unsigned c = 0; c < pm; ++c)
      e.inverse[i][c] = a[i][pm + c];
  return e;
}

Embedding const &embedding(unsigned n, unsigned m) {
  static std::mutex lock;
  static std::map<std::pair<unsigned, unsigned>, Embedding> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find({n, m});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(n, m), build_embedding(n, m)).first;
  return it->second;
}

// Coordinates of `a` (in Q(zeta_n)) over Q(zeta_m), if it lies there.
bool restrict_to(std::vector<Rational> const &a, unsigned n, unsigned m,
                 std::vector<Rational> &out) {
  auto const &e = embedding(n, m);
  std::size_t pm = e.pivots.size();
  std::vector<Rational> c(pm);
  for (std::size_t i = 0; i < pm; ++i)
    for (std::size_t k = 0; k < pm; ++k) {
      auto const &x = a[e.pivots[k]];
      if (x != 0 && e.inverse[i][k] != 0)
        c[i] += e.inverse[i][k] * x;
    }
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational v;
    for (std::size_t i = 0; i < pm; ++i)
      if (c[i] != 0 && e.basis[i][r] != 0)
        v += c[i] * e.basis[i][r];
    if (v != a[r])
      return false;
  }
  out = std::move(c);
  return true;
}

} // namespace

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

std::vector<std::int64_t> const &cyclotomic_polynomial(unsigned n) {
  static std::mutex lock;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it != cache.end())
      return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n)
      continue;
    auto const &div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(poly.size() - dd);
    for (std::size_t top = poly.size(); top-- > dd;) {
      std::int64_t q = poly[top];
      quot[top - dd] = q;
      for (std::size_t i = 0; i <= dd; ++i)
        poly[top - dd + i] -= q * div[i];
    }
    poly = std::move(quot);
  }
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(Rational const &q) : conductor_(1), coeffs_{q} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  for (auto &x : coeffs_)
    x.canonicalize();
  deflate();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  if (n == 0)
    throw Error("root of unity of order 0");
  std::vector<Rational> poly(n);
  poly[mod(k, n)] = 1;
  return Cyclotomic(n, reduce(n, std::move(poly)));
}

Cyclotomic Cyclotomic::from_exponents(unsigned n, std::vector<Rational> const &coeffs) {
  if (n == 0)
    throw Error("conductor 0");
  return Cyclotomic(n, reduce(n, coeffs));
}

void Cyclotomic::deflate() {
  if (conductor_ == 1)
    return;
  bool rational = true;
  for (std::size_t k = 1; k < coeffs_.size() && rational; ++k)
    rational = coeffs_[k] == 0;
  if (rational) {
    coeffs_.resize(1);
    conductor_ = 1;
    return;
  }
  for (unsigned m : divisors(conductor_)) {
    if (m == 1 || m == conductor_ || m % 4 == 2)
      continue;
    std::vector<Rational> sub;
    if (restrict_to(coeffs_, conductor_, m, sub)) {
      conductor_ = m;
      coeffs_ = std::move(sub);
      return;
    }
  }
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational())
    throw NotRational("value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coeffs_in(unsigned m) const {
  if (m == 0 || m % conductor_ != 0)
    throw Error("conductor " + std::to_string(conductor_) + " does not divide " +
                std::to_string(m));
  return lift(coeffs_, conductor_, m);
}

Cyclotomic Cyclotomic::galois(unsigned m, long j) const {
  if (std::gcd(static_cast<unsigned long>(mod(j, m)), static_cast<unsigned long>(m)) != 1)
    throw Error("Galois exponent must be coprime to the conductor");
  auto c = coeffs_in(m);
  std::vector<Rational> poly(m);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0)
      poly[mod(static_cast<long>(k) * j, m)] += c[k];
  return Cyclotomic(m, reduce(m, std::move(poly)));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_rational())
    return *this;
  return galois(conductor_, -1);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw std::domain_error("division by zero");
  if (is_rational())
    return Cyclotomic(Rational(1) / coeffs_[0]);
  // a^-1 = (product of the other Galois conjugates) / norm(a).
  Cyclotomic others(1);
  for (unsigned j = 2; j < conductor_; ++j)
    if (std::gcd(j, conductor_) == 1)
      others *= galois(conductor_, j);
  Rational norm = (*this * others).to_rational();
  return others / Cyclotomic(norm);
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &o) {
  unsigned n = lcm(conductor_, o.conductor_);
  auto a = lift(coeffs_, conductor_, n);
  auto b = lift(o.coeffs_, o.conductor_, n);
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] += b[k];
  *this = Cyclotomic(n, std::move(a));
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &o) { return *this += -o; }

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &o) {
  if (o.is_rational() || is_rational()) {
    Rational s = o.is_rational() ? o.coeffs_[0] : coeffs_[0];
    Cyclotomic const &v = o.is_rational() ? *this : o;
    if (s == 0)
      return *this = Cyclotomic(0);
    std::vector<Rational> c = v.coeffs_;
    for (auto &x : c)
      x *= s;
    conductor_ = v.conductor_;
    coeffs_ = std::move(c);
    return *this;
  }
  unsigned n = lcm(conductor_, o.conductor_);
  auto a = lift(coeffs_, conductor_, n);
  auto b = lift(o.coeffs_, o.conductor_, n);
  std::vector<Rational> prod(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0)
        prod[i + j] += a[i] * b[j];
  }
  *this = Cyclotomic(n, reduce(n, std::move(prod)));
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(Cyclotomic const &o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto &x : r.coeffs_)
    x = -x;
  return r;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0)
      continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << '*';
    os << "E(" << conductor_ << ')';
    if (k > 1)
      os << '^' << k;
  }
  if (first)
    os << '0';
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Cyclotomic const &c) { return os << c.to_string(); }

namespace {

class ValueParser {
public:
  ValueParser(std::string_view text, unsigned conductor) : text_(text), field_(conductor) {}

  Cyclotomic parse() {
    Cyclotomic v = value();
    skip();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(std::string const &msg) const {
    throw ParseError("cyclotomic value \"" + std::string(text_) + "\": " + msg, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Cyclotomic value() {
    Cyclotomic acc = signed_term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Cyclotomic signed_term() {
    if (peek('-')) {
      ++pos_;
      return -term();
    }
    return term();
  }

  Cyclotomic term() {
    Cyclotomic acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Cyclotomic factor() {
    if (peek('(')) {
      ++pos_;
      Cyclotomic v = value();
      expect(')');
      return v;
    }
    if (peek('E'))
      return root();
    Integer num = integer();
    if (peek('/')) {
      ++pos_;
      Integer den = integer();
      if (den == 0)
        fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return Cyclotomic(q);
    }
    return Cyclotomic(Rational(num));
  }

  Cyclotomic root() {
    ++pos_;
    expect('(');
    std::size_t at = pos_;
    Integer order = integer();
    expect(')');
    if (order == 0 || !order.fits_uint_p())
      fail("bad root order");
    unsigned m = static_cast<unsigned>(order.get_ui());
    if (field_conductor(field_) % field_conductor(m) != 0) {
      pos_ = at;
      fail("E(" + std::to_string(m) + ") does not lie in Q(E(" + std::to_string(field_) + "))");
    }
    long k = 1;
    if (peek('^')) {
      ++pos_;
      Integer e = integer();
      k = static_cast<long>(Integer(e % m).get_ui());
    }
    return Cyclotomic::root_of_unity(m, k);
  }

  std::string_view text_;
  unsigned field_;
  std::size_t pos_ = 0;
};

} // namespace

Cyclotomic parse_cyclotomic(std::string_view expr, unsigned conductor) {
  if (conductor == 0)
    throw ParseError("conductor must be positive", 0);
  return ValueParser(expr, conductor).parse();
}

} // namespace trigen
