#ifndef TRIGEN_CYCLOTOMIC_HPP
#define TRIGEN_CYCLOTOMIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace trigen {

using Integer = mpz_class;
using Rational = mpq_class;

/// Euler's totient.
unsigned totient(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> const &cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_n) in the power basis 1, x, ..., x^(phi(n)-1) of
/// Q[x]/(Phi_n), x = exp(2 pi i / n).
///
/// Values are always stored over the smallest conductor whose field contains
/// them, so two values are equal iff conductor and coefficients agree.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(Rational const &q);
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}

  /// zeta_n^k.
  static Cyclotomic root_of_unity(unsigned n, long k = 1);

  /// Builds sum_k coeffs[k] * zeta_n^k for a vector of any length; exponents
  /// are taken mod n.
  static Cyclotomic from_exponents(unsigned n, std::vector<Rational> const &coeffs);

  unsigned conductor() const noexcept { return conductor_; }
  std::vector<Rational> const &coeffs() const noexcept { return coeffs_; }

  bool is_rational() const noexcept { return conductor_ == 1; }
  bool is_zero() const noexcept { return is_rational() && coeffs_[0] == 0; }

  /// The constant coefficient. Throws NotRational otherwise.
  Rational to_rational() const;

  /// Coefficients after lifting into Q(zeta_m); m must be a multiple of the
  /// conductor.
  std::vector<Rational> coeffs_in(unsigned m) const;

  Cyclotomic conjugate() const;

  /// Field automorphism zeta -> zeta^j of Q(zeta_m); j must be coprime to m
  /// and the conductor must divide m.
  Cyclotomic galois(unsigned m, long j) const;

  Cyclotomic inverse() const;

  Cyclotomic &operator+=(Cyclotomic const &o);
  Cyclotomic &operator-=(Cyclotomic const &o);
  Cyclotomic &operator*=(Cyclotomic const &o);
  Cyclotomic &operator/=(Cyclotomic const &o);

  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, Cyclotomic const &b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  /// Serializes in the same grammar `parse_cyclotomic` reads.
  std::string to_string() const;

private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs);

  void deflate();

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

/// Parses the value grammar
///
///   value    := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | root | '(' value ')'
///   root     := 'E(' int ')' ('^' int)?
///   rational := '-'? int ('/' int)?
///
/// with whitespace ignored. A leading '-' is also accepted in front of any
/// term, which is how GAP prints values such as -E(5)^3. Every E(m) must
/// embed in Q(zeta_conductor). Throws ParseError (character offset) on bad
/// syntax or a root outside the field.
Cyclotomic parse_cyclotomic(std::string_view expr, unsigned conductor);

std::ostream &operator<<(std::ostream &os, Cyclotomic const &c);

} // namespace trigen

#endif // TRIGEN_CYCLOTOMIC_HPP
