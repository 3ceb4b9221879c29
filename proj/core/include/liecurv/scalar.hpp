#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liecurv {

using Rational = mpq_class;

/// Element of a real multi-quadratic extension of Q, stored canonically as
///
///     a = sum_m  q_m * sqrt(m)
///
/// over square-free radicands m >= 1 with nonzero rational coefficients q_m
/// (m = 1 is the rational part).  Since square roots of distinct square-free
/// integers are linearly independent over Q, the canonical form is unique and
/// equality/zero tests are exact.  All arithmetic is exact; sign determination
/// is exact (dyadic interval refinement with a Galois-norm separation bound).
class Scalar {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  Scalar() = default;
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  explicit Scalar(const Rational& q);
  /// q * sqrt(radicand); the radicand is reduced to square-free form.
  Scalar(const Rational& q, std::uint64_t radicand);

  static Scalar sqrt_of(std::uint64_t radicand) { return Scalar(Rational(1), radicand); }
  /// q / sqrt(radicand) = (q/m') * sqrt(m') after reduction; convenience for
  /// structure constants written as j/sqrt(30) etc.
  static Scalar over_sqrt(const Rational& q, std::uint64_t radicand);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational part (coefficient of sqrt(1)); exact, zero if absent.
  Rational rational_part() const;
  /// Requires is_rational(); returns the value.
  Rational as_rational() const;
  const TermMap& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.invert(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact multiplicative inverse via the product of Galois conjugates
  /// (independent sign flips on the F2-basis of the radicand lattice).
  /// Throws division_by_zero on zero and field_degree_exceeded when the
  /// radicands need more than max_field_generators() independent radicals.
  Scalar invert() const;

  /// Exact sign: -1, 0, +1.
  int sign() const;
  /// Certified floating approximation (dyadic interval midpoint).
  double to_double() const;

  /// Canonical text form, e.g. "13/30", "-1/15*sqrt(5)", "1/2+1*sqrt(2)".
  std::string str() const;
  /// Parses the grammar  scalar := term (('+'|'-') term)* ;
  /// term := rational ('*sqrt(' natural ')')? ; rational := integer ('/' positive)?
  /// Input need not be canonical; the result is.
  static Scalar parse(std::string_view text);

  /// Bound on the number of independent radicals invert() may handle.
  static int max_field_generators();
  static void set_max_field_generators(int k);

 private:
  void prune();
  TermMap terms_;
};

/// Exact three-way comparison: sign of a - b.
int compare(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liecurv
