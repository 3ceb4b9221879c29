#pragma once

// Shared helpers for the unit tests: terse scalar builders, random algebra
// families that satisfy the Jacobi identity by construction, and exact
// comparison utilities.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liecurv/error.hpp"
#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"
#include "liecurv/scalar.hpp"

namespace liecurv::test {

inline Scalar S(long v) { return Scalar(v); }
inline Scalar frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}
/// (num/den) * sqrt(rad)
inline Scalar sq(long num, long den, unsigned long rad) {
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q, rad);
}

/// Runs fn and returns the errc it throws, or nullopt when it does not throw.
template <typename Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Small random rational with denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, long max_num = 6, long max_den = 6) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random element of Q(sqrt 2, sqrt 3): a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6).
inline Scalar random_scalar(std::mt19937_64& rng) {
  Scalar s(random_rational(rng));
  s += Scalar(random_rational(rng), 2);
  s += Scalar(random_rational(rng), 3);
  s += Scalar(random_rational(rng), 6);
  return s;
}

/// Two-step nilpotent algebra: `gens` generator vectors followed by `cents`
/// central vectors; [g_a, g_b] is a random combination of the central ones.
/// Every Jacobi summand lands in the center and brackets with the center
/// vanish, so the Jacobi identity holds for any choice of coefficients.
inline MetricLieAlgebra random_two_step(std::mt19937_64& rng, int gens, int cents,
                                        bool radicals = false) {
  std::vector<BracketTerm> terms;
  for (int a = 0; a < gens; ++a)
    for (int b = a + 1; b < gens; ++b)
      for (int z = 0; z < cents; ++z) {
        Scalar coeff = radicals ? random_scalar(rng) : Scalar(random_rational(rng));
        if (!coeff.is_zero()) terms.push_back({a, b, gens + z, coeff});
      }
  return MetricLieAlgebra::from_brackets(gens + cents, terms);
}

/// Almost-abelian algebra: [e_0, e_j] = sum_k D_{kj} e_k over j, k >= 1 with a
/// random matrix D. All other brackets vanish, so every Jacobi summand
/// vanishes identically for any D.
inline MetricLieAlgebra random_almost_abelian(std::mt19937_64& rng, int n,
                                              bool radicals = false) {
  std::vector<BracketTerm> terms;
  for (int j = 1; j < n; ++j)
    for (int k = 1; k < n; ++k) {
      Scalar coeff = radicals ? random_scalar(rng) : Scalar(random_rational(rng));
      if (!coeff.is_zero()) terms.push_back({0, j, k, coeff});
    }
  return MetricLieAlgebra::from_brackets(n, terms);
}

/// Solvable model carrying a compatible almost complex structure: vertical
/// span {e0, e1}, horizontal span {e2, e3}, brackets
///   [e0,e2] = -e0,  [e1,e2] = e1,  [e1,e3] = -2 e0,  [e2,e3] = 2 e3.
/// The fibers' second fundamental form is nonzero and intertwines exactly
/// with J(e0)=e1, J(e2)=e3.
inline MetricLieAlgebra compatible_model() {
  return MetricLieAlgebra::from_brackets(
      4, {{0, 2, 0, S(-1)}, {1, 2, 1, S(1)}, {1, 3, 0, S(-2)}, {2, 3, 3, S(2)}},
      {"U1", "U2", "X", "Y"});
}

/// J for compatible_model(): e0 -> e1, e2 -> e3 (columns are images).
inline ScalarMatrix compatible_model_J() {
  ScalarMatrix J(4, 4);
  J.at(1, 0) = S(1);
  J.at(0, 1) = S(-1);
  J.at(3, 2) = S(1);
  J.at(2, 3) = S(-1);
  return J;
}

/// Genuinely Jacobi-violating input: [e1,e2] = e2, [e2,e3] = e1 leaves
/// [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = e1 != 0.
inline MetricLieAlgebra jacobi_violation() {
  return MetricLieAlgebra::from_brackets(3, {{0, 1, 1, S(1)}, {1, 2, 0, S(1)}});
}

inline bool vec_is_zero(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline bool vec_eq(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace liecurv::test
