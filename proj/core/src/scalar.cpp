#include "liecurv/scalar.hpp"

#include <atomic>
#include <bit>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "liecurv/error.hpp"

namespace liecurv {

namespace {

// Radicands are kept small enough that trial-division square-free reduction is
// always exact.  Catalog data never exceeds two digits; the cap only guards
// pathological input.
constexpr std::uint64_t kRadicandMax = 1'000'000'000'000ULL;

std::atomic<int> g_max_field_generators{3};

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// m = outer^2 * sqfree with sqfree square-free.
struct ReducedRadicand {
  std::uint64_t sqfree;
  std::uint64_t outer;
};

ReducedRadicand reduce_radicand(std::uint64_t m) {
  if (m == 0) fail(errc::invalid_radicand, "radicand must be a positive integer");
  if (m > kRadicandMax) fail(errc::invalid_radicand, "radicand too large to canonicalize");
  ReducedRadicand r{1, 1};
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) { m /= p; ++e; }
    for (unsigned i = 0; i < e / 2; ++i) r.outer *= p;
    if (e & 1u) r.sqfree *= p;
  }
  r.sqfree *= m;  // leftover is 1 or prime
  return r;
}

std::uint64_t smallest_prime_factor(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
    if (m % p == 0) return p;
  return m;
}

// Product of square-free classes modulo squares: (a/g)*(b/g), g = gcd(a,b).
std::uint64_t class_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  unsigned __int128 prod = static_cast<unsigned __int128>(a / g) * (b / g);
  if (prod > kRadicandMax) fail(errc::invalid_radicand, "radicand product too large");
  return static_cast<std::uint64_t>(prod);
}

// F2 basis of the radicand lattice in Q*/(Q*)^2, kept in reduced echelon form:
// pivot(i) divides cls(i) and no other basis class.  With that invariant a
// single ordered elimination pass fully reduces any class in the span.
struct RadicalBasis {
  struct Elt {
    std::uint64_t pivot;
    std::uint64_t cls;
  };
  std::vector<Elt> elts;

  std::pair<std::uint64_t, unsigned> reduce(std::uint64_t m) const {
    unsigned mask = 0;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      if (m % elts[i].pivot == 0) {
        m = class_mul(m, elts[i].cls);
        mask |= 1u << i;
      }
    }
    return {m, mask};
  }

  // Returns false if m was already in the span.
  bool insert(std::uint64_t m) {
    auto [red, mask] = reduce(m);
    (void)mask;
    if (red == 1) return false;
    std::uint64_t p = smallest_prime_factor(red);
    for (auto& e : elts)
      if (e.cls % p == 0) e.cls = class_mul(e.cls, red);
    elts.push_back({p, red});
    return true;
  }
};

struct ConjugateData {
  RadicalBasis basis;
  // (radicand, coefficient, basis mask) per term.
  std::vector<std::tuple<std::uint64_t, Rational, unsigned>> terms;
  int k() const { return static_cast<int>(basis.elts.size()); }
};

Rational pow2_den(const mpz_class& num, unsigned t) {
  mpz_class den = 1;
  den <<= t;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

// ============================ construction ============================

Scalar::Scalar(const Rational& q) {
  if (sgn(q) != 0) terms_[1] = q;
}

Scalar::Scalar(const Rational& q, std::uint64_t radicand) {
  ReducedRadicand r = reduce_radicand(radicand);
  Rational coeff = q * Rational(static_cast<unsigned long>(r.outer));
  if (sgn(coeff) != 0) terms_[r.sqfree] = coeff;
}

Scalar Scalar::over_sqrt(const Rational& q, std::uint64_t radicand) {
  ReducedRadicand r = reduce_radicand(radicand);
  // q / (outer*sqrt(sqfree)) = q/(outer*sqfree) * sqrt(sqfree)
  Rational coeff = q / Rational(static_cast<unsigned long>(r.outer * r.sqfree));
  return Scalar(coeff, r.sqfree);
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Scalar::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Scalar::as_rational() const {
  if (!is_rational()) fail(errc::internal_error, "scalar " + str() + " is not rational");
  return rational_part();
}

void Scalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

// ============================ ring operations ============================

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, q] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, q);
    if (!inserted) it->second += q;
  }
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, q] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, -q);
    if (!inserted) it->second -= q;
  }
  prune();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  TermMap out;
  for (const auto& [m, qm] : terms_) {
    for (const auto& [n, qn] : o.terms_) {
      std::uint64_t g = std::gcd(m, n);
      std::uint64_t rad = class_mul(m, n);  // (m/g)*(n/g), square-free
      Rational coeff = qm * qn * Rational(static_cast<unsigned long>(g));
      auto [it, inserted] = out.emplace(rad, coeff);
      if (!inserted) it->second += coeff;
    }
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

// ============================ inversion ============================

namespace {

ConjugateData conjugate_data(const Scalar::TermMap& terms) {
  ConjugateData cd;
  for (const auto& [m, q] : terms)
    if (m != 1) cd.basis.insert(m);
  for (const auto& [m, q] : terms) {
    unsigned mask = 0;
    if (m != 1) {
      auto [red, mk] = cd.basis.reduce(m);
      if (red != 1) fail(errc::internal_error, "radicand escaped its own lattice");
      mask = mk;
    }
    cd.terms.emplace_back(m, q, mask);
  }
  return cd;
}

Scalar apply_character(const ConjugateData& cd, unsigned eps) {
  Scalar out;
  for (const auto& [m, q, mask] : cd.terms) {
    bool flip = std::popcount(mask & eps) & 1;
    out += Scalar(flip ? Rational(-q) : q, m);
  }
  return out;
}

}  // namespace

int Scalar::max_field_generators() { return g_max_field_generators.load(); }

void Scalar::set_max_field_generators(int k) {
  if (k < 1) fail(errc::invalid_params, "field generator bound must be >= 1");
  g_max_field_generators.store(k);
}

Scalar Scalar::invert() const {
  if (is_zero()) fail(errc::division_by_zero, "cannot invert zero");
  if (is_rational()) return Scalar(Rational(1) / rational_part());

  ConjugateData cd = conjugate_data(terms_);
  int k = cd.k();
  if (k > max_field_generators())
    fail(errc::field_degree_exceeded,
         "value needs " + std::to_string(k) + " independent radicals (bound " +
             std::to_string(max_field_generators()) + ")");

  Scalar prod(1);
  for (unsigned eps = 1; eps < (1u << k); ++eps) prod *= apply_character(cd, eps);

  Scalar norm = prod * (*this);
  if (!norm.is_rational() || norm.is_zero())
    fail(errc::internal_error, "Galois norm of " + str() + " is not a nonzero rational");

  Rational scale = Rational(1) / norm.rational_part();
  Scalar out;
  for (const auto& [m, q] : prod.terms_) out.terms_[m] = q * scale;
  out.prune();
  return out;
}

// ============================ sign and floats ============================

namespace {

struct Interval {
  Rational lo, hi;
};

// Outward dyadic enclosure of the value at 2^-t radical precision.
Interval interval_eval(const Scalar::TermMap& terms, unsigned t) {
  Interval acc{Rational(0), Rational(0)};
  for (const auto& [m, q] : terms) {
    if (m == 1) {
      acc.lo += q;
      acc.hi += q;
      continue;
    }
    mpz_class shifted = mpz_class(static_cast<unsigned long>(m));
    shifted <<= 2 * t;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
    Rational lo_m = pow2_den(s, t);
    Rational hi_m = pow2_den(s + 1, t);
    if (sgn(q) >= 0) {
      acc.lo += q * lo_m;
      acc.hi += q * hi_m;
    } else {
      acc.lo += q * hi_m;
      acc.hi += q * lo_m;
    }
  }
  return acc;
}

// Positive lower bound on |a| for nonzero a: |Norm(a)| / U^(2^k - 1) where U
// bounds every conjugate's absolute value.
Rational separation_bound(const Scalar::TermMap& terms) {
  ConjugateData cd = conjugate_data(terms);
  int k = cd.k();
  Scalar norm(1);
  for (unsigned eps = 0; eps < (1u << k); ++eps) norm *= apply_character(cd, eps);
  if (!norm.is_rational() || norm.is_zero())
    fail(errc::internal_error, "norm degenerated in separation bound");

  Rational u(0);
  for (const auto& [m, q] : terms) {
    mpz_class root;
    mpz_class mm(static_cast<unsigned long>(m));
    mpz_sqrt(root.get_mpz_t(), mm.get_mpz_t());
    u += abs(q) * Rational(root + 1);
  }
  Rational denom(1);
  for (unsigned i = 1; i < (1u << k); ++i) denom *= u;
  return abs(norm.rational_part()) / denom;
}

}  // namespace

int Scalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);

  Rational bound;
  bool have_bound = false;
  for (unsigned t = 32;; t *= 2) {
    Interval iv = interval_eval(terms_, t);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    if (!have_bound) {
      bound = separation_bound(terms_);
      have_bound = true;
    }
    if (iv.hi - iv.lo < bound)
      fail(errc::internal_error, "sign refinement collapsed below separation bound");
  }
}

double Scalar::to_double() const {
  if (terms_.empty()) return 0.0;
  Interval iv = interval_eval(terms_, 64);
  Rational mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

int compare(const Scalar& a, const Scalar& b) { return (a - b).sign(); }

// ============================ text form ============================

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << '-';
      first = false;
    } else {
      os << (sgn(q) < 0 ? '-' : '+');
    }
    os << mag.get_str();
    if (m != 1) os << "*sqrt(" << m << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void die(const std::string& what) {
    fail(errc::parse_error, what + " at offset " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\"");
  }
  mpz_class digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) die("expected digits");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) die(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  // term := rational ('*sqrt(' natural ')')?   with the sign already consumed.
  Scalar term(bool negative) {
    mpz_class num = digits();
    mpz_class den = 1;
    if (accept('/')) {
      den = digits();
      if (sgn(Rational(den)) <= 0) die("denominator must be positive");
    }
    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    std::uint64_t rad = 1;
    if (accept('*')) {
      if (!accept_word("sqrt(")) die("expected sqrt(");
      mpz_class r = digits();
      if (!r.fits_ulong_p() || r == 0) die("radicand out of range");
      rad = r.get_ui();
      expect(')');
    }
    return Scalar(q, rad);
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Parser p{text};
  if (p.eof()) p.die("empty scalar");
  Scalar out;
  bool neg = p.accept('-');
  if (!neg) p.accept('+');
  out += p.term(neg);
  while (!p.eof()) {
    if (p.accept('+'))
      out += p.term(false);
    else if (p.accept('-'))
      out += p.term(true);
    else
      p.die("expected '+' or '-'");
  }
  return out;
}

}  // namespace liecurv
