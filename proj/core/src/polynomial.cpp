#include "liecurv/polynomial.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "liecurv/error.hpp"

namespace liecurv {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Scalar c) {
  std::vector<Scalar> v;
  v.push_back(std::move(c));
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[i];
}

const Scalar& Polynomial::leading() const {
  if (c_.empty()) fail(errc::internal_error, "zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(d));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) fail(errc::division_by_zero, "cannot normalize the zero polynomial");
  Scalar inv = leading().invert();
  std::vector<Scalar> c(c_);
  for (Scalar& s : c) s = s * inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> c(c_);
  for (Scalar& s : c) s = -s;
  return Polynomial(std::move(c));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Scalar c = coeff(d);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!out.empty()) {
      if (cs[0] == '-') {
        cs = (-c).str();
        out += " - ";
      } else {
        out += " + ";
      }
    }
    if (d == 0) {
      out += cs;
      continue;
    }
    std::string xs = d == 1 ? var : var + "^" + std::to_string(d);
    if (cs == "1") {
      out += xs;
    } else if (cs == "-1") {
      out += "-" + xs;
    } else {
      bool paren = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
      out += (paren ? "(" + cs + ")" : cs) + "*" + xs;
    }
  }
  return out;
}

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  Polynomial rem = a;
  std::vector<Scalar> quot;
  int db = b.degree();
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Scalar());
  Scalar lead_inv = b.leading().invert();
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Scalar factor = rem.leading() * lead_inv;
    quot[shift] = factor;
    std::vector<Scalar> sub(shift + db + 1);
    for (int i = 0; i <= db; ++i) sub[shift + i] = factor * b.coeff(i);
    rem = rem - Polynomial(std::move(sub));
    if (!rem.is_zero() && rem.degree() >= shift + db)
      fail(errc::internal_error, "polynomial division failed to reduce the degree");
  }
  return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero())
    fail(errc::invalid_params, "gcd of two zero polynomials is undefined");
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial char_poly(const ScalarMatrix& M) {
  if (M.rows() != M.cols()) fail(errc::invalid_params, "characteristic polynomial needs a square matrix");
  int n = M.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ScalarMatrix Mk(n, n);  // zero
  for (int k = 1; k <= n; ++k) {
    // Mk <- M * (Mk + c[n-k+1] * I);  c[n-k] = -tr(Mk) / k
    for (int i = 0; i < n; ++i) Mk.at(i, i) += c[n - k + 1];
    Mk = M * Mk;
    c[n - k] = -(Mk.trace() * Scalar(Rational(1, k)));
  }
  return Polynomial(std::move(c));
}

ScalarMatrix eval_matrix(const Polynomial& p, const ScalarMatrix& M) {
  if (M.rows() != M.cols()) fail(errc::invalid_params, "matrix evaluation needs a square matrix");
  int n = M.rows();
  ScalarMatrix acc(n, n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * M;
    Scalar cd = p.coeff(d);
    if (!cd.is_zero())
      for (int i = 0; i < n; ++i) acc.at(i, i) += cd;
  }
  return acc;
}

// ====================== real-root isolation ======================

namespace {

/// Exact rational upper bound on |s|: sum over terms of |q|(floor(sqrt(m))+1).
Rational magnitude_bound(const Scalar& s) {
  Rational u = 0;
  for (const auto& [m, q] : s.terms()) {
    mpz_class root;
    mpz_class rad(static_cast<unsigned long>(m));
    mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
    mpz_class root_up = root + 1;
    Rational qa = abs(q);
    u += qa * Rational(root_up);
  }
  return u;
}

/// Integer B with every real root of monic p strictly inside (-B, B).
mpz_class cauchy_bound(const Polynomial& p) {
  Rational mx = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational m = magnitude_bound(p.coeff(i));
    if (m > mx) mx = m;
  }
  Rational b = mx + 2;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  return q;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  while (seq.back().degree() >= 1) {
    Polynomial r = -poly_divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  Scalar sx{x};
  int prev = 0, v = 0;
  for (const Polynomial& p : seq) {
    int s = p.eval(sx).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

/// Number of distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0.
int count_roots(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

struct RootBox {
  Rational lo, hi;  // equal when the root was found exactly
  bool exact = false;
};

const Rational kRootWidth(1, 1000000000000UL);  // 1e-12

/// Isolating boxes for all real roots of a monic squarefree polynomial, each
/// refined below kRootWidth; exact rational hits are deflated out so interval
/// endpoints are never roots.
std::vector<RootBox> isolate_roots(Polynomial h) {
  std::vector<RootBox> out;
  bool restart = true;
  while (restart && h.degree() >= 1) {
    restart = false;
    auto deflate = [&](const Rational& root) {
      out.push_back({root, root, true});
      std::vector<Scalar> lin{Scalar(-root), Scalar(1)};
      h = poly_divmod(h, Polynomial(std::move(lin))).quot;
      restart = true;
    };
    std::vector<Polynomial> seq = sturm_sequence(h);
    mpz_class B = cauchy_bound(h);
    mpz_class negB = -B;
    Rational lo{negB}, hi{B};
    std::vector<std::tuple<Rational, Rational, int>> stack;
    std::vector<RootBox> boxes;
    stack.emplace_back(lo, hi, count_roots(seq, lo, hi));
    while (!stack.empty() && !restart) {
      auto [a, b, cnt] = stack.back();
      stack.pop_back();
      if (cnt == 0) continue;
      if (cnt == 1) {
        while (b - a >= kRootWidth) {
          Rational mid = (a + b) / 2;
          if (h.eval(Scalar(mid)).is_zero()) {
            deflate(mid);
            break;
          }
          if (count_roots(seq, a, mid) == 1)
            b = mid;
          else
            a = mid;
        }
        if (!restart) boxes.push_back({a, b, false});
        continue;
      }
      Rational mid = (a + b) / 2;
      if (h.eval(Scalar(mid)).is_zero()) {
        deflate(mid);
        break;
      }
      int left = count_roots(seq, a, mid);
      stack.emplace_back(a, mid, left);
      stack.emplace_back(mid, b, cnt - left);
    }
    if (!restart) out.insert(out.end(), boxes.begin(), boxes.end());
  }
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace

std::vector<SpectrumEntry> polynomial_real_roots(const Polynomial& p) {
  if (p.is_zero()) fail(errc::invalid_params, "the zero polynomial has every value as a root");
  if (p.degree() == 0) return {};
  Polynomial f = p.monic();

  // Repeated gcd chain: a root of multiplicity m in f appears in g_1..g_{m-1}.
  std::vector<Polynomial> chain;
  Polynomial g = f;
  while (g.degree() >= 1) {
    Polynomial gi = poly_gcd(g, g.derivative());
    if (gi.degree() < 1) break;
    chain.push_back(gi);
    g = chain.back();
  }
  Polynomial h = chain.empty() ? f : poly_divmod(f, chain.front()).quot;  // squarefree part

  std::vector<SpectrumEntry> entries;
  for (const RootBox& box : isolate_roots(h)) {
    int mult = 1;
    for (const Polynomial& gi : chain) {
      bool has_root;
      if (box.exact) {
        has_root = gi.eval(Scalar(box.lo)).is_zero();
      } else {
        has_root = count_roots(sturm_sequence(gi), box.lo, box.hi) > 0;
      }
      if (!has_root) break;  // the chain is nested, so absence is final
      ++mult;
    }
    Rational mid = box.exact ? box.lo : (box.lo + box.hi) / 2;
    entries.push_back({to_double(mid), mult});
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
  return entries;
}

std::vector<SpectrumEntry> numeric_spectrum(const ScalarMatrix& M) {
  return polynomial_real_roots(char_poly(M));
}

}  // namespace liecurv
