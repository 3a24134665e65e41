#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "calex/bigint.hpp"
#include "calex/error.hpp"

namespace calex {

/// Element of Z[t, t^-1]. Terms are kept as exponent -> nonzero coefficient;
/// the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) { add_term(0, big(constant)); }  // NOLINT
  LaurentPoly(const BigInt& constant) { add_term(0, constant); }      // NOLINT

  static LaurentPoly monomial(const BigInt& coefficient, Exponent exponent) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
  }
  static LaurentPoly t(Exponent exponent = 1) { return monomial(1, exponent); }

  static LaurentPoly from_terms(const TermMap& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  /// Polynomial from ascending coefficients a_0 + a_1 t + ...
  static LaurentPoly from_coefficients(const std::vector<BigInt>& coeffs, Exponent low = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      p.add_term(low + static_cast<Exponent>(i), coeffs[i]);
    }
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // degree()/low_degree() of the zero polynomial are 0 by convention.
  Exponent degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Exponent low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  Exponent span() const { return degree() - low_degree(); }

  BigInt leading_coefficient() const {
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
  }
  BigInt trailing_coefficient() const {
    return terms_.empty() ? BigInt(0) : terms_.begin()->second;
  }
  BigInt coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  bool is_polynomial() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  /// Multiply by t^s.
  LaurentPoly shifted(Exponent s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const BigInt& s) {
    if (s == 0) return {};
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  TermMap terms_;
};

inline LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation and canonical forms

/// Exact value at t := n.
inline BigInt eval_at(const LaurentPoly& p, const BigInt& n) {
  if (n == 0) {
    if (!p.is_polynomial()) {
      throw Error(ErrorKind::ZeroAtNegativeExponent,
                  "cannot evaluate a polynomial with negative exponents at 0");
    }
    return p.coefficient(0);
  }
  if (p.is_zero()) return 0;
  // Horner over the span gives n^{-low} * p(n).
  const auto low = p.low_degree();
  BigInt acc = 0;
  for (auto e = p.degree();; --e) {
    acc = acc * n + p.coefficient(e);
    if (e == low) break;
  }
  if (low >= 0) return acc * ipow(n, static_cast<unsigned long>(low));
  const BigInt denom = ipow(n, static_cast<unsigned long>(-low));
  if (!divides(denom, acc)) {
    throw Error(ErrorKind::InvalidArgument, "value at " + to_decimal(n) + " is not an integer");
  }
  return acc / denom;
}

inline BigInt eval_at(const LaurentPoly& p, std::int64_t n) { return eval_at(p, big(n)); }

/// Representative of p's orbit under the units +-t^k: lowest exponent 0 and
/// positive leading coefficient.
inline LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.low_degree());
  if (r.leading_coefficient() < 0) r = -r;
  return r;
}

inline bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_unit(a) == normalize_unit(b);
}

inline BigInt content(const LaurentPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

inline LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  LaurentPoly r;
  for (const auto& [e, coef] : p.terms()) r.add_term(e, coef / c);
  return r;
}

/// Exact quotient a / b in Lambda when b divides a with integral quotient,
/// otherwise nullopt. Division by zero yields nullopt.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly{};
  LaurentPoly rem = a.shifted(-a.low_degree());
  const LaurentPoly den = b.shifted(-b.low_degree());
  const auto shift = a.low_degree() - b.low_degree();
  const auto den_deg = den.degree();
  const BigInt den_lc = den.leading_coefficient();
  LaurentPoly quotient;
  while (!rem.is_zero() && rem.degree() >= den_deg) {
    const BigInt lc = rem.leading_coefficient();
    if (!divides(den_lc, lc)) return std::nullopt;
    const LaurentPoly term = LaurentPoly::monomial(lc / den_lc, rem.degree() - den_deg);
    quotient += term;
    rem -= term * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient.shifted(shift);
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& a) {
  return exact_divide(a, d).has_value();
}

namespace detail {

// Pseudo-remainder of polynomials a, b (b nonzero, both with low degree >= 0).
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const auto db = b.degree();
  const BigInt lb = b.leading_coefficient();
  while (!a.is_zero() && a.degree() >= db) {
    const BigInt la = a.leading_coefficient();
    a = a * lb - LaurentPoly::monomial(la, a.degree() - db) * b;
  }
  return a;
}

}  // namespace detail

/// GCD in Z[t] of the shifted-to-polynomial inputs, as (gcd of contents) times
/// the primitive GCD, reported in unit-normal form.
inline LaurentPoly gcd_primitive(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return normalize_unit(q);
  if (q.is_zero()) return normalize_unit(p);
  const BigInt c = gcd(content(p), content(q));
  LaurentPoly a = primitive_part(p.shifted(-p.low_degree()));
  LaurentPoly b = primitive_part(q.shifted(-q.low_degree()));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentPoly r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return normalize_unit(a * c);
}

// ---------------------------------------------------------------------------
// Unipotent splitting and cyclotomics

/// g with f = (1 - t) g + 1, for a polynomial f with f(1) = 1.
inline LaurentPoly split_unipotent(const LaurentPoly& f) {
  if (!f.is_polynomial()) {
    throw Error(ErrorKind::NotUnipotentSplit, "polynomial has negative exponents");
  }
  if (eval_at(f, 1) != 1) {
    throw Error(ErrorKind::NotUnipotentSplit, "value at 1 is not 1");
  }
  const auto g = exact_divide(f - LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t());
  // f - 1 vanishes at 1, so (1 - t) always divides it.
  return *g;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Smallest prime factor of n >= 2 (trial division).
inline std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

/// True for p^r with p prime, r >= 1.
inline bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  const auto p = smallest_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

/// d-th cyclotomic polynomial, by exact division of t^d - 1 by the lower ones.
inline LaurentPoly cyclotomic(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be >= 1");
  LaurentPoly result = LaurentPoly::t(d) - LaurentPoly(1);
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e == 0) result = *exact_divide(result, cyclotomic(e));
  }
  return result;
}

/// Factorization of g (up to sign) into cyclotomic factors, as d -> multiplicity.
/// nullopt when g is not +-(product of cyclotomics). The zero polynomial and
/// non-polynomials are rejected.
inline std::optional<std::map<std::int64_t, int>> cyclotomic_factorization(const LaurentPoly& g) {
  if (g.is_zero() || !g.is_polynomial()) return std::nullopt;
  LaurentPoly rest = g;
  std::map<std::int64_t, int> factors;
  const auto deg = g.degree();
  // phi(d) <= deg forces d <= 2 deg^2 (crude but sufficient: phi(d) >= sqrt(d/2)).
  const std::int64_t bound = std::max<std::int64_t>(2, 2 * deg * deg + 2);
  for (std::int64_t d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > rest.degree()) continue;
    const LaurentPoly phi = cyclotomic(d);
    while (true) {
      auto q = exact_divide(rest, phi);
      if (!q) break;
      rest = *q;
      ++factors[d];
    }
  }
  if (rest != LaurentPoly(1) && rest != LaurentPoly(-1)) return std::nullopt;
  return factors;
}

struct AdmissibilityReport {
  bool ok = false;
  std::vector<std::string> violated;  // rule ids "i".."v"
  std::map<std::int64_t, int> cyclotomic_factors;
};

/// Necessary conditions on g for Lambda/(g) to be (t-1)-invertible and
/// t-unipotent: (i) product of cyclotomics, (ii) no repeated factor, (iii) no
/// factor Phi_{p^r} (including Phi_1), (iv) g(1) = +-1, (v) even degree.
inline AdmissibilityReport unipotent_admissible(const LaurentPoly& g) {
  if (g.is_zero() || !g.is_polynomial()) {
    throw Error(ErrorKind::NotPolynomial, "admissibility needs a nonzero polynomial");
  }
  AdmissibilityReport report;
  const LaurentPoly h = g.shifted(-g.low_degree());
  const auto factors = cyclotomic_factorization(h);
  if (!factors) {
    report.violated.push_back("i");
  } else {
    report.cyclotomic_factors = *factors;
    bool repeated = false;
    bool prime_power = false;
    for (const auto& [d, mult] : *factors) {
      if (mult > 1) repeated = true;
      if (d == 1 || is_prime_power(d)) prime_power = true;
    }
    if (repeated) report.violated.push_back("ii");
    if (prime_power) report.violated.push_back("iii");
  }
  const BigInt at_one = eval_at(h, 1);
  if (at_one != 1 && at_one != -1) report.violated.push_back("iv");
  if (h.degree() % 2 != 0) report.violated.push_back("v");
  report.ok = report.violated.empty();
  return report;
}

/// Coefficient vector of p in Z[t]/(t^k - 1); entry j collects exponents e = j (mod k).
inline std::vector<BigInt> reduce_mod_cyclic(const LaurentPoly& p, std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "cyclic modulus must be >= 1");
  std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
  for (const auto& [e, c] : p.terms()) {
    auto r = e % k;
    if (r < 0) r += k;
    out[static_cast<std::size_t>(r)] += c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: descending exponents, e.g. "t^2 - t + 1", "3t - 2", "t^-1 + 1".

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first;
    BigInt c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : original_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        stripped_.push_back(ch);
      }
    }
  }

  LaurentPoly parse() {
    if (stripped_.empty()) fail("empty polynomial");
    LaurentPoly result;
    bool first = true;
    while (pos_ < stripped_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term() * big(sign);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < stripped_.size() ? stripped_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::PolySyntax, "polynomial syntax error at character " +
                                          std::to_string(pos_) + " of '" + original_ + "': " + what);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(stripped_[pos_++]);
    return out;
  }

  LaurentPoly parse_term() {
    BigInt coefficient = 1;
    const std::string number = digits();
    if (!number.empty()) coefficient = BigInt(number);
    if (peek() != 't') {
      if (number.empty()) fail("expected a coefficient or 't'");
      return LaurentPoly(coefficient);
    }
    ++pos_;
    LaurentPoly::Exponent exponent = 1;
    if (peek() == '^') {
      ++pos_;
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      const std::string e = digits();
      if (e.empty() || e.size() > 17) fail("expected an exponent");
      exponent = sign * std::stoll(e);
    }
    return LaurentPoly::monomial(coefficient, exponent);
  }

  std::string original_;
  std::string stripped_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

}  // namespace calex
