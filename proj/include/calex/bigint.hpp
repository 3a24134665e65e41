#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "calex/error.hpp"

namespace calex {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt parse_decimal(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error(ErrorKind::InvalidArgument, "not a decimal integer: '" + text + "'");
  }
  return r;
}

inline bool fits_int64(const BigInt& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) {
    throw Error(ErrorKind::InvalidArgument, "integer too large: " + to_decimal(v));
  }
  return static_cast<std::int64_t>(v.get_si());
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Non-negative remainder for positive modulus.
inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline int cmp_abs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline bool divides(const BigInt& d, const BigInt& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::vector<std::string> to_decimal(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace calex
