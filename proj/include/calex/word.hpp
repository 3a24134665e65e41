#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "calex/error.hpp"
#include "calex/laurent.hpp"

namespace calex {

/// One letter x_gen^exp of a free-group word; gen is 1-based, exp is +-1.
struct Letter {
  int gen = 1;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in x_1, x_2, ...
class Word {
 public:
  Word() = default;

  /// Builds the free reduction of the given letter sequence.
  static Word from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const auto& l : letters) w.push(l);
    return w;
  }

  static Word generator(int gen, int exp = 1) {
    if (gen < 1) throw Error(ErrorKind::IndexOutOfRange, "generator indices are 1-based");
    Word w;
    const Letter l{gen, exp >= 0 ? 1 : -1};
    const int n = exp >= 0 ? exp : -exp;
    for (int i = 0; i < n; ++i) w.push(l);
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  int max_generator() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  Word& operator*=(const Word& o) {
    for (const auto& l : o.letters_) push(l);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Letter& l) {
    if (l.gen < 1 || (l.exp != 1 && l.exp != -1)) {
      throw Error(ErrorKind::IndexOutOfRange, "malformed letter");
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Composition

inline Word concat(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }

/// w^-1 a w
inline Word conjugate(const Word& a, const Word& w) { return w.inverse() * a * w; }

inline Word power(const Word& w, std::int64_t e) {
  const Word base = e >= 0 ? w : w.inverse();
  const auto n = e >= 0 ? e : -e;
  Word out;
  for (std::int64_t i = 0; i < n; ++i) out *= base;
  return out;
}

inline std::int64_t exponent_sum(const Word& w) {
  std::int64_t s = 0;
  for (const auto& l : w.letters()) s += l.exp;
  return s;
}

// ---------------------------------------------------------------------------
// Text form: "." for the empty word, otherwise tokens x<i>[^<e>].

inline std::string to_string(const Word& w) {
  if (w.empty()) return ".";
  std::ostringstream os;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const auto run = static_cast<long>(j - i) * ls[i].exp;
    if (!first) os << ' ';
    first = false;
    os << 'x' << ls[i].gen;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

inline Word parse_word(const std::string& text) {
  auto fail = [&](std::size_t pos, const std::string& what) -> Word {
    throw Error(ErrorKind::WordSyntax, "word syntax error at character " + std::to_string(pos) +
                                           " of '" + text + "': " + what);
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> std::optional<long long> {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits || pos - digits > 9) {
      pos = start;
      return std::nullopt;
    }
    return std::stoll(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    skip_ws();
    if (pos != text.size()) return fail(pos, "unexpected input after '.'");
    return Word{};
  }
  if (pos == text.size()) return fail(pos, "empty word (use '.')");

  std::vector<Letter> letters;
  while (pos < text.size()) {
    if (text[pos] != 'x') return fail(pos, "expected 'x'");
    ++pos;
    const auto gen = read_int(false);
    if (!gen || *gen < 1) return fail(pos, "expected a positive generator index");
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const auto parsed = read_int(true);
      if (!parsed || *parsed == 0) return fail(pos, "expected a nonzero exponent");
      e = *parsed;
    }
    const Letter l{static_cast<int>(*gen), e > 0 ? 1 : -1};
    for (long long i = 0; i < (e > 0 ? e : -e); ++i) letters.push_back(l);
    skip_ws();
  }
  return Word::from_letters(letters);
}

// ---------------------------------------------------------------------------
// Abelianized Fox calculus

/// nu_*(d r / d x_gen): single left-to-right scan with the prefix exponent sum s.
inline LaurentPoly fox_nu(const Word& r, int gen) {
  LaurentPoly out;
  std::int64_t s = 0;
  for (const auto& l : r.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        out.add_term(s, 1);
      } else {
        out.add_term(s - 1, -1);
      }
    }
    s += l.exp;
  }
  return out;
}

/// Decomposition r ~ w x_j w^-1 x_l^-1 (up to cyclic rotation of r).
struct ConjugationRelator {
  int j = 0;
  int l = 0;
  Word w;
  std::size_t rotation = 0;  // r rotated left by this many letters equals w x_j w^-1 x_l^-1
};

/// Finds a decomposition of r as w x_j w^-1 x_l^-1 after a cyclic rotation.
/// Trailing-slot candidates are scanned starting with the last letter of r
/// (no rotation), then the remaining positions left to right; for each, the
/// x_j slot is scanned left to right.
inline ConjugationRelator as_c_relation(const Word& r) {
  const auto& ls = r.letters();
  const std::size_t n = ls.size();
  if (n == 0 || exponent_sum(r) != 0 || n % 2 != 0) {
    throw Error(ErrorKind::NotConjugationRelator,
                "'" + to_string(r) + "' is not of the form w x_j w^-1 x_l^-1");
  }
  std::vector<std::size_t> slots;
  slots.push_back(n - 1);
  for (std::size_t p = 0; p + 1 < n; ++p) slots.push_back(p);

  for (const std::size_t p : slots) {
    if (ls[p].exp != -1) continue;
    // rotated = ls[p+1..] ls[..p], whose last letter is ls[p]
    std::vector<Letter> body;
    body.reserve(n - 1);
    for (std::size_t i = p + 1; i < n; ++i) body.push_back(ls[i]);
    for (std::size_t i = 0; i < p; ++i) body.push_back(ls[i]);
    const Word target = Word::from_letters(body);
    for (std::size_t q = 0; q < body.size(); ++q) {
      if (body[q].exp != 1) continue;
      const Word w = Word::from_letters(std::vector<Letter>(body.begin(), body.begin() + q));
      if (w * Word::generator(body[q].gen) * w.inverse() == target) {
        return {body[q].gen, ls[p].gen, w, (p + 1) % n};
      }
    }
  }
  throw Error(ErrorKind::NotConjugationRelator,
              "'" + to_string(r) + "' is not of the form w x_j w^-1 x_l^-1");
}

// ---------------------------------------------------------------------------
// Words realizing prescribed Fox derivatives

/// w_g(x_a, x_b): product over ascending terms c t^i of (x_b^i x_a x_b^-(i+1))^c
/// for c > 0 and (x_b^(i+1) x_a^-1 x_b^-i)^-c for c < 0.
inline Word w_of_poly(const LaurentPoly& g, int a, int b) {
  if (!g.is_polynomial()) throw Error(ErrorKind::NotPolynomial, "w_of_poly needs a polynomial");
  if (a == b) throw Error(ErrorKind::InvalidArgument, "w_of_poly needs distinct generators");
  Word out;
  for (const auto& [i, c] : g.terms()) {
    Word block;
    std::int64_t reps = 0;
    if (c > 0) {
      block = Word::generator(b, static_cast<int>(i)) * Word::generator(a) *
              Word::generator(b, -static_cast<int>(i + 1));
      reps = to_int64(c);
    } else {
      block = Word::generator(b, static_cast<int>(i + 1)) * Word::generator(a, -1) *
              Word::generator(b, -static_cast<int>(i));
      reps = to_int64(-c);
    }
    out *= power(block, reps);
  }
  return out;
}

/// w_g x_a w_g^-1 x_b^-1 for f = (1 - t) g + 1; its Fox image at x_a is f.
inline Word r_of_poly(const LaurentPoly& f, int a, int b) {
  const LaurentPoly g = split_unipotent(f);
  const Word w = w_of_poly(g, a, b);
  return w * Word::generator(a) * w.inverse() * Word::generator(b, -1);
}

/// w_u x_{m+1} w_u^-1 x_{m+1}^-1 with w_u = prod_i w_{g_i}(x_i, x_{m+1}); its Fox
/// image at x_i is (1 - t) g_i.
inline Word r_of_vector(const std::vector<LaurentPoly>& gs) {
  const int top = static_cast<int>(gs.size()) + 1;
  Word w;
  for (std::size_t i = 0; i < gs.size(); ++i) w *= w_of_poly(gs[i], static_cast<int>(i) + 1, top);
  return w * Word::generator(top) * w.inverse() * Word::generator(top, -1);
}

}  // namespace calex
