#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "calex/cgroup.hpp"
#include "calex/error.hpp"
#include "calex/laurent.hpp"
#include "calex/polymatrix.hpp"
#include "calex/zmodule.hpp"

namespace calex {

/// Lambda^ncols / (row span).
using LambdaPresentation = PolyMatrix;

inline constexpr std::int64_t kDefaultExpansionLimit = 4096;

/// A_k = M / (t^k - 1) M as an abelian group with its t-action.
struct DerivedModule {
  std::int64_t k = 1;
  FgAbelianGroup group;
  GroupEndo t_action;
  bool t1_invertible = false;
  std::optional<std::int64_t> t_order;
  std::optional<BigInt> order;
  std::vector<std::string> warnings;
};

/// Expands P over Z[t]/(t^k - 1): generator block c holds t^0..t^{k-1} e_c,
/// each row r contributes r, t r, ..., t^{k-1} r, and t is the block cyclic shift.
inline DerivedModule derived(const LambdaPresentation& P, std::int64_t k,
                             std::int64_t expansion_limit = kDefaultExpansionLimit) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "derived module index must be >= 1");
  const auto n = static_cast<std::int64_t>(P.cols);
  if (n > 0 && k > expansion_limit / n) {
    throw Error(ErrorKind::ExpansionTooLarge,
                "expansion " + std::to_string(k) + " x " + std::to_string(n) + " exceeds the limit " +
                    std::to_string(expansion_limit));
  }
  const auto ku = static_cast<std::size_t>(k);
  const std::size_t N = P.cols * ku;
  IntMatrix R(N, P.rows.size() * ku);
  for (std::size_t j = 0; j < P.rows.size(); ++j) {
    for (std::size_t c = 0; c < P.cols; ++c) {
      const std::vector<BigInt> coeffs = reduce_mod_cyclic(P.rows[j][c], k);
      for (std::size_t shift = 0; shift < ku; ++shift) {
        for (std::size_t a = 0; a < ku; ++a) {
          if (coeffs[a] != 0) R(c * ku + (a + shift) % ku, j * ku + shift) = coeffs[a];
        }
      }
    }
  }
  IntMatrix T(N, N);
  for (std::size_t c = 0; c < P.cols; ++c) {
    for (std::size_t a = 0; a < ku; ++a) T(c * ku + (a + 1) % ku, c * ku + a) = 1;
  }
  DerivedModule d;
  d.k = k;
  d.group = cokernel(R);
  d.t_action = induced_endo(T, d.group);
  d.t1_invertible = is_automorphism(d.t_action.minus_identity());
  d.t_order = endo_order(d.t_action, k);
  d.order = d.group.order();
  if (!d.t_order || k % *d.t_order != 0) {
    throw Error(ErrorKind::InvalidArgument, "internal: t^k is not the identity on A_k");
  }
  return d;
}

inline DerivedModule derived_of_group(const CPresentation& p, std::int64_t k,
                                      std::int64_t expansion_limit = kDefaultExpansionLimit) {
  const bool irreducible = is_irreducible(p);
  DerivedModule d = derived(reduced_matrix(p), k, expansion_limit);
  if (!irreducible) {
    d.warnings.push_back("presentation graph is disconnected; the reduced matrix need not present A_k(G)");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Fingerprints

struct GroupInvariants {
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;

  static GroupInvariants of(const FgAbelianGroup& g) { return {g.invariant_factors(), g.free_rank()}; }
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Isomorphism invariants of (group, t). Cokernels of t^d - 1 are recorded for
/// divisors d of the t-order only: for other d they coincide with the one at
/// gcd(d, t-order).
struct Fingerprint {
  GroupInvariants group;
  std::int64_t t_order = 1;
  std::map<std::int64_t, GroupInvariants> cokernels;
  LaurentPoly charpoly = LaurentPoly(1);

  bool is_trivial() const { return group.invariant_factors.empty() && group.free_rank == 0; }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier (exact over Z).
inline LaurentPoly characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const IntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / big(static_cast<std::int64_t>(k));
  }
  return LaurentPoly::from_coefficients(c);
}

}  // namespace detail

/// Fingerprint of a group with endomorphism t (an automorphism of finite order <= order_bound).
inline Fingerprint fingerprint(const GroupEndo& t, std::int64_t order_bound) {
  Fingerprint fp;
  const FgAbelianGroup& g = t.group();
  fp.group = GroupInvariants::of(g);
  const auto ord = endo_order(t, order_bound);
  if (!ord) throw Error(ErrorKind::InvalidArgument, "t has no finite order within the bound");
  fp.t_order = *ord;
  for (const auto d : detail::divisors(*ord)) {
    fp.cokernels.emplace(d, GroupInvariants::of(endo_cokernel(t.power(d).minus_identity())));
  }
  // Free coordinates come last among the effective coordinates.
  const std::size_t e = g.dimension();
  const std::size_t free = g.free_rank();
  const std::size_t tors = e - free;
  IntMatrix block(free, free);
  for (std::size_t i = 0; i < free; ++i) {
    for (std::size_t j = 0; j < tors; ++j) {
      if (t.matrix()(tors + i, j) != 0) {
        throw Error(ErrorKind::InvalidArgument, "internal: torsion is not t-invariant");
      }
    }
    for (std::size_t j = 0; j < free; ++j) block(i, j) = t.matrix()(tors + i, tors + j);
  }
  fp.charpoly = normalize_unit(detail::characteristic_polynomial(block));
  return fp;
}

inline Fingerprint fingerprint(const DerivedModule& d) { return fingerprint(d.t_action, d.k); }

/// Fingerprint of the direct sum of two modules.
inline Fingerprint combine(const Fingerprint& a, const Fingerprint& b) {
  auto merge = [](const GroupInvariants& x, const GroupInvariants& y) {
    std::vector<BigInt> orders = x.invariant_factors;
    orders.insert(orders.end(), y.invariant_factors.begin(), y.invariant_factors.end());
    return GroupInvariants{invariant_factors_of_cyclics(orders), x.free_rank + y.free_rank};
  };
  Fingerprint fp;
  fp.group = merge(a.group, b.group);
  fp.t_order = std::lcm(a.t_order, b.t_order);
  for (const auto d : detail::divisors(fp.t_order)) {
    fp.cokernels.emplace(d, merge(a.cokernels.at(std::gcd(d, a.t_order)), b.cokernels.at(std::gcd(d, b.t_order))));
  }
  fp.charpoly = normalize_unit(a.charpoly * b.charpoly);
  return fp;
}

inline std::string to_string(const GroupInvariants& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : g.invariant_factors) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (g.free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (g.free_rank > 1) os << '^' << g.free_rank;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Alexander polynomial

struct AlexanderPolynomial {
  LaurentPoly delta;
  std::vector<std::string> warnings;
};

namespace detail {

/// Determinant over Lambda by fraction-free elimination with exact division.
inline LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = *exact_divide(num, prev);
      }
      m[i][k] = LaurentPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace detail

inline std::optional<LaurentPoly> polynomial_determinant(const PolyMatrix& m) {
  if (m.row_count() != m.cols) return std::nullopt;
  return detail::determinant(m.rows);
}

/// Unit-normalized GCD of all maximal (ncols x ncols) minors.
inline AlexanderPolynomial alexander_polynomial(const LambdaPresentation& P, std::size_t max_minors = 200000) {
  AlexanderPolynomial out;
  const std::size_t n = P.cols;
  const std::size_t s = P.row_count();
  if (n == 0) {
    out.delta = LaurentPoly(1);
    return out;
  }
  if (s < n) {
    out.warnings.push_back("NotTorsion: fewer relations than generators, the module has positive rank");
    return out;
  }
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  LaurentPoly g;
  std::size_t visited = 0;
  while (true) {
    if (++visited > max_minors) {
      throw Error(ErrorKind::ExpansionTooLarge, "too many maximal minors");
    }
    std::vector<std::vector<LaurentPoly>> minor;
    minor.reserve(n);
    for (const auto r : pick) minor.push_back(P.rows[r]);
    g = gcd_primitive(g, detail::determinant(std::move(minor)));
    if (g == LaurentPoly(1)) break;
    // next combination
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == s - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (g.is_zero()) out.warnings.push_back("NotTorsion: all maximal minors vanish");
  out.delta = g;
  return out;
}

/// Lambda / (delta) is finitely generated over Z iff the extreme coefficients are units.
inline bool is_finitely_z_generated(const LaurentPoly& delta) {
  if (delta.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero Alexander polynomial");
  const BigInt lead = abs(delta.leading_coefficient());
  const BigInt trail = abs(delta.trailing_coefficient());
  return lead == 1 && trail == 1;
}

// ---------------------------------------------------------------------------
// Sequences and sums

struct SequenceResult {
  std::vector<DerivedModule> modules;     // A_1 .. A_K
  std::vector<Fingerprint> fingerprints;  // of the same
  std::optional<std::int64_t> period;
};

inline std::optional<std::int64_t> detect_period(const std::vector<Fingerprint>& fps) {
  const auto K = static_cast<std::int64_t>(fps.size());
  for (std::int64_t p = 1; p < K; ++p) {
    bool ok = true;
    for (std::int64_t n = 0; n + p < K && ok; ++n) ok = fps[n] == fps[n + p];
    if (ok) return p;
  }
  return std::nullopt;
}

inline SequenceResult sequence(const LambdaPresentation& P, std::int64_t K,
                               std::int64_t expansion_limit = kDefaultExpansionLimit) {
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "sequence length must be >= 1");
  SequenceResult out;
  for (std::int64_t k = 1; k <= K; ++k) {
    out.modules.push_back(derived(P, k, expansion_limit));
    out.fingerprints.push_back(fingerprint(out.modules.back()));
  }
  out.period = detect_period(out.fingerprints);
  return out;
}

/// Block-diagonal presentation of the direct sum.
inline LambdaPresentation direct_sum(const LambdaPresentation& a, const LambdaPresentation& b) {
  LambdaPresentation out(a.cols + b.cols);
  for (const auto& row : a.rows) {
    std::vector<LaurentPoly> r = row;
    r.resize(out.cols);
    out.add_row(std::move(r));
  }
  for (const auto& row : b.rows) {
    std::vector<LaurentPoly> r(a.cols);
    r.insert(r.end(), row.begin(), row.end());
    out.add_row(std::move(r));
  }
  return out;
}

/// Lambda / (generators...) on one generator.
inline LambdaPresentation cyclic_module(const std::vector<LaurentPoly>& ideal_generators) {
  LambdaPresentation out(1);
  for (const auto& g : ideal_generators) out.add_row({g});
  return out;
}

// ---------------------------------------------------------------------------
// Finite quotients Lambda / (q, f)

/// A finitely generated abelian group with a chosen t-action.
struct ModuleStructure {
  FgAbelianGroup group;
  GroupEndo t_action;
};

/// (Z/q)[t]/(f) for q >= 2 and f whose extreme coefficients are units mod q:
/// basis 1, t, ..., t^{d-1} with t acting by the companion matrix of f made monic.
inline ModuleStructure finite_quotient(const LaurentPoly& f, const BigInt& q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "finite_quotient needs a nonzero polynomial");
  const LaurentPoly h = f.shifted(-f.low_degree());
  const auto d = static_cast<std::size_t>(h.degree());
  BigInt inv_lead;
  if (mpz_invert(inv_lead.get_mpz_t(), BigInt(mod_pos(h.leading_coefficient(), q)).get_mpz_t(), q.get_mpz_t()) == 0 ||
      gcd(h.trailing_coefficient(), q) != 1) {
    throw Error(ErrorKind::InvalidArgument, "extreme coefficients must be units modulo " + q.get_str());
  }
  std::vector<BigInt> moduli(d, q);
  ModuleStructure s;
  s.group = cokernel_of_diagonal(moduli);
  // t e_i = e_{i+1}; t e_{d-1} = -sum (a_i / a_d) e_i
  IntMatrix companion(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1;
  for (std::size_t i = 0; i < d; ++i) {
    companion(i, d - 1) = mod_pos(-h.coefficient(static_cast<LaurentPoly::Exponent>(i)) * inv_lead, q);
  }
  s.t_action = induced_endo(companion, s.group);
  return s;
}

// ---------------------------------------------------------------------------
// Existence of (t-1)-invertible structures

struct CyclicAdmission {
  bool ok = false;
  std::map<std::int64_t, std::int64_t> witnesses;       // prime -> root a != 1 mod p
  std::map<std::int64_t, std::int64_t> lifted;          // prime -> root mod p^r (when found)
  std::optional<LambdaPresentation> construction;       // sum of Lambda/(p^r, t - a)
};

inline std::map<std::int64_t, int> factor_small(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorization needs a positive integer");
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++out[p];
    }
  }
  if (n > 1) ++out[n];
  return out;
}

namespace detail {

// 1 + a + ... + a^{k-1} mod m
inline std::int64_t geometric_sum_mod(std::int64_t a, std::int64_t k, std::int64_t m) {
  BigInt sum = 0, term = 1;
  const BigInt mm = big(m);
  for (std::int64_t i = 0; i < k; ++i) {
    sum = mod_pos(sum + term, mm);
    term = mod_pos(term * a, mm);
  }
  return to_int64(sum);
}

}  // namespace detail

/// Does Z/n carry a (t-1)-invertible structure with t^k = 1? Per prime p | n,
/// look for a != 1 mod p with 1 + a + ... + a^{k-1} = 0 mod p.
inline CyclicAdmission cyclic_admits(std::int64_t n, std::int64_t k, std::int64_t lift_limit = 1'000'000) {
  if (n < 2 || k < 2) throw Error(ErrorKind::InvalidArgument, "cyclic_admits needs n >= 2 and k >= 2");
  CyclicAdmission out;
  out.ok = true;
  bool all_lifted = true;
  LambdaPresentation construction(0);
  for (const auto& [p, r] : factor_small(n)) {
    std::optional<std::int64_t> root;
    for (std::int64_t a = 0; a < p && !root; ++a) {
      if (a != 1 && detail::geometric_sum_mod(a, k, p) == 0) root = a;
    }
    if (!root) {
      out.ok = false;
      continue;
    }
    out.witnesses[p] = *root;
    std::int64_t pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    std::optional<std::int64_t> lift;
    if (pr <= lift_limit) {
      for (std::int64_t a = 0; a < pr && !lift; ++a) {
        if (a % p != 1 % p && detail::geometric_sum_mod(a, k, pr) == 0) lift = a;
      }
    }
    if (!lift) {
      all_lifted = false;
      continue;
    }
    out.lifted[p] = *lift;
    construction = direct_sum(construction, cyclic_module({LaurentPoly(big(pr)), LaurentPoly::t() - LaurentPoly(*lift)}));
  }
  if (out.ok && all_lifted) out.construction = construction;
  return out;
}

struct StructureCount {
  std::int64_t count = 0;
  std::vector<std::int64_t> multipliers;  // a with tv = a v
};

/// Structures tv = av on Z/p^r with t and t - 1 both invertible.
inline StructureCount cyclic_structure_count(std::int64_t p, int r, std::int64_t limit = 10'000'000) {
  if (p < 2 || smallest_prime_factor(p) != p || r < 1) {
    throw Error(ErrorKind::InvalidArgument, "cyclic_structure_count needs a prime p and r >= 1");
  }
  std::int64_t pr = 1;
  for (int i = 0; i < r; ++i) {
    if (pr > limit / p) throw Error(ErrorKind::ExpansionTooLarge, "p^r exceeds the enumeration limit");
    pr *= p;
  }
  StructureCount out;
  for (std::int64_t a = 0; a < pr; ++a) {
    if (a % p != 0 && (a - 1) % p != 0) out.multipliers.push_back(a);
  }
  out.count = static_cast<std::int64_t>(out.multipliers.size());
  return out;
}

/// G_1 + sum (Z/2^{r_i})^{m_i} with G_1 a sum of odd cyclic groups.
struct TwoGroupSpec {
  std::vector<std::pair<int, int>> two_parts;  // (exponent r_i, multiplicity m_i)
  std::vector<BigInt> odd_orders;
};

struct TwoGroupAdmission {
  bool ok = false;
  std::optional<LambdaPresentation> construction;
  bool verified = false;  // construction checked block by block
  std::vector<std::string> reasons;
};

inline TwoGroupAdmission two_group_admits(const TwoGroupSpec& spec) {
  std::vector<int> exps;
  for (const auto& [r, m] : spec.two_parts) {
    if (r < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "2-part exponents and multiplicities must be >= 1");
    exps.push_back(r);
  }
  std::sort(exps.begin(), exps.end());
  if (std::adjacent_find(exps.begin(), exps.end()) != exps.end()) {
    throw Error(ErrorKind::InvalidArgument, "2-part exponents must be distinct");
  }
  for (const auto& q : spec.odd_orders) {
    if (q < 1) throw Error(ErrorKind::InvalidArgument, "odd orders must be positive");
    if (q % 2 == 0) throw Error(ErrorKind::EvenOrder, "odd part has even order " + q.get_str());
  }
  TwoGroupAdmission out;
  out.ok = true;
  for (const auto& [r, m] : spec.two_parts) {
    if (m < 2) {
      out.ok = false;
      out.reasons.push_back("(Z/2^" + std::to_string(r) + ")^" + std::to_string(m) + " has multiplicity 1");
    }
  }
  if (!out.ok) return out;

  LambdaPresentation construction(0);
  bool verified = true;
  auto add_block = [&](const LaurentPoly& f, const BigInt& q, const std::vector<BigInt>& expected) {
    construction = direct_sum(construction, cyclic_module({LaurentPoly(q), f}));
    const ModuleStructure s = finite_quotient(f, q);
    std::vector<BigInt> exp = invariant_factors_of_cyclics(expected);
    verified = verified && s.group.invariant_factors() == exp && s.group.free_rank() == 0 &&
               is_automorphism(s.t_action.minus_identity());
  };
  for (const auto& [r, m] : spec.two_parts) {
    const BigInt q = ipow(BigInt(2), static_cast<unsigned long>(r));
    add_block(LaurentPoly::t(m) - LaurentPoly::t() + LaurentPoly(1), q, std::vector<BigInt>(m, q));
  }
  for (const auto& q : spec.odd_orders) {
    if (q == 1) continue;
    add_block(LaurentPoly::monomial(2, 1) - LaurentPoly(1), q, {q});
  }
  out.construction = construction;
  out.verified = verified;
  return out;
}

/// Direct sum of Lambda/((m+1) t - m) with m = (q - 1)/2, whose A_2 is the sum of Z/q.
inline LambdaPresentation odd_group_as_A2(const std::vector<BigInt>& orders) {
  LambdaPresentation out(0);
  for (const auto& q : orders) {
    if (q < 1) throw Error(ErrorKind::InvalidArgument, "orders must be positive");
    if (q % 2 == 0) throw Error(ErrorKind::EvenOrder, "order " + q.get_str() + " is even");
    const BigInt m = (q - 1) / 2;
    out = direct_sum(out, cyclic_module({LaurentPoly::monomial(m + 1, 1) - LaurentPoly(m)}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// .lm text format

inline std::string to_lm(const LambdaPresentation& P) {
  std::ostringstream os;
  os << "cols " << P.cols << '\n';
  for (const auto& row : P.rows) {
    os << "row";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " , " : " ") << to_string(row[j]);
    os << '\n';
  }
  return os.str();
}

inline LambdaPresentation parse_lm(const std::string& text, const std::string& source = "<input>") {
  std::optional<LambdaPresentation> P;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    const std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      const auto toks = detail::split_ws(line);
      if (toks[0] == "cols") {
        if (P || toks.size() != 2) throw Error(ErrorKind::FileSyntax, "expected a single 'cols <n>' line");
        P = LambdaPresentation(static_cast<std::size_t>(detail::parse_count(toks[1], where)));
      } else if (toks[0] == "row") {
        if (!P) throw Error(ErrorKind::FileSyntax, "'row' before 'cols'");
        const std::string body = detail::trim(line.substr(3));
        std::vector<LaurentPoly> row;
        if (!body.empty()) {
          std::string cell;
          std::istringstream cells(body);
          while (std::getline(cells, cell, ',')) row.push_back(parse_poly(cell));
          if (body.back() == ',') throw Error(ErrorKind::FileSyntax, "trailing ','");
        }
        if (row.size() != P->cols) {
          throw Error(ErrorKind::FileSyntax, "row has " + std::to_string(row.size()) + " entries, expected " +
                                                 std::to_string(P->cols));
        }
        P->add_row(std::move(row));
      } else {
        throw Error(ErrorKind::FileSyntax, "unknown directive '" + toks[0] + "'");
      }
    } catch (const Error& e) {
      const std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) throw;
      throw Error(e.kind(), where + ": " + msg);
    }
  }
  if (!P) throw Error(ErrorKind::FileSyntax, source + ": missing 'cols <n>' line");
  return *P;
}

}  // namespace calex
