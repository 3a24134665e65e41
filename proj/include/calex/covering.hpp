#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "calex/cgroup.hpp"
#include "calex/error.hpp"
#include "calex/laurent.hpp"
#include "calex/lmodule.hpp"

namespace calex {

enum class CoveringSetting { KnotBranched, KnotUnbranched, Hurwitz };

inline std::string to_string(CoveringSetting s) {
  switch (s) {
    case CoveringSetting::KnotBranched: return "knot_branched";
    case CoveringSetting::KnotUnbranched: return "knot_unbranched";
    case CoveringSetting::Hurwitz: return "hurwitz";
  }
  return "unknown";
}

inline CoveringSetting parse_setting(const std::string& s) {
  if (s == "knot_branched") return CoveringSetting::KnotBranched;
  if (s == "knot_unbranched") return CoveringSetting::KnotUnbranched;
  if (s == "hurwitz") return CoveringSetting::Hurwitz;
  throw Error(ErrorKind::InvalidArgument, "unknown covering setting '" + s + "'");
}

/// A named property check with its outcome.
struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CoveringReport {
  std::int64_t k = 1;
  CoveringSetting setting = CoveringSetting::KnotBranched;
  DerivedModule module;
  Fingerprint fingerprint;
  bool extra_Z_summand = false;
  std::size_t rational_b1 = 0;
  LaurentPoly alexander;
  std::optional<std::int64_t> declared_degree;
  std::vector<std::string> caveats;
  std::vector<NamedCheck> checks;
  std::vector<std::string> warnings;

  bool all_checks_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Sum of phi(d) over cyclotomic factors Phi_d of delta with d | k and d > 1,
/// when delta is a squarefree product of cyclotomic polynomials.
inline std::optional<std::int64_t> unit_root_count(const LaurentPoly& delta, std::int64_t k) {
  if (delta.is_zero()) return std::nullopt;
  const auto factors = cyclotomic_factorization(delta.shifted(-delta.low_degree()));
  if (!factors) return std::nullopt;
  std::int64_t count = 0;
  for (const auto& [d, mult] : *factors) {
    if (mult != 1) return std::nullopt;
    if (d > 1 && k % d == 0) count += euler_phi(d);
  }
  return count;
}

inline CoveringReport covering_homology(const CPresentation& p, std::int64_t k, CoveringSetting setting,
                                        std::int64_t expansion_limit = kDefaultExpansionLimit) {
  validate(p);
  if (!is_irreducible(p)) {
    throw Error(ErrorKind::NotIrreducible, "covering reports need an irreducible presentation (connected graph)");
  }
  CoveringReport r;
  r.k = k;
  r.setting = setting;
  const LambdaPresentation P = reduced_matrix(p);
  r.module = derived(P, k, expansion_limit);
  r.fingerprint = fingerprint(r.module);
  r.rational_b1 = r.module.group.free_rank();
  r.extra_Z_summand = setting == CoveringSetting::KnotUnbranched;
  r.declared_degree = p.hurwitz_degree;
  auto poly = alexander_polynomial(P);
  r.alexander = poly.delta;
  r.warnings = poly.warnings;

  if (setting == CoveringSetting::Hurwitz) {
    r.caveats.push_back(
        "integral H_1 is asserted only for the cover minus the exceptional set; for the closed cover only the "
        "rank is asserted, since integral H_1 may be a proper quotient of A_k");
    r.caveats.push_back(
        "the kernel of the epimorphism from H_1 of the complement onto H_1 of the closed cover is not determined");
    if (k == 2 && !r.module.group.is_trivial()) {
      r.caveats.push_back(
          "known instance: a sextic curve group with A_2 = Z/3 whose closed double cover has H_1 = 0");
    }
  }

  r.checks.push_back({"(t-1) acts invertibly on A_k", r.module.t1_invertible, ""});
  if (const auto roots = unit_root_count(r.alexander, k)) {
    r.checks.push_back({"b1 equals the number of k-th roots of unity != 1 among roots of the Alexander polynomial",
                        *roots == static_cast<std::int64_t>(r.rational_b1),
                        "roots " + std::to_string(*roots) + ", b1 " + std::to_string(r.rational_b1)});
  }

  if (p.hurwitz_degree) {
    const std::int64_t m = *p.hurwitz_degree;
    const std::string cond = " (conditional on declared degree " + std::to_string(m) + ")";
    const bool unipotent = r.module.t_action.power(m).is_identity();
    r.checks.push_back({"t^m acts as the identity on A_k" + cond, unipotent,
                        unipotent ? "" : "the declared degree is refuted"});
    r.checks.push_back({"b1 is even" + cond, r.rational_b1 % 2 == 0, "b1 " + std::to_string(r.rational_b1)});
    if (std::gcd(k, m) == 1) {
      r.checks.push_back({"k coprime to m predicts a trivial group" + cond, r.module.group.is_trivial(), ""});
    }
    if (k >= 2 && is_prime_power(k)) {
      r.checks.push_back({"k a prime power predicts a finite group" + cond, r.module.group.is_finite(), ""});
    }
    if (k == 2) {
      const bool odd = r.module.group.is_finite() && *r.module.group.order() % 2 != 0;
      r.checks.push_back({"k = 2 predicts a finite group of odd order" + cond, odd, ""});
    }
  }
  return r;
}

}  // namespace calex
