#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "calex/error.hpp"
#include "calex/laurent.hpp"
#include "calex/polymatrix.hpp"
#include "calex/word.hpp"
#include "calex/zmodule.hpp"

namespace calex {

/// x_target = w^-1 x_source w
struct CRelation {
  int target = 1;
  int source = 1;
  Word conjugator;

  /// The relator w^-1 x_source w x_target^-1.
  Word relator() const {
    return conjugator.inverse() * Word::generator(source) * conjugator * Word::generator(target, -1);
  }

  bool is_simple() const noexcept { return conjugator.length() <= 1; }

  friend bool operator==(const CRelation&, const CRelation&) = default;
};

struct CPresentation {
  int generators = 0;
  std::vector<CRelation> relations;
  std::optional<std::int64_t> hurwitz_degree;  // declared, not verified

  /// Generators minus relations.
  std::int64_t deficiency() const {
    return static_cast<std::int64_t>(generators) - static_cast<std::int64_t>(relations.size());
  }

  friend bool operator==(const CPresentation&, const CPresentation&) = default;
};

/// Relation recovered from a relator of shape w x_j w^-1 x_l^-1 (up to rotation).
inline CRelation relation_from_relator(const Word& r) {
  const ConjugationRelator c = as_c_relation(r);
  return {c.l, c.j, c.w.inverse()};
}

// ---------------------------------------------------------------------------
// Validation and presentation graph

struct PresentationDiagnostics {
  std::vector<int> generator_usage;  // occurrences per generator (index 0 = x_1)
  bool every_generator_used = true;
  int components = 0;
  bool irreducible = false;
};

struct PresentationGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // one per relation, (target, source)
};

struct GraphSummary {
  PresentationGraph graph;
  int components = 0;
  int h0 = 0;
  int h1 = 0;
  std::int64_t deficiency = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline void check_index(int idx, int m, const std::string& where) {
  if (idx < 1 || idx > m) {
    throw Error(ErrorKind::IndexOutOfRange,
                where + " references x" + std::to_string(idx) + " but there are " + std::to_string(m) +
                    " generators");
  }
}

}  // namespace detail

inline GraphSummary graph_and_deficiency(const CPresentation& p) {
  GraphSummary s;
  s.graph.vertices = p.generators;
  detail::UnionFind uf(p.generators);
  int forest_edges = 0;
  for (const auto& r : p.relations) {
    s.graph.edges.emplace_back(r.target, r.source);
    if (uf.unite(r.target - 1, r.source - 1)) ++forest_edges;
  }
  s.components = p.generators - forest_edges;
  s.h0 = s.components;
  s.h1 = static_cast<int>(p.relations.size()) - forest_edges;
  s.deficiency = p.deficiency();
  if (s.deficiency != s.h0 - s.h1) {
    throw Error(ErrorKind::InvalidArgument, "internal: deficiency does not match graph homology");
  }
  return s;
}

inline PresentationDiagnostics validate(const CPresentation& p) {
  if (p.generators < 1) throw Error(ErrorKind::IndexOutOfRange, "a presentation needs at least one generator");
  if (p.hurwitz_degree && *p.hurwitz_degree < 1) {
    throw Error(ErrorKind::InvalidArgument, "declared Hurwitz degree must be positive");
  }
  PresentationDiagnostics d;
  d.generator_usage.assign(static_cast<std::size_t>(p.generators), 0);
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& r = p.relations[k];
    const std::string where = "relation " + std::to_string(k + 1);
    detail::check_index(r.target, p.generators, where);
    detail::check_index(r.source, p.generators, where);
    ++d.generator_usage[r.target - 1];
    ++d.generator_usage[r.source - 1];
    for (const auto& l : r.conjugator.letters()) {
      detail::check_index(l.gen, p.generators, where);
      ++d.generator_usage[l.gen - 1];
    }
  }
  d.every_generator_used =
      std::all_of(d.generator_usage.begin(), d.generator_usage.end(), [](int c) { return c > 0; });
  d.components = graph_and_deficiency(p).components;
  d.irreducible = d.components == 1;
  return d;
}

inline bool is_irreducible(const CPresentation& p) { return graph_and_deficiency(p).components == 1; }

/// Abelianization Z^m / <e_target - e_source>.
inline FgAbelianGroup abelianization(const CPresentation& p) {
  IntMatrix r(static_cast<std::size_t>(p.generators), p.relations.size());
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& rel = p.relations[k];
    r(rel.target - 1, k) += 1;
    r(rel.source - 1, k) -= 1;
  }
  return cokernel(r);
}

// ---------------------------------------------------------------------------
// Rewriting

/// Replaces every relation whose conjugator has length k >= 2 by a chain of k
/// relations through k - 1 new generators; each link conjugates by one letter.
inline CPresentation to_simple(const CPresentation& p) {
  CPresentation out;
  out.generators = p.generators;
  out.hurwitz_degree = p.hurwitz_degree;
  for (const auto& r : p.relations) {
    const auto& ls = r.conjugator.letters();
    if (ls.size() <= 1) {
      out.relations.push_back(r);
      continue;
    }
    int previous = r.source;
    for (std::size_t step = 0; step < ls.size(); ++step) {
      const Word letter = Word::generator(ls[step].gen, ls[step].exp);
      if (step + 1 == ls.size()) {
        out.relations.push_back({r.target, previous, letter});
      } else {
        const int fresh = ++out.generators;
        out.relations.push_back({fresh, previous, letter});
        previous = fresh;
      }
    }
  }
  return out;
}

namespace detail {

inline Word rename(const Word& w, const std::vector<int>& map) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (const auto& l : w.letters()) ls.push_back({map[l.gen], l.exp});
  return Word::from_letters(ls);
}

inline CRelation rename(const CRelation& r, const std::vector<int>& map) {
  return {map[r.target], map[r.source], rename(r.conjugator, map)};
}

}  // namespace detail

/// C-product identifying the last generator of p1 with the last generator of
/// p2. Output order: x_1..x_{m1-1}, y_1..y_{m2-1}, then the shared generator.
inline CPresentation c_product(const CPresentation& p1, const CPresentation& p2) {
  validate(p1);
  validate(p2);
  const int m1 = p1.generators;
  const int m2 = p2.generators;
  const int shared = m1 + m2 - 1;
  std::vector<int> map1(static_cast<std::size_t>(m1) + 1);
  std::vector<int> map2(static_cast<std::size_t>(m2) + 1);
  for (int i = 1; i < m1; ++i) map1[i] = i;
  map1[m1] = shared;
  for (int i = 1; i < m2; ++i) map2[i] = m1 - 1 + i;
  map2[m2] = shared;
  CPresentation out;
  out.generators = shared;
  for (const auto& r : p1.relations) out.relations.push_back(detail::rename(r, map1));
  for (const auto& r : p2.relations) out.relations.push_back(detail::rename(r, map2));
  return out;
}

// ---------------------------------------------------------------------------
// Alexander matrix

/// Rows nu_*(d r_k / d x_1) ... nu_*(d r_k / d x_m), one per relation.
inline PolyMatrix alexander_matrix(const CPresentation& p) {
  validate(p);
  PolyMatrix a(static_cast<std::size_t>(p.generators));
  for (const auto& r : p.relations) {
    const Word rel = r.relator();
    std::vector<LaurentPoly> row;
    row.reserve(a.cols);
    for (int g = 1; g <= p.generators; ++g) row.push_back(fox_nu(rel, g));
    a.add_row(std::move(row));
  }
  return a;
}

/// Alexander matrix without one column (default: the last), presenting A_0.
inline PolyMatrix reduced_matrix(const CPresentation& p, std::optional<int> drop_generator = std::nullopt) {
  const int drop = drop_generator.value_or(p.generators);
  detail::check_index(drop, p.generators, "reduced_matrix");
  return alexander_matrix(p).without_column(static_cast<std::size_t>(drop - 1));
}

// ---------------------------------------------------------------------------
// Realization of normal-form modules

/// Lambda^m / M_1 with M_1 spanned by f_i e_i and the rows (1 - t) g_row.
struct RealizationData {
  int m = 0;
  std::vector<LaurentPoly> f;
  std::vector<std::vector<LaurentPoly>> g_rows;

  /// The presentation matrix of Lambda^m / M_1.
  PolyMatrix module_matrix() const {
    PolyMatrix out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      std::vector<LaurentPoly> row(static_cast<std::size_t>(m));
      row[i] = f[i];
      out.add_row(std::move(row));
    }
    const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
    for (const auto& g : g_rows) {
      std::vector<LaurentPoly> row;
      for (const auto& gi : g) row.push_back(one_minus_t * gi);
      out.add_row(std::move(row));
    }
    return out;
  }

  friend bool operator==(const RealizationData&, const RealizationData&) = default;
};

/// C-presentation on m + 1 generators whose module is Lambda^m / M_1; with
/// `hurwitz_n` the closure relations x_{m+1}^n x_i x_{m+1}^-n = x_i are added
/// and the declared degree is n (m + 1).
inline CPresentation realize(const RealizationData& nf, std::optional<std::int64_t> hurwitz_n = std::nullopt) {
  if (nf.m < 1 || nf.f.size() != static_cast<std::size_t>(nf.m)) {
    throw Error(ErrorKind::InvalidArgument, "realization data needs m >= 1 and m polynomials f_i");
  }
  for (const auto& g : nf.g_rows) {
    if (g.size() != static_cast<std::size_t>(nf.m)) {
      throw Error(ErrorKind::InvalidArgument, "every g-row needs m entries");
    }
  }
  if (hurwitz_n && *hurwitz_n < 1) throw Error(ErrorKind::InvalidArgument, "Hurwitz exponent must be >= 1");
  const int top = nf.m + 1;
  CPresentation out;
  out.generators = top;
  for (int i = 1; i <= nf.m; ++i) {
    const LaurentPoly g = split_unipotent(nf.f[i - 1]);
    const Word w = w_of_poly(g, i, top);
    // relator w x_i w^-1 x_top^-1
    out.relations.push_back({top, i, w.inverse()});
  }
  for (const auto& gs : nf.g_rows) {
    Word w;
    for (int i = 1; i <= nf.m; ++i) w *= w_of_poly(gs[i - 1], i, top);
    out.relations.push_back({top, top, w.inverse()});
  }
  if (hurwitz_n) {
    const int n = static_cast<int>(*hurwitz_n);
    for (int i = 1; i <= nf.m; ++i) out.relations.push_back({i, i, Word::generator(top, -n)});
    out.hurwitz_degree = *hurwitz_n * top;
  }
  return out;
}

/// Recognizes a module matrix already in realization normal form: one row
/// f e_i per column (f a polynomial up to units with f(1) = +-1) and every
/// other row divisible by 1 - t.
inline RealizationData to_realization_data(const PolyMatrix& m) {
  if (m.cols == 0) throw Error(ErrorKind::NotNormalForm, "module has no generators");
  RealizationData nf;
  nf.m = static_cast<int>(m.cols);
  nf.f.assign(m.cols, LaurentPoly{});
  std::vector<bool> have(m.cols, false);
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  for (const auto& row : m.rows) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) {
        ++nonzero;
        where = j;
      }
    }
    if (nonzero == 1 && !have[where]) {
      LaurentPoly f = row[where].shifted(-row[where].low_degree());
      const BigInt v = eval_at(f, 1);
      if (v == 1 || v == -1) {
        if (v == -1) f = -f;
        nf.f[where] = f;
        have[where] = true;
        continue;
      }
    }
    if (nonzero == 0) continue;
    // Units do not change the module: shift the row to polynomial entries.
    LaurentPoly::Exponent low = 0;
    bool first = true;
    for (const auto& p : row) {
      if (p.is_zero()) continue;
      low = first ? p.low_degree() : std::min(low, p.low_degree());
      first = false;
    }
    std::vector<LaurentPoly> g;
    for (const auto& p : row) {
      auto q = exact_divide(p.shifted(-low), one_minus_t);
      if (!q) {
        throw Error(ErrorKind::NotNormalForm,
                    "row entry " + to_string(p) + " is not divisible by 1 - t");
      }
      g.push_back(*q);
    }
    nf.g_rows.push_back(std::move(g));
  }
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (!have[j]) {
      throw Error(ErrorKind::NotNormalForm,
                  "no row f e_" + std::to_string(j + 1) + " with f(1) = 1");
    }
  }
  return nf;
}

// ---------------------------------------------------------------------------
// .cg text format

inline std::string to_cg(const CPresentation& p) {
  std::ostringstream os;
  os << "gens " << p.generators << '\n';
  if (p.hurwitz_degree) os << "hurwitz-degree " << *p.hurwitz_degree << '\n';
  for (const auto& r : p.relations) {
    os << "rel " << r.target << " <- " << r.source << " : " << to_string(r.conjugator) << '\n';
  }
  return os.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline long long parse_count(const std::string& tok, const std::string& where) {
  if (tok.empty() || tok.size() > 12 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorKind::FileSyntax, where + ": expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoll(tok);
}

}  // namespace detail

/// Parses the line-based .cg format. Errors carry "<source>:<line>:".
inline CPresentation parse_cg(const std::string& text, const std::string& source = "<input>") {
  CPresentation p;
  bool have_gens = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    const std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto toks = detail::split_ws(line);
    const std::string& head = toks[0];
    try {
      if (head == "gens") {
        if (have_gens || toks.size() != 2) throw Error(ErrorKind::FileSyntax, "expected a single 'gens <m>' line");
        p.generators = static_cast<int>(detail::parse_count(toks[1], where));
        if (p.generators < 1) throw Error(ErrorKind::FileSyntax, "generator count must be positive");
        have_gens = true;
      } else if (head == "hurwitz-degree") {
        if (toks.size() != 2) throw Error(ErrorKind::FileSyntax, "expected 'hurwitz-degree <d>'");
        p.hurwitz_degree = detail::parse_count(toks[1], where);
        if (*p.hurwitz_degree < 1) throw Error(ErrorKind::FileSyntax, "Hurwitz degree must be positive");
      } else if (head == "rel") {
        if (!have_gens) throw Error(ErrorKind::FileSyntax, "'rel' before 'gens'");
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::FileSyntax, "expected 'rel <i> <- <j> : <word>'");
        const auto lhs = detail::split_ws(line.substr(0, colon));
        if (lhs.size() != 4 || lhs[2] != "<-") {
          throw Error(ErrorKind::FileSyntax, "expected 'rel <i> <- <j> : <word>'");
        }
        CRelation r;
        r.target = static_cast<int>(detail::parse_count(lhs[1], where));
        r.source = static_cast<int>(detail::parse_count(lhs[3], where));
        r.conjugator = parse_word(line.substr(colon + 1));
        validate(CPresentation{p.generators, {r}, std::nullopt});
        p.relations.push_back(std::move(r));
      } else if (head == "relator") {
        if (!have_gens) throw Error(ErrorKind::FileSyntax, "'relator' before 'gens'");
        CRelation r = relation_from_relator(parse_word(line.substr(head.size())));
        validate(CPresentation{p.generators, {r}, std::nullopt});
        p.relations.push_back(std::move(r));
      } else {
        throw Error(ErrorKind::FileSyntax, "unknown directive '" + head + "'");
      }
    } catch (const Error& e) {
      const std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) throw;
      throw Error(e.kind(), where + ": " + msg);
    }
  }
  if (!have_gens) throw Error(ErrorKind::FileSyntax, source + ": missing 'gens <m>' line");
  try {
    validate(p);
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what());
  }
  return p;
}

}  // namespace calex
