#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it in-process.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "calex/calex.hpp"
#include "calex/json.hpp"

namespace calex::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3 };

/// Raised for malformed inputs that are neither files nor library errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised while reading input files; mapped to exit code 2.
struct InputError : std::runtime_error {
  InputError(std::string msg, std::string kind) : std::runtime_error(std::move(msg)), kind(std::move(kind)) {}
  std::string kind;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file", "FileSyntax");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline bool is_module_file(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".lm") == 0;
}

inline CPresentation load_presentation(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_cg(text, path);
  } catch (const Error& e) {
    throw InputError(e.what(), to_string(e.kind()));
  }
}

inline LambdaPresentation load_module_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_lm(text, path);
  } catch (const Error& e) {
    throw InputError(e.what(), to_string(e.kind()));
  }
}

/// A Lambda-module input: either a .lm file or the reduced matrix of a .cg file.
struct ModuleInput {
  LambdaPresentation module;
  std::optional<CPresentation> group;
};

inline ModuleInput load_module_input(const std::string& path) {
  if (is_module_file(path)) return {load_module_file(path), std::nullopt};
  CPresentation p = load_presentation(path);
  return {reduced_matrix(p), p};
}

// ---------------------------------------------------------------------------

struct Report {
  json result = json::object();
  std::vector<std::string> warnings;
  std::vector<NamedCheck> checks;
  std::string text;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string moduli_text(const std::vector<BigInt>& moduli) {
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i) s += (i ? ", " : "") + (moduli[i] == 0 ? std::string("Z") : "Z/" + moduli[i].get_str());
  return s;
}

inline std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

inline std::string poly_matrix_text(const PolyMatrix& m) {
  std::string s;
  for (const auto& row : m.rows) {
    s += "  [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " , " : " ") + to_string(row[j]);
    s += " ]\n";
  }
  if (m.rows.empty()) s += "  (no rows)\n";
  return s;
}

inline std::string group_text(const FgAbelianGroup& g) { return to_string(GroupInvariants::of(g)); }

inline void derived_checks(const DerivedModule& d, const std::optional<CPresentation>& group, Report& r) {
  r.checks.push_back({"t^k acts as the identity", d.t_action.power(d.k).is_identity(), ""});
  if (!group || !is_irreducible(*group)) return;
  r.checks.push_back({"(t-1) acts invertibly", d.t1_invertible, ""});
  if (d.k == 1) r.checks.push_back({"A_1 is trivial", d.group.is_trivial(), ""});
  if (d.k == 2) {
    r.checks.push_back({"A_2 is finite of odd order", d.group.is_finite() && *d.order % 2 != 0, ""});
  }
  if (d.k >= 2 && is_prime_power(d.k)) {
    r.checks.push_back({"A_k is finite for prime-power k", d.group.is_finite(), ""});
  }
}

inline std::string derived_text(const DerivedModule& d) {
  std::ostringstream os;
  const Fingerprint fp = fingerprint(d);
  os << "k = " << d.k << '\n';
  os << "A_k = " << to_string(fp.group) << '\n';
  os << "order = " << (d.order ? d.order->get_str() : std::string("infinite")) << '\n';
  os << "t-order = " << fp.t_order << '\n';
  os << "(t-1) invertible: " << yes_no(d.t1_invertible) << '\n';
  if (d.group.dimension() > 0) {
    os << "t acts on (" << moduli_text(d.group.moduli()) << ") by " << matrix_text(d.t_action.matrix()) << '\n';
  }
  for (const auto& [dd, g] : fp.cokernels) os << "coker(t^" << dd << " - 1) = " << to_string(g) << '\n';
  os << "charpoly on free part = " << to_string(fp.charpoly) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_parse(const std::string& file) {
  const CPresentation p = load_presentation(file);
  const PresentationDiagnostics diag = validate(p);
  const GraphSummary gs = graph_and_deficiency(p);
  Report r;
  json edges = json::array();
  for (const auto& [a, b] : gs.graph.edges) edges.push_back({a, b});
  r.result = {{"generators", p.generators},
              {"relations", p.relations.size()},
              {"components", gs.components},
              {"irreducible", diag.irreducible},
              {"deficiency", gs.deficiency},
              {"h0", gs.h0},
              {"h1", gs.h1},
              {"edges", edges},
              {"generator_usage", diag.generator_usage},
              {"every_generator_used", diag.every_generator_used}};
  r.result["hurwitz_degree"] = p.hurwitz_degree ? json(*p.hurwitz_degree) : json(nullptr);
  r.checks.push_back({"deficiency equals h0 - h1", gs.deficiency == gs.h0 - gs.h1, ""});
  if (!diag.irreducible) r.warnings.push_back("presentation is reducible (" + std::to_string(gs.components) + " components)");
  if (!diag.every_generator_used) r.warnings.push_back("some generators do not occur in any relation");
  std::ostringstream os;
  os << "generators: " << p.generators << '\n'
     << "relations: " << p.relations.size() << '\n'
     << "components: " << gs.components << (diag.irreducible ? " (irreducible)" : " (reducible)") << '\n'
     << "deficiency: " << gs.deficiency << " (h0 " << gs.h0 << ", h1 " << gs.h1 << ")\n";
  if (p.hurwitz_degree) os << "declared Hurwitz degree: " << *p.hurwitz_degree << '\n';
  r.text = os.str();
  return r;
}

inline Report cmd_matrix(const std::string& file) {
  const CPresentation p = load_presentation(file);
  const PolyMatrix a = alexander_matrix(p);
  bool zero_sums = true;
  for (const auto& row : a.rows) {
    LaurentPoly s;
    for (const auto& e : row) s = s + e;
    zero_sums = zero_sums && s.is_zero();
  }
  Report r;
  r.result = {{"alexander_matrix", calex::json::poly_matrix(a)}, {"reduced_matrix", calex::json::poly_matrix(reduced_matrix(p))}};
  r.checks.push_back({"every row of the Alexander matrix sums to zero", zero_sums, ""});
  r.text = "Alexander matrix (" + std::to_string(a.row_count()) + " x " + std::to_string(a.cols) + "):\n" +
           poly_matrix_text(a);
  return r;
}

inline Report cmd_poly(const std::string& file) {
  const ModuleInput in = load_module_input(file);
  const AlexanderPolynomial ap = alexander_polynomial(in.module);
  Report r;
  r.warnings = ap.warnings;
  r.result["alexander_polynomial"] = to_string(ap.delta);
  const BigInt at1 = eval_at(ap.delta, 1);
  r.result["delta_at_1"] = at1.get_str();
  std::optional<bool> fin;
  if (!ap.delta.is_zero()) fin = is_finitely_z_generated(ap.delta);
  r.result["finitely_z_generated"] = fin ? json(*fin) : json(nullptr);
  if (in.group && is_irreducible(*in.group) && !ap.delta.is_zero()) {
    r.checks.push_back({"Delta(1) = +-1", abs(at1) == 1, ""});
  }
  std::ostringstream os;
  os << to_string(ap.delta) << '\n'
     << "Delta(1) = " << at1.get_str() << '\n'
     << "finitely Z-generated: " << (fin ? yes_no(*fin) : std::string("n/a")) << '\n';
  r.text = os.str();
  return r;
}

inline Report cmd_derived(const std::string& file, std::int64_t k, std::int64_t limit) {
  const ModuleInput in = load_module_input(file);
  DerivedModule d = in.group ? derived_of_group(*in.group, k, limit) : derived(in.module, k, limit);
  Report r;
  r.result = calex::json::derived(d);
  r.warnings = d.warnings;
  derived_checks(d, in.group, r);
  r.text = derived_text(d);
  return r;
}

inline Report cmd_sequence(const std::string& file, std::int64_t K, std::int64_t limit) {
  const ModuleInput in = load_module_input(file);
  const SequenceResult s = sequence(in.module, K, limit);
  Report r;
  json fps = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < s.fingerprints.size(); ++i) {
    json f = calex::json::fingerprint(s.fingerprints[i]);
    f["k"] = i + 1;
    fps.push_back(std::move(f));
    os << "A_" << i + 1 << " = " << to_string(s.fingerprints[i].group) << "  (t-order " << s.fingerprints[i].t_order
       << ")\n";
  }
  r.result = {{"K", K}, {"fingerprints", fps}};
  r.result["period"] = s.period ? json(*s.period) : json(nullptr);
  os << "period: " << (s.period ? std::to_string(*s.period) : std::string("none")) << '\n';
  if (in.group && is_irreducible(*in.group)) {
    r.checks.push_back({"A_1 is trivial", s.fingerprints[0].is_trivial(), ""});
    bool inv = true;
    for (const auto& d : s.modules) inv = inv && d.t1_invertible;
    r.checks.push_back({"(t-1) acts invertibly on every A_k", inv, ""});
  }
  r.text = os.str();
  return r;
}

inline Report cmd_covering(const std::string& file, std::int64_t k, const std::string& setting, std::int64_t limit) {
  const CPresentation p = load_presentation(file);
  const CoveringReport c = covering_homology(p, k, parse_setting(setting), limit);
  Report r;
  r.result = calex::json::covering(c);
  r.warnings = c.warnings;
  r.checks = c.checks;
  const std::string g = to_string(c.fingerprint.group);
  std::ostringstream os;
  os << "k = " << k << ", setting " << to_string(c.setting) << '\n';
  switch (c.setting) {
    case CoveringSetting::KnotBranched:
      os << "H_1(X_k) = " << g << '\n';
      break;
    case CoveringSetting::KnotUnbranched:
      os << "H_1(X'_k) = " << (c.fingerprint.is_trivial() ? std::string("Z") : g + " + Z") << '\n';
      break;
    case CoveringSetting::Hurwitz:
      os << "H_1(closed cover minus E) = " << g << '\n';
      os << "b_1(closed cover) = " << c.rational_b1 << '\n';
      break;
  }
  os << "A_k t-order = " << c.fingerprint.t_order << '\n';
  for (const auto& cv : c.caveats) os << "caveat: " << cv << '\n';
  r.text = os.str();
  return r;
}

inline Report presentation_report(const CPresentation& p) {
  Report r;
  r.result = calex::json::presentation(p);
  r.text = to_cg(p);
  return r;
}

inline Report cmd_product(const std::string& f1, const std::string& f2) {
  const CPresentation p1 = load_presentation(f1);
  const CPresentation p2 = load_presentation(f2);
  const CPresentation p = c_product(p1, p2);
  Report r = presentation_report(p);
  r.checks.push_back({"deficiency d = d1 + d2 - 1", p.deficiency() == p1.deficiency() + p2.deficiency() - 1, ""});
  return r;
}

inline Report cmd_simplify(const std::string& file) {
  const CPresentation p = load_presentation(file);
  const CPresentation s = to_simple(p);
  Report r = presentation_report(s);
  bool simple = true;
  for (const auto& rel : s.relations) simple = simple && rel.is_simple();
  r.checks.push_back({"every relation is simple", simple, ""});
  r.checks.push_back({"deficiency is preserved", s.deficiency() == p.deficiency(), ""});
  return r;
}

inline Report cmd_realize(const std::string& file, std::optional<std::int64_t> hurwitz) {
  const LambdaPresentation P = load_module_file(file);
  const RealizationData nf = to_realization_data(P);
  const CPresentation p = realize(nf, hurwitz);
  Report r = presentation_report(p);
  r.checks.push_back({"realized presentation is irreducible", is_irreducible(p), ""});
  return r;
}

inline std::vector<BigInt> parse_order_list(const std::string& list) {
  std::vector<BigInt> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(parse_decimal(item));
    } catch (const Error&) {
      throw UsageError("bad order '" + item + "'");
    }
  }
  return out;
}

/// "Z2^2 + Z4^3 + Z15": each term Z<n>[^<mult>] (also Z/<n>); n is split into 2-part and odd part.
inline TwoGroupSpec parse_two_group_spec(const std::string& text) {
  std::map<int, int> two;
  TwoGroupSpec spec;
  std::string term;
  std::istringstream in(text);
  while (std::getline(in, term, '+')) {
    std::string t;
    for (const char c : term) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) continue;
    if (t[0] != 'Z') throw UsageError("group term '" + t + "' must start with Z");
    t = t.substr(t.size() > 1 && t[1] == '/' ? 2 : 1);
    std::int64_t n = 0, mult = 1;
    try {
      const auto caret = t.find('^');
      n = std::stoll(t.substr(0, caret));
      if (caret != std::string::npos) mult = std::stoll(t.substr(caret + 1));
    } catch (const std::exception&) {
      throw UsageError("bad group term '" + term + "'");
    }
    if (n < 1 || mult < 1) throw UsageError("bad group term '" + term + "'");
    int r = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++r;
    }
    if (r > 0) two[r] += static_cast<int>(mult);
    if (n > 1) {
      for (std::int64_t i = 0; i < mult; ++i) spec.odd_orders.push_back(big(n));
    }
  }
  for (const auto& [r, m] : two) spec.two_parts.emplace_back(r, m);
  return spec;
}

inline Report cmd_admits_cyclic(std::int64_t n, std::int64_t k) {
  const CyclicAdmission a = cyclic_admits(n, k);
  Report r;
  json w = json::object(), l = json::object();
  for (const auto& [p, x] : a.witnesses) w[std::to_string(p)] = std::to_string(x);
  for (const auto& [p, x] : a.lifted) l[std::to_string(p)] = std::to_string(x);
  r.result = {{"n", n}, {"k", k}, {"ok", a.ok}, {"witnesses", w}, {"lifted", l}};
  r.result["construction"] = a.construction ? json(to_lm(*a.construction)) : json(nullptr);
  std::ostringstream os;
  os << "Z/" << n << " with t^" << k << " = 1 and (t-1) invertible: " << (a.ok ? "admitted" : "not admitted") << '\n';
  for (const auto& [p, x] : a.witnesses) os << "  p = " << p << ": a = " << x << '\n';
  if (a.construction) {
    r.checks.push_back({"construction gives Z/n with t^k = 1 and (t-1) invertible", [&] {
                          const DerivedModule d = derived(*a.construction, k);
                          return d.t1_invertible && d.order && *d.order == n && d.group.invariant_factors().size() <= 1;
                        }(),
                        ""});
    os << "construction:\n" << to_lm(*a.construction);
  }
  r.text = os.str();
  return r;
}

inline Report cmd_admits_count(std::int64_t p, std::int64_t e) {
  const StructureCount c = cyclic_structure_count(p, static_cast<int>(e));
  Report r;
  r.result = {{"p", p}, {"r", e}, {"count", c.count}, {"multipliers", c.multipliers}};
  std::ostringstream os;
  os << "structures on Z/" << p << "^" << e << ": " << c.count << '\n';
  for (const auto a : c.multipliers) os << "  tv = " << a << "v\n";
  r.text = os.str();
  return r;
}

inline Report cmd_admits_two_group(const std::string& text) {
  const TwoGroupSpec spec = parse_two_group_spec(text);
  const TwoGroupAdmission a = two_group_admits(spec);
  Report r;
  json parts = json::array();
  for (const auto& [e, m] : spec.two_parts) parts.push_back({{"exponent", e}, {"multiplicity", m}});
  r.result = {{"two_parts", parts}, {"odd_orders", calex::json::bigs(spec.odd_orders)}, {"ok", a.ok}, {"reasons", a.reasons}};
  r.result["construction"] = a.construction ? json(to_lm(*a.construction)) : json(nullptr);
  std::ostringstream os;
  os << text << ": " << (a.ok ? "admitted" : "not admitted") << '\n';
  for (const auto& why : a.reasons) os << "  " << why << '\n';
  if (a.construction) {
    r.checks.push_back({"construction verified ((t-1) automorphism, group matches)", a.verified, ""});
    os << "construction:\n" << to_lm(*a.construction);
  }
  r.text = os.str();
  return r;
}

inline Report cmd_admits_odd(const std::string& list) {
  const std::vector<BigInt> orders = parse_order_list(list);
  const LambdaPresentation P = odd_group_as_A2(orders);
  const DerivedModule d = derived(P, 2);
  Report r;
  r.result = {{"orders", calex::json::bigs(orders)}, {"module", to_lm(P)}, {"A_2", calex::json::group(d.group)}};
  const auto expected = invariant_factors_of_cyclics(orders);
  r.checks.push_back({"A_2 matches the requested group",
                      d.group.free_rank() == 0 && d.group.invariant_factors() == expected, ""});
  r.text = to_lm(P) + "A_2 = " + group_text(d.group) + "\n";
  return r;
}

// ---------------------------------------------------------------------------

inline void emit(std::ostream& out, bool as_json, const std::string& command, const json& input, const Report& r) {
  if (as_json) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(calex::json::check(c));
    const json doc = {{"command", command}, {"input", input}, {"result", r.result}, {"warnings", r.warnings},
                      {"checks", checks}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << r.text;
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  for (const auto& c : r.checks) {
    out << "check: " << c.name << ": " << (c.passed ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
}

inline int emit_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& command,
                      const json& input, int code, const std::string& kind, const std::string& message) {
  if (as_json) {
    const json doc = {{"command", command},
                      {"input", input},
                      {"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
    out << doc.dump(2) << '\n';
  } else {
    err << "calex: " << kind << ": " << message << '\n';
  }
  return code;
}

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Alexander invariants of C-groups", "calex"};
  app.require_subcommand(1);
  bool as_json = false;
  std::int64_t limit = kDefaultExpansionLimit;
  std::string file, file2;
  std::int64_t k = 1, K = 1;
  std::string setting = "knot_branched";
  std::optional<std::int64_t> hurwitz;
  std::vector<std::int64_t> cyclic, count;
  std::string two_group, odd_list;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "JSON output");
    return sub;
  };
  auto* parse = common(app.add_subcommand("parse", "validate a presentation; graph and deficiency"));
  parse->add_option("file", file, ".cg file")->required();
  auto* matrix = common(app.add_subcommand("matrix", "Alexander matrix"));
  matrix->add_option("file", file, ".cg file")->required();
  auto* poly = common(app.add_subcommand("poly", "Alexander polynomial"));
  poly->add_option("file", file, ".cg or .lm file")->required();
  auto* der = common(app.add_subcommand("derived", "derived module A_k"));
  der->add_option("file", file, ".cg or .lm file")->required();
  der->add_option("-k", k, "degree")->required()->check(CLI::PositiveNumber);
  der->add_option("--limit", limit, "expansion limit (k x columns)");
  auto* seq = common(app.add_subcommand("sequence", "A_1 .. A_K with period detection"));
  seq->add_option("file", file, ".cg or .lm file")->required();
  seq->add_option("-K", K, "length")->required()->check(CLI::PositiveNumber);
  seq->add_option("--limit", limit, "expansion limit (k x columns)");
  auto* cov = common(app.add_subcommand("covering", "first homology of cyclic coverings"));
  cov->add_option("file", file, ".cg file")->required();
  cov->add_option("-k", k, "degree")->required()->check(CLI::PositiveNumber);
  cov->add_option("--setting", setting, "knot_branched | knot_unbranched | hurwitz")
      ->check(CLI::IsMember({"knot_branched", "knot_unbranched", "hurwitz"}));
  cov->add_option("--limit", limit, "expansion limit (k x columns)");
  auto* prod = common(app.add_subcommand("product", "C-product identifying the last generators"));
  prod->add_option("file1", file, ".cg file")->required();
  prod->add_option("file2", file2, ".cg file")->required();
  auto* simp = common(app.add_subcommand("simplify", "equivalent simple presentation"));
  simp->add_option("file", file, ".cg file")->required();
  auto* real = common(app.add_subcommand("realize", "C-group realizing a module in normal form"));
  real->add_option("file", file, ".lm file")->required();
  real->add_option("--hurwitz", hurwitz, "add closure relations x_{m+1}^N")->check(CLI::PositiveNumber);
  auto* adm = common(app.add_subcommand("admits", "existence of (t-1)-invertible structures"));
  auto* o1 = adm->add_option("--cyclic", cyclic, "n k")->expected(2);
  auto* o2 = adm->add_option("--two-group", two_group, "e.g. 'Z2^2 + Z4^3 + Z15'");
  auto* o3 = adm->add_option("--odd-as-a2", odd_list, "comma-separated odd orders");
  auto* o4 = adm->add_option("--count", count, "p r: structures on Z/p^r")->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "admits" && (o1->count() > 0) + (o2->count() > 0) + (o3->count() > 0) + (o4->count() > 0) != 1) {
    err << "admits needs exactly one of --cyclic, --two-group, --odd-as-a2, --count\n";
    return kUsage;
  }
  json input = json::object();
  if (!file.empty()) input["files"] = file2.empty() ? json::array({file}) : json::array({file, file2});
  if (command == "derived" || command == "covering") input["k"] = k;
  if (command == "sequence") input["K"] = K;
  if (command == "covering") input["setting"] = setting;
  if (hurwitz) input["hurwitz"] = *hurwitz;
  if (!cyclic.empty()) input["cyclic"] = cyclic;
  if (!count.empty()) input["count"] = count;
  if (!two_group.empty()) input["two_group"] = two_group;
  if (o3->count() > 0) input["odd_as_a2"] = odd_list;

  try {
    Report r;
    if (command == "parse") r = cmd_parse(file);
    else if (command == "matrix") r = cmd_matrix(file);
    else if (command == "poly") r = cmd_poly(file);
    else if (command == "derived") r = cmd_derived(file, k, limit);
    else if (command == "sequence") r = cmd_sequence(file, K, limit);
    else if (command == "covering") r = cmd_covering(file, k, setting, limit);
    else if (command == "product") r = cmd_product(file, file2);
    else if (command == "simplify") r = cmd_simplify(file);
    else if (command == "realize") r = cmd_realize(file, hurwitz);
    else if (!cyclic.empty()) r = cmd_admits_cyclic(cyclic[0], cyclic[1]);
    else if (!count.empty()) r = cmd_admits_count(count[0], count[1]);
    else if (o2->count() > 0) r = cmd_admits_two_group(two_group);
    else r = cmd_admits_odd(odd_list);
    emit(out, as_json, command, input, r);
    return kOk;
  } catch (const InputError& e) {
    return emit_error(out, err, as_json, command, input, kParse, e.kind, e.what());
  } catch (const UsageError& e) {
    return emit_error(out, err, as_json, command, input, kUsage, "Usage", e.what());
  } catch (const Error& e) {
    return emit_error(out, err, as_json, command, input, kPrecondition, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return emit_error(out, err, as_json, command, input, kPrecondition, "Internal", e.what());
  }
}

}  // namespace calex::cli
