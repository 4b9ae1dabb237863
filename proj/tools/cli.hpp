#pragma once

#include "birdtrack/birdtrack.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace birdtrack::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, resource_refused = 3 };

inline constexpr std::size_t kDefaultExpansionCap = 7;
inline constexpr std::size_t kMaxTableauN = 10;
inline constexpr const char* kCapVariable = "BIRDTRACK_EXPANSION_CAP";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest degree expanded without --force; the environment variable wins
/// over the default.
inline std::size_t expansion_cap() {
  const char* env = std::getenv(kCapVariable);
  if (!env || !*env) return kDefaultExpansionCap;
  try {
    std::size_t pos = 0;
    const long v = std::stol(env, &pos);
    if (pos != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(kCapVariable) + " must be a positive integer, got '" + env + "'");
  }
}

inline void require_expandable(std::size_t degree, bool force, const std::string& what) {
  const std::size_t cap = expansion_cap();
  if (degree > cap && !force)
    throw ResourceRefused(what + " needs an expansion at degree " + std::to_string(degree) +
                          ", above the cap of " + std::to_string(cap) +
                          " (set " + kCapVariable + " or pass --force)");
}

inline std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct TableauxArgs {
  std::size_t n = 0;
  bool count = false;
};

inline int cmd_tableaux(const TableauxArgs& a, bool as_json, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxTableauN)
    throw UsageError("--n must lie in 1.." + std::to_string(kMaxTableauN));
  const auto ts = enumerate(a.n);
  if (as_json) {
    json j = {{"n", a.n}, {"count", ts.size()}};
    if (!a.count) {
      json list = json::array();
      for (const auto& t : ts) list.push_back(t.to_string());
      j["tableaux"] = std::move(list);
    }
    out << j.dump() << '\n';
  } else if (a.count) {
    out << ts.size() << '\n';
  } else {
    for (const auto& t : ts) out << t.to_string() << '\n';
  }
  return ok;
}

struct ProjectorArgs {
  std::string tableau;
  std::string method = "mold";
  std::string output = "symbolic";
  bool force = false;
};

inline int cmd_projector(const ProjectorArgs& a, bool as_json, std::ostream& out) {
  const auto t = YoungTableau::parse(a.tableau);
  const Method m = parse_method(a.method);
  if (a.output != "symbolic" && a.output != "expanded" && a.output != "both")
    throw UsageError("--output must be symbolic, expanded or both");
  const bool want_expanded = a.output != "symbolic";
  if (m == Method::mold && t.mold() > 0) require_expandable(t.size(), a.force, "the MOLD normalization");
  if (want_expanded) require_expandable(t.size(), a.force, "the expanded form");
  const SymbolicOperator op = construct(t, m);
  std::optional<AlgebraElement> expanded;
  if (want_expanded) expanded = op.expand();
  if (as_json) {
    json j = {{"tableau", t.to_string()}, {"method", to_string(m)}, {"prefactor", rational_to_json(op.scalar())}};
    if (a.output != "expanded") j["symbolic"] = to_json(op, m);
    if (expanded) j["expanded"] = to_json(*expanded);
    out << j.dump() << '\n';
  } else {
    if (a.output != "expanded") out << op.to_string() << '\n';
    if (expanded) out << expanded->to_string() << '\n';
  }
  return ok;
}

struct ExpandArgs {
  std::string expression;
  std::size_t degree = 0;
  bool force = false;
};

inline int cmd_expand(const ExpandArgs& a, bool as_json, std::ostream& out) {
  const auto op = SymbolicOperator::parse(a.expression, a.degree);
  require_expandable(op.degree(), a.force, "expand");
  const auto x = op.expand();
  if (as_json)
    out << json{{"symbolic", to_json(op)}, {"expanded", to_json(x)}}.dump() << '\n';
  else
    out << x.to_string() << '\n';
  return ok;
}

struct DimensionArgs {
  std::string tableau;
  std::string method = "mold";
  std::vector<long> ns{1, 2, 3, 4};
  bool force = false;
};

inline int cmd_dimension(const DimensionArgs& a, bool as_json, std::ostream& out) {
  const auto t = YoungTableau::parse(a.tableau);
  const Method m = parse_method(a.method);
  for (long N : a.ns)
    if (N < 1) throw UsageError("--N values must be positive");
  require_expandable(t.size(), a.force, "dimension");
  const auto x = construct(t, m).expand();
  const auto poly = trace_poly(x);
  if (as_json) {
    json dims = json::array();
    for (long N : a.ns) dims.push_back({{"N", N}, {"dimension", rational_to_json(poly.evaluate(Rational(N)))}});
    out << json{{"tableau", t.to_string()}, {"method", to_string(m)}, {"polynomial", poly.to_string()},
                {"dimensions", dims}}.dump()
        << '\n';
  } else {
    out << "polynomial: " << poly.to_string() << '\n';
    for (long N : a.ns) out << "N=" << N << ": " << poly.evaluate(Rational(N)).get_str() << '\n';
  }
  return ok;
}

struct VerifyArgs {
  std::size_t n = 0;
  std::vector<std::string> suites{"all"};
  bool force = false;
};

inline std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  for (const auto& s : split_list(requested)) {
    if (s == "all") {
      for (const auto& name : suite_names())
        if (name != "young-hierarchy-fails") out.push_back(name);
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite '" + s + "'");
    out.push_back(s);
  }
  if (out.empty()) throw UsageError("no suites selected");
  return out;
}

inline int cmd_verify(const VerifyArgs& a, bool as_json, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxTableauN) throw UsageError("--n must lie in 1.." + std::to_string(kMaxTableauN));
  const auto suites = expand_suites(a.suites);
  require_expandable(a.n, a.force, "verification");
  ProjectorCache cache;
  std::vector<VerificationReport> reports;
  for (const auto& s : suites)
    for (auto& r : run_suite(s, a.n, cache)) reports.push_back(std::move(r));
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (as_json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << json{{"n", a.n}, {"passed", all_passed}, {"reports", list}}.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << r.identity << " n=" << r.scope.n;
      if (!r.passed && !r.detail.empty()) out << "  " << r.detail;
      out << '\n';
      if (!r.passed && r.witness) out << "      witness: " << r.witness->to_string() << '\n';
    }
    out << (all_passed ? "all passed" : "some checks failed") << '\n';
  }
  return all_passed ? ok : verification_failed;
}

struct BenchArgs {
  std::string tableau;
  std::vector<std::string> methods{"ks", "mold"};
  bool expand = false;
  bool force = false;
  int repeat = 25;
};

struct BenchRow {
  std::string method;
  bool applicable = true;
  double seconds = 0;
  std::size_t units = 0;
  std::optional<std::size_t> raw_units;
  std::size_t sets = 0;
  std::optional<std::size_t> terms;
  std::optional<Rational> prefactor;
  std::string note;
};

/// Best-of-`repeat` wall time of f.
template <class F>
double best_time(int repeat, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

inline BenchRow bench_method(const YoungTableau& t, Method m, const BenchArgs& a, bool can_expand) {
  BenchRow row;
  row.method = to_string(m);
  std::optional<SymbolicOperator> op;
  switch (m) {
    case Method::ks:
    case Method::short_ks: {
      // full construction followed by wedged-ancestor cancellation
      std::optional<YoungChain> chain;
      row.seconds = best_time(a.repeat, [&] {
        YoungChain c = m == Method::ks ? ks_chain(t) : short_ks_chain(t);
        op = to_symbolic(c);
        (void)cancel_wedged(c);
        chain = std::move(c);
      });
      row.units = absorbed_unit_count(*chain);
      row.raw_units = chain->units.size();
      break;
    }
    case Method::lexical:
      if (!t.is_lexically_ordered()) {
        row.applicable = false;
        row.note = "tableau is not lexically ordered";
        return row;
      }
      row.seconds = best_time(a.repeat, [&] { op = lexical(t); });
      row.units = source_tableau_count(*op);
      break;
    case Method::young:
      row.seconds = best_time(a.repeat, [&] { op = young(t); });
      row.units = source_tableau_count(*op);
      break;
    case Method::mold:
      row.seconds = best_time(a.repeat, [&] { op = mold_barred(t); });
      row.units = source_tableau_count(*op);
      if (t.mold() == 0 || can_expand)
        op = op->with_scalar(t.mold() == 0 ? lexical(t).scalar() : idempotent_normalization(*op));
      else
        row.note = "normalization needs an expansion above the cap; scalar shown is 1";
      break;
  }
  row.sets = op->absorbed().set_count();
  row.prefactor = op->scalar();
  if (a.expand) row.terms = op->expand().size();
  return row;
}

inline int cmd_bench(const BenchArgs& a, bool as_json, std::ostream& out) {
  const auto t = YoungTableau::parse(a.tableau);
  if (a.repeat < 1) throw UsageError("--repeat must be positive");
  std::vector<Method> methods;
  for (const auto& s : split_list(a.methods)) methods.push_back(parse_method(s));
  if (methods.empty()) throw UsageError("no methods selected");
  if (a.expand) require_expandable(t.size(), a.force, "bench --expand");
  const bool can_expand = t.size() <= expansion_cap() || a.force;

  std::vector<BenchRow> rows;
  for (Method m : methods) rows.push_back(bench_method(t, m, a, can_expand));

  std::optional<double> ratio;
  auto find = [&](const std::string& name) -> const BenchRow* {
    for (const auto& r : rows)
      if (r.method == name && r.applicable) return &r;
    return nullptr;
  };
  if (const auto *k = find("ks"), *mo = find("mold"); k && mo && mo->seconds > 0)
    ratio = k->seconds / mo->seconds;

  if (as_json) {
    json list = json::array();
    for (const auto& r : rows) {
      json j = {{"method", r.method}, {"applicable", r.applicable}};
      if (r.applicable) {
        j["seconds"] = r.seconds;
        j["units"] = r.units;
        if (r.raw_units) j["raw_units"] = *r.raw_units;
        j["sets"] = r.sets;
        if (r.terms) j["terms"] = *r.terms;
        if (r.prefactor) j["prefactor"] = rational_to_json(*r.prefactor);
      }
      if (!r.note.empty()) j["note"] = r.note;
      list.push_back(std::move(j));
    }
    json doc = {{"tableau", t.to_string()}, {"degree", t.size()}, {"mold", t.mold()}, {"methods", list}};
    if (ratio) doc["ks_over_mold"] = *ratio;
    out << doc.dump() << '\n';
    return ok;
  }
  out << "tableau " << t.to_string() << "  degree " << t.size() << "  mold " << t.mold() << '\n';
  out << std::left << std::setw(10) << "method" << std::right << std::setw(14) << "time_us" << std::setw(8)
      << "units" << std::setw(10) << "raw" << std::setw(7) << "sets" << std::setw(9) << "terms"
      << "  prefactor\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(10) << r.method << std::right;
    if (!r.applicable) {
      out << "  n/a (" << r.note << ")\n";
      continue;
    }
    out << std::setw(14) << std::fixed << std::setprecision(2) << r.seconds * 1e6 << std::setw(8) << r.units
        << std::setw(10) << (r.raw_units ? std::to_string(*r.raw_units) : "-") << std::setw(7) << r.sets
        << std::setw(9) << (r.terms ? std::to_string(*r.terms) : "-") << "  "
        << (r.prefactor ? r.prefactor->get_str() : "-");
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  if (ratio) out << "ks/mold time ratio: " << std::fixed << std::setprecision(1) << *ratio << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

/// Parses args (without the program name) and runs the chosen command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hermitian Young projection operators", "birdtrack"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON document instead of text");
  app.fallthrough();

  TableauxArgs ta;
  auto* tab = app.add_subcommand("tableaux", "List the standard tableaux with n boxes");
  tab->add_option("--n", ta.n, "Number of boxes")->required();
  tab->add_flag("--count", ta.count, "Print only the number of tableaux");

  ProjectorArgs pa;
  auto* proj = app.add_subcommand("projector", "Build a projector for a tableau");
  proj->add_option("-t,--tableau", pa.tableau, "Tableau, rows joined by '/' (e.g. 1,2,4/3,5)")->required();
  proj->add_option("-m,--method", pa.method, "young, ks, short-ks, lexical or mold");
  proj->add_option("-o,--output", pa.output, "symbolic, expanded or both");
  proj->add_flag("--force", pa.force, "Expand above the degree cap");

  ExpandArgs ea;
  auto* exp = app.add_subcommand("expand", "Expand a symbolic operator into the group algebra");
  exp->add_option("-e,--expression", ea.expression, "e.g. \"4/3 * S[1,2] A[1,3]\"")->required();
  exp->add_option("--degree", ea.degree, "Degree (default: largest index)");
  exp->add_flag("--force", ea.force, "Expand above the degree cap");

  DimensionArgs da;
  auto* dim = app.add_subcommand("dimension", "Dimension of a projector's image over N-dimensional V");
  dim->add_option("-t,--tableau", da.tableau, "Tableau")->required();
  dim->add_option("-m,--method", da.method, "Construction method");
  dim->add_option("--N", da.ns, "Values of N")->delimiter(',');
  dim->add_flag("--force", da.force, "Expand above the degree cap");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--n", va.n, "Number of boxes")->required();
  ver->add_option("--suites", va.suites, "Comma-separated suites or 'all'");
  ver->add_flag("--force", va.force, "Expand above the degree cap");

  BenchArgs ba;
  auto* ben = app.add_subcommand("bench", "Compare construction methods");
  ben->add_option("-t,--tableau", ba.tableau, "Tableau")->required();
  ben->add_option("--methods", ba.methods, "Comma-separated methods");
  ben->add_flag("--expand", ba.expand, "Also count expanded terms");
  ben->add_flag("--force", ba.force, "Expand above the degree cap");
  ben->add_option("--repeat", ba.repeat, "Timing repetitions (best is reported)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*tab) return cmd_tableaux(ta, as_json, out);
    if (*proj) return cmd_projector(pa, as_json, out);
    if (*exp) return cmd_expand(ea, as_json, out);
    if (*dim) return cmd_dimension(da, as_json, out);
    if (*ver) return cmd_verify(va, as_json, out);
    if (*ben) return cmd_bench(ba, as_json, out);
  } catch (const ResourceRefused& e) {
    err << "refused: " << e.what() << '\n';
    return resource_refused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace birdtrack::cli
