#pragma once

#include "birdtrack/algebra.hpp"
#include "birdtrack/projectors.hpp"
#include "birdtrack/tableau.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace birdtrack {

enum class Family { young, hermitian };

inline std::string to_string(Family f) { return f == Family::young ? "young" : "hermitian"; }

struct Scope {
  std::size_t n = 0;
  std::vector<std::string> tableaux;
  friend bool operator==(const Scope&, const Scope&) = default;
};

/// Outcome of one identity check. The witness is the exact non-zero element
/// that refutes the identity and is set exactly when the check failed.
/// Evidence holds elements a passing check wants to show (for instance the
/// non-zero differences that confirm an inequality).
struct VerificationReport {
  std::string identity;
  Scope scope;
  bool passed = false;
  std::optional<AlgebraElement> witness;
  std::vector<AlgebraElement> evidence;
  std::string detail;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::string> names(const std::vector<YoungTableau>& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.to_string());
  return out;
}

/// Report for "lhs == rhs"; the difference is the witness on failure.
inline VerificationReport equality_report(std::string identity, Scope scope,
                                          const AlgebraElement& lhs, const AlgebraElement& rhs) {
  VerificationReport r{std::move(identity), std::move(scope), false, std::nullopt, {}, {}};
  AlgebraElement diff = lhs - rhs;
  r.passed = diff.is_zero();
  if (!r.passed) r.witness = std::move(diff);
  return r;
}

/// Folds sub-reports into one: passes iff all pass, first witness kept.
inline VerificationReport combine(std::string identity, Scope scope,
                                  const std::vector<VerificationReport>& parts) {
  VerificationReport r{std::move(identity), std::move(scope), true, std::nullopt, {}, {}};
  for (const auto& p : parts) {
    if (p.passed) continue;
    r.passed = false;
    if (!r.witness) {
      r.witness = p.witness;
      r.detail = p.identity + " failed for " +
                 (p.scope.tableaux.empty() ? std::string("n=") + std::to_string(p.scope.n)
                                           : p.scope.tableaux.front());
      if (!p.detail.empty()) r.detail += ": " + p.detail;
    }
  }
  return r;
}

}  // namespace detail

/// Memoized expansions of Young and Hermitian projectors, keyed by tableau
/// text and embedding degree.
class ProjectorCache {
 public:
  const AlgebraElement& get(Family f, const YoungTableau& t, std::size_t degree = 0) {
    if (degree == 0) degree = t.size();
    auto& slot = cache_[{f == Family::young ? 0 : 1, t.to_string(), degree}];
    if (!slot) {
      AlgebraElement x = f == Family::young ? young_element(t) : hermitian_element(t);
      slot = degree == t.size() ? std::move(x) : x.embed(degree);
    }
    return *slot;
  }
  const AlgebraElement& young(const YoungTableau& t, std::size_t degree = 0) {
    return get(Family::young, t, degree);
  }
  const AlgebraElement& hermitian(const YoungTableau& t, std::size_t degree = 0) {
    return get(Family::hermitian, t, degree);
  }

 private:
  std::map<std::tuple<int, std::string, std::size_t>, std::optional<AlgebraElement>> cache_;
};

/// The family's projectors over all standard tableaux of size n sum to the
/// identity.
inline VerificationReport check_completeness(std::size_t n, Family family, ProjectorCache& cache) {
  if (n == 0) throw PreconditionError("completeness needs n >= 1");
  const auto ts = enumerate(n);
  AlgebraElement sum(n);
  for (const auto& t : ts) sum += cache.get(family, t);
  return detail::equality_report("completeness-" + to_string(family), {n, detail::names(ts)}, sum,
                                 AlgebraElement::identity(n));
}

inline VerificationReport check_completeness(std::size_t n, Family family) {
  ProjectorCache cache;
  return check_completeness(n, family, cache);
}

/// Distinct projectors of the family annihilate each other in both orders.
inline VerificationReport check_orthogonality(std::size_t n, Family family, ProjectorCache& cache) {
  const auto ts = enumerate(n);
  std::vector<VerificationReport> parts;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      const auto prod = cache.get(family, ts[i]) * cache.get(family, ts[j]);
      parts.push_back(detail::equality_report("orthogonality", {n, {ts[i].to_string(), ts[j].to_string()}},
                                              prod, AlgebraElement(n)));
    }
  return detail::combine("orthogonality-" + to_string(family), {n, detail::names(ts)}, parts);
}

/// Every Hermitian projector P satisfies P^dagger == P and P P == P; every
/// Young projector is idempotent.
inline VerificationReport check_hermiticity(std::size_t n, ProjectorCache& cache) {
  const auto ts = enumerate(n);
  std::vector<VerificationReport> parts;
  for (const auto& t : ts) {
    const auto& p = cache.hermitian(t);
    parts.push_back(detail::equality_report("hermitian", {n, {t.to_string()}}, p.dagger(), p));
    parts.push_back(detail::equality_report("idempotent", {n, {t.to_string()}}, p * p, p));
    const auto& y = cache.young(t);
    parts.push_back(detail::equality_report("young-idempotent", {n, {t.to_string()}}, y * y, y));
  }
  return detail::combine("hermiticity", {n, detail::names(ts)}, parts);
}

/// Sum of P over the descendants `generations` boxes down equals P_t.
inline VerificationReport check_hierarchy(const YoungTableau& t, std::size_t generations,
                                          ProjectorCache& cache) {
  if (generations == 0) throw PreconditionError("hierarchy needs at least one generation");
  const std::size_t n = t.size() + generations;
  const auto ds = descendants(t, generations);
  AlgebraElement sum(n);
  for (const auto& d : ds) sum += cache.hermitian(d);
  auto names = detail::names(ds);
  names.insert(names.begin(), t.to_string());
  return detail::equality_report("hierarchy", {n, std::move(names)}, sum, cache.hermitian(t, n));
}

inline VerificationReport check_hierarchy(const YoungTableau& t, std::size_t generations) {
  ProjectorCache cache;
  return check_hierarchy(t, generations, cache);
}

/// The hierarchy identity for every tableau with n-1 boxes.
inline VerificationReport check_hierarchy_all(std::size_t n, ProjectorCache& cache) {
  if (n < 2) return {"hierarchy", {n, {}}, true, std::nullopt, {}, "nothing to check"};
  std::vector<VerificationReport> parts;
  for (const auto& t : enumerate(n - 1)) parts.push_back(check_hierarchy(t, 1, cache));
  return detail::combine("hierarchy", {n, detail::names(enumerate(n - 1))}, parts);
}

/// Confirms that the two Young-operator sums
///   Y_{123} + Y_{12/3} = Y_{12}   and   Y_{13/2} + Y_{1/2/3} = Y_{1/2}
/// are false, while the same sums of Hermitian projectors hold.
inline VerificationReport check_young_hierarchy_fails(ProjectorCache& cache) {
  const std::vector<std::vector<std::string>> sums = {{"1,2,3", "1,2/3", "1,2"},
                                                      {"1,3/2", "1/2/3", "1/2"}};
  VerificationReport r{"young-hierarchy-fails", {3, {}}, true, std::nullopt, {}, {}};
  for (const auto& s : sums) {
    const auto a = YoungTableau::parse(s[0]);
    const auto b = YoungTableau::parse(s[1]);
    const auto c = YoungTableau::parse(s[2]);
    for (const auto& x : s) r.scope.tableaux.push_back(x);
    const AlgebraElement ydiff = cache.young(a) + cache.young(b) - cache.young(c, 3);
    const AlgebraElement pdiff = cache.hermitian(a) + cache.hermitian(b) - cache.hermitian(c, 3);
    if (ydiff.is_zero()) {
      r.passed = false;
      if (!r.witness) {
        r.witness = cache.young(a) + cache.young(b);
        r.detail = "Young sum over " + s[0] + " and " + s[1] + " unexpectedly equals Y_" + s[2];
      }
    } else {
      r.evidence.push_back(ydiff);
    }
    if (!pdiff.is_zero()) {
      r.passed = false;
      if (!r.witness) {
        r.witness = pdiff;
        r.detail = "Hermitian sum over " + s[0] + " and " + s[1] + " differs from P_" + s[2];
      }
    }
  }
  return r;
}

inline VerificationReport check_young_hierarchy_fails() {
  ProjectorCache cache;
  return check_young_hierarchy_fails(cache);
}

/// P_t P_{t(m)} = P_t = P_{t(m)} P_t.
inline VerificationReport check_nesting(const YoungTableau& t, std::size_t m, ProjectorCache& cache) {
  const std::size_t n = t.size();
  if (m < 1 || m >= n) throw PreconditionError("nesting needs 1 <= m < n");
  const auto anc = t.ancestor(m);
  const auto& p = cache.hermitian(t);
  const auto& q = cache.hermitian(anc, n);
  Scope scope{n, {t.to_string(), anc.to_string()}};
  auto left = detail::equality_report("nesting", scope, p * q, p);
  auto right = detail::equality_report("nesting", scope, q * p, p);
  return detail::combine("nesting", scope, {left, right});
}

inline VerificationReport check_nesting(const YoungTableau& t, std::size_t m) {
  ProjectorCache cache;
  return check_nesting(t, m, cache);
}

inline VerificationReport check_nesting_all(std::size_t n, ProjectorCache& cache) {
  std::vector<VerificationReport> parts;
  const auto ts = enumerate(n);
  for (const auto& t : ts)
    for (std::size_t m = 1; m < n; ++m) parts.push_back(check_nesting(t, m, cache));
  return detail::combine("nesting", {n, detail::names(ts)}, parts);
}

/// [Y_t, Y_{t(m)}] != 0 for a non-Hermitian Y_t.
inline VerificationReport check_noncommutation(const YoungTableau& t, std::size_t m,
                                               ProjectorCache& cache) {
  const std::size_t n = t.size();
  if (m < 1 || m >= n) throw PreconditionError("non-commutation needs 1 <= m < n");
  const auto& y = cache.young(t);
  if (is_hermitian(y))
    throw PreconditionError("Y_" + t.to_string() + " is Hermitian; non-commutation does not apply");
  const auto anc = t.ancestor(m);
  const auto& ya = cache.young(anc, n);
  const auto c = commutator(y, ya);
  VerificationReport r{"noncommutation", {n, {t.to_string(), anc.to_string()}}, !c.is_zero(),
                       std::nullopt, {}, {}};
  if (r.passed) {
    r.evidence.push_back(c);
  } else {
    r.witness = y * ya;
    r.detail = "Y_" + t.to_string() + " commutes with Y_" + anc.to_string();
  }
  return r;
}

inline VerificationReport check_noncommutation(const YoungTableau& t, std::size_t m) {
  ProjectorCache cache;
  return check_noncommutation(t, m, cache);
}

/// Every non-Hermitian Y_t of size n against every ancestor.
inline VerificationReport check_noncommutation_all(std::size_t n, ProjectorCache& cache) {
  std::vector<VerificationReport> parts;
  std::vector<std::string> scope;
  for (const auto& t : enumerate(n)) {
    if (is_hermitian(cache.young(t))) continue;
    scope.push_back(t.to_string());
    for (std::size_t m = 1; m < n; ++m) parts.push_back(check_noncommutation(t, m, cache));
  }
  return detail::combine("noncommutation", {n, std::move(scope)}, parts);
}

/// conjugate_by(Y_t, rho) == Y_phi, where phi is t relabelled by rho.
inline VerificationReport check_equivalence_conjugation(const YoungTableau& t,
                                                        const YoungTableau& phi,
                                                        const Permutation& rho) {
  if (!t.same_shape(phi)) throw PreconditionError("tableaux " + t.to_string() + " and " +
                                                  phi.to_string() + " differ in shape");
  if (rho.degree() != t.size()) throw PreconditionError("permutation degree differs from box count");
  return detail::equality_report("equivalence-conjugation",
                                 {t.size(), {t.to_string(), phi.to_string(), rho.to_string()}},
                                 conjugate_by(young_element(t), rho), young_element(phi));
}

/// expand(ks) == expand(short_ks) == expand(mold), and == expand(lexical)
/// for lexically ordered tableaux.
inline VerificationReport check_methods_agree(const YoungTableau& t, ProjectorCache& cache) {
  const auto& p = cache.hermitian(t);
  Scope scope{t.size(), {t.to_string()}};
  std::vector<VerificationReport> parts;
  parts.push_back(detail::equality_report("ks-vs-mold", scope, ks(t).expand(), p));
  parts.push_back(detail::equality_report("short-ks-vs-mold", scope, short_ks(t).expand(), p));
  if (t.is_lexically_ordered())
    parts.push_back(detail::equality_report("lexical-vs-mold", scope, lexical(t).expand(), p));
  return detail::combine("methods-agree", scope, parts);
}

inline VerificationReport check_methods_agree_all(std::size_t n, ProjectorCache& cache) {
  std::vector<VerificationReport> parts;
  const auto ts = enumerate(n);
  for (const auto& t : ts) parts.push_back(check_methods_agree(t, cache));
  return detail::combine("methods-agree", {n, detail::names(ts)}, parts);
}

/// For N = 1..max_n: dimensions of the P_t are nonnegative integers, equal
/// within a shape, and sum to N^n.
inline VerificationReport check_dimensions(std::size_t n, ProjectorCache& cache, long max_n = 4) {
  const auto ts = enumerate(n);
  VerificationReport r{"dimensions", {n, detail::names(ts)}, true, std::nullopt, {}, {}};
  auto fail = [&](const YoungTableau& t, std::string why) {
    if (!r.passed) return;
    r.passed = false;
    r.witness = cache.hermitian(t);
    r.detail = std::move(why);
  };
  for (long N = 1; N <= max_n; ++N) {
    Rational total = 0;
    std::map<std::vector<std::size_t>, Rational> per_shape;
    for (const auto& t : ts) {
      const Rational d = dimension(cache.hermitian(t), N);
      total += d;
      const std::string where = "P_" + t.to_string() + " at N=" + std::to_string(N);
      if (d.get_den() != 1 || d < 0) fail(t, "dimension of " + where + " is " + d.get_str());
      auto [it, fresh] = per_shape.emplace(t.shape(), d);
      if (!fresh && it->second != d) fail(t, "dimension of " + where + " differs within its shape");
    }
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
    if (total != Rational(expected))
      fail(ts.front(), "dimensions at N=" + std::to_string(N) + " sum to " + total.get_str());
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "completeness", "orthogonality", "hermiticity",    "hierarchy",
      "nesting",      "noncommute",    "methods-agree",  "dimensions",
      "young-hierarchy-fails"};
  return names;
}

/// Runs one named suite at size n; unknown names throw invalid_argument.
inline std::vector<VerificationReport> run_suite(std::string_view suite, std::size_t n,
                                                 ProjectorCache& cache) {
  if (suite == "completeness")
    return {check_completeness(n, Family::young, cache), check_completeness(n, Family::hermitian, cache)};
  if (suite == "orthogonality")
    return {check_orthogonality(n, Family::young, cache),
            check_orthogonality(n, Family::hermitian, cache)};
  if (suite == "hermiticity") return {check_hermiticity(n, cache)};
  if (suite == "hierarchy") return {check_hierarchy_all(n, cache)};
  if (suite == "nesting") return {check_nesting_all(n, cache)};
  if (suite == "noncommute") return {check_noncommutation_all(n, cache)};
  if (suite == "methods-agree") return {check_methods_agree_all(n, cache)};
  if (suite == "dimensions") return {check_dimensions(n, cache)};
  if (suite == "young-hierarchy-fails") return {check_young_hierarchy_fails(cache)};
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace birdtrack
