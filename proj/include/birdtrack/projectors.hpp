#pragma once

#include "birdtrack/algebra.hpp"
#include "birdtrack/symbolic.hpp"
#include "birdtrack/tableau.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace birdtrack {

enum class Method { young, ks, short_ks, lexical, mold };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::young: return "young";
    case Method::ks: return "ks";
    case Method::short_ks: return "short_ks";
    case Method::lexical: return "lexical";
    case Method::mold: return "mold";
  }
  return "unknown";
}

inline Method parse_method(std::string_view s) {
  if (s == "young") return Method::young;
  if (s == "ks") return Method::ks;
  if (s == "short_ks" || s == "short-ks") return Method::short_ks;
  if (s == "lexical") return Method::lexical;
  if (s == "mold" || s == "hermitian") return Method::mold;
  throw std::invalid_argument("unknown construction method '" + std::string(s) + "'");
}

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Young projector alpha * S_t A_t, embedded at `degree` (default: box count).
inline SymbolicOperator young(const YoungTableau& t, std::size_t degree = 0) {
  YoungChain c{degree ? degree : t.size(), {t}};
  return to_symbolic(c).absorbed();
}

inline AlgebraElement young_element(const YoungTableau& t, std::size_t degree = 0) {
  return young(t, degree).expand();
}

/// Full KS recursion as a chain of Young units:
/// P_t = Y_t for n <= 2, otherwise P_{t(1)} Y_t P_{t(1)}.
inline YoungChain ks_chain(const YoungTableau& t) {
  const std::size_t n = t.size();
  if (n <= 2) return {n, {t}};
  YoungChain inner = ks_chain(t.parent());
  YoungChain out{n, {}};
  out.units.reserve(2 * inner.units.size() + 1);
  out.units.insert(out.units.end(), inner.units.begin(), inner.units.end());
  out.units.push_back(t);
  out.units.insert(out.units.end(), inner.units.begin(), inner.units.end());
  return out;
}

/// Y_{t(n-2)} ... Y_{t(1)} Y_t Y_{t(1)} ... Y_{t(n-2)}.
inline YoungChain short_ks_chain(const YoungTableau& t) {
  const std::size_t n = t.size();
  if (n <= 2) return {n, {t}};
  YoungChain out{n, {}};
  for (std::size_t m = n - 2; m >= 1; --m) out.units.push_back(t.ancestor(m));
  out.units.push_back(t);
  for (std::size_t m = 1; m <= n - 2; ++m) out.units.push_back(t.ancestor(m));
  return out;
}

inline SymbolicOperator ks(const YoungTableau& t) { return to_symbolic(ks_chain(t)); }
inline SymbolicOperator short_ks(const YoungTableau& t) { return to_symbolic(short_ks_chain(t)); }

/// Idempotency normalization for a quasi-idempotent barred product: 1/lambda
/// where bar*bar == lambda*bar.
inline Rational idempotent_normalization(const SymbolicOperator& barred) {
  const auto lambda = quasi_idempotent_factor(barred.with_scalar(1).expand());
  if (!lambda || *lambda == 0)
    throw ConstructionError("product is not quasi-idempotent with a non-zero factor");
  return 1 / *lambda;
}

/// alpha * S A S for row-ordered tableaux, alpha * A S A for column-ordered
/// ones (row-ordered wins when both hold). Adjacent nested sets are merged.
inline SymbolicOperator lexical(const YoungTableau& t) {
  const bool row = t.is_row_ordered();
  if (!row && !t.is_column_ordered())
    throw ConstructionError("lexical construction needs a lexically ordered tableau; " +
                            t.to_string() + " is neither row- nor column-ordered");
  const SetKind outer = row ? SetKind::sym : SetKind::anti;
  std::vector<SetFactor> fs{sets_of(t, outer), sets_of(t, opposite(outer)), sets_of(t, outer)};
  return SymbolicOperator(t.size(), t.alpha(), std::move(fs)).absorbed();
}

/// The alternating palindrome without its normalization constant (scalar 1).
/// Needs no expansion, so it is available at any degree.
inline SymbolicOperator mold_barred(const YoungTableau& t) {
  // line[k] is the ancestor k generations back; the last one is ordered
  std::vector<YoungTableau> line{t};
  while (!line.back().is_lexically_ordered()) line.push_back(line.back().parent());
  const std::size_t m = line.size() - 1;
  if (m == 0) return lexical(t).with_scalar(1);
  const SetKind outer = line[m].is_row_ordered() ? SetKind::sym : SetKind::anti;
  auto kind_at = [&](std::size_t generation) {
    return (m - generation) % 2 == 0 ? outer : opposite(outer);
  };
  std::vector<SetFactor> fs;
  fs.reserve(2 * m + 3);
  for (std::size_t k = m; k >= 1; --k)
    fs.push_back(sets_of(line[k], kind_at(k), static_cast<int>(k)));
  const SetKind center = kind_at(0);
  fs.push_back(sets_of(t, center));
  fs.push_back(sets_of(t, opposite(center)));
  fs.push_back(fs[m]);
  for (std::size_t k = m; k >= 1; --k) fs.push_back(fs[k - 1]);
  return SymbolicOperator(t.size(), 1, std::move(fs));
}

/// MOLD operator with its normalization computed from idempotency.
inline SymbolicOperator mold(const YoungTableau& t) {
  SymbolicOperator bar = mold_barred(t);
  return bar.with_scalar(idempotent_normalization(bar));
}

inline SymbolicOperator hermitian(const YoungTableau& t) { return mold(t); }

inline AlgebraElement hermitian_element(const YoungTableau& t) { return mold(t).expand(); }

inline SymbolicOperator construct(const YoungTableau& t, Method m) {
  switch (m) {
    case Method::young: return young(t);
    case Method::ks: return ks(t);
    case Method::short_ks: return short_ks(t);
    case Method::lexical: return lexical(t);
    case Method::mold: return mold(t);
  }
  throw std::invalid_argument("unknown method");
}

/// rho * y * rho^dagger. For a Young projector this relabels the tableau:
/// conjugate_by(Y_t, rho) == Y_{relabel(t, rho)}.
inline AlgebraElement conjugate_by(const AlgebraElement& y, const Permutation& rho) {
  const AlgebraElement r = AlgebraElement::from_perm(rho);
  return r * y * r.dagger();
}

/// The tableau obtained by replacing every entry e with rho(e), or nullopt if
/// that is not a standard tableau.
inline std::optional<YoungTableau> relabel(const YoungTableau& t, const Permutation& rho) {
  Grid rows = t.rows();
  for (auto& r : rows)
    for (int& v : r) v = rho(v);
  try {
    return YoungTableau::validate(std::move(rows));
  } catch (const TableauError&) {
    return std::nullopt;
  }
}

}  // namespace birdtrack
