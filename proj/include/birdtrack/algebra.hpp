#pragma once

#include "birdtrack/permutation.hpp"
#include "birdtrack/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace birdtrack {

struct Term {
  Permutation perm;
  Rational coeff;
};

/// Element of the group algebra of S_n over the rationals: a finite formal
/// sum of permutations with exact coefficients.
///
/// Terms are kept sorted by permutation with no zero coefficients, so two
/// equal elements have identical term lists and serialize identically. The
/// zero element has no terms but keeps its degree.
class AlgebraElement {
 public:
  explicit AlgebraElement(std::size_t degree = 1) : degree_(degree) {
    if (degree == 0) throw std::invalid_argument("algebra degree must be at least 1");
  }

  static AlgebraElement zero(std::size_t n) { return AlgebraElement(n); }

  static AlgebraElement identity(std::size_t n) { return from_perm(Permutation::identity(n)); }

  static AlgebraElement from_perm(const Permutation& p, Rational coeff = 1) {
    AlgebraElement x(p.degree());
    if (coeff != 0) x.terms_.push_back({p, std::move(coeff)});
    return x;
  }

  /// Sums duplicate permutations and drops zeros.
  static AlgebraElement from_terms(std::size_t n, std::vector<Term> terms) {
    AlgebraElement x(n);
    for (const auto& t : terms)
      if (t.perm.degree() != n) throw std::invalid_argument("term degree does not match element");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.perm < b.perm; });
    for (auto& t : terms) {
      if (!x.terms_.empty() && x.terms_.back().perm == t.perm)
        x.terms_.back().coeff += t.coeff;
      else
        x.terms_.push_back(std::move(t));
    }
    std::erase_if(x.terms_, [](const Term& t) { return t.coeff == 0; });
    return x;
  }

  std::size_t degree() const { return degree_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Permutation& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const Permutation& q) { return t.perm < q; });
    if (it != terms_.end() && it->perm == p) return it->coeff;
    return 0;
  }

  /// Hermitian conjugate: every permutation is replaced by its inverse; the
  /// coefficients are real and stay unchanged.
  AlgebraElement dagger() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.perm.inverse(), t.coeff});
    return from_terms(degree_, std::move(out));
  }

  /// Canonical embedding into degree m (identity on the trailing factors).
  AlgebraElement embed(std::size_t m) const {
    AlgebraElement x(m);
    x.terms_.reserve(terms_.size());
    for (const auto& t : terms_) x.terms_.push_back({t.perm.embed(m), t.coeff});
    return x;  // order is preserved by embedding
  }

  AlgebraElement& operator+=(const AlgebraElement& y) {
    check_same_degree(y);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + y.terms_.size());
    auto a = terms_.begin();
    auto b = y.terms_.begin();
    while (a != terms_.end() || b != y.terms_.end()) {
      if (b == y.terms_.end() || (a != terms_.end() && a->perm < b->perm)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->perm < a->perm) {
        merged.push_back(*b++);
      } else {
        Rational c = a->coeff + b->coeff;
        if (c != 0) merged.push_back({a->perm, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  AlgebraElement& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
  }

  AlgebraElement operator-() const {
    AlgebraElement x = *this;
    for (auto& t : x.terms_) t.coeff = -t.coeff;
    return x;
  }

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x += -y; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
  friend AlgebraElement operator*(AlgebraElement x, const Rational& c) { return x *= c; }

  /// Convolution product: sum of x_p y_q [compose(p, q)]; y acts first.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_same_degree(y);
    const std::size_t n = x.degree_;
    if (x.is_zero() || y.is_zero()) return AlgebraElement(n);
    if (n <= kDenseDegree) return dense_product(x, y);
    std::unordered_map<Permutation, Rational> acc;
    acc.reserve(x.size() * y.size());
    Rational c;
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) {
        mpq_mul(c.get_mpq_t(), a.coeff.get_mpq_t(), b.coeff.get_mpq_t());
        acc[compose(a.perm, b.perm)] += c;
      }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [p, v] : acc) out.push_back({p, std::move(v)});
    return from_terms(n, std::move(out));
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.degree_ != y.degree_ || x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
      if (x.terms_[i].perm != y.terms_[i].perm || x.terms_[i].coeff != y.terms_[i].coeff)
        return false;
    return true;
  }

  /// "4/3 * [(1 2)] - 1/3 * [e]"; the zero element prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      if (i == 0) {
        os << t.coeff.get_str();
      } else {
        os << (sgn(t.coeff) < 0 ? " - " : " + ");
        Rational a = abs(t.coeff);
        os << a.get_str();
      }
      os << " * [" << t.perm.to_string() << ']';
    }
    return os.str();
  }

  static AlgebraElement parse(std::string_view text, std::size_t degree);

 private:
  static constexpr std::size_t kDenseDegree = 8;

  void check_same_degree(const AlgebraElement& y) const {
    if (degree_ != y.degree_) throw std::invalid_argument("degree mismatch in algebra operation");
  }

  // Accumulates into a table indexed by lexicographic rank; ascending rank is
  // ascending permutation order, so the result comes out sorted.
  static AlgebraElement dense_product(const AlgebraElement& x, const AlgebraElement& y) {
    const std::size_t n = x.degree_;
    std::size_t total = 1;
    for (std::size_t k = 2; k <= n; ++k) total *= k;
    std::vector<int> slot(total, -1);
    std::vector<Term> acc;
    acc.reserve(std::min(total, x.size() * y.size()));
    Rational c;
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) {
        mpq_mul(c.get_mpq_t(), a.coeff.get_mpq_t(), b.coeff.get_mpq_t());
        Permutation p = compose(a.perm, b.perm);
        const auto r = p.rank();
        if (slot[r] < 0) {
          slot[r] = static_cast<int>(acc.size());
          acc.push_back({p, c});
        } else {
          acc[slot[r]].coeff += c;
        }
      }
    AlgebraElement out(n);
    out.terms_.reserve(acc.size());
    for (std::size_t r = 0; r < total; ++r)
      if (slot[r] >= 0 && acc[slot[r]].coeff != 0) out.terms_.push_back(std::move(acc[slot[r]]));
    return out;
  }

  std::size_t degree_;
  std::vector<Term> terms_;
};

inline AlgebraElement AlgebraElement::parse(std::string_view text, std::size_t degree) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return AlgebraElement(degree);
  std::vector<Term> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    int sign = 1;
    if (!first) {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("expected '+' or '-' between terms");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    const auto star = text.find('*', i);
    if (star == std::string_view::npos) throw std::invalid_argument("expected '*' in term");
    Rational c = parse_rational(trim(text.substr(i, star - i)));
    const auto open = text.find('[', star);
    const auto close = text.find(']', star);
    if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
        !trim(text.substr(star + 1, open - star - 1)).empty())
      throw std::invalid_argument("expected '[permutation]' after '*'");
    Permutation p = Permutation::parse(text.substr(open + 1, close - open - 1), degree);
    if (sign < 0) c = -c;
    terms.push_back({p, c});
    i = close + 1;
    first = false;
  }
  if (terms.empty()) throw std::invalid_argument("empty algebra element text");
  return AlgebraElement::from_terms(degree, std::move(terms));
}

inline AlgebraElement from_perm(const Permutation& p) { return AlgebraElement::from_perm(p); }
inline AlgebraElement dagger(const AlgebraElement& x) { return x.dagger(); }
inline bool is_hermitian(const AlgebraElement& x) { return x == x.dagger(); }

inline AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return x * y - y * x;
}

namespace detail {

inline std::vector<int> checked_index_set(std::size_t n, std::span<const int> idx) {
  std::vector<int> s(idx.begin(), idx.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("index set contains duplicates");
  for (int i : s)
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw std::invalid_argument("index " + std::to_string(i) + " outside {1.." +
                                  std::to_string(n) + "}");
  return s;
}

inline AlgebraElement block_sum(std::size_t n, std::span<const int> idx, bool signed_sum) {
  auto s = checked_index_set(n, idx);
  if (s.size() <= 1) return AlgebraElement::identity(n);
  auto perms = permutations_of(n, s);
  const Rational weight(1, static_cast<unsigned long>(perms.size()));
  std::vector<Term> terms;
  terms.reserve(perms.size());
  for (auto& p : perms) {
    Rational c = weight;
    if (signed_sum && p.sign() < 0) c = -c;
    terms.push_back({p, c});
  }
  return AlgebraElement::from_terms(n, std::move(terms));
}

}  // namespace detail

/// (1/k!) times the sum of all permutations of the k indices in idx.
inline AlgebraElement symmetrizer(std::size_t n, std::span<const int> idx) {
  return detail::block_sum(n, idx, false);
}
inline AlgebraElement symmetrizer(std::size_t n, std::initializer_list<int> idx) {
  return symmetrizer(n, std::span<const int>(idx.begin(), idx.size()));
}

/// (1/k!) times the signed sum of all permutations of the indices in idx.
inline AlgebraElement antisymmetrizer(std::size_t n, std::span<const int> idx) {
  return detail::block_sum(n, idx, true);
}
inline AlgebraElement antisymmetrizer(std::size_t n, std::initializer_list<int> idx) {
  return antisymmetrizer(n, std::span<const int>(idx.begin(), idx.size()));
}

/// Returns lambda with x*x == lambda*x, or nullopt if x is not
/// quasi-idempotent. lambda is zero when x is nilpotent of order two.
inline std::optional<Rational> quasi_idempotent_factor(const AlgebraElement& x) {
  if (x.is_zero()) throw std::invalid_argument("quasi_idempotent_factor of the zero element");
  const AlgebraElement sq = x * x;
  if (sq.is_zero()) return Rational(0);
  const auto& lead = x.terms().front();
  Rational lambda = sq.coefficient(lead.perm) / lead.coeff;
  if (lambda == 0 || !(sq == lambda * x)) return std::nullopt;
  return lambda;
}

/// Polynomial in N with rational coefficients, keyed by exponent.
class TracePolynomial {
 public:
  TracePolynomial() = default;

  void add(int exponent, const Rational& c) {
    auto& slot = coeffs_[exponent];
    slot += c;
    if (slot == 0) coeffs_.erase(exponent);
  }

  const std::map<int, Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  Rational evaluate(const Rational& N) const {
    Rational total = 0;
    for (const auto& [k, c] : coeffs_) {
      Rational power = 1;
      for (int i = 0; i < k; ++i) power *= N;
      total += c * power;
    }
    return total;
  }

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  /// Highest power first, e.g. "1/2*N^2 + 1/2*N".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto& [k, c] = *it;
      Rational a = abs(c);
      if (first)
        os << (sgn(c) < 0 ? "-" : "");
      else
        os << (sgn(c) < 0 ? " - " : " + ");
      first = false;
      if (k == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << '*';
      os << 'N';
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

 private:
  std::map<int, Rational> coeffs_;
};

/// Trace of x on V^{(x)n}: each permutation contributes N^{#cycles}.
inline TracePolynomial trace_poly(const AlgebraElement& x) {
  TracePolynomial tp;
  for (const auto& t : x.terms()) tp.add(static_cast<int>(t.perm.cycle_count()), t.coeff);
  return tp;
}

inline Rational dimension(const AlgebraElement& x, long N) {
  if (N < 1) throw std::invalid_argument("dimension requires N >= 1");
  return trace_poly(x).evaluate(Rational(N));
}

}  // namespace birdtrack
