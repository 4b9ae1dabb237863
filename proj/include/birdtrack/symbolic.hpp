#pragma once

#include "birdtrack/algebra.hpp"
#include "birdtrack/tableau.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace birdtrack {

enum class SetKind { sym, anti };

inline SetKind opposite(SetKind k) { return k == SetKind::sym ? SetKind::anti : SetKind::sym; }
inline char kind_letter(SetKind k) { return k == SetKind::sym ? 'S' : 'A'; }

/// Which tableau (and which generation relative to the constructed one) a
/// set was read off.
struct SetSource {
  std::string tableau;
  int generation = 0;
  int unit = -1;  // position of the originating Young unit in a chain, if any
  std::size_t boxes = 0;
  friend bool operator==(const SetSource&, const SetSource&) = default;
};

/// A product of mutually disjoint symmetrizers (or antisymmetrizers), one per
/// block. Singleton blocks act as the identity and are never stored.
class SetFactor {
 public:
  SetFactor() = default;

  SetFactor(SetKind kind, Grid blocks, std::optional<SetSource> source = std::nullopt)
      : kind_(kind), source_(std::move(source)) {
    std::vector<bool> seen;
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      for (int v : b) {
        if (v < 1) throw std::invalid_argument("set indices must be positive");
        if (seen.size() <= static_cast<std::size_t>(v)) seen.resize(2 * static_cast<std::size_t>(v), false);
        if (seen[v]) throw std::invalid_argument("set blocks must be disjoint");
        seen[v] = true;
      }
      if (b.size() >= 2) blocks_.push_back(std::move(b));
    }
    std::sort(blocks_.begin(), blocks_.end());
  }

  /// Blocks that are known to be sorted, disjoint, in order and free of
  /// singletons.
  static SetFactor trusted(SetKind kind, Grid blocks, std::optional<SetSource> source) {
    SetFactor f;
    f.kind_ = kind;
    f.blocks_ = std::move(blocks);
    f.source_ = std::move(source);
    return f;
  }

  SetKind kind() const { return kind_; }
  const Grid& blocks() const { return blocks_; }
  const std::optional<SetSource>& source() const { return source_; }
  bool empty() const { return blocks_.empty(); }

  int max_index() const {
    int m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.back());
    return m;
  }

  AlgebraElement expand(std::size_t degree) const {
    AlgebraElement x = AlgebraElement::identity(degree);
    for (const auto& b : blocks_)
      x = x * (kind_ == SetKind::sym ? symmetrizer(degree, b) : antisymmetrizer(degree, b));
    return x;
  }

  /// True when every block of `other` lies inside one block of this set, so
  /// that the product of the two (in either order) equals this set.
  bool absorbs(const SetFactor& other) const {
    if (other.kind_ != kind_) return false;
    return std::all_of(other.blocks_.begin(), other.blocks_.end(), [&](const auto& ob) {
      return std::any_of(blocks_.begin(), blocks_.end(), [&](const auto& b) {
        return std::includes(b.begin(), b.end(), ob.begin(), ob.end());
      });
    });
  }

  /// "S[1,2][3,6]"; the empty set prints as "S[]".
  std::string to_string() const {
    std::ostringstream os;
    os << kind_letter(kind_);
    if (blocks_.empty()) os << "[]";
    for (const auto& b : blocks_) {
      os << '[';
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << ']';
    }
    return os.str();
  }

  /// Equality ignores provenance.
  friend bool operator==(const SetFactor& a, const SetFactor& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  SetKind kind_ = SetKind::sym;
  Grid blocks_;
  std::optional<SetSource> source_;
};

/// The rows (sym) or columns (anti) of a tableau as a set factor.
inline SetFactor sets_of(const YoungTableau& t, SetKind kind, int generation = 0, int unit = -1) {
  // rows and columns of a standard tableau are already sorted and disjoint
  Grid blocks;
  const Grid& rows = t.rows();
  blocks.reserve(kind == SetKind::sym ? rows.size() : rows.front().size());
  if (kind == SetKind::sym) {
    for (const auto& r : rows)
      if (r.size() >= 2) blocks.push_back(r);
  } else {
    for (std::size_t j = 0; j < rows.front().size() && rows.size() >= 2 && rows[1].size() > j; ++j) {
      auto& col = blocks.emplace_back();
      col.reserve(rows.size());
      for (std::size_t i = 0; i < rows.size() && rows[i].size() > j; ++i) col.push_back(rows[i][j]);
    }
  }
  return SetFactor::trusted(kind, std::move(blocks), SetSource{t.to_string(), generation, unit, t.size()});
}

/// An unexpanded birdtrack: scalar times an ordered product of set factors.
/// The leftmost factor acts last.
class SymbolicOperator {
 public:
  explicit SymbolicOperator(std::size_t degree = 1, Rational scalar = 1,
                            std::vector<SetFactor> factors = {})
      : degree_(degree), scalar_(std::move(scalar)), factors_(std::move(factors)) {
    if (degree_ == 0) throw std::invalid_argument("operator degree must be at least 1");
    for (const auto& f : factors_)
      if (static_cast<std::size_t>(f.max_index()) > degree_)
        throw std::invalid_argument("set index exceeds operator degree");
  }

  std::size_t degree() const { return degree_; }
  const Rational& scalar() const { return scalar_; }
  const std::vector<SetFactor>& factors() const { return factors_; }

  SymbolicOperator with_scalar(Rational s) const {
    SymbolicOperator r = *this;
    r.scalar_ = std::move(s);
    return r;
  }

  /// Number of non-empty set factors.
  std::size_t set_count() const {
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return !f.empty(); }));
  }

  AlgebraElement expand() const {
    AlgebraElement x = AlgebraElement::identity(degree_);
    for (const auto& f : factors_) {
      if (f.empty()) continue;
      for (const auto& b : f.blocks())
        x = x * (f.kind() == SetKind::sym ? symmetrizer(degree_, b) : antisymmetrizer(degree_, b));
    }
    return scalar_ * x;
  }

  /// Reflection about the vertical axis: the factor list reversed. Its
  /// expansion is the Hermitian conjugate of this one's.
  SymbolicOperator mirror() const {
    SymbolicOperator r = *this;
    std::reverse(r.factors_.begin(), r.factors_.end());
    return r;
  }

  /// Visibly Hermitian: the factor list reads the same in both directions.
  bool is_palindrome() const {
    for (std::size_t i = 0, j = factors_.size(); i < j--; ++i)
      if (!(factors_[i] == factors_[j])) return false;
    return true;
  }

  /// Kinds of consecutive non-empty factors differ.
  bool is_alternating() const {
    std::optional<SetKind> last;
    for (const auto& f : factors_) {
      if (f.empty()) continue;
      if (last && *last == f.kind()) return false;
      last = f.kind();
    }
    return true;
  }

  /// Drops empty factors and merges adjacent same-kind factors where one
  /// absorbs the other. Expansion is unchanged.
  SymbolicOperator absorbed() const {
    std::vector<SetFactor> out;
    for (const auto& f : factors_) {
      if (f.empty()) continue;
      bool swallowed = false;
      while (!out.empty()) {
        const SetFactor& top = out.back();
        if (top.absorbs(f)) {
          // equal sets: keep the one read off the larger tableau
          if (f.absorbs(top) && source_size(f) > source_size(top)) {
            out.pop_back();
            continue;
          }
          swallowed = true;
          break;
        }
        if (f.absorbs(top)) {
          out.pop_back();
          continue;
        }
        break;
      }
      if (!swallowed) out.push_back(f);
    }
    SymbolicOperator r = *this;
    r.factors_ = std::move(out);
    return r;
  }

  /// `4/3 * S[1,2][3,6] A[1,3,5] S[1,2,4]`; without factors, `1 * id`.
  std::string to_string() const {
    std::ostringstream os;
    os << scalar_.get_str() << " *";
    bool any = false;
    for (const auto& f : factors_) {
      if (f.empty()) continue;
      os << ' ' << f.to_string();
      any = true;
    }
    if (!any) os << " id";
    return os.str();
  }

  static SymbolicOperator parse(std::string_view text, std::size_t degree = 0);

  /// Structural equality: same degree, scalar and factor list.
  friend bool operator==(const SymbolicOperator& a, const SymbolicOperator& b) {
    return a.degree_ == b.degree_ && a.scalar_ == b.scalar_ && a.factors_ == b.factors_;
  }

 private:
  static std::size_t source_size(const SetFactor& f) { return f.source() ? f.source()->boxes : 0; }

  std::size_t degree_;
  Rational scalar_;
  std::vector<SetFactor> factors_;
};

/// Parses the text form. A degree of 0 means "largest index mentioned".
inline SymbolicOperator SymbolicOperator::parse(std::string_view text, std::size_t degree) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  const auto star = text.find('*');
  if (star == std::string_view::npos) throw std::invalid_argument("expected '<scalar> *' prefix");
  std::string_view scalar_text = text.substr(i, star - i);
  while (!scalar_text.empty() && scalar_text.back() == ' ') scalar_text.remove_suffix(1);
  Rational scalar = parse_rational(scalar_text);
  i = star + 1;
  std::vector<SetFactor> factors;
  bool identity_seen = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text.substr(i, 2) == "id") {
      identity_seen = true;
      i += 2;
      continue;
    }
    const char k = text[i];
    if (k != 'S' && k != 'A') throw std::invalid_argument("expected set factor 'S[...]' or 'A[...]'");
    ++i;
    Grid blocks;
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("expected '[' after set kind");
    while (i < text.size() && text[i] == '[') {
      ++i;
      std::vector<int> block;
      std::string num;
      while (i < text.size() && text[i] != ']') {
        const char c = text[i++];
        if (c >= '0' && c <= '9') {
          num.push_back(c);
        } else if (c == ',' || c == ' ') {
          if (!num.empty()) block.push_back(std::stoi(num));
          num.clear();
        } else {
          throw std::invalid_argument(std::string("unexpected character '") + c + "' in set block");
        }
      }
      if (i == text.size()) throw std::invalid_argument("unterminated set block");
      ++i;
      if (!num.empty()) block.push_back(std::stoi(num));
      if (!block.empty()) blocks.push_back(std::move(block));
    }
    factors.emplace_back(k == 'S' ? SetKind::sym : SetKind::anti, std::move(blocks));
  }
  if (identity_seen && !factors.empty())
    throw std::invalid_argument("'id' cannot be combined with set factors");
  if (degree == 0) {
    int m = 1;
    for (const auto& f : factors) m = std::max(m, f.max_index());
    degree = static_cast<std::size_t>(m);
  }
  return SymbolicOperator(degree, std::move(scalar), std::move(factors));
}

inline AlgebraElement expand(const SymbolicOperator& x) { return x.expand(); }
inline std::size_t set_count(const SymbolicOperator& x) { return x.set_count(); }

// ---------------------------------------------------------------------------
// Chains of Young projectors

/// An ordered product of normalized Young projectors Y_t, every unit embedded
/// at a common degree.
struct YoungChain {
  std::size_t degree = 1;
  std::vector<YoungTableau> units;
};

/// Product of the alpha constants and the flattened S/A factors of every unit.
inline SymbolicOperator to_symbolic(const YoungChain& chain) {
  Rational scalar = 1;
  std::vector<SetFactor> factors;
  factors.reserve(2 * chain.units.size());
  for (std::size_t u = 0; u < chain.units.size(); ++u) {
    const auto& t = chain.units[u];
    scalar *= t.alpha();
    const int generation = static_cast<int>(chain.degree) - static_cast<int>(t.size());
    for (SetKind k : {SetKind::sym, SetKind::anti}) {
      SetFactor f = sets_of(t, k, generation, static_cast<int>(u));
      if (!f.empty()) factors.push_back(std::move(f));
    }
  }
  return SymbolicOperator(chain.degree, std::move(scalar), std::move(factors));
}

inline AlgebraElement expand(const YoungChain& chain) { return to_symbolic(chain).expand(); }

/// Removes every unit that is a common ancestor of both its neighbours
/// (Y_a Y_g Y_b = Y_a Y_b), repeating until nothing more cancels.
inline YoungChain cancel_wedged(YoungChain chain) {
  auto& u = chain.units;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
      if (u[i].is_ancestor_of(u[i - 1]) && u[i].is_ancestor_of(u[i + 1])) {
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  return chain;
}

/// Young units of the chain that keep at least one set after absorption.
/// Two-box units are a bare S12 or A12 and are not counted once the chain
/// has more than two boxes: every one of them sits next to a three-box unit
/// holding the same pair. A chain that collapses completely counts as one.
inline std::size_t absorbed_unit_count(const YoungChain& chain) {
  const auto merged = to_symbolic(chain).absorbed();
  std::set<int> units;
  for (const auto& f : merged.factors())
    if (f.source() && (chain.degree <= 2 || f.source()->boxes > 2)) units.insert(f.source()->unit);
  if (units.empty() && !chain.units.empty()) return 1;
  return units.size();
}

/// Distinct tableaux that contribute a set to the absorbed operator.
inline std::size_t source_tableau_count(const SymbolicOperator& x) {
  std::set<std::string> names;
  const auto merged = x.absorbed();
  for (const auto& f : merged.factors())
    if (f.source()) names.insert(f.source()->tableau);
  return std::max<std::size_t>(names.size(), 1);
}

// ---------------------------------------------------------------------------
// Rewrite rules

class RewriteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arranges the rows given by a symmetrizer set and the columns given by an
/// antisymmetrizer set into a left/top-aligned grid, or nullopt if the two
/// sets do not describe one diagram. Indices in neither set are ignored.
inline std::optional<Grid> grid_from_sets(const SetFactor& rows_set, const SetFactor& cols_set) {
  std::map<int, std::size_t> row_of, col_of;
  Grid rows = rows_set.blocks();
  Grid cols = cols_set.blocks();
  std::set<int> all;
  for (const auto& b : rows) all.insert(b.begin(), b.end());
  for (const auto& b : cols) all.insert(b.begin(), b.end());
  std::set<int> in_rows, in_cols;
  for (const auto& b : rows) in_rows.insert(b.begin(), b.end());
  for (const auto& b : cols) in_cols.insert(b.begin(), b.end());
  for (int v : all) {
    if (!in_rows.count(v)) rows.push_back({v});
    if (!in_cols.count(v)) cols.push_back({v});
  }
  auto by_length = [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  };
  std::sort(rows.begin(), rows.end(), by_length);
  std::sort(cols.begin(), cols.end(), by_length);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) row_of[v] = i;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int v : cols[j]) col_of[v] = j;
  Grid grid(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) grid[i].assign(rows[i].size(), 0);
  for (int v : all) {
    const auto i = row_of[v];
    const auto j = col_of[v];
    if (j >= grid[i].size() || grid[i][j] != 0) return std::nullopt;
    grid[i][j] = v;
  }
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int v : cols[j])
      if (row_of[v] >= cols[j].size()) return std::nullopt;
  return grid;
}

/// Exact lambda with expand(x) == lambda * Y_t for an operator of the form
/// S_t M A_t, where M alternates antisymmetrizer and symmetrizer sets (starting
/// with A, ending with S) each nested with the corresponding set of t.
inline Rational proportionality_to_young(const SymbolicOperator& x, const YoungTableau& t) {
  std::vector<SetFactor> fs;
  for (const auto& f : x.factors())
    if (!f.empty()) fs.push_back(f);
  const SetFactor s_t = sets_of(t, SetKind::sym);
  const SetFactor a_t = sets_of(t, SetKind::anti);
  auto drop_front = [&](const SetFactor& expected) {
    if (expected.empty()) return;
    if (fs.empty() || !(fs.front() == expected))
      throw RewriteError("operator does not start with the row symmetrizers of " + t.to_string());
    fs.erase(fs.begin());
  };
  auto drop_back = [&](const SetFactor& expected) {
    if (expected.empty()) return;
    if (fs.empty() || !(fs.back() == expected))
      throw RewriteError("operator does not end with the column antisymmetrizers of " + t.to_string());
    fs.pop_back();
  };
  drop_front(s_t);
  drop_back(a_t);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const SetFactor& outer = fs[i].kind() == SetKind::sym ? s_t : a_t;
    if (!outer.absorbs(fs[i]) && !fs[i].absorbs(outer))
      throw RewriteError("interior set " + fs[i].to_string() + " is not nested with " +
                         outer.to_string());
  }
  const std::size_t n = x.degree();
  const AlgebraElement lhs = x.expand();
  const AlgebraElement y = (t.alpha() * (sets_of(t, SetKind::sym).expand(n) *
                                         sets_of(t, SetKind::anti).expand(n)));
  const Permutation id = Permutation::identity(n);
  const Permutation& ref = y.coefficient(id) != 0 ? id : y.terms().front().perm;
  Rational lambda = lhs.coefficient(ref) / y.coefficient(ref);
  if (!(lhs == lambda * y)) throw RewriteError("expansion is not proportional to Y_" + t.to_string());
  return lambda;
}

/// Propagation of a missing row symmetrizer (or column antisymmetrizer)
/// through the middle set of the triple starting at `position`:
///   S_t A_t S_{t\R} -> S_t A_t S_t   and   S_{t\R} A_t S_t -> S_t A_t S_t,
/// and the same with S and A exchanged. Requires the amputated tableau of t
/// according to R to be rectangular.
inline SymbolicOperator propagate(const SymbolicOperator& x, std::size_t position) {
  const auto& fs = x.factors();
  if (position + 2 >= fs.size()) throw RewriteError("no factor triple at the given position");
  const SetFactor& left = fs[position];
  const SetFactor& middle = fs[position + 1];
  const SetFactor& right = fs[position + 2];
  if (left.kind() != right.kind() || middle.kind() == left.kind())
    throw RewriteError("factor triple is not of the form S A S or A S A");
  if (left == right) return x;

  const bool left_is_full = left.absorbs(right);
  const SetFactor& full = left_is_full ? left : right;
  const SetFactor& partial = left_is_full ? right : left;
  if (!full.absorbs(partial)) throw RewriteError("outer sets are not nested");
  std::vector<std::vector<int>> missing;
  for (const auto& b : full.blocks())
    if (std::find(partial.blocks().begin(), partial.blocks().end(), b) == partial.blocks().end())
      missing.push_back(b);
  if (missing.size() != 1 || partial.blocks().size() + 1 != full.blocks().size())
    throw RewriteError("outer sets must differ by exactly one block");

  const bool sym_outside = full.kind() == SetKind::sym;
  const auto grid = sym_outside ? grid_from_sets(full, middle) : grid_from_sets(middle, full);
  if (!grid) throw RewriteError("sets do not describe a single tableau");
  const Grid amputated = sym_outside ? amputate_columns(*grid, missing.front())
                                     : amputate_rows(*grid, missing.front());
  if (!is_rectangular(amputated))
    throw RewriteError("amputated tableau is not rectangular; propagation not allowed");

  std::vector<SetFactor> out = fs;
  out[left_is_full ? position + 2 : position] = full;
  return SymbolicOperator(x.degree(), x.scalar(), std::move(out));
}

}  // namespace birdtrack
