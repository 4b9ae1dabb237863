#pragma once

#include "birdtrack/permutation.hpp"
#include "birdtrack/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace birdtrack {

enum class TableauErrorKind {
  misaligned_shape,
  bad_entries,
  row_not_increasing,
  column_not_increasing,
  out_of_range,
  not_found,
};

class TableauError : public std::invalid_argument {
 public:
  TableauError(TableauErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  TableauErrorKind kind() const { return kind_; }

 private:
  TableauErrorKind kind_;
};

/// Rows of boxes that need not form a standard tableau (amputated tableaux,
/// grids rebuilt from symmetrizer/antisymmetrizer sets).
using Grid = std::vector<std::vector<int>>;

inline bool is_rectangular(const Grid& g) {
  if (g.empty()) return true;
  return std::all_of(g.begin(), g.end(), [&](const auto& r) { return r.size() == g.front().size(); });
}

/// Columns of a left-aligned grid, read top to bottom.
inline Grid grid_columns(const Grid& g) {
  Grid cols;
  for (const auto& row : g)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (cols.size() <= j) cols.emplace_back();
      cols[j].push_back(row[j]);
    }
  return cols;
}

/// Removes every row that does not overlap the given column.
inline Grid amputate_rows(const Grid& g, std::span<const int> column) {
  const Grid cols = grid_columns(g);
  auto it = std::find_if(cols.begin(), cols.end(), [&](const auto& c) {
    return std::equal(c.begin(), c.end(), column.begin(), column.end());
  });
  if (it == cols.end()) throw TableauError(TableauErrorKind::not_found, "column not found in tableau");
  const auto j = static_cast<std::size_t>(it - cols.begin());
  Grid out;
  for (const auto& row : g)
    if (row.size() > j) out.push_back(row);
  return out;
}

/// Removes every column that does not overlap the given row.
inline Grid amputate_columns(const Grid& g, std::span<const int> row) {
  auto it = std::find_if(g.begin(), g.end(), [&](const auto& r) {
    return std::equal(r.begin(), r.end(), row.begin(), row.end());
  });
  if (it == g.end()) throw TableauError(TableauErrorKind::not_found, "row not found in tableau");
  const std::size_t width = it->size();
  Grid out;
  for (const auto& r : g) out.emplace_back(r.begin(), r.begin() + std::min(width, r.size()));
  return out;
}

/// A standard Young tableau: left- and top-aligned rows of weakly decreasing
/// length, filled with 1..n, strictly increasing along rows and down columns.
class YoungTableau {
 public:
  YoungTableau() : rows_{{1}} {}

  static YoungTableau validate(Grid rows) {
    if (rows.empty()) throw TableauError(TableauErrorKind::bad_entries, "tableau has no boxes");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty())
        throw TableauError(TableauErrorKind::misaligned_shape, "tableau has an empty row");
      if (i > 0 && rows[i].size() > rows[i - 1].size())
        throw TableauError(TableauErrorKind::misaligned_shape,
                           "row lengths must weakly decrease from top to bottom");
    }
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows)
      for (int v : r) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
          throw TableauError(TableauErrorKind::bad_entries,
                             "entries must be exactly 1.." + std::to_string(n));
        seen[v] = true;
      }
    for (const auto& r : rows)
      for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j] <= r[j - 1])
          throw TableauError(TableauErrorKind::row_not_increasing,
                             "entries must increase along each row");
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j] <= rows[i - 1][j])
          throw TableauError(TableauErrorKind::column_not_increasing,
                             "entries must increase down each column");
    YoungTableau t;
    t.rows_ = std::move(rows);
    return t;
  }

  /// Rows joined by '/', entries by ',': "1,2,4/3,5".
  static YoungTableau parse(std::string_view text) {
    Grid rows;
    std::vector<int> row;
    std::string num;
    auto flush_num = [&] {
      if (num.empty()) throw TableauError(TableauErrorKind::bad_entries, "empty entry in tableau text");
      if (num.size() > 6) throw TableauError(TableauErrorKind::bad_entries, "tableau entry too large");
      row.push_back(std::stoi(num));
      num.clear();
    };
    for (char c : text) {
      if (c == ' ') continue;
      if (c >= '0' && c <= '9') {
        num.push_back(c);
      } else if (c == ',') {
        flush_num();
      } else if (c == '/') {
        flush_num();
        rows.push_back(std::move(row));
        row.clear();
      } else {
        throw TableauError(TableauErrorKind::bad_entries,
                           std::string("unexpected character '") + c + "' in tableau text");
      }
    }
    flush_num();
    rows.push_back(std::move(row));
    return validate(std::move(rows));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(3 * size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += '/';
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ',';
        s += std::to_string(rows_[i][j]);
      }
    }
    return s;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const Grid& rows() const { return rows_; }
  Grid columns() const { return grid_columns(rows_); }

  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& r : rows_) s.push_back(r.size());
    return s;
  }

  bool same_shape(const YoungTableau& o) const { return shape() == o.shape(); }

  /// Removes the box holding the largest entry.
  YoungTableau parent() const {
    const int n = static_cast<int>(size());
    if (n <= 1) throw TableauError(TableauErrorKind::out_of_range, "a one-box tableau has no parent");
    YoungTableau t = *this;
    for (auto& r : t.rows_)
      if (r.back() == n) {
        r.pop_back();
        break;
      }
    if (t.rows_.back().empty()) t.rows_.pop_back();
    return t;
  }

  /// m-fold parent; ancestor(0) is the tableau itself.
  YoungTableau ancestor(std::size_t m) const {
    if (m >= size())
      throw TableauError(TableauErrorKind::out_of_range,
                         "ancestor generation must be smaller than the box count");
    YoungTableau t = *this;
    for (std::size_t k = 0; k < m; ++k) t = t.parent();
    return t;
  }

  bool is_ancestor_of(const YoungTableau& descendant) const {
    const std::size_t n = size();
    const std::size_t d = descendant.size();
    return n <= d && descendant.ancestor(d - n) == *this;
  }

  /// Every tableau obtained by adding box n+1 at an outer corner.
  std::vector<YoungTableau> children() const {
    const int next = static_cast<int>(size()) + 1;
    std::vector<YoungTableau> out;
    for (std::size_t i = 0; i <= rows_.size(); ++i) {
      YoungTableau t = *this;
      if (i == rows_.size()) {
        t.rows_.push_back({next});
      } else if (i == 0 || rows_[i - 1].size() > rows_[i].size()) {
        t.rows_[i].push_back(next);
      } else {
        continue;
      }
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Entries read row by row, top to bottom.
  std::vector<int> row_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  /// Entries read column by column, left to right.
  std::vector<int> column_word() const {
    std::vector<int> w;
    for (const auto& c : columns()) w.insert(w.end(), c.begin(), c.end());
    return w;
  }

  bool is_row_ordered() const {
    int next = 1;
    for (const auto& r : rows_)
      for (int v : r)
        if (v != next++) return false;
    return true;
  }

  bool is_column_ordered() const {
    int next = 1;
    for (std::size_t j = 0; j < rows_.front().size(); ++j)
      for (std::size_t i = 0; i < rows_.size() && rows_[i].size() > j; ++i)
        if (rows_[i][j] != next++) return false;
    return true;
  }
  bool is_lexically_ordered() const { return is_row_ordered() || is_column_ordered(); }

  /// Measure of lexical disorder: least m with ancestor(m) lexically ordered.
  std::size_t mold() const {
    YoungTableau t = *this;
    std::size_t m = 0;
    while (!t.is_lexically_ordered()) {
      t = t.parent();
      ++m;
    }
    return m;
  }

  std::vector<std::size_t> hook_lengths() const {
    const auto cols = columns();
    std::vector<std::size_t> hooks;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        hooks.push_back((rows_[i].size() - j - 1) + (cols[j].size() - i - 1) + 1);
    return hooks;
  }

  /// Normalization making alpha * S_rows A_columns idempotent:
  /// (prod row-length! * prod column-length!) / prod hook lengths.
  Rational alpha() const {
    mpz_class num = 1;
    mpz_class den = 1;
    for (const auto& r : rows_) num *= factorial(r.size());
    for (const auto& c : columns()) num *= factorial(c.size());
    for (auto h : hook_lengths()) den *= static_cast<unsigned long>(h);
    Rational a(num, den);
    a.canonicalize();
    return a;
  }

  /// Permutations (at the given degree, default n) preserving every row.
  std::vector<Permutation> horizontal_perms(std::size_t degree = 0) const {
    return block_perms(rows_, degree ? degree : size());
  }

  /// Permutations (at the given degree, default n) preserving every column.
  std::vector<Permutation> vertical_perms(std::size_t degree = 0) const {
    return block_perms(columns(), degree ? degree : size());
  }

  Grid amputate_rows(std::span<const int> column) const { return birdtrack::amputate_rows(rows_, column); }
  Grid amputate_columns(std::span<const int> row) const { return birdtrack::amputate_columns(rows_, row); }

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

  /// Canonical order: shapes in descending lexicographic order, then row-word.
  friend std::strong_ordering operator<=>(const YoungTableau& a, const YoungTableau& b) {
    const auto sa = a.shape();
    const auto sb = b.shape();
    if (sa != sb) return sb <=> sa;
    return a.row_word() <=> b.row_word();
  }

 private:
  static mpz_class factorial(std::size_t k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
  }

  static std::vector<Permutation> block_perms(const Grid& blocks, std::size_t degree) {
    std::vector<Permutation> acc{Permutation::identity(degree)};
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;
      const auto local = permutations_of(degree, b);
      std::vector<Permutation> next;
      next.reserve(acc.size() * local.size());
      for (const auto& p : acc)
        for (const auto& q : local) next.push_back(compose(p, q));
      acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
  }

  Grid rows_;
};

/// All standard Young tableaux with n boxes, in canonical order.
inline std::vector<YoungTableau> enumerate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate requires n >= 1");
  std::vector<YoungTableau> level{YoungTableau()};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<YoungTableau> next;
    for (const auto& t : level) {
      auto kids = t.children();
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

/// All tableaux `generations` boxes larger than t that have t as an ancestor.
inline std::vector<YoungTableau> descendants(const YoungTableau& t, std::size_t generations) {
  std::vector<YoungTableau> level{t};
  for (std::size_t g = 0; g < generations; ++g) {
    std::vector<YoungTableau> next;
    for (const auto& s : level) {
      auto kids = s.children();
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace birdtrack
