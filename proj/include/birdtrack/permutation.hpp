#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace birdtrack {

/// A bijection of {1..n}. The degree is carried explicitly and never inferred
/// from the support, so embedding into a larger degree is lossless.
///
/// Points are 1-based in the public interface. compose(p, q) applies q first,
/// then p, matching the right-to-left reading of birdtrack diagrams.
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 32;

  Permutation() : Permutation(identity(1)) {}

  static Permutation identity(std::size_t n) {
    check_degree(n);
    Permutation p(n, 0);
    for (std::size_t i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// images[i-1] is the image of point i.
  static Permutation from_images(std::span<const int> images) {
    const std::size_t n = images.size();
    check_degree(n);
    Permutation p(n, 0);
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
        throw std::invalid_argument("images do not form a bijection of {1.." +
                                    std::to_string(n) + "}");
      seen[v - 1] = true;
      p.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  /// Builds a permutation of degree n from disjoint cycles, e.g. {{1,3,2}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    std::array<bool, kMaxDegree> used{};
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int a = cycle[k];
        if (a < 1 || static_cast<std::size_t>(a) > n)
          throw std::invalid_argument("cycle point " + std::to_string(a) + " outside {1.." +
                                      std::to_string(n) + "}");
        if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint");
        used[a - 1] = true;
        const int b = cycle[(k + 1) % cycle.size()];
        p.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
      }
    }
    return p;
  }

  static Permutation transposition(std::size_t n, int a, int b) {
    return from_cycles(n, {{a, b}});
  }

  /// Parses the canonical text form ("e", "(1 2)", "(1 2 3)(4 5)") at the
  /// given degree. Commas are accepted as separators inside a cycle.
  static Permutation parse(std::string_view text, std::size_t degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == 'e') {
      ++i;
      skip_ws();
      if (i != text.size()) throw std::invalid_argument("trailing input after 'e'");
      return identity(degree);
    }
    while (true) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(') throw std::invalid_argument("expected '(' in permutation text");
      ++i;
      std::vector<int> cycle;
      while (true) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i == text.size()) throw std::invalid_argument("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("expected digit in cycle");
        int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
        cycle.push_back(v);
      }
      if (cycle.empty()) throw std::invalid_argument("empty cycle");
      cycles.push_back(std::move(cycle));
    }
    if (cycles.empty()) throw std::invalid_argument("empty permutation text");
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const { return n_; }

  /// Image of the 1-based point i.
  int operator()(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > n_) throw std::out_of_range("point outside degree");
    return img_[i - 1] + 1;
  }

  std::vector<int> images() const {
    std::vector<int> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = img_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// Cycles including fixed points.
  std::size_t cycle_count() const {
    std::array<bool, kMaxDegree> seen{};
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      ++count;
      for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return count;
  }

  int sign() const { return ((n_ - cycle_count()) % 2 == 0) ? 1 : -1; }

  /// Acts as *this on 1..degree() and as the identity on the remaining points.
  Permutation embed(std::size_t m) const {
    if (m < n_) throw std::invalid_argument("cannot embed into a smaller degree");
    check_degree(m);
    Permutation r(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      r.img_[i] = i < n_ ? img_[i] : static_cast<std::uint8_t>(i);
    return r;
  }

  /// Non-trivial cycles in canonical order: each starts at its smallest
  /// point, cycles sorted by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      std::vector<int> cycle;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cycle.push_back(static_cast<int>(j) + 1);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "e";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ')';
    }
    return os.str();
  }

  /// Lexicographic rank of the image sequence among all of S_n.
  std::uint64_t rank() const {
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t below = used & ((1u << img_[i]) - 1u);
      const auto smaller = static_cast<std::uint64_t>(img_[i] - std::popcount(below));
      r = r * (n_ - i) + smaller;
      used |= 1u << img_[i];
    }
    return r;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n_ != q.n_) throw std::invalid_argument("degree mismatch in compose");
    Permutation r(p.n_, 0);
    for (std::size_t i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
  }

  /// Degree first, then lexicographic on images; the identity is the least
  /// permutation of its degree.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (auto c = a.img_[i] <=> b.img_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 31 + img_[i];
    return h;
  }

 private:
  Permutation(std::size_t n, int) : n_(static_cast<std::uint8_t>(n)) {}

  static void check_degree(std::size_t n) {
    if (n == 0) throw std::invalid_argument("permutation degree must be at least 1");
    if (n > kMaxDegree)
      throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));
  }

  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 1;
};

inline Permutation identity(std::size_t n) { return Permutation::identity(n); }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline int sign(const Permutation& p) { return p.sign(); }
inline std::size_t cycle_count(const Permutation& p) { return p.cycle_count(); }
inline Permutation embed(const Permutation& p, std::size_t m) { return p.embed(m); }
inline std::string to_string(const Permutation& p) { return p.to_string(); }

/// Moves the tensor factor in slot k to slot p(k):
/// (1 2 3) applied to (v1, v2, v3) gives (v3, v1, v2).
/// This is a left action: apply(compose(p, q), w) == apply(p, apply(q, w)).
template <class T>
std::vector<T> apply_to_word(const Permutation& p, std::span<const T> word) {
  if (word.size() != p.degree()) throw std::invalid_argument("word length does not match degree");
  std::vector<T> out(word.size());
  for (std::size_t k = 0; k < word.size(); ++k)
    out[static_cast<std::size_t>(p(static_cast<int>(k) + 1)) - 1] = word[k];
  return out;
}

template <class T>
std::vector<T> apply_to_word(const Permutation& p, const std::vector<T>& word) {
  return apply_to_word(p, std::span<const T>(word));
}

/// All permutations of degree n that move only points in `points`, in
/// ascending order. The identity comes first.
inline std::vector<Permutation> permutations_of(std::size_t n, std::span<const int> points) {
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> arrangement = sorted;
  std::vector<Permutation> out;
  std::vector<int> images(n);
  do {
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i) + 1;
    for (std::size_t k = 0; k < sorted.size(); ++k) images[sorted[k] - 1] = arrangement[k];
    out.push_back(Permutation::from_images(std::span<const int>(images)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace birdtrack

template <>
struct std::hash<birdtrack::Permutation> {
  std::size_t operator()(const birdtrack::Permutation& p) const noexcept { return p.hash(); }
};
