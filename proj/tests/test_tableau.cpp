#include "birdtrack/algebra.hpp"
#include "birdtrack/tableau.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace birdtrack;

namespace {

YoungTableau T(const char* s) { return YoungTableau::parse(s); }

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  return out;
}

// Every filling of every shape with 1..n, kept when it validates.
std::size_t brute_force_count(std::size_t n) {
  std::size_t count = 0;
  for (const auto& shape : partitions(n, n)) {
    std::vector<int> fill(n);
    std::iota(fill.begin(), fill.end(), 1);
    do {
      Grid rows;
      std::size_t k = 0;
      for (auto len : shape) {
        rows.emplace_back(fill.begin() + static_cast<long>(k), fill.begin() + static_cast<long>(k + len));
        k += len;
      }
      try {
        YoungTableau::validate(rows);
        ++count;
      } catch (const TableauError&) {
      }
    } while (std::next_permutation(fill.begin(), fill.end()));
  }
  return count;
}

TableauErrorKind error_kind(const Grid& rows) {
  try {
    YoungTableau::validate(rows);
  } catch (const TableauError& e) {
    return e.kind();
  }
  FAIL("expected a TableauError");
  return TableauErrorKind::not_found;
}

}  // namespace

TEST_CASE("validation accepts standard tableaux") {
  CHECK(YoungTableau::validate({{1, 3, 6}, {2, 5, 7}, {4}}).size() == 7);
  CHECK(YoungTableau::validate({{1}}).size() == 1);
}

TEST_CASE("validation reports distinct error kinds") {
  CHECK(error_kind({{3, 4, 1}, {2, 6, 7, 5}}) == TableauErrorKind::misaligned_shape);
  CHECK(error_kind({{1, 2}, {2}}) == TableauErrorKind::bad_entries);
  CHECK(error_kind({{1, 2}, {4}}) == TableauErrorKind::bad_entries);
  CHECK(error_kind({{2, 1}, {3}}) == TableauErrorKind::row_not_increasing);
  CHECK(error_kind({{1, 3}, {4, 2}}) == TableauErrorKind::row_not_increasing);
  CHECK(error_kind({{1, 2}, {3, 4}, {}}) == TableauErrorKind::misaligned_shape);
  CHECK(error_kind({{2, 3}, {1, 4}}) == TableauErrorKind::column_not_increasing);
  CHECK(error_kind({}) == TableauErrorKind::bad_entries);
}

TEST_CASE("text form round-trips and rejects junk") {
  for (const char* s : {"1", "1,2,4/3,5", "1,3,6/2,5,7/4", "1/2/3"}) CHECK(T(s).to_string() == s);
  CHECK(T("1, 2 / 3").to_string() == "1,2/3");
  CHECK_THROWS_AS(T("1,,2"), TableauError);
  CHECK_THROWS_AS(T("1;2"), TableauError);
  CHECK_THROWS_AS(T(""), TableauError);
  CHECK_THROWS_AS(T("1,2/"), TableauError);
}

TEST_CASE("enumeration of three boxes follows the canonical listing") {
  const auto ts = enumerate(3);
  REQUIRE(ts.size() == 4);
  CHECK(ts[0].to_string() == "1,2,3");
  CHECK(ts[1].to_string() == "1,2/3");
  CHECK(ts[2].to_string() == "1,3/2");
  CHECK(ts[3].to_string() == "1/2/3");
  CHECK(enumerate(1).size() == 1);
  CHECK_THROWS(enumerate(0));
}

TEST_CASE("enumeration counts match a brute-force filter") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate(n).size() == brute_force_count(n));
  CHECK(enumerate(4).size() == 10);
  CHECK(enumerate(5).size() == 26);
  CHECK(enumerate(7).size() == 232);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ts = enumerate(n);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
  }
}

TEST_CASE("parent, ancestor and children") {
  CHECK(T("1,3,6/2,5/4").parent() == T("1,3/2,5/4"));
  CHECK(T("1,2,4/3,5").ancestor(0) == T("1,2,4/3,5"));
  CHECK(T("1,2,4/3,5").ancestor(3) == T("1,2"));
  CHECK_THROWS(T("1,2,4/3,5").ancestor(5));
  CHECK_THROWS(T("1").parent());

  const auto kids = T("1,2,3/4").children();
  REQUIRE(kids.size() == 3);
  CHECK(kids[0] == T("1,2,3,5/4"));
  CHECK(kids[1] == T("1,2,3/4,5"));
  CHECK(kids[2] == T("1,2,3/4/5"));
  CHECK(T("1").children() == std::vector<YoungTableau>{T("1,2"), T("1/2")});
}

TEST_CASE("children of all tableaux partition the next level") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<YoungTableau> all;
    for (const auto& t : enumerate(n - 1))
      for (const auto& c : t.children()) {
        CHECK(c.parent() == t);
        all.push_back(c);
      }
    std::sort(all.begin(), all.end());
    CHECK(all == enumerate(n));
  }
}

TEST_CASE("ancestry is consistent with repeated parents") {
  for (const auto& t : enumerate(6))
    for (std::size_t m = 0; m < 6; ++m) {
      YoungTableau a = t;
      for (std::size_t k = 0; k < m; ++k) a = a.parent();
      CHECK(t.ancestor(m) == a);
      CHECK(a.is_ancestor_of(t));
    }
  CHECK_FALSE(T("1,3/2").is_ancestor_of(T("1,2,3/4")));
  CHECK_FALSE(T("1,2,3/4").is_ancestor_of(T("1,2,3")));
}

TEST_CASE("descendants over several generations") {
  const auto ds = descendants(T("1,2,3"), 2);
  std::vector<std::string> names;
  for (const auto& d : ds) names.push_back(d.to_string());
  CHECK(names == std::vector<std::string>{"1,2,3,4,5", "1,2,3,4/5", "1,2,3,5/4", "1,2,3/4,5", "1,2,3/4/5"});
  CHECK(descendants(T("1"), 4).size() == enumerate(5).size());
}

TEST_CASE("words and lexical order") {
  const auto phi = T("1,5,7,9/2,6,8/3/4");
  CHECK(phi.column_word() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(phi.row_word() == std::vector<int>{1, 5, 7, 9, 2, 6, 8, 3, 4});
  CHECK(phi.is_column_ordered());
  CHECK_FALSE(phi.is_row_ordered());
  CHECK(T("1,2/3").is_row_ordered());
  CHECK_FALSE(T("1,2/3").is_column_ordered());
  CHECK(T("1,2,3,4").is_row_ordered());
  CHECK(T("1,2,3,4").is_column_ordered());
  CHECK_FALSE(T("1,2,4/3,5").is_lexically_ordered());
}

TEST_CASE("order checks agree with the words") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate(n)) {
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 1);
      CHECK(t.is_row_ordered() == (t.row_word() == id));
      CHECK(t.is_column_ordered() == (t.column_word() == id));
    }
}

TEST_CASE("measure of lexical disorder") {
  CHECK(T("1,2,4/3,5").mold() == 2);
  CHECK(T("1,2/3").mold() == 0);
  CHECK(T("1,2,4,7/3,6/5,8/9").mold() == 6);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate(n)) {
      CHECK(t.mold() <= (n > 3 ? n - 3 : 0));
      CHECK(t.ancestor(t.mold()).is_lexically_ordered());
    }
}

TEST_CASE("alpha values") {
  CHECK(T("1,2/3").alpha() == make_rational(4, 3));
  CHECK(T("1,3,4/2,5").alpha() == 2);
  CHECK(T("1,2").alpha() == 1);
  CHECK(T("1/2/3").alpha() == 1);
}

TEST_CASE("alpha inverts the quasi-idempotency factor") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate(n)) {
      AlgebraElement s = AlgebraElement::identity(n), a = AlgebraElement::identity(n);
      for (const auto& r : t.rows()) s = s * symmetrizer(n, std::span<const int>(r));
      for (const auto& c : t.columns()) a = a * antisymmetrizer(n, std::span<const int>(c));
      const auto lambda = quasi_idempotent_factor(s * a);
      REQUIRE(lambda.has_value());
      CHECK(t.alpha() * *lambda == 1);
    }
}

TEST_CASE("hook lengths count tableaux of each shape") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::map<std::vector<std::size_t>, std::size_t> per_shape;
    for (const auto& t : enumerate(n)) ++per_shape[t.shape()];
    for (const auto& t : enumerate(n)) {
      mpz_class fact, prod = 1;
      mpz_fac_ui(fact.get_mpz_t(), n);
      for (auto h : t.hook_lengths()) prod *= static_cast<unsigned long>(h);
      CHECK(mpz_class(fact / prod) == static_cast<unsigned long>(per_shape[t.shape()]));
    }
  }
}

TEST_CASE("horizontal and vertical permutations") {
  const auto t = T("1,3,4/2,5");
  std::set<std::string> h, v;
  for (const auto& p : t.horizontal_perms()) h.insert(p.to_string());
  for (const auto& p : t.vertical_perms()) v.insert(p.to_string());
  CHECK(h.size() == 12);
  for (const char* s : {"e", "(1 3)", "(1 4)", "(3 4)", "(1 3 4)", "(1 4 3)", "(2 5)"}) CHECK(h.count(s) == 1);
  CHECK(v == std::set<std::string>{"e", "(1 2)", "(3 5)", "(1 2)(3 5)"});
  CHECK(T("1/2/3").horizontal_perms().size() == 1);
  CHECK(t.horizontal_perms(7).front().degree() == 7);
}

TEST_CASE("horizontal permutations fix the row symmetrizer") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& t : enumerate(n)) {
      AlgebraElement s = AlgebraElement::identity(n), a = AlgebraElement::identity(n);
      for (const auto& r : t.rows()) s = s * symmetrizer(n, std::span<const int>(r));
      for (const auto& c : t.columns()) a = a * antisymmetrizer(n, std::span<const int>(c));
      for (const auto& h : t.horizontal_perms()) CHECK(from_perm(h) * s == s);
      for (const auto& v : t.vertical_perms()) CHECK(from_perm(v) * a == Rational(v.sign()) * a);
    }
}

TEST_CASE("amputation") {
  const auto big = T("1,3,5,9/2,4,8,10/6,7,13/11/12");
  const std::vector<int> col{3, 4, 7};
  CHECK(big.amputate_rows(col) == Grid{{1, 3, 5, 9}, {2, 4, 8, 10}, {6, 7, 13}});
  const auto q = T("1,2,3/4,5/6,7");
  const std::vector<int> row{6, 7};
  const auto cut = q.amputate_columns(row);
  CHECK(cut == Grid{{1, 2}, {4, 5}, {6, 7}});
  CHECK(is_rectangular(cut));
  const auto line = T("1,2,3");
  const std::vector<int> whole{1, 2, 3};
  CHECK(line.amputate_columns(whole) == line.rows());
  const std::vector<int> absent{4, 6};
  CHECK_THROWS_AS(q.amputate_columns(absent), TableauError);
  CHECK_FALSE(is_rectangular(q.rows()));
}
