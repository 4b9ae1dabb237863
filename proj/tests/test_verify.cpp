#include "birdtrack/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace birdtrack;

namespace {

YoungTableau T(const char* s) { return YoungTableau::parse(s); }
Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

void check_witness_rule(const VerificationReport& r) {
  CHECK(r.passed != r.witness.has_value());
  if (r.witness) CHECK_FALSE(r.witness->is_zero());
}

}  // namespace

TEST_CASE("completeness of both families for small n") {
  ProjectorCache cache;
  for (std::size_t n = 1; n <= 4; ++n)
    for (Family f : {Family::young, Family::hermitian}) {
      const auto r = check_completeness(n, f, cache);
      CHECK(r.passed);
      check_witness_rule(r);
      CHECK(r.scope.n == n);
      CHECK(r.scope.tableaux.size() == enumerate(n).size());
    }
  CHECK(check_completeness(5, Family::hermitian, cache).passed);
  CHECK_THROWS_AS(check_completeness(0, Family::young), PreconditionError);
}

TEST_CASE("Young completeness and orthogonality break at five boxes") {
  ProjectorCache cache;
  const auto c = check_completeness(5, Family::young, cache);
  CHECK_FALSE(c.passed);
  check_witness_rule(c);
  REQUIRE(c.witness);
  CHECK(c.witness->size() == 60);

  const auto o = check_orthogonality(5, Family::young, cache);
  CHECK_FALSE(o.passed);
  check_witness_rule(o);
  const auto prod = cache.young(T("1,2,3/4,5")) * cache.young(T("1,3,5/2,4"));
  CHECK_FALSE(prod.is_zero());
  CHECK_FALSE((cache.young(T("1,2/3,4/5")) * cache.young(T("1,4/2,5/3"))).is_zero());
  CHECK(check_orthogonality(5, Family::hermitian, cache).passed);
}

TEST_CASE("orthogonality for n up to four") {
  ProjectorCache cache;
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(check_orthogonality(n, Family::young, cache).passed);
    CHECK(check_orthogonality(n, Family::hermitian, cache).passed);
  }
}

TEST_CASE("Hermiticity of the Hermitian family") {
  ProjectorCache cache;
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_hermiticity(n, cache).passed);
}

TEST_CASE("hierarchy identities") {
  ProjectorCache cache;
  const auto left = check_hierarchy(T("1,2"), 1, cache);
  CHECK(left.passed);
  CHECK(left.scope.tableaux == std::vector<std::string>{"1,2", "1,2,3", "1,2/3"});
  CHECK(check_hierarchy(T("1/2"), 1, cache).passed);
  const auto skip = check_hierarchy(T("1,2,3"), 2, cache);
  CHECK(skip.passed);
  CHECK(skip.scope.tableaux.size() == 6);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_hierarchy_all(n, cache).passed);
  CHECK_THROWS_AS(check_hierarchy(T("1,2"), 0), PreconditionError);
}

TEST_CASE("Young sums fail where Hermitian sums hold") {
  const auto r = check_young_hierarchy_fails();
  CHECK(r.passed);
  check_witness_rule(r);
  REQUIRE(r.evidence.size() == 2);
  for (const auto& e : r.evidence) CHECK_FALSE(e.is_zero());
  CHECK(r.scope.tableaux.size() == 6);
}

TEST_CASE("nesting") {
  ProjectorCache cache;
  CHECK(check_nesting(T("1,2/3"), 1, cache).passed);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(check_nesting_all(n, cache).passed);
  CHECK_THROWS_AS(check_nesting(T("1,2/3"), 0), PreconditionError);
  CHECK_THROWS_AS(check_nesting(T("1,2/3"), 3), PreconditionError);
}

TEST_CASE("non-commutation holds where the ancestor is not trivial") {
  ProjectorCache cache;
  const auto r = check_noncommutation(T("1,2/3"), 1, cache);
  CHECK(r.passed);
  check_witness_rule(r);
  REQUIRE(r.evidence.size() == 1);
  CHECK_FALSE(r.evidence[0].is_zero());
  CHECK(check_noncommutation(T("1,3,4/2,5"), 2, cache).passed);
}

TEST_CASE("non-commutation fails against the one-box ancestor and for two-by-two") {
  ProjectorCache cache;
  const auto last = check_noncommutation(T("1,2/3"), 2, cache);
  CHECK_FALSE(last.passed);
  check_witness_rule(last);
  CHECK_FALSE(check_noncommutation(T("1,2/3,4"), 1, cache).passed);
  CHECK_FALSE(check_noncommutation(T("1,3/2,4"), 1, cache).passed);
  CHECK(check_noncommutation(T("1,2/3,4"), 2, cache).passed);
  for (std::size_t n = 3; n <= 5; ++n) CHECK_FALSE(check_noncommutation_all(n, cache).passed);
}

TEST_CASE("non-commutation preconditions") {
  CHECK_THROWS_AS(check_noncommutation(T("1,2,3"), 1), PreconditionError);
  CHECK_THROWS_AS(check_noncommutation(T("1/2/3"), 1), PreconditionError);
  CHECK_THROWS_AS(check_noncommutation(T("1,2/3"), 0), PreconditionError);
  CHECK_THROWS_AS(check_noncommutation(T("1,2/3"), 3), PreconditionError);
}

TEST_CASE("equivalence by conjugation") {
  CHECK(check_equivalence_conjugation(T("1,2,3/4"), T("1,2,4/3"), P("(3 4)", 4)).passed);
  CHECK(check_equivalence_conjugation(T("1,4/2/3"), T("1,2/3/4"), P("(2 3 4)", 4)).passed);
  CHECK(check_equivalence_conjugation(T("1,2,3/4"), T("1,2,3/4"), Permutation::identity(4)).passed);
  const auto wrong = check_equivalence_conjugation(T("1,2,3/4"), T("1,3,4/2"), P("(3 4)", 4));
  CHECK_FALSE(wrong.passed);
  check_witness_rule(wrong);
  CHECK_THROWS_AS(check_equivalence_conjugation(T("1,2,3/4"), T("1,2/3,4"), P("(3 4)", 4)),
                  PreconditionError);
  CHECK_THROWS_AS(check_equivalence_conjugation(T("1,2/3"), T("1,3/2"), P("(2 3)", 4)), PreconditionError);
}

TEST_CASE("methods agree and dimensions are conserved") {
  ProjectorCache cache;
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(check_methods_agree_all(n, cache).passed);
    CHECK(check_dimensions(n, cache).passed);
  }
  CHECK(dimension(cache.hermitian(T("1/2/3")), 2) == 0);
  CHECK(dimension(cache.hermitian(T("1,2/3")), 3) == 8);
}

TEST_CASE("suites by name") {
  ProjectorCache cache;
  CHECK(suite_names().size() == 9);
  for (const auto& name : suite_names()) {
    const auto reports = run_suite(name, 3, cache);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      check_witness_rule(r);
      CHECK(r.passed == (name != "noncommute"));
    }
  }
  const auto one = run_suite("completeness", 1, cache);
  for (const auto& r : one) CHECK(r.passed);
  CHECK_THROWS_AS(run_suite("symmetry", 3, cache), std::invalid_argument);
}

TEST_CASE("reports are reproducible") {
  ProjectorCache a, b;
  const auto x = check_orthogonality(5, Family::young, a);
  const auto y = check_orthogonality(5, Family::young, b);
  CHECK(x.passed == y.passed);
  CHECK(x.witness == y.witness);
  CHECK(x.detail == y.detail);
  CHECK(x.scope == y.scope);
}
