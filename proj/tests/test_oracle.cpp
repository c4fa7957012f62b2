#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ncox/error.hpp"
#include "ncox/oracle.hpp"

using namespace ncox;
using namespace ncox::oracle;
using coxmat::Exponent;
using coxmat::GenCoxeterMatrix;

namespace {

GenCoxeterMatrix make(int size, std::vector<coxmat::OffDiagonalEntry> off, std::vector<long> diag) {
  return GenCoxeterMatrix::from_parts(size, off, diag);
}

GenCoxeterMatrix type_a(std::vector<long> diag) { return GenCoxeterMatrix::type_a(diag); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("small graded dimensions") {
  auto s = graded_dimensions(type_a({2, 3}));
  CHECK(s.status == Status::Finite);
  CHECK(s.dims == std::vector<std::size_t>{1, 2, 3, 3, 1, 0});
  CHECK(s.total == 10);
  CHECK(s.degree_reached == 5);
  CHECK(s.normal_forms[0] == std::vector<FreeWord>{{}});
  CHECK(s.normal_forms[1] == std::vector<FreeWord>{{1}, {2}});

  s = graded_dimensions(type_a({5}));
  CHECK(s.dims == std::vector<std::size_t>{1, 1, 1, 1, 1, 0});

  s = graded_dimensions(type_a({2, 2, 2}));
  CHECK(s.total == 24);

  // Both diagonal entries 3 on an A_2 edge: infinite.
  s = graded_dimensions(type_a({3, 3}), {12, 20000, 1});
  CHECK(s.status == Status::ExceedsBound);
  CHECK(s.degree_reached == 12);
  for (std::size_t k = 1; k < s.dims.size(); ++k) CHECK(s.dims[k] > 0);
}

TEST_CASE("normal forms are lex-least and sorted") {
  const auto s = graded_dimensions(type_a({2, 2, 3}));
  for (const auto& slice : s.normal_forms) CHECK(std::is_sorted(slice.begin(), slice.end()));
  // In degree 3 of the nil-Coxeter part, 1 2 1 equals 2 1 2; only the lex-least survives.
  const GradedQuotient q(type_a({2, 2}), {});
  CHECK(q.normal_form(std::vector<int>{2, 1, 2}) == FreeWord{1, 2, 1});
}

TEST_CASE("reduce_word examples") {
  const auto m = type_a({2, 2});
  const std::vector<int> w1{2, 1, 2};
  const std::vector<int> w2{1, 2, 1};
  const auto a = reduce_word(m, w1, 6);
  const auto b = reduce_word(m, w2, 6);
  CHECK(a.degree == 3);
  REQUIRE(a.terms.size() == 1);
  REQUIRE(b.terms.size() == 1);
  CHECK(a.terms[0].index == b.terms[0].index);
  CHECK(a.terms[0].coeff == b.terms[0].coeff);
  const std::vector<int> sq{1, 1};
  CHECK(reduce_word(m, sq, 6).is_zero());
  CHECK(reduce_word(m, std::vector<int>{}, 1).terms.size() == 1);
}

TEST_CASE("reduction is idempotent on normal forms") {
  const GradedQuotient q(type_a({2, 2, 3}), {});
  REQUIRE(q.slices().status == Status::Finite);
  for (std::size_t k = 0; k < q.slices().normal_forms.size(); ++k) {
    const auto& slice = q.slices().normal_forms[k];
    for (std::size_t i = 0; i < slice.size(); ++i) {
      const auto e = q.reduce(slice[i]);
      CHECK(e.degree == static_cast<int>(k));
      REQUIRE(e.terms.size() == 1);
      CHECK(e.terms[0].index == i);
      CHECK(e.terms[0].coeff == 1);
      CHECK(q.normal_form(slice[i]) == slice[i]);
    }
  }
}

TEST_CASE("right multiplication agrees with reduce") {
  const GradedQuotient q(type_a({2, 4}), {});
  const auto& nf = q.slices().normal_forms;
  for (int k = 0; k + 1 < static_cast<int>(nf.size()); ++k) {
    for (std::size_t b = 0; b < nf[static_cast<std::size_t>(k)].size(); ++b) {
      for (int g = 1; g <= 2; ++g) {
        auto w = nf[static_cast<std::size_t>(k)][b];
        w.push_back(g);
        const auto e = q.reduce(w);
        const auto& t = q.right_multiply(k, b, g);
        REQUIRE(t.size() == e.terms.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          CHECK(t[i].index == e.terms[i].index);
          CHECK(t[i].coeff == e.terms[i].coeff);
        }
      }
    }
  }
}

TEST_CASE("dimensions are invariant under relabeling and reversal") {
  const auto forward = type_a({2, 2, 3});
  const auto base = graded_dimensions(forward).dims;
  const std::vector<coxmat::Node> rev{3, 2, 1};
  CHECK(graded_dimensions(forward.relabeled(rev)).dims == base);
  CHECK(graded_dimensions(type_a({3, 2, 2})).dims == base);
  const std::vector<coxmat::Node> swap{2, 3, 1};
  CHECK(graded_dimensions(forward.relabeled(swap)).dims == base);
  CHECK(graded_dimensions(forward).total == 42);
}

TEST_CASE("infinite edge labels impose no braid relation") {
  const auto m = make(2, {{1, 2, Exponent::infinity()}}, std::vector<long>{2, 2});
  const auto s = graded_dimensions(m, {8, 20000, 1});
  CHECK(s.status == Status::ExceedsBound);
  // Alternating words 1212... and 2121... are the only survivors.
  for (std::size_t k = 1; k < s.dims.size(); ++k) CHECK(s.dims[k] == 2);
}

TEST_CASE("bounds and range errors") {
  CHECK(code_of([] { GradedQuotient(type_a({2, 2}), {0, 100, 1}); }) == ErrorCode::BoundTooSmall);
  const GradedQuotient q(type_a({3, 3}), {4, 20000, 1});
  const std::vector<int> long_word(6, 1);
  CHECK(code_of([&] { q.reduce(long_word); }) == ErrorCode::DegreeExceedsComputation);
  CHECK(code_of([&] { q.reduce(std::vector<int>{3}); }) == ErrorCode::IndexOutOfRange);
  // Past the last nonzero degree of a finite algebra every word is zero.
  const GradedQuotient f(type_a({2, 3}), {});
  CHECK(f.reduce(std::vector<int>(9, 2)).is_zero());
  const auto tiny = graded_dimensions(type_a({2, 2, 2}), {16, 5, 1});
  CHECK(tiny.status == Status::ExceedsBound);
}

TEST_CASE("threaded computation matches the serial one") {
  const auto m = type_a({2, 2, 4});
  const auto serial = graded_dimensions(m, {16, 20000, 1});
  const auto threaded = graded_dimensions(m, {16, 20000, 4});
  CHECK(serial.dims == threaded.dims);
  CHECK(serial.normal_forms == threaded.normal_forms);
}

TEST_CASE("type A Artin monoid identity") {
  for (int n = 2; n <= 5; ++n) {
    const auto r = braid_monoid_identity_check(n);
    CHECK(r.holds);
    CHECK(r.n == n);
    CHECK(r.checked_m.size() == static_cast<std::size_t>(n - 1));
  }
}
