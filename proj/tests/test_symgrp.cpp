#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ncox/error.hpp"
#include "ncox/symgrp.hpp"

using namespace ncox;
using namespace ncox::symgrp;

namespace {

Permutation perm(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

int brute_inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = i + 1; j <= w.rank(); ++j) count += w(i) > w(j);
  }
  return count;
}

// Product of simple reflections in the group, ignoring lengths.
Permutation group_product(int n, const std::vector<int>& word) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::simple_reflection(n, i);
  return p;
}

}  // namespace

TEST_CASE("permutation construction and composition") {
  CHECK_THROWS_AS(perm({1, 1, 2}), Error);
  CHECK_THROWS_AS(perm({0, 1}), Error);
  CHECK(perm({2, 3, 1}).to_string() == "(2,3,1)");
  const auto s1 = Permutation::simple_reflection(3, 1);
  const auto s2 = Permutation::simple_reflection(3, 2);
  // (uv)(i) = u(v(i))
  CHECK((s1 * s2) == perm({2, 3, 1}));
  CHECK_THROWS_AS(s1 * Permutation::identity(4), Error);
  CHECK((perm({2, 3, 1}) * perm({2, 3, 1}).inverse()).is_identity());
  CHECK(perm({2, 1}).embedded(3) == perm({2, 1, 3}));
  CHECK(perm({2, 1, 3}).restricted() == perm({2, 1}));
}

TEST_CASE("length is the inversion count") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(perm({2, 3, 1})) == 2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(length(longest_element(n)) == n * (n - 1) / 2);
  }
  CHECK(longest_element(1).is_identity());
  CHECK(longest_element(3) == perm({3, 2, 1}));
  CHECK(longest_element(4) == perm({4, 3, 2, 1}));
  for (const auto& w : all_permutations(5)) CHECK(length(w) == brute_inversions(w));
}

TEST_CASE("parabolic decomposition examples") {
  const auto s1 = Permutation::simple_reflection(3, 1);
  const auto s2 = Permutation::simple_reflection(3, 2);
  auto d = parabolic_decompose(s2);
  REQUIRE(d);
  CHECK(d->w_prime.is_identity());
  CHECK(d->m_prime == 2);
  d = parabolic_decompose(s2 * s1);
  REQUIRE(d);
  CHECK(d->w_prime.is_identity());
  CHECK(d->m_prime == 1);
  CHECK_FALSE(parabolic_decompose(s1));
}

TEST_CASE("parabolic decomposition is a bijection with additive lengths") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::pair<std::vector<int>, int>> images;
    std::size_t members = 0;
    for (const auto& w : all_permutations(n)) {
      const auto d = parabolic_decompose(w);
      if (!d) {
        CHECK(w.fixes_last());
        ++members;
        continue;
      }
      CHECK(d->m_prime >= 1);
      CHECK(d->m_prime <= n - 1);
      const auto recomposed = d->w_prime.embedded(n) * descending_product(n, n - 1, d->m_prime);
      CHECK(recomposed == w);
      CHECK(length(w) == length(d->w_prime) + (n - d->m_prime));
      const auto ol = d->w_prime.one_line();
      images.insert({std::vector<int>(ol.begin(), ol.end()), d->m_prime});
    }
    std::size_t smaller = 1;
    for (int i = 2; i <= n - 1; ++i) smaller *= static_cast<std::size_t>(i);
    CHECK(members == smaller);
    CHECK(images.size() == smaller * static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("nil multiplication") {
  const auto e = Permutation::identity(3);
  const auto s1 = Permutation::simple_reflection(3, 1);
  const auto s2 = Permutation::simple_reflection(3, 2);
  CHECK(nil_multiply(e, s2) == s2);
  CHECK_FALSE(nil_multiply(s1, s1));
  CHECK(nil_multiply(s1, s2) == perm({2, 3, 1}));
  CHECK_THROWS_AS(nil_left_multiply(3, e), Error);

  for (int n = 3; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all) {
      for (const auto& v : all) {
        const auto uv = nil_multiply(u, v);
        CHECK(length(u * v) <= length(u) + length(v));
        CHECK(uv.has_value() == (length(u * v) == length(u) + length(v)));
      }
    }
  }
}

TEST_CASE("nil multiplication is associative on S_3 and S_4") {
  for (int n = 3; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto ab = nil_multiply(a, b);
        for (const auto& c : all) {
          const auto bc = nil_multiply(b, c);
          const auto left = ab ? nil_multiply(*ab, c) : std::nullopt;
          const auto right = bc ? nil_multiply(a, *bc) : std::nullopt;
          CHECK(left == right);
        }
      }
    }
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  const auto s1 = Permutation::simple_reflection(3, 1);
  const auto s2 = Permutation::simple_reflection(3, 2);
  CHECK(reduced_word(s2 * s1) == std::vector<int>{2, 1});
  const auto w0 = reduced_word(longest_element(3));
  CHECK(w0.size() == 3);
  CHECK(fold_word(3, w0) == longest_element(3));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == length(w));
      CHECK(group_product(n, word) == w);
      CHECK(fold_word(n, word) == w);
    }
  }
}
