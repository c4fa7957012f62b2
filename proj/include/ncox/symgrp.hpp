#pragma once

// Symmetric groups S_n with simple reflections s_1, ..., s_{n-1}.
//
// Composition convention: (u * v)(i) = u(v(i)). Left multiplication by s_i
// swaps the values i and i+1 in one-line notation; right multiplication
// swaps the positions i and i+1.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncox::symgrp {

class Permutation {
 public:
  static Permutation identity(int n);
  // Throws InvalidPermutation unless `one_line` is a permutation of 1..n.
  static Permutation from_one_line(std::vector<int> one_line);
  static Permutation simple_reflection(int n, int i);

  int rank() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> one_line() const { return one_line_; }

  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;

  bool is_identity() const;
  // True iff w(n) = n, i.e. w lies in the parabolic subgroup S_{n-1}.
  bool fixes_last() const { return one_line_.empty() || one_line_.back() == rank(); }

  // S_n -> S_{n'} for n' >= n, fixing the new points.
  Permutation embedded(int n) const;
  // S_n -> S_{n-1}; requires fixes_last().
  Permutation restricted() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {}
  std::vector<int> one_line_;
};

// Inversion count.
int length(const Permutation& w);

// i -> n + 1 - i.
Permutation longest_element(int n);

// w = w_prime * s_{n-1} s_{n-2} ... s_{m_prime} with w_prime in S_{n-1} and
// l(w) = l(w_prime) + (n - m_prime). w_prime is returned in S_{n-1}.
struct ParabolicDecomposition {
  Permutation w_prime;
  int m_prime;
};

// std::nullopt exactly when w lies in S_{n-1} (the ParabolicMember case).
std::optional<ParabolicDecomposition> parabolic_decompose(const Permutation& w);

// s_from s_{from-1} ... s_to in S_n; the identity when from < to.
Permutation descending_product(int n, int from, int to);

// T_u T_v in the nil-Coxeter algebra of S_n: uv when lengths add, else zero.
std::optional<Permutation> nil_multiply(const Permutation& u, const Permutation& v);

// T_i T_w.
std::optional<Permutation> nil_left_multiply(int i, const Permutation& w);

// Canonical reduced word: the reduced word of w_prime followed by the tail
// n-1, n-2, ..., m_prime, recursively.
std::vector<int> reduced_word(const Permutation& w);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// Fold T_{i_1} ... T_{i_k} onto the identity; nullopt when the word is not
// reduced.
std::optional<Permutation> fold_word(int n, std::span<const int> word);

}  // namespace ncox::symgrp
