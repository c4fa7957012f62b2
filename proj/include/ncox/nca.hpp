#pragma once

// The algebra NC_A(n, d): generators T_1, ..., T_n with the type A braid
// relations, T_1^2 = ... = T_{n-1}^2 = 0 and T_n^d = 0.
//
// Basis words are T_w (w in S_n) and T_w T_n^k T_{n-1} ... T_m with
// k in [1, d-1] and m in [1, n]; m = n means the descending tail is empty.
// Products are computed in the regular representation: generators act on the
// left of basis words, and x * y folds the generator word of x onto y.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncox/linalg.hpp"
#include "ncox/symgrp.hpp"

namespace ncox::nca {

using symgrp::Permutation;

struct Params {
  int n = 1;
  int d = 2;

  // Throws InvalidParams unless n >= 1 and d >= 2.
  static Params make(int n, int d);

  // n! (1 + n (d - 1))
  std::uint64_t dimension() const;

  bool operator==(const Params&) const = default;
};

struct BasisWord {
  Permutation w;
  int k = 0;  // 0 for T_w
  int m = 0;  // 0 for T_w

  static BasisWord short_word(Permutation w) { return {std::move(w), 0, 0}; }
  static BasisWord extended(Permutation w, int k, int m) { return {std::move(w), k, m}; }

  bool is_short() const { return k == 0; }
  int n() const { return w.rank(); }

  std::string to_string() const;

  auto operator<=>(const BasisWord&) const = default;
};

// l(w) + k + n - m, or l(w) for T_w.
int degree(const BasisWord& b);

// Generator sequence: reduced word of w, then n repeated k times, then
// n-1, ..., m.
std::vector<int> generator_word(const BasisWord& b);

// Deterministic order: degree, then (w one-line, k, m) with T_w first.
bool canonical_less(const BasisWord& a, const BasisWord& b);

std::vector<BasisWord> canonical_basis(const Params& p);

// T_i . b in the regular representation; nullopt is zero.
std::optional<BasisWord> act_generator(const Params& p, int i, const BasisWord& b);

std::optional<BasisWord> multiply_words(const Params& p, const BasisWord& x, const BasisWord& y);

// T_{i_1} ... T_{i_k} as a basis word or zero.
std::optional<BasisWord> reduce_word(const Params& p, std::span<const int> word);

class AlgebraElement {
 public:
  using Terms = std::map<BasisWord, Rational>;

  explicit AlgebraElement(Params p) : params_(p) {}

  static AlgebraElement zero(const Params& p) { return AlgebraElement(p); }
  static AlgebraElement one(const Params& p);
  static AlgebraElement word(const Params& p, const BasisWord& b, Rational c = 1);

  const Params& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisWord& b, const Rational& c);
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator*(const Rational& c) const;

  bool operator==(const AlgebraElement& other) const;

 private:
  void check_params(const Params& other) const;

  Params params_;
  Terms terms_;
};

// Bilinear extension of the basis-word product. Throws ParamsMismatch.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

struct LongestWord {
  BasisWord word;
  int length;
};

LongestWord longest_word(const Params& p);

using Polynomial = std::vector<std::uint64_t>;

// Graded dimensions counted over the basis.
Polynomial hilbert_series(const Params& p);

// [n]_q! (1 + q [n]_q [d-1]_q), which matches the basis count.
Polynomial hilbert_closed_form(const Params& p);

// [n]_q! (1 + [n]_q [d-1]_q), the form without the factor q. Its constant
// term is 2 for n >= 2, so it is not the series of a unital graded algebra.
Polynomial hilbert_as_printed(const Params& p);

Polynomial q_integer(int n);
Polynomial q_factorial(int n);
Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);

// Anti-involution fixing every generator: reverse generator words.
std::optional<BasisWord> theta_word(const Params& p, const BasisWord& b);
AlgebraElement theta(const AlgebraElement& x);

// Dense regular representation: basis in canonical order with precomputed
// left generator actions. Products are table lookups.
class RegularRepresentation {
 public:
  static constexpr std::size_t kZero = static_cast<std::size_t>(-1);

  explicit RegularRepresentation(const Params& p);

  const Params& params() const { return params_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisWord>& basis() const { return basis_; }
  std::size_t index_of(const BasisWord& b) const;
  std::size_t identity() const { return 0; }

  // T_i . basis[idx]
  std::size_t act(int i, std::size_t idx) const {
    return action_[static_cast<std::size_t>(i - 1)][idx];
  }
  std::size_t multiply(std::size_t x, std::size_t y) const;
  const std::vector<int>& word(std::size_t idx) const { return words_[idx]; }
  int degree(std::size_t idx) const { return degrees_[idx]; }

 private:
  Params params_;
  std::vector<BasisWord> basis_;
  std::map<BasisWord, std::size_t> index_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::vector<int>> words_;
  std::vector<int> degrees_;
};

enum class Side { Left, Right, TwoSided };

const char* to_string(Side side);

// Basis of the joint kernel of left (or right, or both) multiplication by
// every generator, computed by exact row reduction.
std::vector<AlgebraElement> primitives(const Params& p, Side side);

struct NilpotencyReport {
  int index = 0;                        // smallest N with m^N = 0
  std::vector<std::size_t> power_dims;  // dim m^N for N = 1, 2, ..., index
};

NilpotencyReport nilpotency_index(const Params& p);

struct FrobeniusReport {
  bool frobenius = false;
  std::size_t primitive_dim = 0;
  bool criterion = false;  // n == 1 || d == 2
};

// Throws InvariantViolation if the computed verdict disagrees with the
// criterion.
FrobeniusReport frobenius_check(const Params& p);

struct KhovanovReport {
  std::uint64_t dimension = 0;
  std::uint64_t regular_part = 0;  // dim A_{n-1} = n!
  std::uint64_t tensor_part = 0;   // dim A_{n-1} (x)_{A_{n-2}} A_{n-1} = n * n!
  std::uint64_t copies = 0;        // d - 1
  bool identity_holds = false;

  std::size_t representatives = 0;        // 1 + n(d-1)
  std::vector<std::size_t> span_ranks;    // rank of R_{n-1} . r for each r
  std::size_t total_rank = 0;             // rank of the union of all spans
  bool free = false;
};

KhovanovReport khovanov_rank_check(const Params& p);

}  // namespace ncox::nca
