#pragma once

// Degree-by-degree computation of NC(M) = k<T_i> / (braid relations,
// T_i^{d_i} = 0).
//
// All relations are homogeneous, so the quotient is graded and each slice is
// finite-dimensional. Slice k is computed as
//
//   A_k = (A_{k-1} (x) V) / span{ u . r : r a relation of length j <= k,
//                                          u a normal form of degree k-j }
//
// by exact row reduction. Relations placed anywhere but at the right end are
// already zero in A_{k-1} (x) V, so this is the full degree-k ideal. Pivots
// are taken on the lexicographically largest words, so the surviving
// normal forms are the lexicographically least words spanning each slice.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncox/coxmat.hpp"
#include "ncox/linalg.hpp"

namespace ncox::oracle {

using FreeWord = std::vector<int>;

struct Bounds {
  int max_degree = 16;
  std::size_t max_total = 20000;
  unsigned threads = 1;
};

enum class Status { Finite, ExceedsBound };

const char* to_string(Status s);

struct GradedSlices {
  std::vector<std::size_t> dims;                     // dims[k] = dim A_k
  std::vector<std::vector<FreeWord>> normal_forms;   // per degree, lex ascending
  Status status = Status::ExceedsBound;
  std::size_t total = 0;     // sum of dims
  int degree_reached = 0;    // last degree computed
};

struct Term {
  std::size_t index;  // normal form index within the degree
  Rational coeff;
};

// Image of a word in its degree, as a combination of normal forms.
struct Expansion {
  int degree = 0;
  std::vector<Term> terms;  // empty means zero

  bool is_zero() const { return terms.empty(); }
};

class GradedQuotient {
 public:
  // Throws BoundTooSmall when max_degree < 1.
  GradedQuotient(coxmat::GenCoxeterMatrix m, Bounds bounds);

  const coxmat::GenCoxeterMatrix& matrix() const { return matrix_; }
  const GradedSlices& slices() const { return slices_; }

  // Throws DegreeExceedsComputation when the word is longer than the
  // computed range and the algebra was not shown to vanish there.
  Expansion reduce(std::span<const int> word) const;

  // For monomial-type quotients: the single normal form equal to the word,
  // or nullopt for zero. Throws InvariantViolation when the image is not a
  // single normal form with coefficient 1.
  std::optional<FreeWord> normal_form(std::span<const int> word) const;

  // Right multiplication in the computed range: basis index b of degree k
  // times generator g.
  const std::vector<Term>& right_multiply(int degree, std::size_t b, int g) const;

 private:
  void compute_slice(int k);

  coxmat::GenCoxeterMatrix matrix_;
  Bounds bounds_;
  GradedSlices slices_;
  // table_[k][b * N + (g - 1)] = image of (normal form b of degree k) * T_g
  // in degree k + 1.
  std::vector<std::vector<std::vector<Term>>> table_;
};

GradedSlices graded_dimensions(const coxmat::GenCoxeterMatrix& m, Bounds bounds = {});

Expansion reduce_word(const coxmat::GenCoxeterMatrix& m, std::span<const int> word,
                      int max_degree);

// Checks T_{n-1} ... T_m ... T_{n-1} = T_m ... T_{n-2} T_{n-1} T_{n-2} ... T_m
// for every 1 <= m <= n-1 in the type A Artin monoid (orders large enough
// that no power relation applies).
struct BraidIdentityReport {
  int n = 0;
  std::vector<int> checked_m;
  bool holds = true;
};

BraidIdentityReport braid_monoid_identity_check(int n);

}  // namespace ncox::oracle
