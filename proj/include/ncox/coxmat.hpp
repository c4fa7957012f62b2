#pragma once

// Generalized Coxeter matrices: symmetric, diagonal orders d_i >= 2 and
// off-diagonal braid exponents m_ij in {2, 3, ...} plus infinity.
//
// Nodes are 1-based throughout, matching generator indices in words.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ncox/linalg.hpp"

namespace ncox::coxmat {

using Node = int;

// A braid exponent or diagonal entry. Infinity is a dedicated state, never
// encoded as a number.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(long value) : value_(value) {}
  static constexpr Exponent infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const;
  constexpr bool at_least(long k) const { return infinite_ || value_ >= k; }

  std::string to_string() const;

  constexpr bool operator==(const Exponent&) const = default;

 private:
  long value_ = 2;
  bool infinite_ = false;
};

using RawTable = std::vector<std::vector<Exponent>>;

struct OffDiagonalEntry {
  Node i;
  Node j;
  Exponent m;
};

struct Edge {
  Node a;
  Node b;
  Exponent label;
};

class GenCoxeterMatrix {
 public:
  // Validates a full square table.
  static GenCoxeterMatrix validate(const RawTable& table);

  // Unlisted pairs default to 2. Entries with m = 2 are accepted and dropped.
  static GenCoxeterMatrix from_parts(int size, std::span<const OffDiagonalEntry> offdiag,
                                     std::span<const long> diag);

  // Type A_n path 1 - 2 - ... - n with the given diagonal.
  static GenCoxeterMatrix type_a(std::span<const long> diag);

  int size() const { return size_; }
  Exponent edge(Node i, Node j) const;
  long order(Node i) const { return diag_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<long>& orders() const { return diag_; }

  // Off-diagonal entries different from 2, keyed by (i, j) with i < j.
  const std::map<std::pair<Node, Node>, Exponent>& offdiag() const { return offdiag_; }

  GenCoxeterMatrix with_orders(std::vector<long> diag) const;

  // M_2: every diagonal entry replaced by 2.
  GenCoxeterMatrix m2() const;

  RawTable to_table() const;

  // Node i of the result is node order[i-1] of this matrix.
  GenCoxeterMatrix relabeled(std::span<const Node> order) const;

  // Submatrix on the surviving nodes after killing `killed`, relabeled in
  // increasing order.
  GenCoxeterMatrix without(std::span<const Node> killed) const;

  bool operator==(const GenCoxeterMatrix&) const = default;

 private:
  GenCoxeterMatrix(int size, std::map<std::pair<Node, Node>, Exponent> offdiag,
                   std::vector<long> diag);

  int size_ = 0;
  std::map<std::pair<Node, Node>, Exponent> offdiag_;
  std::vector<long> diag_;
};

class DynkinDiagram {
 public:
  explicit DynkinDiagram(const GenCoxeterMatrix& m);

  int size() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Node>& neighbours(Node i) const {
    return adjacency_.at(static_cast<std::size_t>(i - 1));
  }
  int degree(Node i) const { return static_cast<int>(neighbours(i).size()); }

  bool connected() const;

  // Shortest path from `from` to `to` (inclusive); empty if unreachable.
  std::vector<Node> shortest_path(Node from, Node to) const;

 private:
  std::vector<std::vector<Node>> adjacency_;
  std::vector<Edge> edges_;
};

bool is_connected(const GenCoxeterMatrix& m);

struct CoxeterType {
  enum class Family { A, BC, D, E, F, G, H, I, NotFinite };

  Family family = Family::NotFinite;
  int rank = 0;
  long label = 0;  // only for I_2(m)

  bool finite() const { return family != Family::NotFinite; }
  std::string name() const;

  // |W|; requires finite().
  mpz_class group_order() const;

  bool operator==(const CoxeterType&) const = default;
};

// Finite Coxeter type of M_2; the diagonal is ignored.
CoxeterType recognize_finite_type(const GenCoxeterMatrix& m);

// 1/n + 1/d > 1/2, exactly.
bool coxeter_group_finite(long n, long d);

// (1/n + 1/d - 1/2)^(1-n) * n! / n^(n-1), evaluated as printed. This value
// does not agree with the known group orders (it gives n! at d = 2, where
// the group is S_{n+1}); it is reported for comparison only and nothing
// downstream depends on it.
struct PrintedOrder {
  Rational value;
  bool discrepancy_flagged = true;
  std::string note;
};

PrintedOrder coxeter_group_order_as_printed(long n, long d);

}  // namespace ncox::coxmat
