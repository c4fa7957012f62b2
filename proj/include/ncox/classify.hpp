#pragma once

// Finite-dimensionality of NC(M) for a connected generalized Coxeter matrix,
// with explicit infinite-dimensional cyclic modules as certificates.
//
// NC(M) is finite-dimensional exactly when either every d_i = 2 and W(M) is
// a finite Coxeter group, or M is a type A path whose only d_i > 2 sits at
// an end node. Every other heavy-node diagram is witnessed by one of four
// module shapes built from a chain alpha = c_1, c_2, ..., c_m:
//
//   two_heavy        A -a-> B_1 -c2-> ... -cm-> B_m -g-> C -g-> B'_m -> ... -a+-> A
//   heavy_edge       A -a-> B -g-> C -a+-> A            (m_ag >= 4)
//   fork             ... B_m -g-> D -d-> B'_m and B_m -d-> C -g-> B'_m ...
//   high_edge_chain  ... B_m -g-> B'_m ...               (m_{c_m g} >= 4)
//
// '+' arrows increase the lap index r. The arrow tables live in
// data/witness_figures.json and are compiled into the library.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ncox/coxmat.hpp"

namespace ncox::classify {

using coxmat::Node;

enum class Figure {
  TwoHeavy,
  HeavyEdge,
  Fork,
  HighEdgeChain,
  Quotient,
  // All d_i = 2 and W(M) infinite: NC(M) has a basis indexed by W(M), so no
  // module is built.
  InfiniteCoxeterGroup,
};

const char* to_string(Figure f);
Figure figure_from_string(const std::string& s);

struct WitnessCase {
  Figure figure = Figure::TwoHeavy;
  std::vector<Node> chain;     // alpha, beta_1, ..., beta_{m-1}
  Node gamma = 0;
  std::optional<Node> delta;   // fork only
  std::vector<Node> killed;    // quotient only
  Figure inner = Figure::TwoHeavy;  // module shape; equals figure unless quotient

  int m() const { return static_cast<int>(chain.size()); }
  Figure shape() const { return figure == Figure::Quotient ? inner : figure; }
  std::string describe() const;

  bool operator==(const WitnessCase&) const = default;
};

struct FiniteUsual {
  coxmat::CoxeterType type;
  mpz_class dimension;
};

struct FiniteTypeAEnd {
  int n = 0;
  long d = 0;
  mpz_class dimension;
};

struct Infinite {
  WitnessCase witness;
};

using Classification = std::variant<FiniteUsual, FiniteTypeAEnd, Infinite>;

// Total dimension for the finite verdicts.
std::optional<mpz_class> finite_dimension(const Classification& c);
std::string summary(const Classification& c);

// Throws DisconnectedDiagram.
Classification decide(const coxmat::GenCoxeterMatrix& m);

// Throws CaseInapplicable with the reason when the case does not fit M.
void check_case(const coxmat::GenCoxeterMatrix& m, const WitnessCase& c);

struct VectorLabel {
  std::string name;  // "A", "B1", "C", "D", "B'2", ...
  int r = 1;

  std::string to_string() const { return name + "_" + std::to_string(r); }
  bool operator==(const VectorLabel&) const = default;
};

struct TruncatedModule {
  static constexpr std::size_t kZero = static_cast<std::size_t>(-1);
  static constexpr std::size_t kSink = static_cast<std::size_t>(-2);

  WitnessCase witness;
  int truncation = 0;
  std::vector<VectorLabel> basis;
  // action[g - 1][v]: basis index, kZero, or kSink (a wrap arrow leaving
  // the truncation).
  std::vector<std::vector<std::size_t>> action;
  std::size_t generator = 0;  // A_1

  int generators() const { return static_cast<int>(action.size()); }
};

constexpr int kDefaultTruncation = 5;

// Throws CaseInapplicable (including for InfiniteCoxeterGroup) and
// InvalidParams when R < 2.
TruncatedModule build_witness(const coxmat::GenCoxeterMatrix& m, const WitnessCase& c,
                              int truncation = kDefaultTruncation);

// The same module over the quotient matrix M.without(killed): killed
// generators are dropped and the rest renumbered.
TruncatedModule restrict_to_quotient(const TruncatedModule& module);

struct Violation {
  std::string vector;
  std::string relation;
  std::string lhs;
  std::string rhs;
};

struct WitnessReport {
  std::size_t checked_vectors = 0;
  std::size_t checked_relations = 0;
  std::size_t inconclusive = 0;  // relation reached the sink on some side
  std::vector<std::size_t> reachable;  // reachable set size within laps 1..rho
  bool cyclic = false;
  bool grows = false;
  bool quotient_checked = false;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty() && cyclic && grows; }
};

// Checks every relation of M on every vector with r < R, cyclicity from A_1
// and strict growth of the reachable set with R. Quotient witnesses are also
// checked against the quotient matrix. Never throws on failure.
WitnessReport check_witness(const coxmat::GenCoxeterMatrix& m, const TruncatedModule& module);

// As check_witness, but throws RelationViolation naming the first failing
// vector and relation with both sides, or InvariantViolation when the module
// is not cyclic or does not grow.
WitnessReport verify_witness(const coxmat::GenCoxeterMatrix& m, const TruncatedModule& module);

}  // namespace ncox::classify
