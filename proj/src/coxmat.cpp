#include "ncox/coxmat.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ncox/error.hpp"

namespace ncox::coxmat {

long Exponent::value() const {
  if (infinite_) throw Error(ErrorCode::InvariantViolation, "value() of an infinite exponent");
  return value_;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

GenCoxeterMatrix::GenCoxeterMatrix(int size, std::map<std::pair<Node, Node>, Exponent> offdiag,
                                   std::vector<long> diag)
    : size_(size), offdiag_(std::move(offdiag)), diag_(std::move(diag)) {}

GenCoxeterMatrix GenCoxeterMatrix::validate(const RawTable& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::InvalidParams, "empty matrix");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::InvalidParams, "matrix is not square");
    }
  }
  std::vector<OffDiagonalEntry> entries;
  std::vector<long> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Exponent& d = table[i][i];
    if (d.is_infinite() || d.value() < 2) {
      throw Error(ErrorCode::DiagonalOutOfRange,
                  "d_" + std::to_string(i + 1) + " = " + d.to_string());
    }
    diag[static_cast<std::size_t>(i)] = d.value();
    for (int j = i + 1; j < n; ++j) {
      if (!(table[i][j] == table[j][i])) {
        throw Error(ErrorCode::AsymmetricMatrix, "m_" + std::to_string(i + 1) +
                                                     std::to_string(j + 1) + " != m_" +
                                                     std::to_string(j + 1) +
                                                     std::to_string(i + 1));
      }
      entries.push_back({i + 1, j + 1, table[i][j]});
    }
  }
  return from_parts(n, entries, diag);
}

GenCoxeterMatrix GenCoxeterMatrix::from_parts(int size, std::span<const OffDiagonalEntry> offdiag,
                                              std::span<const long> diag) {
  if (size < 1) throw Error(ErrorCode::InvalidParams, "matrix size must be positive");
  if (static_cast<int>(diag.size()) != size) {
    throw Error(ErrorCode::InvalidParams, "diagonal has " + std::to_string(diag.size()) +
                                              " entries, expected " + std::to_string(size));
  }
  for (int i = 0; i < size; ++i) {
    if (diag[static_cast<std::size_t>(i)] < 2) {
      throw Error(ErrorCode::DiagonalOutOfRange,
                  "d_" + std::to_string(i + 1) + " = " +
                      std::to_string(diag[static_cast<std::size_t>(i)]));
    }
  }
  std::map<std::pair<Node, Node>, Exponent> entries;
  for (const auto& e : offdiag) {
    if (e.i < 1 || e.j < 1 || e.i > size || e.j > size || e.i == e.j) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "off-diagonal entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
    if (!e.m.at_least(2)) {
      throw Error(ErrorCode::OffDiagonalOutOfRange,
                  "m_" + std::to_string(e.i) + std::to_string(e.j) + " = " + e.m.to_string());
    }
    const auto key = std::minmax(e.i, e.j);
    auto [it, inserted] = entries.emplace(key, e.m);
    if (!inserted && !(it->second == e.m)) {
      throw Error(ErrorCode::AsymmetricMatrix, "conflicting entries for pair (" +
                                                   std::to_string(key.first) + ", " +
                                                   std::to_string(key.second) + ")");
    }
  }
  std::erase_if(entries, [](const auto& kv) { return kv.second == Exponent(2); });
  return GenCoxeterMatrix(size, std::move(entries), std::vector<long>(diag.begin(), diag.end()));
}

GenCoxeterMatrix GenCoxeterMatrix::type_a(std::span<const long> diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<OffDiagonalEntry> entries;
  for (int i = 1; i < n; ++i) entries.push_back({i, i + 1, Exponent(3)});
  return from_parts(n, entries, diag);
}

Exponent GenCoxeterMatrix::edge(Node i, Node j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_ || i == j) {
    throw Error(ErrorCode::IndexOutOfRange,
                "edge(" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  auto it = offdiag_.find(std::minmax(i, j));
  return it == offdiag_.end() ? Exponent(2) : it->second;
}

GenCoxeterMatrix GenCoxeterMatrix::with_orders(std::vector<long> diag) const {
  std::vector<OffDiagonalEntry> entries;
  for (const auto& [key, m] : offdiag_) entries.push_back({key.first, key.second, m});
  return from_parts(size_, entries, diag);
}

GenCoxeterMatrix GenCoxeterMatrix::m2() const {
  return with_orders(std::vector<long>(static_cast<std::size_t>(size_), 2));
}

RawTable GenCoxeterMatrix::to_table() const {
  RawTable table(static_cast<std::size_t>(size_),
                 std::vector<Exponent>(static_cast<std::size_t>(size_), Exponent(2)));
  for (int i = 0; i < size_; ++i) table[i][i] = Exponent(diag_[static_cast<std::size_t>(i)]);
  for (const auto& [key, m] : offdiag_) {
    table[key.first - 1][key.second - 1] = m;
    table[key.second - 1][key.first - 1] = m;
  }
  return table;
}

GenCoxeterMatrix GenCoxeterMatrix::relabeled(std::span<const Node> order) const {
  const int k = static_cast<int>(order.size());
  std::vector<long> diag;
  std::vector<OffDiagonalEntry> entries;
  for (int a = 0; a < k; ++a) {
    diag.push_back(this->order(order[static_cast<std::size_t>(a)]));
    for (int b = a + 1; b < k; ++b) {
      entries.push_back({a + 1, b + 1,
                         edge(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)])});
    }
  }
  return from_parts(k, entries, diag);
}

GenCoxeterMatrix GenCoxeterMatrix::without(std::span<const Node> killed) const {
  std::set<Node> dead(killed.begin(), killed.end());
  std::vector<Node> keep;
  for (Node i = 1; i <= size_; ++i) {
    if (!dead.contains(i)) keep.push_back(i);
  }
  return relabeled(keep);
}

DynkinDiagram::DynkinDiagram(const GenCoxeterMatrix& m)
    : adjacency_(static_cast<std::size_t>(m.size())) {
  for (const auto& [key, label] : m.offdiag()) {
    // offdiag() only stores entries != 2, i.e. labels >= 3 or infinity.
    edges_.push_back({key.first, key.second, label});
    adjacency_[static_cast<std::size_t>(key.first - 1)].push_back(key.second);
    adjacency_[static_cast<std::size_t>(key.second - 1)].push_back(key.first);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::vector<Node> DynkinDiagram::shortest_path(Node from, Node to) const {
  std::vector<Node> parent(adjacency_.size() + 1, 0);
  std::deque<Node> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Node w : neighbours(v)) {
      if (parent[static_cast<std::size_t>(w)] == 0) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] == 0) return {};
  std::vector<Node> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool DynkinDiagram::connected() const {
  for (Node v = 2; v <= size(); ++v) {
    if (shortest_path(1, v).empty()) return false;
  }
  return true;
}

bool is_connected(const GenCoxeterMatrix& m) { return DynkinDiagram(m).connected(); }

std::string CoxeterType::name() const {
  const std::string r = std::to_string(rank);
  switch (family) {
    case Family::A: return "A_" + r;
    case Family::BC: return "BC_" + r;
    case Family::D: return "D_" + r;
    case Family::E: return "E_" + r;
    case Family::F: return "F_4";
    case Family::G: return "G_2";
    case Family::H: return "H_" + r;
    case Family::I: return "I_2(" + std::to_string(label) + ")";
    case Family::NotFinite: return "NotFiniteType";
  }
  return "?";
}

namespace {

Rational frac(long num, long den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

mpz_class factorial(long n) {
  mpz_class out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

mpz_class CoxeterType::group_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::BC: return (mpz_class(1) << rank) * factorial(rank);
    case Family::D: return (mpz_class(1) << (rank - 1)) * factorial(rank);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return rank == 3 ? 120 : 14400;
    case Family::I: return 2 * label;
    case Family::NotFinite: break;
  }
  throw Error(ErrorCode::NotFinite, "group_order of a non-finite type");
}

CoxeterType recognize_finite_type(const GenCoxeterMatrix& m) {
  using F = CoxeterType::Family;
  const DynkinDiagram g(m);
  if (!g.connected()) throw Error(ErrorCode::DisconnectedDiagram, "diagram is not connected");
  const int n = m.size();
  const CoxeterType none{};

  if (n == 1) return {F::A, 1, 0};
  if (static_cast<int>(g.edges().size()) != n - 1) return none;  // has a cycle
  for (const auto& e : g.edges()) {
    if (e.label.is_infinite()) return none;
  }

  std::vector<Node> branch;
  for (Node v = 1; v <= n; ++v) {
    if (g.degree(v) >= 4) return none;
    if (g.degree(v) == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return none;

  if (branch.size() == 1) {
    for (const auto& e : g.edges()) {
      if (e.label.value() != 3) return none;
    }
    const Node c = branch.front();
    std::vector<int> arms;
    for (Node start : g.neighbours(c)) {
      int len = 1;
      Node prev = c;
      Node cur = start;
      while (g.degree(cur) == 2) {
        const auto& nb = g.neighbours(cur);
        Node next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {F::D, n, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {F::E, n, 0};
    return none;
  }

  // Path: walk from an endpoint and collect labels.
  Node start = 1;
  while (g.degree(start) != 1) ++start;
  std::vector<long> labels;
  Node prev = 0;
  Node cur = start;
  while (true) {
    Node next = 0;
    for (Node w : g.neighbours(cur)) {
      if (w != prev) next = w;
    }
    if (next == 0) break;
    labels.push_back(m.edge(cur, next).value());
    prev = cur;
    cur = next;
  }

  if (n == 2) {
    const long l = labels.front();
    if (l == 3) return {F::A, 2, 0};
    if (l == 4) return {F::BC, 2, 0};
    if (l == 6) return {F::G, 2, 0};
    return {F::I, 2, l};
  }

  std::vector<std::size_t> odd;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p] != 3) odd.push_back(p);
  }
  if (odd.empty()) return {F::A, n, 0};
  if (odd.size() > 1) return none;
  const std::size_t p = odd.front();
  const bool at_end = p == 0 || p + 1 == labels.size();
  const long l = labels[p];
  if (l == 4 && at_end) return {F::BC, n, 0};
  if (l == 4 && n == 4) return {F::F, 4, 0};
  if (l == 5 && at_end && (n == 3 || n == 4)) return {F::H, n, 0};
  return none;
}

bool coxeter_group_finite(long n, long d) {
  if (n < 1 || d < 2) throw Error(ErrorCode::InvalidParams, "need n >= 1 and d >= 2");
  const Rational lhs = frac(1, n) +
                       frac(1, d);
  return lhs > frac(1, 2);
}

PrintedOrder coxeter_group_order_as_printed(long n, long d) {
  if (!coxeter_group_finite(n, d)) {
    throw Error(ErrorCode::NotFinite, "1/" + std::to_string(n) + " + 1/" + std::to_string(d) +
                                          " <= 1/2");
  }
  PrintedOrder out;
  if (n == 1) {
    out.value = d;
    out.discrepancy_flagged = false;
    out.note = "rank one: cyclic group of order d";
    return out;
  }
  const Rational base = frac(1, n) +
                        frac(1, d) - frac(1, 2);
  // base^(1-n) = (1/base)^(n-1)
  Rational power = 1;
  for (long i = 0; i < n - 1; ++i) power /= base;
  mpz_class n_pow = 1;
  for (long i = 0; i < n - 1; ++i) n_pow *= n;
  out.value = power * Rational(factorial(n), n_pow);
  out.value.canonicalize();
  out.note = "formula evaluated as printed; disagrees with known orders (e.g. d = 2 gives n!, "
             "while the group is S_{n+1})";
  return out;
}

}  // namespace ncox::coxmat
