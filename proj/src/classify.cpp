#include "ncox/classify.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "ncox/error.hpp"
#include "witness_figures_data.hpp"

namespace ncox::classify {

using coxmat::DynkinDiagram;
using coxmat::Exponent;
using coxmat::GenCoxeterMatrix;
using Family = coxmat::CoxeterType::Family;

namespace {

constexpr std::pair<Figure, const char*> kFigureNames[] = {
    {Figure::TwoHeavy, "two_heavy"},
    {Figure::HeavyEdge, "heavy_edge"},
    {Figure::Fork, "fork"},
    {Figure::HighEdgeChain, "high_edge_chain"},
    {Figure::Quotient, "quotient"},
    {Figure::InfiniteCoxeterGroup, "infinite_coxeter_group"},
};

bool adjacent(const GenCoxeterMatrix& m, Node a, Node b) { return !(m.edge(a, b) == Exponent(2)); }

std::string join(const std::vector<Node>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i]);
  }
  return s;
}

[[noreturn]] void inapplicable(const std::string& why) {
  throw Error(ErrorCode::CaseInapplicable, why);
}

// Walks away from a heavy end node alpha until either an edge labelled >= 4
// or a node with two further neighbours appears.
std::optional<WitnessCase> walk(const GenCoxeterMatrix& m, Node alpha,
                                const std::set<Node>& killed) {
  const DynkinDiagram g(m);
  std::vector<Node> chain{alpha};
  std::set<Node> seen{alpha};
  Node prev = 0;
  Node cur = alpha;
  while (true) {
    std::vector<Node> next;
    for (Node x : g.neighbours(cur)) {
      if (x != prev && !killed.count(x)) next.push_back(x);
    }
    for (Node x : next) {
      if (m.edge(cur, x).at_least(4)) {
        WitnessCase c;
        c.figure = c.inner = cur == alpha ? Figure::HeavyEdge : Figure::HighEdgeChain;
        c.chain = chain;
        c.gamma = x;
        return c;
      }
    }
    if (next.size() >= 2) {
      WitnessCase c;
      c.figure = c.inner = Figure::Fork;
      c.chain = chain;
      c.gamma = next[0];
      c.delta = next[1];
      return c;
    }
    if (next.empty() || seen.count(next[0])) return std::nullopt;
    prev = cur;
    cur = next[0];
    seen.insert(cur);
    chain.push_back(cur);
  }
}

// Nodes of the arm starting at `first`, walking away from `branch`.
std::vector<Node> arm(const DynkinDiagram& g, Node branch, Node first) {
  std::vector<Node> out{first};
  Node prev = branch;
  Node cur = first;
  while (true) {
    Node next = 0;
    for (Node x : g.neighbours(cur)) {
      if (x != prev) next = x;
    }
    if (next == 0) return out;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
}

WitnessCase as_quotient(WitnessCase inner, std::vector<Node> killed) {
  std::sort(killed.begin(), killed.end());
  inner.inner = inner.figure;
  inner.figure = Figure::Quotient;
  inner.killed = std::move(killed);
  return inner;
}

// Keep alpha's arm whole and cut the other arms of the branch node down to
// their first node; the result is of type D with alpha at the end of the
// long arm.
WitnessCase branch_quotient(const GenCoxeterMatrix& m, Node alpha) {
  const DynkinDiagram g(m);
  Node branch = 0;
  for (Node v = 1; v <= m.size(); ++v) {
    if (g.degree(v) == 3) branch = v;
  }
  std::vector<Node> killed;
  for (Node first : g.neighbours(branch)) {
    const auto nodes = arm(g, branch, first);
    if (std::find(nodes.begin(), nodes.end(), alpha) != nodes.end()) continue;
    killed.insert(killed.end(), nodes.begin() + 1, nodes.end());
  }
  const std::set<Node> dead(killed.begin(), killed.end());
  auto inner = walk(m, alpha, dead);
  if (!inner || inner->figure != Figure::Fork) {
    throw Error(ErrorCode::InvariantViolation, "no fork after quotienting the branch arms");
  }
  if (killed.empty()) return *inner;
  return as_quotient(*inner, std::move(killed));
}

mpz_class factorial(long n) {
  mpz_class out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

// Tiny evaluator for fixture index expressions such as "1", "m", "j+1",
// "m-1".
int eval(const std::string& expr, const std::map<std::string, int>& vars) {
  int total = 0;
  int sign = 1;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw Error(ErrorCode::ParseError, "bad fixture expression: " + expr);
    int v = 0;
    if (std::isdigit(static_cast<unsigned char>(token[0]))) {
      v = std::stoi(token);
    } else {
      auto it = vars.find(token);
      if (it == vars.end()) throw Error(ErrorCode::ParseError, "unknown variable " + token);
      v = it->second;
    }
    total += sign * v;
    token.clear();
  };
  for (char ch : expr) {
    if (ch == ' ') continue;
    if (ch == '+' || ch == '-') {
      flush();
      sign = ch == '+' ? 1 : -1;
    } else {
      token += ch;
    }
  }
  flush();
  return total;
}

const nlohmann::json& figures() {
  static const nlohmann::json data = nlohmann::json::parse(kWitnessFiguresJson);
  return data;
}

std::string vector_name(const nlohmann::json& entry, const std::map<std::string, int>& vars) {
  std::string name = entry.at(0).get<std::string>();
  if (entry.size() > 1) name += std::to_string(eval(entry.at(1).get<std::string>(), vars));
  return name;
}

Node resolve_generator(const nlohmann::json& via, const WitnessCase& c,
                       const std::map<std::string, int>& vars) {
  const std::string role = via.at(0).get<std::string>();
  if (role == "alpha") return c.chain.front();
  if (role == "beta") {
    const int j = eval(via.at(1).get<std::string>(), vars);
    if (j < 1 || j >= c.m()) throw Error(ErrorCode::ParseError, "beta index out of range");
    return c.chain[static_cast<std::size_t>(j)];
  }
  if (role == "gamma") return c.gamma;
  if (role == "delta") {
    if (!c.delta) throw Error(ErrorCode::ParseError, "figure needs delta");
    return *c.delta;
  }
  throw Error(ErrorCode::ParseError, "unknown generator role " + role);
}

using Value = std::size_t;

std::string show(const TruncatedModule& mod, Value v) {
  if (v == TruncatedModule::kZero) return "0";
  if (v == TruncatedModule::kSink) return "sink";
  return mod.basis[v].to_string();
}

Value apply(const TruncatedModule& mod, const std::vector<int>& word, Value v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (v == TruncatedModule::kZero || v == TruncatedModule::kSink) return v;
    v = mod.action[static_cast<std::size_t>(*it - 1)][v];
  }
  return v;
}

std::string word_string(const std::vector<int>& w) {
  std::string s;
  for (int g : w) s += "T" + std::to_string(g);
  return s;
}

}  // namespace

const char* to_string(Figure f) {
  for (const auto& [fig, name] : kFigureNames) {
    if (fig == f) return name;
  }
  return "?";
}

Figure figure_from_string(const std::string& s) {
  for (const auto& [fig, name] : kFigureNames) {
    if (s == name) return fig;
  }
  throw Error(ErrorCode::ParseError, "unknown figure " + s);
}

std::string WitnessCase::describe() const {
  if (figure == Figure::InfiniteCoxeterGroup) return "infinite_coxeter_group";
  std::string s;
  if (figure == Figure::Quotient) s = "quotient killing {" + join(killed) + "} then ";
  s += std::string(to_string(shape())) + ": chain (" + join(chain) + "), gamma " +
       std::to_string(gamma);
  if (delta) s += ", delta " + std::to_string(*delta);
  return s;
}

std::optional<mpz_class> finite_dimension(const Classification& c) {
  if (const auto* f = std::get_if<FiniteUsual>(&c)) return f->dimension;
  if (const auto* f = std::get_if<FiniteTypeAEnd>(&c)) return f->dimension;
  return std::nullopt;
}

std::string summary(const Classification& c) {
  if (const auto* f = std::get_if<FiniteUsual>(&c)) {
    return "FiniteUsual " + f->type.name() + ", dimension " + f->dimension.get_str();
  }
  if (const auto* f = std::get_if<FiniteTypeAEnd>(&c)) {
    return "FiniteTypeAEnd n=" + std::to_string(f->n) + " d=" + std::to_string(f->d) +
           ", dimension " + f->dimension.get_str();
  }
  return "Infinite, witness " + std::get<Infinite>(c).witness.describe();
}

Classification decide(const GenCoxeterMatrix& m) {
  const DynkinDiagram g(m);
  if (!g.connected()) throw Error(ErrorCode::DisconnectedDiagram, "Dynkin diagram is disconnected");

  std::vector<Node> heavy;
  for (Node v = 1; v <= m.size(); ++v) {
    if (m.order(v) >= 3) heavy.push_back(v);
  }

  if (heavy.empty()) {
    const auto type = coxmat::recognize_finite_type(m);
    if (type.finite()) return FiniteUsual{type, type.group_order()};
    WitnessCase c;
    c.figure = c.inner = Figure::InfiniteCoxeterGroup;
    return Infinite{c};
  }

  if (heavy.size() >= 2) {
    std::vector<Node> best;
    for (std::size_t a = 0; a < heavy.size(); ++a) {
      for (std::size_t b = a + 1; b < heavy.size(); ++b) {
        auto path = g.shortest_path(heavy[a], heavy[b]);
        if (best.empty() || path.size() < best.size()) best = std::move(path);
      }
    }
    WitnessCase c;
    c.figure = c.inner = Figure::TwoHeavy;
    c.gamma = best.back();
    c.chain.assign(best.begin(), best.end() - 1);
    return Infinite{c};
  }

  const Node alpha = heavy.front();
  for (Node x : g.neighbours(alpha)) {
    if (m.edge(alpha, x).at_least(4)) {
      WitnessCase c;
      c.figure = c.inner = Figure::HeavyEdge;
      c.chain = {alpha};
      c.gamma = x;
      return Infinite{c};
    }
  }
  if (g.degree(alpha) >= 2) {
    WitnessCase c;
    c.figure = c.inner = Figure::Fork;
    c.chain = {alpha};
    c.gamma = g.neighbours(alpha)[0];
    c.delta = g.neighbours(alpha)[1];
    return Infinite{c};
  }

  const auto type = coxmat::recognize_finite_type(m);
  switch (type.family) {
    case Family::A:
      return FiniteTypeAEnd{m.size(), m.order(alpha),
                            factorial(m.size()) * (1 + m.size() * (m.order(alpha) - 1))};
    case Family::BC:
    case Family::H: {
      auto c = walk(m, alpha, {});
      if (c && c->figure == Figure::HighEdgeChain) return Infinite{*c};
      break;
    }
    case Family::F: {
      Node far = 0;
      for (Node v = 1; v <= m.size(); ++v) {
        if (v != alpha && g.degree(v) == 1) far = v;
      }
      auto c = walk(m, alpha, {far});
      if (c && c->figure == Figure::HighEdgeChain) {
        return Infinite{as_quotient(*c, {far})};
      }
      break;
    }
    case Family::D:
    case Family::E:
      return Infinite{branch_quotient(m, alpha)};
    case Family::NotFinite: {
      auto c = walk(m, alpha, {});
      if (c) return Infinite{*c};
      break;
    }
    case Family::G:
    case Family::I:
      break;
  }
  throw Error(ErrorCode::InvariantViolation, "no witness case found for " + type.name());
}

void check_case(const GenCoxeterMatrix& m, const WitnessCase& c) {
  if (c.figure == Figure::InfiniteCoxeterGroup) {
    inapplicable("no module is built when every d_i = 2");
  }
  const Figure shape = c.shape();
  if (shape == Figure::Quotient || shape == Figure::InfiniteCoxeterGroup) {
    inapplicable("quotient must wrap a module shape");
  }
  if (c.figure == Figure::Quotient && c.killed.empty()) inapplicable("quotient kills no node");
  if (c.figure != Figure::Quotient && !c.killed.empty()) {
    inapplicable("only quotient cases kill nodes");
  }
  if (c.chain.empty()) inapplicable("empty chain");
  if ((shape == Figure::Fork) != c.delta.has_value()) {
    inapplicable("delta is required for fork and only for fork");
  }

  std::vector<Node> used = c.chain;
  used.push_back(c.gamma);
  if (c.delta) used.push_back(*c.delta);
  std::set<Node> distinct;
  for (Node v : used) {
    if (v < 1 || v > m.size()) inapplicable("node " + std::to_string(v) + " out of range");
    if (!distinct.insert(v).second) inapplicable("node " + std::to_string(v) + " repeated");
  }
  for (Node v : c.killed) {
    if (v < 1 || v > m.size()) inapplicable("killed node out of range");
    if (distinct.count(v)) inapplicable("killed node " + std::to_string(v) + " is in the case");
  }

  const Node alpha = c.chain.front();
  if (m.order(alpha) < 3) inapplicable("alpha = " + std::to_string(alpha) + " has d = 2");
  for (std::size_t i = 0; i + 1 < c.chain.size(); ++i) {
    if (!adjacent(m, c.chain[i], c.chain[i + 1])) inapplicable("chain is not a path");
  }
  const Node last = c.chain.back();
  if (!adjacent(m, last, c.gamma)) inapplicable("gamma is not adjacent to the chain end");
  switch (shape) {
    case Figure::TwoHeavy:
      if (m.order(c.gamma) < 3) inapplicable("gamma has d = 2");
      break;
    case Figure::HeavyEdge:
      if (c.m() != 1) inapplicable("heavy_edge uses alpha alone");
      if (!m.edge(alpha, c.gamma).at_least(4)) inapplicable("edge alpha-gamma below 4");
      break;
    case Figure::Fork:
      if (!adjacent(m, last, *c.delta)) inapplicable("delta is not adjacent to the chain end");
      break;
    case Figure::HighEdgeChain:
      if (!m.edge(last, c.gamma).at_least(4)) inapplicable("edge to gamma below 4");
      break;
    default:
      break;
  }
}

TruncatedModule build_witness(const GenCoxeterMatrix& m, const WitnessCase& c, int truncation) {
  if (truncation < 2) throw Error(ErrorCode::InvalidParams, "truncation must be at least 2");
  check_case(m, c);

  const auto& fig = figures().at(to_string(c.shape()));
  std::map<std::string, int> vars{{"m", c.m()}};

  std::vector<std::string> lap;
  for (const auto& entry : fig.at("nodes")) {
    if (entry.size() == 1) {
      lap.push_back(entry.at(0).get<std::string>());
      continue;
    }
    const int lo = eval(entry.at(1).get<std::string>(), vars);
    const int hi = eval(entry.at(2).get<std::string>(), vars);
    for (int j = lo; j <= hi; ++j) lap.push_back(entry.at(0).get<std::string>() + std::to_string(j));
  }
  std::map<std::string, std::size_t> offset;
  for (std::size_t i = 0; i < lap.size(); ++i) offset[lap[i]] = i;

  TruncatedModule mod;
  mod.witness = c;
  mod.truncation = truncation;
  for (int r = 1; r <= truncation; ++r) {
    for (const auto& name : lap) mod.basis.push_back({name, r});
  }
  mod.action.assign(static_cast<std::size_t>(m.size()),
                    std::vector<std::size_t>(mod.basis.size(), TruncatedModule::kZero));
  mod.generator = offset.at("A");

  auto index = [&](const std::string& name, int r) {
    auto it = offset.find(name);
    if (it == offset.end()) throw Error(ErrorCode::ParseError, "figure has no vector " + name);
    return static_cast<std::size_t>(r - 1) * lap.size() + it->second;
  };

  for (const auto& arrow : fig.at("arrows")) {
    int lo = 0;
    int hi = 0;
    std::string var;
    if (arrow.contains("for")) {
      var = arrow.at("for").at(0).get<std::string>();
      lo = eval(arrow.at("for").at(1).get<std::string>(), vars);
      hi = eval(arrow.at("for").at(2).get<std::string>(), vars);
    }
    const bool wrap = arrow.value("wrap", false);
    for (int j = lo; j <= hi; ++j) {
      auto scope = vars;
      if (!var.empty()) scope[var] = j;
      const std::string from = vector_name(arrow.at("from"), scope);
      const std::string to = vector_name(arrow.at("to"), scope);
      const Node gen = resolve_generator(arrow.at("via"), c, scope);
      for (int r = 1; r <= truncation; ++r) {
        std::size_t target = TruncatedModule::kSink;
        if (!wrap) {
          target = index(to, r);
        } else if (r < truncation) {
          target = index(to, r + 1);
        }
        auto& slot = mod.action[static_cast<std::size_t>(gen - 1)][index(from, r)];
        if (slot != TruncatedModule::kZero && slot != target) {
          throw Error(ErrorCode::InvariantViolation,
                      "conflicting arrows for T" + std::to_string(gen) + " on " + from);
        }
        slot = target;
      }
    }
  }
  return mod;
}

TruncatedModule restrict_to_quotient(const TruncatedModule& module) {
  const auto& killed = module.witness.killed;
  std::map<Node, Node> renumber;
  Node next = 1;
  for (Node v = 1; v <= module.generators(); ++v) {
    if (std::find(killed.begin(), killed.end(), v) == killed.end()) renumber[v] = next++;
  }
  TruncatedModule out = module;
  out.action.clear();
  for (const auto& [old_node, new_node] : renumber) {
    (void)new_node;
    out.action.push_back(module.action[static_cast<std::size_t>(old_node - 1)]);
  }
  WitnessCase& w = out.witness;
  for (Node& v : w.chain) v = renumber.at(v);
  w.gamma = renumber.at(w.gamma);
  if (w.delta) w.delta = renumber.at(*w.delta);
  w.figure = w.inner;
  w.killed.clear();
  return out;
}

WitnessReport check_witness(const GenCoxeterMatrix& m, const TruncatedModule& mod) {
  if (mod.generators() != m.size()) {
    throw Error(ErrorCode::ParamsMismatch, "module has " + std::to_string(mod.generators()) +
                                               " generators, matrix has " +
                                               std::to_string(m.size()));
  }
  for (const auto& row : mod.action) {
    if (row.size() != mod.basis.size()) {
      throw Error(ErrorCode::InvariantViolation, "action table has the wrong width");
    }
    for (std::size_t t : row) {
      if (t != TruncatedModule::kZero && t != TruncatedModule::kSink && t >= mod.basis.size()) {
        throw Error(ErrorCode::InvariantViolation, "action target out of range");
      }
    }
  }

  struct Rel {
    std::string name;
    std::vector<int> lhs;
    std::optional<std::vector<int>> rhs;  // nullopt: lhs must vanish
  };
  std::vector<Rel> rels;
  for (Node i = 1; i <= m.size(); ++i) {
    rels.push_back({"T" + std::to_string(i) + "^" + std::to_string(m.order(i)),
                    std::vector<int>(static_cast<std::size_t>(m.order(i)), i), std::nullopt});
  }
  for (Node i = 1; i <= m.size(); ++i) {
    for (Node j = i + 1; j <= m.size(); ++j) {
      const Exponent e = m.edge(i, j);
      if (e.is_infinite()) continue;
      std::vector<int> a;
      std::vector<int> b;
      for (long t = 0; t < e.value(); ++t) {
        a.push_back(t % 2 == 0 ? i : j);
        b.push_back(t % 2 == 0 ? j : i);
      }
      rels.push_back({word_string(a) + " = " + word_string(b), a, b});
    }
  }

  WitnessReport rep;
  for (std::size_t v = 0; v < mod.basis.size(); ++v) {
    if (mod.basis[v].r >= mod.truncation) continue;
    ++rep.checked_vectors;
    for (const auto& rel : rels) {
      ++rep.checked_relations;
      const Value l = apply(mod, rel.lhs, v);
      const Value r = rel.rhs ? apply(mod, *rel.rhs, v) : TruncatedModule::kZero;
      if (l == TruncatedModule::kSink || r == TruncatedModule::kSink) {
        ++rep.inconclusive;
        continue;
      }
      if (l != r) {
        rep.violations.push_back({mod.basis[v].to_string(), rel.name, show(mod, l), show(mod, r)});
      }
    }
  }

  for (int rho = 1; rho <= mod.truncation; ++rho) {
    std::vector<bool> seen(mod.basis.size(), false);
    std::deque<std::size_t> queue{mod.generator};
    seen[mod.generator] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& row : mod.action) {
        const std::size_t t = row[v];
        if (t == TruncatedModule::kZero || t == TruncatedModule::kSink) continue;
        if (mod.basis[t].r > rho || seen[t]) continue;
        seen[t] = true;
        ++count;
        queue.push_back(t);
      }
    }
    rep.reachable.push_back(count);
  }
  rep.cyclic = !rep.reachable.empty() && rep.reachable.back() == mod.basis.size();
  rep.grows = rep.reachable.size() >= 2;
  for (std::size_t i = 1; i < rep.reachable.size(); ++i) {
    rep.grows = rep.grows && rep.reachable[i] > rep.reachable[i - 1];
  }

  if (mod.witness.figure == Figure::Quotient) {
    for (Node k : mod.witness.killed) {
      for (std::size_t v = 0; v < mod.basis.size(); ++v) {
        const std::size_t t = mod.action[static_cast<std::size_t>(k - 1)][v];
        if (t != TruncatedModule::kZero) {
          rep.violations.push_back({mod.basis[v].to_string(), "killed T" + std::to_string(k) + " = 0",
                                    show(mod, t), "0"});
        }
      }
    }
    const auto sub = check_witness(m.without(mod.witness.killed), restrict_to_quotient(mod));
    for (auto v : sub.violations) {
      v.relation = "quotient: " + v.relation;
      rep.violations.push_back(std::move(v));
    }
    rep.quotient_checked = true;
  }
  return rep;
}

WitnessReport verify_witness(const GenCoxeterMatrix& m, const TruncatedModule& module) {
  WitnessReport rep = check_witness(m, module);
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    throw Error(ErrorCode::RelationViolation, "relation " + v.relation + " fails on " + v.vector +
                                                  ": lhs " + v.lhs + ", rhs " + v.rhs);
  }
  if (!rep.cyclic) throw Error(ErrorCode::InvariantViolation, "module is not cyclic from A_1");
  if (!rep.grows) {
    throw Error(ErrorCode::InvariantViolation, "reachable set does not grow with the truncation");
  }
  return rep;
}

}  // namespace ncox::classify
