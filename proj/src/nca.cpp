#include "ncox/nca.hpp"

#include <algorithm>

#include "ncox/error.hpp"

namespace ncox::nca {

using symgrp::length;
using symgrp::parabolic_decompose;

Params Params::make(int n, int d) {
  if (n < 1 || d < 2) {
    throw Error(ErrorCode::InvalidParams,
                "need n >= 1 and d >= 2, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
  }
  return Params{n, d};
}

std::uint64_t Params::dimension() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f * (1 + static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d - 1));
}

std::string BasisWord::to_string() const {
  if (is_short()) return "T" + w.to_string();
  return "T" + w.to_string() + "[k=" + std::to_string(k) + ",m=" + std::to_string(m) + "]";
}

int degree(const BasisWord& b) {
  if (b.is_short()) return length(b.w);
  return length(b.w) + b.k + b.n() - b.m;
}

std::vector<int> generator_word(const BasisWord& b) {
  std::vector<int> word = symgrp::reduced_word(b.w);
  if (b.is_short()) return word;
  const int n = b.n();
  word.insert(word.end(), static_cast<std::size_t>(b.k), n);
  for (int j = n - 1; j >= b.m; --j) word.push_back(j);
  return word;
}

bool canonical_less(const BasisWord& a, const BasisWord& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

void check_word(const Params& p, const BasisWord& b) {
  const bool ok = b.n() == p.n &&
                  (b.is_short() ? b.m == 0 : (b.k >= 1 && b.k <= p.d - 1 && b.m >= 1 && b.m <= p.n));
  if (!ok) {
    throw Error(ErrorCode::ParamsMismatch,
                b.to_string() + " is not a basis word of NC_A(" + std::to_string(p.n) + "," +
                    std::to_string(p.d) + ")");
  }
}

}  // namespace

std::vector<BasisWord> canonical_basis(const Params& p) {
  std::vector<BasisWord> out;
  out.reserve(p.dimension());
  for (const auto& w : symgrp::all_permutations(p.n)) {
    out.push_back(BasisWord::short_word(w));
    for (int k = 1; k <= p.d - 1; ++k) {
      for (int m = 1; m <= p.n; ++m) out.push_back(BasisWord::extended(w, k, m));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<BasisWord> act_generator(const Params& p, int i, const BasisWord& b) {
  if (i < 1 || i > p.n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "generator T_" + std::to_string(i) + " in NC_A(" + std::to_string(p.n) + "," +
                    std::to_string(p.d) + ")");
  }
  check_word(p, b);
  const int n = p.n;

  if (i < n) {
    auto w = symgrp::nil_left_multiply(i, b.w);
    if (!w) return std::nullopt;
    return BasisWord{std::move(*w), b.k, b.m};
  }

  // T_n commutes past T_w when w lies in S_{n-1}.
  if (b.w.fixes_last()) {
    if (b.is_short()) return BasisWord::extended(b.w, 1, n);
    if (b.k <= p.d - 2) return BasisWord::extended(b.w, b.k + 1, b.m);
    return std::nullopt;
  }

  const auto dec = parabolic_decompose(b.w);
  const Permutation w_prime = dec->w_prime.embedded(n);
  const int m_prime = dec->m_prime;
  if (b.is_short()) return BasisWord::extended(w_prime, 1, m_prime);
  if (b.k > 1) return std::nullopt;
  if (m_prime < b.m) {
    return BasisWord::extended(w_prime * symgrp::descending_product(n, n - 1, b.m - 1), 1, m_prime);
  }
  return std::nullopt;
}

std::optional<BasisWord> reduce_word(const Params& p, std::span<const int> word) {
  std::optional<BasisWord> cur = BasisWord::short_word(Permutation::identity(p.n));
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) cur = act_generator(p, *it, *cur);
  return cur;
}

std::optional<BasisWord> multiply_words(const Params& p, const BasisWord& x, const BasisWord& y) {
  check_word(p, x);
  const std::vector<int> word = generator_word(x);
  std::optional<BasisWord> cur = y;
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) cur = act_generator(p, *it, *cur);
  return cur;
}

AlgebraElement AlgebraElement::one(const Params& p) {
  return word(p, BasisWord::short_word(Permutation::identity(p.n)));
}

AlgebraElement AlgebraElement::word(const Params& p, const BasisWord& b, Rational c) {
  check_word(p, b);
  AlgebraElement x(p);
  x.add(b, c);
  return x;
}

void AlgebraElement::check_params(const Params& other) const {
  if (!(params_ == other)) throw Error(ErrorCode::ParamsMismatch, "elements of different algebras");
}

void AlgebraElement::add(const BasisWord& b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_params(other.params_);
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  out += other;
  return out;
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
  AlgebraElement out(params_);
  for (const auto& [b, v] : terms_) out.add(b, v * c);
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return params_ == other.params_ && terms_ == other.terms_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.params() == y.params())) {
    throw Error(ErrorCode::ParamsMismatch, "multiplying elements of different algebras");
  }
  AlgebraElement out(x.params());
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      if (auto b = multiply_words(x.params(), bx, by)) out.add(*b, cx * cy);
    }
  }
  return out;
}

LongestWord longest_word(const Params& p) {
  LongestWord out{BasisWord::extended(symgrp::longest_element(p.n), p.d - 1, 1),
                  p.n * (p.n - 1) / 2 + p.d + p.n - 2};
  if (degree(out.word) != out.length) {
    throw Error(ErrorCode::InvariantViolation, "longest word has unexpected degree");
  }
  int at_top = 0;
  for (const auto& b : canonical_basis(p)) {
    const int deg = degree(b);
    if (deg > out.length || (deg == out.length && b != out.word)) {
      throw Error(ErrorCode::InvariantViolation, "longest word is not the unique top-degree word");
    }
    if (deg == out.length) ++at_top;
  }
  if (at_top != 1) throw Error(ErrorCode::InvariantViolation, "no top-degree word found");
  return out;
}

Polynomial hilbert_series(const Params& p) {
  Polynomial out;
  for (const auto& b : canonical_basis(p)) {
    const auto deg = static_cast<std::size_t>(degree(b));
    if (out.size() <= deg) out.resize(deg + 1, 0);
    ++out[deg];
  }
  return out;
}

Polynomial q_integer(int n) { return Polynomial(static_cast<std::size_t>(std::max(n, 0)), 1); }

Polynomial q_factorial(int n) {
  Polynomial out{1};
  for (int j = 1; j <= n; ++j) out = poly_multiply(out, q_integer(j));
  return out;
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Polynomial hilbert_closed_form(const Params& p) {
  const Polynomial q{0, 1};
  const Polynomial inner = poly_multiply(q, poly_multiply(q_integer(p.n), q_integer(p.d - 1)));
  return poly_multiply(q_factorial(p.n), poly_add(Polynomial{1}, inner));
}

Polynomial hilbert_as_printed(const Params& p) {
  const Polynomial inner = poly_multiply(q_integer(p.n), q_integer(p.d - 1));
  return poly_multiply(q_factorial(p.n), poly_add(Polynomial{1}, inner));
}

std::optional<BasisWord> theta_word(const Params& p, const BasisWord& b) {
  check_word(p, b);
  std::vector<int> word = generator_word(b);
  std::reverse(word.begin(), word.end());
  return reduce_word(p, word);
}

AlgebraElement theta(const AlgebraElement& x) {
  AlgebraElement out(x.params());
  for (const auto& [b, c] : x.terms()) {
    if (auto t = theta_word(x.params(), b)) out.add(*t, c);
  }
  return out;
}

RegularRepresentation::RegularRepresentation(const Params& p)
    : params_(p), basis_(canonical_basis(p)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  action_.assign(static_cast<std::size_t>(p.n), std::vector<std::size_t>(basis_.size(), kZero));
  for (int g = 1; g <= p.n; ++g) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (auto t = act_generator(p, g, basis_[i])) {
        action_[static_cast<std::size_t>(g - 1)][i] = index_.at(*t);
      }
    }
  }
  for (const auto& b : basis_) {
    words_.push_back(generator_word(b));
    degrees_.push_back(nca::degree(b));
  }
}

std::size_t RegularRepresentation::index_of(const BasisWord& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) throw Error(ErrorCode::ParamsMismatch, b.to_string() + " not in basis");
  return it->second;
}

std::size_t RegularRepresentation::multiply(std::size_t x, std::size_t y) const {
  const auto& w = words_[x];
  std::size_t cur = y;
  for (auto it = w.rbegin(); it != w.rend() && cur != kZero; ++it) cur = act(*it, cur);
  return cur;
}

const char* to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

namespace {

using linalg::Column;
using linalg::SparseVector;

// Rows of the linear map s -> image(s) written as a matrix acting on column
// vectors indexed by sources: one row per target.
void append_operator_rows(std::vector<SparseVector>& rows, std::size_t dim,
                          const std::vector<std::size_t>& image) {
  std::vector<SparseVector> by_target(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if (image[s] != RegularRepresentation::kZero) {
      by_target[image[s]].push_back({static_cast<Column>(s), Rational(1)});
    }
  }
  for (auto& r : by_target) {
    if (!r.empty()) rows.push_back(std::move(r));
  }
}

AlgebraElement to_element(const RegularRepresentation& rep, const SparseVector& v) {
  AlgebraElement x(rep.params());
  for (const auto& e : v) x.add(rep.basis()[e.col], e.value);
  return x;
}

}  // namespace

std::vector<AlgebraElement> primitives(const Params& p, Side side) {
  const RegularRepresentation rep(p);
  const std::size_t dim = rep.dimension();
  std::vector<SparseVector> rows;
  for (int g = 1; g <= p.n; ++g) {
    std::vector<std::size_t> image(dim);
    if (side != Side::Right) {
      for (std::size_t s = 0; s < dim; ++s) image[s] = rep.act(g, s);
      append_operator_rows(rows, dim, image);
    }
    if (side != Side::Left) {
      const std::size_t gen = rep.act(g, rep.identity());
      for (std::size_t s = 0; s < dim; ++s) image[s] = rep.multiply(s, gen);
      append_operator_rows(rows, dim, image);
    }
  }
  linalg::Echelon e(dim);
  for (auto& r : rows) e.insert(std::move(r));
  e.interreduce();
  std::vector<AlgebraElement> out;
  for (const auto& v : e.kernel_basis()) out.push_back(to_element(rep, v));
  return out;
}

NilpotencyReport nilpotency_index(const Params& p) {
  const RegularRepresentation rep(p);
  const std::size_t dim = rep.dimension();
  std::vector<std::size_t> ideal;  // basis words of positive degree span m
  for (std::size_t i = 0; i < dim; ++i) {
    if (rep.degree(i) > 0) ideal.push_back(i);
  }

  NilpotencyReport report;
  std::vector<SparseVector> power;
  for (std::size_t i : ideal) power.push_back(linalg::unit_vector(static_cast<Column>(i)));
  int exponent = 1;
  while (true) {
    report.power_dims.push_back(power.size());
    if (power.empty()) break;
    // m^(N+1) = m^N . m
    linalg::Echelon span(dim);
    for (const auto& v : power) {
      for (std::size_t b : ideal) {
        SparseVector prod;
        for (const auto& e : v) {
          const std::size_t t = rep.multiply(e.col, b);
          if (t != RegularRepresentation::kZero) prod.push_back({static_cast<Column>(t), e.value});
        }
        linalg::canonicalize(prod);
        if (!prod.empty()) span.insert(std::move(prod));
      }
    }
    span.interreduce();
    power.clear();
    for (Column c = 0; c < dim; ++c) {
      if (span.is_pivot(c)) power.push_back(span.pivot_row(c));
    }
    ++exponent;
  }
  report.index = exponent;
  return report;
}

FrobeniusReport frobenius_check(const Params& p) {
  FrobeniusReport r;
  r.primitive_dim = primitives(p, Side::TwoSided).size();
  r.frobenius = r.primitive_dim == 1;
  r.criterion = p.n == 1 || p.d == 2;
  if (r.frobenius != r.criterion) {
    throw Error(ErrorCode::InvariantViolation,
                "Frobenius verdict disagrees with the n = 1 or d = 2 criterion");
  }
  return r;
}

KhovanovReport khovanov_rank_check(const Params& p) {
  if (p.n < 2) throw Error(ErrorCode::InvalidParams, "the bimodule check needs n >= 2");
  KhovanovReport r;
  std::uint64_t fact = 1;
  for (int i = 2; i <= p.n; ++i) fact *= static_cast<std::uint64_t>(i);
  r.dimension = p.dimension();
  r.regular_part = fact;
  // A_{n-1} is free of rank n over A_{n-2}, so the tensor square has
  // dimension (n!)^2 / (n-1)! = n * n!.
  r.tensor_part = static_cast<std::uint64_t>(p.n) * fact;
  r.copies = static_cast<std::uint64_t>(p.d - 1);
  r.identity_holds = r.dimension == r.regular_part + r.copies * r.tensor_part;

  const RegularRepresentation rep(p);
  const Permutation e = Permutation::identity(p.n);
  std::vector<std::size_t> reps{rep.index_of(BasisWord::short_word(e))};
  for (int k = 1; k <= p.d - 1; ++k) {
    for (int m = 1; m <= p.n; ++m) reps.push_back(rep.index_of(BasisWord::extended(e, k, m)));
  }
  std::vector<std::size_t> subalgebra;
  for (const auto& u : symgrp::all_permutations(p.n)) {
    subalgebra.push_back(rep.index_of(BasisWord::short_word(u)));
  }

  r.representatives = reps.size();
  linalg::Echelon total(rep.dimension());
  for (std::size_t rep_idx : reps) {
    linalg::Echelon span(rep.dimension());
    for (std::size_t u : subalgebra) {
      const std::size_t t = rep.multiply(u, rep_idx);
      if (t == RegularRepresentation::kZero) continue;
      span.insert(linalg::unit_vector(static_cast<Column>(t)));
      total.insert(linalg::unit_vector(static_cast<Column>(t)));
    }
    r.span_ranks.push_back(span.rank());
  }
  r.total_rank = total.rank();
  std::size_t sum = 0;
  bool each_free = true;
  for (std::size_t s : r.span_ranks) {
    sum += s;
    each_free = each_free && s == fact;
  }
  r.free = each_free && sum == r.total_rank && r.total_rank == rep.dimension() &&
           r.representatives == 1 + static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.d - 1);
  return r;
}

}  // namespace ncox::nca
