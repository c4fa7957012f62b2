#include "ncox/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

#include "ncox/error.hpp"

namespace ncox::oracle {

using linalg::Column;
using linalg::SparseVector;

const char* to_string(Status s) { return s == Status::Finite ? "Finite" : "ExceedsBound"; }

namespace {

struct Relation {
  std::vector<std::pair<FreeWord, Rational>> terms;
  int length;
};

FreeWord alternating(int a, int b, long len) {
  FreeWord w;
  for (long i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

std::vector<Relation> relations_of(const coxmat::GenCoxeterMatrix& m) {
  std::vector<Relation> out;
  for (int i = 1; i <= m.size(); ++i) {
    const long d = m.order(i);
    out.push_back({{{FreeWord(static_cast<std::size_t>(d), i), Rational(1)}}, static_cast<int>(d)});
  }
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = i + 1; j <= m.size(); ++j) {
      const coxmat::Exponent e = m.edge(i, j);
      if (e.is_infinite()) continue;
      out.push_back({{{alternating(i, j, e.value()), Rational(1)},
                      {alternating(j, i, e.value()), Rational(-1)}},
                     static_cast<int>(e.value())});
    }
  }
  return out;
}

std::size_t hash_row(const SparseVector& row) {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& e : row) {
    h ^= std::hash<Column>{}(e.col) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long>{}(mpz_get_si(e.value.get_num_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

// Runs body(begin, end, slot) over [0, count) split into contiguous chunks.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

}  // namespace

GradedQuotient::GradedQuotient(coxmat::GenCoxeterMatrix m, Bounds bounds)
    : matrix_(std::move(m)), bounds_(bounds) {
  if (bounds_.max_degree < 1) {
    throw Error(ErrorCode::BoundTooSmall, "max_degree must be at least 1");
  }
  if (bounds_.max_total < 1) throw Error(ErrorCode::BoundTooSmall, "max_total must be positive");
  slices_.dims.push_back(1);
  slices_.normal_forms.push_back({FreeWord{}});
  slices_.total = 1;
  slices_.status = Status::ExceedsBound;
  for (int k = 1; k <= bounds_.max_degree; ++k) {
    compute_slice(k);
    slices_.degree_reached = k;
    slices_.total += slices_.dims[static_cast<std::size_t>(k)];
    if (slices_.dims[static_cast<std::size_t>(k)] == 0) {
      slices_.status = Status::Finite;
      break;
    }
    if (slices_.total > bounds_.max_total) break;
  }
}

void GradedQuotient::compute_slice(int k) {
  const int gens = matrix_.size();
  const auto& prev = slices_.normal_forms[static_cast<std::size_t>(k - 1)];
  const std::size_t columns = prev.size() * static_cast<std::size_t>(gens);

  // Rows of u . r for every relation r of length j <= k and every normal
  // form u of degree k - j.
  std::vector<SparseVector> rows;
  for (const Relation& rel : relations_of(matrix_)) {
    if (rel.length > k) continue;
    const std::size_t base_degree = static_cast<std::size_t>(k - rel.length);
    const std::size_t count = slices_.dims[base_degree];
    const unsigned threads = std::max(1u, bounds_.threads);
    std::vector<std::vector<SparseVector>> parts(threads);
    parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end, std::size_t slot) {
      for (std::size_t u = begin; u < end; ++u) {
        SparseVector row;
        for (const auto& [word, coeff] : rel.terms) {
          std::vector<Term> cur{{u, Rational(1)}};
          int deg = static_cast<int>(base_degree);
          for (std::size_t pos = 0; pos + 1 < word.size() && !cur.empty(); ++pos, ++deg) {
            SparseVector next;
            for (const auto& t : cur) {
              for (const auto& img : right_multiply(deg, t.index, word[pos])) {
                next.push_back({static_cast<Column>(img.index), t.coeff * img.coeff});
              }
            }
            linalg::canonicalize(next);
            cur.clear();
            for (auto& e : next) cur.push_back({e.col, std::move(e.value)});
          }
          const int last = word.back();
          for (const auto& t : cur) {
            row.push_back({static_cast<Column>(t.index * static_cast<std::size_t>(gens) +
                                               static_cast<std::size_t>(last - 1)),
                           coeff * t.coeff});
          }
        }
        linalg::canonicalize(row);
        if (!row.empty()) parts[slot].push_back(std::move(row));
      }
    });
    for (auto& part : parts) {
      for (auto& row : part) rows.push_back(std::move(row));
    }
  }

  // Deduplicate before reduction.
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  std::vector<SparseVector> unique;
  for (auto& row : rows) {
    auto& bucket = seen[hash_row(row)];
    bool dup = false;
    for (std::size_t idx : bucket) {
      if (unique[idx] == row) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    bucket.push_back(unique.size());
    unique.push_back(std::move(row));
  }

  linalg::Echelon ech(columns);
  for (auto& row : unique) ech.insert(std::move(row));
  ech.interreduce();

  std::vector<std::size_t> new_index(columns, static_cast<std::size_t>(-1));
  std::vector<FreeWord> forms;
  for (Column c = 0; c < columns; ++c) {
    if (ech.is_pivot(c)) continue;
    new_index[c] = forms.size();
    FreeWord w = prev[c / static_cast<std::size_t>(gens)];
    w.push_back(static_cast<int>(c % static_cast<std::size_t>(gens)) + 1);
    forms.push_back(std::move(w));
  }

  std::vector<std::vector<Term>> table(columns);
  for (Column c = 0; c < columns; ++c) {
    if (!ech.is_pivot(c)) {
      table[c].push_back({new_index[c], Rational(1)});
      continue;
    }
    const SparseVector& row = ech.pivot_row(c);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      table[c].push_back({new_index[row[i].col], -row[i].value});
    }
  }

  slices_.dims.push_back(forms.size());
  slices_.normal_forms.push_back(std::move(forms));
  table_.push_back(std::move(table));
}

const std::vector<Term>& GradedQuotient::right_multiply(int degree, std::size_t b, int g) const {
  return table_[static_cast<std::size_t>(degree)]
               [b * static_cast<std::size_t>(matrix_.size()) + static_cast<std::size_t>(g - 1)];
}

Expansion GradedQuotient::reduce(std::span<const int> word) const {
  for (int g : word) {
    if (g < 1 || g > matrix_.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g));
    }
  }
  Expansion out;
  out.degree = static_cast<int>(word.size());
  if (out.degree > slices_.degree_reached) {
    if (slices_.status == Status::Finite) return out;
    throw Error(ErrorCode::DegreeExceedsComputation,
                "word of degree " + std::to_string(out.degree) + " beyond computed degree " +
                    std::to_string(slices_.degree_reached));
  }
  std::vector<Term> cur{{0, Rational(1)}};
  for (std::size_t pos = 0; pos < word.size() && !cur.empty(); ++pos) {
    SparseVector next;
    for (const auto& t : cur) {
      for (const auto& img : right_multiply(static_cast<int>(pos), t.index, word[pos])) {
        next.push_back({static_cast<Column>(img.index), t.coeff * img.coeff});
      }
    }
    linalg::canonicalize(next);
    cur.clear();
    for (auto& e : next) cur.push_back({e.col, std::move(e.value)});
  }
  out.terms = std::move(cur);
  return out;
}

std::optional<FreeWord> GradedQuotient::normal_form(std::span<const int> word) const {
  const Expansion e = reduce(word);
  if (e.is_zero()) return std::nullopt;
  if (e.terms.size() != 1 || e.terms.front().coeff != 1) {
    throw Error(ErrorCode::InvariantViolation, "word is not equal to a single normal form");
  }
  return slices_.normal_forms[static_cast<std::size_t>(e.degree)][e.terms.front().index];
}

GradedSlices graded_dimensions(const coxmat::GenCoxeterMatrix& m, Bounds bounds) {
  return GradedQuotient(m, bounds).slices();
}

Expansion reduce_word(const coxmat::GenCoxeterMatrix& m, std::span<const int> word,
                      int max_degree) {
  if (static_cast<int>(word.size()) > max_degree) {
    throw Error(ErrorCode::DegreeExceedsComputation, "word longer than max_degree");
  }
  Bounds b;
  b.max_degree = std::max(1, max_degree);
  b.max_total = static_cast<std::size_t>(-1);
  return GradedQuotient(m, b).reduce(word);
}

BraidIdentityReport braid_monoid_identity_check(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "need n >= 2");
  BraidIdentityReport report;
  report.n = n;
  const int longest = 2 * (n - 1) - 1;
  std::vector<long> diag(static_cast<std::size_t>(n), longest + 1);
  Bounds b;
  b.max_degree = longest;
  b.max_total = static_cast<std::size_t>(-1);
  const GradedQuotient q(coxmat::GenCoxeterMatrix::type_a(diag), b);
  for (int m = 1; m <= n - 1; ++m) {
    FreeWord lhs;
    for (int j = n - 1; j >= m; --j) lhs.push_back(j);
    for (int j = m + 1; j <= n - 1; ++j) lhs.push_back(j);
    FreeWord rhs;
    for (int j = m; j <= n - 1; ++j) rhs.push_back(j);
    for (int j = n - 2; j >= m; --j) rhs.push_back(j);
    const Expansion a = q.reduce(lhs);
    const Expansion c = q.reduce(rhs);
    bool same = !a.is_zero() && a.terms.size() == c.terms.size();
    for (std::size_t i = 0; same && i < a.terms.size(); ++i) {
      same = a.terms[i].index == c.terms[i].index && a.terms[i].coeff == c.terms[i].coeff;
    }
    report.checked_m.push_back(m);
    report.holds = report.holds && same;
  }
  return report;
}

}  // namespace ncox::oracle
