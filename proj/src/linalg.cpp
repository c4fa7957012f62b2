#include "ncox/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ncox {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace linalg {

void add_scaled(SparseVector& target, const Rational& scale, const SparseVector& source) {
  if (sgn(scale) == 0 || source.empty()) return;
  SparseVector out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->col < b->col)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == target.end() || b->col < a->col) {
      out.push_back({b->col, scale * b->value});
      ++b;
    } else {
      Rational v = a->value + scale * b->value;
      if (sgn(v) != 0) out.push_back({a->col, std::move(v)});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void canonicalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const Entry& e) { return sgn(e.value) == 0; });
  v = std::move(out);
}

SparseVector unit_vector(Column col) { return {Entry{col, Rational(1)}}; }

Echelon::Echelon(std::size_t columns) : pivots_(columns) {}

bool Echelon::insert(SparseVector row) {
  while (!row.empty()) {
    const Column lead = row.back().col;
    if (!pivots_[lead]) break;
    const Rational scale = -row.back().value;
    add_scaled(row, scale, *pivots_[lead]);
  }
  if (row.empty()) return false;

  const Rational inv = 1 / row.back().value;
  if (inv != 1) {
    for (auto& e : row) e.value *= inv;
  }
  const Column lead = row.back().col;
  pivots_[lead] = std::move(row);
  ++rank_;
  reduced_ = false;
  return true;
}

void Echelon::interreduce() {
  if (reduced_) return;
  for (Column c = 0; c < pivots_.size(); ++c) {
    if (!pivots_[c]) continue;
    SparseVector& row = *pivots_[c];
    std::vector<Column> hits;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (pivots_[row[i].col]) hits.push_back(row[i].col);
    }
    // Pivot rows below c are already reduced, so subtracting them only
    // introduces free columns and never disturbs another hit.
    for (Column p : hits) {
      auto it = std::lower_bound(row.begin(), row.end(), p,
                                 [](const Entry& e, Column col) { return e.col < col; });
      const Rational scale = -it->value;
      add_scaled(row, scale, *pivots_[p]);
    }
  }
  reduced_ = true;
}

SparseVector Echelon::reduce(SparseVector v) const {
  std::vector<Column> hits;
  for (const auto& e : v) {
    if (pivots_[e.col]) hits.push_back(e.col);
  }
  for (Column p : hits) {
    auto it = std::lower_bound(v.begin(), v.end(), p,
                               [](const Entry& e, Column col) { return e.col < col; });
    if (it == v.end() || it->col != p) continue;
    const Rational scale = -it->value;
    add_scaled(v, scale, *pivots_[p]);
  }
  return v;
}

std::vector<Column> Echelon::free_columns() const {
  std::vector<Column> out;
  for (Column c = 0; c < pivots_.size(); ++c) {
    if (!pivots_[c]) out.push_back(c);
  }
  return out;
}

std::vector<SparseVector> Echelon::kernel_basis() const {
  std::vector<Column> free = free_columns();
  std::vector<std::size_t> slot(pivots_.size(), 0);
  std::vector<SparseVector> out(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    slot[free[i]] = i;
    out[i].push_back({free[i], Rational(1)});
  }
  for (Column p = 0; p < pivots_.size(); ++p) {
    if (!pivots_[p]) continue;
    const SparseVector& row = *pivots_[p];
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      out[slot[row[i].col]].push_back({p, -row[i].value});
    }
  }
  for (auto& v : out) canonicalize(v);
  return out;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t columns) {
  Echelon e(columns);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace linalg
}  // namespace ncox
