#include "ncox/symgrp.hpp"

#include <algorithm>
#include <numeric>

#include "ncox/error.hpp"

namespace ncox::symgrp {

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_line(std::vector<int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : one_line) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::InvalidPermutation, "not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(one_line));
}

Permutation Permutation::simple_reflection(int n, int i) {
  if (i < 1 || i >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "s_" + std::to_string(i) + " in S_" + std::to_string(n));
  }
  Permutation s = identity(n);
  std::swap(s.one_line_[static_cast<std::size_t>(i - 1)], s.one_line_[static_cast<std::size_t>(i)]);
  return s;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (rank() != v.rank()) {
    throw Error(ErrorCode::ParamsMismatch, "composing S_" + std::to_string(rank()) + " with S_" +
                                               std::to_string(v.rank()));
  }
  std::vector<int> out(one_line_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = one_line_[static_cast<std::size_t>(v.one_line_[i] - 1)];
  }
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(one_line_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (one_line_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::embedded(int n) const {
  if (n < rank()) throw Error(ErrorCode::InvalidParams, "cannot embed into a smaller group");
  std::vector<int> out = one_line_;
  for (int i = rank() + 1; i <= n; ++i) out.push_back(i);
  return Permutation(std::move(out));
}

Permutation Permutation::restricted() const {
  if (!fixes_last()) throw Error(ErrorCode::InvariantViolation, "permutation moves n");
  return Permutation(std::vector<int>(one_line_.begin(), one_line_.end() - 1));
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(one_line_[i]);
  }
  return s + ")";
}

int length(const Permutation& w) {
  int inv = 0;
  const auto v = w.one_line();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++inv;
    }
  }
  return inv;
}

Permutation longest_element(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation::from_one_line(std::move(v));
}

Permutation descending_product(int n, int from, int to) {
  Permutation p = Permutation::identity(n);
  for (int j = from; j >= to; --j) p = p * Permutation::simple_reflection(n, j);
  return p;
}

std::optional<ParabolicDecomposition> parabolic_decompose(const Permutation& w) {
  const int n = w.rank();
  if (n < 2 || w.fixes_last()) return std::nullopt;
  // The coset factor c = s_{n-1} ... s_{m'} sends m' to n, so w(m') = n.
  const auto one_line = w.one_line();
  const int m_prime =
      static_cast<int>(std::find(one_line.begin(), one_line.end(), n) - one_line.begin()) + 1;
  const Permutation tail = descending_product(n, n - 1, m_prime);
  const Permutation w_prime = w * tail.inverse();
  if (!w_prime.fixes_last() || length(w) != length(w_prime) + (n - m_prime) ||
      w_prime * tail != w) {
    throw Error(ErrorCode::InvariantViolation, "parabolic decomposition failed for " + w.to_string());
  }
  return ParabolicDecomposition{w_prime.restricted(), m_prime};
}

std::optional<Permutation> nil_multiply(const Permutation& u, const Permutation& v) {
  Permutation uv = u * v;
  if (length(uv) != length(u) + length(v)) return std::nullopt;
  return uv;
}

std::optional<Permutation> nil_left_multiply(int i, const Permutation& w) {
  const int n = w.rank();
  if (i < 1 || i >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "T_" + std::to_string(i) + " on S_" + std::to_string(n));
  }
  // l(s_i w) > l(w) iff i appears before i+1 in one-line notation.
  const auto v = w.one_line();
  const auto pos_i = std::find(v.begin(), v.end(), i);
  const auto pos_next = std::find(v.begin(), v.end(), i + 1);
  if (pos_i > pos_next) return std::nullopt;
  return Permutation::simple_reflection(n, i) * w;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<std::vector<int>> tails;
  Permutation cur = w;
  while (cur.rank() >= 2) {
    if (auto dec = parabolic_decompose(cur)) {
      std::vector<int> tail;
      for (int j = cur.rank() - 1; j >= dec->m_prime; --j) tail.push_back(j);
      tails.push_back(std::move(tail));
      cur = dec->w_prime;
    } else {
      cur = cur.restricted();
    }
  }
  std::vector<int> word;
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) {
    word.insert(word.end(), it->begin(), it->end());
  }
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::optional<Permutation> fold_word(int n, std::span<const int> word) {
  Permutation cur = Permutation::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = nil_left_multiply(*it, cur);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

}  // namespace ncox::symgrp
