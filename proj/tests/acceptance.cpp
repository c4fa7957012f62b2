// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "ncox/classify.hpp"
#include "ncox/error.hpp"
#include "ncox/nca.hpp"
#include "ncox/oracle.hpp"

using namespace ncox;
using nca::AlgebraElement;
using nca::BasisWord;
using nca::Params;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

template <typename F>
void for_grid(F&& f) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) f(Params::make(n, d));
  }
}

std::string tag(const Params& p) { return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + ")"; }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

coxmat::GenCoxeterMatrix matrix_of(const Params& p) {
  std::vector<long> diag(static_cast<std::size_t>(p.n), 2);
  diag.back() = p.d;
  return coxmat::GenCoxeterMatrix::type_a(diag);
}

AlgebraElement gen(const Params& p, int i) {
  return AlgebraElement::word(p, *nca::reduce_word(p, std::vector<int>{i}));
}

linalg::SparseVector coords(const nca::RegularRepresentation& rep, const AlgebraElement& x) {
  linalg::SparseVector v;
  for (const auto& [b, c] : x.terms()) v.push_back({static_cast<linalg::Column>(rep.index_of(b)), c});
  linalg::canonicalize(v);
  return v;
}

bool same_span(const nca::RegularRepresentation& rep, const std::vector<AlgebraElement>& a,
               const std::vector<AlgebraElement>& b) {
  std::vector<linalg::SparseVector> va;
  for (const auto& x : a) va.push_back(coords(rep, x));
  auto both = va;
  for (const auto& x : b) both.push_back(coords(rep, x));
  const auto r = linalg::rank_of(va, rep.dimension());
  return r == a.size() && r == b.size() && linalg::rank_of(both, rep.dimension()) == r;
}

void dimension_theorem(Outcome& out) {
  for_grid([&](const Params& p) {
    const auto expected = factorial(p.n) * static_cast<std::uint64_t>(1 + p.n * (p.d - 1));
    const auto s = oracle::graded_dimensions(matrix_of(p));
    if (s.status != oracle::Status::Finite || s.total != expected || p.dimension() != expected) {
      out.fail(tag(p) + " oracle total " + std::to_string(s.total));
    }
  });
  out.detail << "oracle totals match n!(1+n(d-1)) on 12 parameter pairs";
}

void regular_representation(Outcome& out) {
  for_grid([&](const Params& p) {
    const auto basis = nca::canonical_basis(p);
    auto act = [&](const std::vector<int>& word, const BasisWord& b) -> std::optional<BasisWord> {
      std::optional<BasisWord> v = b;
      for (auto it = word.rbegin(); it != word.rend() && v; ++it) v = nca::act_generator(p, *it, *v);
      return v;
    };
    for (const auto& b : basis) {
      for (int i = 1; i <= p.n; ++i) {
        const std::vector<int> power(static_cast<std::size_t>(i == p.n ? p.d : 2), i);
        if (act(power, b)) out.fail(tag(p) + " power relation fails at " + b.to_string());
        for (int j = i + 1; j <= p.n; ++j) {
          const std::vector<int> lhs = j == i + 1 ? std::vector<int>{i, j, i} : std::vector<int>{i, j};
          const std::vector<int> rhs = j == i + 1 ? std::vector<int>{j, i, j} : std::vector<int>{j, i};
          if (act(lhs, b) != act(rhs, b)) out.fail(tag(p) + " braid relation fails at " + b.to_string());
        }
      }
    }
    std::set<BasisWord> seen{basis.front()};
    std::vector<BasisWord> frontier{basis.front()};
    while (!frontier.empty()) {
      const auto b = frontier.back();
      frontier.pop_back();
      for (int i = 1; i <= p.n; ++i) {
        if (auto v = nca::act_generator(p, i, b); v && seen.insert(*v).second) frontier.push_back(*v);
      }
    }
    if (seen.size() != basis.size()) out.fail(tag(p) + " not cyclic from the identity");
  });
  out.detail << "power and braid relations hold on every basis vector; cyclic from 1";
}

void cross_engine(Outcome& out) {
  std::mt19937 rng(7);
  std::size_t nonzero = 0;
  for_grid([&](const Params& p) {
    const oracle::GradedQuotient q(matrix_of(p), {});
    const int top = static_cast<int>(q.slices().dims.size());
    std::uniform_int_distribution<int> letter(1, p.n);
    std::uniform_int_distribution<int> len(0, top);
    for (int t = 0; t < 1000; ++t) {
      std::vector<int> w(static_cast<std::size_t>(len(rng)));
      // Alternate uniform words with words biased toward survivors.
      if (t % 2 == 0) {
        for (auto& x : w) x = letter(rng);
      } else {
        std::optional<BasisWord> cur = BasisWord::short_word(symgrp::Permutation::identity(p.n));
        std::vector<int> built;
        for (std::size_t k = 0; k < w.size(); ++k) {
          const int x = letter(rng);
          if (auto next = nca::act_generator(p, x, *cur); next || k + 1 == w.size()) {
            built.insert(built.begin(), x);
            if (!next) break;
            cur = next;
          }
        }
        w = built;
      }
      AlgebraElement prod = AlgebraElement::one(p);
      for (int x : w) prod = nca::multiply(prod, gen(p, x));
      const auto direct = q.reduce(w);
      if (prod.is_zero() != direct.is_zero()) {
        out.fail(tag(p) + " zero mismatch");
        continue;
      }
      if (prod.is_zero()) continue;
      ++nonzero;
      if (prod.terms().size() != 1 || prod.terms().begin()->second != 1) {
        out.fail(tag(p) + " product is not a basis word");
        continue;
      }
      const auto via_nca = q.reduce(nca::generator_word(prod.terms().begin()->first));
      bool same = via_nca.degree == direct.degree && via_nca.terms.size() == direct.terms.size();
      for (std::size_t i = 0; same && i < direct.terms.size(); ++i) {
        same = via_nca.terms[i].index == direct.terms[i].index && via_nca.terms[i].coeff == direct.terms[i].coeff;
      }
      if (!same) out.fail(tag(p) + " normal forms differ");
    }
  });
  out.detail << "12000 random words agree (" << nonzero << " nonzero)";
}

void longest_and_nilpotency(Outcome& out) {
  for_grid([&](const Params& p) {
    const int l = p.n * (p.n - 1) / 2 + p.d + p.n - 2;
    const auto w0 = symgrp::longest_element(p.n);
    const auto top = BasisWord::extended(w0, p.d - 1, 1);
    std::vector<BasisWord> at_top;
    int max_degree = 0;
    for (const auto& b : nca::canonical_basis(p)) {
      const int k = nca::degree(b);
      if (k > max_degree) {
        max_degree = k;
        at_top.clear();
      }
      if (k == max_degree) at_top.push_back(b);
    }
    if (max_degree != l || at_top.size() != 1 || at_top[0] != top) out.fail(tag(p) + " top degree");
    const auto lw = nca::longest_word(p);
    if (lw.length != l || lw.word != top) out.fail(tag(p) + " longest_word");
    const auto nil = nca::nilpotency_index(p);
    if (nil.index != l + 1 || nil.power_dims.size() != static_cast<std::size_t>(l + 1) ||
        nil.power_dims[static_cast<std::size_t>(l - 1)] == 0 || nil.power_dims.back() != 0) {
      out.fail(tag(p) + " nilpotency index " + std::to_string(nil.index));
    }
  });
  out.detail << "unique top word, nilpotency index 1 + l, m^l nonzero";
}

void hilbert(Outcome& out) {
  for_grid([&](const Params& p) {
    const auto h = nca::hilbert_series(p);
    const auto s = oracle::graded_dimensions(matrix_of(p));
    std::vector<std::size_t> oracle_dims(s.dims.begin(), s.dims.end() - 1);
    std::uint64_t at_one = 0;
    for (auto c : h) at_one += c;
    if (h != nca::hilbert_closed_form(p)) out.fail(tag(p) + " closed form");
    if (oracle_dims != std::vector<std::size_t>(h.begin(), h.end())) out.fail(tag(p) + " oracle slices");
    if (at_one != p.dimension()) out.fail(tag(p) + " value at q = 1");
    const auto printed = nca::hilbert_as_printed(p);
    if (p.n >= 2 && (printed.front() != 2 || printed == h)) out.fail(tag(p) + " as-printed form");
  });
  out.detail << "basis degrees = corrected closed form = oracle slices; uncorrected form has constant term 2";
}

void primitives(Outcome& out) {
  for_grid([&](const Params& p) {
    const nca::RegularRepresentation rep(p);
    const auto left = nca::primitives(p, nca::Side::Left);
    const auto right = nca::primitives(p, nca::Side::Right);
    const auto both = nca::primitives(p, nca::Side::TwoSided);
    const std::size_t left_dim = p.n == 1 ? 1 : static_cast<std::size_t>(1 + p.n * (p.d - 2));
    const std::size_t both_dim = p.n == 1 ? 1 : static_cast<std::size_t>(p.d - 1);
    if (left.size() != left_dim || right.size() != left_dim || both.size() != both_dim) {
      out.fail(tag(p) + " kernel dimensions");
      return;
    }
    const auto w0 = symgrp::longest_element(p.n);
    std::vector<AlgebraElement> left_words{AlgebraElement::word(p, BasisWord::extended(w0, 1, 1))};
    for (int k = 2; k <= p.d - 1; ++k) {
      for (int m = 1; m <= p.n; ++m) left_words.push_back(AlgebraElement::word(p, BasisWord::extended(w0, k, m)));
    }
    std::vector<AlgebraElement> both_words;
    for (int k = 1; k <= p.d - 1; ++k) both_words.push_back(AlgebraElement::word(p, BasisWord::extended(w0, k, 1)));
    if (p.n == 1) {
      left_words = {AlgebraElement::word(p, BasisWord::extended(w0, p.d - 1, 1))};
      both_words = left_words;
    }
    if (!same_span(rep, left, left_words)) out.fail(tag(p) + " left spanning set");
    if (!same_span(rep, both, both_words)) out.fail(tag(p) + " two-sided spanning set");
    std::vector<AlgebraElement> theta_left;
    for (const auto& x : left) theta_left.push_back(nca::theta(x));
    if (!same_span(rep, theta_left, right)) out.fail(tag(p) + " theta does not swap sides");
    const auto& basis = rep.basis();
    for (const auto& x : basis) {
      const auto t = nca::theta_word(p, x);
      if (!t || nca::theta_word(p, *t) != x) out.fail(tag(p) + " theta is not an involution");
      for (const auto& y : basis) {
        const auto xy = nca::multiply_words(p, x, y);
        const auto lhs = xy ? nca::theta_word(p, *xy) : std::nullopt;
        const auto rhs = nca::multiply_words(p, *nca::theta_word(p, y), *t);
        if (lhs != rhs) {
          out.fail(tag(p) + " theta is not an anti-homomorphism");
          return;
        }
      }
    }
  });
  out.detail << "kernel dimensions and spanning sets; theta swaps left and right";
}

void frobenius(Outcome& out) {
  for_grid([&](const Params& p) {
    const auto r = nca::frobenius_check(p);
    const bool expected = p.n == 1 || p.d == 2;
    if (r.frobenius != expected || r.frobenius != (r.primitive_dim == 1)) out.fail(tag(p));
  });
  out.detail << "Frobenius exactly when n = 1 or d = 2";
}

void khovanov(Outcome& out) {
  for_grid([&](const Params& p) {
    if (p.n == 1) return;
    const auto r = nca::khovanov_rank_check(p);
    const auto nf = factorial(p.n);
    const auto reps = static_cast<std::size_t>(1 + p.n * (p.d - 1));
    if (r.dimension != nf * reps || r.regular_part != nf || r.tensor_part != static_cast<std::uint64_t>(p.n) * nf ||
        r.copies != static_cast<std::uint64_t>(p.d - 1) || !r.identity_holds) {
      out.fail(tag(p) + " rank identity");
    }
    if (r.representatives != reps || r.total_rank != r.dimension || !r.free) out.fail(tag(p) + " free rank");
  });
  out.detail << "rank identity and free rank 1 + n(d-1) for 2 <= n <= 4";
}

void classification(Outcome& out) {
  const auto corpus = testing::load_corpus();
  std::size_t infinite = 0;
  for (const auto& e : corpus) {
    const auto c = classify::decide(e.matrix);
    const auto dim = classify::finite_dimension(c);
    const oracle::Bounds bounds = dim ? oracle::Bounds{16, 20000, 1} : oracle::Bounds{14, 20000, 1};
    const auto s = oracle::graded_dimensions(e.matrix, bounds);
    if (dim) {
      if (s.status != oracle::Status::Finite || mpz_class(std::to_string(s.total)) != *dim) {
        out.fail(e.name + " finite dimension disagrees with the oracle");
      }
    } else {
      if (s.status != oracle::Status::ExceedsBound) out.fail(e.name + " oracle terminated");
      const auto& w = std::get<classify::Infinite>(c).witness;
      if (to_string(w.figure) != e.expect.value("figure", std::string())) out.fail(e.name + " unexpected shape");
      try {
        const auto mod = classify::build_witness(e.matrix, w, 5);
        if (!classify::verify_witness(e.matrix, mod).passed()) out.fail(e.name + " witness");
      } catch (const Error& err) {
        out.fail(e.name + " " + err.what());
      }
      ++infinite;
    }
    if (e.expect.at("verdict").get<std::string>() != (dim ? (std::holds_alternative<classify::FiniteUsual>(c)
                                                                  ? "FiniteUsual"
                                                                  : "FiniteTypeAEnd")
                                                            : "Infinite")) {
      out.fail(e.name + " unexpected verdict");
    }
  }
  if (corpus.size() < 20) out.fail("corpus too small");
  out.detail << corpus.size() << " matrices, " << infinite << " verified witnesses";
}

void coxeter_criterion(Outcome& out) {
  for (long n = 1; n <= 8; ++n) {
    for (long d = 2; d <= 8; ++d) {
      const bool exact = Rational(1, n) + Rational(1, d) > Rational(1, 2);
      if (coxmat::coxeter_group_finite(n, d) != exact) out.fail("(" + std::to_string(n) + "," + std::to_string(d) + ")");
      if (exact && n >= 2 && !coxmat::coxeter_group_order_as_printed(n, d).discrepancy_flagged) {
        out.fail("order formula not flagged");
      }
    }
  }
  if (coxmat::coxeter_group_finite(3, 6)) out.fail("(3,6)");
  out.detail << "agrees with 1/n + 1/d > 1/2 on 56 pairs, (3,6) false";
}

void braid_identity(Outcome& out) {
  for (int n = 2; n <= 4; ++n) {
    if (!oracle::braid_monoid_identity_check(n).holds) out.fail("n = " + std::to_string(n));
  }
  out.detail << "holds for n = 2, 3, 4";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"dimension formula", dimension_theorem},
      {"regular representation", regular_representation},
      {"cross-engine agreement", cross_engine},
      {"longest word and nilpotency", longest_and_nilpotency},
      {"Hilbert series", hilbert},
      {"primitives", primitives},
      {"Frobenius criterion", frobenius},
      {"bimodule rank identity", khovanov},
      {"classification", classification},
      {"Coxeter finiteness", coxeter_criterion},
      {"braid monoid identity", braid_identity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.ok;
    std::printf("%s %2zu %-28s %6.2fs  %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                out.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
