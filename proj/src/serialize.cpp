#include "ncox/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncox/error.hpp"

namespace ncox::io {

using coxmat::Exponent;
using coxmat::GenCoxeterMatrix;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

json big(const mpz_class& z) {
  if (z.fits_ulong_p()) return z.get_ui();
  return z.get_str();
}

mpz_class big_from(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return mpz_class(j.get<long>());
  return mpz_class(j.get<std::string>());
}

json exponent_json(const Exponent& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

}  // namespace

json to_json(const GenCoxeterMatrix& m) {
  json off = json::array();
  for (const auto& [key, e] : m.offdiag()) off.push_back({key.first, key.second, exponent_json(e)});
  return {{"size", m.size()}, {"offdiag", off}, {"diag", m.orders()}};
}

GenCoxeterMatrix matrix_from_json(const json& j) {
  const int size = guarded("matrix", [&] { return j.at("size").get<int>(); });
  std::vector<coxmat::OffDiagonalEntry> entries;
  std::vector<long> diag;
  guarded("matrix", [&] {
    for (const auto& t : j.at("offdiag")) {
      if (!t.is_array() || t.size() != 3) bad("offdiag entries are [i, j, m] triples");
      Exponent e;
      if (t[2].is_string()) {
        if (t[2].get<std::string>() != "inf") bad("off-diagonal label must be an integer or \"inf\"");
        e = Exponent::infinity();
      } else {
        e = Exponent(t[2].get<long>());
      }
      entries.push_back({t[0].get<int>(), t[1].get<int>(), e});
    }
    diag = j.at("diag").get<std::vector<long>>();
    return 0;
  });
  return GenCoxeterMatrix::from_parts(size, entries, diag);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

GenCoxeterMatrix load_matrix(const std::filesystem::path& path) {
  return matrix_from_json(read_json_file(path));
}

json to_json(const nca::BasisWord& b) {
  json j = {{"w", b.w.one_line()}};
  if (!b.is_short()) {
    j["k"] = b.k;
    j["m"] = b.m;
  }
  return j;
}

nca::BasisWord basis_word_from_json(const json& j) {
  return guarded("basis word", [&] {
    auto w = symgrp::Permutation::from_one_line(j.at("w").get<std::vector<int>>());
    if (!j.contains("k")) return nca::BasisWord::short_word(std::move(w));
    return nca::BasisWord::extended(std::move(w), j.at("k").get<int>(), j.at("m").get<int>());
  });
}

json to_json(const nca::AlgebraElement& x) {
  json out = json::array();
  for (const auto& [b, c] : x.terms()) {
    out.push_back({to_json(b), c.get_num().get_str(), c.get_den().get_str()});
  }
  return out;
}

nca::AlgebraElement element_from_json(const nca::Params& p, const json& j) {
  nca::AlgebraElement x(p);
  guarded("element", [&] {
    for (const auto& t : j) {
      Rational c{mpz_class(t.at(1).get<std::string>()), mpz_class(t.at(2).get<std::string>())};
      c.canonicalize();
      x.add(basis_word_from_json(t.at(0)), c);
    }
    return 0;
  });
  return x;
}

json to_json(const oracle::GradedSlices& s, bool with_normal_forms) {
  json j = {{"status", oracle::to_string(s.status)},
            {"dims", s.dims},
            {"total", s.total},
            {"degree_reached", s.degree_reached}};
  if (with_normal_forms) j["normal_forms"] = s.normal_forms;
  return j;
}

oracle::GradedSlices slices_from_json(const json& j) {
  return guarded("slices", [&] {
    oracle::GradedSlices s;
    const auto status = j.at("status").get<std::string>();
    if (status == "Finite") {
      s.status = oracle::Status::Finite;
    } else if (status == "ExceedsBound") {
      s.status = oracle::Status::ExceedsBound;
    } else {
      bad("unknown status " + status);
    }
    s.dims = j.at("dims").get<std::vector<std::size_t>>();
    s.total = j.at("total").get<std::size_t>();
    s.degree_reached = j.at("degree_reached").get<int>();
    if (j.contains("normal_forms")) {
      s.normal_forms = j.at("normal_forms").get<std::vector<std::vector<oracle::FreeWord>>>();
    }
    return s;
  });
}

json to_json(const classify::WitnessCase& c) {
  json j = {{"figure", classify::to_string(c.figure)},
            {"chain", c.chain},
            {"gamma", c.gamma},
            {"killed", c.killed},
            {"inner", classify::to_string(c.inner)}};
  if (c.delta) j["delta"] = *c.delta;
  return j;
}

classify::WitnessCase witness_case_from_json(const json& j) {
  return guarded("witness case", [&] {
    classify::WitnessCase c;
    c.figure = classify::figure_from_string(j.at("figure").get<std::string>());
    c.inner = classify::figure_from_string(j.value("inner", j.at("figure").get<std::string>()));
    c.chain = j.at("chain").get<std::vector<int>>();
    c.gamma = j.at("gamma").get<int>();
    if (j.contains("delta")) c.delta = j.at("delta").get<int>();
    c.killed = j.value("killed", std::vector<int>{});
    return c;
  });
}

json to_json(const classify::Classification& c) {
  if (const auto* f = std::get_if<classify::FiniteUsual>(&c)) {
    return {{"verdict", "FiniteUsual"},
            {"type", f->type.name()},
            {"family", static_cast<int>(f->type.family)},
            {"rank", f->type.rank},
            {"label", f->type.label},
            {"dimension", big(f->dimension)}};
  }
  if (const auto* f = std::get_if<classify::FiniteTypeAEnd>(&c)) {
    return {{"verdict", "FiniteTypeAEnd"}, {"n", f->n}, {"d", f->d}, {"dimension", big(f->dimension)}};
  }
  return {{"verdict", "Infinite"}, {"witness", to_json(std::get<classify::Infinite>(c).witness)}};
}

classify::Classification classification_from_json(const json& j) {
  return guarded("classification", [&]() -> classify::Classification {
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "FiniteUsual") {
      coxmat::CoxeterType t;
      t.family = static_cast<coxmat::CoxeterType::Family>(j.at("family").get<int>());
      t.rank = j.at("rank").get<int>();
      t.label = j.at("label").get<long>();
      return classify::FiniteUsual{t, big_from(j.at("dimension"))};
    }
    if (verdict == "FiniteTypeAEnd") {
      return classify::FiniteTypeAEnd{j.at("n").get<int>(), j.at("d").get<long>(),
                                      big_from(j.at("dimension"))};
    }
    if (verdict == "Infinite") return classify::Infinite{witness_case_from_json(j.at("witness"))};
    bad("unknown verdict " + verdict);
  });
}

json certificate(const GenCoxeterMatrix& m, const classify::TruncatedModule& mod) {
  json vectors = json::array();
  for (const auto& v : mod.basis) vectors.push_back({v.name, v.r});
  json arrows = json::array();
  for (std::size_t g = 0; g < mod.action.size(); ++g) {
    for (std::size_t v = 0; v < mod.basis.size(); ++v) {
      const std::size_t t = mod.action[g][v];
      if (t == classify::TruncatedModule::kZero) continue;
      json target = t == classify::TruncatedModule::kSink ? json("sink") : json(t);
      arrows.push_back({g + 1, v, target});
    }
  }
  return {{"matrix", to_json(m)},
          {"witness", to_json(mod.witness)},
          {"truncation", mod.truncation},
          {"generator", mod.generator},
          {"vectors", vectors},
          {"arrows", arrows}};
}

std::pair<GenCoxeterMatrix, classify::TruncatedModule> certificate_from_json(const json& j) {
  GenCoxeterMatrix m = matrix_from_json(guarded("certificate", [&] { return j.at("matrix"); }));
  classify::TruncatedModule mod = guarded("certificate", [&] {
    classify::TruncatedModule out;
    out.witness = witness_case_from_json(j.at("witness"));
    out.truncation = j.at("truncation").get<int>();
    out.generator = j.at("generator").get<std::size_t>();
    for (const auto& v : j.at("vectors")) {
      out.basis.push_back({v.at(0).get<std::string>(), v.at(1).get<int>()});
    }
    out.action.assign(static_cast<std::size_t>(m.size()),
                      std::vector<std::size_t>(out.basis.size(), classify::TruncatedModule::kZero));
    for (const auto& a : j.at("arrows")) {
      const int g = a.at(0).get<int>();
      const auto v = a.at(1).get<std::size_t>();
      if (g < 1 || g > m.size() || v >= out.basis.size()) bad("arrow out of range");
      out.action[static_cast<std::size_t>(g - 1)][v] =
          a.at(2).is_string() ? classify::TruncatedModule::kSink : a.at(2).get<std::size_t>();
    }
    if (out.generator >= out.basis.size()) bad("generator vector out of range");
    return out;
  });
  return {std::move(m), std::move(mod)};
}

json to_json(const classify::WitnessReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"vector", v.vector}, {"relation", v.relation}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return {{"passed", r.passed()},
          {"checked_vectors", r.checked_vectors},
          {"checked_relations", r.checked_relations},
          {"inconclusive", r.inconclusive},
          {"reachable", r.reachable},
          {"cyclic", r.cyclic},
          {"grows", r.grows},
          {"quotient_checked", r.quotient_checked},
          {"violations", violations}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ncox::io
