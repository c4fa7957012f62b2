#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ncox/error.hpp"
#include "ncox/serialize.hpp"

using namespace ncox;
using coxmat::Exponent;
using coxmat::GenCoxeterMatrix;
using io::json;

namespace {

GenCoxeterMatrix make(int size, std::vector<coxmat::OffDiagonalEntry> off, std::vector<long> diag) {
  return GenCoxeterMatrix::from_parts(size, off, diag);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("matrix round trip") {
  const auto m = make(3, {{1, 2, Exponent::infinity()}, {2, 3, Exponent(5)}},
                                              std::vector<long>{3, 2, 4});
  const auto j = io::to_json(m);
  CHECK(j.at("offdiag")[0][2] == "inf");
  const auto back = io::matrix_from_json(j);
  CHECK(back.size() == 3);
  CHECK(back.edge(1, 2).is_infinite());
  CHECK(back.edge(2, 3) == Exponent(5));
  CHECK(back.orders() == m.orders());
  CHECK(io::to_json(back) == j);
}

TEST_CASE("malformed matrices") {
  CHECK(code_of([] { io::matrix_from_json(json::parse(R"({"size": 2})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          io::matrix_from_json(json::parse(R"({"size": 2, "offdiag": [[1, 2, "big"]], "diag": [2, 2]})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          io::matrix_from_json(json::parse(R"({"size": 2, "offdiag": [[1, 2, 3]], "diag": [1, 2]})"));
        }) == ErrorCode::DiagonalOutOfRange);
  CHECK(code_of([] { io::read_json_file("/nonexistent/matrix.json"); }) == ErrorCode::IoError);
}

TEST_CASE("algebra elements round trip") {
  const auto p = nca::Params::make(2, 3);
  nca::AlgebraElement x(p);
  x.add(nca::BasisWord::extended(symgrp::Permutation::identity(2), 2, 1), Rational(3, 4));
  x.add(nca::BasisWord::short_word(symgrp::Permutation::simple_reflection(2, 1)), Rational(-5));
  CHECK(io::element_from_json(p, io::to_json(x)) == x);
  for (const auto& b : nca::canonical_basis(p)) CHECK(io::basis_word_from_json(io::to_json(b)) == b);
}

TEST_CASE("slices and classifications round trip") {
  const auto s = oracle::graded_dimensions(GenCoxeterMatrix::type_a(std::vector<long>{2, 3}));
  const auto back = io::slices_from_json(io::to_json(s, true));
  CHECK(back.dims == s.dims);
  CHECK(back.normal_forms == s.normal_forms);
  CHECK(back.status == s.status);
  CHECK(back.total == s.total);

  for (const auto& diag : std::vector<std::vector<long>>{{2, 3}, {2, 2, 2}, {3, 3}, {2, 3, 2}}) {
    const auto c = classify::decide(GenCoxeterMatrix::type_a(diag));
    const auto j = io::to_json(c);
    const auto r = io::classification_from_json(j);
    CHECK(r.index() == c.index());
    CHECK(io::to_json(r) == j);
  }
}

TEST_CASE("certificates replay the stored arrows") {
  const auto m = GenCoxeterMatrix::type_a(std::vector<long>{2, 3, 2});
  const auto c = std::get<classify::Infinite>(classify::decide(m));
  const auto mod = classify::build_witness(m, c.witness);
  const auto cert = io::certificate(m, mod);
  auto [m2, mod2] = io::certificate_from_json(cert);
  CHECK(mod2.basis == mod.basis);
  CHECK(mod2.action == mod.action);
  CHECK(mod2.witness == mod.witness);
  CHECK(classify::verify_witness(m2, mod2).passed());

  const auto path = std::filesystem::temp_directory_path() / "ncox_cert_test.json";
  io::write_json_file(path, cert);
  CHECK(io::read_json_file(path) == cert);
  std::filesystem::remove(path);

  // Tamper with one arrow target: replay must fail.
  auto tampered = cert;
  for (auto& a : tampered.at("arrows")) {
    if (a.at(0) == 2 && !a.at(2).is_string()) {
      a[2] = a.at(1);
      break;
    }
  }
  auto [m3, mod3] = io::certificate_from_json(tampered);
  CHECK_FALSE(classify::check_witness(m3, mod3).passed());

  auto broken = cert;
  broken["arrows"].push_back({9, 0, 1});
  CHECK(code_of([&] { io::certificate_from_json(broken); }) == ErrorCode::ParseError);
}

TEST_CASE("fnv1a") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
