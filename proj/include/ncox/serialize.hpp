#pragma once

// JSON schemas shared by the CLI, the cache and certificate files.
//
//   matrix          {"size": n, "offdiag": [[i, j, m | "inf"], ...], "diag": [d_1, ...]}
//   basis word      {"w": [one-line], "k": k, "m": m}   (k, m omitted for T_w)
//   element         [[basis word, num, den], ...]       (num, den as strings)
//   slices          {"status", "dims", "total", "degree_reached", "normal_forms"?}
//   witness case    {"figure", "chain", "gamma", "delta"?, "killed", "inner"}
//   classification  {"verdict", ...}
//   certificate     {"matrix", "witness", "truncation", "generator", "vectors", "arrows"}

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "ncox/classify.hpp"
#include "ncox/coxmat.hpp"
#include "ncox/nca.hpp"
#include "ncox/oracle.hpp"

namespace ncox::io {

using nlohmann::json;

json to_json(const coxmat::GenCoxeterMatrix& m);
// Throws ParseError for malformed JSON and the validation errors of
// GenCoxeterMatrix::from_parts for bad entries.
coxmat::GenCoxeterMatrix matrix_from_json(const json& j);
// Throws IoError when the file cannot be read.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
coxmat::GenCoxeterMatrix load_matrix(const std::filesystem::path& path);

json to_json(const nca::BasisWord& b);
nca::BasisWord basis_word_from_json(const json& j);
json to_json(const nca::AlgebraElement& x);
nca::AlgebraElement element_from_json(const nca::Params& p, const json& j);

json to_json(const oracle::GradedSlices& s, bool with_normal_forms);
oracle::GradedSlices slices_from_json(const json& j);

json to_json(const classify::WitnessCase& c);
classify::WitnessCase witness_case_from_json(const json& j);
json to_json(const classify::Classification& c);
classify::Classification classification_from_json(const json& j);

json certificate(const coxmat::GenCoxeterMatrix& m, const classify::TruncatedModule& mod);
// Rebuilds the module exactly as stored, without consulting the figure
// tables, so a replay checks the recorded arrows.
std::pair<coxmat::GenCoxeterMatrix, classify::TruncatedModule> certificate_from_json(
    const json& j);
json to_json(const classify::WitnessReport& r);

// FNV-1a over the given text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace ncox::io
