#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "ncox/serialize.hpp"

namespace ncox::testing {

struct CorpusEntry {
  std::string name;
  coxmat::GenCoxeterMatrix matrix;
  io::json expect;
};

inline std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& f : std::filesystem::directory_iterator(std::filesystem::path(NCOX_DATA_DIR) / "corpus")) {
    if (f.path().extension() != ".json") continue;
    const auto j = io::read_json_file(f.path());
    out.push_back({j.at("name").get<std::string>(), io::matrix_from_json(j), j.at("expect")});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace ncox::testing
