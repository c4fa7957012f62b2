#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncox/classify.hpp"
#include "ncox/coxmat.hpp"
#include "ncox/error.hpp"
#include "ncox/nca.hpp"
#include "ncox/oracle.hpp"
#include "ncox/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ncox;

namespace {

struct Global {
  std::string format = "human";
  unsigned threads = 1;
  bool machine() const { return format == "machine"; }
};

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    try {
      std::size_t used = 0;
      const int g = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(g);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not a generator index: " + tok);
    }
  }
  return out;
}

std::string word_text(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w[i]);
  }
  return s;
}

std::string poly_text(const nca::Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

std::string element_text(const nca::AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [b, c] : x.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += "(" + word_text(nca::generator_word(b)) + ")";
  }
  return s;
}

void emit(const Global& g, const json& j, const std::string& human) {
  if (g.machine()) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << human;
  }
}

std::optional<fs::path> cache_dir() {
  const char* env = std::getenv("NCOX_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  std::error_code ec;
  fs::create_directories(env, ec);
  if (ec) return std::nullopt;
  return fs::path(env);
}

oracle::GradedSlices cached_slices(const coxmat::GenCoxeterMatrix& m, oracle::Bounds b,
                                   bool normal_forms) {
  const auto dir = cache_dir();
  fs::path file;
  if (dir) {
    const std::string key = io::to_json(m).dump() + "|" + std::to_string(b.max_degree) + "|" +
                            std::to_string(b.max_total) + "|" + (normal_forms ? "nf" : "dims");
    file = *dir / ("oracle-" + io::fnv1a_hex(key) + ".json");
    if (fs::exists(file)) {
      try {
        return io::slices_from_json(io::read_json_file(file));
      } catch (const Error&) {
        // Unreadable entries are recomputed and overwritten.
      }
    }
  }
  auto slices = oracle::graded_dimensions(m, b);
  if (dir) {
    try {
      io::write_json_file(file, io::to_json(slices, normal_forms));
    } catch (const std::exception&) {
    }
  }
  if (!normal_forms) slices.normal_forms.clear();
  return slices;
}

int cmd_basis(const Global& g, int n, int d) {
  const auto p = nca::Params::make(n, d);
  const auto basis = nca::canonical_basis(p);
  json words = json::array();
  std::ostringstream out;
  int top = 0;
  for (const auto& b : basis) {
    const int deg = nca::degree(b);
    top = std::max(top, deg);
    words.push_back({{"word", io::to_json(b)}, {"degree", deg}, {"generators", nca::generator_word(b)}});
    out << deg << "\t" << word_text(nca::generator_word(b)) << "\t" << b.to_string() << "\n";
  }
  out << "total " << basis.size() << ", max degree " << top << "\n";
  emit(g, {{"n", n}, {"d", d}, {"count", basis.size()}, {"max_degree", top}, {"words", words}},
       out.str());
  return 0;
}

int cmd_mul(const Global& g, int n, int d, const std::string& x, const std::string& y) {
  const auto p = nca::Params::make(n, d);
  const auto wx = parse_word(x);
  const auto wy = parse_word(y);
  const auto bx = nca::reduce_word(p, wx);
  const auto by = nca::reduce_word(p, wy);
  std::optional<nca::BasisWord> prod;
  if (bx && by) prod = nca::multiply_words(p, *bx, *by);
  json j = {{"n", n}, {"d", d}, {"x", wx}, {"y", wy}};
  if (prod) {
    j["result"] = io::to_json(*prod);
    j["generators"] = nca::generator_word(*prod);
    j["degree"] = nca::degree(*prod);
  } else {
    j["result"] = nullptr;
  }
  emit(g, j, (prod ? word_text(nca::generator_word(*prod)) : std::string("0")) + "\n");
  return 0;
}

int cmd_length(const Global& g, int n, int d, const std::string& word) {
  const auto p = nca::Params::make(n, d);
  const auto longest = nca::longest_word(p);
  json j = {{"n", n},
            {"d", d},
            {"longest", io::to_json(longest.word)},
            {"longest_generators", nca::generator_word(longest.word)},
            {"length", longest.length}};
  std::ostringstream out;
  out << "longest word " << word_text(nca::generator_word(longest.word)) << " ("
      << longest.word.to_string() << "), length " << longest.length << "\n";
  if (!word.empty()) {
    const auto w = parse_word(word);
    const auto b = nca::reduce_word(p, w);
    if (b) {
      j["word"] = {{"basis_word", io::to_json(*b)}, {"degree", nca::degree(*b)}};
      out << "word " << word_text(w) << " = " << word_text(nca::generator_word(*b))
          << ", degree " << nca::degree(*b) << "\n";
    } else {
      j["word"] = nullptr;
      out << "word " << word_text(w) << " = 0\n";
    }
  }
  emit(g, j, out.str());
  return 0;
}

int cmd_hilbert(const Global& g, int n, int d, bool as_printed) {
  const auto p = nca::Params::make(n, d);
  const auto series = nca::hilbert_series(p);
  const auto closed = nca::hilbert_closed_form(p);
  const auto printed = nca::hilbert_as_printed(p);
  json j = {{"n", n},
            {"d", d},
            {"coefficients", series},
            {"closed_form", closed},
            {"closed_form_matches", series == closed},
            {"as_printed", printed},
            {"as_printed_matches", series == printed}};
  std::ostringstream out;
  out << poly_text(series) << "\n";
  out << "closed form [n]_q! (1 + q [n]_q [d-1]_q): "
      << (series == closed ? "matches" : "DIFFERS") << "\n";
  if (as_printed || series != printed) {
    out << "form without the factor q: " << poly_text(printed) << " ("
        << (series == printed ? "matches" : "differs") << ")\n";
  }
  emit(g, j, out.str());
  return 0;
}

int cmd_primitives(const Global& g, int n, int d, const std::string& side_name) {
  const auto p = nca::Params::make(n, d);
  nca::Side side = nca::Side::Left;
  if (side_name == "right") side = nca::Side::Right;
  if (side_name == "two-sided") side = nca::Side::TwoSided;
  const auto prims = nca::primitives(p, side);
  json basis = json::array();
  std::ostringstream out;
  out << nca::to_string(side) << " primitives: dimension " << prims.size() << "\n";
  for (const auto& x : prims) {
    basis.push_back(io::to_json(x));
    out << "  " << element_text(x) << "\n";
  }
  emit(g, {{"n", n}, {"d", d}, {"side", nca::to_string(side)}, {"dimension", prims.size()},
           {"basis", basis}},
       out.str());
  return 0;
}

int cmd_nilpotency(const Global& g, int n, int d) {
  const auto rep = nca::nilpotency_index(nca::Params::make(n, d));
  std::ostringstream out;
  out << "nilpotency index " << rep.index << "\n";
  for (std::size_t i = 0; i < rep.power_dims.size(); ++i) {
    out << "  dim m^" << i + 1 << " = " << rep.power_dims[i] << "\n";
  }
  emit(g, {{"n", n}, {"d", d}, {"index", rep.index}, {"power_dims", rep.power_dims}}, out.str());
  return 0;
}

int cmd_frobenius(const Global& g, int n, int d) {
  const auto rep = nca::frobenius_check(nca::Params::make(n, d));
  std::ostringstream out;
  out << (rep.frobenius ? "true" : "false") << ", dim Prim = " << rep.primitive_dim << "\n";
  emit(g, {{"n", n}, {"d", d}, {"frobenius", rep.frobenius}, {"primitive_dim", rep.primitive_dim},
           {"criterion", rep.criterion}},
       out.str());
  return 0;
}

int cmd_khovanov(const Global& g, int n, int d) {
  const auto rep = nca::khovanov_rank_check(nca::Params::make(n, d));
  std::ostringstream out;
  out << "dimension " << rep.dimension << " = " << rep.regular_part << " + " << rep.copies
      << " * " << rep.tensor_part << ": " << (rep.identity_holds ? "holds" : "FAILS") << "\n";
  out << "free left rank " << rep.total_rank << " of " << rep.representatives
      << " generators: " << (rep.free ? "free" : "NOT free") << "\n";
  emit(g, {{"n", n}, {"d", d}, {"dimension", rep.dimension}, {"regular_part", rep.regular_part},
           {"tensor_part", rep.tensor_part}, {"copies", rep.copies},
           {"identity_holds", rep.identity_holds}, {"representatives", rep.representatives},
           {"span_ranks", rep.span_ranks}, {"total_rank", rep.total_rank}, {"free", rep.free}},
       out.str());
  return rep.identity_holds && rep.free ? 0 : 3;
}

int cmd_coxeter(const Global& g, long n, long d) {
  const bool finite = coxmat::coxeter_group_finite(n, d);
  json j = {{"n", n}, {"d", d}, {"finite", finite}};
  std::ostringstream out;
  out << "1/" << n << " + 1/" << d << " > 1/2: " << (finite ? "true" : "false") << "\n";
  if (finite) {
    const auto order = coxmat::coxeter_group_order_as_printed(n, d);
    j["order_as_printed"] = order.value.get_str();
    j["discrepancy_flagged"] = order.discrepancy_flagged;
    j["note"] = order.note;
    out << "order formula as printed: " << order.value.get_str();
    if (order.discrepancy_flagged) out << " (flagged: " << order.note << ")";
    out << "\n";
  }
  emit(g, j, out.str());
  return 0;
}

std::string report_text(const classify::WitnessReport& r) {
  std::ostringstream out;
  out << "witness " << (r.passed() ? "verified" : "FAILED") << ": " << r.checked_relations
      << " relation checks on " << r.checked_vectors << " vectors";
  if (r.inconclusive) out << " (" << r.inconclusive << " reached the sink)";
  out << ", reachable";
  for (auto x : r.reachable) out << " " << x;
  if (r.quotient_checked) out << ", quotient checked";
  out << "\n";
  for (const auto& v : r.violations) {
    out << "  " << v.relation << " on " << v.vector << ": " << v.lhs << " vs " << v.rhs << "\n";
  }
  return out.str();
}

int cmd_classify(const Global& g, const std::string& file, int truncation,
                 const std::string& cert_path) {
  const auto m = io::load_matrix(file);
  const auto c = classify::decide(m);
  json j = {{"matrix", io::to_json(m)}, {"classification", io::to_json(c)}};
  std::ostringstream out;
  out << classify::summary(c) << "\n";
  int code = 0;
  if (const auto* inf = std::get_if<classify::Infinite>(&c)) {
    if (inf->witness.figure != classify::Figure::InfiniteCoxeterGroup) {
      const auto mod = classify::build_witness(m, inf->witness, truncation);
      const auto rep = classify::check_witness(m, mod);
      const fs::path path =
          cert_path.empty() ? fs::path(fs::path(file).stem().string() + ".witness.json") : fs::path(cert_path);
      io::write_json_file(path, io::certificate(m, mod));
      j["report"] = io::to_json(rep);
      j["certificate"] = path.string();
      out << report_text(rep) << "certificate written to " << path.string() << "\n";
      if (!rep.passed()) code = 3;
    }
  }
  emit(g, j, out.str());
  return code;
}

int cmd_oracle(const Global& g, const std::string& file, int max_degree, std::size_t max_total,
               bool normal_forms) {
  const auto m = io::load_matrix(file);
  oracle::Bounds b{max_degree, max_total, g.threads};
  const auto s = cached_slices(m, b, normal_forms);
  std::ostringstream out;
  out << oracle::to_string(s.status) << ", total " << s.total << " through degree "
      << s.degree_reached << "\n";
  for (std::size_t k = 0; k < s.dims.size(); ++k) {
    out << "  degree " << k << ": " << s.dims[k];
    if (normal_forms && k < s.normal_forms.size()) {
      out << "  [";
      for (std::size_t i = 0; i < s.normal_forms[k].size(); ++i) {
        out << (i ? "; " : "") << word_text(s.normal_forms[k][i]);
      }
      out << "]";
    }
    out << "\n";
  }
  if (s.status == oracle::Status::ExceedsBound) out << "not finite-dimensional at this bound\n";
  emit(g, io::to_json(s, normal_forms), out.str());
  return 0;
}

int cmd_witness_verify(const Global& g, const std::string& file) {
  const auto [m, mod] = io::certificate_from_json(io::read_json_file(file));
  const auto rep = classify::check_witness(m, mod);
  emit(g, io::to_json(rep), report_text(rep));
  return rep.passed() ? 0 : 3;
}

int cmd_corpus(const Global& g, const std::string& dir_arg, int truncation) {
  const fs::path dir = dir_arg.empty() ? fs::path(NCOX_DATA_DIR) / "corpus" : fs::path(dir_arg);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  json rows = json::array();
  std::ostringstream out;
  int failures = 0;
  for (const auto& f : files) {
    const auto m = io::load_matrix(f);
    const auto c = classify::decide(m);
    const bool infinite = std::holds_alternative<classify::Infinite>(c);
    oracle::Bounds b;
    b.threads = g.threads;
    if (infinite) b.max_degree = 14;
    const auto s = cached_slices(m, b, false);
    bool ok = false;
    json row = {{"file", f.filename().string()},
                {"classification", io::to_json(c)},
                {"oracle", io::to_json(s, false)}};
    if (const auto dim = classify::finite_dimension(c)) {
      ok = s.status == oracle::Status::Finite && mpz_class(s.total) == *dim;
    } else {
      const auto& w = std::get<classify::Infinite>(c).witness;
      ok = s.status == oracle::Status::ExceedsBound;
      if (w.figure == classify::Figure::InfiniteCoxeterGroup) {
        ok = false;
      } else {
        const auto rep = classify::check_witness(m, classify::build_witness(m, w, truncation));
        row["witness"] = io::to_json(rep);
        ok = ok && rep.passed();
      }
    }
    row["ok"] = ok;
    if (!ok) ++failures;
    rows.push_back(row);
    out << (ok ? "ok   " : "FAIL ") << f.filename().string() << ": " << classify::summary(c)
        << " | oracle " << oracle::to_string(s.status) << " " << s.total << "\n";
  }
  out << files.size() - static_cast<std::size_t>(failures) << "/" << files.size() << " agree\n";
  emit(g, {{"results", rows}, {"failures", failures}}, out.str());
  return failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in generalized nil-Coxeter algebras"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for the oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int n = 1;
  int d = 2;
  auto params = [&](CLI::App* sub) {
    sub->add_option("-n", n, "Number of generators")->required();
    sub->add_option("-d", d, "Order of the last generator")->required();
  };
  std::string x;
  std::string y;
  std::string word;
  std::string side = "left";
  bool as_printed = false;
  std::string file;
  std::string cert;
  std::string dir;
  int truncation = classify::kDefaultTruncation;
  int max_degree = oracle::Bounds{}.max_degree;
  std::size_t max_total = oracle::Bounds{}.max_total;
  bool normal_forms = false;

  auto* basis = app.add_subcommand("basis", "List the canonical basis of NC_A(n,d)");
  params(basis);
  auto* mul = app.add_subcommand("mul", "Multiply two generator words in NC_A(n,d)");
  params(mul);
  mul->add_option("x", x, "First word, e.g. \"2 1\"")->required();
  mul->add_option("y", y, "Second word")->required();
  auto* length = app.add_subcommand("length", "Longest word and degree of a word");
  params(length);
  length->add_option("--word", word, "Word whose degree to report");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of NC_A(n,d)");
  params(hilbert);
  hilbert->add_flag("--as-printed", as_printed, "Also print the form without the factor q");
  auto* prims = app.add_subcommand("primitives", "Primitive elements of NC_A(n,d)");
  params(prims);
  prims->add_option("--side", side, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}))
      ->capture_default_str();
  auto* nil = app.add_subcommand("nilpotency", "Nilpotency index of the augmentation ideal");
  params(nil);
  auto* frob = app.add_subcommand("frobenius", "Frobenius check for NC_A(n,d)");
  params(frob);
  auto* khov = app.add_subcommand("khovanov", "Bimodule rank identity for NC_A(n,d)");
  params(khov);
  auto* cox = app.add_subcommand("coxeter", "Finiteness criterion for W(A_n) with a d-th order end");
  params(cox);
  auto* cls = app.add_subcommand("classify", "Decide finite-dimensionality of NC(M)");
  cls->add_option("matrix", file, "Matrix JSON file")->required();
  cls->add_option("-R,--truncation", truncation, "Witness truncation")->capture_default_str();
  cls->add_option("--certificate", cert, "Witness certificate output path");
  auto* orc = app.add_subcommand("oracle", "Graded dimensions of NC(M) by rewriting");
  orc->add_option("matrix", file, "Matrix JSON file")->required();
  orc->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber)->capture_default_str();
  orc->add_option("--max-total", max_total)->check(CLI::PositiveNumber)->capture_default_str();
  orc->add_flag("--normal-forms", normal_forms, "Print the normal form words");
  auto* wv = app.add_subcommand("witness-verify", "Replay a witness certificate");
  wv->add_option("certificate", file, "Certificate JSON file")->required();
  auto* corpus = app.add_subcommand("corpus", "Run the classification regression corpus");
  corpus->add_option("dir", dir, "Corpus directory");
  corpus->add_option("-R,--truncation", truncation, "Witness truncation")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*basis) return cmd_basis(g, n, d);
    if (*mul) return cmd_mul(g, n, d, x, y);
    if (*length) return cmd_length(g, n, d, word);
    if (*hilbert) return cmd_hilbert(g, n, d, as_printed);
    if (*prims) return cmd_primitives(g, n, d, side);
    if (*nil) return cmd_nilpotency(g, n, d);
    if (*frob) return cmd_frobenius(g, n, d);
    if (*khov) return cmd_khovanov(g, n, d);
    if (*cox) return cmd_coxeter(g, n, d);
    if (*cls) return cmd_classify(g, file, truncation, cert);
    if (*orc) return cmd_oracle(g, file, max_degree, max_total, normal_forms);
    if (*wv) return cmd_witness_verify(g, file);
    if (*corpus) return cmd_corpus(g, dir, truncation);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
