// Command-line front end: evaluate closed diagrams, run the relation battery,
// print anti-diagonal homology tables, and dump operator matrices.
//
// Exit codes: 0 success, 1 parse error, 2 validation error,
//             3 internal mismatch / relation failure, 4 dimension cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtangle/dsl.hpp"
#include "qtangle/ktheory.hpp"
#include "qtangle/relations.hpp"
#include "qtangle/skein.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitCapExceeded = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// {"invariant": {"2":1, "0":1, "-2":1}} with exponents descending.
std::string to_json(const qtangle::LaurentPoly& p) {
  std::ostringstream out;
  out << "{\"invariant\": {";
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << it->first << "\":" << it->second.str();
  }
  out << "}}";
  return out.str();
}

int run_eval(const std::string& path, int m, bool json, bool check_resolution) {
  qtangle::TangleWord word;
  try {
    word = qtangle::parse_dsl(read_input(path), m);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  qtangle::LaurentPoly value;
  try {
    qtangle::validate(word);
    if (!qtangle::is_closed(word)) {
      std::cerr << "validation error: diagram is not closed\n";
      return kExitValidation;
    }
    value = qtangle::evaluate_closed(word);
  } catch (const qtangle::DiagramError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  if (json)
    std::cout << to_json(value) << "\n";
  else
    std::cout << value.str() << "\n";
  if (check_resolution) {
    qtangle::LaurentPoly resolved = qtangle::skein::evaluate_by_resolution(word);
    std::cout << "resolution: " << resolved.str() << "\n";
    if (resolved == value) {
      std::cout << "EQUAL\n";
    } else {
      std::cout << "DIFFER\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int run_test_relations(int m, int max_n, long matrix_cap, bool flip_cap_sign) {
  qtangle::relations::BatterySettings settings;
  settings.m = m;
  settings.max_n = max_n;
  settings.matrix_cap = matrix_cap;
  settings.engine.flip_cap_sign = flip_cap_sign;
  auto results = qtangle::relations::run_battery(settings);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
              << r.instances << " instances)";
    if (!r.pass) std::cout << " first failure: " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitMismatch;
}

int run_poincare(const std::string& path, int m) {
  qtangle::TangleWord word;
  try {
    word = qtangle::parse_dsl(read_input(path), m);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    qtangle::validate(word);
    if (!qtangle::is_closed(word)) {
      std::cerr << "validation error: diagram is not closed\n";
      return kExitValidation;
    }
    if (!qtangle::is_crossingless(word)) {
      std::cerr << "validation error: diagram has crossings\n";
      return kExitValidation;
    }
    for (const auto& [i, dim] : qtangle::poincare_table(word))
      std::cout << i << " " << dim << "\n";
  } catch (const qtangle::DiagramError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int run_matrix(const std::string& path, int m, const std::string& bottom_spec,
               long matrix_cap) {
  qtangle::TangleWord word;
  try {
    word = qtangle::parse_dsl(read_input(path), m);
    if (!bottom_spec.empty()) {
      std::istringstream in(bottom_spec);
      std::string tok;
      while (std::getline(in, tok, ',')) word.bottom.labels.push_back(std::stoi(tok));
    }
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  try {
    auto mtx = qtangle::operator_matrix(word.gens, word.bottom, matrix_cap);
    std::cout << mtx.dump();
  } catch (const qtangle::DimensionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const qtangle::DiagramError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum tangle invariant engine"};
  app.require_subcommand(1);

  int m = 0;
  std::string path;
  bool json = false;
  bool check_resolution = false;
  int max_n = 3;
  long matrix_cap = qtangle::kDefaultMatrixCap;
  bool flip_cap_sign = false;
  std::string bottom_spec;

  auto* eval = app.add_subcommand("eval", "evaluate a closed diagram");
  eval->add_option("file", path, "DSL file ('-' for stdin)")->required();
  eval->add_option("--m", m, "rank parameter (required if the file has no m= header)");
  eval->add_flag("--json", json, "emit JSON");
  eval->add_flag("--check-resolution", check_resolution,
                 "also evaluate by skein resolution and compare");

  auto* rel = app.add_subcommand("test-relations", "run the relation battery");
  rel->add_option("--m", m, "rank parameter")->required();
  rel->add_option("--max-n", max_n, "maximum strand count");
  rel->add_option("--matrix-cap", matrix_cap, "matrix entry cap");
  rel->add_flag("--flip-cap-sign", flip_cap_sign,
                "debug: negate cap coefficients (negative control)");

  auto* poi = app.add_subcommand("poincare", "anti-diagonal homology table");
  poi->add_option("file", path, "DSL file ('-' for stdin)")->required();
  poi->add_option("--m", m, "rank parameter");

  auto* mtx = app.add_subcommand("matrix", "dump the operator matrix of a word");
  mtx->add_option("file", path, "DSL file of generators ('-' for stdin)")->required();
  mtx->add_option("--m", m, "rank parameter");
  mtx->add_option("--bottom", bottom_spec, "comma-separated bottom labels");
  mtx->add_option("--matrix-cap", matrix_cap, "matrix entry cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(path, m, json, check_resolution);
    if (app.got_subcommand(rel)) return run_test_relations(m, max_n, matrix_cap, flip_cap_sign);
    if (app.got_subcommand(poi)) return run_poincare(path, m);
    if (app.got_subcommand(mtx)) return run_matrix(path, m, bottom_spec, matrix_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
