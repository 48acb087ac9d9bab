#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/diagram.hpp"

namespace qtangle {

/// Syntax error in the diagram DSL, annotated with a 1-based line number.
class DSLError : public std::runtime_error {
public:
  DSLError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

namespace dsl_detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

inline int parse_int(const std::string& tok, int line, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw DSLError(line, "expected " + what + ", got '" + tok + "'");
  }
}

}  // namespace dsl_detail

/// Parse the line-oriented diagram DSL:
///   m=<int>                      header (optional when default_m is given)
///   cap <i> [order=lr|rl]
///   cup <i>
///   cross <i> <1|2>
///   dumbbell <i>
///   braid k=<int> [<signed ints>]
/// Comments start with '#'.  One diagram per file; diagrams start from the
/// empty sequence.  Structural label errors surface later, from validate().
inline TangleWord parse_dsl(const std::string& text, int default_m = 0) {
  using dsl_detail::parse_int;
  TangleWord word;
  int m = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = dsl_detail::tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head.rfind("m=", 0) == 0) {
      if (m != 0) throw DSLError(lineno, "duplicate m= header");
      if (!word.gens.empty()) throw DSLError(lineno, "m= header must precede statements");
      m = parse_int(head.substr(2), lineno, "integer after m=");
      if (m < 2) throw DSLError(lineno, "m must be >= 2");
      if (default_m != 0 && default_m != m)
        throw DSLError(lineno, "file declares m=" + std::to_string(m) +
                                   " but m=" + std::to_string(default_m) +
                                   " was requested");
      continue;
    }
    if (m == 0) {
      if (default_m == 0) throw DSLError(lineno, "missing m= header");
      m = default_m;
    }
    if (head == "cap") {
      if (tokens.size() < 2 || tokens.size() > 3)
        throw DSLError(lineno, "usage: cap <i> [order=lr|rl]");
      int i = parse_int(tokens[1], lineno, "slot index");
      CapOrder order = CapOrder::LR;
      if (tokens.size() == 3) {
        if (tokens[2] == "order=lr")
          order = CapOrder::LR;
        else if (tokens[2] == "order=rl")
          order = CapOrder::RL;
        else
          throw DSLError(lineno, "bad cap order '" + tokens[2] + "'");
      }
      word.gens.push_back(Generator::cap(i, order));
    } else if (head == "cup") {
      if (tokens.size() != 2) throw DSLError(lineno, "usage: cup <i>");
      word.gens.push_back(Generator::cup(parse_int(tokens[1], lineno, "slot index")));
    } else if (head == "cross") {
      if (tokens.size() != 3) throw DSLError(lineno, "usage: cross <i> <1|2>");
      int i = parse_int(tokens[1], lineno, "slot index");
      int type = parse_int(tokens[2], lineno, "crossing type");
      if (type != 1 && type != 2) throw DSLError(lineno, "crossing type must be 1 or 2");
      word.gens.push_back(Generator::cross(i, type));
    } else if (head == "dumbbell") {
      if (tokens.size() != 2) throw DSLError(lineno, "usage: dumbbell <i>");
      word.gens.push_back(Generator::dumbbell(parse_int(tokens[1], lineno, "slot index")));
    } else if (head == "braid") {
      if (tokens.size() < 2 || tokens[1].rfind("k=", 0) != 0)
        throw DSLError(lineno, "usage: braid k=<int> [<signed ints>]");
      int k = parse_int(tokens[1].substr(2), lineno, "strand count after k=");
      // the letter list: everything after "k=<int>", e.g. "[1,-2,1]"
      std::string rest;
      for (size_t j = 2; j < tokens.size(); ++j) rest += tokens[j];
      std::vector<int> letters;
      std::string cur;
      for (char ch : rest) {
        if (ch == '[' || ch == ']' || ch == ',') {
          if (!cur.empty()) letters.push_back(parse_int(cur, lineno, "braid letter")), cur.clear();
        } else if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
          cur += ch;
        } else {
          throw DSLError(lineno, std::string("unexpected character '") + ch +
                                     "' in braid letters");
        }
      }
      if (!cur.empty()) letters.push_back(parse_int(cur, lineno, "braid letter"));
      TangleWord closure;
      try {
        closure = braid_closure(k, letters, m);
      } catch (const DiagramError& e) {
        throw DSLError(lineno, e.what());
      }
      for (const auto& g : closure.gens) word.gens.push_back(g);
    } else {
      throw DSLError(lineno, "unknown statement '" + head + "'");
    }
  }
  if (m == 0) {
    if (default_m == 0) throw DSLError(lineno == 0 ? 1 : lineno, "missing m= header");
    m = default_m;
  }
  word.bottom = StrandSeq{m, {}};
  return word;
}

/// Render a word back to the DSL; parse_dsl(render_dsl(w)) == w for words
/// with empty bottom.
inline std::string render_dsl(const TangleWord& word) {
  std::ostringstream out;
  out << "m=" << word.bottom.m << "\n";
  for (const auto& g : word.gens) {
    switch (g.kind) {
      case Generator::Kind::Cap:
        out << "cap " << g.slot
            << (g.order == CapOrder::RL ? " order=rl" : " order=lr") << "\n";
        break;
      case Generator::Kind::Cup:
        out << "cup " << g.slot << "\n";
        break;
      case Generator::Kind::Cross:
        out << "cross " << g.slot << " " << g.cross_type << "\n";
        break;
      case Generator::Kind::Dumbbell:
        out << "dumbbell " << g.slot << "\n";
        break;
    }
  }
  return out.str();
}

}  // namespace qtangle
