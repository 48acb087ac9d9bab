#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qtangle {

using Coeff = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1].  Stored as a sparse exponent -> coefficient map
/// with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
  LaurentPoly() = default;

  LaurentPoly(long constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  LaurentPoly(const Coeff& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static LaurentPoly monomial(int exponent, Coeff coefficient = 1) {
    LaurentPoly p;
    if (coefficient != 0) p.coeffs_[exponent] = std::move(coefficient);
    return p;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1); }

  /// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0]_q = 0.
  static LaurentPoly quantum_int(int n) {
    if (n < 0) throw std::invalid_argument("quantum_int: n must be >= 0");
    LaurentPoly p;
    for (int e = n - 1; e >= 1 - n; e -= 2) p.coeffs_[e] = 1;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  const std::map<int, Coeff>& coeffs() const { return coeffs_; }

  Coeff coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Coeff(0) : it->second;
  }

  /// Sum of all coefficients (the specialization q = 1).
  Coeff eval_q1() const {
    Coeff s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  /// Substitute q -> q^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  /// Substitute q -> sign * q^stretch (sign in {+1,-1}, stretch != 0).
  LaurentPoly substitute_monomial(int sign, int stretch) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (stretch == 0) throw std::invalid_argument("stretch must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) {
      Coeff v = c;
      if (sign == -1 && (((e % 2) + 2) % 2) == 1) v = -v;
      r.coeffs_[e * stretch] = v;
    }
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiply by the monomial c * q^e in place.
  LaurentPoly& shift(int e, const Coeff& c = 1) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    std::map<int, Coeff> out;
    for (auto& [ex, co] : coeffs_) out[ex + e] = co * c;
    coeffs_ = std::move(out);
    return *this;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ < b.coeffs_;
  }

  /// Rendering with exponents descending: "q^2 - 2 + q^-2", "3*q", "0".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const int e = it->first;
      Coeff c = it->second;
      if (first) {
        if (c < 0) {
          out << "-";
          c = -c;
        }
        first = false;
      } else if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
      if (e == 0) {
        out << c.str();
      } else {
        if (c != 1) out << c.str() << "*";
        out << "q";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

  /// Parses the grammar emitted by str(); also accepts implicit "*" as in "3q^2".
  /// Throws std::invalid_argument with a character position on bad input.
  static LaurentPoly parse(const std::string& text) {
    LaurentPoly result;
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("polynomial parse error at position " +
                                  std::to_string(pos) + ": " + why);
    };
    skip_ws();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (pos < text.size()) {
      int sign = 1;
      skip_ws();
      if (!first || text[pos] == '+' || text[pos] == '-') {
        if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
          fail("expected '+' or '-'");
        if (text[pos] == '-') sign = -1;
        ++pos;
        skip_ws();
      }
      first = false;
      Coeff coefficient = 1;
      bool saw_number = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        coefficient = Coeff(text.substr(start, pos - start));
        saw_number = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        }
      }
      int exponent = 0;
      if (pos < text.size() && text[pos] == 'q') {
        ++pos;
        exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          size_t start = pos;
          if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            fail("expected exponent after '^'");
          exponent = std::stoi(text.substr(start, pos - start));
        }
      } else if (!saw_number) {
        fail("expected coefficient or 'q'");
      }
      if (sign == -1) coefficient = -coefficient;
      result.add_term(exponent, coefficient);
      skip_ws();
    }
    return result;
  }

private:
  void add_term(int e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, Coeff> coeffs_;
};

inline LaurentPoly quantum_int(int n) { return LaurentPoly::quantum_int(n); }

inline LaurentPoly q_power(int e) { return LaurentPoly::monomial(e); }

}  // namespace qtangle
