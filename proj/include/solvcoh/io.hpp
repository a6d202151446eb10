#ifndef SOLVCOH_IO_HPP
#define SOLVCOH_IO_HPP

#include "solvcoh/lie_algebra.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace solvcoh {

class ParseError : public SolvcohError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : SolvcohError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_, col_;
};

namespace detail {

class AlgebraLexer {
 public:
  explicit AlgebraLexer(const std::string& text) : s_(text) {}

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) advance();
    if (b == pos_) fail("expected identifier");
    return s_.substr(b, pos_ - b);
  }
  std::size_t index() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    if (b == pos_) fail("expected basis index");
    return std::stoul(s_.substr(b, pos_ - b));
  }
  Rational rational() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) advance();
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
    if (digits == pos_) fail("expected rational literal");
    if (pos_ < s_.size() && s_[pos_] == '/') {
      advance();
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
      if (d == pos_) fail("expected denominator");
    }
    std::string lit = s_.substr(b, pos_ - b);
    if (!lit.empty() && lit[0] == '+') lit = lit.substr(1);
    try {
      return parse_rational(lit);
    } catch (const SolvcohError& e) {
      fail(e.what());
    }
    return Rational(0);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
  std::pair<std::size_t, std::size_t> where() {
    skip();
    return {line_, col_};
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace detail

/// Parses the bracket-table grammar: `dim N;`, `[i,j] = q*k + ...;`, `param NAME = q;`, `#` comments.
inline LieAlgebra parse_algebra(const std::string& text) {
  detail::AlgebraLexer lx(text);
  if (lx.at_end()) lx.fail("empty input, expected 'dim N;'");
  if (lx.word() != "dim") lx.fail("input must start with 'dim N;'");
  auto [dl, dc] = lx.where();
  std::size_t n = lx.index();
  if (n == 0 || n > kMaxLieDim) throw ParseError("dimension must be in 1..16", dl, dc);
  lx.expect(';');
  LieAlgebra g(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (!lx.at_end()) {
    if (lx.peek() == '[') {
      auto [l0, c0] = lx.where();
      lx.expect('[');
      std::size_t i = lx.index();
      lx.expect(',');
      std::size_t j = lx.index();
      lx.expect(']');
      if (i < 1 || i > n || j < 1 || j > n) throw ParseError("basis index out of range 1.." + std::to_string(n), l0, c0);
      if (i >= j) throw ParseError("bracket indices must satisfy i < j", l0, c0);
      if (!seen.insert({i, j}).second) throw ParseError("duplicate bracket [" + std::to_string(i) + "," + std::to_string(j) + "]", l0, c0);
      lx.expect('=');
      bool first = true;
      while (true) {
        Rational sign = 1;
        if (!first) {
          if (lx.accept('+')) sign = 1;
          else if (lx.accept('-')) sign = -1;
          else break;
        }
        first = false;
        Rational q = sign * lx.rational();
        lx.expect('*');
        auto [lk, ck] = lx.where();
        std::size_t k = lx.index();
        if (k < 1 || k > n) throw ParseError("basis index out of range 1.." + std::to_string(n), lk, ck);
        g.add_bracket_term(i - 1, j - 1, k - 1, q);
      }
      lx.expect(';');
    } else {
      std::string kw = lx.word();
      if (kw != "param") lx.fail("unknown statement '" + kw + "'");
      std::string name = lx.word();
      lx.expect('=');
      g.parameters[name] = lx.rational();
      lx.expect(';');
    }
  }
  auto rep = validate(g);
  if (!rep.valid) {
    std::string t;
    if (rep.triple) t = " at (" + std::to_string((*rep.triple)[0]) + "," + std::to_string((*rep.triple)[1]) + "," + std::to_string((*rep.triple)[2]) + ")";
    throw SolvcohError(rep.message + t);
  }
  return g;
}

/// Inverse of parse_algebra.
inline std::string print_algebra(const LieAlgebra& g) {
  std::ostringstream os;
  if (!g.name.empty()) os << "# " << g.name << "\n";
  os << "dim " << g.dim() << ";\n";
  for (const auto& [k, v] : g.parameters) os << "param " << k << " = " << v.get_str() << ";\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (g.bracket_is_zero(i, j)) continue;
      os << "[" << i + 1 << "," << j + 1 << "] =";
      bool first = true;
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& q = g.structure_constant(i, j, k);
        if (is_zero(q)) continue;
        if (first) os << " " << q.get_str();
        else os << (sgn(q) < 0 ? " - " : " + ") << abs_value(q).get_str();
        os << "*" << k + 1;
        first = false;
      }
      os << ";\n";
    }
  return os.str();
}

}  // namespace solvcoh

#endif
