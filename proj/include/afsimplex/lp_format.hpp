#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afsimplex/errors.hpp"
#include "afsimplex/problem.hpp"
#include "afsimplex/scalar.hpp"

// Plain-text LP format:
//
//   # comment
//   max: 3 x1 + 5 x2;
//   c1: x1 <= 4;
//   c2: 3x1 + 2x2 >= 18;
//   x1 + x2 = 1/2;
//
// Coefficients are integers, decimals or integer fractions, all kept exact.
// Every variable is nonnegative. Constraint names are optional. A sign in
// front of the right-hand side is accepted.

namespace afs {

namespace detail {

class LpLexer {
 public:
  enum class Kind { identifier, number, colon, semicolon, plus, minus, star, relation, end };

  struct Token {
    Kind kind = Kind::end;
    std::string text;
    Rational value;
    std::size_t line = 1;
    std::size_t column = 1;
  };

  explicit LpLexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      bump();
    }
    return s;
  }

  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Kind::end;
      return;
    }
    const char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        tok_.text += src_[pos_];
        bump();
      }
      tok_.kind = Kind::identifier;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      lex_number();
      return;
    }
    switch (ch) {
      case ':': tok_.kind = Kind::colon; break;
      case ';': tok_.kind = Kind::semicolon; break;
      case '+': tok_.kind = Kind::plus; break;
      case '-': tok_.kind = Kind::minus; break;
      case '*': tok_.kind = Kind::star; break;
      case '<':
      case '>':
      case '=': {
        tok_.kind = Kind::relation;
        tok_.text += ch;
        bump();
        if (pos_ < src_.size() && (src_[pos_] == '=' || src_[pos_] == '<' || src_[pos_] == '>')) {
          tok_.text += src_[pos_];
          bump();
        }
        return;
      }
      default:
        throw ParseError(line_, col_, std::string("unexpected character '") + ch + "'");
    }
    tok_.text = ch;
    bump();
  }

  void lex_number() {
    std::string whole = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      bump();
      std::string frac = digits();
      if (whole.empty() && frac.empty()) throw ParseError(tok_.line, tok_.column, "malformed number");
      BigInt num(whole.empty() ? "0" : whole);
      BigInt den = 1;
      for (char d : frac) {
        num = num * 10 + (d - '0');
        den *= 10;
      }
      tok_.value = Rational(num, den);
      tok_.text = whole + "." + frac;
    } else if (pos_ < src_.size() && src_[pos_] == '/') {
      bump();
      std::string den = digits();
      if (den.empty()) throw ParseError(line_, col_, "expected denominator after '/'");
      BigInt d(den);
      if (d == 0) throw ParseError(tok_.line, tok_.column, "zero denominator");
      tok_.value = Rational(BigInt(whole), d);
      tok_.text = whole + "/" + den;
    } else {
      tok_.value = Rational(BigInt(whole));
      tok_.text = whole;
    }
    tok_.kind = Kind::number;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token tok_;
};

class LpParser {
 public:
  using Kind = LpLexer::Kind;

  explicit LpParser(std::string_view text) : lex_(text) {}

  GeneralProblem parse() {
    GeneralProblem gp;
    parse_objective(gp);
    while (lex_.peek().kind != Kind::end) parse_constraint(gp);
    if (gp.constraints().empty()) throw EmptyProblem();
    return gp;
  }

 private:
  [[noreturn]] void fail(const LpLexer::Token& at, const std::string& what) {
    throw ParseError(at.line, at.column, what);
  }

  LpLexer::Token expect(Kind k, const char* what) {
    if (lex_.peek().kind != k) fail(lex_.peek(), std::string("expected ") + what);
    return lex_.take();
  }

  void parse_objective(GeneralProblem& gp) {
    auto head = lex_.peek();
    if (head.kind != Kind::identifier || (head.text != "max" && head.text != "min")) {
      fail(head, "expected 'max' or 'min'");
    }
    lex_.take();
    expect(Kind::colon, "':' after objective sense");
    if (lex_.peek().kind == Kind::semicolon) fail(lex_.peek(), "empty objective");
    auto terms = parse_linexpr();
    expect(Kind::semicolon, "';' after objective");
    gp.set_objective(head.text == "max" ? Sense::maximize : Sense::minimize, terms);
  }

  void parse_constraint(GeneralProblem& gp) {
    const auto start = lex_.peek();
    std::string name;
    if (start.kind == Kind::identifier) {
      auto ident = lex_.take();
      if (lex_.peek().kind == Kind::colon) {
        lex_.take();
        name = ident.text;
        pending_.reset();
      } else {
        pending_ = std::move(ident);
      }
    }
    auto terms = parse_linexpr();
    const auto rel_tok = lex_.peek();
    if (rel_tok.kind != Kind::relation) fail(rel_tok, "expected relation '<=', '>=' or '='");
    lex_.take();
    Relation rel;
    if (rel_tok.text == "<=") {
      rel = Relation::less_equal;
    } else if (rel_tok.text == ">=") {
      rel = Relation::greater_equal;
    } else if (rel_tok.text == "=") {
      rel = Relation::equal;
    } else {
      fail(rel_tok, "unknown relation '" + rel_tok.text + "'");
    }
    Rational sign = 1;
    if (lex_.peek().kind == Kind::minus || lex_.peek().kind == Kind::plus) {
      if (lex_.take().kind == Kind::minus) sign = -1;
    }
    auto rhs = expect(Kind::number, "number on the right-hand side");
    expect(Kind::semicolon, "';' after constraint");

    LinearExpr expr;
    for (const auto& [var, coef] : terms) expr[var] += coef;
    // Register variables in order of appearance before add_constraint sorts them.
    for (const auto& [var, coef] : terms) gp.add_variable(var);
    try {
      gp.add_constraint(name, expr, rel, Rational(sign * rhs.value));
    } catch (const InvalidProblem& e) {
      fail(start, e.what());
    }
  }

  std::vector<std::pair<std::string, Rational>> parse_linexpr() {
    std::vector<std::pair<std::string, Rational>> terms;
    Rational sign = 1;
    if (!pending_ && (lex_.peek().kind == Kind::minus || lex_.peek().kind == Kind::plus)) {
      if (lex_.take().kind == Kind::minus) sign = -1;
    }
    terms.push_back(parse_term(sign));
    while (lex_.peek().kind == Kind::plus || lex_.peek().kind == Kind::minus) {
      sign = lex_.take().kind == Kind::minus ? Rational(-1) : Rational(1);
      terms.push_back(parse_term(sign));
    }
    return terms;
  }

  std::pair<std::string, Rational> parse_term(const Rational& sign) {
    if (pending_) {
      auto ident = std::move(*pending_);
      pending_.reset();
      return {ident.text, sign};
    }
    Rational coef = 1;
    if (lex_.peek().kind == Kind::number) {
      coef = lex_.take().value;
      if (lex_.peek().kind == Kind::star) lex_.take();
    }
    auto ident = expect(Kind::identifier, "variable name");
    return {ident.text, Rational(sign * coef)};
  }

  LpLexer lex_;
  std::optional<LpLexer::Token> pending_;  // identifier read while looking for a name
};

inline std::string format_coefficient(const Rational& q) {
  return q.str();
}

}  // namespace detail

inline GeneralProblem parse_lp(std::string_view text) {
  return detail::LpParser(text).parse();
}

// Writes a problem back in the text format. parse_lp(print_lp(gp)) == gp.
inline std::string print_lp(const GeneralProblem& gp) {
  std::ostringstream os;
  auto write_expr = [&](const std::vector<std::pair<std::string, Rational>>& terms) {
    bool first = true;
    for (const auto& [var, coef] : terms) {
      const bool neg = coef < 0;
      const Rational mag = neg ? Rational(-coef) : coef;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (mag != 1) os << detail::format_coefficient(mag) << " ";
      os << var;
      first = false;
    }
  };

  // Every registered variable appears in the objective, so the registry order
  // survives a round trip.
  std::vector<std::pair<std::string, Rational>> obj;
  for (const auto& v : gp.variables()) obj.emplace_back(v, gp.objective_coefficient(v));
  os << (gp.sense() == Sense::maximize ? "max" : "min") << ": ";
  write_expr(obj);
  os << ";\n";

  for (const auto& c : gp.constraints()) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& v : gp.variables()) {
      auto it = c.expr.find(v);
      if (it != c.expr.end() && it->second != 0) terms.emplace_back(v, it->second);
    }
    if (terms.empty()) terms.emplace_back(gp.variables().front(), Rational(0));
    os << c.name << ": ";
    write_expr(terms);
    switch (c.relation) {
      case Relation::less_equal: os << " <= "; break;
      case Relation::greater_equal: os << " >= "; break;
      case Relation::equal: os << " = "; break;
    }
    os << detail::format_coefficient(c.rhs) << ";\n";
  }
  return os.str();
}

}  // namespace afs
