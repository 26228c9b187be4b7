#pragma once

// Small recursive-descent parser shared by every textual element syntax.
//
//   expr    := [+|-] term (('+'|'-') term)*
//   term    := factor (('*' | '/' | juxtaposition) factor)*
//   factor  := ('-'|'+') factor | power
//   power   := primary ['^' ['-'] INT]
//   primary := INT | IDENT | IDENT '[' ... ']' | '(' expr ')'
//
// The ring-specific parts (atoms, arithmetic) come from a Traits object.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oak/errors.hpp"
#include "oak/scalar.hpp"

namespace oak::detail {

struct Token {
  enum class Kind { Number, Ident, Op, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      if (i < s.size() && s[i] == '[') {
        const auto close = s.find(']', i);
        if (close == std::string_view::npos)
          throw ParseError("unterminated '['", std::string(s.substr(start)), start);
        i = close + 1;
      }
      out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::Op, std::string(1, c), start});
    } else {
      throw ParseError("unexpected character", std::string(1, c), start);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

template <class Ring, class Traits>
class ExprParser {
 public:
  ExprParser(std::string_view text, Traits& traits) : tokens_(tokenize(text)), traits_(traits) {}

  Ring parse() {
    Ring r = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected token");
    return r;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool peek_op(char c) const { return peek().kind == Token::Kind::Op && peek().text[0] == c; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().kind == Token::Kind::End ? "<end>" : peek().text, peek().pos);
  }

  Ring expr() {
    Ring acc = traits_.from_scalar(Scalar(0));
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek_op('+') || peek_op('-')) {
        negate = peek_op('-');
        ++pos_;
      } else if (!first) {
        break;
      }
      Ring t = term();
      acc = negate ? traits_.sub(acc, t) : traits_.add(acc, t);
      first = false;
    }
    return acc;
  }

  bool starts_primary() const {
    return peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident || peek_op('(');
  }

  Ring term() {
    Ring acc = factor();
    while (true) {
      if (peek_op('*')) {
        ++pos_;
        acc = traits_.mul(acc, factor());
      } else if (peek_op('/')) {
        const Token op = peek();
        ++pos_;
        acc = traits_.div(acc, factor(), op);
      } else if (traits_.juxtaposition && starts_primary()) {
        acc = traits_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Ring factor() {
    if (peek_op('-')) {
      ++pos_;
      return traits_.mul(traits_.from_scalar(Scalar(-1)), factor());
    }
    if (peek_op('+')) {
      ++pos_;
      return factor();
    }
    return power();
  }

  Ring power() {
    Ring base = primary();
    if (!peek_op('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek_op('-')) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Token::Kind::Number) fail("expected integer exponent");
    const Token tok = peek();
    ++pos_;
    long e = 0;
    try {
      e = std::stol(tok.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", tok.text, tok.pos);
    }
    return traits_.pow(base, negative ? -e : e, tok);
  }

  Ring primary() {
    const Token tok = peek();
    switch (tok.kind) {
      case Token::Kind::Number:
        ++pos_;
        return traits_.from_scalar(Scalar(Rational(tok.text)));
      case Token::Kind::Ident:
        ++pos_;
        return traits_.atom(tok);
      case Token::Kind::Op:
        if (tok.text == "(") {
          ++pos_;
          Ring inner = expr();
          if (!peek_op(')')) fail("expected ')'");
          ++pos_;
          return inner;
        }
        break;
      case Token::Kind::End:
        break;
    }
    fail("expected a value");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Traits& traits_;
};

}  // namespace oak::detail
