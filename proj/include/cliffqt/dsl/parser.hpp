#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cliffqt/dsl/ast.hpp"

namespace cliffqt::dsl {

namespace detail {

// Recursive descent over the program grammar:
//   program := (decl ';')* expr
//   decl    := 'let' IDENT (':' typeset)?
//   sum     := prod (('+'|'-') prod)*
//   prod    := unary ('*' unary)*
//   unary   := rational '*'? unary | 'i' '*'? unary | '-' unary | atom
//   atom    := IDENT | '(' sum ')' | '[' sum ',' sum ']' | '{' sum ',' sum '}'
//            | ('rev'|'gri'|'conj'|'phc') '(' sum ')'
class ProgramParser {
 public:
  ProgramParser(std::string_view text, Field field) : text_(text), field_(field) {}

  Program parse() {
    Program program{TypeEnv(field_), nullptr};
    skip_ws();
    while (peek_word() == "let") {
      declaration(program.env);
      skip_ws();
    }
    program.expr = sum();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return program;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  SourcePos here() const { return {line_, column_}; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, here()); }
  [[noreturn]] static void fail_at(const std::string& msg, SourcePos at) {
    throw ParseError(msg, at.line, at.column);
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view peek_word() const {
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end]))
      while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string identifier() {
    skip_ws();
    if (!ident_start(peek())) fail("expected an identifier");
    std::string out;
    while (!at_end() && ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  static bool reserved(std::string_view w) {
    return w == "let" || w == "i" || w == "rev" || w == "gri" || w == "conj" || w == "phc";
  }

  void declaration(TypeEnv& env) {
    for (int k = 0; k < 3; ++k) advance();  // "let"
    skip_ws();
    const SourcePos at = here();
    const std::string name = identifier();
    if (reserved(name)) fail_at("'" + name + "' is reserved", at);
    TypeSet t = TypeSet::full(field_);
    skip_ws();
    if (peek() == ':') {
      advance();
      skip_ws();
      const SourcePos type_at = here();
      std::string raw;
      while (!at_end() && peek() != ';' && !std::isspace(static_cast<unsigned char>(peek()))) {
        raw += peek();
        advance();
      }
      try {
        t = TypeSet::parse(raw);
      } catch (const ParseError& e) {
        fail_at(e.message(), type_at);
      }
      if (field_ == Field::Real && t.has_imaginary())
        fail_at("imaginary type atoms are complex-only", type_at);
    }
    expect(';');
    if (env.declared(name)) fail_at("symbol '" + name + "' declared twice", at);
    env.declare(name, t);
  }

  void require_complex(const std::string& what, SourcePos at) const {
    if (field_ != Field::Complex) fail_at(what + " is complex-only; not allowed in real mode", at);
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      skip_ws();
      const SourcePos at = here();
      if (peek() == '+') {
        advance();
        lhs = add(lhs, product(), at);
      } else if (peek() == '-') {
        advance();
        const SourcePos neg_at = here();
        lhs = add(lhs, neg(product(), neg_at), at);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return lhs;
      const SourcePos at = here();
      advance();
      lhs = prod(lhs, unary(), at);
    }
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  ExprPtr unary() {
    skip_ws();
    const SourcePos at = here();
    if (peek() == '-') {
      advance();
      return neg(unary(), at);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string token = digits();
      if (peek() == '.') {
        advance();
        token += '.' + digits();
      } else {
        skip_ws();
        if (peek() == '/') {
          advance();
          skip_ws();
          token += '/' + digits();
        }
      }
      Rational r;
      if (!parse_rational(token, r)) fail_at("malformed rational '" + token + "'", at);
      skip_ws();
      if (peek() == '*') advance();
      return scalar_mul(r, unary(), at);
    }
    if (peek_word() == "i") {
      advance();
      require_complex("multiplication by i", at);
      skip_ws();
      if (peek() == '*') advance();
      return imul(unary(), at);
    }
    return atom();
  }

  ExprPtr atom() {
    skip_ws();
    const SourcePos at = here();
    const char c = peek();
    if (c == '(') {
      advance();
      ExprPtr inner = sum();
      expect(')');
      return inner;
    }
    if (c == '[' || c == '{') {
      advance();
      ExprPtr a = sum();
      expect(',');
      ExprPtr b = sum();
      expect(c == '[' ? ']' : '}');
      return c == '[' ? comm(a, b, at) : anticomm(a, b, at);
    }
    if (!ident_start(c)) {
      if (at_end()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    const std::string word = identifier();
    skip_ws();
    if (peek() == '(') {
      Conjugation op;
      if (word == "rev") op = Conjugation::reversion();
      else if (word == "gri") op = Conjugation::grade_involution();
      else if (word == "conj") op = Conjugation::complex_conj();
      else if (word == "phc") op = Conjugation::pseudo_hermitian();
      else fail_at("unknown conjugation '" + word + "'", at);
      if (op.complex_only()) require_complex("conjugation '" + word + "'", at);
      advance();
      ExprPtr inner = sum();
      expect(')');
      return conj(op, inner, at);
    }
    if (reserved(word)) fail_at("'" + word + "' is reserved", at);
    return sym(word, at);
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

/// Parses declarations and one expression. Undeclared symbols are left
/// unconstrained (TypeEnv::lookup gives the full type set).
inline Program parse_program(std::string_view text, Field field) {
  return detail::ProgramParser(text, field).parse();
}

}  // namespace cliffqt::dsl
