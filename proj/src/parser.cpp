#include "emltab/parser.hpp"

#include <cctype>
#include <vector>

namespace emltab {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, FormulaFactory& f) : text_(text), factory_(f) {}

  Formula run() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string_view ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept("<->")) f = factory_.iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept("->")) return factory_.implies(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = factory_.disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&")) f = factory_.conj(f, parse_unary());
    return f;
  }

  // Operator keyword D/C/K counts only when followed by '{'.
  bool modal_ahead(char op) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != op) return false;
    std::size_t p = pos_ + 1;
    if (p < text_.size() && ident_char(text_[p])) return false;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '{';
  }

  Coalition agents(bool single) {
    expect("{");
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '}') fail("empty coalition");
    Coalition c;
    do {
      c = c | Coalition::singleton(factory_.agent(ident()));
    } while (!single && accept(","));
    expect("}");
    return c;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return factory_.neg(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    for (char op : {'D', 'C', 'K'}) {
      if (!modal_ahead(op)) continue;
      ++pos_;
      Coalition coal = agents(op == 'K');
      Formula body = parse_unary();
      return op == 'C' ? factory_.common(coal, body) : factory_.dist(coal, body);
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    return factory_.atom(ident());
  }

  std::string_view text_;
  FormulaFactory& factory_;
  std::size_t pos_ = 0;
};

void emit(Formula f, const FormulaFactory& factory, bool wrap_and, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.atom_name();
      return;
    case Op::Not:
      out += '~';
      emit(f.body(), factory, true, out);
      return;
    case Op::Dist:
    case Op::Common:
      out += f.is(Op::Dist) ? "D{" : "C{";
      out += factory.coalition_text(f.coalition());
      out += '}';
      emit(f.body(), factory, true, out);
      return;
    case Op::And:
      if (wrap_and) out += '(';
      emit(f.lhs(), factory, false, out);
      out += " & ";
      emit(f.rhs(), factory, true, out);
      if (wrap_and) out += ')';
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, FormulaFactory& factory) { return Parser(text, factory).run(); }

std::string print(Formula f, const FormulaFactory& factory) {
  std::string out;
  emit(f, factory, false, out);
  return out;
}

}  // namespace emltab
