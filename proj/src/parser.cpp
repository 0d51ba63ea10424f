#include "orla/parser.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace orla {

namespace {

enum class Tok {
  Ident,
  Bang,     // !
  Box,      // []
  Diamond,  // <>
  AndOp,    // &
  OrOp,     // |
  Arrow,    // ->
  Less,     // <
  LParen,
  RParen,
  Comma,
  End,
};

const char* tok_name(Tok tok) {
  switch (tok) {
    case Tok::Ident: return "identifier";
    case Tok::Bang: return "'!'";
    case Tok::Box: return "'[]'";
    case Tok::Diamond: return "'<>'";
    case Tok::AndOp: return "'&'";
    case Tok::OrOp: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Less: return "'<'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string value, std::size_t width) {
    tokens.push_back(Token{kind, std::move(value), line, column});
    column += width;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (c == '[' && next == ']') {
      push(Tok::Box, "[]", 2);
      i += 2;
      continue;
    }
    if (c == '<' && next == '>') {
      push(Tok::Diamond, "<>", 2);
      i += 2;
      continue;
    }
    if (c == '-' && next == '>') {
      push(Tok::Arrow, "->", 2);
      i += 2;
      continue;
    }
    switch (c) {
      case '!': push(Tok::Bang, "!", 1); ++i; continue;
      case '&': push(Tok::AndOp, "&", 1); ++i; continue;
      case '|': push(Tok::OrOp, "|", 1); ++i; continue;
      case '<': push(Tok::Less, "<", 1); ++i; continue;
      case '(': push(Tok::LParen, "(", 1); ++i; continue;
      case ')': push(Tok::RParen, ")", 1); ++i; continue;
      case ',': push(Tok::Comma, ",", 1); ++i; continue;
      default: break;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t start = i;
      while (i < text.size()) {
        char t = text[i];
        bool ident_char = (t >= 'a' && t <= 'z') || (t >= 'A' && t <= 'Z') ||
                          (t >= '0' && t <= '9') || t == '_' || t == '\'';
        if (!ident_char) break;
        ++i;
      }
      push(Tok::Ident, std::string(text.substr(start, i - start)), i - start);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line,
                     column);
  }
  tokens.push_back(Token{Tok::End, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Formula parse_formula() {
    Formula result = parse_implies();
    expect(Tok::End);
    return result;
  }

  GoalAtom parse_single_atom() {
    GoalAtom atom = parse_goal_atom();
    expect(Tok::End);
    return atom;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t index = pos_ + ahead;
    if (index >= tokens_.size()) index = tokens_.size() - 1;
    return tokens_[index];
  }

  const Token& advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(Tok kind) {
    if (!accept(kind)) fail({tok_name(kind)});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& tok = peek();
    std::string found =
        tok.kind == Tok::Ident ? "'" + tok.text + "'" : tok_name(tok.kind);
    std::string message = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    message += ", found " + found;
    throw ParseError(message, tok.line, tok.column, std::move(expected));
  }

  // formula := ordered ('->' formula)?
  Formula parse_implies() {
    Formula lhs = parse_ordered();
    if (accept(Tok::Arrow)) return make_implies(std::move(lhs), parse_implies());
    return lhs;
  }

  // ordered := disj ('<' disj)?      non-associative
  Formula parse_ordered() {
    Formula lhs = parse_or();
    if (!accept(Tok::Less)) return lhs;
    Formula rhs = parse_or();
    if (peek().kind == Tok::Less) {
      const Token& tok = peek();
      throw ParseError(
          "'<' is non-associative; parenthesize one side of the chain",
          tok.line, tok.column, {"'->'", "')'", "end of input"});
    }
    return make_before(std::move(lhs), std::move(rhs));
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(Tok::OrOp)) lhs = make_or(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(Tok::AndOp)) lhs = make_and(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept(Tok::Bang)) return make_not(parse_unary());
    if (accept(Tok::Box)) return make_always(parse_unary());
    if (accept(Tok::Diamond)) return make_sometime(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    if (peek().kind == Tok::Ident) {
      return make_atom(GoalAtom::simple(advance().text));
    }
    if (peek().kind == Tok::LParen) {
      // '(' ident ',' is a pair atom; anything else is a parenthesized formula.
      if (peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma) {
        return make_atom(parse_goal_atom());
      }
      advance();
      Formula inner = parse_implies();
      expect(Tok::RParen);
      return inner;
    }
    fail({"identifier", "'('", "'!'", "'[]'", "'<>'"});
  }

  GoalAtom parse_goal_atom() {
    if (peek().kind == Tok::Ident) return GoalAtom::simple(advance().text);
    expect(Tok::LParen);
    if (peek().kind != Tok::Ident) fail({"identifier"});
    std::string subject = advance().text;
    expect(Tok::Comma);
    if (peek().kind != Tok::Ident) fail({"identifier"});
    std::string object = advance().text;
    expect(Tok::RParen);
    return GoalAtom(std::move(subject), std::move(object));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Connective kind) {
  switch (kind) {
    case Connective::Atom: return 6;
    case Connective::Not:
    case Connective::Always:
    case Connective::Sometime: return 5;
    case Connective::And: return 4;
    case Connective::Or: return 3;
    case Connective::Before: return 2;
    case Connective::Implies: return 1;
  }
  return 0;
}

void render_into(const Formula& formula, std::string& out);

// Operands of the unary connectives and of '<' are wrapped unless atomic.
void render_operand(const Formula& operand, std::string& out) {
  if (!operand.is_atom()) {
    out += '(';
    render_into(operand, out);
    out += ')';
  } else {
    render_into(operand, out);
  }
}

void render_into(const Formula& formula, std::string& out) {
  switch (formula.kind()) {
    case Connective::Atom:
      out += formula.atom().str();
      return;
    case Connective::Not:
    case Connective::Always:
    case Connective::Sometime:
      out += formula.kind() == Connective::Not      ? "!"
             : formula.kind() == Connective::Always ? "[]"
                                                    : "<>";
      render_operand(formula.child(), out);
      return;
    case Connective::Before:
      render_operand(formula.left(), out);
      out += " < ";
      render_operand(formula.right(), out);
      return;
    default:
      break;
  }

  const int prec = precedence(formula.kind());
  const char* op = formula.kind() == Connective::And  ? " & "
                   : formula.kind() == Connective::Or ? " | "
                                                      : " -> ";
  // Left-associative operators keep the left side unwrapped at equal
  // precedence; '->' is right-associative, so the roles swap.
  const bool right_assoc = formula.kind() == Connective::Implies;
  const Formula& lhs = formula.left();
  const Formula& rhs = formula.right();
  const int left_min = right_assoc ? prec + 1 : prec;
  const int right_min = right_assoc ? prec : prec + 1;

  auto render_side = [&](const Formula& side, int min_prec) {
    if (precedence(side.kind()) < min_prec) {
      out += '(';
      render_into(side, out);
      out += ')';
    } else {
      render_into(side, out);
    }
  };
  render_side(lhs, left_min);
  out += op;
  render_side(rhs, right_min);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_formula(); }

GoalAtom parse_atom(std::string_view text) {
  return Parser(text).parse_single_atom();
}

std::string render(const Formula& formula) {
  std::string out;
  render_into(formula, out);
  return out;
}

}  // namespace orla
