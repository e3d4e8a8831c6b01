#include "ringdec/parser.hpp"

#include <cctype>
#include <vector>

#include "ringdec/error.hpp"

namespace ringdec::parser {

using surface::Term;
using surface::TermKind;
using surface::TermPtr;

namespace {

enum class Tok : std::uint8_t {
  Int, Ident,
  Plus, Minus, Star, Slash,
  Caret, CaretPlus, InvOp,     // ^  ^+  ^-1
  StarPlus, StarTilde,         // *+  *~
  EmbedNat, EmbedInt,          // %:R  %:~R
  SuccOp,                      // .+1
  LParen, RParen, Colon, Eq, LBracket, RBracket,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // Ident
  BigInt value;      // Int
};

const char* tok_desc(Tok t) {
  switch (t) {
    case Tok::Int: return "an integer literal";
    case Tok::Ident: return "an identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::CaretPlus: return "'^+'";
    case Tok::InvOp: return "'^-1'";
    case Tok::StarPlus: return "'*+'";
    case Tok::StarTilde: return "'*~'";
    case Tok::EmbedNat: return "'%:R'";
    case Tok::EmbedInt: return "'%:~R'";
    case Tok::SuccOp: return "'.+1'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Eq: return "'='";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](const char* lit) {
    return s.compare(i, std::char_traits<char>::length(lit), lit) == 0;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { ++i; continue; }
    if (c == '#') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, pos, "", BigInt(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                              s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, pos, s.substr(i, j - i), 0});
      i = j;
      continue;
    }
    if (starts("%:~R")) { out.push_back({Tok::EmbedInt, pos, "", 0}); i += 4; continue; }
    if (starts("%:R")) { out.push_back({Tok::EmbedNat, pos, "", 0}); i += 3; continue; }
    if (starts(".+1")) { out.push_back({Tok::SuccOp, pos, "", 0}); i += 3; continue; }
    if (starts("^-1")) { out.push_back({Tok::InvOp, pos, "", 0}); i += 3; continue; }
    if (starts("^+")) { out.push_back({Tok::CaretPlus, pos, "", 0}); i += 2; continue; }
    if (starts("*+")) { out.push_back({Tok::StarPlus, pos, "", 0}); i += 2; continue; }
    if (starts("*~")) { out.push_back({Tok::StarTilde, pos, "", 0}); i += 2; continue; }
    switch (c) {
      case '^': out.push_back({Tok::Caret, pos, "", 0}); ++i; continue;
      case '+': out.push_back({Tok::Plus, pos, "", 0}); ++i; continue;
      case '-': out.push_back({Tok::Minus, pos, "", 0}); ++i; continue;
      case '*': out.push_back({Tok::Star, pos, "", 0}); ++i; continue;
      case '/': out.push_back({Tok::Slash, pos, "", 0}); ++i; continue;
      case '(': out.push_back({Tok::LParen, pos, "", 0}); ++i; continue;
      case ')': out.push_back({Tok::RParen, pos, "", 0}); ++i; continue;
      case ':': out.push_back({Tok::Colon, pos, "", 0}); ++i; continue;
      case '=': out.push_back({Tok::Eq, pos, "", 0}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, pos, "", 0}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, pos, "", 0}); ++i; continue;
      default:
        throw SyntaxError(pos, "a token (got '" + std::string(1, c) + "')");
    }
  }
  out.push_back({Tok::End, s.size(), "", 0});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const carriers::Registry& reg)
      : reg_(reg), toks_(lex(text)) {}

  surface::Goal goal() {
    surface::Goal g;
    g.lhs = expr(0);
    expect(Tok::Eq);
    g.rhs = expr(0);
    std::optional<carriers::CarrierId> carrier;
    if (peek().kind == Tok::Colon) {
      next();
      Token name = expect(Tok::Ident);
      carrier = reg_.find_carrier(name.text);
      if (!carrier) throw Error(ErrorCode::UnknownCarrier, "'" + name.text + "'");
    }
    expect(Tok::LBracket);
    Token mode_tok = expect(Tok::Ident);
    auto mode = surface::mode_from_name(mode_tok.text);
    if (!mode) throw SyntaxError(mode_tok.pos, "'zmodule', 'ring' or 'field'");
    expect(Tok::RBracket);
    expect(Tok::End);
    if (!carrier) {
      // inferable only from a root-level hom application
      const Term* root = g.lhs.get();
      if (root->kind == TermKind::HomApp && root->hom) carrier = root->hom->cod;
    }
    if (!carrier)
      throw Error(ErrorCode::UnknownCarrier, "goal needs a carrier ascription ': <carrier>'");
    g.carrier = *carrier;
    g.mode = *mode;
    return g;
  }

  TermPtr term_only() {
    TermPtr t = expr(0);
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }
  Token expect(Tok kind) {
    if (peek().kind != kind) throw SyntaxError(peek().pos, tok_desc(kind));
    return next();
  }

  // binding powers: additive 20, multiplicative 30, unary minus operand 35,
  // postfix 90; so "- x * y" is "(- x) * y" and "- x ^+ 2" is "- (x ^+ 2)"
  TermPtr expr(int min_bp) {
    TermPtr lhs = prefix();
    for (;;) {
      const Token& t = peek();
      switch (t.kind) {
        case Tok::EmbedNat:
        case Tok::EmbedInt:
        case Tok::InvOp:
        case Tok::SuccOp: {
          if (90 < min_bp) return lhs;
          Token op = next();
          TermKind k = op.kind == Tok::EmbedNat ? TermKind::EmbedNat
                       : op.kind == Tok::EmbedInt ? TermKind::EmbedInt
                       : op.kind == Tok::InvOp ? TermKind::Inv
                                               : TermKind::Succ;
          lhs = surface::make_unary(k, std::move(lhs), op.pos);
          continue;
        }
        case Tok::CaretPlus:
        case Tok::Caret: {
          if (90 < min_bp) return lhs;
          Token op = next();
          bool nat_power = op.kind == Tok::CaretPlus;
          BigInt e = exponent_literal(nat_power);
          auto node = surface::make_unary(nat_power ? TermKind::PowNat : TermKind::PowInt,
                                          std::move(lhs), op.pos);
          node->lit = std::move(e);
          lhs = std::move(node);
          continue;
        }
        case Tok::Star:
        case Tok::Slash: {
          if (30 <= min_bp) return lhs;
          Token op = next();
          TermPtr rhs = expr(30);
          lhs = surface::make_binary(op.kind == Tok::Star ? TermKind::Mul : TermKind::Div,
                                     std::move(lhs), std::move(rhs), op.pos);
          continue;
        }
        case Tok::StarPlus:
        case Tok::StarTilde: {
          if (30 <= min_bp) return lhs;
          Token op = next();
          TermPtr rhs = scalar_operand();
          lhs = surface::make_binary(
              op.kind == Tok::StarPlus ? TermKind::MulNat : TermKind::MulInt, std::move(lhs),
              std::move(rhs), op.pos);
          continue;
        }
        case Tok::Plus:
        case Tok::Minus: {
          if (20 <= min_bp) return lhs;
          Token op = next();
          TermPtr rhs = expr(20);
          lhs = surface::make_binary(op.kind == Tok::Plus ? TermKind::Add : TermKind::Sub,
                                     std::move(lhs), std::move(rhs), op.pos);
          continue;
        }
        default:
          return lhs;
      }
    }
  }

  TermPtr prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus: {
        Token op = next();
        return surface::make_unary(TermKind::Neg, expr(35), op.pos);
      }
      case Tok::Int: {
        Token lit = next();
        return surface::make_lit(lit.value, lit.pos);
      }
      case Tok::Ident: {
        Token id = next();
        if (peek().kind == Tok::LParen) {
          next();
          TermPtr arg = expr(0);
          expect(Tok::RParen);
          if (id.text == "Posz" || id.text == "Negz") {
            return surface::make_unary(id.text == "Posz" ? TermKind::Posz : TermKind::Negz,
                                       std::move(arg), id.pos);
          }
          const carriers::Hom* hom = reg_.find_hom(id.text);
          if (!hom) throw Error(ErrorCode::UnknownHom, "'" + id.text + "'");
          auto node = surface::make_unary(TermKind::HomApp, std::move(arg), id.pos);
          node->name = id.text;
          node->hom = hom;
          return node;
        }
        // `Posz 6` application without parentheses
        if ((id.text == "Posz" || id.text == "Negz") && peek().kind == Tok::Int) {
          Token lit = next();
          return surface::make_unary(id.text == "Posz" ? TermKind::Posz : TermKind::Negz,
                                     surface::make_lit(lit.value, lit.pos), id.pos);
        }
        return surface::make_ident(id.text, id.pos);
      }
      case Tok::LParen: {
        next();
        TermPtr inner = expr(0);
        if (peek().kind == Tok::Colon) {
          next();
          Token name = expect(Tok::Ident);
          if (!reg_.find_carrier(name.text))
            throw Error(ErrorCode::UnknownCarrier, "'" + name.text + "'");
          auto node = surface::make_unary(TermKind::Ascribe, std::move(inner), name.pos);
          node->name = name.text;
          inner = std::move(node);
        }
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw SyntaxError(t.pos, "an expression (integer, identifier, '(' or '-')");
    }
  }

  // the scaled operand of *+ / *~: a literal, an identifier, or parenthesized
  TermPtr scalar_operand() {
    const Token& t = peek();
    if (t.kind == Tok::Int || t.kind == Tok::Ident || t.kind == Tok::LParen || t.kind == Tok::Minus)
      return expr(90);
    throw SyntaxError(t.pos, "a scalar (integer, identifier or parenthesized expression)");
  }

  BigInt exponent_literal(bool nat_power) {
    bool neg = false;
    bool parens = false;
    if (peek().kind == Tok::LParen) { next(); parens = true; }
    if (peek().kind == Tok::Minus) { next(); neg = true; }
    Token lit = expect(Tok::Int);
    if (parens) expect(Tok::RParen);
    if (neg && nat_power) throw SyntaxError(lit.pos, "a nonnegative exponent after '^+'");
    BigInt e = lit.value;
    return neg ? BigInt(-e) : e;
  }

  const carriers::Registry& reg_;
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

surface::Goal parse_goal(const std::string& text, const carriers::Registry& reg) {
  return Parser(text, reg).goal();
}

surface::TermPtr parse_term(const std::string& text, const carriers::Registry& reg) {
  return Parser(text, reg).term_only();
}

}  // namespace ringdec::parser
