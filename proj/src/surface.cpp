#include "ringdec/surface.hpp"

namespace ringdec::surface {

TermPtr make_term(TermKind kind, std::size_t pos) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->pos = pos;
  return t;
}

TermPtr make_lit(BigInt v, std::size_t pos) {
  auto t = make_term(TermKind::Lit, pos);
  t->lit = std::move(v);
  return t;
}

TermPtr make_ident(std::string name, std::size_t pos) {
  auto t = make_term(TermKind::Ident, pos);
  t->name = std::move(name);
  return t;
}

TermPtr make_unary(TermKind kind, TermPtr a, std::size_t pos) {
  auto t = make_term(kind, pos);
  t->a = std::move(a);
  return t;
}

TermPtr make_binary(TermKind kind, TermPtr a, TermPtr b, std::size_t pos) {
  auto t = make_term(kind, pos);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

bool term_equal(const Term& a, const Term& b) {
  const Term* x = &a;
  const Term* y = &b;
  while (x->kind == TermKind::Ascribe) x = x->a.get();
  while (y->kind == TermKind::Ascribe) y = y->a.get();
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TermKind::Lit: return x->lit == y->lit;
    case TermKind::Ident: return x->name == y->name;
    case TermKind::PowNat:
    case TermKind::PowInt:
      return x->lit == y->lit && term_equal(*x->a, *y->a);
    case TermKind::HomApp:
      return x->name == y->name && term_equal(*x->a, *y->a);
    default:
      if (static_cast<bool>(x->a) != static_cast<bool>(y->a)) return false;
      if (static_cast<bool>(x->b) != static_cast<bool>(y->b)) return false;
      if (x->a && !term_equal(*x->a, *y->a)) return false;
      if (x->b && !term_equal(*x->b, *y->b)) return false;
      return true;
  }
}

namespace {

// precedence for rendering: 0 additive, 1 multiplicative, 2 prefix, 3 postfix
std::string render(const Term& t, int ctx) {
  auto wrap = [&](int prec, std::string s) {
    if (prec < ctx) return "(" + std::move(s) + ")";
    return s;
  };
  switch (t.kind) {
    case TermKind::Lit: return t.lit >= 0 ? t.lit.str() : wrap(2, t.lit.str());
    case TermKind::Ident: return t.name;
    case TermKind::Add: return wrap(0, render(*t.a, 0) + " + " + render(*t.b, 1));
    case TermKind::Sub: return wrap(0, render(*t.a, 0) + " - " + render(*t.b, 1));
    case TermKind::Mul: return wrap(1, render(*t.a, 1) + " * " + render(*t.b, 2));
    case TermKind::Div: return wrap(1, render(*t.a, 1) + " / " + render(*t.b, 2));
    case TermKind::Neg: return wrap(2, "- " + render(*t.a, 2));
    case TermKind::Inv: return render(*t.a, 3) + "^-1";
    case TermKind::PowNat: return render(*t.a, 3) + " ^+ " + t.lit.str();
    case TermKind::PowInt: {
      std::string e = t.lit < 0 ? "(" + t.lit.str() + ")" : t.lit.str();
      return render(*t.a, 3) + " ^ " + e;
    }
    case TermKind::MulNat: return wrap(1, render(*t.a, 1) + " *+ " + render(*t.b, 3));
    case TermKind::MulInt: return wrap(1, render(*t.a, 1) + " *~ " + render(*t.b, 3));
    case TermKind::EmbedNat: return render(*t.a, 3) + "%:R";
    case TermKind::EmbedInt: return render(*t.a, 3) + "%:~R";
    case TermKind::Succ: return render(*t.a, 3) + ".+1";
    case TermKind::Posz: return "Posz(" + render(*t.a, 0) + ")";
    case TermKind::Negz: return "Negz(" + render(*t.a, 0) + ")";
    case TermKind::HomApp: return t.name + "(" + render(*t.a, 0) + ")";
    case TermKind::Ascribe: return render(*t.a, ctx);
  }
  return "?";
}

}  // namespace

std::string term_to_string(const Term& t) { return render(t, 0); }

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::zmodule: return "zmodule";
    case Mode::ring: return "ring";
    case Mode::field: return "field";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "zmodule") return Mode::zmodule;
  if (s == "ring") return Mode::ring;
  if (s == "field") return Mode::field;
  return std::nullopt;
}

}  // namespace ringdec::surface
