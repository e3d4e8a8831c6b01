// Surface expression language: parse trees over the operator inventory,
// elaboration contexts, and structural term equality (the variable-map key).
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ringdec/bigint.hpp"
#include "ringdec/carriers.hpp"

namespace ringdec::surface {

enum class TermKind : std::uint8_t {
  Lit,       // integer literal
  Ident,     // named atom
  Add, Sub, Mul, Div,
  Neg,       // unary minus
  Inv,       // x^-1
  PowNat,    // x ^+ k, k >= 0
  PowInt,    // x ^ k, k signed
  MulNat,    // x *+ <nat>
  MulInt,    // x *~ <int>
  EmbedNat,  // <nat>%:R
  EmbedInt,  // <int>%:~R
  Succ,      // <nat>.+1
  Posz,      // nat -> int embedding
  Negz,      // n |-> -(n+1)
  HomApp,    // f(e)
  Ascribe,   // (e : C); dropped during elaboration
};

// Context a subterm is elaborated in: a registry carrier or the naturals.
struct Ctx {
  enum class Tag : std::uint8_t { carrier, nat } tag = Tag::carrier;
  carriers::CarrierId c;

  static Ctx in_carrier(carriers::CarrierId id) { return {Tag::carrier, id}; }
  static Ctx in_nat() { return {Tag::nat, {}}; }
  bool is_nat() const { return tag == Tag::nat; }
  bool operator==(const Ctx&) const = default;
};

struct Term;
using TermPtr = std::shared_ptr<Term>;

struct Term {
  TermKind kind;
  BigInt lit;              // Lit value, PowNat/PowInt exponent
  std::string name;        // Ident, HomApp, Ascribe carrier name
  TermPtr a, b;
  std::size_t pos = 0;     // byte offset in the source text

  // filled by elaboration
  Ctx ctx;
  std::optional<carriers::InstancePath> inst;  // operator instance annotation
  const carriers::Hom* hom = nullptr;          // HomApp target
};

TermPtr make_term(TermKind kind, std::size_t pos = 0);
TermPtr make_lit(BigInt v, std::size_t pos = 0);
TermPtr make_ident(std::string name, std::size_t pos = 0);
TermPtr make_unary(TermKind kind, TermPtr a, std::size_t pos = 0);
TermPtr make_binary(TermKind kind, TermPtr a, TermPtr b, std::size_t pos = 0);

// Structural equality; spans and elaboration annotations are ignored,
// ascriptions are transparent.
bool term_equal(const Term& a, const Term& b);

std::string term_to_string(const Term& t);

enum class Mode : std::uint8_t { zmodule, ring, field };
const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

struct Goal {
  TermPtr lhs, rhs;
  carriers::CarrierId carrier;
  Mode mode = Mode::ring;
};

}  // namespace ringdec::surface
