// First reflection phase: heterogeneous syntax carrying carrier tags and
// homomorphism nodes, pushdown of homomorphisms to leaves via a composable
// accumulator, and lowering of derived operators onto polynomial syntax.
#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "ringdec/carriers.hpp"
#include "ringdec/horner.hpp"
#include "ringdec/surface.hpp"
#include "ringdec/zmod.hpp"

namespace ringdec::prep {

struct MorphExpr;
struct NatExpr;
struct RingExpr;
struct ZmodExpr;
using MorphExprPtr = std::shared_ptr<const MorphExpr>;
using NatExprPtr = std::shared_ptr<const NatExpr>;
using RingExprPtr = std::shared_ptr<const RingExpr>;
using ZmodExprPtr = std::shared_ptr<const ZmodExpr>;

// One step of an accumulated homomorphism: a declared hom, or one of the two
// canonical embeddings (1 *~ _ and 1 *+ _ into a target carrier).
struct ChainStep {
  enum class K : std::uint8_t { hom, int_embed, nat_embed } k = K::hom;
  std::shared_ptr<const carriers::Hom> hom;
  carriers::CarrierId target;  // embed target

  bool operator==(const ChainStep& o) const;
  std::string sig() const;
};

// Composable accumulator, outermost step first. Composition appends on the
// inner side, so no application is ever left pending in a tree.
struct HomChain {
  carriers::CarrierId cod;  // target carrier of the whole chain
  std::vector<ChainStep> steps;

  static HomChain identity(carriers::CarrierId c) { return {c, {}}; }
  static HomChain int_embed(carriers::CarrierId target);
  static HomChain nat_embed(carriers::CarrierId target);
  HomChain then_hom(std::shared_ptr<const carriers::Hom> h) const;
  bool all_rmorphism() const;
  Value apply(const carriers::Registry& reg, const Value& raw) const;
  bool operator==(const HomChain& o) const { return steps == o.steps && cod == o.cod; }
  std::string sig() const;
  std::string display(const std::string& raw) const;  // e.g. f(n%:~R)
};

// What an atom's raw payload refers to; enough to evaluate or display it.
using RawRef = std::variant<std::monostate, surface::TermPtr, NatExprPtr, RingExprPtr,
                            ZmodExprPtr, MorphExprPtr>;

// Variable-map key: the accumulated homomorphism applied to a raw subterm,
// compared structurally (by signature).
struct AtomKey {
  HomChain chain;
  std::string raw_render;
  surface::Ctx raw_ctx;
  RawRef raw;

  bool same_key(const AtomKey& o) const {
    return chain == o.chain && raw_render == o.raw_render && raw_ctx == o.raw_ctx;
  }
  std::string display() const { return chain.display(raw_render); }
};

// Open-ended variable map: first occurrence of a key receives the next free
// index, structurally equal keys share it.
class AtomTable {
 public:
  std::size_t intern(AtomKey key);
  std::size_t size() const { return entries_.size(); }
  const AtomKey& at(std::size_t i) const { return entries_[i]; }
  std::vector<std::string> displays() const;

 private:
  std::vector<AtomKey> entries_;
};

// --- zmodule-mode heterogeneous tree -----------------------------------

enum class MKind : std::uint8_t { Atom, Zero, Neg, Add, Sub, Morph };

struct MorphExpr {
  MKind kind;
  carriers::CarrierId carrier;
  MorphExprPtr a, b;
  std::shared_ptr<const carriers::Hom> hom;  // Morph: child is over hom->dom
  AtomKey atom;                              // Atom
};

MorphExprPtr m_atom(carriers::CarrierId c, AtomKey key);
MorphExprPtr m_zero(carriers::CarrierId c);
MorphExprPtr m_neg(MorphExprPtr e);
MorphExprPtr m_add(MorphExprPtr a, MorphExprPtr b);
MorphExprPtr m_sub(MorphExprPtr a, MorphExprPtr b);
MorphExprPtr m_morph(std::shared_ptr<const carriers::Hom> h, MorphExprPtr e);

// --- nat-typed subexpressions ------------------------------------------

enum class NKind : std::uint8_t { Const, Atom, Add, Succ, Mul, Pow };

struct NatExpr {
  NKind kind;
  BigInt value;  // Const, Pow exponent
  AtomKey atom;
  NatExprPtr a, b;
};

NatExprPtr n_const(BigInt v);
NatExprPtr n_atom(AtomKey key);
NatExprPtr n_add(NatExprPtr a, NatExprPtr b);
NatExprPtr n_succ(NatExprPtr a);
NatExprPtr n_mul(NatExprPtr a, NatExprPtr b);
NatExprPtr n_pow(NatExprPtr a, BigInt e);

// --- ring/field heterogeneous tree --------------------------------------

enum class RKind : std::uint8_t {
  Atom, Zero, One, Neg, Add,
  Sub,        // binary-integer subtraction; integers-semantics carriers only
  MulNat,     // e *+ <nat>
  MulInt,     // e *~ <int ring expr>
  Mul,
  PowNat,     // e ^+ k
  PowPos,     // e ^ k, k >= 0 (unit rings)
  PowNeg,     // e ^ -(n+1) (fields); stores n
  IntPow,     // binary-integer power; negative exponents collapse to zero
  Inv,
  Morph,      // rmorphism node
  MorphAdd,   // additive hom over a Z-module subtree
  FromNat,    // nat embedded into the integer carrier
  FromNatNeg, // n |-> -(n+1)
  IntConst,   // integer literal over an integers-semantics carrier
};

struct RingExpr {
  RKind kind;
  carriers::CarrierId carrier;
  RingExprPtr a, b;
  NatExprPtr nat;
  BigInt k;  // exponents, IntConst value
  std::shared_ptr<const carriers::Hom> hom;
  ZmodExprPtr zm;
  AtomKey atom;
};

RingExprPtr r_atom(carriers::CarrierId c, AtomKey key);
RingExprPtr r_zero(carriers::CarrierId c);
RingExprPtr r_one(carriers::CarrierId c);
RingExprPtr r_neg(RingExprPtr e);
RingExprPtr r_add(RingExprPtr a, RingExprPtr b);
RingExprPtr r_sub(RingExprPtr a, RingExprPtr b);
RingExprPtr r_mul(RingExprPtr a, RingExprPtr b);
RingExprPtr r_mulnat(RingExprPtr a, NatExprPtr n);
RingExprPtr r_mulint(RingExprPtr a, RingExprPtr int_arg);
RingExprPtr r_pownat(RingExprPtr a, BigInt k);
RingExprPtr r_powpos(RingExprPtr a, BigInt k);
RingExprPtr r_powneg(RingExprPtr a, BigInt n);  // exponent -(n+1)
RingExprPtr r_intpow(RingExprPtr a, BigInt k);
RingExprPtr r_inv(RingExprPtr a);
RingExprPtr r_morph(std::shared_ptr<const carriers::Hom> h, RingExprPtr e);
RingExprPtr r_morph_add(std::shared_ptr<const carriers::Hom> h, ZmodExprPtr e,
                        carriers::CarrierId cod);
RingExprPtr r_fromnat(carriers::CarrierId int_c, NatExprPtr n, bool negz);
RingExprPtr r_intconst(carriers::CarrierId int_c, BigInt k);

// --- Z-module subtrees under additive homs in ring mode ------------------

enum class ZKind : std::uint8_t { Atom, Zero, Neg, Add, MulNat, MulInt, Morph };

struct ZmodExpr {
  ZKind kind;
  carriers::CarrierId carrier;
  ZmodExprPtr a, b;
  NatExprPtr nat;
  RingExprPtr int_arg;  // MulInt: over the integer carrier
  std::shared_ptr<const carriers::Hom> hom;
  AtomKey atom;
};

ZmodExprPtr z_atom(carriers::CarrierId c, AtomKey key);
ZmodExprPtr z_zero(carriers::CarrierId c);
ZmodExprPtr z_neg(ZmodExprPtr e);
ZmodExprPtr z_add(ZmodExprPtr a, ZmodExprPtr b);
ZmodExprPtr z_mulnat(ZmodExprPtr a, NatExprPtr n);
ZmodExprPtr z_mulint(ZmodExprPtr a, RingExprPtr int_arg);
ZmodExprPtr z_morph(std::shared_ptr<const carriers::Hom> h, ZmodExprPtr e);

// --- evaluation -----------------------------------------------------------

// Supplies raw atom values; the evaluators apply each atom's chain on top.
using AtomEnv = std::function<Value(const AtomKey&)>;

Value atom_value(const carriers::Registry& reg, const AtomKey& key, const AtomEnv& env);

Value eval_morph(const carriers::Registry& reg, const MorphExpr& e, const AtomEnv& env);
BigInt eval_nat(const carriers::Registry& reg, const NatExpr& e, const AtomEnv& env);
Value eval_ring(const carriers::Registry& reg, const RingExpr& e, const AtomEnv& env);
Value eval_zmod(const carriers::Registry& reg, const ZmodExpr& e, const AtomEnv& env);

// --- homomorphism pushdown (zmodule pipeline) ----------------------------

// Value-level pushdown: homs are applied at the leaves, everything else is
// computed with the target carrier's operations.
Value push_down_value(const carriers::Registry& reg, const HomChain& acc, const MorphExpr& e,
                      const AtomEnv& env);
// Symbolic pushdown: a hom-free tree over the accumulator's target.
MorphExprPtr push_down_term(const HomChain& acc, const MorphExpr& e);

// --- lowering onto polynomial syntax --------------------------------------

zmod::ExprPtr lower_morph(const HomChain& acc, const MorphExpr& e, AtomTable& vm);

horner::ExprRef lower_nat(const NatExpr& e, carriers::CarrierId target, horner::Arena& arena,
                          AtomTable& vm);
// Ring mode: inverses and negative powers become fresh variables keyed by the
// accumulator-applied subterm. Field mode maps them onto rational syntax.
horner::ExprRef lower_ring(const HomChain& acc, const RingExpr& e, bool field_mode,
                           horner::Arena& arena, AtomTable& vm);
horner::ExprRef lower_zmod(const HomChain& acc, const ZmodExpr& e, bool field_mode,
                           horner::Arena& arena, AtomTable& vm);

// --- rendering -------------------------------------------------------------

std::string render(const MorphExpr& e);
std::string render(const NatExpr& e);
std::string render(const RingExpr& e);
std::string render(const ZmodExpr& e);

// Carrier-consistency well-formedness checks (used by fuzzers and tests).
bool well_formed(const carriers::Registry& reg, const MorphExpr& e);
bool well_formed(const carriers::Registry& reg, const RingExpr& e);

}  // namespace ringdec::prep
