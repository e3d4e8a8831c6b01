#include "ringdec/prep.hpp"

namespace ringdec::prep {

using carriers::CarrierId;
using carriers::Hom;
using carriers::HomKind;
using carriers::Registry;

// ---------------------------------------------------------------------------
// chains and atoms

bool ChainStep::operator==(const ChainStep& o) const {
  if (k != o.k) return false;
  if (k == K::hom) return hom->name == o.hom->name;
  return target == o.target;
}

std::string ChainStep::sig() const {
  switch (k) {
    case K::hom: return "hom:" + hom->name;
    case K::int_embed: return "intembed:" + std::to_string(target.idx);
    case K::nat_embed: return "natembed:" + std::to_string(target.idx);
  }
  return "?";
}

HomChain HomChain::int_embed(CarrierId target) {
  return {target, {ChainStep{ChainStep::K::int_embed, nullptr, target}}};
}

HomChain HomChain::nat_embed(CarrierId target) {
  return {target, {ChainStep{ChainStep::K::nat_embed, nullptr, target}}};
}

HomChain HomChain::then_hom(std::shared_ptr<const Hom> h) const {
  HomChain out = *this;
  out.steps.push_back(ChainStep{ChainStep::K::hom, std::move(h), {}});
  return out;
}

bool HomChain::all_rmorphism() const {
  for (const ChainStep& s : steps)
    if (s.k == ChainStep::K::hom && s.hom->kind != HomKind::rmorphism) return false;
  return true;
}

Value HomChain::apply(const Registry& reg, const Value& raw) const {
  Value v = raw;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->k) {
      case ChainStep::K::hom:
        v = it->hom->apply(v);
        break;
      case ChainStep::K::int_embed:
        v = v_embed_int(reg.carrier(it->target).sem, v.as_int());
        break;
      case ChainStep::K::nat_embed:
        v = v_embed_int(reg.carrier(it->target).sem, v.as_int());
        break;
    }
  }
  return v;
}

std::string HomChain::sig() const {
  std::string s;
  for (const ChainStep& st : steps) s += st.sig() + ";";
  return s;
}

std::string HomChain::display(const std::string& raw) const {
  std::string s = raw;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->k) {
      case ChainStep::K::hom: s = it->hom->name + "(" + s + ")"; break;
      case ChainStep::K::int_embed: s += "%:~R"; break;
      case ChainStep::K::nat_embed: s += "%:R"; break;
    }
  }
  return s;
}

std::size_t AtomTable::intern(AtomKey key) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].same_key(key)) return i;
  entries_.push_back(std::move(key));
  return entries_.size() - 1;
}

std::vector<std::string> AtomTable::displays() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const AtomKey& k : entries_) out.push_back(k.display());
  return out;
}

// ---------------------------------------------------------------------------
// constructors

namespace {

std::shared_ptr<MorphExpr> m_node(MKind k, CarrierId c) {
  auto e = std::make_shared<MorphExpr>();
  e->kind = k;
  e->carrier = c;
  return e;
}

std::shared_ptr<NatExpr> n_node(NKind k) {
  auto e = std::make_shared<NatExpr>();
  e->kind = k;
  return e;
}

std::shared_ptr<RingExpr> r_node(RKind k, CarrierId c) {
  auto e = std::make_shared<RingExpr>();
  e->kind = k;
  e->carrier = c;
  return e;
}

std::shared_ptr<ZmodExpr> z_node(ZKind k, CarrierId c) {
  auto e = std::make_shared<ZmodExpr>();
  e->kind = k;
  e->carrier = c;
  return e;
}

}  // namespace

MorphExprPtr m_atom(CarrierId c, AtomKey key) {
  auto e = m_node(MKind::Atom, c);
  e->atom = std::move(key);
  return e;
}
MorphExprPtr m_zero(CarrierId c) { return m_node(MKind::Zero, c); }
MorphExprPtr m_neg(MorphExprPtr a) {
  auto e = m_node(MKind::Neg, a->carrier);
  e->a = std::move(a);
  return e;
}
MorphExprPtr m_add(MorphExprPtr a, MorphExprPtr b) {
  auto e = m_node(MKind::Add, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
MorphExprPtr m_sub(MorphExprPtr a, MorphExprPtr b) {
  auto e = m_node(MKind::Sub, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
MorphExprPtr m_morph(std::shared_ptr<const Hom> h, MorphExprPtr child) {
  auto e = m_node(MKind::Morph, h->cod);
  e->hom = std::move(h);
  e->a = std::move(child);
  return e;
}

NatExprPtr n_const(BigInt v) {
  auto e = n_node(NKind::Const);
  e->value = std::move(v);
  return e;
}
NatExprPtr n_atom(AtomKey key) {
  auto e = n_node(NKind::Atom);
  e->atom = std::move(key);
  return e;
}
NatExprPtr n_add(NatExprPtr a, NatExprPtr b) {
  auto e = n_node(NKind::Add);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
NatExprPtr n_succ(NatExprPtr a) {
  auto e = n_node(NKind::Succ);
  e->a = std::move(a);
  return e;
}
NatExprPtr n_mul(NatExprPtr a, NatExprPtr b) {
  auto e = n_node(NKind::Mul);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
NatExprPtr n_pow(NatExprPtr a, BigInt exp) {
  auto e = n_node(NKind::Pow);
  e->a = std::move(a);
  e->value = std::move(exp);
  return e;
}

RingExprPtr r_atom(CarrierId c, AtomKey key) {
  auto e = r_node(RKind::Atom, c);
  e->atom = std::move(key);
  return e;
}
RingExprPtr r_zero(CarrierId c) { return r_node(RKind::Zero, c); }
RingExprPtr r_one(CarrierId c) { return r_node(RKind::One, c); }
RingExprPtr r_neg(RingExprPtr a) {
  auto e = r_node(RKind::Neg, a->carrier);
  e->a = std::move(a);
  return e;
}
RingExprPtr r_add(RingExprPtr a, RingExprPtr b) {
  auto e = r_node(RKind::Add, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
RingExprPtr r_sub(RingExprPtr a, RingExprPtr b) {
  auto e = r_node(RKind::Sub, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
RingExprPtr r_mul(RingExprPtr a, RingExprPtr b) {
  auto e = r_node(RKind::Mul, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
RingExprPtr r_mulnat(RingExprPtr a, NatExprPtr n) {
  auto e = r_node(RKind::MulNat, a->carrier);
  e->a = std::move(a);
  e->nat = std::move(n);
  return e;
}
RingExprPtr r_mulint(RingExprPtr a, RingExprPtr int_arg) {
  auto e = r_node(RKind::MulInt, a->carrier);
  e->a = std::move(a);
  e->b = std::move(int_arg);
  return e;
}
RingExprPtr r_pownat(RingExprPtr a, BigInt k) {
  auto e = r_node(RKind::PowNat, a->carrier);
  e->a = std::move(a);
  e->k = std::move(k);
  return e;
}
RingExprPtr r_powpos(RingExprPtr a, BigInt k) {
  auto e = r_node(RKind::PowPos, a->carrier);
  e->a = std::move(a);
  e->k = std::move(k);
  return e;
}
RingExprPtr r_powneg(RingExprPtr a, BigInt n) {
  auto e = r_node(RKind::PowNeg, a->carrier);
  e->a = std::move(a);
  e->k = std::move(n);
  return e;
}
RingExprPtr r_intpow(RingExprPtr a, BigInt k) {
  auto e = r_node(RKind::IntPow, a->carrier);
  e->a = std::move(a);
  e->k = std::move(k);
  return e;
}
RingExprPtr r_inv(RingExprPtr a) {
  auto e = r_node(RKind::Inv, a->carrier);
  e->a = std::move(a);
  return e;
}
RingExprPtr r_morph(std::shared_ptr<const Hom> h, RingExprPtr child) {
  auto e = r_node(RKind::Morph, h->cod);
  e->hom = std::move(h);
  e->a = std::move(child);
  return e;
}
RingExprPtr r_morph_add(std::shared_ptr<const Hom> h, ZmodExprPtr child, CarrierId cod) {
  auto e = r_node(RKind::MorphAdd, cod);
  e->hom = std::move(h);
  e->zm = std::move(child);
  return e;
}
RingExprPtr r_fromnat(CarrierId int_c, NatExprPtr n, bool negz) {
  auto e = r_node(negz ? RKind::FromNatNeg : RKind::FromNat, int_c);
  e->nat = std::move(n);
  return e;
}
RingExprPtr r_intconst(CarrierId int_c, BigInt k) {
  auto e = r_node(RKind::IntConst, int_c);
  e->k = std::move(k);
  return e;
}

ZmodExprPtr z_atom(CarrierId c, AtomKey key) {
  auto e = z_node(ZKind::Atom, c);
  e->atom = std::move(key);
  return e;
}
ZmodExprPtr z_zero(CarrierId c) { return z_node(ZKind::Zero, c); }
ZmodExprPtr z_neg(ZmodExprPtr a) {
  auto e = z_node(ZKind::Neg, a->carrier);
  e->a = std::move(a);
  return e;
}
ZmodExprPtr z_add(ZmodExprPtr a, ZmodExprPtr b) {
  auto e = z_node(ZKind::Add, a->carrier);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}
ZmodExprPtr z_mulnat(ZmodExprPtr a, NatExprPtr n) {
  auto e = z_node(ZKind::MulNat, a->carrier);
  e->a = std::move(a);
  e->nat = std::move(n);
  return e;
}
ZmodExprPtr z_mulint(ZmodExprPtr a, RingExprPtr int_arg) {
  auto e = z_node(ZKind::MulInt, a->carrier);
  e->a = std::move(a);
  e->int_arg = std::move(int_arg);
  return e;
}
ZmodExprPtr z_morph(std::shared_ptr<const Hom> h, ZmodExprPtr child) {
  auto e = z_node(ZKind::Morph, h->cod);
  e->hom = std::move(h);
  e->a = std::move(child);
  return e;
}

// ---------------------------------------------------------------------------
// evaluation

Value atom_value(const Registry& reg, const AtomKey& key, const AtomEnv& env) {
  return key.chain.apply(reg, env(key));
}

Value eval_morph(const Registry& reg, const MorphExpr& e, const AtomEnv& env) {
  const Semantics& sem = reg.carrier(e.carrier).sem;
  switch (e.kind) {
    case MKind::Atom: return atom_value(reg, e.atom, env);
    case MKind::Zero: return v_zero(sem);
    case MKind::Neg: return v_opp(eval_morph(reg, *e.a, env));
    case MKind::Add: return v_add(eval_morph(reg, *e.a, env), eval_morph(reg, *e.b, env));
    case MKind::Sub:
      // the opaque subtraction operator interprets as a single subtraction
      return v_sub(eval_morph(reg, *e.a, env), eval_morph(reg, *e.b, env));
    case MKind::Morph: return e.hom->apply(eval_morph(reg, *e.a, env));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

BigInt eval_nat(const Registry& reg, const NatExpr& e, const AtomEnv& env) {
  switch (e.kind) {
    case NKind::Const: return e.value;
    case NKind::Atom: {
      Value v = atom_value(reg, e.atom, env);
      if (v.as_int() < 0) throw Error(ErrorCode::IndexOutOfRange, "negative nat atom");
      return v.as_int();
    }
    case NKind::Add: return eval_nat(reg, *e.a, env) + eval_nat(reg, *e.b, env);
    case NKind::Succ: return eval_nat(reg, *e.a, env) + 1;
    case NKind::Mul: return eval_nat(reg, *e.a, env) * eval_nat(reg, *e.b, env);
    case NKind::Pow: {
      BigInt base = eval_nat(reg, *e.a, env);
      BigInt acc = 1, exp = e.value;
      while (exp > 0) {
        if ((exp & 1) != 0) acc *= base;
        exp >>= 1;
        if (exp > 0) base *= base;
      }
      return acc;
    }
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

Value eval_ring(const Registry& reg, const RingExpr& e, const AtomEnv& env) {
  const Semantics& sem = reg.carrier(e.carrier).sem;
  switch (e.kind) {
    case RKind::Atom: return atom_value(reg, e.atom, env);
    case RKind::Zero: return v_zero(sem);
    case RKind::One: return v_one(sem);
    case RKind::Neg: return v_opp(eval_ring(reg, *e.a, env));
    case RKind::Add: return v_add(eval_ring(reg, *e.a, env), eval_ring(reg, *e.b, env));
    case RKind::Sub: return v_sub(eval_ring(reg, *e.a, env), eval_ring(reg, *e.b, env));
    case RKind::MulNat: return v_natmul(eval_ring(reg, *e.a, env), eval_nat(reg, *e.nat, env));
    case RKind::MulInt:
      return v_intmul(eval_ring(reg, *e.a, env), eval_ring(reg, *e.b, env).as_int());
    case RKind::Mul: return v_mul(eval_ring(reg, *e.a, env), eval_ring(reg, *e.b, env));
    case RKind::PowNat:
    case RKind::PowPos:
      return v_pow_nat(eval_ring(reg, *e.a, env), e.k);
    case RKind::PowNeg:
      return v_inv(v_pow_nat(eval_ring(reg, *e.a, env), e.k + 1));
    case RKind::IntPow: return v_zpow(eval_ring(reg, *e.a, env), e.k);
    case RKind::Inv: return v_inv(eval_ring(reg, *e.a, env));
    case RKind::Morph: return e.hom->apply(eval_ring(reg, *e.a, env));
    case RKind::MorphAdd: return e.hom->apply(eval_zmod(reg, *e.zm, env));
    case RKind::FromNat: return Value::integer(eval_nat(reg, *e.nat, env));
    case RKind::FromNatNeg: return Value::integer(-(eval_nat(reg, *e.nat, env) + 1));
    case RKind::IntConst: return Value::integer(e.k);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

Value eval_zmod(const Registry& reg, const ZmodExpr& e, const AtomEnv& env) {
  const Semantics& sem = reg.carrier(e.carrier).sem;
  switch (e.kind) {
    case ZKind::Atom: return atom_value(reg, e.atom, env);
    case ZKind::Zero: return v_zero(sem);
    case ZKind::Neg: return v_opp(eval_zmod(reg, *e.a, env));
    case ZKind::Add: return v_add(eval_zmod(reg, *e.a, env), eval_zmod(reg, *e.b, env));
    case ZKind::MulNat: return v_natmul(eval_zmod(reg, *e.a, env), eval_nat(reg, *e.nat, env));
    case ZKind::MulInt:
      return v_intmul(eval_zmod(reg, *e.a, env), eval_ring(reg, *e.int_arg, env).as_int());
    case ZKind::Morph: return e.hom->apply(eval_zmod(reg, *e.a, env));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

// ---------------------------------------------------------------------------
// pushdown

namespace {

AtomKey pushed_atom(const HomChain& acc, const AtomKey& atom) {
  AtomKey key = atom;
  HomChain chain = acc;
  chain.steps.insert(chain.steps.end(), atom.chain.steps.begin(), atom.chain.steps.end());
  key.chain = std::move(chain);
  return key;
}

}  // namespace

Value push_down_value(const Registry& reg, const HomChain& acc, const MorphExpr& e,
                      const AtomEnv& env) {
  const Semantics& target = reg.carrier(acc.cod).sem;
  switch (e.kind) {
    case MKind::Atom: return acc.apply(reg, atom_value(reg, e.atom, env));
    case MKind::Zero: return v_zero(target);
    case MKind::Neg: return v_opp(push_down_value(reg, acc, *e.a, env));
    case MKind::Add:
      return v_add(push_down_value(reg, acc, *e.a, env), push_down_value(reg, acc, *e.b, env));
    case MKind::Sub:
      // normalized through zero and opposite, not the opaque operation
      return v_add(push_down_value(reg, acc, *e.a, env),
                   v_opp(push_down_value(reg, acc, *e.b, env)));
    case MKind::Morph:
      return push_down_value(reg, acc.then_hom(e.hom), *e.a, env);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

MorphExprPtr push_down_term(const HomChain& acc, const MorphExpr& e) {
  switch (e.kind) {
    case MKind::Atom: return m_atom(acc.cod, pushed_atom(acc, e.atom));
    case MKind::Zero: return m_zero(acc.cod);
    case MKind::Neg: return m_neg(push_down_term(acc, *e.a));
    case MKind::Add: return m_add(push_down_term(acc, *e.a), push_down_term(acc, *e.b));
    case MKind::Sub:
      return m_add(push_down_term(acc, *e.a), m_neg(push_down_term(acc, *e.b)));
    case MKind::Morph: return push_down_term(acc.then_hom(e.hom), *e.a);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

// ---------------------------------------------------------------------------
// lowering

zmod::ExprPtr lower_morph(const HomChain& acc, const MorphExpr& e, AtomTable& vm) {
  switch (e.kind) {
    case MKind::Atom: return zmod::make_var(vm.intern(pushed_atom(acc, e.atom)));
    case MKind::Zero: return zmod::make_zero();
    case MKind::Neg: return zmod::make_neg(lower_morph(acc, *e.a, vm));
    case MKind::Add:
      return zmod::make_add(lower_morph(acc, *e.a, vm), lower_morph(acc, *e.b, vm));
    case MKind::Sub:
      return zmod::make_add(lower_morph(acc, *e.a, vm),
                            zmod::make_neg(lower_morph(acc, *e.b, vm)));
    case MKind::Morph: return lower_morph(acc.then_hom(e.hom), *e.a, vm);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

namespace {

horner::ExprRef lower_atom(const HomChain& acc, const AtomKey& atom, horner::Arena& arena,
                           AtomTable& vm) {
  return arena.var(static_cast<std::uint32_t>(vm.intern(pushed_atom(acc, atom)) + 1));
}

// Ring-mode inverses: the whole accumulated-hom-applied subterm becomes a
// fresh variable.
horner::ExprRef lower_ring_atomize(const HomChain& acc, const RingExpr& e, horner::Arena& arena,
                                   AtomTable& vm) {
  AtomKey key;
  key.chain = acc;
  key.raw_render = render(e);
  key.raw_ctx = surface::Ctx::in_carrier(e.carrier);
  key.raw = std::make_shared<const RingExpr>(e);
  return arena.var(static_cast<std::uint32_t>(vm.intern(std::move(key)) + 1));
}

}  // namespace

horner::ExprRef lower_nat(const NatExpr& e, CarrierId target, horner::Arena& arena,
                          AtomTable& vm) {
  switch (e.kind) {
    case NKind::Const: return arena.constant(e.value);
    case NKind::Atom:
      return lower_atom(HomChain::nat_embed(target), e.atom, arena, vm);
    case NKind::Add:
      return arena.add(lower_nat(*e.a, target, arena, vm), lower_nat(*e.b, target, arena, vm));
    case NKind::Succ:
      return arena.add(arena.one(), lower_nat(*e.a, target, arena, vm));
    case NKind::Mul:
      return arena.mul(lower_nat(*e.a, target, arena, vm), lower_nat(*e.b, target, arena, vm));
    case NKind::Pow:
      return arena.pow(lower_nat(*e.a, target, arena, vm), e.value);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

horner::ExprRef lower_ring(const HomChain& acc, const RingExpr& e, bool field_mode,
                           horner::Arena& arena, AtomTable& vm) {
  switch (e.kind) {
    case RKind::Atom: return lower_atom(acc, e.atom, arena, vm);
    case RKind::Zero: return arena.zero();
    case RKind::One: return arena.one();
    case RKind::Neg: return arena.neg(lower_ring(acc, *e.a, field_mode, arena, vm));
    case RKind::Add:
      return arena.add(lower_ring(acc, *e.a, field_mode, arena, vm),
                       lower_ring(acc, *e.b, field_mode, arena, vm));
    case RKind::Sub:
      return arena.sub(lower_ring(acc, *e.a, field_mode, arena, vm),
                       lower_ring(acc, *e.b, field_mode, arena, vm));
    case RKind::MulNat:
      return arena.mul(lower_ring(acc, *e.a, field_mode, arena, vm),
                       lower_nat(*e.nat, acc.cod, arena, vm));
    case RKind::MulInt:
      // the multiplier is lowered under the canonical integer embedding
      return arena.mul(lower_ring(acc, *e.a, field_mode, arena, vm),
                       lower_ring(HomChain::int_embed(acc.cod), *e.b, field_mode, arena, vm));
    case RKind::Mul:
      return arena.mul(lower_ring(acc, *e.a, field_mode, arena, vm),
                       lower_ring(acc, *e.b, field_mode, arena, vm));
    case RKind::PowNat:
    case RKind::PowPos:
      return arena.pow(lower_ring(acc, *e.a, field_mode, arena, vm), e.k);
    case RKind::PowNeg:
      if (!field_mode) return lower_ring_atomize(acc, e, arena, vm);
      return arena.inv(arena.pow(lower_ring(acc, *e.a, field_mode, arena, vm), e.k + 1));
    case RKind::IntPow:
      if (e.k < 0) return arena.constant(0);
      return arena.pow(lower_ring(acc, *e.a, field_mode, arena, vm), e.k);
    case RKind::Inv:
      if (!field_mode) return lower_ring_atomize(acc, e, arena, vm);
      return arena.inv(lower_ring(acc, *e.a, field_mode, arena, vm));
    case RKind::Morph:
      return lower_ring(acc.then_hom(e.hom), *e.a, field_mode, arena, vm);
    case RKind::MorphAdd:
      return lower_zmod(acc.then_hom(e.hom), *e.zm, field_mode, arena, vm);
    case RKind::FromNat: return lower_nat(*e.nat, acc.cod, arena, vm);
    case RKind::FromNatNeg:
      return arena.neg(arena.add(arena.one(), lower_nat(*e.nat, acc.cod, arena, vm)));
    case RKind::IntConst: return arena.constant(e.k);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

horner::ExprRef lower_zmod(const HomChain& acc, const ZmodExpr& e, bool field_mode,
                           horner::Arena& arena, AtomTable& vm) {
  switch (e.kind) {
    case ZKind::Atom: return lower_atom(acc, e.atom, arena, vm);
    case ZKind::Zero: return arena.zero();
    case ZKind::Neg: return arena.neg(lower_zmod(acc, *e.a, field_mode, arena, vm));
    case ZKind::Add:
      return arena.add(lower_zmod(acc, *e.a, field_mode, arena, vm),
                       lower_zmod(acc, *e.b, field_mode, arena, vm));
    case ZKind::MulNat:
      return arena.mul(lower_zmod(acc, *e.a, field_mode, arena, vm),
                       lower_nat(*e.nat, acc.cod, arena, vm));
    case ZKind::MulInt:
      return arena.mul(lower_zmod(acc, *e.a, field_mode, arena, vm),
                       lower_ring(HomChain::int_embed(acc.cod), *e.int_arg, field_mode, arena, vm));
    case ZKind::Morph:
      return lower_zmod(acc.then_hom(e.hom), *e.a, field_mode, arena, vm);
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad node");
}

// ---------------------------------------------------------------------------
// rendering and well-formedness

std::string render(const MorphExpr& e) {
  switch (e.kind) {
    case MKind::Atom: return "MX(" + e.atom.display() + ")";
    case MKind::Zero: return "MO";
    case MKind::Neg: return "MNeg(" + render(*e.a) + ")";
    case MKind::Add: return "MAdd(" + render(*e.a) + ", " + render(*e.b) + ")";
    case MKind::Sub: return "MSub(" + render(*e.a) + ", " + render(*e.b) + ")";
    case MKind::Morph: return "MMorph(" + e.hom->name + ", " + render(*e.a) + ")";
  }
  return "?";
}

std::string render(const NatExpr& e) {
  switch (e.kind) {
    case NKind::Const: return e.value.str();
    case NKind::Atom: return e.atom.display();
    case NKind::Add: return "(" + render(*e.a) + " + " + render(*e.b) + ")";
    case NKind::Succ: return render(*e.a) + ".+1";
    case NKind::Mul: return "(" + render(*e.a) + " * " + render(*e.b) + ")";
    case NKind::Pow: return render(*e.a) + "^" + e.value.str();
  }
  return "?";
}

std::string render(const RingExpr& e) {
  switch (e.kind) {
    case RKind::Atom: return e.atom.display();
    case RKind::Zero: return "0";
    case RKind::One: return "1";
    case RKind::Neg: return "(- " + render(*e.a) + ")";
    case RKind::Add: return "(" + render(*e.a) + " + " + render(*e.b) + ")";
    case RKind::Sub: return "(" + render(*e.a) + " - " + render(*e.b) + ")";
    case RKind::MulNat: return "(" + render(*e.a) + " *+ " + render(*e.nat) + ")";
    case RKind::MulInt: return "(" + render(*e.a) + " *~ " + render(*e.b) + ")";
    case RKind::Mul: return "(" + render(*e.a) + " * " + render(*e.b) + ")";
    case RKind::PowNat: return render(*e.a) + " ^+ " + e.k.str();
    case RKind::PowPos: return render(*e.a) + " ^ " + e.k.str();
    case RKind::PowNeg: return render(*e.a) + " ^ (-" + BigInt(e.k + 1).str() + ")";
    case RKind::IntPow: return render(*e.a) + " ^ " + e.k.str();
    case RKind::Inv: return render(*e.a) + "^-1";
    case RKind::Morph: return e.hom->name + "(" + render(*e.a) + ")";
    case RKind::MorphAdd: return e.hom->name + "(" + render(*e.zm) + ")";
    case RKind::FromNat: return "Posz(" + render(*e.nat) + ")";
    case RKind::FromNatNeg: return "Negz(" + render(*e.nat) + ")";
    case RKind::IntConst: return e.k.str();
  }
  return "?";
}

std::string render(const ZmodExpr& e) {
  switch (e.kind) {
    case ZKind::Atom: return e.atom.display();
    case ZKind::Zero: return "0";
    case ZKind::Neg: return "(- " + render(*e.a) + ")";
    case ZKind::Add: return "(" + render(*e.a) + " + " + render(*e.b) + ")";
    case ZKind::MulNat: return "(" + render(*e.a) + " *+ " + render(*e.nat) + ")";
    case ZKind::MulInt: return "(" + render(*e.a) + " *~ " + render(*e.int_arg) + ")";
    case ZKind::Morph: return e.hom->name + "(" + render(*e.a) + ")";
  }
  return "?";
}

bool well_formed(const Registry& reg, const MorphExpr& e) {
  switch (e.kind) {
    case MKind::Atom:
    case MKind::Zero:
      return true;
    case MKind::Neg:
      return e.a->carrier == e.carrier && well_formed(reg, *e.a);
    case MKind::Add:
    case MKind::Sub:
      return e.a->carrier == e.carrier && e.b->carrier == e.carrier &&
             well_formed(reg, *e.a) && well_formed(reg, *e.b);
    case MKind::Morph:
      return e.hom->cod == e.carrier && e.a->carrier == e.hom->dom && well_formed(reg, *e.a);
  }
  return false;
}

namespace {

bool wf_zmod(const Registry& reg, const ZmodExpr& e);

bool wf_ring(const Registry& reg, const RingExpr& e) {
  auto int_carrier = [&](CarrierId c) {
    return reg.carrier(c).sem.kind == SemKind::integers;
  };
  switch (e.kind) {
    case RKind::Atom: case RKind::Zero: case RKind::One: return true;
    case RKind::Neg: return e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::Add: case RKind::Mul:
      return e.a->carrier == e.carrier && e.b->carrier == e.carrier && wf_ring(reg, *e.a) &&
             wf_ring(reg, *e.b);
    case RKind::Sub:
      return int_carrier(e.carrier) && e.a->carrier == e.carrier &&
             e.b->carrier == e.carrier && wf_ring(reg, *e.a) && wf_ring(reg, *e.b);
    case RKind::MulNat: return e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::MulInt:
      return e.a->carrier == e.carrier && int_carrier(e.b->carrier) && wf_ring(reg, *e.a) &&
             wf_ring(reg, *e.b);
    case RKind::PowNat: return e.k >= 0 && e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::PowPos:
      return e.k >= 0 && reg.has_instance(e.carrier, carriers::StructureKind::unitRingType) &&
             e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::PowNeg:
      return e.k >= 0 && reg.has_instance(e.carrier, carriers::StructureKind::fieldType) &&
             e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::IntPow:
      return int_carrier(e.carrier) && e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::Inv:
      return reg.has_instance(e.carrier, carriers::StructureKind::fieldType) &&
             e.a->carrier == e.carrier && wf_ring(reg, *e.a);
    case RKind::Morph:
      return e.hom->kind == HomKind::rmorphism && e.hom->cod == e.carrier &&
             e.a->carrier == e.hom->dom && wf_ring(reg, *e.a);
    case RKind::MorphAdd:
      return e.hom->cod == e.carrier && e.zm->carrier == e.hom->dom && wf_zmod(reg, *e.zm);
    case RKind::FromNat: case RKind::FromNatNeg: case RKind::IntConst:
      return int_carrier(e.carrier);
  }
  return false;
}

bool wf_zmod(const Registry& reg, const ZmodExpr& e) {
  switch (e.kind) {
    case ZKind::Atom: case ZKind::Zero: return true;
    case ZKind::Neg: return e.a->carrier == e.carrier && wf_zmod(reg, *e.a);
    case ZKind::Add:
      return e.a->carrier == e.carrier && e.b->carrier == e.carrier && wf_zmod(reg, *e.a) &&
             wf_zmod(reg, *e.b);
    case ZKind::MulNat: return e.a->carrier == e.carrier && wf_zmod(reg, *e.a);
    case ZKind::MulInt:
      return e.a->carrier == e.carrier &&
             reg.carrier(e.int_arg->carrier).sem.kind == SemKind::integers &&
             wf_zmod(reg, *e.a) && wf_ring(reg, *e.int_arg);
    case ZKind::Morph:
      return e.hom->cod == e.carrier && e.a->carrier == e.hom->dom && wf_zmod(reg, *e.a);
  }
  return false;
}

}  // namespace

bool well_formed(const Registry& reg, const RingExpr& e) { return wf_ring(reg, e); }

}  // namespace ringdec::prep
