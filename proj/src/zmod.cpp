#include "ringdec/zmod.hpp"

namespace ringdec::zmod {

ExprPtr make_var(std::size_t index) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->var = index;
  return e;
}

ExprPtr make_zero() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Zero;
  return e;
}

ExprPtr make_neg(ExprPtr sub) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Neg;
  e->a = std::move(sub);
  return e;
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Add;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

Value eval(const Semantics& sem, std::span<const Value> varmap, const Expr& e) {
  switch (e.kind) {
    case ExprKind::Var:
      return e.var < varmap.size() ? varmap[e.var] : v_zero(sem);
    case ExprKind::Zero:
      return v_zero(sem);
    case ExprKind::Neg:
      return v_opp(eval(sem, varmap, *e.a));
    case ExprKind::Add:
      return v_add(eval(sem, varmap, *e.a), eval(sem, varmap, *e.b));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad expr node");
}

namespace {

void accumulate(const Expr& e, int sign, FormalSum& out) {
  switch (e.kind) {
    case ExprKind::Var:
      if (e.var >= out.size()) out.resize(e.var + 1, BigInt(0));
      out[e.var] += sign;
      return;
    case ExprKind::Zero:
      return;
    case ExprKind::Neg:
      accumulate(*e.a, -sign, out);
      return;
    case ExprKind::Add:
      accumulate(*e.a, sign, out);
      accumulate(*e.b, sign, out);
      return;
  }
}

}  // namespace

FormalSum normalize(const Expr& e) {
  FormalSum out;
  accumulate(e, 1, out);
  return out;
}

Value substitute(const Semantics& sem, std::span<const Value> varmap, const FormalSum& fs) {
  Value acc = v_zero(sem);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    Value xj = j < varmap.size() ? varmap[j] : v_zero(sem);
    acc = v_add(acc, v_intmul(xj, fs[j]));
  }
  return acc;
}

FormalSum difference(const Expr& lhs, const Expr& rhs) {
  auto diff = make_add(std::make_shared<Expr>(lhs), make_neg(std::make_shared<Expr>(rhs)));
  return normalize(*diff);
}

bool decide(const Expr& lhs, const Expr& rhs) {
  for (const BigInt& c : difference(lhs, rhs))
    if (c != 0) return false;
  return true;
}

std::vector<BigInt> counterexample(const FormalSum& fs) {
  // a nonzero coefficient j makes the unit assignment at j a witness
  std::vector<BigInt> assignment(fs.size(), BigInt(0));
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j] != 0) {
      assignment[j] = 1;
      return assignment;
    }
  }
  return assignment;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Var: return "Var(" + std::to_string(e.var) + ")";
    case ExprKind::Zero: return "Zero";
    case ExprKind::Neg: return "Neg(" + to_string(*e.a) + ")";
    case ExprKind::Add: return "Add(" + to_string(*e.a) + ", " + to_string(*e.b) + ")";
  }
  return "?";
}

std::string to_string(const FormalSum& fs) {
  std::string s = "[";
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (j) s += ", ";
    s += fs[j].str();
  }
  return s + "]";
}

}  // namespace ringdec::zmod
