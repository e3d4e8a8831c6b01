// Bottom-up recognition of expressions in the integer subring of an ordered
// domain, reduction of (dis)equations to integer (dis)equations, and a
// decider for the ground/single-variable-linear fragment.
#pragma once

#include <optional>

#include "ringdec/horner.hpp"
#include "ringdec/prep.hpp"

namespace ringdec::zify {

// Closure-rule derivation; mulrz carries its integer multiplier (a literal or
// an embedded atom) as display text.
struct TraceNode {
  std::string rule;  // zify_zero | zify_one | zify_opp | zify_add | zify_mul | zify_mulrz
  std::vector<TraceNode> children;
  std::string arg;

  std::string str() const;
};

struct Witness {
  horner::ExprRef zval = horner::kNoExpr;  // same shape, over the integer carrier
  TraceNode trace;
};

enum class Rel : std::uint8_t { neq, eq };

struct IntDiseq {
  horner::ExprRef lhs = horner::kNoExpr;
  horner::ExprRef rhs = horner::kNoExpr;
  Rel rel = Rel::neq;
};

enum class IntVerdict : std::uint8_t { Proved, Residual };

struct IntDecision {
  IntVerdict verdict;
  std::string text;     // normalized rendering, e.g. "2 * n != 1"
  std::string message;  // why it stayed residual
};

// Recognition and reduction against one goal's atom table. Witnesses share a
// private integer-level arena and atom table.
class Reducer {
 public:
  Reducer(const carriers::Registry& reg, const horner::Arena& src, const prep::AtomTable& atoms,
          carriers::CarrierId carrier);

  // Succeeds iff the expression lies in the closure of 0, 1, opposite,
  // addition, multiplication and integer scaling over embedded integer atoms.
  std::optional<Witness> recognize(horner::ExprRef e);

  // expr != 0 becomes an integer disequation when both sides are recognized;
  // requires the carrier to be an ordered domain (embedding injectivity).
  std::optional<IntDiseq> reduce_diseq(const horner::SideCondition& cond);

  IntDecision decide_int_diseq(const IntDiseq& d);

  const horner::Arena& int_arena() const { return int_arena_; }
  const prep::AtomTable& int_atoms() const { return int_atoms_; }
  std::string int_carrier_name() const;

 private:
  const carriers::Registry& reg_;
  const horner::Arena& src_;
  const prep::AtomTable& atoms_;
  carriers::CarrierId carrier_;
  bool ordered_domain_;
  horner::Arena int_arena_;
  prep::AtomTable int_atoms_;
};

}  // namespace ringdec::zify
