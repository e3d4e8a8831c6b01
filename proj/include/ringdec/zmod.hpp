// Homogeneous Z-module pipeline: indexed-variable syntax, evaluation,
// normalization to formal sums, substitution, and the equality decision.
#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ringdec/value.hpp"

namespace ringdec::zmod {

enum class ExprKind : std::uint8_t { Var, Zero, Neg, Add };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  std::size_t var = 0;  // Var
  ExprPtr a, b;
};

ExprPtr make_var(std::size_t index);
ExprPtr make_zero();
ExprPtr make_neg(ExprPtr e);
ExprPtr make_add(ExprPtr a, ExprPtr b);

// Coefficient sequence of a formal sum; entry j multiplies variable j.
using FormalSum = std::vector<BigInt>;

// Structural interpretation; out-of-range variables read as the carrier zero.
Value eval(const Semantics& sem, std::span<const Value> varmap, const Expr& e);

// Coefficient j is the signed multiplicity of variable j; length is
// 1 + the largest index occurring in e (trailing zeros kept).
FormalSum normalize(const Expr& e);

// Sum of coeffs[j] * varmap[j] over the carrier.
Value substitute(const Semantics& sem, std::span<const Value> varmap, const FormalSum& fs);

// True iff every coefficient of normalize(a + (-b)) is zero; sound over every
// Z-module and complete over the integers.
bool decide(const Expr& lhs, const Expr& rhs);

FormalSum difference(const Expr& lhs, const Expr& rhs);

// For a nonzero formal sum, an integer assignment witnessing a nonzero value.
std::vector<BigInt> counterexample(const FormalSum& fs);

std::string to_string(const Expr& e);
std::string to_string(const FormalSum& fs);

}  // namespace ringdec::zmod
