// Second reflection phase: polynomial/rational syntax with integer
// coefficients, normalization to canonical sparse Horner form, the ring
// equality decision, and the field procedure emitting non-nullity side
// conditions.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringdec/value.hpp"

namespace ringdec::horner {

// Polynomial / rational expression nodes. Inv and Div only appear in field
// inputs; the ring decision never sees them.
enum class PK : std::uint8_t { Zero, One, Const, Var, Add, Sub, Mul, Neg, Pow, Inv, Div };

using ExprRef = std::uint32_t;
constexpr ExprRef kNoExpr = UINT32_MAX;

struct PNode {
  PK kind;
  ExprRef a = kNoExpr, b = kNoExpr;
  std::uint32_t var = 0;  // Var: 1-based index
  BigInt c;               // Const value, or Pow exponent (nonnegative)
};

class Arena {
 public:
  ExprRef zero();
  ExprRef one();
  ExprRef constant(BigInt c);
  ExprRef var(std::uint32_t index_1based);
  ExprRef add(ExprRef a, ExprRef b);
  ExprRef sub(ExprRef a, ExprRef b);
  ExprRef mul(ExprRef a, ExprRef b);  // folds multiplication by the One node
  ExprRef mul_raw(ExprRef a, ExprRef b);
  ExprRef neg(ExprRef a);
  ExprRef pow(ExprRef a, BigInt n);
  ExprRef inv(ExprRef a);
  ExprRef div(ExprRef a, ExprRef b);

  const PNode& at(ExprRef r) const { return nodes_[r]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t count_nodes(ExprRef root) const;  // constructors reachable from root
  bool is_polynomial(ExprRef root) const;       // no Inv/Div

  std::string render(ExprRef root,
                     std::span<const std::string> var_names = {}) const;

 private:
  ExprRef push(PNode n);
  std::vector<PNode> nodes_;
};

// Canonical sparse Horner form. Three shapes: a constant, a skip over the
// next j variables, and head * X1^i + tail (tail over the remaining
// variables). Smart constructors keep the form canonical, so equality of
// polynomials is structural equality.
class SparsePoly {
 public:
  SparsePoly() : SparsePoly(constant(0)) {}

  static SparsePoly constant(BigInt c);
  static SparsePoly variable(std::uint32_t index_1based);
  static SparsePoly skip(std::uint32_t j, const SparsePoly& p);
  static SparsePoly head(const SparsePoly& p, const BigInt& i, const SparsePoly& tail);

  friend SparsePoly add(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly neg(const SparsePoly& a);
  friend SparsePoly sub(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly mul(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly pow(const SparsePoly& a, BigInt n);

  bool operator==(const SparsePoly& other) const;
  bool is_zero() const;
  std::optional<BigInt> as_constant() const;

  // Monomial view: exponent vector (1-based variables, dense up to the
  // largest mentioned) -> coefficient.
  std::map<std::vector<std::uint32_t>, BigInt> monomials() const;

  std::string horner_text(std::span<const std::string> var_names = {}) const;
  std::string monomial_text(std::span<const std::string> var_names = {}) const;

  // Renders the polynomial back into expression syntax (for idempotence
  // round-trips and residual display).
  ExprRef to_expr(Arena& arena) const;

 private:
  enum class Tag : std::uint8_t { Const, Skip, Head };
  struct Node;
  using Ptr = std::shared_ptr<const Node>;
  struct Node {
    Tag tag;
    BigInt c;           // Const
    std::uint32_t j{};  // Skip distance
    BigInt i;           // Head exponent
    Ptr p, q;           // Head: head and tail; Skip: body in p
  };
  explicit SparsePoly(Ptr r) : root_(std::move(r)) {}
  static SparsePoly scale_impl(const SparsePoly& a, const BigInt& c);
  static Value eval_impl(const Ptr& n, const Semantics& sem, std::span<const Value> vm,
                         std::size_t offset);
  friend Value eval_poly(const SparsePoly&, const Semantics&, std::span<const Value>);
  Ptr root_;
};

// Structural interpretation in a carrier; constants embed via the carrier one.
Value eval_expr(const Arena& a, ExprRef e, const Semantics& sem, std::span<const Value> varmap);
Value eval_poly(const SparsePoly& p, const Semantics& sem, std::span<const Value> varmap);

// Normalization to sparse Horner form; iterative, safe for very deep inputs.
SparsePoly pnorm(const Arena& a, ExprRef e);

bool ring_decide(const Arena& a, ExprRef lhs, ExprRef rhs);

// A non-nullity obligation on a denominator.
struct SideCondition {
  ExprRef expr = kNoExpr;  // the denominator, as expression syntax
  SparsePoly normal;       // its normal form (dedup key)
  std::string origin;      // rendered source
};

struct FieldSimplifyResult {
  ExprRef num = kNoExpr;
  ExprRef den = kNoExpr;
  std::vector<SideCondition> conds;
  std::vector<SideCondition> suppressed;  // nonzero-constant denominators
};

// e = num/den wherever all conds hold; conditions whose normal form is a
// nonzero integer constant are suppressed (recorded separately).
FieldSimplifyResult field_simplify(Arena& a, ExprRef e,
                                   std::span<const std::string> var_names = {});

struct FieldDecideResult {
  bool equal = false;
  std::vector<SideCondition> conds;
  std::vector<SideCondition> suppressed;
  SparsePoly cross_diff;  // normal form of n1*d2 - n2*d1
};

FieldDecideResult field_decide(Arena& a, ExprRef lhs, ExprRef rhs,
                               std::span<const std::string> var_names = {});

}  // namespace ringdec::horner
