#include "ringdec/horner.hpp"

#include <algorithm>
#include <cassert>

namespace ringdec::horner {

namespace {

PNode node(PK k, ExprRef a = kNoExpr, ExprRef b = kNoExpr) {
  PNode n;
  n.kind = k;
  n.a = a;
  n.b = b;
  return n;
}

}  // namespace

ExprRef Arena::push(PNode n) {
  nodes_.push_back(std::move(n));
  return static_cast<ExprRef>(nodes_.size() - 1);
}

ExprRef Arena::zero() { return push(node(PK::Zero)); }
ExprRef Arena::one() { return push(node(PK::One)); }

ExprRef Arena::constant(BigInt c) {
  PNode n = node(PK::Const);
  n.c = std::move(c);
  return push(std::move(n));
}

ExprRef Arena::var(std::uint32_t index_1based) {
  if (index_1based == 0) throw Error(ErrorCode::IndexOutOfRange, "variables are 1-based");
  PNode n = node(PK::Var);
  n.var = index_1based;
  return push(std::move(n));
}

ExprRef Arena::add(ExprRef a, ExprRef b) { return push(node(PK::Add, a, b)); }
ExprRef Arena::sub(ExprRef a, ExprRef b) { return push(node(PK::Sub, a, b)); }

ExprRef Arena::mul(ExprRef a, ExprRef b) {
  // one * x and x * one collapse, so embedded units never reach the syntax
  if (nodes_[a].kind == PK::One) return b;
  if (nodes_[b].kind == PK::One) return a;
  return push(node(PK::Mul, a, b));
}

ExprRef Arena::mul_raw(ExprRef a, ExprRef b) { return push(node(PK::Mul, a, b)); }
ExprRef Arena::neg(ExprRef a) { return push(node(PK::Neg, a)); }

ExprRef Arena::pow(ExprRef a, BigInt n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "pow exponents are nonnegative");
  PNode nd = node(PK::Pow, a);
  nd.c = std::move(n);
  return push(std::move(nd));
}

ExprRef Arena::inv(ExprRef a) { return push(node(PK::Inv, a)); }
ExprRef Arena::div(ExprRef a, ExprRef b) { return push(node(PK::Div, a, b)); }

namespace {

int arity(PK k) {
  switch (k) {
    case PK::Zero: case PK::One: case PK::Const: case PK::Var: return 0;
    case PK::Neg: case PK::Pow: case PK::Inv: return 1;
    default: return 2;
  }
}

}  // namespace

std::size_t Arena::count_nodes(ExprRef root) const {
  std::size_t n = 0;
  std::vector<ExprRef> stack{root};
  while (!stack.empty()) {
    ExprRef r = stack.back();
    stack.pop_back();
    ++n;
    const PNode& node = nodes_[r];
    if (arity(node.kind) >= 1) stack.push_back(node.a);
    if (arity(node.kind) == 2) stack.push_back(node.b);
  }
  return n;
}

bool Arena::is_polynomial(ExprRef root) const {
  std::vector<ExprRef> stack{root};
  while (!stack.empty()) {
    ExprRef r = stack.back();
    stack.pop_back();
    const PNode& node = nodes_[r];
    if (node.kind == PK::Inv || node.kind == PK::Div) return false;
    if (arity(node.kind) >= 1) stack.push_back(node.a);
    if (arity(node.kind) == 2) stack.push_back(node.b);
  }
  return true;
}

namespace {

std::string var_display(std::uint32_t idx, std::span<const std::string> names) {
  if (idx >= 1 && idx <= names.size()) return names[idx - 1];
  return "X" + std::to_string(idx);
}

// renderer precedence: 0 add, 1 mul, 2 prefix, 4 atoms
std::string render_node(const Arena& a, ExprRef r, std::span<const std::string> names, int ctx) {
  const PNode& n = a.at(r);
  auto wrap = [&](int prec, std::string s) {
    if (prec < ctx) return "(" + std::move(s) + ")";
    return s;
  };
  switch (n.kind) {
    case PK::Zero: return "0";
    case PK::One: return "1";
    case PK::Const: return n.c < 0 ? wrap(2, n.c.str()) : n.c.str();
    case PK::Var: return var_display(n.var, names);
    case PK::Add:
      return wrap(0, render_node(a, n.a, names, 0) + " + " + render_node(a, n.b, names, 1));
    case PK::Sub:
      return wrap(0, render_node(a, n.a, names, 0) + " - " + render_node(a, n.b, names, 1));
    case PK::Mul:
      return wrap(1, render_node(a, n.a, names, 1) + " * " + render_node(a, n.b, names, 2));
    case PK::Div:
      return wrap(1, render_node(a, n.a, names, 1) + " / " + render_node(a, n.b, names, 2));
    case PK::Neg: return wrap(2, "- " + render_node(a, n.a, names, 2));
    case PK::Pow: return render_node(a, n.a, names, 4) + "^" + n.c.str();
    case PK::Inv: return render_node(a, n.a, names, 4) + "^-1";
  }
  return "?";
}

}  // namespace

std::string Arena::render(ExprRef root, std::span<const std::string> names) const {
  return render_node(*this, root, names, 0);
}

// ---------------------------------------------------------------------------
// SparsePoly
//
// Interpretation relative to a variable cursor:
//   Const c        -> c
//   Skip j p       -> p over the varmap advanced by j
//   Head p i q     -> p * X^i + q over the varmap advanced by 1,
//                     X being the variable at the cursor (p may mention X).
// Canonical form: Skip bodies are Heads with j >= 1; Head heads are nonzero
// and never a Head with zero tail; constants are merged.

SparsePoly SparsePoly::constant(BigInt c) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Const;
  n->c = std::move(c);
  return SparsePoly(std::move(n));
}

SparsePoly SparsePoly::skip(std::uint32_t j, const SparsePoly& p) {
  if (j == 0) return p;
  switch (p.root_->tag) {
    case Tag::Const:
      return p;  // constants mention no variables
    case Tag::Skip: {
      auto n = std::make_shared<Node>();
      n->tag = Tag::Skip;
      n->j = j + p.root_->j;
      n->p = p.root_->p;
      return SparsePoly(std::move(n));
    }
    case Tag::Head: {
      auto n = std::make_shared<Node>();
      n->tag = Tag::Skip;
      n->j = j;
      n->p = p.root_;
      return SparsePoly(std::move(n));
    }
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad poly node");
}

SparsePoly SparsePoly::head(const SparsePoly& p, const BigInt& i, const SparsePoly& tail) {
  assert(i >= 1);
  if (p.root_->tag == Tag::Const && p.root_->c == 0) return skip(1, tail);
  auto n = std::make_shared<Node>();
  n->tag = Tag::Head;
  if (p.root_->tag == Tag::Head && p.root_->q->tag == Tag::Const && p.root_->q->c == 0) {
    // (p' * X^i' + 0) * X^i + tail  ==  p' * X^(i'+i) + tail
    n->p = p.root_->p;
    n->i = p.root_->i + i;
  } else {
    n->p = p.root_;
    n->i = i;
  }
  n->q = tail.root_;
  return SparsePoly(std::move(n));
}

SparsePoly SparsePoly::variable(std::uint32_t index_1based) {
  if (index_1based == 0) throw Error(ErrorCode::IndexOutOfRange, "variables are 1-based");
  return skip(index_1based - 1, head(constant(1), 1, constant(0)));
}

bool SparsePoly::is_zero() const { return root_->tag == Tag::Const && root_->c == 0; }

std::optional<BigInt> SparsePoly::as_constant() const {
  if (root_->tag == Tag::Const) return root_->c;
  return std::nullopt;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
  const Node* x = root_.get();
  const Node* y = other.root_.get();
  if (x == y) return true;
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Tag::Const: return x->c == y->c;
    case Tag::Skip: return x->j == y->j && SparsePoly(x->p) == SparsePoly(y->p);
    case Tag::Head:
      return x->i == y->i && SparsePoly(x->p) == SparsePoly(y->p) &&
             SparsePoly(x->q) == SparsePoly(y->q);
  }
  return false;
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  using SP = SparsePoly;
  auto ac = a.as_constant();
  auto bc = b.as_constant();
  if (ac && bc) return SP::constant(*ac + *bc);
  if (ac && *ac == 0) return b;
  if (bc && *bc == 0) return a;

  const auto* x = a.root_.get();
  const auto* y = b.root_.get();
  using Tag = SP::Tag;

  if (x->tag == Tag::Const) return add(b, a);
  if (y->tag == Tag::Const) {
    if (x->tag == Tag::Skip)
      return SP::skip(x->j, add(SP(x->p), b));  // constants shift freely
    // Head: the constant joins the tail
    return SP::head(SP(x->p), x->i, add(SP(x->q), b));
  }
  if (x->tag == Tag::Skip && y->tag == Tag::Skip) {
    if (x->j > y->j) return add(b, a);
    return SP::skip(x->j, add(SP(x->p), SP::skip(y->j - x->j, SP(y->p))));
  }
  if (x->tag == Tag::Skip && y->tag == Tag::Head) return add(b, a);
  if (x->tag == Tag::Head && y->tag == Tag::Skip) {
    // the skip does not mention the head variable: it joins the tail
    return SP::head(SP(x->p), x->i, add(SP(x->q), SP::skip(y->j - 1, SP(y->p))));
  }
  // Head + Head
  if (x->i == y->i)
    return SP::head(add(SP(x->p), SP(y->p)), x->i, add(SP(x->q), SP(y->q)));
  if (x->i > y->i) return add(b, a);
  // x->i < y->i: fold the higher power into the head coefficient
  SparsePoly lifted = SP::head(SP(y->p), y->i - x->i, SP::constant(0));
  return SP::head(add(SP(x->p), lifted), x->i, add(SP(x->q), SP(y->q)));
}

SparsePoly neg(const SparsePoly& a) {
  using SP = SparsePoly;
  using Tag = SP::Tag;
  const auto* x = a.root_.get();
  switch (x->tag) {
    case Tag::Const: return SP::constant(-x->c);
    case Tag::Skip: return SP::skip(x->j, neg(SP(x->p)));
    case Tag::Head: return SP::head(neg(SP(x->p)), x->i, neg(SP(x->q)));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad poly node");
}

SparsePoly sub(const SparsePoly& a, const SparsePoly& b) { return add(a, neg(b)); }

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  using SP = SparsePoly;
  using Tag = SP::Tag;
  auto mul_const = [](const SparsePoly& p, const BigInt& c) {
    if (c == 0) return SparsePoly::constant(0);
    if (c == 1) return p;
    return SparsePoly::scale_impl(p, c);
  };
  auto ac = a.as_constant();
  if (ac) return mul_const(b, *ac);
  auto bc = b.as_constant();
  if (bc) return mul_const(a, *bc);

  const auto* x = a.root_.get();
  const auto* y = b.root_.get();
  if (x->tag == Tag::Skip && y->tag == Tag::Skip) {
    if (x->j > y->j) return mul(b, a);
    return SP::skip(x->j, mul(SP(x->p), SP::skip(y->j - x->j, SP(y->p))));
  }
  if (x->tag == Tag::Skip && y->tag == Tag::Head) return mul(b, a);
  if (x->tag == Tag::Head && y->tag == Tag::Skip) {
    // b mentions no head variable: distribute over head and tail
    SparsePoly head_part = mul(SP(x->p), b);
    SparsePoly tail_part = mul(SP(x->q), SP::skip(y->j - 1, SP(y->p)));
    if (head_part.is_zero()) return SP::skip(1, tail_part);
    return SP::head(head_part, x->i, tail_part);
  }
  // Head * Head: (p X^i + q)(p' X^i' + q')
  SparsePoly p = SP(x->p), q = SP(x->q);
  SparsePoly p2 = SP(y->p), q2 = SP(y->q);
  const BigInt &i = x->i, &i2 = y->i;
  SparsePoly t1 = SP::head(mul(p, p2), i + i2, SP::constant(0));
  SparsePoly pq2 = mul(p, SP::skip(1, q2));
  SparsePoly t2 = pq2.is_zero() ? SP::constant(0) : SP::head(pq2, i, SP::constant(0));
  SparsePoly p2q = mul(p2, SP::skip(1, q));
  SparsePoly t3 = p2q.is_zero() ? SP::constant(0) : SP::head(p2q, i2, SP::constant(0));
  SparsePoly t4 = SP::skip(1, mul(q, q2));
  return add(add(t1, t2), add(t3, t4));
}

// Integer coefficients form an integral domain, so scaling by a nonzero
// constant keeps every head nonzero and the form canonical.
SparsePoly SparsePoly::scale_impl(const SparsePoly& a, const BigInt& c) {
  using Tag = SparsePoly::Tag;
  const auto* x = a.root_.get();
  switch (x->tag) {
    case Tag::Const: return constant(x->c * c);
    case Tag::Skip: return skip(x->j, scale_impl(SparsePoly(x->p), c));
    case Tag::Head:
      return head(scale_impl(SparsePoly(x->p), c), x->i, scale_impl(SparsePoly(x->q), c));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad poly node");
}

SparsePoly pow(const SparsePoly& a, BigInt n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "pow exponents are nonnegative");
  SparsePoly acc = SparsePoly::constant(1);
  SparsePoly base = a;
  while (n > 0) {
    if ((n & 1) != 0) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

std::map<std::vector<std::uint32_t>, BigInt> SparsePoly::monomials() const {
  std::map<std::vector<std::uint32_t>, BigInt> out;
  struct Walk {
    std::map<std::vector<std::uint32_t>, BigInt>& out;
    void go(const Ptr& n, std::uint32_t offset, std::vector<std::uint32_t> exps) {
      switch (n->tag) {
        case Tag::Const:
          if (n->c != 0) {
            while (!exps.empty() && exps.back() == 0) exps.pop_back();
            out[exps] += n->c;
          }
          return;
        case Tag::Skip:
          go(n->p, offset + n->j, std::move(exps));
          return;
        case Tag::Head: {
          auto with_pow = exps;
          if (with_pow.size() <= offset) with_pow.resize(offset + 1, 0);
          with_pow[offset] += n->i.convert_to<std::uint32_t>();
          go(n->p, offset, std::move(with_pow));
          go(n->q, offset + 1, std::move(exps));
          return;
        }
      }
    }
  } walk{out};
  walk.go(root_, 0, {});
  // drop zero entries produced by cancellation in the map
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

std::string SparsePoly::horner_text(std::span<const std::string> names) const {
  struct Render {
    std::span<const std::string> names;
    std::string go(const Ptr& n, std::uint32_t offset) {
      switch (n->tag) {
        case Tag::Const: return n->c.str();
        case Tag::Skip: return go(n->p, offset + n->j);
        case Tag::Head: {
          std::string v = var_display(offset + 1, names);
          std::string head = go(n->p, offset);
          std::string tail = go(n->q, offset + 1);
          return "(" + head + ")*" + v + "^" + n->i.str() + " + " + tail;
        }
      }
      return "?";
    }
  } render{names};
  return render.go(root_, 0);
}

std::string SparsePoly::monomial_text(std::span<const std::string> names) const {
  auto mons = monomials();
  if (mons.empty()) return "0";
  std::string s;
  for (const auto& [exps, coeff] : mons) {
    if (!s.empty()) s += " + ";
    std::string term = coeff.str();
    for (std::uint32_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      term += "*" + var_display(v + 1, names);
      if (exps[v] > 1) term += "^" + std::to_string(exps[v]);
    }
    s += term;
  }
  return s;
}

ExprRef SparsePoly::to_expr(Arena& arena) const {
  struct Build {
    Arena& arena;
    ExprRef go(const Ptr& n, std::uint32_t offset) {
      switch (n->tag) {
        case Tag::Const: return arena.constant(n->c);
        case Tag::Skip: return go(n->p, offset + n->j);
        case Tag::Head: {
          ExprRef head = go(n->p, offset);
          ExprRef xpow = arena.pow(arena.var(offset + 1), n->i);
          ExprRef tail = go(n->q, offset + 1);
          return arena.add(arena.mul_raw(head, xpow), tail);
        }
      }
      throw Error(ErrorCode::IndexOutOfRange, "bad poly node");
    }
  } build{arena};
  return build.go(root_, 0);
}

Value SparsePoly::eval_impl(const Ptr& n, const Semantics& sem, std::span<const Value> vm,
                            std::size_t offset) {
  switch (n->tag) {
    case Tag::Const: return v_embed_int(sem, n->c);
    case Tag::Skip: return eval_impl(n->p, sem, vm, offset + n->j);
    case Tag::Head: {
      Value x = offset < vm.size() ? vm[offset] : v_zero(sem);
      Value hd = eval_impl(n->p, sem, vm, offset);
      Value tl = eval_impl(n->q, sem, vm, offset + 1);
      return v_add(v_mul(hd, v_pow_nat(x, n->i)), tl);
    }
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad poly node");
}

Value eval_poly(const SparsePoly& p, const Semantics& sem, std::span<const Value> varmap) {
  return SparsePoly::eval_impl(p.root_, sem, varmap, 0);
}

// ---------------------------------------------------------------------------
// Expression evaluation and normalization

Value eval_expr(const Arena& a, ExprRef e, const Semantics& sem, std::span<const Value> varmap) {
  const PNode& n = a.at(e);
  switch (n.kind) {
    case PK::Zero: return v_zero(sem);
    case PK::One: return v_one(sem);
    case PK::Const: return v_embed_int(sem, n.c);
    case PK::Var:
      if (n.var - 1 >= varmap.size())
        throw Error(ErrorCode::IndexOutOfRange, "variable X" + std::to_string(n.var));
      return varmap[n.var - 1];
    case PK::Add: return v_add(eval_expr(a, n.a, sem, varmap), eval_expr(a, n.b, sem, varmap));
    case PK::Sub: return v_sub(eval_expr(a, n.a, sem, varmap), eval_expr(a, n.b, sem, varmap));
    case PK::Mul: return v_mul(eval_expr(a, n.a, sem, varmap), eval_expr(a, n.b, sem, varmap));
    case PK::Neg: return v_opp(eval_expr(a, n.a, sem, varmap));
    case PK::Pow: return v_pow_nat(eval_expr(a, n.a, sem, varmap), n.c);
    case PK::Inv: return v_inv(eval_expr(a, n.a, sem, varmap));
    case PK::Div:
      return v_mul(eval_expr(a, n.a, sem, varmap), v_inv(eval_expr(a, n.b, sem, varmap)));
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad expr node");
}

SparsePoly pnorm(const Arena& a, ExprRef root) {
  // explicit work list: input trees can be deeper than the call stack allows
  struct Frame {
    ExprRef ref;
    bool expanded;
  };
  std::vector<Frame> work{{root, false}};
  std::vector<SparsePoly> results;
  while (!work.empty()) {
    auto [ref, expanded] = work.back();
    work.pop_back();
    const PNode& n = a.at(ref);
    if (n.kind == PK::Inv || n.kind == PK::Div)
      throw Error(ErrorCode::KindMismatch, "rational syntax reached the ring normalizer");
    if (!expanded) {
      switch (arity(n.kind)) {
        case 0:
          switch (n.kind) {
            case PK::Zero: results.push_back(SparsePoly::constant(0)); break;
            case PK::One: results.push_back(SparsePoly::constant(1)); break;
            case PK::Const: results.push_back(SparsePoly::constant(n.c)); break;
            default: results.push_back(SparsePoly::variable(n.var)); break;
          }
          break;
        case 1:
          work.push_back({ref, true});
          work.push_back({n.a, false});
          break;
        default:
          work.push_back({ref, true});
          work.push_back({n.b, false});
          work.push_back({n.a, false});
          break;
      }
      continue;
    }
    if (arity(n.kind) == 1) {
      SparsePoly x = std::move(results.back());
      results.pop_back();
      if (n.kind == PK::Neg) results.push_back(neg(x));
      else results.push_back(pow(x, n.c));
    } else {
      SparsePoly y = std::move(results.back());
      results.pop_back();
      SparsePoly x = std::move(results.back());
      results.pop_back();
      switch (n.kind) {
        case PK::Add: results.push_back(add(x, y)); break;
        case PK::Sub: results.push_back(sub(x, y)); break;
        default: results.push_back(mul(x, y)); break;
      }
    }
  }
  assert(results.size() == 1);
  return results.back();
}

bool ring_decide(const Arena& a, ExprRef lhs, ExprRef rhs) {
  return pnorm(a, lhs) == pnorm(a, rhs);
}

// ---------------------------------------------------------------------------
// Field procedure

namespace {

struct Frac {
  ExprRef num, den;
};

void emit_cond(Arena& a, ExprRef den, std::span<const std::string> names,
               std::vector<SideCondition>& conds, std::vector<SideCondition>& suppressed) {
  SparsePoly nf = pnorm(a, den);
  SideCondition sc{den, nf, a.render(den, names)};
  if (auto c = nf.as_constant()) {
    // nonzero constants hold in characteristic zero and every Z/p not
    // dividing them; recorded but not emitted
    if (*c != 0) {
      suppressed.push_back(std::move(sc));
      return;
    }
  }
  for (const auto& existing : conds)
    if (existing.normal == nf) return;
  conds.push_back(std::move(sc));
}

Frac simplify(Arena& a, ExprRef e, std::span<const std::string> names,
              std::vector<SideCondition>& conds, std::vector<SideCondition>& suppressed) {
  const PNode n = a.at(e);  // copy: the arena may grow below
  switch (n.kind) {
    case PK::Zero: case PK::One: case PK::Const: case PK::Var:
      return {e, a.one()};
    case PK::Neg: {
      Frac f = simplify(a, n.a, names, conds, suppressed);
      return {a.neg(f.num), f.den};
    }
    case PK::Add: case PK::Sub: {
      Frac x = simplify(a, n.a, names, conds, suppressed);
      Frac y = simplify(a, n.b, names, conds, suppressed);
      ExprRef cross1 = a.mul(x.num, y.den);
      ExprRef cross2 = a.mul(y.num, x.den);
      ExprRef num = n.kind == PK::Add ? a.add(cross1, cross2) : a.sub(cross1, cross2);
      return {num, a.mul(x.den, y.den)};
    }
    case PK::Mul: {
      Frac x = simplify(a, n.a, names, conds, suppressed);
      Frac y = simplify(a, n.b, names, conds, suppressed);
      return {a.mul(x.num, y.num), a.mul(x.den, y.den)};
    }
    case PK::Pow: {
      Frac x = simplify(a, n.a, names, conds, suppressed);
      return {a.pow(x.num, n.c), a.pow(x.den, n.c)};
    }
    case PK::Inv: {
      Frac x = simplify(a, n.a, names, conds, suppressed);
      emit_cond(a, x.num, names, conds, suppressed);
      return {x.den, x.num};
    }
    case PK::Div: {
      Frac x = simplify(a, n.a, names, conds, suppressed);
      Frac y = simplify(a, n.b, names, conds, suppressed);
      emit_cond(a, y.num, names, conds, suppressed);
      return {a.mul(x.num, y.den), a.mul(x.den, y.num)};
    }
  }
  throw Error(ErrorCode::IndexOutOfRange, "bad expr node");
}

}  // namespace

FieldSimplifyResult field_simplify(Arena& a, ExprRef e, std::span<const std::string> names) {
  FieldSimplifyResult out;
  Frac f = simplify(a, e, names, out.conds, out.suppressed);
  out.num = f.num;
  out.den = f.den;
  return out;
}

FieldDecideResult field_decide(Arena& a, ExprRef lhs, ExprRef rhs,
                               std::span<const std::string> names) {
  FieldSimplifyResult l = field_simplify(a, lhs, names);
  FieldSimplifyResult r = field_simplify(a, rhs, names);
  FieldDecideResult out;
  SparsePoly left = pnorm(a, a.mul(l.num, r.den));
  SparsePoly right = pnorm(a, a.mul(r.num, l.den));
  out.equal = left == right;
  out.cross_diff = sub(left, right);
  out.conds = std::move(l.conds);
  for (auto& c : r.conds) {
    bool dup = false;
    for (const auto& existing : out.conds)
      if (existing.normal == c.normal) { dup = true; break; }
    if (!dup) out.conds.push_back(std::move(c));
  }
  out.suppressed = std::move(l.suppressed);
  for (auto& c : r.suppressed) out.suppressed.push_back(std::move(c));
  return out;
}

}  // namespace ringdec::horner
