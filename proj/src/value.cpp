#include "ringdec/value.hpp"

#include <array>

namespace ringdec {

namespace {

thread_local std::array<std::uint64_t, 4> g_op_counts{};

void bump(const Semantics& s) { ++g_op_counts[static_cast<std::size_t>(s.kind)]; }

BigInt mod_reduce(BigInt v, std::uint64_t m) {
  BigInt mm(m);
  v %= mm;
  if (v < 0) v += mm;
  return v;
}

void require_same(const Value& a, const Value& b) {
  if (!(a.sem() == b.sem()))
    throw Error(ErrorCode::DomainMismatch, "values from different carriers");
}

// Extended gcd on the modulus; returns x with a*x == gcd (mod m).
BigInt mod_inverse_or_self(const BigInt& a, std::uint64_t m) {
  BigInt r0(m), r1 = a % BigInt(m), x0 = 0, x1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt x2 = x0 - q * x1;
    r0 = r1; r1 = r2; x0 = x1; x1 = x2;
  }
  if (r0 != 1) return a;  // not a unit: MathComp convention x^-1 = x
  return mod_reduce(x0, m);
}

}  // namespace

std::string semantics_to_string(const Semantics& s) {
  switch (s.kind) {
    case SemKind::integers: return "integers";
    case SemKind::rationals: return "rationals";
    case SemKind::modular: return "modular(" + std::to_string(s.modulus) + ")";
    case SemKind::opaque: return "opaque";
  }
  return "?";
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::KindSemanticsMismatch: return "KindSemanticsMismatch";
    case ErrorCode::NoInstance: return "NoInstance";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::StructureLawViolation: return "StructureLawViolation";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCarrier: return "UnknownCarrier";
    case ErrorCode::UnknownHom: return "UnknownHom";
    case ErrorCode::OpaqueCarrier: return "OpaqueCarrier";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

Value Value::integer(BigInt v) {
  Value r;
  r.sem_ = {SemKind::integers, 0};
  r.z_ = std::move(v);
  return r;
}

Value Value::rational(BigRat v) {
  Value r;
  r.sem_ = {SemKind::rationals, 0};
  r.q_ = std::move(v);
  return r;
}

Value Value::modular(BigInt v, std::uint64_t m) {
  Value r;
  r.sem_ = {SemKind::modular, m};
  r.z_ = mod_reduce(std::move(v), m);
  return r;
}

bool Value::operator==(const Value& other) const {
  if (!(sem_ == other.sem_)) return false;
  if (sem_.kind == SemKind::rationals) return q_ == other.q_;
  return z_ == other.z_;
}

std::string Value::str() const {
  switch (sem_.kind) {
    case SemKind::integers: return z_.str();
    case SemKind::rationals: return q_.str();
    case SemKind::modular: return z_.str() + " (mod " + std::to_string(sem_.modulus) + ")";
    case SemKind::opaque: return "<opaque>";
  }
  return "?";
}

Value v_zero(const Semantics& s) {
  switch (s.kind) {
    case SemKind::integers: return Value::integer(0);
    case SemKind::rationals: return Value::rational(0);
    case SemKind::modular: return Value::modular(0, s.modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable zero");
}

Value v_one(const Semantics& s) {
  switch (s.kind) {
    case SemKind::integers: return Value::integer(1);
    case SemKind::rationals: return Value::rational(1);
    case SemKind::modular: return Value::modular(1, s.modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable one");
}

Value v_add(const Value& a, const Value& b) {
  require_same(a, b);
  bump(a.sem());
  switch (a.sem().kind) {
    case SemKind::integers: return Value::integer(a.as_int() + b.as_int());
    case SemKind::rationals: return Value::rational(a.as_rat() + b.as_rat());
    case SemKind::modular: return Value::modular(a.as_int() + b.as_int(), a.sem().modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable add");
}

Value v_opp(const Value& a) {
  bump(a.sem());
  switch (a.sem().kind) {
    case SemKind::integers: return Value::integer(-a.as_int());
    case SemKind::rationals: return Value::rational(-a.as_rat());
    case SemKind::modular: return Value::modular(-a.as_int(), a.sem().modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable opp");
}

Value v_sub(const Value& a, const Value& b) { return v_add(a, v_opp(b)); }

Value v_mul(const Value& a, const Value& b) {
  require_same(a, b);
  bump(a.sem());
  switch (a.sem().kind) {
    case SemKind::integers: return Value::integer(a.as_int() * b.as_int());
    case SemKind::rationals: return Value::rational(a.as_rat() * b.as_rat());
    case SemKind::modular: return Value::modular(a.as_int() * b.as_int(), a.sem().modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable mul");
}

Value v_inv(const Value& a) {
  bump(a.sem());
  switch (a.sem().kind) {
    case SemKind::integers:
      // units of the integers invert to themselves; everything else is fixed
      return a;
    case SemKind::rationals:
      if (a.as_rat() == 0) return a;
      return Value::rational(1 / a.as_rat());
    case SemKind::modular:
      if (a.as_int() == 0) return a;
      return Value::modular(mod_inverse_or_self(a.as_int(), a.sem().modulus), a.sem().modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable inv");
}

Value v_natmul(const Value& a, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "natmul with negative count");
  bump(a.sem());
  switch (a.sem().kind) {
    case SemKind::integers: return Value::integer(a.as_int() * n);
    case SemKind::rationals: return Value::rational(a.as_rat() * BigRat(n));
    case SemKind::modular: return Value::modular(a.as_int() * n, a.sem().modulus);
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "no executable natmul");
}

Value v_intmul(const Value& a, const BigInt& n) {
  if (n < 0) return v_opp(v_natmul(a, -n));
  return v_natmul(a, n);
}

Value v_pow_nat(const Value& a, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "pow with negative exponent");
  Value acc = v_one(a.sem());
  Value base = a;
  BigInt e = n;
  while (e > 0) {
    if ((e & 1) != 0) acc = v_mul(acc, base);
    e >>= 1;
    if (e > 0) base = v_mul(base, base);
  }
  return acc;
}

Value v_embed_int(const Semantics& s, const BigInt& k) { return v_intmul(v_one(s), k); }

Value v_zpow(const Value& a, const BigInt& k) {
  if (k < 0) return v_zero(a.sem());
  return v_pow_nat(a, k);
}

Value v_sample(const Semantics& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> small(-50, 50);
  switch (s.kind) {
    case SemKind::integers: return Value::integer(small(rng));
    case SemKind::rationals: {
      long long num = small(rng);
      long long den = 0;
      while (den == 0) den = small(rng);
      return Value::rational(BigRat(num, den));
    }
    case SemKind::modular: {
      std::uniform_int_distribution<std::uint64_t> d(0, s.modulus - 1);
      return Value::modular(BigInt(d(rng)), s.modulus);
    }
    case SemKind::opaque: break;
  }
  throw Error(ErrorCode::OpaqueCarrier, "cannot sample an opaque carrier");
}

void op_counter_reset() { g_op_counts = {}; }

std::uint64_t op_counter(SemKind k) { return g_op_counts[static_cast<std::size_t>(k)]; }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1;
    a %= m;
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return acc;
  };
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace ringdec
