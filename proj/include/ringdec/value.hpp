// Executable carrier elements: integers, rationals, and modular residues.
// Every arithmetic op bumps a per-domain counter so tests can assert that the
// decision pipeline never computes in a carrier.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ringdec/bigint.hpp"
#include "ringdec/error.hpp"

namespace ringdec {

enum class SemKind : std::uint8_t { integers, rationals, modular, opaque };

struct Semantics {
  SemKind kind = SemKind::opaque;
  std::uint64_t modulus = 0;  // set iff kind == modular

  bool executable() const { return kind != SemKind::opaque; }
  bool operator==(const Semantics&) const = default;
};

std::string semantics_to_string(const Semantics& s);

class Value {
 public:
  Value() = default;
  static Value integer(BigInt v);
  static Value rational(BigRat v);
  static Value modular(BigInt v, std::uint64_t m);  // reduces v mod m

  const Semantics& sem() const { return sem_; }
  const BigInt& as_int() const { return z_; }
  const BigRat& as_rat() const { return q_; }

  bool operator==(const Value& other) const;
  std::string str() const;

 private:
  Semantics sem_;
  BigInt z_;  // integers and modular
  BigRat q_;  // rationals
};

// Carrier operations. All are total; inv follows the MathComp conventions
// (0^-1 = 0 in fields, non-units map to themselves elsewhere).
Value v_zero(const Semantics& s);
Value v_one(const Semantics& s);
Value v_add(const Value& a, const Value& b);
Value v_opp(const Value& a);
Value v_sub(const Value& a, const Value& b);
Value v_mul(const Value& a, const Value& b);
Value v_inv(const Value& a);
Value v_natmul(const Value& a, const BigInt& n);   // n >= 0
Value v_intmul(const Value& a, const BigInt& n);
Value v_pow_nat(const Value& a, const BigInt& n);  // n >= 0
Value v_embed_int(const Semantics& s, const BigInt& k);  // k%:~R
Value v_zpow(const Value& a, const BigInt& k);     // binary-integer power: negative -> 0

// Deterministic sampling for property checks.
Value v_sample(const Semantics& s, std::mt19937_64& rng);

// Operation counters, indexed by SemKind; reset/read around a solve to verify
// evaluation-freeness.
void op_counter_reset();
std::uint64_t op_counter(SemKind k);

bool is_prime_u64(std::uint64_t n);

}  // namespace ringdec
