// Carrier registry: declared types, their structure instances arranged in a
// fixed nine-kind inheritance DAG, instance paths modulo forgetful aliasing,
// and homomorphisms with executable semantics.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringdec/value.hpp"

namespace ringdec::carriers {

enum class StructureKind : std::uint8_t {
  eqType,
  zmodType,
  ringType,
  comRingType,
  unitRingType,
  comUnitRingType,
  fieldType,
  numDomainType,
  numFieldType,
};

constexpr int kKindCount = 9;

const char* kind_name(StructureKind k);
std::optional<StructureKind> kind_from_name(const std::string& name);

// Direct superclasses (the structures a kind extends).
const std::vector<StructureKind>& direct_supers(StructureKind k);
// Reflexive-transitive inheritance: true iff `derived` inherits from `ancestor`.
bool inherits(StructureKind derived, StructureKind ancestor);

struct CarrierId {
  std::uint32_t idx = UINT32_MAX;
  bool valid() const { return idx != UINT32_MAX; }
  bool operator==(const CarrierId&) const = default;
};

// A structure instance reached from a carrier's declared kind through a chain
// of explicit subtyping projections (each step erases to a direct superclass).
struct InstancePath {
  CarrierId base;
  StructureKind declared{};
  std::vector<StructureKind> projections;  // outermost first; may be empty

  StructureKind final_kind() const {
    return projections.empty() ? declared : projections.back();
  }
  std::string str(const class Registry& reg) const;
};

// Forgetful inheritance: projections only erase, so (base, final kind) is a
// complete equality key.
bool instances_equal(const InstancePath& a, const InstancePath& b);

enum class HomKind : std::uint8_t { additive, rmorphism };

struct Hom {
  std::string name;
  HomKind kind = HomKind::additive;
  CarrierId dom, cod;
  std::function<Value(const Value&)> fn;  // absent when a carrier is opaque
  bool executable = false;
  std::vector<std::string> components;  // singleton for declared homs

  Value apply(const Value& v) const {
    if (!executable) throw Error(ErrorCode::OpaqueCarrier, "hom '" + name + "' has no semantics");
    return fn(v);
  }
};

struct Carrier {
  std::string name;
  StructureKind kind{};
  Semantics sem;
};

class Registry {
 public:
  CarrierId declare_carrier(const std::string& name, StructureKind kind, Semantics sem);
  const Hom& declare_hom(const std::string& name, HomKind kind, CarrierId dom, CarrierId cod,
                         std::function<Value(const Value&)> fn, bool executable);
  // Builtin semantics from the theory file grammar: embed | scale k | mod m | opaque.
  const Hom& declare_hom_builtin(const std::string& name, HomKind kind, CarrierId dom,
                                 CarrierId cod, const std::string& spec);

  InstancePath resolve_instance(CarrierId c, StructureKind kind) const;
  // Alternate chain to the same kind (different projection route when the DAG
  // offers one); instances_equal to the canonical path.
  InstancePath resolve_instance_alt(CarrierId c, StructureKind kind) const;
  bool has_instance(CarrierId c, StructureKind kind) const;

  Hom hom_compose(const Hom& outer, const Hom& inner) const;
  Hom identity_hom(CarrierId c) const;

  std::optional<CarrierId> find_carrier(const std::string& name) const;
  const Carrier& carrier(CarrierId id) const;
  const Hom* find_hom(const std::string& name) const;
  const std::vector<Carrier>& all_carriers() const { return carriers_; }
  const std::vector<Hom>& all_homs() const { return homs_; }

  // First-declared integers-semantics carrier; the home of embedded integer
  // subexpressions.
  std::optional<CarrierId> integer_carrier() const;

  // Configuration phase ends here; afterwards the registry is immutable and
  // safe for concurrent read-only use.
  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  void load_theory(const std::string& text);
  void load_theory_file(const std::string& path);

 private:
  void check_mutable() const;
  std::vector<Carrier> carriers_;
  std::vector<Hom> homs_;
  bool frozen_ = false;
};

}  // namespace ringdec::carriers
