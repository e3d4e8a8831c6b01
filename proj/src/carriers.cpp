#include "ringdec/carriers.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace ringdec::carriers {

namespace {

using SK = StructureKind;

const std::vector<SK> kEmpty{};

std::uint64_t name_seed(const std::string& s) {
  // FNV-1a; hom law sampling is seeded from the hom name
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const char* kind_name(StructureKind k) {
  switch (k) {
    case SK::eqType: return "eqType";
    case SK::zmodType: return "zmodType";
    case SK::ringType: return "ringType";
    case SK::comRingType: return "comRingType";
    case SK::unitRingType: return "unitRingType";
    case SK::comUnitRingType: return "comUnitRingType";
    case SK::fieldType: return "fieldType";
    case SK::numDomainType: return "numDomainType";
    case SK::numFieldType: return "numFieldType";
  }
  return "?";
}

std::optional<StructureKind> kind_from_name(const std::string& name) {
  for (int i = 0; i < kKindCount; ++i) {
    auto k = static_cast<SK>(i);
    if (name == kind_name(k)) return k;
  }
  return std::nullopt;
}

const std::vector<StructureKind>& direct_supers(StructureKind k) {
  static const std::vector<SK> zmod{SK::eqType};
  static const std::vector<SK> ring{SK::zmodType};
  static const std::vector<SK> com_ring{SK::ringType};
  static const std::vector<SK> unit_ring{SK::ringType};
  static const std::vector<SK> com_unit{SK::comRingType, SK::unitRingType};
  static const std::vector<SK> field{SK::comUnitRingType};
  static const std::vector<SK> num_domain{SK::comUnitRingType};
  static const std::vector<SK> num_field{SK::fieldType, SK::numDomainType};
  switch (k) {
    case SK::eqType: return kEmpty;
    case SK::zmodType: return zmod;
    case SK::ringType: return ring;
    case SK::comRingType: return com_ring;
    case SK::unitRingType: return unit_ring;
    case SK::comUnitRingType: return com_unit;
    case SK::fieldType: return field;
    case SK::numDomainType: return num_domain;
    case SK::numFieldType: return num_field;
  }
  return kEmpty;
}

bool inherits(StructureKind derived, StructureKind ancestor) {
  if (derived == ancestor) return true;
  for (SK s : direct_supers(derived))
    if (inherits(s, ancestor)) return true;
  return false;
}

bool instances_equal(const InstancePath& a, const InstancePath& b) {
  return a.base == b.base && a.final_kind() == b.final_kind();
}

std::string InstancePath::str(const Registry& reg) const {
  std::string s = reg.carrier(base).name;
  s += ":";
  s += kind_name(declared);
  for (SK k : projections) {
    s += ">";
    s += kind_name(k);
  }
  return s;
}

namespace {

// BFS from `from` up the superclass DAG to `to`; `reverse_ties` flips the
// neighbor visit order so a second, aliased chain is found when one exists.
std::optional<std::vector<SK>> shortest_chain(SK from, SK to, bool reverse_ties) {
  if (from == to) return std::vector<SK>{};
  std::deque<SK> queue{from};
  std::array<int, kKindCount> parent;
  parent.fill(-2);
  parent[static_cast<int>(from)] = -1;
  while (!queue.empty()) {
    SK cur = queue.front();
    queue.pop_front();
    auto supers = direct_supers(cur);
    std::vector<SK> order(supers.begin(), supers.end());
    if (reverse_ties) std::reverse(order.begin(), order.end());
    for (SK next : order) {
      if (parent[static_cast<int>(next)] != -2) continue;
      parent[static_cast<int>(next)] = static_cast<int>(cur);
      if (next == to) {
        std::vector<SK> chain;
        for (int at = static_cast<int>(to); at != static_cast<int>(from); at = parent[at])
          chain.push_back(static_cast<SK>(at));
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace

void Registry::check_mutable() const {
  if (frozen_) throw Error(ErrorCode::KindMismatch, "registry is frozen");
}

CarrierId Registry::declare_carrier(const std::string& name, StructureKind kind, Semantics sem) {
  check_mutable();
  if (find_carrier(name)) throw Error(ErrorCode::DuplicateName, "carrier '" + name + "'");
  switch (sem.kind) {
    case SemKind::integers:
      if (inherits(kind, SK::fieldType))
        throw Error(ErrorCode::KindSemanticsMismatch, "the integers are not a field");
      break;
    case SemKind::rationals:
      break;
    case SemKind::modular:
      if (sem.modulus < 2)
        throw Error(ErrorCode::KindSemanticsMismatch, "modulus must be at least 2");
      if (inherits(kind, SK::numDomainType))
        throw Error(ErrorCode::KindSemanticsMismatch, "modular carriers have no order");
      if (inherits(kind, SK::fieldType) && !is_prime_u64(sem.modulus))
        throw Error(ErrorCode::KindSemanticsMismatch,
                    "modular(" + std::to_string(sem.modulus) + ") is a field only for prime moduli");
      break;
    case SemKind::opaque:
      break;
  }
  carriers_.push_back(Carrier{name, kind, sem});
  return CarrierId{static_cast<std::uint32_t>(carriers_.size() - 1)};
}

InstancePath Registry::resolve_instance(CarrierId c, StructureKind kind) const {
  const Carrier& car = carrier(c);
  auto chain = shortest_chain(car.kind, kind, /*reverse_ties=*/false);
  if (!chain)
    throw Error(ErrorCode::NoInstance, "carrier '" + car.name + "' (" +
                                           kind_name(car.kind) + ") has no " + kind_name(kind) +
                                           " instance");
  return InstancePath{c, car.kind, *chain};
}

InstancePath Registry::resolve_instance_alt(CarrierId c, StructureKind kind) const {
  const Carrier& car = carrier(c);
  auto chain = shortest_chain(car.kind, kind, /*reverse_ties=*/true);
  if (!chain)
    throw Error(ErrorCode::NoInstance, "carrier '" + car.name + "' (" +
                                           kind_name(car.kind) + ") has no " + kind_name(kind) +
                                           " instance");
  return InstancePath{c, car.kind, *chain};
}

bool Registry::has_instance(CarrierId c, StructureKind kind) const {
  return inherits(carrier(c).kind, kind);
}

const Hom& Registry::declare_hom(const std::string& name, HomKind kind, CarrierId dom,
                                 CarrierId cod, std::function<Value(const Value&)> fn,
                                 bool executable) {
  check_mutable();
  if (find_hom(name)) throw Error(ErrorCode::DuplicateName, "hom '" + name + "'");
  SK needed = kind == HomKind::rmorphism ? SK::ringType : SK::zmodType;
  if (!has_instance(dom, needed) || !has_instance(cod, needed))
    throw Error(ErrorCode::KindMismatch, "hom '" + name + "' requires " +
                                             std::string(kind_name(needed)) +
                                             " on both carriers");
  const Semantics& dsem = carrier(dom).sem;
  const Semantics& csem = carrier(cod).sem;
  bool exec = executable && dsem.executable() && csem.executable();
  if (exec) {
    // structure-preservation laws, sampled on 100 deterministic points
    std::mt19937_64 rng(name_seed(name));
    Value zero_d = v_zero(dsem), zero_c = v_zero(csem);
    if (!(fn(zero_d) == zero_c))
      throw Error(ErrorCode::StructureLawViolation, "hom '" + name + "' does not map 0 to 0");
    if (kind == HomKind::rmorphism && !(fn(v_one(dsem)) == v_one(csem)))
      throw Error(ErrorCode::StructureLawViolation, "hom '" + name + "' does not map 1 to 1");
    for (int i = 0; i < 100; ++i) {
      Value x = v_sample(dsem, rng), y = v_sample(dsem, rng);
      if (!(fn(v_add(x, y)) == v_add(fn(x), fn(y))))
        throw Error(ErrorCode::StructureLawViolation,
                    "hom '" + name + "' is not additive at " + x.str() + ", " + y.str());
      if (kind == HomKind::rmorphism && !(fn(v_mul(x, y)) == v_mul(fn(x), fn(y))))
        throw Error(ErrorCode::StructureLawViolation,
                    "hom '" + name + "' is not multiplicative at " + x.str() + ", " + y.str());
    }
  }
  homs_.push_back(Hom{name, kind, dom, cod, std::move(fn), exec, {name}});
  return homs_.back();
}

const Hom& Registry::declare_hom_builtin(const std::string& name, HomKind kind, CarrierId dom,
                                         CarrierId cod, const std::string& spec) {
  std::istringstream in(spec);
  std::string head;
  in >> head;
  const Semantics dsem = carrier(dom).sem;
  const Semantics csem = carrier(cod).sem;
  if (head == "opaque") {
    return declare_hom(name, kind, dom, cod, nullptr, false);
  }
  if (head == "embed") {
    if (!dsem.executable() || !csem.executable())
      throw Error(ErrorCode::KindMismatch, "embed requires executable carriers");
    if (dsem.kind != SemKind::integers && !(dsem == csem))
      throw Error(ErrorCode::KindMismatch,
                  "embed is defined for integer domains or identical carriers");
    auto fn = [csem](const Value& v) {
      if (v.sem() == csem) return v;
      return v_intmul(v_one(csem), v.as_int());
    };
    return declare_hom(name, kind, dom, cod, fn, true);
  }
  if (head == "scale") {
    long long k = 0;
    if (!(in >> k)) throw Error(ErrorCode::KindMismatch, "scale needs an integer factor");
    if (!dsem.executable() || !csem.executable())
      throw Error(ErrorCode::KindMismatch, "scale requires executable carriers");
    bool embeddable = dsem == csem || dsem.kind == SemKind::integers;
    if (!embeddable)
      throw Error(ErrorCode::KindMismatch, "scale is defined over an embeddable domain");
    auto fn = [csem, k](const Value& v) {
      Value w = v.sem() == csem ? v : v_intmul(v_one(csem), v.as_int());
      return v_intmul(w, BigInt(k));
    };
    return declare_hom(name, kind, dom, cod, fn, true);
  }
  if (head == "mod") {
    std::uint64_t m = 0;
    if (!(in >> m)) throw Error(ErrorCode::KindMismatch, "mod needs a modulus");
    if (dsem.kind != SemKind::integers || csem.kind != SemKind::modular || csem.modulus != m)
      throw Error(ErrorCode::KindMismatch, "mod " + std::to_string(m) +
                                               " maps an integer carrier onto modular(" +
                                               std::to_string(m) + ")");
    auto fn = [m](const Value& v) { return Value::modular(v.as_int(), m); };
    return declare_hom(name, kind, dom, cod, fn, true);
  }
  throw Error(ErrorCode::KindMismatch, "unknown hom builtin '" + head + "'");
}

Hom Registry::hom_compose(const Hom& outer, const Hom& inner) const {
  if (!(inner.cod == outer.dom))
    throw Error(ErrorCode::DomainMismatch, "composing " + outer.name + " after " + inner.name);
  Hom h;
  h.name = outer.name + "\\o " + inner.name;
  h.kind = (outer.kind == HomKind::rmorphism && inner.kind == HomKind::rmorphism)
               ? HomKind::rmorphism
               : HomKind::additive;
  h.dom = inner.dom;
  h.cod = outer.cod;
  h.executable = outer.executable && inner.executable;
  if (h.executable) {
    auto f = outer.fn, g = inner.fn;
    h.fn = [f, g](const Value& v) { return f(g(v)); };
  }
  h.components = outer.components;
  h.components.insert(h.components.end(), inner.components.begin(), inner.components.end());
  return h;
}

Hom Registry::identity_hom(CarrierId c) const {
  Hom h;
  h.name = "id_" + carrier(c).name;
  h.kind = has_instance(c, SK::ringType) ? HomKind::rmorphism : HomKind::additive;
  h.dom = h.cod = c;
  h.executable = carrier(c).sem.executable();
  if (h.executable) h.fn = [](const Value& v) { return v; };
  h.components = {h.name};
  return h;
}

std::optional<CarrierId> Registry::find_carrier(const std::string& name) const {
  for (std::uint32_t i = 0; i < carriers_.size(); ++i)
    if (carriers_[i].name == name) return CarrierId{i};
  return std::nullopt;
}

const Carrier& Registry::carrier(CarrierId id) const {
  if (!id.valid() || id.idx >= carriers_.size())
    throw Error(ErrorCode::UnknownCarrier, "invalid carrier id");
  return carriers_[id.idx];
}

const Hom* Registry::find_hom(const std::string& name) const {
  for (const Hom& h : homs_)
    if (h.name == name) return &h;
  return nullptr;
}

std::optional<CarrierId> Registry::integer_carrier() const {
  for (std::uint32_t i = 0; i < carriers_.size(); ++i)
    if (carriers_[i].sem.kind == SemKind::integers) return CarrierId{i};
  return std::nullopt;
}

namespace {

Semantics parse_semantics(const std::string& text) {
  if (text == "integers") return {SemKind::integers, 0};
  if (text == "rationals") return {SemKind::rationals, 0};
  if (text == "opaque") return {SemKind::opaque, 0};
  if (text.rfind("modular", 0) == 0) {
    std::string rest = text.substr(7);
    for (char strip : {'(', ')', ' '}) rest.erase(std::remove(rest.begin(), rest.end(), strip), rest.end());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::KindSemanticsMismatch, "bad modulus in '" + text + "'");
    return {SemKind::modular, std::stoull(rest)};
  }
  throw Error(ErrorCode::KindSemanticsMismatch, "unknown semantics '" + text + "'");
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

void Registry::load_theory(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string decl;
    ls >> decl;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::SyntaxError,
                  "theory line " + std::to_string(lineno) + ": " + what + " in '" + line + "'");
    };
    if (decl == "carrier") {
      // carrier <name> : <kind> = <semantics>
      std::string name, colon, kind_s, eq;
      if (!(ls >> name >> colon >> kind_s >> eq) || colon != ":" || eq != "=")
        fail("expected 'carrier <name> : <kind> = <semantics>'");
      std::string sem_s;
      std::getline(ls, sem_s);
      sem_s = strip(sem_s);
      auto kind = kind_from_name(kind_s);
      if (!kind) fail("unknown structure kind '" + kind_s + "'");
      declare_carrier(name, *kind, parse_semantics(sem_s));
    } else if (decl == "hom") {
      // hom <name> : <kind> <dom> -> <cod> = <builtin-fn-spec>
      std::string name, colon, kind_s, dom_s, arrow, cod_s, eq;
      if (!(ls >> name >> colon >> kind_s >> dom_s >> arrow >> cod_s >> eq) || colon != ":" ||
          arrow != "->" || eq != "=")
        fail("expected 'hom <name> : <kind> <dom> -> <cod> = <spec>'");
      std::string spec;
      std::getline(ls, spec);
      spec = strip(spec);
      HomKind hk;
      if (kind_s == "additive") hk = HomKind::additive;
      else if (kind_s == "rmorphism") hk = HomKind::rmorphism;
      else { fail("unknown hom kind '" + kind_s + "'"); return; }
      auto dom = find_carrier(dom_s);
      if (!dom) throw Error(ErrorCode::UnknownCarrier, "'" + dom_s + "'");
      auto cod = find_carrier(cod_s);
      if (!cod) throw Error(ErrorCode::UnknownCarrier, "'" + cod_s + "'");
      declare_hom_builtin(name, hk, *dom, *cod, spec);
    } else {
      fail("unknown declaration '" + decl + "'");
    }
  }
}

void Registry::load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open theory file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load_theory(buf.str());
}

}  // namespace ringdec::carriers
