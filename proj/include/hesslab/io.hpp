// JSON serialization for the library's value types (nlohmann::json).
#pragma once

#include <json.hpp>

#include "hesslab/hessenberg.hpp"
#include "hesslab/monodromy.hpp"
#include "hesslab/orbits.hpp"
#include "hesslab/partition.hpp"
#include "hesslab/poincare.hpp"
#include "hesslab/springer.hpp"

namespace hesslab {

using json = nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = p.parts(); }

inline void to_json(json& j, const OrbitDescriptor& d) {
  j = json{{"partition", d.partition},
           {"dim", d.dim},
           {"parity", to_string(d.parity)},
           {"order3", d.order3},
           {"gaps", d.gaps}};
}

inline void to_json(json& j, const LocalSystemLabel& l) {
  j = json{{"kind", to_string(l.kind)}, {"orbit", l.orbit}};
}

inline void to_json(json& j, const PoincarePolynomial& p) {
  std::vector<std::string> coeffs;
  for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
  j = json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

inline void to_json(json& j, const MonoLabel& l) {
  j = json{{"family", l.family == MonoFamily::E ? "E" : "Etilde"},
           {"i", l.i},
           {"j", l.j},
           {"dim", l.dim.str()}};
}

inline void to_json(json& j, const DecompositionTable& t) {
  j = json{{"source", t.source},
           {"N", t.N},
           {"summands", t.summands},
           {"total", t.total_dim.str()}};
}

inline void to_json(json& j, const Identification& id) {
  j = json{{"lhs", id.lhs.to_string()},
           {"rhs", id.rhs.to_string()},
           {"dim", id.lhs.dim.str()}};
}

inline void to_json(json& j, const FourierImage& m) {
  j = json{{"source", m.source}, {"status", to_string(m.status)}};
  if (m.status == FourierStatus::Unknown) {
    j["orbit"] = nullptr;
    j["system"] = nullptr;
  } else {
    j["orbit"] = m.orbit;
    j["system"] = to_string(m.system.kind);
  }
}

inline void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name},
           {"status", c.pass ? "pass" : "fail"},
           {"lhs", c.lhs},
           {"rhs", c.rhs}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

inline void to_json(json& j, const SpringerReport& r) {
  j = json{{"n", r.n}, {"checks", r.checks}, {"map", r.map}};
}

}  // namespace hesslab
