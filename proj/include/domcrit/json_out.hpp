#pragma once

#include <json.hpp>

#include "domcrit/census.hpp"
#include "domcrit/coalescence.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/partition.hpp"
#include "domcrit/sweeps.hpp"
#include "domcrit/vertex_set.hpp"

// ADL hooks so nlohmann::json can serialize every report type.  Vertex
// sets render as sorted id arrays; empty lists render as [].

namespace domcrit {

inline void to_json(nlohmann::json& j, const VertexSet& s) {
  j = s.to_vector();
}

inline void to_json(nlohmann::json& j, const GammaCertificate& c) {
  j = {{"gamma", c.gamma}, {"witness", c.witness}};
}

inline void to_json(nlohmann::json& j, const MdsEnumeration& e) {
  j = {{"sets", e.sets}, {"truncated", e.truncated}};
}

inline void to_json(nlohmann::json& j, const StCriticalCertificate& c) {
  j = {{"set", c.set}, {"witness", c.witness}};
}

inline void to_json(nlohmann::json& j, const CompatibilityVerdict& v) {
  j = {{"x", v.x},
       {"y", v.y},
       {"compatible", v.compatible},
       {"witness", v.witness}};
}

inline void to_json(nlohmann::json& j, const TwoColoredGammaSet& t) {
  j = {{"d1", t.d1}, {"d2", t.d2}};
}

inline void to_json(nlohmann::json& j, const AuditViolation& v) {
  j = {{"rule", v.rule}, {"tuple", v.tuple}};
}

inline void to_json(nlohmann::json& j, const StructuralAudit& a) {
  j = {{"checks", a.checks},
       {"violations", a.violations},
       {"passed", a.passed()}};
}

inline void to_json(nlohmann::json& j, const StCriticalPartition& p) {
  j = {{"parts", p.parts}};
}

inline void to_json(nlohmann::json& j, const SequenceReport& r) {
  j = {{"achievable_l", r.achievable_l}, {"sequences", r.sequences}};
}

inline void to_json(nlohmann::json& j, const CensusHit& h) {
  j = {{"g6", h.g6}, {"finding", h.finding}};
}

inline void to_json(nlohmann::json& j, const CensusReport& r) {
  j = {{"check", r.check},
       {"n_range", {r.n_min, r.n_max}},
       {"examined", r.examined},
       {"hits", r.hits},
       {"elapsed_ms", r.elapsed_ms},
       {"verdict", to_string(r.verdict)},
       {"note", r.note}};
}

inline void to_json(nlohmann::json& j, const SweepReport& r) {
  j = {{"name", r.name},
       {"cases", r.cases},
       {"violations", r.violations},
       {"details", r.details},
       {"elapsed_ms", r.elapsed_ms},
       {"passed", r.passed()}};
}

inline void to_json(nlohmann::json& j, const SetCoalescenceCheck& c) {
  j = {{"gamma_g", c.gamma_g},
       {"gamma_h", c.gamma_h},
       {"gamma_coalesced", c.gamma_coalesced},
       {"merged_size", c.merged_size},
       {"lower_bound_ok", c.lower_bound_ok},
       {"upper_bound_ok", c.upper_bound_ok},
       {"x_critical_in_g", c.x_critical_in_g},
       {"y_critical_in_h", c.y_critical_in_h},
       {"x_critical_in_coalesced", c.x_critical_in_coalesced},
       {"iff_ok", c.iff_ok},
       {"equality_applicable", c.equality_applicable},
       {"equality_ok", c.equality_ok},
       {"all_ok", c.all_ok()}};
}

inline void to_json(nlohmann::json& j, const PartitionMergeCheck& c) {
  j = {{"g_structure_ok", c.g_structure_ok},
       {"h_structure_ok", c.h_structure_ok},
       {"g_parts_critical", c.g_parts_critical},
       {"h_parts_critical", c.h_parts_critical},
       {"merged_structure_ok", c.merged_structure_ok},
       {"merged_parts_critical", c.merged_parts_critical},
       {"merged_part_count", c.merged_part_count},
       {"left_side", c.left_side()},
       {"right_side", c.right_side()},
       {"biconditional_ok", c.biconditional_ok}};
}

}  // namespace domcrit
