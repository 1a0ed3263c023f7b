#pragma once

#include <string_view>

#include "json.hpp"
#include "primeap/bounds.hpp"
#include "primeap/empirical.hpp"
#include "primeap/sieve.hpp"
#include "primeap/verifier.hpp"

namespace primeap {

inline constexpr std::string_view version_string = "0.1.0";

inline void to_json(nlohmann::json& j, const search_dim& d) {
    j = {{"name", d.name},
         {"lo", d.lo},
         {"hi", d.hi},
         {"scale", d.scale == axis_scale::log_scale ? "log" : "linear"}};
}

inline void to_json(nlohmann::json& j, const search_domain& d) {
    j = {{"dims", d.dims},
         {"coarse_points_per_dim", d.coarse_points_per_dim},
         {"refine_iters", d.refine_iters},
         {"worst_k", d.worst_k}};
}

inline void to_json(nlohmann::json& j, const verification_report& r) {
    j = {{"lemma_id", r.lemma_id}, {"domain", r.domain},
         {"min_margin", r.min_margin}, {"argmin", r.argmin},
         {"evaluations", r.evaluations}, {"pass", r.pass}};
    if (!r.note.empty()) j["note"] = r.note;
}

inline void to_json(nlohmann::json& j, const reference_record& r) {
    j = {{"label", r.label},   {"computed", r.computed}, {"reference", r.reference},
         {"abs_diff", r.abs_diff}, {"pass", r.pass}};
}

inline void to_json(nlohmann::json& j, const bound_term& t) {
    j = {{"label", t.label}, {"coefficient", t.coefficient}, {"value", t.value}};
}

inline void to_json(nlohmann::json& j, const bound_breakdown& b) {
    j = {{"terms", b.terms}, {"total", b.total}};
}

inline void to_json(nlohmann::json& j, const counts_result& r) {
    j = {{"pi", r.pi}, {"theta", r.theta}, {"psi", r.psi}, {"psi0", r.psi0}};
}

}  // namespace primeap
