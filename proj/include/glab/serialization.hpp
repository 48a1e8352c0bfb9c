#ifndef GLAB_SERIALIZATION_HPP
#define GLAB_SERIALIZATION_HPP

#include <json.hpp>

#include "glab/discretized.hpp"
#include "glab/game_eval.hpp"
#include "glab/report.hpp"
#include "glab/search.hpp"
#include "glab/strip_games.hpp"

namespace glab {

inline void to_json(nlohmann::json& j, const SignFunction1D& f) {
    j = nlohmann::json{{"leading_sign", f.leading_sign()}, {"breakpoints", f.breakpoints()}};
}

inline void from_json(const nlohmann::json& j, SignFunction1D& f) {
    f = SignFunction1D(j.at("leading_sign").get<int>(),
                       j.at("breakpoints").get<std::vector<double>>());
}

inline void to_json(nlohmann::json& j, const BoundChainReport& r) {
    j = nlohmann::json{{"epsilon", r.epsilon},
                       {"val_dr", r.val_dr},
                       {"gap_term", r.gap_term},
                       {"val_eps_upper", r.val_eps_upper},
                       {"kg_lower", r.kg_lower},
                       {"improvement", r.improvement}};
}

inline void to_json(nlohmann::json& j, const WitnessEstimate& w) {
    j = nlohmann::json{{"n", w.n},
                       {"k", w.k},
                       {"samples", w.samples},
                       {"value_mean", w.value_mean},
                       {"value_stderr", w.value_stderr},
                       {"norm_variance", w.norm_variance}};
}

inline void to_json(nlohmann::json& j, const RotationCheck& r) {
    j = nlohmann::json{{"n", r.n},
                       {"k", r.k},
                       {"samples", r.samples},
                       {"val_original", r.original.value},
                       {"err_original", r.original.stderr_value},
                       {"val_rotated", r.rotated.value},
                       {"err_rotated", r.rotated.stderr_value},
                       {"agrees_4_sigma", r.agrees()}};
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"name", r.name},       {"computed", r.computed},
                       {"target", r.target},   {"tolerance", r.tolerance},
                       {"comparison", comparison_label(r.comparison)},
                       {"passed", r.passed},   {"anchor", r.anchor}};
}

inline nlohmann::json search_result_json(const SearchResult& result, const SearchConfig& cfg) {
    return nlohmann::json{{"best_f", result.best_f},
                          {"best_g", result.best_g},
                          {"best_val", result.best_val},
                          {"converged", result.converged},
                          {"config",
                           {{"max_breakpoints_per_function", cfg.max_breakpoints_per_function},
                            {"restarts", cfg.restarts},
                            {"seed", cfg.seed},
                            {"step_tolerance", cfg.step_tolerance},
                            {"value_tolerance", cfg.value_tolerance},
                            {"max_sweeps", cfg.max_sweeps}}}};
}

}  // namespace glab

#endif  // GLAB_SERIALIZATION_HPP
