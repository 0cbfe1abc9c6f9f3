#include "prodembed/report.hpp"

namespace prodembed {

Json report_shell(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kToolkitVersion;
    j["command"] = command;
    return j;
}

std::string sphere_text(const JoinSphere& s) {
    static const char letters[] = {'A', 'B', 'C', 'D'};
    std::string out = "[";
    for (std::size_t k = 0; k < s.selections.size(); ++k) {
        if (k) out += ' ';
        out += letters[s.selections[k][0]];
        out += letters[s.selections[k][1]];
    }
    return out + "]";
}

Json sphere_json(const JoinSphere& s) {
    static const char letters[] = {'A', 'B', 'C', 'D'};
    Json arr = Json::array();
    for (const auto& sel : s.selections)
        arr.push_back(std::string{letters[sel[0]], letters[sel[1]]});
    return arr;
}

Json dimension_json(const DimensionResult& r) {
    Json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["i"] = r.i;
    j["case"] = r.formula_case;
    j["dim"] = r.dim;
    return j;
}

Json obstruction_json(const ObstructionReport& r) {
    Json j;
    j["n"] = r.n;
    j["base"] = r.base_labels;
    j["pairs_examined"] = r.pairs_examined;
    Json linked = Json::array();
    for (const auto& p : r.linked) {
        Json lp;
        lp["alpha"] = sphere_json(p.alpha);
        lp["beta"] = sphere_json(p.beta);
        linked.push_back(std::move(lp));
    }
    j["linked"] = std::move(linked);
    j["v"] = r.v.value();
    return j;
}

Json campaign_json(const CampaignResult& r) {
    Json j;
    j["kind"] = campaign_kind_name(r.kind);
    if (r.kind != CampaignKind::ConwayGordonK6)
        j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["linked_trials"] = r.linked_trials;
    Json hist = Json::object();
    for (const auto& [value, count] : r.v_histogram)
        hist[std::to_string(value)] = count;
    j["parity_histogram"] = std::move(hist);
    j["failing_seeds"] = r.failing_seeds;
    j["degenerate_seeds"] = r.degenerate_seeds;
    j["success"] = r.success;
    return j;
}

Json vanishing_json(const VanishingResult& r) {
    Json j;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["polygon_failing_seeds"] = r.polygon_failing_seeds;
    j["torus_failing_seeds"] = r.torus_failing_seeds;
    j["degenerate_seeds"] = r.degenerate_seeds;
    j["success"] = r.success;
    return j;
}

} // namespace prodembed
