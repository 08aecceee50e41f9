#include "tttest/hypothesis.hpp"

#include <json.hpp>

namespace ttt {

std::string to_json(const TestReport& report, int indent) {
    nlohmann::ordered_json j;
    j["test"] = to_string(report.test);
    if (report.r.is_infinite()) {
        j["r"] = "inf";
    } else {
        j["r"] = report.r.order();
    }
    j["alpha"] = report.alpha;
    j["n"] = report.n;
    j["m"] = report.m ? nlohmann::ordered_json(*report.m) : nlohmann::ordered_json(nullptr);
    j["statistic"] = report.statistic;
    j["scaled_statistic"] = report.scaled_statistic;
    j["p_value"] = report.p_value;
    j["reject"] = report.reject;
    j["K"] = report.replications;
    j["seed"] = report.seed;
    j["scheme"] = to_string(report.scheme);
    j["kind"] = to_string(report.kind);
    j["replicates"] = {{"min", report.replicates.min},
                       {"median", report.replicates.median},
                       {"max", report.replicates.max}};
    return j.dump(indent);
}

}  // namespace ttt
