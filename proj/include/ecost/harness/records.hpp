#pragma once

#include <chrono>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ecost/harness/config.hpp"
#include "ecost/search/metrics.hpp"

namespace ecost {

inline double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

template <SearchProblem P>
Json incumbent_json(const P& problem, const IncumbentRecord<typename P::Action>& rec, std::size_t index, bool timing) {
    Json plan = Json::array();
    for (const auto& a : rec.plan) plan.push_back(problem.action_label(a));
    Json j{{"type", "incumbent"},
           {"index", index},
           {"cost", rec.cost},
           {"size", rec.size},
           {"expansions", rec.expansions_at_discovery},
           {"plan", std::move(plan)}};
    if (timing) j["wall_ms"] = to_ms(rec.wall_time_at_discovery);
    return j;
}

/// Final per-run summary line. Wall-clock fields appear only when `timing` is set,
/// so that repeated runs produce identical files by default.
inline Json metrics_json(const RunMetrics& m, bool timing) {
    Json profile = Json::array();
    for (const auto& inc : m.anytime_profile) {
        Json p{{"cost", inc.cost}, {"size", inc.size}, {"expansions", inc.expansions_at_discovery}};
        if (timing) p["wall_ms"] = to_ms(inc.wall_time_at_discovery);
        profile.push_back(std::move(p));
    }
    Json j{{"expansions", m.expansions},
           {"generations", m.generations},
           {"re_expansions", m.re_expansions},
           {"ignored_reopenings", m.ignored_reopenings},
           {"duplicates_dropped", m.duplicates_dropped},
           {"pruned_by_bound", m.pruned_by_bound},
           {"skipped_consumed", m.skipped_consumed},
           {"peak_open", m.peak_open},
           {"peak_closed", m.peak_closed},
           {"termination", std::string(to_string(m.termination))},
           {"anytime_profile", std::move(profile)}};
    if (auto d = m.discovery_expansions()) j["discovery_expansions"] = *d;
    else j["discovery_expansions"] = nullptr;
    if (timing) j["wall_ms"] = to_ms(m.wall_time);
    return j;
}

/// Writes one JSON object per line and flushes, so a killed process leaves complete lines.
class JsonLinesWriter {
  public:
    explicit JsonLinesWriter(std::ostream& out) : out_(out) {}

    void write(const Json& j) {
        out_ << j.dump() << '\n';
        out_.flush();
    }

  private:
    std::ostream& out_;
};

}  // namespace ecost
