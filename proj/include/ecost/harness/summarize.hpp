#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ecost/harness/config.hpp"

namespace ecost {

inline constexpr const char* kSummaryHeader =
    "config_hash,domain,instance,evaluator,discovery_expansions,proof_expansions,best_cost,termination";

struct SummaryRow {
    std::string config_hash;
    std::string domain;
    std::string instance;
    std::string evaluator;
    std::string discovery_expansions;  // empty when no solution was found
    std::string proof_expansions;      // empty unless optimality was proved
    std::string best_cost;
    std::string termination;
};

/// Builds a row from a metrics line; throws on missing or mistyped fields.
inline SummaryRow summary_row(const Json& m) {
    auto text = [&](const char* key) { return m.at(key).get<std::string>(); };
    auto count = [&](const char* key) { return m.at(key).is_null() ? std::string() : std::to_string(m.at(key).get<std::int64_t>()); };
    SummaryRow r{text("config_hash"), text("domain"), text("instance"), text("evaluator"),
                 count("discovery_expansions"), "", count("best_cost"), text("termination")};
    if (r.termination == "proved" || r.termination == "exhausted-unsolvable")
        r.proof_expansions = std::to_string(m.at("expansions").get<std::int64_t>());
    return r;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

/// Reads the metrics line of each run file. Unreadable or malformed files are skipped with a warning.
inline std::vector<SummaryRow> collect_summary_rows(const std::vector<std::string>& files, std::ostream& warnings) {
    std::vector<SummaryRow> rows;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) {
            warnings << "warning: cannot open " << path << ", skipped\n";
            continue;
        }
        std::vector<SummaryRow> found;
        std::string line;
        std::size_t line_no = 0;
        bool bad = false;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            try {
                auto j = Json::parse(line);
                if (j.value("type", "") == "metrics") found.push_back(summary_row(j));
            } catch (const std::exception& e) {
                warnings << "warning: " << path << ":" << line_no << ": " << e.what() << ", file skipped\n";
                bad = true;
                break;
            }
        }
        if (bad) continue;
        if (found.empty()) {
            warnings << "warning: " << path << " has no metrics line, skipped\n";
            continue;
        }
        rows.insert(rows.end(), found.begin(), found.end());
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return std::tie(a.domain, a.config_hash) < std::tie(b.domain, b.config_hash);
    });
    return rows;
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << kSummaryHeader << '\n';
    for (const auto& r : rows)
        out << csv_field(r.config_hash) << ',' << csv_field(r.domain) << ',' << csv_field(r.instance) << ','
            << csv_field(r.evaluator) << ',' << r.discovery_expansions << ',' << r.proof_expansions << ','
            << r.best_cost << ',' << csv_field(r.termination) << '\n';
}

}  // namespace ecost
