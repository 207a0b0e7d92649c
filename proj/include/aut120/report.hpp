#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace aut120 {

enum class StepKind { ArithmeticCheck, RelationImplied, FiniteEnumeration, CitedFact };
enum class StepStatus { Verified, Cited, Failed };

std::string to_string(StepKind k);
std::string to_string(StepStatus s);

struct ReplayStep {
    StepKind kind = StepKind::ArithmeticCheck;
    std::string id;
    std::string description;
    std::string citation;
    StepStatus status = StepStatus::Failed;
    nlohmann::ordered_json payload;  // exact integers carried as decimal strings
};

struct Report {
    std::string pipeline_id;
    std::string title;
    std::vector<ReplayStep> steps;
    std::string engine_version;
    double seconds = 0;  // informational; never serialized

    bool pass() const;
    // one JSON record per step, line-delimited
    std::string machine_format() const;
    std::string text_format() const;
};

std::string machine_format(const std::vector<Report>& reports);
std::string text_format(const std::vector<Report>& reports);

}  // namespace aut120
