#include "aut120/report.hpp"

#include <sstream>

namespace aut120 {

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::ArithmeticCheck: return "arithmetic-check";
        case StepKind::RelationImplied: return "relation-implied";
        case StepKind::FiniteEnumeration: return "finite-enumeration";
        case StepKind::CitedFact: return "cited-fact";
    }
    return "?";
}

std::string to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Verified: return "VERIFIED";
        case StepStatus::Cited: return "CITED";
        case StepStatus::Failed: return "FAILED";
    }
    return "?";
}

bool Report::pass() const {
    for (const auto& st : steps) {
        if (st.status == StepStatus::Failed) return false;
    }
    return true;
}

std::string Report::machine_format() const {
    std::ostringstream out;
    for (const auto& st : steps) {
        nlohmann::ordered_json rec;
        rec["pipeline"] = pipeline_id;
        rec["step"] = st.id;
        rec["kind"] = to_string(st.kind);
        rec["status"] = to_string(st.status);
        rec["description"] = st.description;
        if (!st.citation.empty()) rec["citation"] = st.citation;
        if (!st.payload.is_null()) rec["payload"] = st.payload;
        out << rec.dump() << "\n";
    }
    nlohmann::ordered_json verdict;
    verdict["pipeline"] = pipeline_id;
    verdict["verdict"] = pass() ? "PASS" : "FAIL";
    verdict["engine"] = engine_version;
    out << verdict.dump() << "\n";
    return out.str();
}

std::string Report::text_format() const {
    std::ostringstream out;
    out << "== " << pipeline_id << ": " << title << "\n";
    for (const auto& st : steps) {
        const char* mark = st.status == StepStatus::Verified ? "ok  "
                           : st.status == StepStatus::Cited  ? "cite"
                                                             : "FAIL";
        out << "  [" << mark << "] " << st.id << ": " << st.description;
        if (!st.citation.empty()) out << "  (" << st.citation << ")";
        out << "\n";
        if (st.status == StepStatus::Failed && st.payload.contains("failure"))
            out << "         " << st.payload["failure"].get<std::string>() << "\n";
    }
    out << "  verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string machine_format(const std::vector<Report>& reports) {
    std::string out;
    for (const auto& r : reports) out += r.machine_format();
    return out;
}

std::string text_format(const std::vector<Report>& reports) {
    std::string out;
    bool all = true;
    for (const auto& r : reports) {
        out += r.text_format();
        out += "\n";
        all = all && r.pass();
    }
    out += all ? "all pipelines PASS\n" : "some pipelines FAILED\n";
    return out;
}

}  // namespace aut120
