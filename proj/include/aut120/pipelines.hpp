#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aut120/groups.hpp"
#include "aut120/projection.hpp"
#include "aut120/report.hpp"

namespace aut120 {

// Coefficient perturbation hook for sensitivity tests: adds delta to one
// coefficient (or the constant) of the pinned relation of one step.
struct Mutation {
    std::string step_id;
    std::string var;       // ignored when constant = true
    long delta = 1;
    bool constant = false;
};

struct ReplayOptions {
    std::optional<FactTable> facts;   // default: FactTable::defaults()
    bool no_fpf = false;              // exploratory fix table (2 -> 24)
    std::optional<Mutation> mutation;
};

std::vector<std::string> pipeline_ids();
bool has_pipeline(const std::string& id);

Report replay(const std::string& pipeline_id, const ReplayOptions& opts = {});
std::vector<Report> run_all(const ReplayOptions& opts = {});

// The relation-check steps of a pipeline (pinned coefficient data), for
// sensitivity tests.
struct PinnedRelation {
    std::string step_id;
    std::string system;    // scenario preset or named system
    std::string relation;  // display form
};
std::vector<PinnedRelation> pinned_relations(const std::string& pipeline_id);

}  // namespace aut120
