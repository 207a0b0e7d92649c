#pragma once

#include <string>

#include "aut120/groups.hpp"
#include "aut120/projection.hpp"

namespace aut120 {

// Line-oriented text format shared by scenario and fact files.
//
//   [model]
//   type = 3-(34;18)
//   ambient_d = 24
//   k2 = 0
//   symmetry = on
//   marginals = on
//
//   [assume]
//   dual_distance_min 3 ; odd-pair parity exclusion
//
//   [zero]
//   5 3 extra
//
//   [fact]
//   no-order-38 ; [BW] ; no element of order 38
//
// A fact file is the same format carrying only [fact] sections.

ConstraintScenario scenario_from_text(const std::string& text);
ConstraintScenario scenario_from_file(const std::string& path);
std::string scenario_to_text(const ConstraintScenario& s);

FactTable facts_from_text(const std::string& text);
FactTable facts_from_file(const std::string& path);
std::string facts_to_text(const FactTable& t);

}  // namespace aut120
