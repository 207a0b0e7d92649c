#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aut120/feasibility.hpp"

namespace aut120 {

// Mallows-Sloane / Rains bound for a self-dual code of even length n.
int extremal_distance(int n);

// Automorphism cycle type: prime p-(c; f) or composite p*r-(s1, s2, s3; f).
struct CycleType {
    enum class Kind { Prime, Composite };
    Kind kind = Kind::Prime;
    int p = 0, c = 0, f = 0;          // prime
    int r = 0, s1 = 0, s2 = 0, s3 = 0;  // composite (p < r)

    static CycleType prime(int p, int c, int f);
    static CycleType composite(int p, int r, int s1, int s2, int s3, int f);
    int order() const { return kind == Kind::Prime ? p : p * r; }
    std::string to_string() const;
    bool operator==(const CycleType& o) const = default;
};

// Allowed prime cycle types at n = 120 (fixed-point rows for p = 3 removed:
// order-3 automorphisms act fixed point freely). Shipped as data; the
// derivation is inherited from the cited cycle-structure table.
const std::map<int, std::vector<std::pair<int, int>>>& prime_type_table();

// The same table before the order-3 sharpening (all five 3-rows).
const std::map<int, std::vector<std::pair<int, int>>>& prime_type_table_base();

bool validate_prime_type(int p, int c, int f);

// Weight of the preimage in the ambient code of a projected word with split
// weight (x, y): p*x + y.
int lifted_weight(int x, int y, int p);

// pi(F_sigma(C)) for a prime cycle type: a self-dual [c+f, (c+f)/2] code whose
// two support subcodes have dimensions k1, k2 with k1 - c/2 = k2 - f/2.
struct ProjectedCodeModel {
    int c = 0, f = 0;
    int length = 0, dim = 0;
    int lift_multiplier = 0;            // p
    std::vector<int> k2_candidates;     // from the [f, k2, >= d] constraint on B
    int k1_for(int k2) const { return k2 + (c - f) / 2; }
};

ProjectedCodeModel project(const CycleType& t, int d);

struct Assumption {
    std::string kind;   // "dual_distance_min", "dual_distance_max", "k2"
    long value = 0;
    std::string citation;
};

struct ZeroRule {
    int x = 0, y = 0;
    std::string reason;  // "parity", "doubly-even", "distance", "assumption", "symmetry:*"
};

struct ConstraintScenario {
    std::string name;
    ProjectedCodeModel model;
    int k2 = 0;
    int ambient_d = 24;
    int d_pi_lb = 0;                  // lower bound on the projected distance
    int dual_distance_lb = 0;         // of the first-block code's dual
    bool symmetry = true;             // A(x,y) = A(c-x, f-y); the all-one word
    bool marginal_links = true;
    std::vector<Assumption> assumptions;
    std::vector<ZeroRule> zero_rules;

    bool zero_forced(int x, int y) const;
    std::pair<int, int> canonical(int x, int y) const;
    std::string var_name(int x, int y) const;  // canonical "A(x,y)"
};

// Builds the constraint scenario for a validated prime cycle type. The four
// zero-rule classes: parity (x+y odd), doubly-even lift (p*x+y != 0 mod 4),
// distance (0 < x+y < d_pi or 0 < p*x+y < d), and the dual-distance
// assumption (A(x,y) = 0 for 1 <= x < lb). Mirrors are zeroed when symmetry
// is on.
ConstraintScenario scenario(const CycleType& t, int d, const std::vector<Assumption>& assumptions);

// Built-in presets: "3-32-24", "3-34-18", "3-36-12", "3-38-6", "3-40-0".
ConstraintScenario scenario_preset(const std::string& name);
std::vector<std::string> scenario_preset_names();

// Assembles the exact linear equality system of a scenario: the
// split-MacWilliams fixed-point equation for every (r, i), normalization
// A(0,0) = 1, with zero-forced cells removed and symmetric cells identified.
// For f = 0, the single-enumerator MacWilliams fixed-point system is used.
LinearSystem assemble_system(const ConstraintScenario& s);

// Linear forms (expressions over the system's variables, constant = 0):
//   first-block marginal:  A_x of the block code  ->  A(x, 0)
//   row sum: sum_y A(x,y)  =  2^k2 * (weight-x count of the dual block code)
AffineRelation marginal_first_block(const ConstraintScenario& s, int x);
AffineRelation marginal_row_sum(const ConstraintScenario& s, int x);

}  // namespace aut120
