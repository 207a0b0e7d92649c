#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aut120/projection.hpp"
#include "aut120/rational.hpp"

namespace aut120 {

// Fixed-point counts on the 120 coordinates by element order.
struct FixTable {
    std::map<int, int> fix;
    bool fpf_involutions = true;

    int at(int order) const;
    // standing assumption of the final screening: involutions have no fixed points
    static FixTable fixed_point_free();
    // exploratory variant: involutions with 24 fixed points (no claims replayed)
    static FixTable with_involution_fixed_points();
};

struct Fact {
    std::string id;
    std::string statement;
    std::string citation;
};

struct FactTable {
    std::vector<Fact> facts;

    bool has(const std::string& id) const;
    const Fact* find(const std::string& id) const;
    void remove(const std::string& id);
    static FactTable defaults();
};

// Exhaustive enumeration of odd composite-order cycle structures whose prime
// power maps both land in the allowed cycle-type table.
std::vector<CycleType> composite_structures();

// Arithmetic hypotheses behind the p^2-exclusion: for every allowed type of
// the odd prime p, the cycle count is not divisible by p and f < p.
struct PSquareCheck {
    int p = 0;
    bool verified = false;
    std::string detail;
};
std::vector<PSquareCheck> p_square_check();

// Primes r that may appear in N(<tau_p>) besides p: the action on the fixed
// points of tau_p must be feasible, and r must act nontrivially on the Sylow
// subgroup (r | p-1) or centralize it (p*r an allowed composite order).
std::set<int> normalizer_primes(int p, const FixTable& fix);

// Exponent vector over primes (2,3,5,7,19,23,29); a <= 3, others in {0,1}.
struct PrimePowerSignature {
    std::array<int, 7> e{};

    static const std::array<int, 7>& primes();
    Int order() const;
    bool divides(int prime) const;  // prime divides the order
    std::string factored() const;
    bool operator==(const PrimePowerSignature& o) const = default;
    auto operator<=>(const PrimePowerSignature& o) const = default;
};

std::vector<PrimePowerSignature> signature_space();

// Admissible Sylow numbers n_p for one signature: n_p = |G| / |N|, N = p times
// admissible powers of normalizer primes, filtered by n_p = 1 (mod p).
std::vector<Int> admissible_sylow_numbers(const PrimePowerSignature& sig, int p,
                                          const FixTable& fix);

// Deduplicated n_p candidates over the whole signature space.
std::vector<Int> sylow_candidates(int p, const FixTable& fix);

// Cauchy-Frobenius orbit count t = (120 + sum_p (p-1) n_p fix[p]) / |G|; only
// elements of prime order >= 7 have fixed points under the fpf assumption.
Rat cfl_t(const Int& order, const std::map<int, Int>& nps, const FixTable& fix);

// One screening decision, logged per signature.
struct ScreenEvent {
    PrimePowerSignature sig;
    std::string stage;     // "sylow", "cfl", "fact"
    std::string rule;      // rule or fact id
    std::string citation;  // empty for machine-checked stages
    std::string detail;
};

struct ScreenResult {
    std::vector<PrimePowerSignature> survivors;
    std::vector<ScreenEvent> exclusions;
    // machine-only survivors (before fact-rule filtering)
    std::vector<PrimePowerSignature> machine_survivors;
};

// Full order screen: Sylow-candidate emptiness, Cauchy-Frobenius integrality
// over admissible assignments, then the cited fact rules. Every fact rule
// names the facts it needs; removing a fact disables its rules.
ScreenResult order_screen(const FixTable& fix, const FactTable& facts);

struct SimpleGroupRow {
    std::string name;
    long order;
};

const std::vector<SimpleGroupRow>& simple_group_table();

// Nonabelian simple groups of order <= max_order with prime support inside
// `support`; square_free_odd additionally requires 9 not to divide the order.
std::vector<SimpleGroupRow> simple_factor_screen(long max_order, const std::set<int>& support,
                                                 bool square_free_odd);

}  // namespace aut120
