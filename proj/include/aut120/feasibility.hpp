#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aut120/rational.hpp"

namespace aut120 {

// Exact linear relation  sum(coeffs[v] * v) = constant. No zero coefficients
// are stored; variable names live in the scenario's A(x,y) / Aj / Bj / beta
// namespace.
struct AffineRelation {
    std::map<std::string, Rat> coeffs;
    Rat constant = 0;

    AffineRelation() = default;
    AffineRelation(std::map<std::string, Rat> c, Rat k);

    void add_term(const std::string& var, const Rat& c);
    void normalize();  // drop zero coefficients
    AffineRelation scaled(const Rat& f) const;
    AffineRelation plus(const AffineRelation& o, const Rat& f) const;  // this + f*o
    Rat evaluate(const std::map<std::string, Rat>& assignment) const;  // LHS value
    bool holds_at(const std::map<std::string, Rat>& assignment) const;

    // Integer-scaled display form, e.g. "3*A(31,3) + 2*A(20,0) + 26*A(8,0) = 0".
    std::string to_string() const;
    static AffineRelation parse(const std::string& text);

    bool operator==(const AffineRelation& o) const = default;
};

struct LinearSystem {
    std::vector<AffineRelation> relations;
    std::vector<std::string> provenance;   // parallel to relations
    std::vector<std::string> variables;    // ordered; insertion order fixes pivots

    void add(AffineRelation r, std::string prov);
    void declare_variable(const std::string& v);  // fixes variable order
    size_t size() const { return relations.size(); }
};

// RREF of a LinearSystem under a deterministic pivot order. Variables listed
// in prefer_free are pivoted last (most-preferred last of all), so they
// survive as free parameters when rank allows.
class SolvedSystem {
  public:
    SolvedSystem(const LinearSystem& sys, std::vector<std::string> prefer_free = {});

    bool inconsistent() const { return inconsistent_; }
    int rank() const { return rank_; }
    const std::vector<std::string>& free_variables() const { return free_vars_; }
    // multipliers over the input relations producing 0 = nonzero (when inconsistent)
    const std::map<size_t, Rat>& inconsistency_multipliers() const { return bad_mults_; }

    // pivot variable = constant + sum(coef * free var), one relation per pivot,
    // emitted as "pivot - sum(...) = constant"
    std::vector<AffineRelation> solved_forms() const;

    struct Reduction {
        AffineRelation residual;          // target minus the combination
        std::map<size_t, Rat> multipliers;  // over input relations
    };
    Reduction reduce(const AffineRelation& target) const;

    // a rational point satisfying the system: free vars = given values (0 when
    // absent), pivots filled from the solved forms
    std::map<std::string, Rat> particular_solution(
        const std::map<std::string, Rat>& free_values = {}) const;

  private:
    const LinearSystem* sys_;
    std::vector<std::string> order_;                 // pivot column order
    std::map<std::string, size_t> col_of_;
    std::vector<std::vector<Rat>> rows_;             // RREF rows over order_
    std::vector<Rat> consts_;
    std::vector<std::map<size_t, Rat>> mults_;       // row -> input multipliers
    std::vector<int> pivot_col_;                     // per RREF row
    std::vector<std::string> free_vars_;
    std::map<size_t, Rat> bad_mults_;
    int rank_ = 0;
    bool inconsistent_ = false;
};

// Parametric solve: each dependent variable as an affine expression in the
// preferred free variables. Throws std::domain_error on an inconsistent
// system (rationally infeasible).
std::vector<AffineRelation> solve_parametric(const LinearSystem& sys,
                                             const std::vector<std::string>& prefer_free);

struct ImpliesResult {
    bool implied = false;
    std::map<size_t, Rat> proof;                 // combination over sys.relations
    std::map<std::string, Rat> refutation;       // point satisfying sys, not target
};

// Decides membership of target in the affine span of sys, exactly.
ImpliesResult implies(const LinearSystem& sys, const AffineRelation& target);

// --- nonnegative-integer feasibility -------------------------------------

// A certificate is a re-checkable derivation: step i is either one of the
// input relations, an exact rational combination of earlier steps, a variable
// forced to zero by nonnegativity (from an earlier all-positive sum = 0), or
// the final contradictory relation.
struct DerivationStep {
    enum class Kind { Input, Combination, ZeroForced };
    Kind kind = Kind::Input;
    AffineRelation relation;
    std::map<size_t, Rat> from;   // multipliers over earlier steps (Combination)
    size_t source = 0;            // step index (ZeroForced)
    std::string note;
};

struct Certificate {
    enum class Kind { NegativeForced, CombinationContradiction, ExhaustedBox };
    Kind kind = Kind::CombinationContradiction;
    std::vector<DerivationStep> steps;
    std::string detail;   // what the last step contradicts
    std::map<std::string, std::pair<Int, Int>> box;  // ExhaustedBox bounds
};

// Re-evaluates the certificate against the original relations with exact
// arithmetic; true iff every step reproduces and the contradiction is real.
bool recheck_certificate(const Certificate& cert,
                         const std::vector<AffineRelation>& inputs);

struct Verdict {
    enum class Kind { Feasible, Infeasible, Unknown };
    Kind kind = Kind::Unknown;
    std::map<std::string, Int> witness;   // Feasible: exact assignment
    Certificate certificate;              // Infeasible
    std::string reason;                   // Unknown
};

// All variables constrained to nonnegative integers. Propagates forced values
// and sign contradictions, then exhausts the finite box when bounds close;
// Unknown when a variable stays unbounded.
Verdict integer_feasible(const std::vector<AffineRelation>& relations,
                         const std::vector<std::string>& vars);

// --- finite case enumeration ----------------------------------------------

struct CaseDomain {
    // named coordinates with inclusive [lo, hi] ranges
    std::vector<std::pair<std::string, std::pair<long, long>>> dims;
    unsigned long long size() const;
};

struct CasePredicate {
    std::string description;
    std::function<bool(const std::vector<long>&)> fn;
};

// Exact filter over a bounded integer tuple space (guard: |domain| <= 1e7).
std::vector<std::vector<long>> enumerate_cases(const CaseDomain& domain,
                                               const std::vector<CasePredicate>& predicates);

}  // namespace aut120
