#include <doctest.h>

#include <random>

#include "aut120/feasibility.hpp"

using namespace aut120;

namespace {

AffineRelation rel(const std::string& text) { return AffineRelation::parse(text); }

}  // namespace

TEST_CASE("relation parse and print round trip") {
    auto r = rel("3*A(31,3) + 2*A(20,0) + 3*A(9,1) + 26*A(8,0) = 0");
    CHECK(r.coeffs.size() == 4);
    CHECK(r.coeffs.at("A(31,3)") == 3);
    CHECK(r.constant == 0);
    CHECK(AffineRelation::parse(r.to_string()) == r);

    auto q = rel("A24 - 15*A8 - 8*A12 + 1/2*B2 = -21");
    CHECK(q.coeffs.at("B2") == Rat(1, 2));
    CHECK(q.coeffs.at("A8") == -15);
    CHECK(q.constant == -21);
    // printing scales to integers
    CHECK(q.to_string() == "2*A24 - 16*A12 - 30*A8 + B2 = -42");
    CHECK(AffineRelation::parse(q.to_string()).coeffs.at("B2") == 1);
}

TEST_CASE("solve_parametric on a 2x2 system") {
    LinearSystem sys;
    sys.add(rel("x + y = 1"), "a");
    sys.add(rel("x - y = 1"), "b");
    auto forms = solve_parametric(sys, {});
    REQUIRE(forms.size() == 2);
    std::map<std::string, Rat> point{{"x", 0}, {"y", 0}};
    // both solved forms must pin x = 1, y = 0
    SolvedSystem s(sys);
    auto sol = s.particular_solution();
    CHECK(sol.at("x") == 1);
    CHECK(sol.at("y") == 0);
}

TEST_CASE("implies: proof and refutation") {
    LinearSystem sys;
    sys.add(rel("x + y = 1"), "a");
    sys.add(rel("x - y = 1"), "b");
    auto yes = implies(sys, rel("2*x = 2"));
    CHECK(yes.implied);
    // proof must recombine exactly
    AffineRelation acc;
    for (const auto& [i, m] : yes.proof) acc = acc.plus(sys.relations[i], m);
    acc.normalize();
    CHECK(acc == rel("2*x = 2"));

    auto no = implies(sys, rel("x + 2*y = 2"));
    CHECK_FALSE(no.implied);
    // refutation satisfies the system but not the target
    for (const auto& r : sys.relations) CHECK(r.holds_at(no.refutation));
    CHECK_FALSE(rel("x + 2*y = 2").holds_at(no.refutation));

    // anything implies 0 = 0
    auto triv = implies(sys, rel("0 = 0"));
    CHECK(triv.implied);
}

TEST_CASE("implies with under-determined systems") {
    LinearSystem sys;
    sys.add(rel("a + b + c = 6"), "only");
    auto no = implies(sys, rel("a = 1"));
    CHECK_FALSE(no.implied);
    for (const auto& r : sys.relations) CHECK(r.holds_at(no.refutation));
}

TEST_CASE("solved relations hold on random rational solutions") {
    // soundness: sample the free-variable parametrization and evaluate
    LinearSystem sys;
    sys.add(rel("2*w + x - y = 4"), "r0");
    sys.add(rel("w + x + y + z = 10"), "r1");
    sys.add(rel("x - z = 1"), "r2");
    std::vector<std::string> prefer{"z"};
    auto forms = solve_parametric(sys, prefer);
    SolvedSystem solved(sys, prefer);
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        std::map<std::string, Rat> freev;
        for (const auto& fv : solved.free_variables())
            freev[fv] = make_rat(int(rng() % 41) - 20, 1 + int(rng() % 7));
        auto sol = solved.particular_solution(freev);
        for (const auto& r : sys.relations) CHECK(r.holds_at(sol));
        for (const auto& f : forms) CHECK(f.holds_at(sol));
    }
}

TEST_CASE("determinism: identical systems give identical bases") {
    LinearSystem sys;
    sys.add(rel("2*w + x - y = 4"), "r0");
    sys.add(rel("w + x + y + z = 10"), "r1");
    auto f1 = solve_parametric(sys, {"z", "y"});
    auto f2 = solve_parametric(sys, {"z", "y"});
    REQUIRE(f1.size() == f2.size());
    for (size_t i = 0; i < f1.size(); ++i) CHECK(f1[i] == f2[i]);
}

TEST_CASE("integer_feasible: spec examples") {
    // {x = 5} is feasible with witness x = 5
    auto v = integer_feasible({rel("x = 5")}, {"x"});
    CHECK(v.kind == Verdict::Kind::Feasible);
    CHECK(v.witness.at("x") == 5);

    // A(30,2) = 18*1773 - 32076 forces a negative value
    auto neg = integer_feasible({rel("A(30,2) = -162")}, {"A(30,2)"});
    REQUIRE(neg.kind == Verdict::Kind::Infeasible);
    CHECK(neg.certificate.kind == Certificate::Kind::NegativeForced);
    CHECK(recheck_certificate(neg.certificate, {rel("A(30,2) = -162")}));

    // A(9,1) = 34 - 4*A(12,0) with A(9,1) forced to zero: 34/4 is not integral
    std::vector<AffineRelation> rels{rel("A(9,1) + 4*A(12,0) = 34"), rel("A(9,1) = 0")};
    auto ni = integer_feasible(rels, {"A(9,1)", "A(12,0)"});
    REQUIRE(ni.kind == Verdict::Kind::Infeasible);
    CHECK(ni.certificate.kind == Certificate::Kind::NegativeForced);
    CHECK(recheck_certificate(ni.certificate, rels));
}

TEST_CASE("integer_feasible: zero forcing from a sign-definite combination") {
    std::vector<AffineRelation> rels{
        rel("3*a + 2*b + c = 0"),
        rel("b + d = 7"),
    };
    auto v = integer_feasible(rels, {"a", "b", "c", "d"});
    REQUIRE(v.kind == Verdict::Kind::Feasible);
    CHECK(v.witness.at("a") == 0);
    CHECK(v.witness.at("b") == 0);
    CHECK(v.witness.at("c") == 0);
    CHECK(v.witness.at("d") == 7);
}

TEST_CASE("integer_feasible: box search finds witnesses and certifies misses") {
    auto v = integer_feasible({rel("x + y = 3")}, {"x", "y"});
    REQUIRE(v.kind == Verdict::Kind::Feasible);
    CHECK(v.witness.at("x") + v.witness.at("y") == 3);

    // x + 2y = 3 and 2x + 4y = 5 is rationally inconsistent
    auto inc = integer_feasible({rel("x + 2*y = 3"), rel("2*x + 4*y = 5")}, {"x", "y"});
    REQUIRE(inc.kind == Verdict::Kind::Infeasible);

    // 2x + 2y = 3 has no integer point in the box
    auto miss = integer_feasible({rel("2*x + 2*y = 3")}, {"x", "y"});
    REQUIRE(miss.kind == Verdict::Kind::Infeasible);
    CHECK(recheck_certificate(miss.certificate, {rel("2*x + 2*y = 3")}));
}

TEST_CASE("integer_feasible: unbounded variables give Unknown") {
    auto v = integer_feasible({rel("x - y = 1")}, {"x", "y"});
    CHECK(v.kind == Verdict::Kind::Unknown);
}

TEST_CASE("certificate recheck rejects tampering") {
    std::vector<AffineRelation> rels{rel("A(30,2) = -162")};
    auto v = integer_feasible(rels, {"A(30,2)"});
    REQUIRE(v.kind == Verdict::Kind::Infeasible);
    auto bad = v.certificate;
    bad.steps.back().relation.constant = 162;  // flip the sign
    CHECK_FALSE(recheck_certificate(bad, rels));
}

TEST_CASE("enumerate_cases: d_pi pinning and the domain guard") {
    CaseDomain dom;
    dom.dims = {{"x", {0, 8}}, {"y", {0, 6}}};
    std::vector<CasePredicate> preds{
        {"weight <= 8", [](const std::vector<long>& v) { return v[0] + v[1] <= 8 && v[0] + v[1] > 0; }},
        {"lift >= 24", [](const std::vector<long>& v) { return 3 * v[0] + v[1] >= 24; }},
    };
    auto sat = enumerate_cases(dom, preds);
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == std::vector<long>{8, 0});

    CaseDomain big;
    big.dims = {{"a", {0, 100000}}, {"b", {0, 100000}}};
    CHECK_THROWS_AS(enumerate_cases(big, {}), std::domain_error);
}
