#include "aut120/projection.hpp"

#include <algorithm>
#include <stdexcept>

#include "aut120/transforms.hpp"

namespace aut120 {

int extremal_distance(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("extremal_distance: n must be even and >= 2");
    if (n % 24 == 22) return 4 * (n / 24) + 6;
    return 4 * (n / 24) + 4;
}

CycleType CycleType::prime(int p, int c, int f) {
    CycleType t;
    t.kind = Kind::Prime;
    t.p = p;
    t.c = c;
    t.f = f;
    if (p * c + f != 120)
        throw std::invalid_argument("cycle type " + t.to_string() + ": p*c + f != 120");
    return t;
}

CycleType CycleType::composite(int p, int r, int s1, int s2, int s3, int f) {
    CycleType t;
    t.kind = Kind::Composite;
    t.p = p;
    t.r = r;
    t.s1 = s1;
    t.s2 = s2;
    t.s3 = s3;
    t.f = f;
    if (s1 * p + s2 * r + s3 * p * r + f != 120)
        throw std::invalid_argument("cycle type " + t.to_string() + ": coordinate count != 120");
    return t;
}

std::string CycleType::to_string() const {
    if (kind == Kind::Prime)
        return std::to_string(p) + "-(" + std::to_string(c) + ";" + std::to_string(f) + ")";
    return std::to_string(p * r) + "-(" + std::to_string(s1) + "," + std::to_string(s2) + "," +
           std::to_string(s3) + ";" + std::to_string(f) + ")";
}

const std::map<int, std::vector<std::pair<int, int>>>& prime_type_table_base() {
    static const std::map<int, std::vector<std::pair<int, int>>> table = {
        {2, {{48, 24}, {60, 0}}},
        {3, {{32, 24}, {34, 18}, {36, 12}, {38, 6}, {40, 0}}},
        {5, {{24, 0}}},
        {7, {{17, 1}}},
        {19, {{6, 6}}},
        {23, {{5, 5}}},
        {29, {{4, 4}}},
    };
    return table;
}

const std::map<int, std::vector<std::pair<int, int>>>& prime_type_table() {
    static const std::map<int, std::vector<std::pair<int, int>>> table = {
        {2, {{48, 24}, {60, 0}}},
        {3, {{40, 0}}},
        {5, {{24, 0}}},
        {7, {{17, 1}}},
        {19, {{6, 6}}},
        {23, {{5, 5}}},
        {29, {{4, 4}}},
    };
    return table;
}

bool validate_prime_type(int p, int c, int f) {
    const auto& table = prime_type_table();
    auto it = table.find(p);
    if (it == table.end()) return false;
    return std::find(it->second.begin(), it->second.end(), std::make_pair(c, f)) !=
           it->second.end();
}

int lifted_weight(int x, int y, int p) {
    if (x < 0 || y < 0) throw std::invalid_argument("lifted_weight: negative weight");
    return p * x + y;
}

ProjectedCodeModel project(const CycleType& t, int d) {
    if (t.kind != CycleType::Kind::Prime)
        throw std::invalid_argument("project: prime cycle types only");
    if (!validate_prime_type(t.p, t.c, t.f) &&
        !(t.p == 3 && std::count(prime_type_table_base().at(3).begin(),
                                 prime_type_table_base().at(3).end(),
                                 std::make_pair(t.c, t.f))))
        throw std::invalid_argument("project: " + t.to_string() + " is not an allowed type");
    ProjectedCodeModel m;
    m.c = t.c;
    m.f = t.f;
    m.length = t.c + t.f;
    m.dim = m.length / 2;
    m.lift_multiplier = t.p;
    // B is an [f, k2, >= d] code: k2 = 0 below d, k2 in {0,1} at f = d
    // (the only [d, 1, >= d] code is spanned by the all-one word)
    if (m.f < d) m.k2_candidates = {0};
    else if (m.f == d) m.k2_candidates = {0, 1};
    else throw std::invalid_argument("project: second block longer than handled cases");
    for (int k2 : m.k2_candidates) {
        int k1 = m.k1_for(k2);
        if (k1 < 0 || k1 + k2 > m.dim)
            throw std::logic_error("project: balance principle out of range");
    }
    return m;
}

namespace {

int compute_d_pi_lb(const ProjectedCodeModel& m, int d) {
    int best = m.length + 1;
    for (int x = 0; x <= m.c; ++x) {
        for (int y = 0; y <= m.f; ++y) {
            if (x + y == 0) continue;
            if (m.lift_multiplier * x + y >= d) best = std::min(best, x + y);
        }
    }
    return best;
}

}  // namespace

bool ConstraintScenario::zero_forced(int x, int y) const {
    for (const auto& zr : zero_rules) {
        if (zr.x == x && zr.y == y) return true;
    }
    return false;
}

std::pair<int, int> ConstraintScenario::canonical(int x, int y) const {
    if (!symmetry) return {x, y};
    return std::min(std::make_pair(x, y), std::make_pair(model.c - x, model.f - y));
}

std::string ConstraintScenario::var_name(int x, int y) const {
    auto [cx, cy] = canonical(x, y);
    return "A(" + std::to_string(cx) + "," + std::to_string(cy) + ")";
}

ConstraintScenario scenario(const CycleType& t, int d,
                            const std::vector<Assumption>& assumptions) {
    ConstraintScenario s;
    s.name = t.to_string();
    s.model = project(t, d);
    s.k2 = s.model.k2_candidates.front();
    s.ambient_d = d;
    s.d_pi_lb = compute_d_pi_lb(s.model, d);
    s.assumptions = assumptions;
    s.symmetry = true;        // the ambient code is self-dual, so 1 is in pi(F)
    s.marginal_links = true;
    for (const auto& a : assumptions) {
        if (a.kind == "dual_distance_min") s.dual_distance_lb = int(a.value);
        if (a.kind == "k2") s.k2 = int(a.value);
    }
    const int p = s.model.lift_multiplier, c = s.model.c, f = s.model.f;
    auto direct_reason = [&](int x, int y) -> std::string {
        if ((x + y) % 2 != 0) return "parity";
        if ((p * x + y) % 4 != 0) return "doubly-even";
        int lift = p * x + y;
        if ((x + y > 0 && x + y < s.d_pi_lb) || (lift > 0 && lift < d)) return "distance";
        if (x >= 1 && x < s.dual_distance_lb) return "assumption";
        return "";
    };
    for (int x = 0; x <= c; ++x) {
        for (int y = 0; y <= f; ++y) {
            std::string why = direct_reason(x, y);
            if (why.empty() && s.symmetry) {
                std::string mirror = direct_reason(c - x, f - y);
                if (!mirror.empty()) why = "symmetry:" + mirror;
            }
            if (!why.empty()) s.zero_rules.push_back({x, y, why});
        }
    }
    return s;
}

ConstraintScenario scenario_preset(const std::string& name) {
    const std::string cite_tables = "online code tables";
    if (name == "3-32-24") {
        auto s = scenario(CycleType::prime(3, 32, 24), 24,
                          {{"dual_distance_max", 2, cite_tables}});
        s.name = name;
        return s;
    }
    if (name == "3-34-18") {
        auto s = scenario(CycleType::prime(3, 34, 18), 24,
                          {{"dual_distance_min", 3, "odd-pair parity exclusion"}});
        s.name = name;
        return s;
    }
    if (name == "3-36-12") {
        auto s = scenario(CycleType::prime(3, 36, 12), 24,
                          {{"dual_distance_min", 4, "lifted-weight bound: y <= 12 forces x >= 4"}});
        s.name = name;
        return s;
    }
    if (name == "3-38-6") {
        auto s = scenario(CycleType::prime(3, 38, 6), 24,
                          {{"dual_distance_min", 6, "lifted-weight bound: y <= 6 forces x >= 6"}});
        s.name = name;
        return s;
    }
    if (name == "3-40-0") {
        auto s = scenario(CycleType::prime(3, 40, 0), 24, {});
        s.name = name;
        return s;
    }
    throw std::invalid_argument("unknown scenario preset: " + name);
}

std::vector<std::string> scenario_preset_names() {
    return {"3-32-24", "3-34-18", "3-36-12", "3-38-6", "3-40-0"};
}

LinearSystem assemble_system(const ConstraintScenario& s) {
    LinearSystem sys;
    const int c = s.model.c, f = s.model.f, dim = s.model.dim;
    const Int div = pow2(dim);
    if (f == 0) {
        // single-enumerator fixed-point system for the self-dual projection
        const int n = c;
        KrawtchoukTable K(n);
        std::vector<int> alive;
        for (int x = 0; x <= n; ++x) {
            if (!s.zero_forced(x, 0)) alive.push_back(x);
        }
        auto cname = [&](int x) { return s.var_name(x, 0); };
        for (int x : alive) sys.declare_variable(cname(x));
        sys.add(AffineRelation({{cname(0), Rat(1)}}, Rat(1)), "normalization A(0,0) = 1");
        for (int r = 0; r <= n; ++r) {
            AffineRelation rel;
            for (int x : alive) rel.add_term(cname(x), Rat(K(r, x)));
            if (!s.zero_forced(r, 0)) rel.add_term(cname(r), -Rat(div));
            rel.constant = 0;
            sys.add(std::move(rel), "fixed-point r=" + std::to_string(r));
        }
        return sys;
    }
    KrawtchoukTable Kc(c), Kf(f);
    // canonical variable list in grid order
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x <= c; ++x) {
        for (int y = 0; y <= f; ++y) {
            if (s.zero_forced(x, y)) continue;
            auto cxy = s.canonical(x, y);
            if (std::find(cells.begin(), cells.end(), cxy) == cells.end()) cells.push_back(cxy);
        }
    }
    std::sort(cells.begin(), cells.end());
    for (auto [x, y] : cells) sys.declare_variable(s.var_name(x, y));

    sys.add(AffineRelation({{s.var_name(0, 0), Rat(1)}}, Rat(1)), "normalization A(0,0) = 1");
    for (int r = 0; r <= c; ++r) {
        for (int i = 0; i <= f; ++i) {
            AffineRelation rel;
            for (auto [x, y] : cells) {
                Int coef = 0;
                // the canonical cell stands for itself and its mirror
                coef += Kc(r, x) * Kf(i, y);
                auto [mx, my] = std::make_pair(c - x, f - y);
                if (s.symmetry && std::make_pair(mx, my) != std::make_pair(x, y) &&
                    !s.zero_forced(mx, my))
                    coef += Kc(r, mx) * Kf(i, my);
                if (coef != 0) rel.add_term(s.var_name(x, y), Rat(coef));
            }
            if (!s.zero_forced(r, i)) rel.add_term(s.var_name(r, i), -Rat(div));
            rel.constant = 0;
            sys.add(std::move(rel),
                    "fixed-point (" + std::to_string(r) + "," + std::to_string(i) + ")");
        }
    }
    return sys;
}

AffineRelation marginal_first_block(const ConstraintScenario& s, int x) {
    AffineRelation e;
    if (!s.zero_forced(x, 0)) e.add_term(s.var_name(x, 0), 1);
    return e;
}

AffineRelation marginal_row_sum(const ConstraintScenario& s, int x) {
    AffineRelation e;
    for (int y = 0; y <= s.model.f; ++y) {
        if (!s.zero_forced(x, y)) e.add_term(s.var_name(x, y), 1);
    }
    return e;
}

}  // namespace aut120
