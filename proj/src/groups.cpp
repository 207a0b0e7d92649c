#include "aut120/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace aut120 {

namespace {
const std::set<int> kAllowedComposite = {15, 57, 115};
}

int FixTable::at(int order) const {
    auto it = fix.find(order);
    if (it == fix.end())
        throw std::invalid_argument("FixTable: no entry for order " + std::to_string(order));
    return it->second;
}

FixTable FixTable::fixed_point_free() {
    FixTable t;
    t.fpf_involutions = true;
    t.fix = {{2, 0}, {3, 0}, {5, 0}, {7, 1}, {19, 6}, {23, 5}, {29, 4},
             {15, 0}, {57, 0}, {115, 0}, {4, 0}, {8, 0}};
    return t;
}

FixTable FixTable::with_involution_fixed_points() {
    FixTable t = fixed_point_free();
    t.fpf_involutions = false;
    t.fix[2] = 24;
    return t;
}

bool FactTable::has(const std::string& id) const { return find(id) != nullptr; }

const Fact* FactTable::find(const std::string& id) const {
    for (const auto& f : facts) {
        if (f.id == id) return &f;
    }
    return nullptr;
}

void FactTable::remove(const std::string& id) {
    facts.erase(std::remove_if(facts.begin(), facts.end(),
                               [&](const Fact& f) { return f.id == id; }),
                facts.end());
}

FactTable FactTable::defaults() {
    FactTable t;
    t.facts = {
        {"no-order-38", "the automorphism group contains no element of order 38", "[BW]"},
        {"no-order-58", "the automorphism group contains no element of order 58", "[BW]"},
        {"odd-composite-orders", "odd composite element orders are exactly 15, 57, 115",
         "composite cycle-structure enumeration"},
        {"group-db-105", "both groups of order 105 have |N(<tau_7>)| = 105, not 7",
         "group database"},
        {"group-db-840", "all 186 groups of order 840 have |N(<tau_7>)| in {105, 840}, not 7",
         "group database"},
        {"order-29-families", "with 29 | |G|, only |G| = 2^a * 29, a <= 2, survives the"
         " normal-subgroup analysis", "prop-5.5a prose"},
        {"order-19-families", "with 19 | |G|, only |G| = 2^a * 3^b * 19, a, b <= 1, survives"
         " the normal-subgroup analysis", "prop-5.5c prose"},
        {"order-23-families", "with 23 | |G|, only |G| = 5^c * 23 or 2^3 * 5^c * 23 is claimed",
         "prop-5.5b statement"},
    };
    return t;
}

std::vector<CycleType> composite_structures() {
    std::vector<CycleType> out;
    const auto& table = prime_type_table();
    std::vector<int> odd = {3, 5, 7, 19, 23, 29};
    auto allowed = [&](int q, int cycles, int fixed) {
        auto it = table.find(q);
        if (it == table.end()) return false;
        return std::find(it->second.begin(), it->second.end(),
                         std::make_pair(cycles, fixed)) != it->second.end();
    };
    for (size_t i = 0; i < odd.size(); ++i) {
        for (size_t j = i + 1; j < odd.size(); ++j) {
            int p = odd[i], r = odd[j], pr = p * r;
            for (int s3 = 0; s3 * pr <= 120; ++s3) {
                for (int s1 = 0; s1 * p + s3 * pr <= 120; ++s1) {
                    for (int s2 = 0; s1 * p + s2 * r + s3 * pr <= 120; ++s2) {
                        int f = 120 - s1 * p - s2 * r - s3 * pr;
                        int cp = s1 + s3 * r, fp = s2 * r + f;  // sigma^r: p-(cp; fp)
                        int cr = s2 + s3 * p, fr = s1 * p + f;  // sigma^p: r-(cr; fr)
                        if (cp == 0 || cr == 0) continue;       // order less than p*r
                        if (allowed(p, cp, fp) && allowed(r, cr, fr))
                            out.push_back(CycleType::composite(p, r, s1, s2, s3, f));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<PSquareCheck> p_square_check() {
    std::vector<PSquareCheck> out;
    for (const auto& [p, types] : prime_type_table()) {
        if (p == 2) continue;
        PSquareCheck chk;
        chk.p = p;
        chk.verified = true;
        for (auto [c, f] : types) {
            if (c % p == 0) {
                chk.verified = false;
                chk.detail = "cycle count " + std::to_string(c) + " divisible by p";
            }
            if (f >= p) {
                chk.verified = false;
                chk.detail = "fixed points " + std::to_string(f) + " >= p";
            }
        }
        if (chk.verified) {
            chk.detail = "all types have p-free cycle count and f < p";
        }
        out.push_back(chk);
    }
    return out;
}

std::set<int> normalizer_primes(int p, const FixTable& fix) {
    if (p != 7 && p != 19 && p != 23 && p != 29)
        throw std::invalid_argument("normalizer_primes: p must be in {7, 19, 23, 29}");
    const int f = fix.at(p);
    std::set<int> out;
    for (int r : PrimePowerSignature::primes()) {
        if (r == p) continue;
        // action feasibility: m fixed points of sigma inside the f fixed
        // points of tau_p; cycles of length r cover the rest
        bool action = false;
        int cap = std::min(f, fix.at(r));
        for (int m = 0; m <= cap; ++m) {
            if ((f - m) % r != 0) continue;
            if (m < f && r > f) continue;
            action = true;
            break;
        }
        if (!action) continue;
        bool algebraic = (p - 1) % r == 0 || kAllowedComposite.count(p * r) > 0;
        if (algebraic) out.insert(r);
    }
    return out;
}

const std::array<int, 7>& PrimePowerSignature::primes() {
    static const std::array<int, 7> ps = {2, 3, 5, 7, 19, 23, 29};
    return ps;
}

Int PrimePowerSignature::order() const {
    Int o = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        for (int j = 0; j < e[i]; ++j) o *= primes()[i];
    }
    return o;
}

bool PrimePowerSignature::divides(int prime) const {
    for (size_t i = 0; i < e.size(); ++i) {
        if (primes()[i] == prime) return e[i] > 0;
    }
    return false;
}

std::string PrimePowerSignature::factored() const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += std::to_string(primes()[i]);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<PrimePowerSignature> signature_space() {
    std::vector<PrimePowerSignature> out;
    for (int a = 0; a <= 3; ++a) {
        for (int mask = 0; mask < 64; ++mask) {
            PrimePowerSignature s;
            s.e[0] = a;
            for (int i = 0; i < 6; ++i) s.e[i + 1] = (mask >> i) & 1;
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.e < b.e;
    });
    return out;
}

namespace {

int exponent_index(int p) {
    const auto& ps = PrimePowerSignature::primes();
    for (size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] == p) return int(i);
    }
    throw std::invalid_argument("not a table prime: " + std::to_string(p));
}

}  // namespace

std::vector<Int> admissible_sylow_numbers(const PrimePowerSignature& sig, int p,
                                          const FixTable& fix) {
    std::vector<Int> out;
    if (sig.e[exponent_index(p)] == 0) return out;
    const Int order = sig.order();
    std::vector<int> nprimes(normalizer_primes(p, fix).begin(),
                             normalizer_primes(p, fix).end());
    std::vector<int> caps;
    for (int r : nprimes) caps.push_back(sig.e[exponent_index(r)]);
    std::vector<int> exps(nprimes.size(), 0);
    while (true) {
        Int nsub = p;
        for (size_t i = 0; i < nprimes.size(); ++i) {
            for (int j = 0; j < exps[i]; ++j) nsub *= nprimes[i];
        }
        Int np = order / nsub;
        if (np % p == 1 && std::find(out.begin(), out.end(), np) == out.end()) out.push_back(np);
        size_t d = 0;
        while (d < exps.size()) {
            if (++exps[d] <= caps[d]) break;
            exps[d] = 0;
            ++d;
        }
        if (d == exps.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> sylow_candidates(int p, const FixTable& fix) {
    std::vector<Int> out;
    for (const auto& sig : signature_space()) {
        for (const auto& np : admissible_sylow_numbers(sig, p, fix)) {
            if (std::find(out.begin(), out.end(), np) == out.end()) out.push_back(np);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat cfl_t(const Int& order, const std::map<int, Int>& nps, const FixTable& fix) {
    Int numer = 120;
    for (const auto& [p, np] : nps) numer += Int(p - 1) * np * fix.at(p);
    return make_rat(numer, order);
}

namespace {

struct FactRule {
    std::string id;
    std::vector<std::string> requires_facts;
    std::string citation;
    // returns a non-empty detail string when the signature is excluded
    std::string (*excludes)(const PrimePowerSignature&);
};

const std::vector<FactRule>& fact_rules() {
    static const std::vector<FactRule> rules = {
        {"29-odd-part",
         {"no-order-58", "odd-composite-orders", "order-29-families"},
         "prop-5.5a prose ([BW]; normal-subgroup and A5 analysis)",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.e[6] == 1 && (s.e[1] == 1 || s.e[2] == 1))
                 return "2^a*3*5*29 family admits no group without an element of order"
                        " 3*29, 5*29 or 2*29";
             return "";
         }},
        {"29-two-part",
         {"no-order-58", "order-29-families"},
         "prop-5.5a prose (normal Sylow-29 with a = 3 forces an element of order 58)",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.e[6] == 1 && s.e[0] == 3) return "2^3*29 forces an element of order 58";
             return "";
         }},
        {"19-two-part",
         {"no-order-38", "order-19-families"},
         "prop-5.5c prose (O_p analysis plus the n_19 = 2^x congruence failure)",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.e[4] == 1 && s.e[0] >= 2 && s.e[2] == 0)
                 return "2-part 2^" + std::to_string(s.e[0]) +
                        " with 19 forces n_19 = 2^x, x in {1,2}, which is not 1 mod 19";
             return "";
         }},
        {"19-five-part",
         {"no-order-38", "odd-composite-orders", "order-19-families"},
         "prop-5.5c prose (Hall-subgroup and A5 analysis)",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.e[4] == 1 && s.e[2] == 1)
                 return "2^a*3^b*5*19 family admits no group without an element of order"
                        " 5*19, 2*19 or 3*19 in a forbidden structure";
             return "";
         }},
        {"23-families",
         {"order-23-families"},
         "prop-5.5b statement",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.e[5] != 1) return "";
             bool in_claim = (s.e[0] == 0 || s.e[0] == 3) && s.e[1] == 0 && s.e[3] == 0 &&
                             s.e[4] == 0 && s.e[6] == 0;
             if (!in_claim) return "outside the claimed families 5^c*23 and 2^3*5^c*23";
             return "";
         }},
        {"order-105",
         {"group-db-105"},
         "group database: both groups of order 105",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.order() == 105) return "no group of order 105 has |N(<tau_7>)| = 7";
             return "";
         }},
        {"order-840",
         {"group-db-840"},
         "group database: all 186 groups of order 840",
         [](const PrimePowerSignature& s) -> std::string {
             if (s.order() == 840) return "no group of order 840 has |N(<tau_7>)| = 7";
             return "";
         }},
    };
    return rules;
}

}  // namespace

ScreenResult order_screen(const FixTable& fix, const FactTable& facts) {
    ScreenResult res;
    const std::vector<int> screened = {7, 19, 23, 29};
    for (const auto& sig : signature_space()) {
        const Int order = sig.order();
        std::vector<int> present;
        for (int p : screened) {
            if (sig.e[exponent_index(p)] > 0) present.push_back(p);
        }
        // stage 1: Sylow candidate sets
        std::map<int, std::vector<Int>> nps;
        bool rejected = false;
        for (int p : present) {
            auto cand = admissible_sylow_numbers(sig, p, fix);
            if (cand.empty()) {
                res.exclusions.push_back({sig, "sylow", "n_" + std::to_string(p), "",
                                          "no n_" + std::to_string(p) +
                                              " = 1 (mod " + std::to_string(p) +
                                              ") with an admissible normalizer"});
                rejected = true;
                break;
            }
            nps[p] = std::move(cand);
        }
        if (rejected) continue;
        // stage 2: Cauchy-Frobenius integrality over admissible assignments
        if (fix.fpf_involutions) {
            std::vector<size_t> idx(present.size(), 0);
            bool integral = false;
            std::string last_t;
            while (true) {
                std::map<int, Int> assign;
                for (size_t i = 0; i < present.size(); ++i)
                    assign[present[i]] = nps[present[i]][idx[i]];
                Rat t = cfl_t(order, assign, fix);
                last_t = to_string(t);
                if (is_integer(t) && t >= 1) { integral = true; break; }
                size_t d = 0;
                while (d < idx.size()) {
                    if (++idx[d] < nps[present[d]].size()) break;
                    idx[d] = 0;
                    ++d;
                }
                if (d == idx.size()) break;
            }
            if (!integral) {
                res.exclusions.push_back({sig, "cfl", "orbit-count", "",
                                          "t is not a positive integer for any admissible"
                                          " Sylow assignment (last value " + last_t + ")"});
                continue;
            }
        }
        res.machine_survivors.push_back(sig);
        // stage 3: cited fact rules
        bool excluded = false;
        for (const auto& rule : fact_rules()) {
            bool enabled = true;
            for (const auto& need : rule.requires_facts) {
                if (!facts.has(need)) { enabled = false; break; }
            }
            if (!enabled) continue;
            std::string detail = rule.excludes(sig);
            if (!detail.empty()) {
                res.exclusions.push_back({sig, "fact", rule.id, rule.citation, detail});
                excluded = true;
                break;
            }
        }
        if (!excluded) res.survivors.push_back(sig);
    }
    return res;
}

const std::vector<SimpleGroupRow>& simple_group_table() {
    static const std::vector<SimpleGroupRow> table = {
        {"A5", 60},         {"A6", 360},         {"PSL(2,8)", 504},
        {"PSL(2,11)", 660}, {"PSL(2,13)", 1092}, {"PSL(2,17)", 2448},
        {"A7", 2520},       {"PSL(2,19)", 3420},
    };
    return table;
}

std::vector<SimpleGroupRow> simple_factor_screen(long max_order, const std::set<int>& support,
                                                 bool square_free_odd) {
    std::vector<SimpleGroupRow> out;
    for (const auto& row : simple_group_table()) {
        if (row.order > max_order) continue;
        long m = row.order;
        bool ok = true;
        for (int p = 2; p * long(p) <= m && ok; ++p) {
            if (m % p) continue;
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (!support.count(p)) ok = false;
            if (square_free_odd && p != 2 && e > 1) ok = false;
        }
        if (m > 1) {
            if (!support.count(int(m))) ok = false;
        }
        if (ok) out.push_back(row);
    }
    return out;
}

}  // namespace aut120
