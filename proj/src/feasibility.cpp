#include "aut120/feasibility.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aut120 {

AffineRelation::AffineRelation(std::map<std::string, Rat> c, Rat k)
    : coeffs(std::move(c)), constant(std::move(k)) {
    normalize();
}

void AffineRelation::add_term(const std::string& var, const Rat& c) {
    auto it = coeffs.find(var);
    if (it == coeffs.end()) {
        if (c != 0) coeffs.emplace(var, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

void AffineRelation::normalize() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->second == 0) it = coeffs.erase(it);
        else ++it;
    }
}

AffineRelation AffineRelation::scaled(const Rat& f) const {
    AffineRelation r;
    if (f == 0) return r;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = c * f;
    r.constant = constant * f;
    return r;
}

AffineRelation AffineRelation::plus(const AffineRelation& o, const Rat& f) const {
    AffineRelation r = *this;
    for (const auto& [v, c] : o.coeffs) r.add_term(v, c * f);
    r.constant += o.constant * f;
    return r;
}

Rat AffineRelation::evaluate(const std::map<std::string, Rat>& assignment) const {
    Rat s = 0;
    for (const auto& [v, c] : coeffs) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("evaluate: missing variable " + v);
        s += c * it->second;
    }
    return s;
}

bool AffineRelation::holds_at(const std::map<std::string, Rat>& assignment) const {
    return evaluate(assignment) == constant;
}

std::string AffineRelation::to_string() const {
    // scale to integer coefficients
    Int lcm = 1;
    for (const auto& [v, c] : coeffs) {
        Int d = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    {
        Int d = constant.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : coeffs) {
        Rat s = c * lcm;
        Int ic = s.get_num();
        if (first) {
            if (ic == -1) out << "-";
            else if (ic != 1) out << ic.get_str() << "*";
            out << v;
            first = false;
            continue;
        }
        if (ic < 0) out << " - ";
        else out << " + ";
        Int a = abs(ic);
        if (a != 1) out << a.get_str() << "*";
        out << v;
    }
    if (first) out << "0";
    Rat rhs = constant * lcm;
    out << " = " << rhs.get_num().get_str();
    return out.str();
}

AffineRelation AffineRelation::parse(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("relation needs '=': " + text);
    std::string lhs = text.substr(0, eq), rhs = text.substr(eq + 1);
    AffineRelation rel;
    {
        std::istringstream rs(rhs);
        std::string tok;
        rs >> tok;
        rel.constant = Rat(tok);
        rel.constant.canonicalize();
    }
    // tokenize lhs into signed terms: [coef*]var
    std::string cur;
    int sign = 1;
    auto flush = [&]() {
        if (cur.empty()) return;
        auto star = cur.find('*');
        Rat coef = 1;
        std::string var = cur;
        if (star != std::string::npos) {
            coef = Rat(cur.substr(0, star));
            coef.canonicalize();
            var = cur.substr(star + 1);
        }
        if (var == "0" && star == std::string::npos) { cur.clear(); return; }
        rel.add_term(var, coef * sign);
        cur.clear();
    };
    for (char ch : lhs) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '+') { flush(); sign = 1; continue; }
        if (ch == '-' && cur.empty()) { sign = -sign; continue; }
        if (ch == '-') { flush(); sign = -1; continue; }
        cur += ch;
    }
    flush();
    return rel;
}

void LinearSystem::add(AffineRelation r, std::string prov) {
    r.normalize();
    for (const auto& [v, c] : r.coeffs) declare_variable(v);
    relations.push_back(std::move(r));
    provenance.push_back(std::move(prov));
}

void LinearSystem::declare_variable(const std::string& v) {
    if (std::find(variables.begin(), variables.end(), v) == variables.end())
        variables.push_back(v);
}

SolvedSystem::SolvedSystem(const LinearSystem& sys, std::vector<std::string> prefer_free)
    : sys_(&sys) {
    // pivot order: non-preferred variables in declaration order, then the
    // preferred-free list reversed (most preferred = last pivot candidate)
    std::vector<std::string> pref;
    for (const auto& v : prefer_free) {
        if (std::find(sys.variables.begin(), sys.variables.end(), v) != sys.variables.end())
            pref.push_back(v);
    }
    for (const auto& v : sys.variables) {
        if (std::find(pref.begin(), pref.end(), v) == pref.end()) order_.push_back(v);
    }
    for (auto it = pref.rbegin(); it != pref.rend(); ++it) order_.push_back(*it);
    for (size_t i = 0; i < order_.size(); ++i) col_of_[order_[i]] = i;

    const size_t ncols = order_.size();
    rows_.reserve(sys.relations.size());
    consts_.reserve(sys.relations.size());
    for (size_t i = 0; i < sys.relations.size(); ++i) {
        std::vector<Rat> row(ncols, Rat(0));
        for (const auto& [v, c] : sys.relations[i].coeffs) row[col_of_.at(v)] = c;
        rows_.push_back(std::move(row));
        consts_.push_back(sys.relations[i].constant);
        mults_.push_back({{i, Rat(1)}});
    }

    auto add_scaled_mults = [](std::map<size_t, Rat>& dst, const std::map<size_t, Rat>& src,
                               const Rat& f) {
        for (const auto& [i, m] : src) {
            auto it = dst.find(i);
            if (it == dst.end()) {
                if (m * f != 0) dst.emplace(i, m * f);
            } else {
                it->second += m * f;
                if (it->second == 0) dst.erase(it);
            }
        }
    };

    size_t nrows = rows_.size();
    for (size_t col = 0; col < ncols && size_t(rank_) < nrows; ++col) {
        size_t piv = nrows;
        for (size_t i = rank_; i < nrows; ++i) {
            if (rows_[i][col] != 0) { piv = i; break; }
        }
        if (piv == nrows) continue;
        std::swap(rows_[rank_], rows_[piv]);
        std::swap(consts_[rank_], consts_[piv]);
        std::swap(mults_[rank_], mults_[piv]);
        Rat inv = Rat(1) / rows_[rank_][col];
        if (inv != 1) {
            for (auto& x : rows_[rank_]) x *= inv;
            consts_[rank_] *= inv;
            for (auto& [i, m] : mults_[rank_]) m *= inv;
        }
        for (size_t i = 0; i < nrows; ++i) {
            if (i == size_t(rank_)) continue;
            if (rows_[i][col] == 0) continue;
            Rat f = -rows_[i][col];
            for (size_t j = 0; j < ncols; ++j) {
                if (rows_[rank_][j] != 0) rows_[i][j] += f * rows_[rank_][j];
            }
            consts_[i] += f * consts_[rank_];
            add_scaled_mults(mults_[i], mults_[rank_], f);
        }
        pivot_col_.push_back(int(col));
        ++rank_;
    }
    for (size_t i = rank_; i < nrows; ++i) {
        if (consts_[i] != 0) {
            inconsistent_ = true;
            bad_mults_ = mults_[i];
            break;
        }
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col_) is_pivot[c] = true;
    for (size_t c = 0; c < ncols; ++c) {
        if (!is_pivot[c]) free_vars_.push_back(order_[c]);
    }
}

std::vector<AffineRelation> SolvedSystem::solved_forms() const {
    std::vector<AffineRelation> out;
    for (int r = 0; r < rank_; ++r) {
        AffineRelation rel;
        for (size_t j = 0; j < order_.size(); ++j) {
            if (rows_[r][j] != 0) rel.coeffs[order_[j]] = rows_[r][j];
        }
        rel.constant = consts_[r];
        out.push_back(std::move(rel));
    }
    return out;
}

SolvedSystem::Reduction SolvedSystem::reduce(const AffineRelation& target) const {
    std::vector<Rat> row(order_.size(), Rat(0));
    AffineRelation residual;
    Rat cst = target.constant;
    for (const auto& [v, c] : target.coeffs) {
        auto it = col_of_.find(v);
        if (it == col_of_.end()) {
            residual.coeffs[v] = c;  // variable unknown to the system stays
        } else {
            row[it->second] = c;
        }
    }
    std::map<size_t, Rat> used;
    for (int r = 0; r < rank_; ++r) {
        int pc = pivot_col_[r];
        if (row[pc] == 0) continue;
        Rat f = row[pc];
        for (size_t j = 0; j < order_.size(); ++j) {
            if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
        }
        cst -= f * consts_[r];
        for (const auto& [i, m] : mults_[r]) {
            auto it = used.find(i);
            if (it == used.end()) used.emplace(i, m * f);
            else {
                it->second += m * f;
                if (it->second == 0) used.erase(it);
            }
        }
    }
    for (size_t j = 0; j < order_.size(); ++j) {
        if (row[j] != 0) residual.coeffs[order_[j]] = row[j];
    }
    residual.constant = cst;
    return {std::move(residual), std::move(used)};
}

std::map<std::string, Rat> SolvedSystem::particular_solution(
    const std::map<std::string, Rat>& free_values) const {
    std::map<std::string, Rat> sol;
    for (const auto& v : sys_->variables) sol[v] = 0;
    for (const auto& [v, val] : free_values) sol[v] = val;
    for (int r = 0; r < rank_; ++r) {
        int pc = pivot_col_[r];
        Rat val = consts_[r];
        for (size_t j = 0; j < order_.size(); ++j) {
            if (int(j) != pc && rows_[r][j] != 0) val -= rows_[r][j] * sol[order_[j]];
        }
        sol[order_[pc]] = val;
    }
    return sol;
}

std::vector<AffineRelation> solve_parametric(const LinearSystem& sys,
                                             const std::vector<std::string>& prefer_free) {
    SolvedSystem s(sys, prefer_free);
    if (s.inconsistent())
        throw std::domain_error("solve_parametric: system is rationally inconsistent");
    return s.solved_forms();
}

ImpliesResult implies(const LinearSystem& sys, const AffineRelation& target) {
    SolvedSystem s(sys);
    ImpliesResult res;
    auto red = s.reduce(target);
    if (red.residual.coeffs.empty() && red.residual.constant == 0) {
        res.implied = true;
        res.proof = std::move(red.multipliers);
        return res;
    }
    res.implied = false;
    // witness: a rational solution of sys violating target
    std::map<std::string, Rat> freev;
    if (red.residual.constant == 0) {
        // pick a free variable with nonzero residual coefficient and bump it
        for (const auto& [v, c] : red.residual.coeffs) {
            freev[v] = 1;
            break;
        }
    }
    res.refutation = s.particular_solution(freev);
    // variables foreign to the system still need values for re-evaluation
    for (const auto& [v, c] : target.coeffs) {
        if (!res.refutation.count(v)) res.refutation[v] = 0;
    }
    if (res.refutation.empty() || target.holds_at(res.refutation))
        throw std::logic_error("implies: refutation construction failed");
    return res;
}

// --- integer feasibility ----------------------------------------------------

namespace {

bool all_coeffs_nonneg(const AffineRelation& r) {
    for (const auto& [v, c] : r.coeffs)
        if (c < 0) return false;
    return true;
}

bool all_coeffs_nonpos(const AffineRelation& r) {
    for (const auto& [v, c] : r.coeffs)
        if (c > 0) return false;
    return true;
}

}  // namespace

bool recheck_certificate(const Certificate& cert, const std::vector<AffineRelation>& inputs) {
    const auto& steps = cert.steps;
    if (steps.empty()) return false;
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        switch (st.kind) {
            case DerivationStep::Kind::Input: {
                bool found = false;
                for (const auto& in : inputs) {
                    if (in == st.relation) { found = true; break; }
                }
                if (!found) return false;
                break;
            }
            case DerivationStep::Kind::Combination: {
                AffineRelation acc;
                for (const auto& [j, m] : st.from) {
                    if (j >= i) return false;
                    acc = acc.plus(steps[j].relation, m);
                }
                acc.normalize();
                AffineRelation want = st.relation;
                want.normalize();
                if (!(acc == want)) return false;
                break;
            }
            case DerivationStep::Kind::ZeroForced: {
                if (st.source >= i) return false;
                const auto& src = steps[st.source].relation;
                bool pos = all_coeffs_nonneg(src), neg = all_coeffs_nonpos(src);
                if (!(src.constant == 0 && (pos || neg) && !src.coeffs.empty())) return false;
                if (st.relation.coeffs.size() != 1 || st.relation.constant != 0) return false;
                if (!src.coeffs.count(st.relation.coeffs.begin()->first)) return false;
                break;
            }
        }
    }
    // final step must be visibly contradictory over nonnegative integers
    const auto& last = steps.back().relation;
    if (last.coeffs.empty()) return last.constant != 0;
    if (all_coeffs_nonneg(last) && last.constant < 0) return true;
    if (all_coeffs_nonpos(last) && last.constant > 0) return true;
    if (last.coeffs.size() == 1) {
        Rat v = last.constant / last.coeffs.begin()->second;
        return v < 0 || !is_integer(v);
    }
    return false;
}

Verdict integer_feasible(const std::vector<AffineRelation>& relations,
                         const std::vector<std::string>& vars) {
    Verdict verdict;
    std::vector<DerivationStep> steps;
    std::vector<size_t> active;
    for (size_t i = 0; i < relations.size(); ++i) {
        DerivationStep st;
        st.kind = DerivationStep::Kind::Input;
        st.relation = relations[i];
        st.relation.normalize();
        steps.push_back(std::move(st));
        active.push_back(i);
    }
    std::map<std::string, Int> known;

    auto fail = [&](Certificate::Kind kind, size_t last_step, std::string detail) {
        verdict.kind = Verdict::Kind::Infeasible;
        verdict.certificate.kind = kind;
        verdict.certificate.detail = std::move(detail);
        // keep only steps reachable from the contradiction
        verdict.certificate.steps.assign(steps.begin(), steps.begin() + last_step + 1);
        return verdict;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ai = 0; ai < active.size(); ++ai) {
            size_t si = active[ai];
            const AffineRelation rel = steps[si].relation;
            if (rel.coeffs.empty()) {
                if (rel.constant != 0)
                    return fail(Certificate::Kind::CombinationContradiction, si,
                                "0 = " + to_string(rel.constant));
                active.erase(active.begin() + ai);
                --ai;
                changed = true;
                continue;
            }
            bool nonneg = all_coeffs_nonneg(rel), nonpos = all_coeffs_nonpos(rel);
            if ((nonneg && rel.constant < 0) || (nonpos && rel.constant > 0))
                return fail(Certificate::Kind::CombinationContradiction, si,
                            "sign-definite sum equals a constant of the opposite sign: " +
                                rel.to_string());
            if (rel.coeffs.size() == 1) {
                const auto& [v, c] = *rel.coeffs.begin();
                Rat val = rel.constant / c;
                if (val < 0 || !is_integer(val))
                    return fail(Certificate::Kind::NegativeForced, si,
                                v + " = " + to_string(val) +
                                    " violates nonnegative integrality");
                known[v] = val.get_num();
                // substitute into every other active relation containing v
                for (size_t bj = 0; bj < active.size(); ++bj) {
                    size_t sj = active[bj];
                    if (sj == si) continue;
                    auto it = steps[sj].relation.coeffs.find(v);
                    if (it == steps[sj].relation.coeffs.end()) continue;
                    Rat f = -(it->second / c);
                    DerivationStep st;
                    st.kind = DerivationStep::Kind::Combination;
                    st.relation = steps[sj].relation.plus(rel, f);
                    st.from = {{sj, Rat(1)}, {si, f}};
                    st.note = "substitute " + v;
                    steps.push_back(std::move(st));
                    active[bj] = steps.size() - 1;
                }
                active.erase(active.begin() + ai);
                --ai;
                changed = true;
                continue;
            }
            if ((nonneg || nonpos) && rel.constant == 0) {
                // all terms of one sign summing to zero force every variable to 0
                for (const auto& [v, c] : rel.coeffs) {
                    DerivationStep st;
                    st.kind = DerivationStep::Kind::ZeroForced;
                    st.relation = AffineRelation({{v, Rat(1)}}, Rat(0));
                    st.source = si;
                    st.note = "nonnegativity forces " + v + " = 0";
                    steps.push_back(std::move(st));
                    active.push_back(steps.size() - 1);
                }
                active.erase(active.begin() + ai);
                --ai;
                changed = true;
                continue;
            }
        }
    }

    if (active.empty()) {
        verdict.kind = Verdict::Kind::Feasible;
        for (const auto& v : vars) {
            auto it = known.find(v);
            verdict.witness[v] = it == known.end() ? Int(0) : it->second;
        }
        return verdict;
    }

    // remaining coupled relations: bound the surviving variables from
    // sign-definite relations and exhaust the finite box
    std::vector<std::string> remaining;
    for (size_t si : active) {
        for (const auto& [v, c] : steps[si].relation.coeffs) {
            if (std::find(remaining.begin(), remaining.end(), v) == remaining.end())
                remaining.push_back(v);
        }
    }
    std::map<std::string, Int> upper;
    for (size_t si : active) {
        const auto& rel = steps[si].relation;
        AffineRelation r = rel;
        if (all_coeffs_nonpos(r)) r = r.scaled(-1);
        if (!all_coeffs_nonneg(r) || r.constant < 0) continue;
        for (const auto& [v, c] : r.coeffs) {
            Rat b = r.constant / c;
            Int ub = b.get_num() / b.get_den();  // floor for nonneg b
            auto it = upper.find(v);
            if (it == upper.end() || ub < it->second) upper[v] = ub;
        }
    }
    for (const auto& v : remaining) {
        if (!upper.count(v)) {
            verdict.kind = Verdict::Kind::Unknown;
            verdict.reason = "variable " + v + " is unbounded after propagation";
            return verdict;
        }
    }
    Int box_size = 1;
    for (const auto& v : remaining) box_size *= upper[v] + 1;
    if (box_size > 10000000) {
        verdict.kind = Verdict::Kind::Unknown;
        verdict.reason = "bounded box has " + box_size.get_str() + " points (guard 1e7)";
        return verdict;
    }

    std::vector<Int> point(remaining.size(), Int(0));
    auto satisfies_all = [&]() {
        std::map<std::string, Rat> asg;
        for (size_t i = 0; i < remaining.size(); ++i) asg[remaining[i]] = Rat(point[i]);
        for (size_t si : active) {
            if (!steps[si].relation.holds_at(asg)) return false;
        }
        return true;
    };
    bool done = false;
    while (!done) {
        if (satisfies_all()) {
            verdict.kind = Verdict::Kind::Feasible;
            for (const auto& v : vars) verdict.witness[v] = 0;
            for (const auto& [v, val] : known) verdict.witness[v] = val;
            for (size_t i = 0; i < remaining.size(); ++i) verdict.witness[remaining[i]] = point[i];
            return verdict;
        }
        size_t d = 0;
        while (d < point.size()) {
            point[d] += 1;
            if (point[d] <= upper[remaining[d]]) break;
            point[d] = 0;
            ++d;
        }
        done = d == point.size();
    }
    verdict.kind = Verdict::Kind::Infeasible;
    verdict.certificate.kind = Certificate::Kind::ExhaustedBox;
    verdict.certificate.steps = steps;
    verdict.certificate.detail = "no nonnegative integer point in the propagated box";
    for (const auto& v : remaining)
        verdict.certificate.box[v] = {Int(0), upper[v]};
    return verdict;
}

unsigned long long CaseDomain::size() const {
    unsigned long long s = 1;
    for (const auto& [name, range] : dims) {
        long span = range.second - range.first + 1;
        if (span <= 0) return 0;
        s *= (unsigned long long)span;
        if (s > (1ull << 60)) return s;
    }
    return s;
}

std::vector<std::vector<long>> enumerate_cases(const CaseDomain& domain,
                                               const std::vector<CasePredicate>& predicates) {
    if (domain.size() > 10000000ull)
        throw std::domain_error("enumerate_cases: domain exceeds 1e7 points");
    std::vector<std::vector<long>> out;
    std::vector<long> point;
    point.reserve(domain.dims.size());
    for (const auto& [name, range] : domain.dims) point.push_back(range.first);
    if (domain.dims.empty()) return out;
    while (true) {
        bool ok = true;
        for (const auto& p : predicates) {
            if (!p.fn(point)) { ok = false; break; }
        }
        if (ok) out.push_back(point);
        size_t d = 0;
        while (d < point.size()) {
            ++point[d];
            if (point[d] <= domain.dims[d].second.second) break;
            point[d] = domain.dims[d].second.first;
            ++d;
        }
        if (d == point.size()) break;
    }
    return out;
}

}  // namespace aut120
