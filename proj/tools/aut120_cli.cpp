#include <algorithm>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aut120/codes.hpp"
#include "aut120/feasibility.hpp"
#include "aut120/groups.hpp"
#include "aut120/pipelines.hpp"
#include "aut120/projection.hpp"
#include "aut120/report.hpp"
#include "aut120/scenario_io.hpp"
#include "aut120/transforms.hpp"

using namespace aut120;

namespace {

int exit_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

ReplayOptions make_options(const std::string& facts_file, bool no_fpf) {
    ReplayOptions opts;
    if (!facts_file.empty()) opts.facts = facts_from_file(facts_file);
    opts.no_fpf = no_fpf;
    return opts;
}

void print_weight_vector(const WeightVector& wv, const std::string& label, bool machine) {
    if (machine) {
        nlohmann::ordered_json rec;
        rec["what"] = label;
        nlohmann::ordered_json counts;
        for (const auto& [w, c] : wv.counts) counts[std::to_string(w)] = c.get_str();
        rec["n"] = std::to_string(wv.n);
        rec["counts"] = std::move(counts);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << label << " (n = " << wv.n << "): " << wv.to_string() << "\n";
    }
}

int generic_scenario_exclusion(const ConstraintScenario& scen, bool machine) {
    LinearSystem sys = assemble_system(scen);
    std::vector<std::string> prefer;
    for (const auto& v : sys.variables) prefer.push_back(v);  // grid order: low weights first
    SolvedSystem solved(sys, prefer);
    nlohmann::ordered_json rec;
    rec["scenario"] = scen.name;
    rec["variables"] = std::to_string(sys.variables.size());
    rec["equations"] = std::to_string(sys.size());
    rec["rank"] = std::to_string(solved.rank());
    if (solved.inconsistent()) {
        rec["verdict"] = "infeasible (rationally inconsistent)";
    } else {
        auto forms = solved.solved_forms();
        Verdict v = integer_feasible(forms, sys.variables);
        switch (v.kind) {
            case Verdict::Kind::Infeasible: {
                rec["verdict"] = "infeasible";
                rec["certificate"] = v.certificate.detail;
                rec["rechecked"] = recheck_certificate(v.certificate, forms) ? "true" : "false";
                break;
            }
            case Verdict::Kind::Feasible:
                rec["verdict"] = "no contradiction found (rational solution exists)";
                break;
            case Verdict::Kind::Unknown:
                rec["verdict"] = "unknown";
                rec["reason"] = v.reason;
                break;
        }
    }
    if (machine) {
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "scenario " << scen.name << ": " << sys.variables.size() << " variables, "
                  << sys.size() << " equations, rank " << rec["rank"].get<std::string>() << "\n";
        std::cout << "verdict: " << rec["verdict"].get<std::string>() << "\n";
        if (rec.contains("certificate"))
            std::cout << "certificate: " << rec["certificate"].get<std::string>() << "\n";
        if (rec.contains("reason"))
            std::cout << "reason: " << rec["reason"].get<std::string>() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact replay of the automorphism exclusions for a self-dual [120,60,24] code"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    std::string facts_file;
    app.add_option("--facts", facts_file, "fact table file ([fact] sections)");
    std::string scenario_file;
    app.add_option("--scenario", scenario_file, "scenario file ([model]/[assume]/[zero])");

    auto* kraw = app.add_subcommand("krawtchouk", "evaluate K_k(x; n) exactly");
    int kk = 0, kx = 0, kn = 0;
    kraw->add_option("k", kk)->required();
    kraw->add_option("x", kx)->required();
    kraw->add_option("n", kn)->required();

    auto* macw = app.add_subcommand("macwilliams",
                                    "weight distribution and dual distribution of a code");
    std::string macw_file;
    macw->add_option("file", macw_file, "generator file: first line \"n k\", then k rows")
        ->required();

    auto* excl = app.add_subcommand("exclude", "exclusion status of a prime cycle type");
    int ep = 0, ec = 0, ef = 0;
    excl->add_option("p", ep)->required();
    excl->add_option("c", ec)->required();
    excl->add_option("f", ef)->required();

    auto* rep = app.add_subcommand("replay", "replay one exclusion pipeline");
    std::string pipeline_id;
    rep->add_option("id", pipeline_id, "pipeline id, e.g. lemma-3.2")->required();

    auto* runall = app.add_subcommand("run-all", "replay every pipeline");

    auto* orders = app.add_subcommand("orders", "group-order screen");
    bool no_fpf = false;
    orders->add_flag("--no-fpf", no_fpf, "involutions keep 24 fixed points (exploratory)");

    auto* simsc = app.add_subcommand("simple-screen",
                                     "possible nonabelian composition factors");

    CLI11_PARSE(app, argc, argv);
    const bool machine = format == "machine";

    try {
        if (*kraw) {
            if (kk < 0 || kx < 0 || kn < 0 || kk > kn || kx > kn)
                return exit_usage("krawtchouk needs 0 <= k, x <= n");
            std::cout << krawtchouk(kk, kx, kn).get_str() << "\n";
            return 0;
        }
        if (*macw) {
            LinearCode code = LinearCode::from_file(macw_file);
            WeightVector wv = code.weight_distribution();
            print_weight_vector(wv, "weight distribution", machine);
            WeightVector dual = macwilliams(wv, code.length(), code.dimension());
            print_weight_vector(dual, "dual distribution", machine);
            return 0;
        }
        if (*excl) {
            if (!scenario_file.empty())
                return generic_scenario_exclusion(scenario_from_file(scenario_file), machine);
            const auto& base = prime_type_table_base();
            auto it = base.find(ep);
            bool in_base = false;
            if (it != base.end())
                in_base = std::count(it->second.begin(), it->second.end(),
                                     std::make_pair(ec, ef)) > 0;
            CycleType t = CycleType::prime(ep, ec, ef);
            if (!in_base) {
                std::cout << t.to_string()
                          << ": excluded (not an admissible cycle type for length 120)\n";
                return 0;
            }
            if (validate_prime_type(ep, ec, ef)) {
                std::cout << t.to_string() << ": allowed (present in the cycle-type table)\n";
                return 0;
            }
            // the four order-3 types with fixed points map to replay pipelines
            static const std::map<std::pair<int, int>, std::string> lemma = {
                {{32, 24}, "lemma-3.1"},
                {{34, 18}, "lemma-3.2"},
                {{36, 12}, "lemma-3.3"},
                {{38, 6}, "lemma-3.4"},
            };
            auto lit = lemma.find({ec, ef});
            if (lit == lemma.end()) return exit_usage("no replay pipeline for this type");
            Report r = replay(lit->second, make_options(facts_file, false));
            std::cout << (machine ? r.machine_format() : r.text_format());
            std::cout << t.to_string() << ": "
                      << (r.pass() ? "excluded (replay PASS)" : "replay FAILED") << "\n";
            return r.pass() ? 0 : 1;
        }
        if (*rep) {
            if (!has_pipeline(pipeline_id)) return exit_usage("unknown pipeline " + pipeline_id);
            Report r = replay(pipeline_id, make_options(facts_file, false));
            std::cout << (machine ? r.machine_format() : r.text_format());
            return r.pass() ? 0 : 1;
        }
        if (*runall) {
            auto reports = run_all(make_options(facts_file, false));
            std::cout << (machine ? machine_format(reports) : text_format(reports));
            for (const auto& r : reports) {
                if (!r.pass()) return 1;
            }
            return 0;
        }
        if (*orders) {
            FixTable fix = no_fpf ? FixTable::with_involution_fixed_points()
                                  : FixTable::fixed_point_free();
            FactTable facts =
                facts_file.empty() ? FactTable::defaults() : facts_from_file(facts_file);
            ScreenResult res = order_screen(fix, facts);
            if (machine) {
                for (const auto& s : res.survivors) {
                    nlohmann::ordered_json rec;
                    rec["order"] = s.order().get_str();
                    rec["factored"] = s.factored();
                    std::cout << rec.dump() << "\n";
                }
            } else {
                if (no_fpf)
                    std::cout << "exploratory mode: involutions keep 24 fixed points;"
                                 " orbit-count screening disabled\n";
                std::cout << "surviving orders (" << res.survivors.size() << "):\n";
                for (const auto& s : res.survivors)
                    std::cout << "  " << s.order().get_str() << " = " << s.factored() << "\n";
                std::cout << "exclusions: " << res.exclusions.size() << " (";
                int fact_count = 0;
                for (const auto& e : res.exclusions) fact_count += e.stage == "fact";
                std::cout << fact_count << " by cited facts, "
                          << res.exclusions.size() - fact_count << " by arithmetic)\n";
            }
            return 0;
        }
        if (*simsc) {
            auto rows = simple_factor_screen(3480, {2, 3, 5, 7, 19, 23, 29}, true);
            if (machine) {
                for (const auto& r : rows) {
                    nlohmann::ordered_json rec;
                    rec["name"] = r.name;
                    rec["order"] = std::to_string(r.order);
                    std::cout << rec.dump() << "\n";
                }
            } else {
                std::cout << "possible nonabelian composition factors:\n";
                for (const auto& r : rows)
                    std::cout << "  " << r.name << " (order " << r.order << ")\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        return exit_usage(ex.what());
    }
    return exit_usage("no subcommand");
}
