#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qgrass/counts.hpp"
#include "qgrass/covering.hpp"
#include "qgrass/family.hpp"
#include "qgrass/harness.hpp"
#include "qgrass/serialize.hpp"

namespace {

using namespace qgrass;

struct GlobalOpts {
    uint64_t budget = EnumerationBudget::from_env_or_default().max_count;
    uint64_t seed = 0;
    std::string format = "human";
    std::string out_dir = ".";
};

EnumerationBudget budget_of(const GlobalOpts& g) { return EnumerationBudget{g.budget}; }

Family build_named(const std::string& name, int t, int k, int n, int q, std::optional<int> c,
                   const GlobalOpts& g) {
    const FieldSpec& f = make_field(q);
    EnumerationBudget budget = budget_of(g);
    if (name == "h1") {
        Flag flag = build_flag(n, f, {t, k + 1}, g.seed);
        return build_h1(flag.at_dim(t), flag.at_dim(k + 1), t, k, budget);
    }
    if (name == "h2") {
        if (!c) throw CLI::ValidationError("--c is required for h2");
        if (*c == n) {
            Flag flag = build_flag(n, f, {t, k}, g.seed);
            return build_h2(flag.at_dim(t), flag.at_dim(k), Subspace::full(n, f), t, k, budget);
        }
        Flag flag = build_flag(n, f, {t, k, *c}, g.seed);
        return build_h2(flag.at_dim(t), flag.at_dim(k), flag.at_dim(*c), t, k, budget);
    }
    if (name == "h3") {
        Flag flag = build_flag(n, f, {t + 2}, g.seed);
        return build_h3(flag.at_dim(t + 2), t, k, budget);
    }
    throw CLI::ValidationError("unknown family: " + name + " (expected h1, h2 or h3)");
}

ExactInt closed_form(const std::string& name, int t, int k, int n, int q, std::optional<int> c) {
    if (name == "h1") return h1_size(t, k, n, q);
    if (name == "h2") {
        if (!c) throw CLI::ValidationError("--c is required for h2");
        return h2_size(t, k, *c, n, q);
    }
    if (name == "h3") return h3_size(t, k, n, q);
    throw CLI::ValidationError("unknown family: " + name);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int emit_report(const Report& report, const GlobalOpts& g, const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(g.out_dir);
    std::string json_path = (fs::path(g.out_dir) / (stem + ".json")).string();
    std::string csv_path = (fs::path(g.out_dir) / (stem + ".csv")).string();
    write_text(json_path, report.to_json().dump(2) + "\n");
    write_text(csv_path, report.to_csv());
    size_t pass = report.count(CheckStatus::Pass);
    size_t fail = report.count(CheckStatus::Fail);
    size_t skip = report.count(CheckStatus::Skip);
    if (g.format == "human") {
        std::cout << "campaign " << report.campaign_id << ": " << pass << " pass, " << fail << " fail, "
                  << skip << " skip\n";
        std::cout << "reports: " << json_path << " " << csv_path << "\n";
        if (fail > 0) {
            for (const auto& r : report.records) {
                if (r.status != CheckStatus::Fail) continue;
                std::cout << "FAIL " << r.check << " " << r.params << " expected " << r.expected
                          << " actual " << r.actual << "\n";
            }
        }
    } else if (g.format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.to_csv();
    }
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for extremal families of subspaces over GF(q)"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--budget", g.budget, "enumeration cap (overrides QGRASS_BUDGET)");
    app.add_option("--seed", g.seed, "seed for deterministic flag construction");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--out", g.out_dir, "output directory for report files");

    // qbinom
    long qb_a = 0, qb_b = 0;
    int qb_q = 2;
    auto* cmd_qbinom = app.add_subcommand("qbinom", "evaluate a Gaussian binomial coefficient");
    cmd_qbinom->add_option("a", qb_a, "upper index")->required();
    cmd_qbinom->add_option("b", qb_b, "lower index")->required();
    cmd_qbinom->add_option("--q", qb_q, "field order")->required();

    // size
    std::string sz_family;
    int sz_t = 1, sz_k = 3, sz_n = 6, sz_q = 2;
    std::optional<int> sz_c;
    bool sz_enumerate = false;
    auto* cmd_size = app.add_subcommand("size", "closed-form family size, optionally cross-checked");
    cmd_size->add_option("family", sz_family, "h1, h2 or h3")->required();
    cmd_size->add_option("--t", sz_t)->required();
    cmd_size->add_option("--k", sz_k)->required();
    cmd_size->add_option("--n", sz_n)->required();
    cmd_size->add_option("--q", sz_q)->required();
    cmd_size->add_option("--c", sz_c, "span dimension for h2");
    cmd_size->add_flag("--enumerate", sz_enumerate, "also build the family and compare");

    // construct
    std::string ct_family, ct_out;
    int ct_t = 1, ct_k = 3, ct_n = 6, ct_q = 2;
    std::optional<int> ct_c;
    bool ct_binary = false;
    auto* cmd_construct = app.add_subcommand("construct", "build a family and write it to a file");
    cmd_construct->add_option("family", ct_family, "h1, h2 or h3")->required();
    cmd_construct->add_option("--t", ct_t)->required();
    cmd_construct->add_option("--k", ct_k)->required();
    cmd_construct->add_option("--n", ct_n)->required();
    cmd_construct->add_option("--q", ct_q)->required();
    cmd_construct->add_option("--c", ct_c, "span dimension for h2");
    cmd_construct->add_option("--out-file", ct_out, "output path")->required();
    cmd_construct->add_flag("--binary", ct_binary, "write the compact binary format");

    // check
    std::string ck_file, ck_family, ck_checks = "intersecting,trivial,maximal,tau,structure";
    int ck_t = 1, ck_k = 3, ck_n = 6, ck_q = 2;
    std::optional<int> ck_c;
    auto* cmd_check = app.add_subcommand("check", "run structural predicates on a family");
    cmd_check->add_option("--file", ck_file, "family file (json or binary)");
    cmd_check->add_option("--family", ck_family, "built-in construction: h1, h2 or h3");
    cmd_check->add_option("--t", ck_t);
    cmd_check->add_option("--k", ck_k);
    cmd_check->add_option("--n", ck_n);
    cmd_check->add_option("--q", ck_q);
    cmd_check->add_option("--c", ck_c);
    cmd_check->add_option("--checks", ck_checks, "comma-separated subset of intersecting,trivial,maximal,tau,structure");

    // tau
    std::string tau_file, tau_family;
    int tau_t = 1, tau_k = 3, tau_n = 6, tau_q = 2, tau_max_level = -1;
    std::optional<int> tau_c;
    auto* cmd_tau = app.add_subcommand("tau", "compute the t-covering number of a family");
    cmd_tau->add_option("--file", tau_file);
    cmd_tau->add_option("--family", tau_family);
    cmd_tau->add_option("--t", tau_t);
    cmd_tau->add_option("--k", tau_k);
    cmd_tau->add_option("--n", tau_n);
    cmd_tau->add_option("--q", tau_q);
    cmd_tau->add_option("--c", tau_c);
    cmd_tau->add_option("--max-level", tau_max_level, "highest level to search (default k)");

    // sweep
    std::string sw_suites = "identities,inequalities,dichotomy";
    std::vector<int> sw_qs{2, 3, 4, 5};
    int sw_tmax = 6, sw_kmax = 10, sw_nmax = 40;
    auto* cmd_sweep = app.add_subcommand("sweep", "formula-level verification sweeps on the wide grid");
    cmd_sweep->add_option("--suites", sw_suites, "subset of identities,inequalities,dichotomy");
    cmd_sweep->add_option("--qs", sw_qs, "field orders");
    cmd_sweep->add_option("--t-max", sw_tmax);
    cmd_sweep->add_option("--k-max", sw_kmax);
    cmd_sweep->add_option("--n-max", sw_nmax);

    // campaign
    std::string cp_config;
    bool cp_print_default = false;
    auto* cmd_campaign = app.add_subcommand("campaign", "run a declarative verification campaign");
    cmd_campaign->add_option("config", cp_config, "campaign config file (json)");
    cmd_campaign->add_flag("--print-default", cp_print_default, "print the default desk campaign and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_qbinom) {
            ExactInt v = gauss_binom(qb_a, qb_b, qb_q);
            if (g.format == "human") {
                std::cout << "[" << qb_a << ", " << qb_b << "]_" << qb_q << " = " << v.get_str() << "\n";
            } else if (g.format == "json") {
                nlohmann::ordered_json j{{"a", qb_a}, {"b", qb_b}, {"q", qb_q}, {"value", v.get_str()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "a,b,q,value\n" << qb_a << ',' << qb_b << ',' << qb_q << ',' << v.get_str() << "\n";
            }
            return 0;
        }

        if (*cmd_size) {
            ExactInt want = closed_form(sz_family, sz_t, sz_k, sz_n, sz_q, sz_c);
            if (!sz_enumerate) {
                if (g.format == "human") std::cout << want.get_str() << "\n";
                else if (g.format == "json") {
                    nlohmann::ordered_json j{{"family", sz_family}, {"t", sz_t}, {"k", sz_k}, {"n", sz_n},
                                             {"q", sz_q}, {"value", want.get_str()}};
                    if (sz_c) j["c"] = *sz_c;
                    std::cout << j.dump() << "\n";
                } else std::cout << "family,value\n" << sz_family << ',' << want.get_str() << "\n";
                return 0;
            }
            Family fam = build_named(sz_family, sz_t, sz_k, sz_n, sz_q, sz_c, g);
            bool match = cmp(want, static_cast<unsigned long>(fam.size())) == 0;
            if (g.format == "human") {
                std::cout << want.get_str() << " / " << fam.size() << " / " << (match ? "MATCH" : "MISMATCH")
                          << "\n";
            } else if (g.format == "json") {
                nlohmann::ordered_json j{{"family", sz_family}, {"closed_form", want.get_str()},
                                         {"enumerated", fam.size()}, {"match", match}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "family,closed_form,enumerated,match\n"
                          << sz_family << ',' << want.get_str() << ',' << fam.size() << ','
                          << (match ? "true" : "false") << "\n";
            }
            return match ? 0 : 1;
        }

        if (*cmd_construct) {
            Family fam = build_named(ct_family, ct_t, ct_k, ct_n, ct_q, ct_c, g);
            save_family(fam, ct_out, ct_binary);
            if (g.format == "human")
                std::cout << "wrote " << construction_name(fam.construction()) << " with " << fam.size()
                          << " members to " << ct_out << "\n";
            return 0;
        }

        if (*cmd_check || *cmd_tau) {
            bool tau_only = static_cast<bool>(*cmd_tau);
            std::string file = tau_only ? tau_file : ck_file;
            std::string family = tau_only ? tau_family : ck_family;
            Family fam = [&]() {
                if (!file.empty()) return load_family(file);
                if (family.empty())
                    throw CLI::ValidationError("provide --file or --family");
                if (tau_only) return build_named(family, tau_t, tau_k, tau_n, tau_q, tau_c, g);
                return build_named(family, ck_t, ck_k, ck_n, ck_q, ck_c, g);
            }();
            const auto& p = fam.params();
            EnumerationBudget budget = budget_of(g);

            if (tau_only) {
                int max_level = tau_max_level > 0 ? tau_max_level : p.k;
                CoveringResult cover = covering_number(fam, p.t, max_level, budget);
                if (cover.found())
                    std::cout << "tau_" << p.t << " = " << *cover.level << " with "
                              << cover.witnesses.size() << " witnesses\n";
                else
                    std::cout << "tau_" << p.t << " > " << max_level << "\n";
                return cover.found() ? 0 : 1;
            }

            bool all_ok = true;
            std::optional<CoveringResult> cover;
            std::istringstream checks_in(ck_checks);
            std::string item;
            while (std::getline(checks_in, item, ',')) {
                if (item == "intersecting") {
                    auto r = is_t_intersecting(fam);
                    std::cout << "intersecting: " << (r.ok ? "yes" : "no") << "\n";
                    if (!r.ok) all_ok = false;
                } else if (item == "trivial") {
                    int core = common_core_dim(fam);
                    bool trivial = core >= p.t;
                    std::cout << "trivial: " << (trivial ? "yes" : "no") << " (core dim " << core << ")\n";
                    if (trivial) all_ok = false;
                } else if (item == "maximal") {
                    auto r = is_maximal(fam, budget);
                    std::cout << "maximal: " << (r.maximal ? "yes" : "no") << "\n";
                    if (!r.maximal) all_ok = false;
                } else if (item == "tau") {
                    cover = covering_number(fam, p.t, p.k, budget);
                    if (cover->found())
                        std::cout << "tau: " << *cover->level << " (witnesses " << cover->witnesses.size()
                                  << ")\n";
                    else {
                        std::cout << "tau: > " << p.k << "\n";
                        all_ok = false;
                    }
                } else if (item == "structure") {
                    if (!cover) cover = covering_number(fam, p.t, p.k, budget);
                    if (!cover->found() || *cover->level != p.t + 1) {
                        std::cout << "structure: not a level-(t+1) family\n";
                        all_ok = false;
                        continue;
                    }
                    TStructure ts = analyze_T_structure(fam, *cover, budget);
                    switch (ts.shape) {
                        case WitnessShape::StarOnX:
                            std::cout << "structure: star, witness span dim " << ts.l << "\n";
                            if (ts.l == p.k || ts.l == p.k + 1) {
                                Family rebuilt = reconstruct_from_structure(fam, ts, budget);
                                bool same = rebuilt == fam;
                                std::cout << "rebuild: " << (same ? "identical" : "differs") << "\n";
                                if (!same) all_ok = false;
                            }
                            break;
                        case WitnessShape::AllOfZ: {
                            std::cout << "structure: all (t+1)-subspaces of a (t+2)-space\n";
                            Family rebuilt = reconstruct_from_structure(fam, ts, budget);
                            bool same = rebuilt == fam;
                            std::cout << "rebuild: " << (same ? "identical" : "differs") << "\n";
                            if (!same) all_ok = false;
                            break;
                        }
                        case WitnessShape::Anomaly:
                            std::cout << "structure: anomaly\n";
                            all_ok = false;
                            break;
                    }
                } else if (!item.empty()) {
                    throw CLI::ValidationError("unknown check: " + item);
                }
            }
            return all_ok ? 0 : 1;
        }

        if (*cmd_sweep) {
            Campaign c;
            c.id = "sweep";
            c.checks.clear();
            std::istringstream suites_in(sw_suites);
            std::string suite;
            while (std::getline(suites_in, suite, ',')) {
                if (suite == "inequalities" || suite == "identities" || suite == "dichotomy")
                    c.checks.push_back(suite);
                else if (!suite.empty())
                    throw CLI::ValidationError("unknown sweep suite: " + suite);
            }
            c.formula_grid.qs = sw_qs;
            c.formula_grid.t_max = sw_tmax;
            c.formula_grid.k_max = sw_kmax;
            c.formula_grid.n_max = sw_nmax;
            c.budget = g.budget;
            c.seed = g.seed;
            Report report = run_campaign(c);
            return emit_report(report, g, "sweep");
        }

        if (*cmd_campaign) {
            if (cp_print_default) {
                std::cout << Campaign::desk_default().to_json().dump(2) << "\n";
                return 0;
            }
            if (cp_config.empty()) throw CLI::ValidationError("campaign: config file required");
            std::ifstream in(cp_config);
            if (!in) throw std::runtime_error("cannot open config: " + cp_config);
            Campaign c = Campaign::from_json(nlohmann::json::parse(in));
            if (g.budget != EnumerationBudget::from_env_or_default().max_count) c.budget = g.budget;
            Report report = run_campaign(c);
            return emit_report(report, g, "report");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
