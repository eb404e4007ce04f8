#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksc/census.hpp"
#include "ksc/errors.hpp"
#include "ksc/foxcalc.hpp"
#include "ksc/kirby_ledger.hpp"
#include "ksc/levine.hpp"
#include "ksc/report.hpp"

namespace {

struct Options {
    std::string c;
    int central = -1;
    long long n = -1;
    bool n_set = false;
    std::string n_list;
    std::string format = "csv";
    long long max_records = ksc::kDefaultMaxRecords;
    std::string constants_file = "constants.json";
    std::string grid = "d<=5,|c|<=6";
    std::string file;
    bool check = false;
};

ksc::LevineParams params_from(const Options& opt) {
    if (opt.central != -1 && opt.central != 1)
        throw ksc::parse_error("--central must be +1 or -1");
    return {ksc::parse_c_list(opt.c), opt.central};
}

void parse_grid(const std::string& grid, int& dmax, long long& cmax) {
    if (std::sscanf(grid.c_str(), "d<=%d,|c|<=%lld", &dmax, &cmax) != 2 || dmax < 1 ||
        cmax < 0)
        throw ksc::parse_error("grid must look like \"d<=5,|c|<=6\"");
}

ksc::TheoremConstants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) return ksc::kCertifiedConstants;
    try {
        nlohmann::json j;
        in >> j;
        ksc::TheoremConstants k{j.at("A1").get<long long>(), j.at("A2").get<long long>(),
                                j.at("A3").get<long long>()};
        if (k.A1 < 1 || k.A2 < 1 || k.A3 < 1)
            throw ksc::parse_error("constants file " + path + ": entries must be positive");
        return k;
    } catch (const nlohmann::json::exception& e) {
        throw ksc::parse_error("constants file " + path + ": " + e.what());
    }
}

int cmd_alex(const Options& opt) {
    std::cout << ksc::alexander_closed(params_from(opt)).to_json() << '\n';
    return 0;
}

int cmd_diagram(const Options& opt) {
    std::cout << ksc::to_text(ksc::generate_diagram(params_from(opt)));
    return 0;
}

int cmd_oracle(const Options& opt) {
    bool have_params = !opt.c.empty();
    ksc::LevineParams params;
    if (have_params) params = params_from(opt);

    ksc::DiagramCode code;
    if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw ksc::io_error("cannot read " + opt.file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        code = ksc::parse_text(buffer.str());
    } else if (have_params) {
        code = ksc::generate_diagram(params);
    } else {
        throw ksc::parse_error("oracle needs --c or --file");
    }

    ksc::Laurent fox = ksc::fox_alexander(code);
    if (!opt.check) {
        std::cout << fox.to_json() << '\n';
        return 0;
    }
    if (!have_params) throw ksc::parse_error("--check needs --c");
    ksc::Laurent closed = ksc::alexander_closed(params);
    if (fox == closed) {
        std::cout << "MATCH\n";
        return 0;
    }
    std::cout << "MISMATCH: " << fox.to_json() << " vs " << closed.to_json() << '\n';
    return 1;
}

int cmd_ledger(const Options& opt) {
    auto ledger = ksc::build_ledger(params_from(opt));
    if (opt.format == "csv") {
        std::cout << ledger.to_csv();
        return 0;
    }
    std::ostringstream out;
    out << "{\"stages\":[";
    for (size_t i = 0; i < ledger.stages.size(); ++i) {
        const auto& row = ledger.stages[i];
        out << (i ? "," : "") << "{\"label\":\"" << row.label << "\",\"disks\":" << row.disks
            << ",\"strands\":" << row.strands << ",\"crossings\":" << row.crossings << "}";
    }
    out << "],\"disks_total\":" << ledger.disks_total
        << ",\"strands_total\":" << ledger.strands_total
        << ",\"crossings_total\":" << ledger.crossings_total
        << ",\"bound_total\":" << ledger.bound_total() << "}";
    std::cout << out.str() << '\n';
    return 0;
}

int cmd_constants(const Options& opt) {
    int dmax = 0;
    long long cmax = 0;
    parse_grid(opt.grid, dmax, cmax);
    ksc::TheoremConstants k = ksc::fit_constants(ksc::parameter_grid(dmax, cmax));
    std::string json = ksc::constants_to_json(k, opt.grid);
    std::cout << json << '\n';
    std::ofstream out(opt.constants_file);
    if (!out) throw ksc::io_error("cannot write " + opt.constants_file);
    out << json << '\n';
    return 0;
}

int cmd_census(const Options& opt) {
    if (!opt.n_set) throw ksc::parse_error("census needs --n");
    if (opt.n < 0) throw ksc::precondition_error("census budget must be nonnegative");
    ksc::TheoremConstants k = load_constants(opt.constants_file);
    bool json = opt.format == "json";
    std::ostream& out = std::cout;
    if (json) out << '[';
    else out << "d,c,central,bound,poly\n";
    bool first = true;
    ksc::for_each_census(opt.n, k, opt.max_records,
                         [&](const ksc::LevineParams& p, long long bound) {
                             ksc::Laurent poly = ksc::alexander_closed(p);
                             if (json) {
                                 if (!first) out << ',';
                                 out << "{\"c\":[";
                                 for (size_t i = 0; i < p.c.size(); ++i)
                                     out << (i ? "," : "") << p.c[i];
                                 out << "],\"central\":" << p.central
                                     << ",\"bound\":" << bound
                                     << ",\"poly\":" << poly.to_json() << "}";
                             } else {
                                 out << p.c.size() << ',';
                                 for (size_t i = 0; i < p.c.size(); ++i)
                                     out << (i ? ";" : "") << p.c[i];
                                 out << ',' << p.central << ',' << bound << ','
                                     << poly.to_text() << '\n';
                             }
                             first = false;
                         });
    if (json) out << "]\n";
    return 0;
}

int cmd_bounds(const Options& opt) {
    std::vector<long long> budgets;
    if (!opt.n_list.empty()) {
        for (long long v : ksc::parse_c_list(opt.n_list)) budgets.push_back(v);
    } else if (opt.n_set) {
        budgets.push_back(opt.n);
    } else {
        throw ksc::parse_error("bounds needs --n or --n-list");
    }
    for (long long n : budgets)
        if (n < 0) throw ksc::precondition_error("budgets must be nonnegative");

    ksc::TheoremConstants k = load_constants(opt.constants_file);
    if (opt.format == "json") {
        std::cout << '[';
        for (size_t i = 0; i < budgets.size(); ++i)
            std::cout << (i ? "," : "")
                      << ksc::bound_report_json(ksc::bound_report(budgets[i], k, opt.max_records));
        std::cout << "]\n";
        return 0;
    }
    std::cout << ksc::bound_report_csv_header() << '\n';
    for (long long n : budgets)
        std::cout << ksc::bound_report_csv_row(ksc::bound_report(n, k, opt.max_records))
                  << '\n';
    return 0;
}

int cmd_report() {
    auto results = ksc::run_criteria();
    results.push_back(ksc::run_determinism_probe());
    std::cout << ksc::render_report(results);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted-band knot family: polynomials, diagrams, and complexity census"};
    app.require_subcommand(1);

    Options opt;
    int status = 0;

    auto add_params = [&](CLI::App* sub, bool required) {
        auto* copt = sub->add_option("--c", opt.c, "comma-separated twist entries");
        if (required) copt->required();
        sub->add_option("--central", opt.central, "central twist sign (+1 or -1)");
    };

    auto* alex = app.add_subcommand("alex", "closed-form polynomial as JSON");
    add_params(alex, true);
    alex->callback([&] { status = cmd_alex(opt); });

    auto* diagram = app.add_subcommand("diagram", "crossing code for the band diagram");
    add_params(diagram, true);
    diagram->callback([&] { status = cmd_diagram(opt); });

    auto* oracle = app.add_subcommand("oracle", "derivative-based polynomial from a diagram");
    add_params(oracle, false);
    oracle->add_option("--file", opt.file, "diagram file to read instead of generating");
    oracle->add_flag("--check", opt.check, "compare against the closed form");
    oracle->callback([&] { status = cmd_oracle(opt); });

    auto* ledger = app.add_subcommand("ledger", "stage-by-stage complexity accounting");
    add_params(ledger, true);
    ledger->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    ledger->callback([&] { status = cmd_ledger(opt); });

    auto* constants = app.add_subcommand("constants", "fit and pin the bound constants");
    constants->add_option("--grid", opt.grid, "fitting grid, e.g. \"d<=5,|c|<=6\"");
    constants->add_option("--constants-file", opt.constants_file, "output path");
    constants->callback([&] { status = cmd_constants(opt); });

    auto* census = app.add_subcommand("census", "enumerate tuples under a budget");
    census->add_option("--n", opt.n, "complexity budget")->each([&](const std::string&) {
        opt.n_set = true;
    });
    census->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--max-records", opt.max_records, "enumeration cap");
    census->add_option("--constants-file", opt.constants_file, "constants to load if present");
    census->callback([&] { status = cmd_census(opt); });

    auto* bounds = app.add_subcommand("bounds", "bound reports for one or more budgets");
    bounds->add_option("--n", opt.n, "single budget")->each([&](const std::string&) {
        opt.n_set = true;
    });
    bounds->add_option("--n-list", opt.n_list, "comma-separated budgets");
    bounds->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--max-records", opt.max_records, "enumeration cap");
    bounds->add_option("--constants-file", opt.constants_file, "constants to load if present");
    bounds->callback([&] { status = cmd_bounds(opt); });

    auto* report = app.add_subcommand("report", "full acceptance sweep");
    report->callback([&] { status = cmd_report(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ksc::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ksc::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ksc::degenerate_determinant_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ksc::invalid_seifert_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const ksc::budget_infeasible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 6;
    } catch (const ksc::too_small_budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 7;
    } catch (const ksc::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 8;
    } catch (const ksc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
