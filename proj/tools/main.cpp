#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "propcount/closedform.hpp"
#include "propcount/colored.hpp"
#include "propcount/forest.hpp"
#include "propcount/harness.hpp"
#include "propcount/kary.hpp"
#include "propcount/parking.hpp"
#include "propcount/series.hpp"

namespace {

using namespace propcount;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int cmd_verify(const std::string& suite, const harness::SuiteRanges& ranges,
               const std::string& format, const std::string& out_path) {
    auto records = harness::run_suite(suite, ranges);
    const bool ok = harness::all_pass(records);
    const auto fmt = harness::parse_format(format);
    if (out_path.empty()) {
        harness::emit(std::move(records), fmt, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        harness::emit(std::move(records), fmt, out);
    }
    return ok ? 0 : 1;
}

int cmd_count(const std::string& family, int n, int k, int c) {
    if (family == "forest") {
        std::cout << forest_count(n).get_str() << '\n';
    } else if (family == "kary") {
        std::cout << kary_count(n, k).get_str() << '\n';
    } else if (family == "colored") {
        std::cout << colored_forest_count(n, k).get_str() << '\n';
    } else if (family == "parking") {
        std::cout << parking_count(n, c).get_str() << '\n';
    } else {
        throw CLI::ValidationError("--family", "unknown family: " + family);
    }
    return 0;
}

int cmd_poly(const std::string& family, int n, int k, int c) {
    if (family == "forest") {
        std::cout << forest_vertex_poly(n).str() << '\n';
    } else if (family == "kary") {
        std::cout << (k >= 2 ? kary_triple_poly(n, k) : kary_prop_poly(n, k)).str() << '\n';
    } else if (family == "colored") {
        std::cout << colored_triple_poly(n, k).str() << '\n';
    } else if (family == "parking") {
        std::cout << lucky_poly(n, c).str() << '\n';
    } else if (family == "pn") {
        std::cout << p_poly(n).str() << '\n';
    } else if (family == "qn") {
        std::cout << q_poly(n).str() << '\n';
    } else {
        throw CLI::ValidationError("--family", "unknown family: " + family);
    }
    return 0;
}

int cmd_series(const std::string& kind, int order, int k, const std::string& a,
               const std::string& b, const std::string& u) {
    TruncatedSeries s(0);
    if (kind == "forests")
        s = solve_fixedpoint(FixedPointKind::Forests, order);
    else if (kind == "kary")
        s = solve_fixedpoint(FixedPointKind::Kary, order, k);
    else if (kind == "ordered")
        s = solve_fixedpoint(FixedPointKind::Ordered, order);
    else if (kind == "kcolor")
        s = solve_fixedpoint(FixedPointKind::KColor, order, k);
    else if (kind == "ode")
        s = solve_ode(parse_rat(a), parse_rat(b), parse_rat(u), order);
    else
        throw CLI::ValidationError("--kind", "unknown kind: " + kind);
    std::cout << "ordinary: " << s.str() << '\n';
    std::vector<Rat> egf;
    for (int n = 0; n <= s.order(); ++n) egf.push_back(s.egf_coeff(n));
    std::cout << "egf:      " << TruncatedSeries(s.order(), egf).str() << '\n';
    return 0;
}

int cmd_park(const std::string& prefs_text, int c, const std::string& order_text) {
    ParkingFn f;
    f.prefs = parse_int_list(prefs_text);
    f.n = static_cast<int>(f.prefs.size());
    f.c = c;
    std::vector<int> order;
    if (!order_text.empty()) order = parse_int_list(order_text);
    const ParkOutcome out = park(f, order);
    if (!out.success) {
        std::cout << "FAILURE\n";
        return 1;
    }
    std::cout << "assignment:";
    for (int z = 1; z <= f.n; ++z)
        std::cout << ' ' << z << "->" << out.assignment[static_cast<std::size_t>(z) - 1];
    std::cout << "\nlucky:";
    for (int z : out.lucky) std::cout << ' ' << z;
    std::cout << "\nempty:";
    for (int s : out.empty) std::cout << ' ' << s;
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of forest, tree and parking-function statistics"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite, format = "table", out_path;
    harness::SuiteRanges ranges;
    int n_max = 0, k_opt = 0, c_opt = 0, order_opt = 0;
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--n-max", n_max, "cap on n");
    verify->add_option("--k", k_opt, "restrict to one k");
    verify->add_option("--c", c_opt, "restrict to one c");
    verify->add_option("--order", order_opt, "series truncation order");
    verify->add_option("--format", format, "table|json|csv");
    verify->add_option("--out", out_path, "write the report to a file");

    // count
    auto* count = app.add_subcommand("count", "count a family by enumeration");
    std::string family;
    int n = 1, k = 2, c = 1;
    count->add_option("--family", family, "forest|kary|colored|parking")->required();
    count->add_option("--n", n, "number of labeled vertices / cars")->required();
    count->add_option("--k", k, "arity / colors");
    count->add_option("--c", c, "extra parking spaces");

    // poly
    auto* poly = app.add_subcommand("poly", "print an enumerated statistic polynomial");
    std::string pfamily;
    int pn = 1, pk = 2, pc = 1;
    poly->add_option("--family", pfamily, "forest|kary|colored|parking|pn|qn")->required();
    poly->add_option("--n", pn, "size")->required();
    poly->add_option("--k", pk, "arity / colors");
    poly->add_option("--c", pc, "extra parking spaces");

    // series
    auto* series = app.add_subcommand("series", "print series coefficients");
    std::string kind, sa = "1", sb = "1", su = "1";
    int sorder = 10, sk = 2;
    series->add_option("--kind", kind, "forests|kary|ordered|kcolor|ode")->required();
    series->add_option("--order", sorder, "truncation order")->required();
    series->add_option("--k", sk, "arity / colors");
    series->add_option("--a", sa, "ode parameter a as p/q");
    series->add_option("--b", sb, "ode parameter b as p/q");
    series->add_option("--u", su, "ode parameter u as p/q");

    // park
    auto* park_cmd = app.add_subcommand("park", "simulate the parking process");
    std::string prefs, arrival;
    int park_c = 1;
    park_cmd->add_option("--prefs", prefs, "comma-separated preferences")->required();
    park_cmd->add_option("--c", park_c, "extra spaces");
    park_cmd->add_option("--order", arrival, "arrival order, e.g. 2,1,3");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (n_max > 0) ranges.n_max = n_max;
            if (k_opt > 0) ranges.k = k_opt;
            if (c_opt > 0) ranges.c = c_opt;
            if (order_opt > 0) ranges.order = order_opt;
            return cmd_verify(suite, ranges, format, out_path);
        }
        if (count->parsed()) return cmd_count(family, n, k, c);
        if (poly->parsed()) return cmd_poly(pfamily, pn, pk, pc);
        if (series->parsed()) return cmd_series(kind, sorder, sk, sa, sb, su);
        if (park_cmd->parsed()) return cmd_park(prefs, park_c, arrival);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
