// Copyright 2026 The streamift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <streamift/classical.hpp>
#include <streamift/parser.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace streamift;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string path;
    std::vector<std::size_t> k{10};
    std::string method = "sde";
    std::size_t repeat = 3;
    std::string order;
};

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

VarOrder parse_order(const std::string &text, const std::vector<std::string> &names)
{
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<std::uint32_t> seq;
    for (std::string w; in >> w;) {
        auto it = std::find(names.begin(), names.end(), w);
        if (it == names.end()) {
            throw usage_error("--order: unknown identifier '" + w + "'");
        }
        seq.push_back(static_cast<std::uint32_t>(it - names.begin() + 1));
    }
    try {
        return VarOrder::from_sequence(std::move(seq));
    } catch (const std::invalid_argument &) {
        throw usage_error("--order must list every unknown exactly once");
    }
}

std::variant<PolySystem, SdeSystem> load(const Options &opt)
{
    auto doc = parse_document(read_file(opt.path));
    if (auto *sys = std::get_if<PolySystem>(&doc); sys != nullptr && !opt.order.empty()) {
        if (parse_order(opt.order, sys->names).size() != sys->n()) {
            throw usage_error("--order must list every unknown exactly once");
        }
        sys->order = DerivationOrder(parse_order(opt.order, sys->names));
    }
    return doc;
}

PolySystem load_system(const Options &opt)
{
    auto doc = load(opt);
    if (auto *sys = std::get_if<PolySystem>(&doc)) {
        return std::move(*sys);
    }
    throw usage_error("this command needs a polynomial system file, not an SDE file");
}

void print_rows(std::ostream &out, const std::vector<std::string> &names, const std::vector<Coeffs> &rows,
                std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        out << names[i] << ": " << format_coeffs(rows[i]) << '\n';
    }
}

int cmd_check(const Options &opt)
{
    const PolySystem sys = load_system(opt);
    const HypothesisReport r = check_hypotheses(sys);
    std::cout << format_report(r);
    return r.ok ? exit_ok : exit_fail;
}

int cmd_sde(const Options &opt)
{
    const PolySystem sys = load_system(opt);
    std::cout << format_sde(derive_pipeline(sys));
    return exit_ok;
}

int cmd_coeffs(const Options &opt)
{
    if (opt.k.size() != 1) {
        throw usage_error("coeffs takes a single -k");
    }
    const std::size_t k = opt.k.front();
    auto doc = load(opt);
    if (auto *sde = std::get_if<SdeSystem>(&doc)) {
        if (opt.method != "sde") {
            throw usage_error("SDE files only support --method sde");
        }
        print_rows(std::cout, sde->names, solve_streams(*sde, k), sde->size());
        return exit_ok;
    }
    const auto &sys = std::get<PolySystem>(doc);
    if (opt.method == "sde") {
        print_rows(std::cout, sys.names, solve_streams(derive_pipeline(sys), k), sys.n());
        return exit_ok;
    }
    if (opt.method == "ode") {
        print_rows(std::cout, sys.names, taylor_solve(build_classical_ode(sys), k), sys.n());
        return exit_ok;
    }
    const auto sde = solve_streams(derive_pipeline(sys), k);
    const auto ode = taylor_solve(build_classical_ode(sys), k);
    print_rows(std::cout, sys.names, sde, sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i) {
        if (sde[i] != ode[i]) {
            std::cerr << "methods disagree on " << sys.names[i] << '\n';
            print_rows(std::cerr, sys.names, ode, sys.n());
            return exit_fail;
        }
    }
    return exit_ok;
}

int cmd_compare(const Options &opt)
{
    if (opt.k.size() != 1) {
        throw usage_error("compare takes a single -k");
    }
    const PolySystem sys = load_system(opt);
    const ComparisonReport r = compare_methods(sys, opt.k.front());
    std::cout << format_comparison(r, sys.names);
    return r.agree() ? exit_ok : exit_fail;
}

int cmd_metric(const Options &opt)
{
    std::cout << format_metric(derivative_size_metric(load_system(opt)));
    return exit_ok;
}

struct Timing {
    double seconds;
    std::size_t products;
    std::size_t sums;
};

Timing time_solve(const IvpSystem &ivp, SolveMode mode, std::size_t k, std::size_t repeat)
{
    std::vector<double> samples;
    std::size_t products = 0;
    std::size_t sums = 0;
    for (std::size_t r = 0; r < repeat; ++r) {
        const auto start = std::chrono::steady_clock::now();
        StreamSolution sol(build_term_graph(ivp), mode);
        sol.extend(k);
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double>(stop - start).count());
        products = sol.graph().products();
        sums = sol.graph().sums();
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const double median = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    return {median, products, sums};
}

int cmd_bench(const Options &opt)
{
    if (opt.repeat == 0) {
        throw usage_error("--repeat must be positive");
    }
    if (!std::is_sorted(opt.k.begin(), opt.k.end())
        || std::adjacent_find(opt.k.begin(), opt.k.end()) != opt.k.end()) {
        throw usage_error("-k values must be strictly increasing");
    }
    const std::string name = std::filesystem::path(opt.path).stem().string();
    auto doc = load(opt);
    std::vector<std::pair<std::string, std::pair<IvpSystem, SolveMode>>> methods;
    if (auto *sde = std::get_if<SdeSystem>(&doc)) {
        methods.push_back({"sde-recurrence", {*sde, SolveMode::Stream}});
    } else {
        const auto &sys = std::get<PolySystem>(doc);
        if (opt.method != "ode") {
            methods.push_back({"sde-recurrence", {derive_pipeline(sys), SolveMode::Stream}});
        }
        if (opt.method != "sde") {
            methods.push_back({"ode-series", {build_classical_ode(sys), SolveMode::Taylor}});
        }
    }
    std::cout << "system,method,k,seconds,P,S\n";
    for (const auto &[method, setup] : methods) {
        for (const auto k : opt.k) {
            const Timing t = time_solve(setup.first, setup.second, k, opt.repeat);
            std::cout << name << ',' << method << ',' << k << ',' << t.seconds << ',' << t.products << ','
                      << t.sums << '\n';
        }
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Stream implicit function theorem: derive SDEs and compute stream coefficients"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("file", opt.path, "system file")->required();
        sub->add_option("--order", opt.order, "total order on the unknowns, least first (e.g. y3,y1,y2)");
    };
    auto *check = app.add_subcommand("check", "verify the stream IFT hypotheses");
    add_common(check);
    auto *sde = app.add_subcommand("sde", "print the derived polynomial SDE system");
    add_common(sde);
    auto *coeffs = app.add_subcommand("coeffs", "print stream coefficients 0..k");
    add_common(coeffs);
    coeffs->add_option("-k", opt.k, "highest coefficient index")->expected(1)->check(CLI::NonNegativeNumber);
    coeffs->add_option("--method", opt.method, "sde, ode or both")
        ->check(CLI::IsMember({"sde", "ode", "both"}));
    auto *compare = app.add_subcommand("compare", "compare the SDE and ODE coefficient streams");
    add_common(compare);
    compare->add_option("-k", opt.k, "highest coefficient index")->expected(1)->check(CLI::NonNegativeNumber);
    auto *bench = app.add_subcommand("bench", "time coefficient generation, CSV on stdout");
    add_common(bench);
    bench->add_option("-k", opt.k, "coefficient counts, comma separated")
        ->delimiter(',')
        ->expected(1, 1000)
        ->required();
    bench->add_option("--repeat", opt.repeat, "repeats per measurement (median reported)");
    bench->add_option("--method", opt.method, "sde, ode or both")->check(CLI::IsMember({"sde", "ode", "both"}));
    auto *metric = app.add_subcommand("metric", "derivative size and operator counts of both methods");
    add_common(metric);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (bench->parsed() && opt.method == "sde" && bench->count("--method") == 0) {
        opt.method = "both";
    }

    try {
        if (check->parsed()) {
            return cmd_check(opt);
        }
        if (sde->parsed()) {
            return cmd_sde(opt);
        }
        if (coeffs->parsed()) {
            return cmd_coeffs(opt);
        }
        if (compare->parsed()) {
            return cmd_compare(opt);
        }
        if (bench->parsed()) {
            return cmd_bench(opt);
        }
        return cmd_metric(opt);
    } catch (const hypothesis_failure &e) {
        std::cerr << e.what();
        return exit_fail;
    } catch (const parse_error &e) {
        std::cerr << opt.path << (e.line() == 0 ? ": " : ":") << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error &e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
