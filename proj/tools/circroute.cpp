#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "circroute/report.hpp"

namespace {

using namespace circroute;

std::pair<long long, long long> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const long long n = std::stoll(text);
        return {n, n};
    }
    return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
}

std::vector<long long> parse_s_policy(const std::string& text) {
    if (text == "all") return {};
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

int cmd_report(long long n, long long s, const std::string& format, long long ceiling) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc = build_report(n, s, ReportOptions{ceiling});
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (format == "json") {
        std::cout << doc.to_json().dump(2) << "\n";
    } else {
        doc.to_table(std::cout);
    }
    std::cerr << "elapsed_ms: " << elapsed.count() << "\n";
    return 0;
}

int cmd_verify(long long n, long long s, const std::string& suite, long long ceiling) {
    if (n > ceiling)
        throw DomainError("verify needs n <= max-exhaustive (" + std::to_string(ceiling) + ")");
    CirculantGraph g(n, s);
    VerifyResult result;
    if (suite == "routing") result = verify_routing(g);
    else if (suite == "lattice") result = verify_lattice(g);
    else if (suite == "colouring") result = verify_colouring(g);
    else result = verify_all(g);
    if (!result.pass) {
        std::cout << "FAIL " << suite << " (" << n << "," << s << "): " << result.detail << "\n";
        return 1;
    }
    std::cout << "PASS " << suite << " (" << n << "," << s << ")";
    if (!result.detail.empty()) std::cout << "  [" << result.detail << "]";
    std::cout << "\n";
    return 0;
}

int cmd_sweep(const std::string& range, const std::string& s_policy, const std::string& out,
              int jobs, long long ceiling) {
    SweepOptions opt;
    std::tie(opt.n_lo, opt.n_hi) = parse_range(range);
    opt.s_values = parse_s_policy(s_policy);
    opt.jobs = jobs;
    opt.report.max_exhaustive = ceiling;

    long long rows = 0;
    if (out.empty() || out == "-") {
        rows = run_sweep(opt, std::cout, std::cerr);
    } else {
        std::ofstream file(out);
        if (!file) throw DomainError("cannot open output file: " + out);
        rows = run_sweep(opt, file, std::cerr);
        if (!file) throw DomainError("write failed: " + out);
    }
    std::cerr << "sweep: " << rows << " rows\n";
    return 0;
}

int cmd_route(long long n, long long s, long long from, long long to) {
    CirculantGraph g(n, s);
    if (from < 0 || from >= n || to < 0 || to >= n) throw DomainError("node out of range [0, n)");
    if (from == to) throw DomainError("route needs distinct endpoints");
    Routing rt(g);
    OrientedPath p = rt.path(from, to);
    std::cout << "path: ";
    for (size_t t = 0; t < p.nodes.size(); ++t) std::cout << (t ? "," : "") << p.nodes[t];
    std::cout << "\nclass: i=" << p.cls.skips << " j=" << p.cls.rings << "  (" << p.cls.skips
              << " skip then " << p.cls.rings << " ring steps, sign = direction)\n";
    std::cout << "length: " << p.nodes.size() - 1 << "\n";
    return 0;
}

int cmd_colour(long long n, long long s, const std::string& variant_name, long long ceiling) {
    if (n > ceiling)
        throw DomainError("colour needs n <= max-exhaustive (" + std::to_string(ceiling) + ")");
    const Variant variant = variant_name == "edge" ? Variant::Edge : Variant::Arc;
    CirculantGraph g(n, s);
    Routing rt(g);
    std::cout << "x,y,i,j,sign,c1,c2,c3\n";
    for (long long d = 1; d <= n - 1; ++d) {
        const PathClass cls = rt.class_for_difference(d);
        for (Node x = 0; x < n; ++x) {
            const Colour c = colour_of(g, x, cls, variant);
            std::cout << x << ',' << g.add(x, d) << ',' << cls.skips << ',' << cls.rings << ','
                      << c.sign << ',' << c.c1 << ',' << c.c2 << ',' << c.c3 << "\n";
        }
    }
    const ColouringResult res = colour_routing(g, rt, variant);
    const ColourCount count = colour_count_formula(g);
    std::cout << "# variant: " << to_string(variant) << "\n";
    std::cout << "# conflict_free: " << (res.conflict_free ? "true" : "false") << "\n";
    std::cout << "# distinct_colours: " << res.distinct_count << "\n";
    std::cout << "# palette_formula: " << count.sumf << " (regime " << to_string(count.regime)
              << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circroute: routing, wavelength and bound analysis for C_n(1,s) networks"};
    app.require_subcommand(1);

    long long n = 0, s = 0, from = 0, to = 0;
    long long ceiling = 2000;
    std::string format = "table", suite = "all", range, s_policy = "all", out, variant = "arc";
    int jobs = 1;

    auto* report = app.add_subcommand("report", "full per-instance report");
    report->add_option("--n", n)->required();
    report->add_option("--s", s)->required();
    report->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    report->add_option("--max-exhaustive", ceiling);

    auto* verify = app.add_subcommand("verify", "run invariant suites on one instance");
    verify->add_option("--n", n)->required();
    verify->add_option("--s", s)->required();
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "routing", "lattice", "colouring"}));
    verify->add_option("--max-exhaustive", ceiling);

    auto* sweep = app.add_subcommand("sweep", "CSV sweep over a range of instances");
    sweep->add_option("--n", range, "range A..B")->required();
    sweep->add_option("--s", s_policy, "all or comma-separated list");
    sweep->add_option("--out", out, "output file (default stdout)");
    sweep->add_option("--jobs", jobs);
    sweep->add_option("--max-exhaustive", ceiling);

    auto* route = app.add_subcommand("route", "print the constructed path for one request");
    route->add_option("--n", n)->required();
    route->add_option("--s", s)->required();
    route->add_option("--from", from)->required();
    route->add_option("--to", to)->required();

    auto* colour = app.add_subcommand("colour", "print the colour table and conflict check");
    colour->add_option("--n", n)->required();
    colour->add_option("--s", s)->required();
    colour->add_option("--variant", variant)->check(CLI::IsMember({"arc", "edge"}));
    colour->add_option("--max-exhaustive", ceiling);

    try {
        app.parse(argc, argv);
        if (report->parsed()) return cmd_report(n, s, format, ceiling);
        if (verify->parsed()) return cmd_verify(n, s, suite, ceiling);
        if (sweep->parsed()) return cmd_sweep(range, s_policy, out, jobs, ceiling);
        if (route->parsed()) return cmd_route(n, s, from, to);
        if (colour->parsed()) return cmd_colour(n, s, variant, ceiling);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const circroute::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const circroute::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
