#include "cli.hpp"

#include "tttest/csv.hpp"
#include "tttest/error.hpp"
#include "tttest/experiment.hpp"
#include "tttest/hypothesis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>

namespace ttt::cli {
namespace {

const std::vector<std::string> kTests{"ttt", "ew", "nbue"};
const std::vector<std::string> kSchemes{"independent", "paired"};
const std::vector<std::string> kKinds{"step", "linear"};

struct TestArgs {
    std::string test;
    std::string x;
    std::string y;
    std::string paired;
    std::string scheme;
    std::string r = "inf";
    double alpha = 0.1;
    std::size_t replications = 500;
    std::string kind = "step";
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

struct SimulateArgs {
    std::vector<std::string> tests{"ttt"};
    std::vector<std::string> rs{"1", "inf"};
    std::string dist_x;
    std::string dist_y;
    std::string scenario;
    std::vector<std::size_t> sizes{50, 100, 200, 500};
    std::vector<std::size_t> m_sizes;
    std::size_t reps = 200;
    std::size_t replications = 300;
    double alpha = 0.1;
    std::string kind = "step";
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string out;
};

struct PlotArgs {
    std::string dist;
    std::string x;
    std::string kind = "linear";
    std::string out;
};

// Writes through `write` to the file at `path`, or to `fallback` when empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + path);
    write(file);
    if (!file) throw Error(ErrorCode::IoError, "write failed for " + path);
}

int run_test(const TestArgs& a, std::ostream& out) {
    TestConfig cfg;
    cfg.test = parse_test_kind(a.test);
    cfg.r = PhiR::parse(a.r);
    cfg.alpha = a.alpha;
    cfg.kind = parse_curve_kind(a.kind);
    cfg.bootstrap.replications = a.replications;
    cfg.bootstrap.seed = a.seed;
    cfg.bootstrap.workers = a.workers;
    const bool paired_input = !a.paired.empty();
    cfg.bootstrap.scheme = a.scheme.empty()
                               ? (paired_input ? Scheme::MatchedPairs : Scheme::Independent)
                               : parse_scheme(a.scheme);

    TestReport report;
    if (cfg.test == TestKind::NBUE) {
        if (a.x.empty()) throw CLI::ValidationError("--x", "the NBUE test needs --x");
        report = test_nbue(csv::read_sample(a.x), cfg);
    } else if (paired_input) {
        const auto xy = csv::read_paired_sample(a.paired);
        report = cfg.test == TestKind::TTTOrder ? test_ttt_order(xy, cfg) : test_ew_order(xy, cfg);
    } else {
        if (a.x.empty() || a.y.empty()) {
            throw CLI::ValidationError("--x/--y", "two-sample tests need --x and --y, or --paired");
        }
        const auto x = csv::read_sample(a.x);
        const auto y = csv::read_sample(a.y);
        report = cfg.test == TestKind::TTTOrder ? test_ttt_order(x, y, cfg)
                                                : test_ew_order(x, y, cfg);
    }
    out << to_json(report) << '\n';
    return 0;
}

int run_simulate(const SimulateArgs& a, std::ostream& out) {
    ExperimentSpec spec;
    Scenario scenario{a.scenario, Distribution::parse(a.dist_x), std::nullopt};
    if (!a.dist_y.empty()) scenario.y = Distribution::parse(a.dist_y);
    if (scenario.id.empty()) {
        scenario.id = scenario.x.to_string();
        if (scenario.y) scenario.id += " vs " + scenario.y->to_string();
    }
    spec.scenarios.push_back(std::move(scenario));

    if (!a.m_sizes.empty() && a.m_sizes.size() != a.sizes.size()) {
        throw CLI::ValidationError("--m-sizes", "must list as many values as --sizes");
    }
    spec.sizes.clear();
    for (std::size_t i = 0; i < a.sizes.size(); ++i) {
        spec.sizes.push_back({a.sizes[i], a.m_sizes.empty() ? a.sizes[i] : a.m_sizes[i]});
    }
    spec.reps = a.reps;
    spec.seed = a.seed;
    spec.workers = a.workers;
    for (const auto& test : a.tests) {
        for (const auto& r : a.rs) {
            TestConfig cfg;
            cfg.test = parse_test_kind(test);
            cfg.r = PhiR::parse(r);
            cfg.alpha = a.alpha;
            cfg.kind = parse_curve_kind(a.kind);
            cfg.bootstrap.replications = a.replications;
            spec.tests.push_back(cfg);
        }
    }
    const auto table = run_experiment(spec);
    emit(a.out, out, [&](std::ostream& os) { table.write_csv(os); });
    return 0;
}

int run_plot(const PlotArgs& a, std::ostream& out) {
    if (a.dist.empty() == a.x.empty()) {
        throw CLI::ValidationError("--dist/--x", "give exactly one of --dist or --x");
    }
    if (!a.dist.empty()) {
        const auto d = Distribution::parse(a.dist);
        emit(a.out, out, [&](std::ostream& os) { emit_transform_plot(d, os); });
    } else {
        const auto s = csv::read_sample(a.x);
        const auto kind = parse_curve_kind(a.kind);
        emit(a.out, out, [&](std::ostream& os) { emit_transform_plot(s, kind, os); });
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bootstrap tests for the TTT order, the excess-wealth order and NBUE"};
    app.require_subcommand(1);

    TestArgs t;
    auto* test = app.add_subcommand("test", "Run one test on CSV data and print a JSON report");
    test->add_option("--test", t.test, "Which test")->required()->check(CLI::IsMember(kTests));
    test->add_option("--x", t.x, "CSV with the X sample (one column)");
    test->add_option("--y", t.y, "CSV with the Y sample (one column)");
    test->add_option("--paired", t.paired, "CSV with x,y pairs");
    test->add_option("--scheme", t.scheme, "Resampling scheme")->check(CLI::IsMember(kSchemes));
    test->add_option("--r", t.r, "Order of Phi_r: 1, 2, inf or any number >= 1")
        ->capture_default_str();
    test->add_option("--alpha", t.alpha, "Significance level")->capture_default_str();
    test->add_option("--K", t.replications, "Bootstrap replications")->capture_default_str();
    test->add_option("--kind", t.kind, "Empirical transform variant")
        ->check(CLI::IsMember(kKinds))
        ->capture_default_str();
    test->add_option("--seed", t.seed, "RNG seed")->capture_default_str();
    test->add_option("--workers", t.workers, "Worker threads (0 = TTTEST_WORKERS or all cores)");

    SimulateArgs s;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo rejection rates (CSV)");
    sim->add_option("--test", s.tests, "Tests to run")
        ->check(CLI::IsMember(kTests))
        ->capture_default_str();
    sim->add_option("--r", s.rs, "Orders of Phi_r")->capture_default_str();
    sim->add_option("--dist-x", s.dist_x, "X distribution, e.g. weibull:a=2,b=1")->required();
    sim->add_option("--dist-y", s.dist_y, "Y distribution (two-sample tests)");
    sim->add_option("--scenario", s.scenario, "Scenario id (also keys the RNG substreams)");
    sim->add_option("--sizes", s.sizes, "Sample sizes n")->delimiter(',')->capture_default_str();
    sim->add_option("--m-sizes", s.m_sizes, "Sample sizes m (default: same as n)")->delimiter(',');
    sim->add_option("--reps", s.reps, "Monte Carlo repetitions")->capture_default_str();
    sim->add_option("--K", s.replications, "Bootstrap replications")->capture_default_str();
    sim->add_option("--alpha", s.alpha, "Significance level")->capture_default_str();
    sim->add_option("--kind", s.kind, "Empirical transform variant")
        ->check(CLI::IsMember(kKinds))
        ->capture_default_str();
    sim->add_option("--seed", s.seed, "RNG seed")->capture_default_str();
    sim->add_option("--workers", s.workers, "Worker threads (0 = TTTEST_WORKERS or all cores)");
    sim->add_option("--out", s.out, "Output CSV (default: stdout)");

    PlotArgs p;
    auto* plot = app.add_subcommand("plot-transform", "Scaled TTT curve against the identity (CSV)");
    plot->add_option("--dist", p.dist, "Reference distribution");
    plot->add_option("--x", p.x, "CSV sample");
    plot->add_option("--kind", p.kind, "Empirical transform variant for --x")
        ->check(CLI::IsMember(kKinds))
        ->capture_default_str();
    plot->add_option("--out", p.out, "Output CSV (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (test->parsed()) return run_test(t, out);
        if (sim->parsed()) return run_simulate(s, out);
        return run_plot(p, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace ttt::cli
