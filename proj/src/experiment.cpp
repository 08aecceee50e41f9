#include "tttest/experiment.hpp"

#include "tttest/error.hpp"
#include "tttest/parallel.hpp"
#include "tttest/transforms.hpp"

#include <cmath>
#include <limits>

namespace ttt {
namespace {

constexpr std::size_t kPlotPoints = 512;
constexpr std::uint64_t kDataTag = 0x64617461;       // "data"
constexpr std::uint64_t kBootstrapTag = 0x626f6f74;  // "boot"

bool needs_y(TestKind test) { return test != TestKind::NBUE; }

struct Outcome {
    bool reject = false;
    double p_value = 0.0;
};

}  // namespace

void ExperimentSpec::validate() const {
    if (reps < 1) throw Error(ErrorCode::InvalidParameter, "reps must be at least 1");
    if (scenarios.empty()) throw Error(ErrorCode::InvalidParameter, "no scenarios");
    if (sizes.empty()) throw Error(ErrorCode::InvalidParameter, "no sample sizes");
    if (tests.empty()) throw Error(ErrorCode::InvalidParameter, "no tests");
    for (const auto& [n, m] : sizes) {
        if (n < 2 || m < 2) throw Error(ErrorCode::InvalidParameter, "sample sizes must be >= 2");
    }
    for (const auto& t : tests) {
        t.validate();
        if (t.bootstrap.scheme != Scheme::Independent) {
            throw Error(ErrorCode::SchemeMismatch, "simulations draw independent samples");
        }
        for (const auto& s : scenarios) {
            if (needs_y(t.test) && !s.y) {
                throw Error(ErrorCode::InvalidParameter,
                            "scenario '" + s.id + "' has no Y distribution for a two-sample test");
            }
        }
    }
}

RejectionTable run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const std::size_t cells = spec.scenarios.size() * spec.sizes.size();
    const std::size_t tests = spec.tests.size();
    std::vector<Outcome> outcomes(cells * spec.reps * tests);

    parallel_for(cells * spec.reps, spec.workers, [&](std::size_t job) {
        const std::size_t cell = job / spec.reps;
        const std::size_t rep = job % spec.reps;
        const Scenario& scenario = spec.scenarios[cell / spec.sizes.size()];
        const SizePair size = spec.sizes[cell % spec.sizes.size()];
        const std::uint64_t id = hash_label(scenario.id);

        Rng rng = Rng::substream(spec.seed, {id, size.n, size.m, rep, kDataTag});
        const Sample x = scenario.x.sample(size.n, rng);
        std::optional<Sample> y;
        if (scenario.y) y = scenario.y->sample(size.m, rng);
        const std::uint64_t boot_seed =
            Rng::substream(spec.seed, {id, size.n, size.m, rep, kBootstrapTag})();

        for (std::size_t t = 0; t < tests; ++t) {
            TestConfig cfg = spec.tests[t];
            cfg.bootstrap.seed = boot_seed;
            cfg.bootstrap.workers = 1;
            TestReport report;
            switch (cfg.test) {
                case TestKind::TTTOrder: report = test_ttt_order(x, *y, cfg); break;
                case TestKind::ExcessWealthOrder: report = test_ew_order(x, *y, cfg); break;
                case TestKind::NBUE: report = test_nbue(x, cfg); break;
            }
            outcomes[job * tests + t] = {report.reject, report.p_value};
        }
    });

    RejectionTable table;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const Scenario& scenario = spec.scenarios[cell / spec.sizes.size()];
        const SizePair size = spec.sizes[cell % spec.sizes.size()];
        for (std::size_t t = 0; t < tests; ++t) {
            const TestConfig& cfg = spec.tests[t];
            RejectionRow row;
            row.scenario = scenario.id;
            row.test = cfg.test;
            row.r = cfg.r;
            row.alpha = cfg.alpha;
            row.kind = cfg.kind;
            row.n = size.n;
            if (needs_y(cfg.test)) row.m = size.m;
            row.reps = spec.reps;
            double p_sum = 0.0;
            for (std::size_t rep = 0; rep < spec.reps; ++rep) {
                const Outcome& o = outcomes[(cell * spec.reps + rep) * tests + t];
                row.rejections += o.reject ? 1 : 0;
                p_sum += o.p_value;
            }
            const double reps = static_cast<double>(spec.reps);
            row.rejection_rate = static_cast<double>(row.rejections) / reps;
            row.mc_std_err = std::sqrt(row.rejection_rate * (1.0 - row.rejection_rate) / reps);
            row.mean_p_value = p_sum / reps;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

const RejectionRow& RejectionTable::find(const std::string& scenario, TestKind test,
                                         const PhiR& r, std::size_t n) const {
    for (const auto& row : rows) {
        if (row.scenario == scenario && row.test == test && row.r == r && row.n == n) return row;
    }
    throw Error(ErrorCode::InvalidParameter, "no row for scenario '" + scenario + "'");
}

void RejectionTable::write_csv(std::ostream& out) const {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "scenario,test,r,alpha,kind,n,m,reps,rejections,rejection_rate,mc_std_err,mean_p_value\n";
    for (const auto& row : rows) {
        out << row.scenario << ',' << to_string(row.test) << ',' << row.r.to_string() << ','
            << row.alpha << ',' << to_string(row.kind) << ',' << row.n << ',';
        if (row.m) out << *row.m;
        out << ',' << row.reps << ',' << row.rejections << ',' << row.rejection_rate << ','
            << row.mc_std_err << ',' << row.mean_p_value << '\n';
    }
    out.precision(old_precision);
}

void emit_transform_plot(const Distribution& d, std::ostream& out) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "p,scaled_ttt,identity\n";
    const auto grid = uniform_grid(kPlotPoints - 1);
    for (const double p : grid) out << p << ',' << d.scaled_ttt(p) << ',' << p << '\n';
    out.precision(old_precision);
}

void emit_transform_plot(const Sample& s, CurveKind kind, std::ostream& out) {
    const auto curve = scaled_ttt(s, kind);
    const auto grid = merge_grids(uniform_grid(kPlotPoints - 1), curve.abscissae());
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "p,scaled_ttt,identity\n";
    for (const double p : grid) out << p << ',' << curve(p) << ',' << p << '\n';
    out.precision(old_precision);
}

}  // namespace ttt
