#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "roc/analysis.hpp"
#include "roc/duration.hpp"
#include "roc/errors.hpp"
#include "roc/info.hpp"
#include "roc/table.hpp"
#include "roc/transition.hpp"

namespace {

using namespace roc;

// Flag combinations the parser cannot reject on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Either --x (lambda = 1/s, alpha = x s) or the explicit --lambda/--alpha pair.
struct NoiseArgs {
    std::optional<double> x;
    std::optional<double> lambda;
    std::optional<double> alpha;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--x", x, "lambda*alpha (implies lambda=1/s, alpha=x s)");
        cmd->add_option("--lambda", lambda, "noise rate, 1/s");
        cmd->add_option("--alpha", alpha, "spike spacing, s");
    }

    ChannelParams resolve(int n) const {
        if (x.has_value()) {
            if (lambda.has_value() || alpha.has_value())
                throw UsageError("give either --x or the --lambda/--alpha pair, not both");
            return ChannelParams{n, *x, 1.0};
        }
        if (!lambda.has_value() || !alpha.has_value())
            throw UsageError("need --x or both of --lambda and --alpha");
        return ChannelParams{n, *alpha, *lambda};
    }
};

struct McFlags {
    std::uint64_t samples = 0;  // 0 = not given; fall back to env or 1e7
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 1u << 20;
    unsigned workers = 0;  // 0 = hardware

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--samples", samples, "Monte Carlo samples")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--chunk-size", chunk_size, "samples per chunk")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    }

    McConfig resolve() const {
        McConfig cfg;
        cfg.master_seed = seed;
        cfg.samples = samples;
        if (cfg.samples == 0) {
            if (const char* env = std::getenv("ROC_DEFAULT_SAMPLES")) {
                char* end = nullptr;
                const unsigned long long v = std::strtoull(env, &end, 10);
                if (end == env || *end != '\0' || v == 0)
                    throw UsageError("ROC_DEFAULT_SAMPLES must be a positive integer");
                cfg.samples = v;
            } else {
                cfg.samples = 10'000'000;
            }
        }
        cfg.chunk_size = chunk_size;
        cfg.workers = workers > 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
        return cfg;
    }
};

struct OutputFlags {
    std::string format = "csv";
    std::string out_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
    }

    void emit(const OutputTable& t) const {
        const std::string text = format == "json" ? to_json(t) : to_csv(t);
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file: " + out_path);
        f << text;
    }
};

std::vector<double> linspace(double lo, double hi, int steps) {
    if (!(steps >= 2)) throw UsageError("--steps must be >= 2");
    if (!(hi > lo)) throw UsageError("--x-max must exceed --x-min");
    std::vector<double> xs(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        xs[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return xs;
}

OutputTable transition_table(const TransitionRow& row) {
    const bool mc = row.method == RowMethod::monte_carlo;
    OutputTable t;
    t.header = {"label", "index", "probability"};
    if (mc) t.header.push_back("std_error");
    const auto labels = row_labels(row.n);
    for (std::size_t j = 0; j < row.probs.size(); ++j) {
        std::vector<Cell> cells = {Cell::str(labels[j]), Cell::count(static_cast<std::int64_t>(j)),
                                   Cell::num(row.probs[j])};
        if (mc) cells.push_back(Cell::num(row.stderrs[j]));
        t.add_row(std::move(cells));
    }
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"Rank-order coding channel analysis"};
    app.require_subcommand(1);

    // transition
    auto* tr = app.add_subcommand("transition", "transition probabilities for one x");
    int tr_n = 3;
    std::string tr_method = "analytic";
    double tr_tol = 1e-9;
    NoiseArgs tr_x;
    McFlags tr_mc;
    OutputFlags tr_out;
    tr->add_option("--n", tr_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    tr_x.add_flags(tr);
    tr->add_option("--method", tr_method, "analytic, mc or quadrature")
        ->check(CLI::IsMember({"analytic", "mc", "quadrature"}));
    tr->add_option("--tol", tr_tol, "quadrature tolerance");
    tr_mc.add_flags(tr);
    tr_out.add_flags(tr);

    // sweep
    auto* sw = app.add_subcommand("sweep", "capacity/efficiency/rate over an x grid");
    int sw_n = 3;
    double sw_min = 0.0, sw_max = 6.0;
    int sw_steps = 61;
    std::string sw_method = "analytic";
    McFlags sw_mc;
    OutputFlags sw_out;
    sw->add_option("--n", sw_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    sw->add_option("--x-min", sw_min, "grid start")->required();
    sw->add_option("--x-max", sw_max, "grid end")->required();
    sw->add_option("--steps", sw_steps, "grid points")->required();
    sw->add_option("--method", sw_method, "analytic or mc")
        ->check(CLI::IsMember({"analytic", "mc"}));
    sw_mc.add_flags(sw);
    sw_out.add_flags(sw);

    // tradeoff
    auto* to = app.add_subcommand("tradeoff", "efficiency/rate pairs over an x grid");
    int to_n = 3;
    double to_min = 0.0, to_max = 20.0;
    int to_steps = 2000;
    OutputFlags to_out;
    to->add_option("--n", to_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    to->add_option("--x-min", to_min, "grid start");
    to->add_option("--x-max", to_max, "grid end");
    to->add_option("--steps", to_steps, "grid points");
    to_out.add_flags(to);

    // duration
    auto* du = app.add_subcommand("duration", "mean symbol duration");
    int du_n = 3;
    std::string du_method = "both";
    NoiseArgs du_x;
    McFlags du_mc;
    OutputFlags du_out;
    du->add_option("--n", du_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    du_x.add_flags(du);
    du->add_option("--method", du_method, "analytic, mc or both")
        ->check(CLI::IsMember({"analytic", "mc", "both"}));
    du_mc.add_flags(du);
    du_out.add_flags(du);

    // atypical
    auto* at = app.add_subcommand("atypical", "error probabilities that rise as noise shrinks");
    int at_n = 3;
    double at_max = 6.0;
    double at_step = 1e-3;
    OutputFlags at_out;
    at->add_option("--n", at_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    at->add_option("--x-max", at_max, "scan upper limit");
    at->add_option("--step", at_step, "scan resolution")->check(CLI::PositiveNumber);
    at_out.add_flags(at);

    // gaussian
    auto* ga = app.add_subcommand("gaussian", "Monte Carlo rows under Gaussian noise, alpha sweep");
    int ga_n = 3;
    double ga_sigma = 1.0;
    double ga_min = 0.0, ga_max = 6.0;
    int ga_steps = 13;
    McFlags ga_mc;
    OutputFlags ga_out;
    ga->add_option("--n", ga_n, "presynaptic neurons")->required()->check(CLI::Range(2, 20));
    ga->add_option("--sigma", ga_sigma, "noise std deviation, s")->check(CLI::PositiveNumber);
    ga->add_option("--alpha-min", ga_min, "sweep start, s");
    ga->add_option("--alpha-max", ga_max, "sweep end, s");
    ga->add_option("--steps", ga_steps, "sweep points");
    ga_mc.add_flags(ga);
    ga_out.add_flags(ga);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (*tr) {
        const ChannelParams p = tr_x.resolve(tr_n);
        TransitionRow row;
        if (tr_method == "analytic")
            row = analytic_row(p.n, p.x());
        else if (tr_method == "quadrature")
            row = quadrature_row(p.n, p.x(), tr_tol);
        else
            row = mc_row(p, tr_mc.resolve());
        tr_out.emit(transition_table(row));
    } else if (*sw) {
        const auto xs = linspace(sw_min, sw_max, sw_steps);
        const auto method = sw_method == "mc" ? SweepMethod::mc : SweepMethod::analytic;
        std::optional<McConfig> cfg;
        if (method == SweepMethod::mc) cfg = sw_mc.resolve();
        const auto records = sweep(sw_n, xs, method, cfg);
        OutputTable t;
        t.header = {"x", "C_bits_per_symbol", "gamma_bits_per_neuron", "lambdaTbar",
                    "R_over_lambda"};
        for (const auto& r : records)
            t.add_row({Cell::num(r.x), Cell::num(r.capacity_bits_per_symbol),
                       Cell::num(r.gamma_bits_per_neuron), Cell::num(r.lambda_tbar),
                       Cell::num(r.rate_scaled)});
        sw_out.emit(t);
    } else if (*to) {
        const auto xs = linspace(to_min, to_max, to_steps);
        const auto pairs = tradeoff_curve(to_n, xs);
        OutputTable t;
        t.header = {"x", "gamma_bits_per_neuron", "R_over_lambda"};
        for (std::size_t i = 0; i < pairs.size(); ++i)
            t.add_row({Cell::num(xs[i]), Cell::num(pairs[i].first), Cell::num(pairs[i].second)});
        to_out.emit(t);
    } else if (*du) {
        const ChannelParams p = du_x.resolve(du_n);
        OutputTable t;
        t.header = {"method", "tbar_sec", "std_error", "samples"};
        if (du_method == "analytic" || du_method == "both")
            t.add_row({Cell::str("analytic"), Cell::num(mean_duration_analytic(p.n, p)),
                       Cell::num(0.0), Cell::count(0)});
        if (du_method == "mc" || du_method == "both") {
            const Estimate e = mc_duration(p, du_mc.resolve());
            t.add_row({Cell::str("mc"), Cell::num(e.mean), Cell::num(e.std_error),
                       Cell::count(static_cast<std::int64_t>(e.samples))});
        }
        du_out.emit(t);
    } else if (*at) {
        const int npts = static_cast<int>(at_max / at_step) + 1;
        std::vector<double> xs(static_cast<std::size_t>(npts));
        for (int i = 0; i < npts; ++i) xs[static_cast<std::size_t>(i)] = at_step * i;
        const auto findings = scan_atypical(at_n, xs);
        OutputTable t;
        t.header = {"label", "peak_x", "peak_value"};
        for (const auto& f : findings)
            t.add_row({Cell::str(f.label), Cell::num(f.peak_x), Cell::num(f.peak_value)});
        at_out.emit(t);
    } else if (*ga) {
        const auto alphas = linspace(ga_min, ga_max, ga_steps);
        const McConfig base = ga_mc.resolve();
        OutputTable t;
        t.header = {"alpha_sec", "label", "index", "probability", "std_error"};
        const auto labels = row_labels(ga_n);
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            McConfig cfg = base;
            cfg.master_seed = base.master_seed + 0x9E3779B97F4A7C15ULL * i;
            const GaussianNoiseParams g{ga_n, alphas[i], ga_sigma};
            const TransitionRow row = mc_row_gaussian(g, cfg);
            for (std::size_t j = 0; j < row.probs.size(); ++j)
                t.add_row({Cell::num(alphas[i]), Cell::str(labels[j]),
                           Cell::count(static_cast<std::int64_t>(j)), Cell::num(row.probs[j]),
                           Cell::num(row.stderrs[j])});
        }
        ga_out.emit(t);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
