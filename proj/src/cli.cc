// Copyright 2026 The qsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsd/cli.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "qsd/discriminator.h"
#include "qsd/experiment.h"
#include "qsd/oracle.h"
#include "qsd/oracle_check.h"
#include "qsd/random.h"
#include "qsd/report_io.h"

namespace qsd {

namespace {

// Largest mu accepted on the command line; keeps t = 2mu+1 far from overflow.
constexpr uint32_t kMaxCliMu = 1u << 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename T>
std::optional<T> parse_uint(std::string_view text) {
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return value;
}

struct WalkFlags {
    uint32_t mu = 2;
    uint32_t r = 100;
    uint32_t k = 2;
    double i1 = 0;
    double i2 = 1;
    std::string mode = "interval";
    std::optional<uint64_t> seed;
    std::string out_path;
    unsigned threads = 0;

    void add_to(CLI::App &cmd, bool scalar_mu = true) {
        if (scalar_mu) {
            cmd.add_option("--mu", mu, "dummy qubit count")->capture_default_str();
        }
        cmd.add_option("--r", r, "measurement rounds per trial")->capture_default_str();
        cmd.add_option("--k", k, "decision iteration")->capture_default_str();
        cmd.add_option("--i1", i1, "lower bound of the open decision interval")->capture_default_str();
        cmd.add_option("--i2", i2, "upper bound of the open decision interval")->capture_default_str();
        cmd.add_option("--mode", mode, "interval | never-apply-h | always-apply-h")
            ->check(CLI::IsMember({"interval", "never-apply-h", "always-apply-h"}))
            ->capture_default_str();
        add_common(cmd);
    }

    void add_common(CLI::App &cmd) {
        cmd.add_option("--seed", seed, "master seed (default: $QSD_SEED, else system entropy)");
        cmd.add_option("--out", out_path, "write output to this file instead of stdout");
        cmd.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
    }

    DecisionRule rule() const {
        DecisionRule rule;
        rule.k = k;
        rule.i1 = i1;
        rule.i2 = i2;
        rule.mode = *parse_decision_mode(mode);
        return rule;
    }

    void validate() const {
        if (mu > kMaxCliMu) {
            throw UsageError("--mu: must be <= " + std::to_string(kMaxCliMu));
        }
        if (r < 1) {
            throw UsageError("--r: must be >= 1");
        }
        if (k < 1) {
            throw UsageError("--k: must be >= 1");
        }
        if (k > r) {
            throw UsageError(
                "--k: decision iteration must satisfy k <= r (got k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                ")");
        }
        if (rule().mode == DecisionMode::kInterval && !(0 <= i1 && i1 < i2 && i2 <= 1)) {
            throw UsageError("--i1/--i2: interval bounds must satisfy 0 <= i1 < i2 <= 1");
        }
    }
};

uint64_t resolve_seed(const std::optional<uint64_t> &flag, std::ostream &err) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("QSD_SEED"); env != nullptr && *env != '\0') {
        auto parsed = parse_uint<uint64_t>(env);
        if (!parsed) {
            throw UsageError(std::string("QSD_SEED: not an unsigned 64-bit integer: ") + env);
        }
        return *parsed;
    }
    std::random_device rd;
    uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << seed << '\n';
    return seed;
}

OutputFormat resolve_format(const std::string &text, std::initializer_list<OutputFormat> allowed) {
    auto parsed = parse_output_format(text);
    if (parsed) {
        for (OutputFormat f : allowed) {
            if (f == *parsed) {
                return f;
            }
        }
    }
    throw UsageError("--format: unsupported value '" + text + "' for this command");
}

std::vector<StateLabel> parse_states(const std::string &text) {
    std::vector<StateLabel> states;
    std::string_view rest = text;
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto label = parse_state_label(item);
        if (!label) {
            throw UsageError("--states: unknown state '" + std::string(item) + "' (expected zero, one, plus, minus)");
        }
        states.push_back(*label);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (states.empty()) {
        throw UsageError("--states: at least one state is required");
    }
    return states;
}

// Routes output to --out when given.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("--out: cannot open '" + path + "' for writing");
            }
            stream_ = &file_;
        }
    }
    std::ostream &stream() { return *stream_; }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

ExperimentConfig make_config(const WalkFlags &flags, uint64_t trials, uint64_t seed) {
    if (trials < 1) {
        throw UsageError("--trials: must be >= 1");
    }
    ExperimentConfig config;
    config.trials = trials;
    config.r = flags.r;
    config.mu = flags.mu;
    config.rule = flags.rule();
    config.master_seed = seed;
    config.threads = flags.threads;
    return config;
}

}  // namespace

std::optional<std::vector<uint32_t>> parse_mu_list(std::string_view text) {
    std::vector<uint32_t> values;
    if (size_t dots = text.find(".."); dots != std::string_view::npos) {
        auto lo = parse_uint<uint32_t>(text.substr(0, dots));
        auto hi = parse_uint<uint32_t>(text.substr(dots + 2));
        if (!lo || !hi || *lo > *hi) {
            return std::nullopt;
        }
        for (uint64_t mu = *lo; mu <= *hi; mu++) {
            values.push_back(static_cast<uint32_t>(mu));
        }
        return values;
    }
    std::string_view rest = text;
    while (true) {
        size_t comma = rest.find(',');
        auto v = parse_uint<uint32_t>(rest.substr(0, comma));
        if (!v) {
            return std::nullopt;
        }
        values.push_back(*v);
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return values;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Weak-measurement discrimination of |0>, |1>, |+>, |-> from a single qubit copy", "qsd"};
    app.require_subcommand(1);

    WalkFlags trial_flags;
    std::string trial_state = "plus";
    uint64_t trial_samples = 1;
    std::string trial_format = "csv";
    CLI::App *trial = app.add_subcommand("trial", "run trials and print their walk traces");
    trial_flags.add_to(*trial);
    trial->add_option("--state", trial_state, "zero | one | plus | minus")
        ->check(CLI::IsMember({"zero", "one", "plus", "minus"}))
        ->capture_default_str();
    trial->add_option("--samples", trial_samples, "number of traces (trial ids 0..n-1)")->capture_default_str();
    trial->add_option("--format", trial_format, "csv | json | human")->capture_default_str();

    WalkFlags exp_flags;
    std::string exp_states = "zero,one,plus,minus";
    uint64_t exp_trials = 100000;
    std::string exp_format = "human";
    CLI::App *experiment = app.add_subcommand("experiment", "success/failure breakdown per prepared state");
    exp_flags.add_to(*experiment);
    experiment->add_option("--states", exp_states, "comma-separated subset of zero,one,plus,minus")
        ->capture_default_str();
    experiment->add_option("--trials", exp_trials, "trials per state")->capture_default_str();
    experiment->add_option("--format", exp_format, "human | json")->capture_default_str();

    WalkFlags sweep_flags;
    std::string sweep_mu_text = "1..10";
    uint64_t sweep_trials = 100000;
    CLI::App *sweep = app.add_subcommand("sweep", "success per basis pair as a function of mu (CSV)");
    sweep_flags.add_to(*sweep, false);
    sweep->add_option("--mu", sweep_mu_text, "mu values: N, A..B or A,B,C")->capture_default_str();
    sweep->add_option("--trials", sweep_trials, "trials per state and mu")->capture_default_str();

    OracleCheckConfig oracle_config;
    std::optional<uint64_t> oracle_seed;
    CLI::App *oracle = app.add_subcommand("oracle-check", "compare the analytic walk with the dense register");
    oracle->add_option("--mu-max", oracle_config.mu_max, "largest mu drawn (<= 20)")->capture_default_str();
    oracle->add_option("--cases", oracle_config.cases, "random cases")->capture_default_str();
    oracle->add_option("--max-steps", oracle_config.max_steps, "longest walk per case")->capture_default_str();
    oracle->add_option("--seed", oracle_seed, "master seed (default: $QSD_SEED, else system entropy)");
    std::string oracle_out;
    oracle->add_option("--out", oracle_out, "write output to this file instead of stdout");

    WalkFlags phase_flags;
    std::string phase_states = "zero,one,plus,minus";
    uint64_t phase_trials = 10000;
    std::string phase_format = "human";
    CLI::App *phase = app.add_subcommand(
        "phase-report", "success with real amplitudes versus the phase-tracking register, paired streams");
    phase_flags.add_to(*phase);
    phase->add_option("--states", phase_states, "comma-separated subset of zero,one,plus,minus")
        ->capture_default_str();
    phase->add_option("--trials", phase_trials, "trials per state")->capture_default_str();
    phase->add_option("--format", phase_format, "human | json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (trial->parsed()) {
            trial_flags.validate();
            OutputFormat format =
                resolve_format(trial_format, {OutputFormat::kCsv, OutputFormat::kJson, OutputFormat::kHuman});
            if (trial_samples < 1) {
                throw UsageError("--samples: must be >= 1");
            }
            uint64_t seed = resolve_seed(trial_flags.seed, err);
            ExperimentConfig config = make_config(trial_flags, trial_samples, seed);
            StateLabel label = *parse_state_label(trial_state);
            config.states = {label};
            std::vector<TrialOutcome> trials = collect_traces(config, trial_samples).front().trials;
            Sink sink(trial_flags.out_path, out);
            std::ostream &os = sink.stream();
            if (format == OutputFormat::kJson) {
                write_trials_json(os, label, seed, trials);
            } else {
                if (format == OutputFormat::kCsv) {
                    os << kTraceCsvHeader << '\n';
                }
                for (size_t i = 0; i < trials.size(); i++) {
                    if (format == OutputFormat::kCsv) {
                        write_trace_csv(os, i, trials[i]);
                    } else {
                        write_trace_human(os, i, trials[i]);
                    }
                }
                for (size_t i = 0; i < trials.size(); i++) {
                    write_trial_summary(os, i, label, trials[i]);
                }
            }
            return kExitOk;
        }

        if (experiment->parsed()) {
            exp_flags.validate();
            OutputFormat format = resolve_format(exp_format, {OutputFormat::kJson, OutputFormat::kHuman});
            uint64_t seed = resolve_seed(exp_flags.seed, err);
            ExperimentConfig config = make_config(exp_flags, exp_trials, seed);
            config.states = parse_states(exp_states);
            std::vector<StateReport> reports = run_experiment(config);
            Sink sink(exp_flags.out_path, out);
            if (format == OutputFormat::kJson) {
                write_reports_json(sink.stream(), reports, config);
            } else {
                write_reports_human(sink.stream(), reports, config);
            }
            return kExitOk;
        }

        if (sweep->parsed()) {
            sweep_flags.validate();
            auto mus = parse_mu_list(sweep_mu_text);
            if (!mus || mus->empty()) {
                throw UsageError("--mu: expected N, A..B (A <= B) or a comma list, got '" + sweep_mu_text + "'");
            }
            for (uint32_t mu : *mus) {
                if (mu > kMaxCliMu) {
                    throw UsageError("--mu: values must be <= " + std::to_string(kMaxCliMu));
                }
            }
            uint64_t seed = resolve_seed(sweep_flags.seed, err);
            ExperimentConfig config = make_config(sweep_flags, sweep_trials, seed);
            std::vector<SweepPoint> points = sweep_mu(config, *mus);
            Sink sink(sweep_flags.out_path, out);
            write_sweep_csv(sink.stream(), points);
            return kExitOk;
        }

        if (oracle->parsed()) {
            if (oracle_config.mu_max > kMaxOracleDummies) {
                throw UsageError("--mu-max: must be <= " + std::to_string(kMaxOracleDummies));
            }
            if (oracle_config.max_steps < 1) {
                throw UsageError("--max-steps: must be >= 1");
            }
            oracle_config.seed = resolve_seed(oracle_seed, err);
            OracleCheckSummary summary = run_oracle_check(oracle_config);
            Sink sink(oracle_out, out);
            write_oracle_check(sink.stream(), oracle_config, summary);
            return summary.passed() ? kExitOk : kExitCheckFailed;
        }

        if (phase->parsed()) {
            phase_flags.validate();
            if (phase_flags.mu > kMaxOracleDummies) {
                throw UsageError("--mu: phase-report runs on the dense register and needs mu <= 20");
            }
            OutputFormat format = resolve_format(phase_format, {OutputFormat::kJson, OutputFormat::kHuman});
            uint64_t seed = resolve_seed(phase_flags.seed, err);
            ExperimentConfig config = make_config(phase_flags, phase_trials, seed);
            config.states = parse_states(phase_states);
            std::vector<PhaseReportRow> rows = phase_report(config);
            Sink sink(phase_flags.out_path, out);
            if (format == OutputFormat::kJson) {
                write_phase_report_json(sink.stream(), rows, config);
            } else {
                write_phase_report_human(sink.stream(), rows, config);
            }
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qsd
