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

#include "qsd/report_io.h"

#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>

namespace qsd {

namespace {

std::string to_chars_string(double x, std::chars_format fmt, int precision) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, fmt, precision);
    return std::string(buf.data(), res.ptr);
}

std::string json_number(double x) {
    return std::isfinite(x) ? format_full(x) : "null";
}

// Minimal writer for flat JSON objects; every value is a number, bool or a
// plain identifier string, so no escaping is needed.
class JsonObject {
   public:
    explicit JsonObject(std::ostream &out) : out_(out) { out_ << '{'; }
    ~JsonObject() { out_ << '}'; }

    JsonObject &field(std::string_view key, double v) { return raw(key, json_number(v)); }
    JsonObject &field(std::string_view key, uint64_t v) { return raw(key, std::to_string(v)); }
    JsonObject &field(std::string_view key, uint32_t v) { return raw(key, std::to_string(v)); }
    JsonObject &field(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
    JsonObject &field(std::string_view key, std::string_view v) {
        return raw(key, "\"" + std::string(v) + "\"");
    }
    /// Starts a field whose value the caller writes directly.
    std::ostream &open(std::string_view key) {
        separator();
        out_ << '"' << key << "\":";
        return out_;
    }

   private:
    void separator() {
        if (!first_) {
            out_ << ',';
        }
        first_ = false;
    }
    JsonObject &raw(std::string_view key, const std::string &value) {
        open(key) << value;
        return *this;
    }

    std::ostream &out_;
    bool first_ = true;
};

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::kCsv;
    }
    if (text == "json") {
        return OutputFormat::kJson;
    }
    if (text == "human") {
        return OutputFormat::kHuman;
    }
    return std::nullopt;
}

std::string format_full(double x) {
    return to_chars_string(x, std::chars_format::general, 17);
}

std::string format_fixed6(double x) {
    return to_chars_string(x, std::chars_format::fixed, 6);
}

void write_trace_csv(std::ostream &out, uint64_t trial_id, const TrialOutcome &trial) {
    for (const TraceRow &row : trial.trace) {
        out << trial_id << ',' << row.iteration << ',' << bit(row.outcome) << ',' << format_full(row.alpha) << ','
            << format_full(row.beta) << ',' << format_full(row.alpha_approx) << ',' << row.j0 << ',' << row.j1 << ','
            << (row.h_applied ? 1 : 0) << '\n';
    }
}

void write_trace_human(std::ostream &out, uint64_t trial_id, const TrialOutcome &trial) {
    out << "trial " << trial_id << '\n';
    out << "  iter  out       alpha        beta   alpha_approx    j0    j1  H\n";
    for (const TraceRow &row : trial.trace) {
        out << std::setw(6) << row.iteration << std::setw(5) << bit(row.outcome) << std::setw(12)
            << format_fixed6(row.alpha) << std::setw(12) << format_fixed6(row.beta) << std::setw(15)
            << format_fixed6(row.alpha_approx) << std::setw(6) << row.j0 << std::setw(6) << row.j1 << std::setw(3)
            << (row.h_applied ? 1 : 0) << '\n';
    }
}

void write_trial_summary(std::ostream &out, uint64_t trial_id, StateLabel prepared, const TrialOutcome &trial) {
    out << "# trial_id=" << trial_id << " state=" << to_string(prepared) << " decided=" << to_string(trial.decided_state)
        << " basis=" << to_string(trial.decided_basis) << " h_applied=" << (trial.h_applied ? 1 : 0)
        << " j0=" << trial.counters.j0 << " j1=" << trial.counters.j1 << " tie=" << (trial.tie ? 1 : 0) << '\n';
}

void write_trials_json(std::ostream &out, StateLabel prepared, uint64_t seed, std::span<const TrialOutcome> trials) {
    {
        JsonObject root(out);
        root.field("state", to_string(prepared)).field("seed", seed);
        std::ostream &arr = root.open("trials");
        arr << '[';
        for (size_t i = 0; i < trials.size(); i++) {
            const TrialOutcome &t = trials[i];
            if (i) {
                arr << ',';
            }
            JsonObject obj(arr);
            obj.field("trial_id", static_cast<uint64_t>(i))
                .field("decided_state", to_string(t.decided_state))
                .field("decided_basis", to_string(t.decided_basis))
                .field("h_applied", t.h_applied)
                .field("tie", t.tie)
                .field("j0", t.counters.j0)
                .field("j1", t.counters.j1);
            std::ostream &rows = obj.open("trace");
            rows << '[';
            for (size_t k = 0; k < t.trace.size(); k++) {
                const TraceRow &row = t.trace[k];
                if (k) {
                    rows << ',';
                }
                JsonObject r(rows);
                r.field("iteration", row.iteration)
                    .field("outcome", static_cast<uint32_t>(bit(row.outcome)))
                    .field("alpha", row.alpha)
                    .field("beta", row.beta)
                    .field("alpha_approx", row.alpha_approx)
                    .field("j0", row.j0)
                    .field("j1", row.j1)
                    .field("h_applied", row.h_applied);
            }
            rows << ']';
        }
        arr << ']';
    }
    out << '\n';
}

void write_reports_json(std::ostream &out, std::span<const StateReport> reports, const ExperimentConfig &config) {
    out << '[';
    for (size_t i = 0; i < reports.size(); i++) {
        const StateReport &r = reports[i];
        if (i) {
            out << ',';
        }
        JsonObject obj(out);
        obj.field("state", to_string(r.state))
            .field("trials", r.trials)
            .field("frac_h_applied", r.frac_h_applied)
            .field("frac_no_h", r.frac_no_h)
            .field("success_given_h", r.success_given_h)
            .field("failure_given_h", r.failure_given_h)
            .field("success_given_no_h", r.success_given_no_h)
            .field("failure_given_no_h", r.failure_given_no_h)
            .field("total_success", r.total_success)
            .field("exact_label_success", r.exact_label_success)
            .field("tie_count", r.tie_count)
            .field("seed", config.master_seed)
            .field("mu", config.mu)
            .field("r", config.r)
            .field("k", config.rule.k)
            .field("mode", to_string(config.rule.mode));
    }
    out << "]\n";
}

void write_reports_human(std::ostream &out, std::span<const StateReport> reports, const ExperimentConfig &config) {
    out << "mu=" << config.mu << " r=" << config.r << " k=" << config.rule.k << " mode=" << to_string(config.rule.mode);
    if (config.rule.mode == DecisionMode::kInterval) {
        out << " interval=(" << format_fixed6(config.rule.i1) << ", " << format_fixed6(config.rule.i2) << ")";
    }
    out << " seed=" << config.master_seed << '\n';
    out << "state      trials   H applied   success|H   failure|H  success|noH  failure|noH   total      exact"
           "       ties\n";
    for (const StateReport &r : reports) {
        out << std::left << std::setw(6) << to_string(r.state) << std::right << std::setw(11) << r.trials
            << std::setw(12) << format_fixed6(r.frac_h_applied) << std::setw(12) << format_fixed6(r.success_given_h)
            << std::setw(12) << format_fixed6(r.failure_given_h) << std::setw(13)
            << format_fixed6(r.success_given_no_h) << std::setw(13) << format_fixed6(r.failure_given_no_h)
            << std::setw(10) << format_fixed6(r.total_success) << std::setw(11)
            << format_fixed6(r.exact_label_success) << std::setw(11) << r.tie_count << '\n';
    }
}

void write_sweep_csv(std::ostream &out, std::span<const SweepPoint> points) {
    out << kSweepCsvHeader << '\n';
    for (const SweepPoint &p : points) {
        out << p.mu << ',' << format_full(p.success_computational) << ',' << format_full(p.success_hadamard) << '\n';
    }
}

void write_phase_report_json(std::ostream &out, std::span<const PhaseReportRow> rows, const ExperimentConfig &config) {
    out << '[';
    for (size_t i = 0; i < rows.size(); i++) {
        if (i) {
            out << ',';
        }
        JsonObject obj(out);
        obj.field("state", to_string(rows[i].state))
            .field("trials", config.trials)
            .field("real_total_success", rows[i].real_total_success)
            .field("complex_total_success", rows[i].complex_total_success)
            .field("abs_difference", rows[i].abs_difference)
            .field("seed", config.master_seed)
            .field("mu", config.mu);
    }
    out << "]\n";
}

void write_phase_report_human(std::ostream &out, std::span<const PhaseReportRow> rows, const ExperimentConfig &config) {
    out << "mu=" << config.mu << " r=" << config.r << " trials=" << config.trials << " seed=" << config.master_seed
        << '\n';
    out << "state   real-H total   complex-H total   |difference|\n";
    for (const PhaseReportRow &row : rows) {
        out << std::left << std::setw(6) << to_string(row.state) << std::right << std::setw(15)
            << format_fixed6(row.real_total_success) << std::setw(18) << format_fixed6(row.complex_total_success)
            << std::setw(15) << format_fixed6(row.abs_difference) << '\n';
    }
}

void write_oracle_check(std::ostream &out, const OracleCheckConfig &config, const OracleCheckSummary &summary) {
    out << "cases=" << summary.cases << " steps=" << summary.steps << " mu_max=" << config.mu_max
        << " max_steps=" << config.max_steps << " seed=" << config.seed << '\n';
    out << "max |p_analytic - p_oracle| = " << format_full(summary.max_probability_diff) << '\n';
    out << "max |modulus_analytic - modulus_oracle| = " << format_full(summary.max_modulus_diff) << '\n';
    out << "max analytic norm drift = " << format_full(summary.max_norm_drift) << '\n';
    out << "relative phase of psi from |+> (radians)\n";
    out << "  mu    t   after 0       after 0,1     pi/2t\n";
    auto cell = [](const std::optional<double> &v) { return v ? format_fixed6(*v) : std::string("undefined"); };
    for (const PhaseTableRow &row : summary.phase_table) {
        out << std::setw(4) << row.mu << std::setw(5) << row.t << "   " << std::left << std::setw(14)
            << cell(row.phase_after_zero) << std::setw(14) << cell(row.phase_after_zero_one) << std::right
            << format_fixed6(row.per_step_expected) << '\n';
    }
    out << (summary.passed() ? "PASS" : "FAIL") << ": tolerance " << format_full(kOracleAgreementTolerance) << '\n';
}

}  // namespace qsd
