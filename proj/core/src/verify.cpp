// Copyright 2026 The vbsq Authors
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

#include <algorithm>
#include <string>

#include "vbsq/error.hpp"
#include "vbsq/mbqc.hpp"

namespace vbsq {

namespace {

constexpr std::size_t kMaxExhaustiveCommands = 24;

}  // namespace

VerifyReport verify_equivalence(const Circuit &c, const StateVector &input, const VerifyOptions &options) {
    if (options.budget == 0 || options.samples == 0) {
        throw Error(ErrorCode::InvalidDimension, "branch budget must be at least 1");
    }
    const MeasurementPattern pattern = compile_circuit(c);
    const std::size_t width = dense_width(pattern);
    if (width > kDenseQubitCap) {
        throw Error(ErrorCode::TooLarge, "compiled pattern needs " + std::to_string(width) + " live qubits");
    }
    const StateVector expected = simulate(c, input);

    VerifyReport report;
    report.commands = pattern.commands.size();
    const std::size_t m = report.commands;
    if (options.force_exhaustive && m > kMaxExhaustiveCommands) {
        throw Error(ErrorCode::TooLarge, std::to_string(m) + " measurements are too many to enumerate");
    }
    report.exhaustive =
        options.force_exhaustive || (m < 63 && (std::uint64_t{1} << m) <= static_cast<std::uint64_t>(options.budget));

    double total = 0;
    report.min_fidelity = 1;
    auto record = [&](const PatternRunResult &run) {
        const double f = fidelity_up_to_phase(run.logical_state, expected);
        report.min_fidelity = std::min(report.min_fidelity, f);
        total += f;
        ++report.branches;
        report.records.push_back({run.outcomes, f});
    };

    if (report.exhaustive) {
        const std::uint64_t count = std::uint64_t{1} << m;
        std::vector<int> bits(m);
        for (std::uint64_t b = 0; b < count; ++b) {
            for (std::size_t j = 0; j < m; ++j) bits[j] = static_cast<int>((b >> j) & 1);
            try {
                record(run_pattern(pattern, input, bits));
            } catch (const Error &e) {
                if (e.code() != ErrorCode::ZeroProbabilityBranch) throw;
                ++report.skipped;
            }
        }
    } else {
        for (std::size_t b = 0; b < options.samples; ++b) {
            Rng rng(options.seed ^ static_cast<std::uint64_t>(b));
            record(run_pattern(pattern, input, std::ref(rng)));
        }
    }
    report.mean_fidelity = report.branches ? total / static_cast<double>(report.branches) : 0;
    report.passed = report.branches > 0 && report.min_fidelity >= 1 - kVerifyTolerance;
    return report;
}

}  // namespace vbsq
