// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mraseed/pipeline.hpp"

namespace mraseed::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kPositivityFailure = 3,
    kStrictFailure = 4,
    kGoldenMismatch = 5,
};

enum class Format { Json, Csv, Both };

struct RunConfig {
    std::string seed = "gaussian";
    std::optional<int> k;
    std::string phase = "none";
    PipelineOptions opts;
    std::optional<std::filesystem::path> out;
    bool strict = false;
    Format format = Format::Json;
};

// Filter, report and plot data for one seed.
int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// Builtin examples against their reference values; `ks` selects members of family 7.
int cmd_examples(const std::vector<int>& which, const std::vector<int>& ks, std::ostream& out);
// Both sides of every sum rule; slow tails get a radius sweep.
int cmd_sumrules(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mraseed::cli
