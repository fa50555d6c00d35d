// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mraseed/pipeline.hpp"
#include "mraseed/seed.hpp"
#include "mraseed/synthesis.hpp"

namespace mraseed::cli {

// family[:param]; see `mraseed --help`. `k` resolves the 2k and 2k+1 widths.
SeedFunction parse_seed(const std::string& spec, std::optional<int> k = std::nullopt);
// none | linear:K0 | quadratic:G
PhaseSpec parse_phase(const std::string& spec);

// hhat(p) = sqrt((1 + cos(pi p / a) / 2) / (2 a)) tabulated on [0, 2a).
SeedFunction cosine_box_seed(std::size_t points = 16385);

struct Example {
    int number;
    std::string title;
    SeedFunction seed;
    PipelineOptions opts;
};

// Builtin seeds 1..9; `k` selects the member of family 7.
Example builtin_example(int number, int k = 1);

struct GoldenCheck {
    std::string name;
    double value;
    std::string expected;
    bool passed;
};

struct ExampleRun {
    int number;
    std::string title;
    std::vector<GoldenCheck> checks;
    bool passed() const;
};

// Reproduces a builtin example and compares it with its reference values.
ExampleRun run_example(int number, const std::vector<int>& ks = {0, 1, 2, 3, 4, 5});

}  // namespace mraseed::cli
