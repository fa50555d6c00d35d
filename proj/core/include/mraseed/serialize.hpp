// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "mraseed/overlap.hpp"
#include "mraseed/pipeline.hpp"
#include "mraseed/relevance.hpp"
#include "mraseed/sum_rules.hpp"
#include "mraseed/synthesis.hpp"

namespace mraseed {

inline constexpr int kSchemaVersion = 1;

// JSON documents with sorted keys and round-trip doubles; output is a pure
// function of the input.
std::string to_json(const OverlapTable& table);
std::string to_json(const SpectralSeries& series);
std::string to_json(const CWeights& c);
std::string to_json(const FilterSequence& H);
std::string to_json(const RelevanceReport& report);
std::string to_json(const SumRuleReport& rules);
std::string to_json(const PsfReport& psf);
// Seed, phase, parameters, report, sum rules and PSF summary in one document.
std::string report_json(const PipelineResult& result, const PipelineOptions& opts);

void write_csv(std::ostream& os, const FilterSequence& H);
// p, S(0, p) on `points` uniform nodes of [0, 2 pi).
void write_series_csv(std::ostream& os, const SpectralSeries& series, std::size_t points = 1024);
// w, |H(w)| on the relevance grid over [-pi/2, pi/2].
void write_symbol_csv(std::ostream& os, const TruncatedSequence& H, std::size_t points = 4097);

}  // namespace mraseed
