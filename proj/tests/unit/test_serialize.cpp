// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "mraseed/pipeline.hpp"
#include "mraseed/serialize.hpp"

using namespace mraseed;

namespace {

PipelineResult haar_run(PipelineOptions& o) {
    o.radius = 4;
    return run_pipeline(SeedFunction::box_momentum(2), o);
}

}  // namespace

TEST(Serialize, ReportIsDeterministic) {
    PipelineOptions o;
    const auto r1 = haar_run(o);
    const auto r2 = haar_run(o);
    const auto j1 = report_json(r1, o);
    EXPECT_EQ(j1, report_json(r2, o));
    const auto doc = nlohmann::json::parse(j1);
    EXPECT_EQ(doc.at("schema"), 1);
    EXPECT_TRUE(doc.contains("seed"));
    EXPECT_TRUE(doc.contains("parameters"));
    EXPECT_EQ(doc.at("report").at("all_pass"), true);
}

TEST(Serialize, ArtifactsCarrySchema) {
    PipelineOptions o;
    const auto r = haar_run(o);
    for (const auto& s : {to_json(r.table), to_json(r.series), to_json(r.c), to_json(r.H),
                          to_json(r.report), to_json(r.psf)}) {
        const auto doc = nlohmann::json::parse(s);
        EXPECT_EQ(doc.at("schema"), 1);
        EXPECT_EQ(s.back(), '\n');
    }
}

TEST(Serialize, FilterValuesRoundTrip) {
    PipelineOptions o;
    const auto r = haar_run(o);
    std::ostringstream os;
    write_csv(os, r.H);
    std::istringstream is(os.str());
    const auto back = read_csv(is);
    ASSERT_EQ(back.size(), r.H.coeffs.size());
    for (long n = back.first(); n <= back.last(); ++n) EXPECT_EQ(back.at(n), r.H.at(n));
}

TEST(Serialize, CsvHeaders) {
    PipelineOptions o;
    const auto r = haar_run(o);
    std::ostringstream series, symbol;
    write_series_csv(series, r.series, 8);
    write_symbol_csv(symbol, r.H.coeffs, 9);
    EXPECT_EQ(series.str().rfind("p,S\n", 0), 0u);
    EXPECT_EQ(symbol.str().rfind("w,abs\n", 0), 0u);
    std::size_t rows = 0;
    for (char ch : symbol.str()) rows += ch == '\n';
    EXPECT_EQ(rows, 10u);
}
