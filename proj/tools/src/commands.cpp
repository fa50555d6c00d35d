// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "mraseed/errors.hpp"
#include "mraseed/serialize.hpp"

namespace mraseed::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
}

template <class Fn>
void write_with(const std::filesystem::path& path, Fn&& fn) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    fn(f);
}

std::string positivity_json(const std::string& seed, const PositivityError& e) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["seed"] = seed;
    j["error"] = "positivity";
    j["message"] = e.what();
    j["min_value"] = e.min_value();
    j["min_location"] = e.min_location();
    return j.dump(2) + "\n";
}

std::string line(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

PipelineOptions with_phase(const RunConfig& cfg) {
    PipelineOptions o = cfg.opts;
    o.phase = parse_phase(cfg.phase);
    if (o.radius < 1 || o.n_cap < 1 || o.s_max < 0)
        throw ConfigError("radius and n-cap must be positive, s-max non-negative");
    return o;
}

}  // namespace

int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SeedFunction seed = parse_seed(cfg.seed, cfg.k);
    const PipelineOptions opts = with_phase(cfg);
    if (seed.warning()) err << "warning: " << *seed.warning() << '\n';

    PipelineResult res = [&] {
        try {
            return run_pipeline(seed, opts);
        } catch (const PositivityError& e) {
            const std::string doc = positivity_json(seed.descriptor(), e);
            if (cfg.out) {
                std::filesystem::create_directories(*cfg.out);
                write_file(*cfg.out / "report.json", doc);
            } else {
                out << doc;
            }
            throw;
        }
    }();

    const std::string report = report_json(res, opts);
    if (cfg.out) {
        const auto& dir = *cfg.out;
        std::filesystem::create_directories(dir);
        const bool json = cfg.format != Format::Csv, csv = cfg.format != Format::Json;
        write_file(dir / "report.json", report);
        if (json) {
            write_file(dir / "filter.json", to_json(res.H));
            write_file(dir / "overlap.json", to_json(res.table));
            write_file(dir / "c.json", to_json(res.c));
        }
        if (csv) {
            write_with(dir / "filter.csv", [&](std::ostream& os) { write_csv(os, res.H); });
            write_with(dir / "series.csv", [&](std::ostream& os) { write_series_csv(os, res.series); });
            write_with(dir / "symbol.csv",
                       [&](std::ostream& os) { write_symbol_csv(os, res.H.coeffs, opts.r4_grid); });
        }
        const auto& r = res.report;
        out << "seed " << seed.descriptor() << ", phase " << opts.phase.descriptor() << '\n'
            << line("H_n on [%ld, %ld], c_s on [%ld, %ld]\n", res.H.n_min(), res.H.n_max(),
                    res.c.s_min, res.c.s_max())
            << line("r1 %-12s max residual %.3e\n", to_string(r.v1).c_str(), r.r1_max)
            << line("r2 %-12s %s\n", to_string(r.v2).c_str(), to_string(r.r2.decay).c_str())
            << line("r3 %-12s sum %.12g, residual %.3e\n", to_string(r.v3).c_str(), r.r3.sum.real(),
                    r.r3.residual)
            << line("r4 %-12s min |H(w)| %.6g at w = %.6g\n", to_string(r.v4).c_str(),
                    r.r4.min_modulus, r.r4.argmin);
        for (const auto& n : r.notes) out << "note: " << n << '\n';
        out << "wrote " << dir.string() << '\n';
    } else {
        out << report;
    }
    if (cfg.strict && !res.report.all_pass()) return kStrictFailure;
    return kOk;
}

int cmd_examples(const std::vector<int>& which, const std::vector<int>& ks, std::ostream& out) {
    bool all_ok = true;
    for (int n : which) {
        const ExampleRun run = run_example(n, ks);
        out << "example " << n << ": " << run.title << '\n';
        for (const auto& c : run.checks)
            out << line("  %-4s %-32s %-14.8g expected %s\n", c.passed ? "ok" : "FAIL", c.name.c_str(),
                        c.value, c.expected.c_str());
        all_ok = all_ok && run.passed();
    }
    out << (all_ok ? "all reference values matched\n" : "reference mismatch\n");
    return all_ok ? kOk : kGoldenMismatch;
}

namespace {

SumRuleReport sum_rules_at(const SeedFunction& seed, const PipelineOptions& opts, int radius) {
    CWeightsOptions copts;
    copts.pos_tol = opts.tol.pos;
    const auto table = overlap_table(seed, radius);
    const auto series = spectral_series(table);
    const auto c = c_weights(series, opts.phase, opts.s_max, copts);
    return sum_rules(seed, table, series, c, opts.tol.sum_rules);
}

}  // namespace

int cmd_sumrules(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const SeedFunction seed = parse_seed(cfg.seed, cfg.k);
    const PipelineOptions opts = with_phase(cfg);
    if (seed.warning()) err << "warning: " << *seed.warning() << '\n';

    const auto rep = sum_rules_at(seed, opts, opts.radius);
    out << "seed " << seed.descriptor() << ", radius " << opts.radius << '\n';
    for (const auto& r : rep.rules) {
        out << line("  %-4s %-15s lhs %.12g%+.3gi  rhs %.12g%+.3gi  residual %.3e",
                    r.passed ? "ok" : "FAIL", r.name.c_str(), r.lhs.real(), r.lhs.imag(), r.rhs.real(),
                    r.rhs.imag(), r.residual);
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
    }
    nlohmann::json sweep = nlohmann::json::array();
    if (rep.slow_tail || !rep.all_pass()) {
        out << "slow tail: residuals by table radius\n";
        for (int R : {opts.radius, 2 * opts.radius, 4 * opts.radius}) {
            const auto at = R == opts.radius ? rep : sum_rules_at(seed, opts, R);
            out << line("  radius %3d", R);
            nlohmann::json row;
            row["radius"] = R;
            for (const auto& r : at.rules) {
                out << line("  %s %.3e", r.name.c_str(), r.residual);
                row[r.name] = r.residual;
            }
            out << '\n';
            sweep.push_back(std::move(row));
        }
    }
    if (cfg.out) {
        std::filesystem::create_directories(*cfg.out);
        auto j = nlohmann::json::parse(to_json(rep));
        j["seed"] = seed.descriptor();
        j["radius"] = opts.radius;
        if (!sweep.empty()) j["radius_sweep"] = sweep;
        write_file(*cfg.out / "sumrules.json", j.dump(2) + "\n");
    }
    if (cfg.strict && !rep.all_pass()) return kStrictFailure;
    return kOk;
}

}  // namespace mraseed::cli
