// SPDX-License-Identifier: Apache-2.0
#include "mraseed/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include <nlohmann/json.hpp>

namespace mraseed {

namespace {

using json = nlohmann::json;

json cx(cplx z) { return json::array({z.real(), z.imag()}); }

json num(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json decay_json(const DecayClass& d) {
    json j;
    j["kind"] = to_string(d.kind);
    if (d.kind == DecayKind::Polynomial) j["exponent"] = d.exponent;
    j["r_squared"] = d.r_squared;
    j["slope"] = d.slope;
    j["fit_points"] = d.fit_points;
    j["reason"] = d.reason;
    return j;
}

json table_json(const OverlapTable& t) {
    json j;
    j["radius"] = t.radius;
    j["tail_bound"] = t.tail_bound;
    j["under_truncated"] = t.under_truncated;
    j["representation"] = to_string(t.representation);
    j["total"] = cx(t.total());
    json rows = json::array();
    for (int l1 = -t.radius; l1 <= t.radius; ++l1) {
        json row = json::array();
        for (int l2 = -t.radius; l2 <= t.radius; ++l2) row.push_back(cx(t.at(l1, l2)));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j;
}

json series_json(const SpectralSeries& s) {
    json j;
    j["radius"] = s.radius;
    j["min_value"] = s.min_value;
    j["min_location"] = s.min_location;
    json T = json::object();
    for (int r = -s.radius; r <= s.radius; ++r) T[std::to_string(r)] = cx(s.T(r));
    j["T"] = std::move(T);
    return j;
}

json c_json(const CWeights& c, bool values) {
    json j;
    j["phase"] = c.phase.descriptor();
    j["s_min"] = c.s_min;
    j["s_max"] = c.s_max();
    j["grid"] = c.grid;
    j["convergence"] = c.convergence;
    j["converged"] = c.converged;
    j["tail_flag"] = c.tail_flag;
    j["decay"] = decay_json(classify_decay(c.sequence()));
    if (values) {
        json v = json::array();
        for (const auto& z : c.values) v.push_back(cx(z));
        j["values"] = std::move(v);
    }
    return j;
}

json filter_json(const FilterSequence& H, bool values) {
    json j;
    j["seed"] = H.seed;
    j["phase"] = H.phase;
    j["n_min"] = H.n_min();
    j["n_max"] = H.n_max();
    j["s_min"] = H.s_min;
    j["s_max"] = H.s_max;
    j["n_cap"] = H.n_cap;
    j["cap_hit"] = H.cap_hit;
    j["tail"] = H.coeffs.tail == TailFlag::Cap ? "cap" : "threshold";
    if (values) {
        json v = json::array();
        for (const auto& z : H.coeffs.values) v.push_back(cx(z));
        j["values"] = std::move(v);
    }
    return j;
}

json report_body(const RelevanceReport& r) {
    json j;
    json r1 = json::object();
    for (const auto& [l, v] : r.r1_residuals) r1[std::to_string(l)] = v;
    j["r1"] = {{"residuals", r1}, {"max", r.r1_max}, {"tol", r.tol.r1}, {"verdict", to_string(r.v1)}};
    j["r2"] = {{"decay", decay_json(r.r2.decay)},
               {"insufficient_tail", r.r2.insufficient_tail},
               {"verdict", to_string(r.v2)}};
    j["r3"] = {{"sum", cx(r.r3.sum)},
               {"residual", r.r3.residual},
               {"tol", r.tol.r3},
               {"verdict", to_string(r.v3)}};
    j["r4"] = {{"min_modulus", r.r4.min_modulus},
               {"argmin", r.r4.argmin},
               {"grid", r.r4.grid},
               {"tol", r.tol.r4},
               {"verdict", to_string(r.v4)}};
    if (r.criterion) {
        const auto& c = *r.criterion;
        j["criterion_r3"] = {{"lhs", cx(c.lhs)},       {"rhs", cx(c.rhs)},
                             {"s_origin", c.s_origin}, {"residual", c.residual},
                             {"samples", c.samples},   {"verdict", to_string(c.verdict)}};
    }
    if (r.corollary) {
        const auto& c = *r.corollary;
        j["corollary"] = {{"double_sum", cx(c.double_sum)},
                          {"alternating_sum", cx(c.alternating_sum)},
                          {"compact", c.compact},
                          {"identity_residual", c.identity_residual},
                          {"necessary", to_string(c.necessary)}};
    }
    if (r.factorization) {
        const auto& f = *r.factorization;
        j["factorization"] = {{"product_residual", num(f.product_residual)},
                              {"k_imag_max", num(f.k_imag_max)},
                              {"k_branch_residual", num(f.k_branch_residual)},
                              {"k_min_real", num(f.k_min_real)},
                              {"grid", f.grid},
                              {"passed", f.passed}};
    }
    j["l_max"] = r.l_max;
    j["all_pass"] = r.all_pass();
    j["notes"] = r.notes;
    return j;
}

json sums_json(const SumRuleReport& s) {
    json rules = json::array();
    for (const auto& r : s.rules) {
        json x = {{"name", r.name},         {"lhs", cx(r.lhs)},     {"rhs", cx(r.rhs)},
                  {"residual", r.residual}, {"passed", r.passed}};
        if (!r.note.empty()) x["note"] = r.note;
        rules.push_back(std::move(x));
    }
    return {{"rules", rules}, {"tolerance", s.tolerance}, {"slow_tail", s.slow_tail},
            {"all_pass", s.all_pass()}};
}

json psf_json(const PsfReport& p) {
    auto lines = [](const std::vector<PsfLine>& v) {
        json a = json::array();
        for (const auto& l : v)
            a.push_back({{"index", l.index}, {"lhs", cx(l.lhs)}, {"rhs", cx(l.rhs)}, {"diff", l.diff}});
        return a;
    };
    return {{"momentum_rows", lines(p.momentum_rows)},
            {"position_columns", lines(p.position_columns)},
            {"momentum_samples", p.momentum_samples},
            {"position_samples", p.position_samples},
            {"max_diff", p.max_diff},
            {"tolerance", p.tolerance},
            {"passed", p.passed}};
}

std::string dump(json j) {
    j["schema"] = kSchemaVersion;
    return j.dump(2) + "\n";
}

}  // namespace

std::string to_json(const OverlapTable& table) { return dump(table_json(table)); }
std::string to_json(const SpectralSeries& series) { return dump(series_json(series)); }
std::string to_json(const CWeights& c) { return dump(c_json(c, true)); }
std::string to_json(const FilterSequence& H) { return dump(filter_json(H, true)); }
std::string to_json(const RelevanceReport& report) { return dump(report_body(report)); }
std::string to_json(const SumRuleReport& rules) { return dump(sums_json(rules)); }
std::string to_json(const PsfReport& psf) { return dump(psf_json(psf)); }

std::string report_json(const PipelineResult& result, const PipelineOptions& opts) {
    json j;
    j["seed"] = result.seed.descriptor();
    if (result.seed.warning()) j["seed_warning"] = *result.seed.warning();
    j["phase"] = opts.phase.descriptor();
    j["parameters"] = {{"radius", opts.radius},
                       {"s_max", opts.s_max},
                       {"n_cap", opts.n_cap},
                       {"l_max", opts.l_max},
                       {"r4_grid", opts.r4_grid},
                       {"tolerances",
                        {{"r1", opts.tol.r1},
                         {"r3", opts.tol.r3},
                         {"r4", opts.tol.r4},
                         {"pos", opts.tol.pos},
                         {"psf", opts.tol.psf},
                         {"sum_rules", opts.tol.sum_rules}}}};
    j["table"] = {{"radius", result.table.radius},
                  {"tail_bound", result.table.tail_bound},
                  {"under_truncated", result.table.under_truncated},
                  {"representation", to_string(result.table.representation)},
                  {"total", cx(result.table.total())}};
    j["series"] = {{"T0", cx(result.series.T(0))},
                   {"min_value", result.series.min_value},
                   {"min_location", result.series.min_location}};
    j["c"] = c_json(result.c, false);
    j["filter"] = filter_json(result.H, false);
    j["report"] = report_body(result.report);
    if (result.sums) j["sum_rules"] = sums_json(*result.sums);
    j["psf"] = {{"max_diff", result.psf.max_diff},
                {"tolerance", result.psf.tolerance},
                {"passed", result.psf.passed}};
    return dump(std::move(j));
}

void write_csv(std::ostream& os, const FilterSequence& H) { write_csv(os, H.coeffs); }

void write_series_csv(std::ostream& os, const SpectralSeries& series, std::size_t points) {
    const auto prec = os.precision();
    os << "p,S\n" << std::setprecision(17);
    for (std::size_t j = 0; j < points; ++j) {
        const double p = kTwoPi * static_cast<double>(j) / static_cast<double>(points);
        os << p << ',' << series(p) << '\n';
    }
    os.precision(prec);
}

void write_symbol_csv(std::ostream& os, const TruncatedSequence& H, std::size_t points) {
    const auto v = symbol_on_grid(H, points);
    const auto prec = os.precision();
    os << "w,abs\n" << std::setprecision(17);
    const double step = std::numbers::pi / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j)
        os << -std::numbers::pi / 2 + step * static_cast<double>(j) << ',' << std::abs(v[j]) << '\n';
    os.precision(prec);
}

}  // namespace mraseed
