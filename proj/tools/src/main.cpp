// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mraseed/errors.hpp"

using namespace mraseed;
using namespace mraseed::cli;

namespace {

constexpr const char* kSeedHelp =
    "Seed spec, family[:param]:\n"
    "  box-momentum:W     hhat = (W a)^-1/2 on [0, W a); W may be 2k+1 or 2k with --k\n"
    "  box-position:D     h = (D a)^-1/2 on [0, D a)\n"
    "  gaussian           h = pi^-1/4 exp(-x^2/2)\n"
    "  lorentzian         hhat = 2 / (a (1 + p^2))\n"
    "  tabulated:FILE     hhat samples: '# domain p_min p_max n_points' then p,re,im rows\n"
    "  example:N          seed of builtin example N (1..9)";

void add_run_options(CLI::App* cmd, RunConfig& cfg, std::string& format) {
    cmd->add_option("--seed", cfg.seed, kSeedHelp)->capture_default_str();
    cmd->add_option("--k", cfg.k, "k for the 2k and 2k+1 box widths")->check(CLI::NonNegativeNumber);
    cmd->add_option("--phase", cfg.phase, "none | linear:K0 | quadratic:G")->capture_default_str();
    cmd->add_option("--radius", cfg.opts.radius, "overlap table radius")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--s-max", cfg.opts.s_max, "c_s radius (0: automatic)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--n-cap", cfg.opts.n_cap, "largest |n| for H_n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol-r1", cfg.opts.tol.r1, "(r1) tolerance")->capture_default_str();
    cmd->add_option("--tol-r3", cfg.opts.tol.r3, "(r3) tolerance")->capture_default_str();
    cmd->add_option("--tol-r4", cfg.opts.tol.r4, "(r4) tolerance")->capture_default_str();
    cmd->add_option("--pos-tol", cfg.opts.tol.pos, "positivity threshold for S(0,p)")
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "output directory");
    cmd->add_flag("--strict", cfg.strict, "exit 4 when a condition fails");
    cmd->add_option("--format", format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}))
        ->capture_default_str();
}

Format to_format(const std::string& s) {
    static const std::map<std::string, Format> m{{"json", Format::Json}, {"csv", Format::Csv}, {"both", Format::Both}};
    return m.at(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthonormal filter synthesis from seed functions"};
    app.require_subcommand(1);

    RunConfig syn_cfg, sum_cfg;
    std::string syn_format = "json", sum_format = "json";
    auto* syn = app.add_subcommand("synthesize", "build H_n for a seed and check (r1)-(r4)");
    add_run_options(syn, syn_cfg, syn_format);
    auto* sum = app.add_subcommand("sumrules", "evaluate the lattice sum rules for a seed");
    add_run_options(sum, sum_cfg, sum_format);

    auto* ex = app.add_subcommand("examples", "reproduce builtin examples against reference values");
    std::vector<std::string> which{"all"};
    std::vector<int> ks{0, 1, 2, 3, 4, 5};
    ex->add_option("which", which, "example numbers 1..9 or 'all'");
    ex->add_option("--k", ks, "members of family 7")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*syn) {
            syn_cfg.format = to_format(syn_format);
            return cmd_synthesize(syn_cfg, std::cout, std::cerr);
        }
        if (*sum) {
            sum_cfg.format = to_format(sum_format);
            return cmd_sumrules(sum_cfg, std::cout, std::cerr);
        }
        std::vector<int> numbers;
        for (const auto& w : which) {
            if (w == "all") {
                for (int n = 1; n <= 9; ++n) numbers.push_back(n);
                continue;
            }
            int n = 0;
            try {
                n = std::stoi(w);
            } catch (const std::exception&) {
                throw ConfigError("unknown example '" + w + "'");
            }
            if (n < 1 || n > 9) throw ConfigError("example number must be in 1..9");
            numbers.push_back(n);
        }
        return cmd_examples(numbers, ks, std::cout);
    } catch (const PositivityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPositivityFailure;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NormalizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
