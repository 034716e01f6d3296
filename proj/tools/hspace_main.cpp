// hspace : verify / distances / variant pipelines from the command line.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage/config error, 3 numerical conditioning failure.

#include "hspace/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string mode;
    long level_m = -1, level_n = -1;
    std::string out_dir;
    std::string formats;
    long seed = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--mode", flags.mode, "exact | approx")->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--level-m", flags.level_m, "truncation level M of the witness u");
    cmd->add_option("--level-n", flags.level_n, "truncation level N of the witness v");
    cmd->add_option("--out", flags.out_dir, "report output directory");
    cmd->add_option("--format", flags.formats, "comma-separated: json,csv");
    cmd->add_option("--seed", flags.seed, "seed for the random triangular rows");
}

hspace::RunConfig build_config(const CommonFlags& flags) {
    hspace::RunConfig cfg;
    if (!flags.config_path.empty()) cfg = hspace::RunConfig::from_file(flags.config_path);
    if (!flags.mode.empty()) cfg.mode = flags.mode == "exact" ? hspace::Mode::Exact : hspace::Mode::Approx;
    if (flags.level_m >= 0) {
        cfg.level_m = static_cast<std::size_t>(flags.level_m);
        cfg.levels_explicit = true;
    }
    if (flags.level_n >= 0) {
        cfg.level_n = static_cast<std::size_t>(flags.level_n);
        cfg.levels_explicit = true;
    }
    if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
    if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
    if (!flags.formats.empty()) {
        cfg.formats.clear();
        std::string item;
        for (char c : flags.formats + ",") {
            if (c == ',') {
                if (!item.empty()) cfg.formats.push_back(item);
                item.clear();
            } else {
                item += c;
            }
        }
    }
    cfg.apply_mode_defaults();
    return cfg;
}

int run_bundle(const hspace::ReportBundle& bundle, const hspace::RunConfig& cfg) {
    hspace::write_outputs(bundle, cfg);
    std::size_t passed = 0, failed = 0, info = 0;
    for (const auto& rec : bundle.records) {
        if (rec.status == "pass") ++passed;
        else if (rec.status == "fail") ++failed;
        else ++info;
    }
    for (const auto* rec : bundle.failures())
        std::cerr << "FAIL " << rec->name << ": " << rec->details << "\n";
    std::cout << bundle.command << ": " << passed << " passed, " << failed << " failed, " << info
              << " informational; reports in " << cfg.out_dir << "\n";
    return bundle.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for a Hilbert function space where the odd polynomials "
                 "fail to be dense in the odd functions"};
    app.require_subcommand(1);

    CommonFlags verify_flags, distances_flags, variant_flags;
    auto* verify = app.add_subcommand("verify", "core identity and density checks");
    add_common(verify, verify_flags);
    auto* distances = app.add_subcommand("distances", "distance tables for spans, summability methods and dilates");
    add_common(distances, distances_flags);
    auto* variant = app.add_subcommand("variant", "support-set and Fourier variants");
    std::string variant_kind, support_name;
    add_common(variant, variant_flags);
    variant->add_option("--kind", variant_kind, "identity | support | fourier")
        ->check(CLI::IsMember({"identity", "support", "fourier"}));
    variant->add_option("--support", support_name, "evens | odds | squares")
        ->check(CLI::IsMember({"evens", "odds", "squares"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            const auto cfg = build_config(verify_flags);
            return run_bundle(hspace::cmd_verify(cfg), cfg);
        }
        if (distances->parsed()) {
            const auto cfg = build_config(distances_flags);
            return run_bundle(hspace::cmd_distances(cfg), cfg);
        }
        auto cfg = build_config(variant_flags);
        if (!variant_kind.empty()) {
            if (variant_kind == "identity") cfg.variant = hspace::RunConfig::Variant::Identity;
            if (variant_kind == "support") cfg.variant = hspace::RunConfig::Variant::Support;
            if (variant_kind == "fourier") cfg.variant = hspace::RunConfig::Variant::Fourier;
        }
        if (!support_name.empty()) {
            cfg.variant = hspace::RunConfig::Variant::Support;
            if (support_name == "evens") cfg.support = hspace::SupportSpec::evens();
            if (support_name == "odds") cfg.support = hspace::SupportSpec::odds();
            if (support_name == "squares") cfg.support = hspace::SupportSpec::squares();
        }
        return run_bundle(hspace::cmd_variant(cfg), cfg);
    } catch (const hspace::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hspace::ConditioningError& e) {
        std::cerr << "conditioning failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
