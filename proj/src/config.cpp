#include "hspace/config.hpp"

#include <fstream>

namespace hspace {

namespace {

Rational parse_rational(const nlohmann::json& j, const char* what) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return rational_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
    throw ConfigError(std::string(what) + ": expected an integer or a 'p/q'/decimal string");
}

WeightSpec parse_weights(const nlohmann::json& j) {
    const std::string kind = j.value("kind", "omega_power");
    try {
        if (kind == "omega_power")
            return WeightSpec::omega_power(j.contains("alpha") ? parse_rational(j["alpha"], "alpha")
                                                               : Rational(2));
        if (kind == "omega_list" || kind == "eta_list") {
            std::vector<Rational> values;
            for (const auto& v : j.at("values")) values.push_back(parse_rational(v, "weights.values"));
            const bool summable = j.value("summable_reciprocal", false);
            const bool nthroot = j.value("nth_root_limit_one", false);
            return kind == "omega_list" ? WeightSpec::omega_list(std::move(values), summable, nthroot)
                                        : WeightSpec::eta_list(std::move(values), summable, nthroot);
        }
        if (kind == "eta_reciprocal") return WeightSpec::eta_reciprocal();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("weights: ") + e.what());
    }
    throw ConfigError("weights.kind must be omega_power | omega_list | eta_reciprocal | eta_list");
}

SupportSpec parse_support(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "evens") return SupportSpec::evens();
        if (s == "odds") return SupportSpec::odds();
        if (s == "squares") return SupportSpec::squares();
        throw ConfigError("support: unknown built-in '" + s + "'");
    }
    try {
        std::vector<bool> prefix;
        if (j.contains("prefix"))
            for (const auto& b : j["prefix"]) prefix.push_back(b.get<bool>());
        std::vector<bool> residues;
        for (const auto& b : j.at("residues")) residues.push_back(b.get<bool>());
        return SupportSpec::custom(std::move(prefix), j.at("period").get<std::size_t>(),
                                   std::move(residues));
    } catch (const std::exception& e) {
        throw ConfigError(std::string("support: ") + e.what());
    }
}

} // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "weights") cfg.weights = parse_weights(value);
            else if (key == "mode") {
                const std::string m = value.get<std::string>();
                if (m == "exact") cfg.mode = Mode::Exact;
                else if (m == "approx") cfg.mode = Mode::Approx;
                else throw ConfigError("mode must be 'exact' or 'approx'");
            }
            else if (key == "level_m") { cfg.level_m = value.get<std::size_t>(); cfg.levels_explicit = true; }
            else if (key == "level_n") { cfg.level_n = value.get<std::size_t>(); cfg.levels_explicit = true; }
            else if (key == "biorth_level") cfg.biorth_level = value.get<std::size_t>();
            else if (key == "norm_check_level") cfg.norm_check_level = value.get<std::size_t>();
            else if (key == "growth_max_degree") cfg.growth_max_degree = value.get<std::size_t>();
            else if (key == "headline_ks") cfg.headline_ks = value.get<std::vector<std::size_t>>();
            else if (key == "method_ns") cfg.method_ns = value.get<std::vector<std::size_t>>();
            else if (key == "control_degrees") cfg.control_degrees = value.get<std::vector<std::size_t>>();
            else if (key == "radii") {
                cfg.radii.clear();
                for (const auto& r : value) cfg.radii.push_back(parse_rational(r, "radii"));
            }
            else if (key == "random_rows") cfg.random_rows = value.get<std::size_t>();
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "variant") {
                const std::string v = value.get<std::string>();
                if (v == "identity") cfg.variant = Variant::Identity;
                else if (v == "support") cfg.variant = Variant::Support;
                else if (v == "fourier") cfg.variant = Variant::Fourier;
                else throw ConfigError("variant must be identity | support | fourier");
            }
            else if (key == "support") cfg.support = parse_support(value);
            else if (key == "out_dir") cfg.out_dir = value.get<std::string>();
            else if (key == "formats") cfg.formats = value.get<std::vector<std::string>>();
            else if (key == "plot_data") cfg.plot_data = value.get<bool>();
            else if (key == "zero_tol") cfg.zero_tol = value.get<double>();
            else if (key == "pivot_drop_tol") cfg.pivot_drop_tol = value.get<double>();
            else throw ConfigError("unknown config key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return from_json(j);
}

void RunConfig::apply_mode_defaults() {
    if (mode == Mode::Approx && !levels_explicit) level_m = level_n = 256;
}

void RunConfig::validate() const {
    if (level_m == 0 || level_n == 0) throw ConfigError("levels must be positive");
    if (level_m > level_n)
        throw ConfigError("level_m must be <= level_n (the dilate certificates pair f_M against g_N)");
    for (const auto& r : radii)
        if (r <= 0 || r >= 1) throw ConfigError("radii must lie in (0,1)");
    if (zero_tol <= 0 || pivot_drop_tol <= 0) throw ConfigError("tolerances must be positive");
    if (mode == Mode::Exact && weights.kind == WeightSpec::Kind::OmegaPower &&
        weights.alpha.get_den() != 1)
        throw ConfigError("exact mode requires an integer omega_power exponent");
    for (const auto& f : formats)
        if (f != "json" && f != "csv") throw ConfigError("formats may contain only 'json' and 'csv'");
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json w;
    w["kind"] = weights.kind_name();
    if (weights.kind == WeightSpec::Kind::OmegaPower) w["alpha"] = to_string(weights.alpha);
    if (!weights.values.empty()) {
        w["values"] = nlohmann::ordered_json::array();
        for (const auto& v : weights.values) w["values"].push_back(to_string(v));
        w["summable_reciprocal"] = weights.summable_reciprocal;
        w["nth_root_limit_one"] = weights.nth_root_limit_one;
    }
    j["weights"] = w;
    j["mode"] = mode_name(mode);
    j["level_m"] = level_m;
    j["level_n"] = level_n;
    j["biorth_level"] = biorth_level;
    j["norm_check_level"] = norm_check_level;
    j["growth_max_degree"] = growth_max_degree;
    j["headline_ks"] = headline_ks;
    j["method_ns"] = method_ns;
    j["control_degrees"] = control_degrees;
    j["radii"] = nlohmann::ordered_json::array();
    for (const auto& r : radii) j["radii"].push_back(to_string(r));
    j["random_rows"] = random_rows;
    j["seed"] = seed;
    j["variant"] = variant_name(variant);
    if (variant == Variant::Support) j["support"] = support.name();
    j["out_dir"] = out_dir;
    j["formats"] = formats;
    j["plot_data"] = plot_data;
    j["zero_tol"] = zero_tol;
    j["pivot_drop_tol"] = pivot_drop_tol;
    return j;
}

std::string variant_name(RunConfig::Variant v) {
    switch (v) {
        case RunConfig::Variant::Identity: return "identity";
        case RunConfig::Variant::Support: return "support";
        case RunConfig::Variant::Fourier: return "fourier";
    }
    return "?";
}

} // namespace hspace
