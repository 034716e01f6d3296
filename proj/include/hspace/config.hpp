// config.hpp : run configuration, loadable from a JSON document.
#pragma once

#include "hspace/errors.hpp"
#include "hspace/variants.hpp"
#include "hspace/weights.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hspace {

struct RunConfig {
    WeightSpec weights = WeightSpec::omega_power(Rational(2));
    Mode mode = Mode::Exact;

    std::size_t level_m = 64, level_n = 64;
    std::size_t biorth_level = 128;             // biorthogonality n,m <= this
    std::size_t norm_check_level = 512;         // monomial norm bound n <= this
    std::size_t growth_max_degree = 256;        // partial-sum growth k <= this
    std::vector<std::size_t> headline_ks = {4, 8, 16, 32, 64};
    std::vector<std::size_t> method_ns = {1, 2, 4, 8, 16, 32, 64, 127};
    std::vector<std::size_t> control_degrees = {1, 3, 7, 15, 31, 63, 127, 129};
    std::vector<Rational> radii = {Rational(1, 2), Rational(9, 10), Rational(99, 100)};
    std::size_t random_rows = 20;
    std::uint64_t seed = 12345;

    enum class Variant { Identity, Support, Fourier };
    Variant variant = Variant::Identity;
    SupportSpec support = SupportSpec::evens();

    std::string out_dir = "reports";
    std::vector<std::string> formats = {"json", "csv"};
    bool plot_data = false;

    double zero_tol = 1e-12;
    double pivot_drop_tol = 1e-12;

    // Whether levels were given explicitly (approx mode defaults to 256).
    bool levels_explicit = false;

    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig from_file(const std::string& path);
    nlohmann::ordered_json to_json() const;
    void validate() const; // throws ConfigError
    void apply_mode_defaults();
};

std::string variant_name(RunConfig::Variant v);

} // namespace hspace
