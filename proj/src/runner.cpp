#include "hspace/runner.hpp"

#include "hspace/mbasis.hpp"
#include "hspace/project.hpp"
#include "hspace/summability.hpp"
#include "hspace/variants.hpp"
#include "hspace/witness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hspace {

namespace {

SpaceOptions space_options(const RunConfig& cfg) {
    SpaceOptions o;
    o.zero_tol = cfg.zero_tol;
    o.pivot_drop_tol = cfg.pivot_drop_tol;
    return o;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void add_biorthogonality(ReportBundle& out, const SpaceHandle& space, std::size_t level) {
    auto rep = check_biorthogonality(space.cache(), level);
    CheckRecord rec = CheckRecord::pass("biorthogonality/max_deviation");
    rec.with_window("n,m <= " + std::to_string(level));
    if (space.mode() == Mode::Exact) {
        rec.with_exact(rep.max_abs_deviation.str()).with_float(std::abs(rep.max_abs_deviation.to_double()));
        if (!rep.exact_zero) {
            rec.status = "fail";
            rec.details = "nonzero deviation at n=" + std::to_string(rep.worst_n) +
                          ", m=" + std::to_string(rep.worst_m);
        }
    } else {
        const double dev = std::abs(rep.max_abs_deviation.as_approx());
        rec.with_float(dev).with_bound(1e-10);
        if (dev >= 1e-10) {
            rec.status = "fail";
            rec.details = "deviation " + fmt(dev) + " at n=" + std::to_string(rep.worst_n) +
                          ", m=" + std::to_string(rep.worst_m);
        }
    }
    out.add(std::move(rec));
}

void add_reconstruction(ReportBundle& out, const SpaceHandle& space, std::size_t level) {
    for (BasisFamily family : {BasisFamily::X, BasisFamily::Y}) {
        const char* fname = family == BasisFamily::X ? "x" : "y";
        CheckRecord rec = CheckRecord::pass(std::string("reconstruction/") + fname + "_basis");
        rec.with_window("n <= " + std::to_string(level));
        std::size_t checked = 0;
        try {
            for (std::size_t n = 0; n <= level; ++n) {
                reconstruct_e(space.cache(), n, family);
                ++checked;
            }
            rec.with_float(static_cast<double>(checked));
        } catch (const std::logic_error& e) {
            rec.status = "fail";
            rec.details = e.what();
        }
        out.add(std::move(rec));
    }
}

void add_norm_bound(ReportBundle& out, const SpaceHandle& space, std::size_t level) {
    auto rows = monomial_norm_check(space, level);
    const bool claimed = space.weights().omega_mode();
    CheckRecord rec = claimed ? CheckRecord::pass("norm_bound/monomials")
                              : CheckRecord::info("norm_bound/monomials");
    rec.with_window("n <= " + std::to_string(level));
    double max_ratio = 0.0, max_norm = 0.0;
    std::string offenders;
    for (const auto& row : rows) {
        max_norm = std::max(max_norm, row.norm);
        if (row.has_bound) {
            max_ratio = std::max(max_ratio, row.norm / row.bound);
            if (!row.pass) {
                rec.status = "fail";
                offenders += (offenders.empty() ? "" : "; ") + std::string("degree ") +
                             std::to_string(row.degree) + ": ||z^n||=" + fmt(row.norm) +
                             " > 1+omega=" + fmt(row.bound);
            }
        }
    }
    if (claimed)
        rec.with_float(max_ratio).with_bound(1.0);
    else
        rec.with_float(max_norm).with_details("eta-direct spec: no bound claimed, report only");
    if (!offenders.empty()) rec.details = offenders;
    out.add(std::move(rec));
}

void add_witness_checks(ReportBundle& out, const SpaceHandle& space, const WitnessPair& pair) {
    const std::size_t M = pair.level_m, N = pair.level_n;

    {
        auto odd = check_f_odd(space, pair, M - 1);
        CheckRecord rec = odd.all_zero
                              ? CheckRecord::pass("witness/f_even_coefficients_vanish")
                              : CheckRecord::fail("witness/f_even_coefficients_vanish",
                                                  "nonzero even coefficient at n=" +
                                                      std::to_string(odd.first_failure));
        rec.with_window("n <= " + std::to_string(M - 1)).with_float(0.0);
        out.add(std::move(rec));

        CheckRecord boundary = CheckRecord::info("witness/f_truncation_boundary");
        boundary.with_exact(odd.boundary_residual.str())
            .with_float(std::abs(odd.boundary_residual.to_double()))
            .with_bound(odd.boundary_le_eta_m)
            .with_details("residual coefficient at exponent " + std::to_string(odd.boundary_exponent) +
                          "; shrinks like eta_M");
        out.add(std::move(boundary));
    }

    {
        auto perp = check_g_perp_odd(space, pair, N);
        CheckRecord rec = perp.all_zero
                              ? CheckRecord::pass("witness/g_kills_odd_monomials")
                              : CheckRecord::fail("witness/g_kills_odd_monomials",
                                                  "nonzero pairing at n=" +
                                                      std::to_string(perp.first_failure));
        rec.with_window("n <= " + std::to_string(N)).with_float(0.0);
        out.add(std::move(rec));

        CheckRecord boundary = CheckRecord::info("witness/g_truncation_boundary");
        boundary.with_exact(perp.boundary_value.str())
            .with_float(std::abs(perp.boundary_value.to_double()))
            .with_details("[x_{2N+3}, v_N] = 1/eta_{N+1}, the first index past the window");
        out.add(std::move(boundary));
    }

    {
        const Scalar pairing = pair.u.dot(pair.v);
        const bool one = space.mode() == Mode::Exact
                             ? (pairing - Scalar::one(space.mode())).is_zero()
                             : std::abs(pairing.as_approx() - 1.0) < space.options().zero_tol;
        CheckRecord rec = one ? CheckRecord::pass("witness/pairing_f_g")
                              : CheckRecord::fail("witness/pairing_f_g",
                                                  "expected exactly 1, got " + pairing.str());
        rec.with_exact(pairing.str()).with_float(pairing.to_double());
        out.add(std::move(rec));
    }
}

void add_headline(ReportBundle& out, const SpaceHandle& space, const WitnessPair& pair,
                  const std::vector<std::size_t>& ks) {
    auto rep = headline_contrast(space, pair, ks);
    {
        CheckRecord rec = rep.full_span_zero
                              ? CheckRecord::pass("headline/full_span_distance")
                              : CheckRecord::fail("headline/full_span_distance",
                                                  "expected exact 0, got " + rep.full_span_dist_sq.str());
        rec.with_exact(rep.full_span_dist_sq.str())
            .with_float(std::sqrt(std::max(0.0, rep.full_span_dist_sq.to_double())))
            .with_window("span{z^0..z^" + std::to_string(2 * pair.level_m + 1) + "}");
        out.add(std::move(rec));
    }
    for (const auto& row : rep.odd_rows) {
        CheckRecord rec = row.dominates_cert
                              ? CheckRecord::pass("headline/odd_span_distance[k=" + std::to_string(row.k) + "]")
                              : CheckRecord::fail("headline/odd_span_distance[k=" + std::to_string(row.k) + "]",
                                                  "distance " + fmt(row.dist) + " below certificate " +
                                                      fmt(row.cert));
        rec.with_exact(row.dist_sq.str()).with_float(row.dist).with_bound(row.cert);
        rec.with_window("span{z^1,z^3,..,z^" + std::to_string(2 * row.k + 1) + "}");
        out.add(std::move(rec));
    }
}

std::vector<CheckRecord> core_records(const SpaceHandle& space, const RunConfig& cfg) {
    ReportBundle tmp;
    add_biorthogonality(tmp, space, cfg.biorth_level);
    add_reconstruction(tmp, space, cfg.biorth_level);
    add_norm_bound(tmp, space, cfg.norm_check_level);
    const WitnessPair pair = make_witnesses(space, cfg.level_m, cfg.level_n);
    add_witness_checks(tmp, space, pair);
    add_headline(tmp, space, pair, cfg.headline_ks);
    return std::move(tmp.records);
}

} // namespace

ReportBundle cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    ReportBundle out;
    out.command = "verify";
    out.config_echo = cfg.to_json();
    SpaceHandle space(cfg.weights, cfg.mode, IndexMap::identity(), false, space_options(cfg));
    for (auto& rec : core_records(space, cfg)) out.add(std::move(rec));
    return out;
}

ReportBundle cmd_distances(const RunConfig& cfg) {
    cfg.validate();
    ReportBundle out;
    out.command = "distances";
    out.config_echo = cfg.to_json();
    SpaceHandle space(cfg.weights, cfg.mode, IndexMap::identity(), false, space_options(cfg));
    const WitnessPair pair = make_witnesses(space, cfg.level_m, cfg.level_n);

    std::vector<std::size_t> ns;
    for (std::size_t n : cfg.method_ns)
        if (n <= 2 * cfg.level_m - 1 && n <= 2 * cfg.level_n + 1) ns.push_back(n);

    auto failure = summability_failure_report(space, pair, cfg.radii, cfg.random_rows, cfg.seed, ns,
                                              cfg.control_degrees);
    for (const auto& row : failure.rows) {
        const std::string name = "method/" + row.method +
                                 (row.method.find("dilate") == std::string::npos
                                      ? "[n=" + std::to_string(row.n) + "]"
                                      : "");
        CheckRecord rec = row.pass ? CheckRecord::pass(name)
                                   : CheckRecord::fail(name, "distance " + fmt(row.dist) +
                                                                 " below certificate " +
                                                                 fmt(row.cert - row.slack));
        rec.with_float(row.dist).with_bound(row.cert - row.slack);
        if (!row.dist_exact.empty()) rec.with_exact(row.dist_exact);
        if (row.slack > 0) rec.with_details("certificate " + fmt(row.cert) + " minus slack " + fmt(row.slack));
        out.add(std::move(rec));
    }
    {
        double prev = std::numeric_limits<double>::infinity();
        bool nonincreasing = true;
        for (const auto& row : failure.control) {
            CheckRecord rec = CheckRecord::info("control/full_span[D=" + std::to_string(row.degree) + "]");
            rec.with_float(row.dist);
            if (!row.dist_sq_exact.empty()) rec.with_exact(row.dist_sq_exact);
            out.add(std::move(rec));
            nonincreasing = nonincreasing && row.dist <= prev * (1 + 1e-12) + 1e-12;
            prev = row.dist;
        }
        const double final_dist = failure.control.empty() ? 0.0 : failure.control.back().dist;
        CheckRecord rec = (nonincreasing && final_dist < 0.01)
                              ? CheckRecord::pass("control/full_span_decays")
                              : CheckRecord::fail("control/full_span_decays",
                                                  "final distance " + fmt(final_dist));
        rec.with_float(final_dist).with_bound(0.01);
        out.add(std::move(rec));
    }

    // Abel identity: truncated mean == dilate - r^{K+1} s_K(f), exactly
    for (const Rational& r : cfg.radii) {
        const std::size_t K = std::min<std::size_t>(2 * cfg.level_m - 1, 64);
        auto chk = abel_dilate_identity_check(space, pair.f, r, K);
        CheckRecord rec = chk.exact
                              ? CheckRecord::pass("abel_identity[r=" + to_string(r) + "]")
                              : CheckRecord::fail("abel_identity[r=" + to_string(r) + "]",
                                                  "telescoped identity violated at K=" + std::to_string(K));
        rec.with_float(chk.residual_norm)
            .with_window("K=" + std::to_string(K))
            .with_details("residual ||r^{K+1} s_K(f)||, the gap to the untruncated dilate");
        out.add(std::move(rec));
    }

    // partial-sum growth on a deep enough witness
    if (space.weights().nth_root_limit_one) {
        const std::size_t M_growth = cfg.growth_max_degree / 2 + 1;
        const std::size_t max_idx = space.cache().max_index();
        if (max_idx == std::numeric_limits<std::size_t>::max() || M_growth <= max_idx) {
            const WitnessPair deep = make_witnesses(space, M_growth, M_growth);
            auto rows = partial_sum_norm_growth(space, deep.f, cfg.growth_max_degree);
            bool ok = true;
            double worst_root = 0.0;
            std::string offender;
            for (const auto& row : rows) {
                if (row.k < 32) continue;
                worst_root = std::max(worst_root, row.kth_root);
                if (!row.below_R) {
                    ok = false;
                    if (offender.empty())
                        offender = "k=" + std::to_string(row.k) + ": root " + fmt(row.kth_root);
                }
            }
            CheckRecord rec = ok ? CheckRecord::pass("growth/partial_sum_kth_roots")
                                 : CheckRecord::fail("growth/partial_sum_kth_roots", offender);
            rec.with_float(worst_root)
                .with_bound(1.1)
                .with_window("k in [32, " + std::to_string(cfg.growth_max_degree) + "]");
            out.add(std::move(rec));
            for (const auto& row : rows) {
                if (row.k % 32 != 0) continue;
                CheckRecord r2 = CheckRecord::info("growth/kth_root[k=" + std::to_string(row.k) + "]");
                r2.with_float(row.kth_root);
                if (!row.norm_sq_exact.empty()) r2.with_exact(row.norm_sq_exact);
                out.add(std::move(r2));
            }
        }
    }
    return out;
}

ReportBundle cmd_variant(const RunConfig& cfg) {
    cfg.validate();
    ReportBundle out;
    out.command = "variant";
    out.config_echo = cfg.to_json();

    if (cfg.variant == RunConfig::Variant::Identity) {
        SpaceHandle space(cfg.weights, cfg.mode, IndexMap::identity(), false, space_options(cfg));
        for (auto& rec : core_records(space, cfg)) out.add(std::move(rec));
        return out;
    }

    if (cfg.variant == RunConfig::Variant::Support) {
        const std::size_t norm_level = std::min<std::size_t>(cfg.norm_check_level, 128);
        const std::size_t Q = std::max(2 * std::max(cfg.level_m, cfg.level_n) + 3, norm_level);
        IndexMap sigma = build_sigma(cfg.support, Q);

        // sigma invariants: injective (by construction), parity-respecting
        {
            bool ok = true;
            std::string detail;
            for (std::size_t n = 0; n <= Q && ok; ++n) {
                const auto image = static_cast<std::size_t>(sigma.forward(n));
                const bool in_I = cfg.support.contains(image);
                if ((n % 2 == 1) != in_I) {
                    ok = false;
                    detail = "sigma(" + std::to_string(n) + ")=" + std::to_string(image) +
                             (n % 2 == 1 ? " not in I" : " lies in I");
                }
            }
            CheckRecord rec = ok ? CheckRecord::pass("variant/sigma_parity")
                                 : CheckRecord::fail("variant/sigma_parity", detail);
            rec.with_window("n <= " + std::to_string(Q));
            rec.with_details("I = " + cfg.support.name() +
                             (cfg.support.both_infinite_certificate ? "" :
                              "; WARNING: no both-infinite certificate"));
            out.add(std::move(rec));
        }

        SpaceHandle space(cfg.weights, cfg.mode, std::move(sigma), false, space_options(cfg));
        add_biorthogonality(out, space, std::min<std::size_t>(cfg.biorth_level, Q));
        add_norm_bound(out, space, norm_level);

        const WitnessPair pair = make_witnesses(space, cfg.level_m, cfg.level_n);
        auto rep = supported_span_distance(space, pair, cfg.level_n, cfg.headline_ks);
        out.add((rep.f_supported_in_I
                     ? CheckRecord::pass("variant/f_supported_in_I")
                     : CheckRecord::fail("variant/f_supported_in_I", "stray coefficient outside I"))
                    .with_window("window n <= " + std::to_string(cfg.level_m - 1))
                    .with_details("truncation residual at exponent " +
                                  std::to_string(rep.boundary_exponent) + " (complement of I)"));
        out.add(rep.g_perp_supported
                    ? CheckRecord::pass("variant/g_kills_I_monomials")
                    : CheckRecord::fail("variant/g_kills_I_monomials", "nonzero pairing inside window"));
        out.add((rep.pairing_one ? CheckRecord::pass("variant/pairing_f_g")
                                 : CheckRecord::fail("variant/pairing_f_g", "pairing != 1"))
                    .with_float(1.0));
        for (const auto& row : rep.distance_rows) {
            CheckRecord rec = row.dominates_cert
                                  ? CheckRecord::pass("variant/I_span_distance[k=" + std::to_string(row.k) + "]")
                                  : CheckRecord::fail("variant/I_span_distance[k=" + std::to_string(row.k) + "]",
                                                      "distance " + fmt(row.dist) + " below certificate");
            rec.with_exact(row.dist_sq.str()).with_float(row.dist).with_bound(row.cert);
            out.add(std::move(rec));
        }
        return out;
    }

    // Fourier
    SpaceHandle space = fourier_space(cfg.weights, cfg.mode, space_options(cfg));
    add_biorthogonality(out, space, cfg.biorth_level);
    const WitnessPair pair = make_witnesses(space, cfg.level_m, cfg.level_n);
    auto rep = fourier_counterexample(space, pair, cfg.level_n, cfg.headline_ks);
    out.add((rep.f_holomorphic
                 ? CheckRecord::pass("fourier/f_in_H2")
                 : CheckRecord::fail("fourier/f_in_H2", "negative-frequency coefficient inside window"))
                .with_window("window n <= " + std::to_string(cfg.level_m - 1))
                .with_details("truncation residual at frequency " +
                              std::to_string(rep.boundary_frequency)));
    out.add(rep.g_perp_holomorphic
                ? CheckRecord::pass("fourier/g_kills_holomorphic_monomials")
                : CheckRecord::fail("fourier/g_kills_holomorphic_monomials", "nonzero pairing"));
    out.add((rep.pairing_one ? CheckRecord::pass("fourier/pairing_f_g")
                             : CheckRecord::fail("fourier/pairing_f_g", "pairing != 1"))
                .with_float(1.0));
    out.add(rep.l2_continuity
                ? CheckRecord::pass("fourier/l2_continuity").with_details("||J(x)||_{L2} <= 2||x|| on samples")
                : CheckRecord::fail("fourier/l2_continuity", "embedding bound violated"));
    out.add(rep.monomial_inner_products
                ? CheckRecord::pass("fourier/monomial_inner_products")
                : CheckRecord::fail("fourier/monomial_inner_products",
                                    "damped generator images break the H inner product identity"));
    for (const auto& row : rep.distance_rows) {
        CheckRecord rec = row.dominates_cert
                              ? CheckRecord::pass("fourier/holo_span_distance[k=" + std::to_string(row.k) + "]")
                              : CheckRecord::fail("fourier/holo_span_distance[k=" + std::to_string(row.k) + "]",
                                                  "distance " + fmt(row.dist) + " below certificate");
        rec.with_exact(row.dist_sq.str()).with_float(row.dist).with_bound(row.cert);
        out.add(std::move(rec));
    }
    for (const auto& row : rep.symmetric_partial_sums) {
        CheckRecord rec = row.pass
                              ? CheckRecord::pass("fourier/symmetric_partial_sum[n=" + std::to_string(row.n) + "]")
                              : CheckRecord::fail("fourier/symmetric_partial_sum[n=" + std::to_string(row.n) + "]",
                                                  "distance below certificate");
        rec.with_float(row.dist).with_bound(row.cert);
        if (!row.dist_exact.empty()) rec.with_exact(row.dist_exact);
        out.add(std::move(rec));
    }
    return out;
}

void write_outputs(const ReportBundle& bundle, const RunConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    for (const auto& format : cfg.formats) {
        const fs::path path = fs::path(cfg.out_dir) / (bundle.command + "." + format);
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot write " + path.string());
        if (format == "json")
            os << bundle.to_json().dump(2) << "\n";
        else
            os << bundle.to_csv();
    }
    if (cfg.plot_data) {
        std::map<std::string, std::vector<std::pair<double, double>>> series;
        for (const auto& rec : bundle.records) {
            const auto lb = rec.name.find("[");
            if (lb == std::string::npos || std::isnan(rec.float_value)) continue;
            const auto eq = rec.name.find('=', lb);
            const auto rb = rec.name.find(']', lb);
            if (eq == std::string::npos || rb == std::string::npos) continue;
            try {
                const double x = std::stod(rec.name.substr(eq + 1, rb - eq - 1));
                std::string key = rec.name.substr(0, lb);
                for (auto& ch : key)
                    if (ch == '/') ch = '_';
                series[key].push_back({x, rec.float_value});
            } catch (const std::exception&) {
                continue; // non-numeric series key
            }
        }
        for (const auto& [key, points] : series) {
            const fs::path path = fs::path(cfg.out_dir) / ("plot_" + key + ".csv");
            std::ofstream os(path);
            os << "x,y\n";
            for (const auto& [x, y] : points) os << fmt(x) << "," << fmt(y) << "\n";
        }
    }
}

std::vector<std::string> cross_mode_disagreements(const ReportBundle& exact_bundle,
                                                  const ReportBundle& approx_bundle, double rel_tol) {
    std::vector<std::string> out;
    for (const auto& [name, a] : exact_bundle.metrics) {
        auto it = approx_bundle.metrics.find(name);
        if (it == approx_bundle.metrics.end()) continue;
        const double b = it->second;
        if (std::abs(a - b) > rel_tol * std::max({1.0, std::abs(a), std::abs(b)}))
            out.push_back(name + ": exact " + fmt(a) + " vs approx " + fmt(b));
    }
    return out;
}

} // namespace hspace
