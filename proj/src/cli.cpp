#include "fullrank/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fullrank/errors.hpp"
#include "fullrank/io.hpp"

namespace fullrank::cli {

namespace {

using io::json;

struct Common {
    bool json_output = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_flag("--json", common.json_output, "Emit one JSON object instead of key=value lines");
    cmd->add_option("--seed", common.seed, "Seed for all randomness")->capture_default_str();
    cmd->add_option("--jobs", common.jobs, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    cmd->add_option("--budget", common.budget, "Work budget for exhaustive enumerations");
}

void emit(std::ostream& out, const json& result, bool as_json) {
    if (as_json) {
        out << result.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : result.items()) {
        out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void maybe_write(const std::string& path, const json& j) {
    if (!path.empty()) io::write_text(path, j.dump(2) + "\n");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction, verification and attack of integer matrices whose maximal minors are all nonzero"};
    app.require_subcommand(1);
    Common common;
    int code = kOk;

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Build an m×d matrix with entries ≤ k and all m×m minors nonzero");
    int c_m = 0;
    std::int64_t c_k = 0;
    std::optional<std::int64_t> c_d;
    std::string c_variant = "auto", c_out, c_csv;
    construct_cmd->add_option("--m", c_m, "Rows")->required();
    construct_cmd->add_option("--k", c_k, "Entry bound")->required();
    construct_cmd->add_option("--d", c_d, "Columns (default: full matrix of the chosen variant)");
    construct_cmd->add_option("--variant", c_variant, "auto | vandermonde | scaled")
        ->check(CLI::IsMember({"auto", "vandermonde", "scaled"}))
        ->capture_default_str();
    construct_cmd->add_option("--out", c_out, "Matrix JSON output path");
    construct_cmd->add_option("--csv", c_csv, "Plain CSV export path");
    add_common(construct_cmd, common);
    construct_cmd->callback([&] {
        Construction built;
        if (c_d) {
            if (c_variant != "auto") throw InvalidInput("--variant cannot be combined with --d");
            built = construct(c_m, c_k, *c_d, common.jobs);
        } else if (c_variant == "vandermonde") {
            built = construct_vandermonde(c_m, c_k);
        } else if (c_variant == "scaled") {
            built = construct_scaled(c_m, c_k, common.jobs);
        } else {
            built = construct_default(c_m, c_k, common.jobs);
        }
        io::MatrixFile file{built.matrix, std::nullopt};
        if (built.params.variant == Variant::scaled) file.scalings = built.params.scalings;
        const json matrix_json = io::to_json(file);
        maybe_write(c_out, matrix_json);
        if (!c_csv.empty()) io::write_text(c_csv, io::to_csv(built.matrix));

        json result{{"variant", to_string(built.params.variant)},
                    {"m", built.matrix.rows()},
                    {"d", built.matrix.cols()},
                    {"k", c_k},
                    {"modulus", built.params.d},
                    {"max_abs_entry", built.matrix.max_abs()}};
        if (built.params.variant == Variant::scaled) {
            std::size_t met = 0;
            for (const auto& q : built.params.quality) met += q.meets_threshold ? 1 : 0;
            result["dirichlet_threshold_met"] = met;
            result["dirichlet_columns"] = built.params.quality.size();
        }
        if (c_out.empty()) result["matrix"] = matrix_json;
        emit(out, result, common.json_output);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check that every m×m minor is nonzero");
    std::string v_in, v_out;
    bool v_exhaustive = false, v_sampled = false, v_exact = false;
    std::uint64_t v_trials = 1000;
    verify_cmd->add_option("--in", v_in, "Matrix JSON")->required();
    verify_cmd->add_flag("--exhaustive", v_exhaustive, "Check all C(d,m) minors (default)");
    verify_cmd->add_flag("--sampled", v_sampled, "Check random column subsets");
    verify_cmd->add_option("--trials", v_trials, "Sampled subsets")->capture_default_str();
    verify_cmd->add_flag("--exact", v_exact, "Use exact determinants even when a modulus is annotated");
    verify_cmd->add_option("--out", v_out, "Report JSON output path");
    add_common(verify_cmd, common);
    verify_cmd->callback([&] {
        if (v_exhaustive && v_sampled) throw InvalidInput("--exhaustive and --sampled are exclusive");
        const auto file = io::matrix_from_json(io::read_json(v_in));
        VerifyOptions options;
        options.jobs = common.jobs;
        options.force_exact = v_exact;
        if (common.budget) options.budget = *common.budget;
        const auto report = v_sampled ? verify_sampled(file.matrix, v_trials, common.seed, options)
                                      : verify_exhaustive(file.matrix, options);
        const json result = io::to_json(report);
        maybe_write(v_out, result);
        emit(out, result, common.json_output);
        code = report.passed() ? kOk : kPropertyViolation;
    });

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "Search small row combinations for a vanishing m-set of columns");
    std::string a_in, a_out;
    std::optional<int> a_t, a_min_agree;
    std::optional<std::int64_t> a_lambda, a_k;
    attack_cmd->add_option("--in", a_in, "Matrix JSON")->required();
    attack_cmd->add_option("--t", a_t, "Leading rows combined (default from m, k)");
    attack_cmd->add_option("--lambda", a_lambda, "Coefficient range 0..Lambda (default from m, k)");
    attack_cmd->add_option("--min-agree", a_min_agree, "Required agreements (default m)");
    attack_cmd->add_option("--k", a_k, "Entry bound for default parameters (default: annotation or max |entry|)");
    attack_cmd->add_option("--out", a_out, "Certificate JSON output path");
    add_common(attack_cmd, common);
    attack_cmd->callback([&] {
        const auto file = io::matrix_from_json(io::read_json(a_in));
        const IntMatrix& a = file.matrix;
        AttackConfig cfg;
        json result;
        if (!a_t || !a_lambda) {
            const std::int64_t k = std::max<std::int64_t>(2, a_k ? *a_k : a.entry_bound().value_or(a.max_abs()));
            const auto params = attack_params(std::max(2, a.rows()), k);
            cfg = params.config;
            result["defaults"] = io::to_json(params);
        }
        if (a_t) cfg.t = *a_t;
        if (a_lambda) cfg.lambda = *a_lambda;
        cfg.t = std::min(cfg.t, a.rows());
        cfg.min_agree = a_min_agree.value_or(a.rows());
        if (common.budget) cfg.pair_budget = *common.budget;
        result["t"] = cfg.t;
        result["lambda"] = cfg.lambda;
        result["min_agree"] = cfg.min_agree;
        const auto cert = find_collision(a, cfg, common.jobs);
        result["found"] = cert.has_value();
        if (cert) {
            const json cert_json = io::to_json(*cert);
            result["certificate"] = cert_json;
            const auto check = verify_certificate(a, *cert);
            result["certificate_valid"] = check.accepted;
            result["reason"] = check.reason;
            maybe_write(a_out, cert_json);
        }
        emit(out, result, common.json_output);
        code = cert ? kPropertyViolation : kOk;
    });

    // recover
    auto* recover_cmd = app.add_subcommand("recover", "Sparse integer signal encoding and exhaustive decoding");
    recover_cmd->require_subcommand(1);
    auto* encode_cmd = recover_cmd->add_subcommand("encode", "b = A x + e with exact rationals");
    std::string e_in, e_signal, e_noise, e_out, e_threshold = "1/2";
    encode_cmd->add_option("--in", e_in, "Matrix JSON")->required();
    encode_cmd->add_option("--signal", e_signal, "Signal JSON: {dimension, support, values} or dense list")->required();
    encode_cmd->add_option("--noise", e_noise, "Comma-separated rationals, e.g. 3/10,-0.2 (default zero)");
    encode_cmd->add_option("--threshold", e_threshold, "Noise level C of the guarantee")->capture_default_str();
    encode_cmd->add_option("--out", e_out, "Measurement JSON output path");
    add_common(encode_cmd, common);
    encode_cmd->callback([&] {
        const auto file = io::matrix_from_json(io::read_json(e_in));
        const auto x = io::signal_from_json(io::read_json(e_signal));
        auto noise = e_noise.empty() ? std::vector<Rational>(static_cast<std::size_t>(file.matrix.rows()), Rational(0))
                                     : parse_rational_list(e_noise);
        const auto meas = encode(file.matrix, x, noise, parse_rational(e_threshold));
        const json meas_json = io::to_json(meas);
        maybe_write(e_out, meas_json);
        emit(out, meas_json, common.json_output);
    });

    auto* decode_cmd = recover_cmd->add_subcommand("decode", "Exhaustive l-infinity decoder over s-sparse integer vectors");
    std::string d_in, d_meas, d_out;
    int d_s = 1;
    std::int64_t d_bound = 1;
    decode_cmd->add_option("--in", d_in, "Matrix JSON")->required();
    decode_cmd->add_option("--measurement", d_meas, "Measurement JSON")->required();
    decode_cmd->add_option("--s", d_s, "Sparsity")->capture_default_str();
    decode_cmd->add_option("--bound", d_bound, "Amplitude bound B")->capture_default_str();
    decode_cmd->add_option("--out", d_out, "Decoded result JSON output path");
    add_common(decode_cmd, common);
    decode_cmd->callback([&] {
        const auto file = io::matrix_from_json(io::read_json(d_in));
        const auto meas = io::measurement_from_json(io::read_json(d_meas));
        DecodeOptions options;
        options.jobs = common.jobs;
        if (common.budget) options.budget = *common.budget;
        const auto result = decode(file.matrix, meas, d_s, d_bound, options);
        const json result_json = io::to_json(result);
        maybe_write(d_out, result_json);
        emit(out, result_json, common.json_output);
        code = result.ambiguous() ? kPropertyViolation : kOk;
    });

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "Covering the grid {x : |x|_inf <= k} by hyperplanes through 0");
    cover_cmd->require_subcommand(1);
    auto* cover_verify_cmd = cover_cmd->add_subcommand("verify", "Check a list of normals covers the grid");
    std::string cv_in;
    std::optional<int> cv_m;
    std::optional<std::int64_t> cv_k;
    cover_verify_cmd->add_option("--in", cv_in, "Cover JSON: list of normals, or {m, k, normals}")->required();
    cover_verify_cmd->add_option("--m", cv_m, "Dimension (default: from the file)");
    cover_verify_cmd->add_option("--k", cv_k, "Grid radius (default: from the file)");
    add_common(cover_verify_cmd, common);
    cover_verify_cmd->callback([&] {
        const json j = io::read_json(cv_in);
        const auto normals = io::normals_from_json(j);
        int m = 0;
        if (cv_m) {
            m = *cv_m;
        } else if (j.is_object() && j.contains("m")) {
            m = j.at("m").get<int>();
        } else if (!normals.empty()) {
            m = static_cast<int>(normals.front().size());
        } else {
            throw InvalidInput("--m required for an empty cover");
        }
        if (!cv_k && !(j.is_object() && j.contains("k"))) throw InvalidInput("--k required");
        const std::int64_t k = cv_k ? *cv_k : j.at("k").get<std::int64_t>();
        const CoverInstance inst(m, k, normals);
        const auto check = verify_cover(inst, common.budget.value_or(kDefaultGridBudget));
        json result{{"accepted", check.accepted}, {"m", m}, {"k", k}, {"hyperplanes", inst.normals().size()},
                    {"points_checked", check.points_checked}};
        result["uncovered"] = check.uncovered ? json(*check.uncovered) : json(nullptr);
        if (k >= m) result["lower_bound"] = cover_lower_bound(m, k);
        emit(out, result, common.json_output);
        code = check.accepted ? kOk : kPropertyViolation;
    });

    auto* cover_bound_cmd = cover_cmd->add_subcommand("bound", "Lower bound on the number of covering hyperplanes");
    int cb_m = 0;
    std::int64_t cb_k = 0;
    cover_bound_cmd->add_option("--m", cb_m, "Dimension")->required();
    cover_bound_cmd->add_option("--k", cb_k, "Grid radius")->required();
    add_common(cover_bound_cmd, common);
    cover_bound_cmd->callback([&] {
        emit(out, json{{"m", cb_m}, {"k", cb_k}, {"lower_bound", cover_lower_bound(cb_m, cb_k)}}, common.json_output);
    });

    auto* cover_min_cmd = cover_cmd->add_subcommand("min", "Exact minimum cover by exhaustive search (tiny grids)");
    int cm_m = 0;
    std::int64_t cm_k = 0;
    std::string cm_out;
    cover_min_cmd->add_option("--m", cm_m, "Dimension")->required();
    cover_min_cmd->add_option("--k", cm_k, "Grid radius")->required();
    cover_min_cmd->add_option("--out", cm_out, "Witness cover JSON output path");
    add_common(cover_min_cmd, common);
    cover_min_cmd->callback([&] {
        const auto best = min_cover_bruteforce(cm_m, cm_k);
        maybe_write(cm_out, json{{"m", cm_m}, {"k", cm_k}, {"normals", best.witness}});
        json result{{"m", cm_m}, {"k", cm_k}, {"min_cover", best.size}, {"witness", best.witness},
                    {"nodes_explored", best.nodes_explored}};
        if (cm_k >= cm_m) result["lower_bound"] = cover_lower_bound(cm_m, cm_k);
        emit(out, result, common.json_output);
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Upper and lower bounds on the largest admissible d");
    int b_m = 0;
    std::int64_t b_k = 0;
    bounds_cmd->add_option("--m", b_m, "Rows")->required();
    bounds_cmd->add_option("--k", b_k, "Entry bound")->required();
    add_common(bounds_cmd, common);
    bounds_cmd->callback([&] {
        const auto report = bounds_report(b_m, b_k);
        json result = io::to_json(report);
        if (!report.k_large_enough) result["note"] = "upper bound is asymptotic; k is below the range its argument covers";
        emit(out, result, common.json_output);
    });

    std::vector<const char*> raw;
    raw.reserve(argv.size());
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalid;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const NotFound& e) {
        err << "not found: " << e.what() << '\n';
        return kInvalid;
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return code;
}

}  // namespace fullrank::cli
