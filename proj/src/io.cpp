#include "fullrank/io.hpp"

#include <fstream>
#include <sstream>

#include "fullrank/errors.hpp"

namespace fullrank::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("JSON: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("JSON: field '") + key + "': " + e.what());
    }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return field<T>(j, key);
}

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

std::vector<Rational> rationals_from(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InvalidInput(std::string("JSON: '") + key + "' must be an array");
    std::vector<Rational> out;
    for (const auto& x : j.at(key)) out.push_back(rational_from_json(x));
    return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InvalidInput("JSON: rationals must be \"p/q\" strings or integers, got " + j.dump());
}

json to_json(const MatrixFile& file) {
    const IntMatrix& a = file.matrix;
    json j;
    j["m"] = a.rows();
    j["d"] = a.cols();
    j["k"] = a.entry_bound() ? json(*a.entry_bound()) : json(nullptr);
    j["modulus"] = a.modulus() ? json(*a.modulus()) : json(nullptr);
    j["entries"] = a.flat();
    j["scalings"] = file.scalings ? json(*file.scalings) : json(nullptr);
    return j;
}

MatrixFile matrix_from_json(const json& j) {
    const int m = field<int>(j, "m");
    const int d = field<int>(j, "d");
    const auto entries = field<std::vector<std::int64_t>>(j, "entries");
    MatrixFile out{IntMatrix::from_flat(m, d, entries, optional_field<std::int64_t>(j, "k"),
                                        optional_field<std::int64_t>(j, "modulus")),
                   optional_field<std::vector<std::int64_t>>(j, "scalings")};
    if (out.scalings && out.scalings->size() != static_cast<std::size_t>(d)) {
        throw InvalidInput("JSON: scalings length must equal d");
    }
    return out;
}

std::string to_csv(const IntMatrix& a) {
    std::ostringstream out;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out << (j ? "," : "") << a(i, j);
        out << '\n';
    }
    return out.str();
}

json to_json(const VerificationReport& report) {
    json j;
    j["total_minors_checked"] = report.total_minors_checked;
    j["failure_count"] = report.failures.size();
    j["failures"] = report.failures;
    j["mode"] = to_string(report.mode);
    if (report.mode == VerifyMode::sampled) {
        j["seed"] = report.seed;
        j["trials"] = report.trials;
    }
    j["arithmetic"] = to_string(report.arithmetic);
    j["passed"] = report.passed();
    return j;
}

json to_json(const DegeneracyCertificate& cert) {
    return json{{"t", cert.t}, {"coeffs", cert.coeffs}, {"columns", cert.columns}};
}

DegeneracyCertificate certificate_from_json(const json& j) {
    return {field<int>(j, "t"), field<std::vector<std::int64_t>>(j, "coeffs"), field<std::vector<int>>(j, "columns")};
}

json to_json(const SparseSignal& x) {
    return json{{"dimension", x.dimension()}, {"support", x.support()}, {"values", x.values()}};
}

SparseSignal signal_from_json(const json& j) {
    if (j.is_array()) return SparseSignal::from_dense(j.get<std::vector<std::int64_t>>());
    return SparseSignal(field<int>(j, "dimension"), field<std::vector<int>>(j, "support"),
                        field<std::vector<std::int64_t>>(j, "values"));
}

json to_json(const Measurement& meas) {
    return json{{"b", rationals(meas.b)},
                {"noise", rationals(meas.noise)},
                {"threshold", format_rational(meas.threshold)},
                {"within_guarantee", meas.within_guarantee}};
}

Measurement measurement_from_json(const json& j) {
    Measurement meas;
    meas.b = rationals_from(j, "b");
    if (j.contains("noise") && !j.at("noise").is_null()) meas.noise = rationals_from(j, "noise");
    if (j.contains("threshold")) meas.threshold = rational_from_json(j.at("threshold"));
    meas.within_guarantee = !meas.noise.empty() && linf_norm(meas.noise) < meas.threshold;
    return meas;
}

json to_json(const DecodeResult& result) {
    json j;
    j["unique"] = result.signal.has_value();
    j["signal"] = result.signal ? to_json(*result.signal) : json(nullptr);
    j["minimizers"] = json::array();
    for (const auto& x : result.minimizers) j["minimizers"].push_back(to_json(x));
    j["residual"] = format_rational(result.residual);
    j["candidates_checked"] = result.candidates_checked;
    j["guarantee_regime"] = result.guarantee_regime;
    return j;
}

json to_json(const BoundsReport& report) {
    return json{{"m", report.m},
                {"k", report.k},
                {"regime", to_string(report.regime)},
                {"upper_bound_thm1", report.upper_bound_thm1.str()},
                {"lower_bound_thm2", report.lower_bound_thm2.str()},
                {"gap_factor", format_rational(report.gap_factor)},
                {"k_large_enough", report.k_large_enough}};
}

json to_json(const AttackParams& params) {
    return json{{"t", params.config.t},
                {"lambda", params.config.lambda},
                {"min_agree", params.config.min_agree},
                {"regime", to_string(params.regime)},
                {"t_clamped", params.t_clamped},
                {"below_guarantee_regime", params.below_guarantee_regime}};
}

std::vector<Normal> normals_from_json(const json& j) {
    const json& list = j.is_object() ? j.at("normals") : j;
    if (!list.is_array()) throw InvalidInput("JSON: cover must be a list of normal vectors");
    try {
        return list.get<std::vector<Normal>>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("JSON: malformed normal list: ") + e.what());
    }
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("'" + path.string() + "': " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace fullrank::io
