#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fullrank/attack.hpp"
#include "fullrank/bounds.hpp"
#include "fullrank/construct.hpp"
#include "fullrank/cover.hpp"
#include "fullrank/matrix.hpp"
#include "fullrank/recover.hpp"
#include "fullrank/verify.hpp"

namespace fullrank::io {

using nlohmann::json;

/// {"m", "d", "k": int|null, "modulus": int|null, "entries": [row-major], "scalings": [int]|null}
struct MatrixFile {
    IntMatrix matrix;
    std::optional<std::vector<std::int64_t>> scalings;
};

json to_json(const MatrixFile& file);
MatrixFile matrix_from_json(const json& j);

/// Plain rows, comma-separated.
std::string to_csv(const IntMatrix& a);

json to_json(const VerificationReport& report);
json to_json(const DegeneracyCertificate& cert);
DegeneracyCertificate certificate_from_json(const json& j);

/// {"dimension", "support": [...], "values": [...]}
json to_json(const SparseSignal& x);
SparseSignal signal_from_json(const json& j);

/// {"b": ["p/q"...], "noise": ["p/q"...], "threshold": "p/q", "within_guarantee": bool}
json to_json(const Measurement& meas);
Measurement measurement_from_json(const json& j);

json to_json(const DecodeResult& result);
json to_json(const BoundsReport& report);
json to_json(const AttackParams& params);

/// A cover file is either a list of normals or {"m", "k", "normals"}.
std::vector<Normal> normals_from_json(const json& j);

/// Rational given as "p/q", a decimal string, or a JSON integer.
Rational rational_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fullrank::io
