#pragma once

#include <optional>
#include <string>

#include "wickgit/geometry.hpp"
#include "wickgit/orbits.hpp"
#include "wickgit/realforms.hpp"

namespace wickgit {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "wickgit-report/1";

/// Whole file as a string.  Throws Error when unreadable.
std::string read_file(const std::string& path);

// Typed loaders.  All of them throw Error on malformed JSON (with the byte
// position of the problem) and on schema violations (with the field name).

/// {"n": int, "p": int, "q": int, "embedding": "standard"} or
/// {"embedding": {"conjugator": [[...]]}} with a real orthogonal matrix.
RealForm real_form_from_json(const std::string& text);

/// {"p1": int, "q1": int, "p2": int, "q2": int}; both standard forms must
/// share the same n = p + q.
CompatibleTriple triple_from_json(const std::string& text);

/// {"n": int, "valence": int, "components": [{"idx": [1-based ints],
/// "re": number, "im": number}]}.  Omitted components are zero; the actions
/// here are real, so a nonzero "im" is rejected.
Tensor tensor_from_json(const std::string& text);

/// Dense real matrix as an array of equal-length rows.
Mat matrix_from_json(const std::string& text);

/// {"kind": "frame" | "walker" | "g2" | "g2split" | "coord-builtin", ...}.
/// frame: {"dim", "c": [{"k","i","j","value"}] (1-based, rationals as
/// strings or integers), "eta": [[...]]}; walker: {"A","B","C"} polynomial
/// strings; coord-builtin: {"name": "flat", "diag": [...]} or
/// {"name": "sphere"}.
struct MetricFile {
  std::string kind;
  std::optional<FrameMetric> frame;
  std::optional<WalkerSpec> walker;
  std::optional<CoordMetric> coord;
};
MetricFile metric_from_json(const std::string& text);

// Canonical serialization: sorted keys, two-space indent, no trailing
// whitespace, so identical inputs rerun to byte-identical output.

std::string tensor_to_json(const Tensor& t);
std::string matrix_to_json(const Mat& m);
std::string orbit_report_to_json(const OrbitReport& r);

/// Wraps a payload (itself valid JSON text) in the report envelope:
/// verb, status, payload, schema/tool versions and the echoed seed.
std::string report_envelope(const std::string& verb, const std::string& status,
                            const std::string& payload_json, long seed);

}  // namespace wickgit
