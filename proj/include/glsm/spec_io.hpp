#pragma once
// Spec-file ingestion (JSON), canonical emission with exact rationals,
// deterministic input hashing, the versioned result envelope, and CSV data
// emission for external plotting.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "glsm/series.hpp"
#include "glsm/spec.hpp"

namespace glsm {

inline constexpr const char* kEnvelopeSchema = "glsm-charge/1";

// Parses the JSON model description:
//   { "name": text, "kappa": int, "charges": [[int]],
//     "r_charges": ["p/q", ...] (optional, default all zero),
//     "labels": [text, ...] (optional) }.
// Throws ParseError with origin:line:column on syntax errors and a field
// path on shape errors; validation errors propagate from validate_spec.
GlsmSpec parse_spec_text(const std::string& text, const std::string& origin);
GlsmSpec parse_spec_file(const std::string& path);

// Canonical emission; parse_spec_text(emit_spec(s)) reproduces s exactly
// (rationals travel as strings).
std::string emit_spec(const GlsmSpec& spec);

// FNV-1a 64-bit hash of the canonical emission, as 16 hex digits.
std::string input_hash_hex(const GlsmSpec& spec);
std::uint64_t fnv1a64(const std::string& bytes);

struct EnvelopeDiagnostics {
  long long terms = 0;
  int shells = 0;
  double tail_estimate = 0.0;
  double quadrature_error = 0.0;
  std::optional<double> grr_margin;
  std::vector<std::string> warnings;
};

struct ResultEnvelope {
  std::string command;     // echo of the invocation
  std::string input_hash;  // input_hash_hex of the parsed spec
  std::complex<double> value{0.0, 0.0};
  EnvelopeDiagnostics diagnostics;
  double elapsed_seconds = 0.0;
};

// Envelope serialization with deterministic key order; callers may attach
// additional payload fields before dumping.
nlohmann::ordered_json envelope_to_json(const ResultEnvelope& env);
nlohmann::ordered_json complex_to_json(const std::complex<double>& v);

// Shell partial sums: columns index,partial_re,partial_im,tail_estimate
// (remaining-gap estimate per row; the certified tail on the last row).
void write_series_csv(const std::string& path, const SeriesResult& series);

// Contour samples sorted by s: columns s,integrand_re,integrand_im.
void write_contour_csv(const std::string& path,
                       std::vector<std::pair<double, std::complex<double>>> samples);

}  // namespace glsm
