#include "glsm/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "glsm/errors.hpp"

namespace glsm {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void located_parse_error(const std::string& origin, const std::string& text,
                                      std::size_t byte, const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

}  // namespace

GlsmSpec parse_spec_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    located_parse_error(origin, text, e.byte, e.what());
  }
  auto field_error = [&](const std::string& field, const std::string& why) -> void {
    throw ParseError(origin + ": field \"" + field + "\": " + why);
  };

  if (!j.is_object()) field_error("(root)", "expected a JSON object");

  std::string name = "unnamed";
  if (j.contains("name")) {
    if (!j["name"].is_string()) field_error("name", "expected a string");
    name = j["name"].get<std::string>();
  }

  if (!j.contains("kappa") || !j["kappa"].is_number_integer())
    field_error("kappa", "expected an integer");
  int kappa = j["kappa"].get<int>();

  if (!j.contains("charges") || !j["charges"].is_array())
    field_error("charges", "expected an array of integer rows");
  std::vector<std::vector<long long>> charges;
  for (std::size_t r = 0; r < j["charges"].size(); ++r) {
    const auto& row = j["charges"][r];
    if (!row.is_array()) field_error("charges[" + std::to_string(r) + "]", "expected an array");
    std::vector<long long> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        field_error("charges[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                    "expected an integer");
      out.push_back(row[c].get<long long>());
    }
    charges.push_back(std::move(out));
  }

  std::vector<Rational> r_charges(charges.size(), Rational(0));
  if (j.contains("r_charges")) {
    if (!j["r_charges"].is_array()) field_error("r_charges", "expected an array");
    r_charges.clear();
    for (std::size_t k = 0; k < j["r_charges"].size(); ++k) {
      const auto& e = j["r_charges"][k];
      try {
        if (e.is_number_integer())
          r_charges.push_back(Rational(e.get<long long>()));
        else if (e.is_string())
          r_charges.push_back(rational_from_string(e.get<std::string>()));
        else
          field_error("r_charges[" + std::to_string(k) + "]", "expected a rational string");
      } catch (const ParseError& pe) {
        field_error("r_charges[" + std::to_string(k) + "]", pe.what());
      }
    }
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) field_error("labels", "expected an array of strings");
    for (std::size_t k = 0; k < j["labels"].size(); ++k) {
      if (!j["labels"][k].is_string())
        field_error("labels[" + std::to_string(k) + "]", "expected a string");
      labels.push_back(j["labels"][k].get<std::string>());
    }
  }

  return validate_spec(name, kappa, charges, r_charges, labels);
}

GlsmSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path);
}

std::string emit_spec(const GlsmSpec& spec) {
  ojson j;
  j["name"] = spec.name;
  j["kappa"] = spec.kappa;
  j["charges"] = spec.charges;
  ojson rq = ojson::array();
  for (const auto& q : spec.r_charges) rq.push_back(rational_to_string(q));
  j["r_charges"] = rq;
  if (!spec.labels.empty()) j["labels"] = spec.labels;
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string input_hash_hex(const GlsmSpec& spec) {
  std::uint64_t h = fnv1a64(emit_spec(spec));
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

nlohmann::ordered_json complex_to_json(const std::complex<double>& v) {
  ojson j;
  j["re"] = v.real();
  j["im"] = v.imag();
  return j;
}

nlohmann::ordered_json envelope_to_json(const ResultEnvelope& env) {
  ojson j;
  j["schema"] = kEnvelopeSchema;
  j["command"] = env.command;
  j["input_hash"] = env.input_hash;
  j["value"] = complex_to_json(env.value);
  ojson d;
  d["terms"] = env.diagnostics.terms;
  d["shells"] = env.diagnostics.shells;
  d["tail_estimate"] = env.diagnostics.tail_estimate;
  d["quadrature_error"] = env.diagnostics.quadrature_error;
  if (env.diagnostics.grr_margin) d["grr_margin"] = *env.diagnostics.grr_margin;
  d["warnings"] = env.diagnostics.warnings;
  j["diagnostics"] = d;
  j["elapsed_seconds"] = env.elapsed_seconds;
  return j;
}

void write_series_csv(const std::string& path, const SeriesResult& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open CSV output '" + path + "'");
  out << "index,partial_re,partial_im,tail_estimate\n";
  out << std::setprecision(17);
  const auto& p = series.shell_partials;
  for (std::size_t k = 0; k < p.size(); ++k) {
    double tail = (k + 1 == p.size()) ? series.tail_estimate : std::abs(p.back() - p[k]);
    out << k << "," << p[k].real() << "," << p[k].imag() << "," << tail << "\n";
  }
}

void write_contour_csv(const std::string& path,
                       std::vector<std::pair<double, std::complex<double>>> samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open CSV output '" + path + "'");
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  out << "s,integrand_re,integrand_im\n";
  out << std::setprecision(17);
  for (const auto& [s, v] : samples) out << s << "," << v.real() << "," << v.imag() << "\n";
}

}  // namespace glsm
