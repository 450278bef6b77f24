// Command-line driver: spec ingestion, command dispatch, JSON envelopes on
// stdout, diagnostics on stderr, stable exit codes per error class.

#include <chrono>
#include <complex>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glsm/coulomb.hpp"
#include "glsm/errors.hpp"
#include "glsm/higgs.hpp"
#include "glsm/phases.hpp"
#include "glsm/spec_io.hpp"
#include "glsm/wall.hpp"

namespace {

using glsm::Complex;
using glsm::QVec;
using glsm::Rational;
using ojson = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw glsm::ParseError("bad number: '" + s + "'");
  }
}

long long parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw glsm::ParseError("bad integer: '" + s + "'");
  }
}

QVec parse_qvec(const std::string& s) {
  QVec out;
  for (const auto& tok : split(s, ',')) out.push_back(glsm::rational_from_string(tok));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok));
  return out;
}

std::vector<long long> parse_ints(const std::string& s) {
  std::vector<long long> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

// "2.5", "1e-3", "0.1+2i", "-3i", "i".
Complex parse_complex_entry(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw glsm::ParseError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return {parse_double(s), 0.0};
  s.pop_back();
  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto unit = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (cut == std::string::npos) return {0.0, unit(s)};
  return {parse_double(s.substr(0, cut)), unit(s.substr(cut))};
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_complex_entry(tok));
  return out;
}

// "re" or "re,im".
Complex parse_complex_pair(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw glsm::ParseError("expected 're' or 're,im', got '" + s + "'");
}

// "t1,...,tk:coeff;t1,...,tk:coeff" -- coefficient defaults to 1.
glsm::Brane parse_brane(const std::string& s, int kappa) {
  glsm::Brane brane;
  for (const auto& term : split(s, ';')) {
    auto parts = split(term, ':');
    if (parts.size() > 2) throw glsm::ParseError("bad brane term '" + term + "'");
    std::vector<long long> t = parse_ints(parts[0]);
    if (static_cast<int>(t.size()) != kappa)
      throw glsm::ParseError("brane character '" + parts[0] + "' must have " +
                             std::to_string(kappa) + " entries");
    Complex c = parts.size() == 2 ? parse_complex_entry(parts[1]) : Complex{1.0, 0.0};
    brane.terms.push_back({std::move(t), c});
  }
  return brane;
}

std::vector<int> parse_index_set(const std::string& s, int total) {
  std::vector<int> idx;
  for (long long v : parse_ints(s)) {
    if (v < 1 || v > total)
      throw glsm::ParseError("index " + std::to_string(v) + " outside 1.." +
                             std::to_string(total));
    idx.push_back(static_cast<int>(v - 1));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

ojson qvec_to_json(const QVec& v) {
  ojson a = ojson::array();
  for (const auto& r : v) a.push_back(glsm::rational_to_string(r));
  return a;
}

ojson indices_1based(const std::vector<int>& idx) {
  ojson a = ojson::array();
  for (int i : idx) a.push_back(i + 1);
  return a;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// Shared option bag; each subcommand binds the strings it uses.
struct Options {
  std::string spec_path;
  std::string zeta, zeta_plus, zeta_minus;
  std::string b, brane, alpha, lambda, log_y, z = "1", t, q, y, anticone, delta;
  double tol = 1e-10;
  int max_shell = 0;
  int cutoff = 10;
  int threads = 1;
  bool k_theory = false;
  bool strict_window = false;
  std::string emit_csv;
};

glsm::GlsmSpec load_spec(const Options& opt) { return glsm::parse_spec_file(opt.spec_path); }

std::vector<Complex> alpha_or_default(const Options& opt, const glsm::GlsmSpec& spec) {
  if (!opt.alpha.empty()) {
    auto a = parse_complex_list(opt.alpha);
    if (static_cast<int>(a.size()) != spec.total())
      throw glsm::ParseError("--alpha needs " + std::to_string(spec.total()) + " entries");
    return a;
  }
  std::vector<Complex> a;
  for (const auto& qj : spec.r_charges) a.push_back({glsm::to_double(qj / 2), 0.0});
  return a;
}

glsm::ThetaParam make_theta(const glsm::GlsmSpec& spec, const QVec& zeta, const Options& opt) {
  glsm::ThetaParam th;
  if (static_cast<int>(zeta.size()) != spec.kappa)
    throw glsm::ParseError("--zeta needs " + std::to_string(spec.kappa) + " entries");
  th.zeta.resize(spec.kappa);
  for (int a = 0; a < spec.kappa; ++a) th.zeta[a] = glsm::to_double(zeta[a]);
  th.B = opt.b.empty() ? std::vector<double>{} : parse_doubles(opt.b);
  if (static_cast<int>(th.B.size()) > spec.kappa)
    throw glsm::ParseError("--b needs at most " + std::to_string(spec.kappa) + " entries");
  th.B.resize(spec.kappa, 0.0);
  return th;
}

glsm::Brane brane_or_default(const Options& opt, const glsm::GlsmSpec& spec) {
  if (opt.brane.empty())
    return glsm::Brane::single(std::vector<long long>(spec.kappa, 0));
  return parse_brane(opt.brane, spec.kappa);
}

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

glsm::ResultEnvelope base_envelope(const std::string& command, const glsm::GlsmSpec& spec) {
  glsm::ResultEnvelope env;
  env.command = command;
  env.input_hash = glsm::input_hash_hex(spec);
  return env;
}

int run_phases(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zeta = parse_qvec(opt.zeta);
  if (static_cast<int>(zeta.size()) != spec.kappa)
    throw glsm::ParseError("--zeta needs " + std::to_string(spec.kappa) + " entries");

  auto anticones = glsm::minimal_anticones(spec, zeta);
  auto chamber = glsm::chamber_of(spec, zeta);
  auto walls = glsm::walls_of_chamber(spec, chamber);
  auto boxes = glsm::box_elements(spec, zeta);

  ojson j;
  j["schema"] = glsm::kEnvelopeSchema;
  j["command"] = command;
  j["input_hash"] = glsm::input_hash_hex(spec);
  j["zeta"] = qvec_to_json(zeta);
  ojson ja = ojson::array();
  for (const auto& I : anticones) {
    ojson e;
    e["indices"] = indices_1based(I.indices);
    e["order"] = I.group.order.convert_to<long long>();
    ojson cf = ojson::array();
    for (const auto& d : I.group.cyclic_factors) cf.push_back(d.convert_to<long long>());
    e["cyclic_factors"] = cf;
    ja.push_back(e);
  }
  j["anticones"] = ja;
  ojson jw = ojson::array();
  for (const auto& w : walls) jw.push_back(qvec_to_json(w.h));
  j["walls"] = jw;
  ojson jb = ojson::array();
  for (const auto& b : boxes) {
    ojson e;
    e["gamma"] = qvec_to_json(b.gamma);
    ojson f = ojson::array();
    for (const auto& fi : b.f) f.push_back(glsm::rational_to_string(fi));
    e["f"] = f;
    e["age"] = glsm::rational_to_string(b.age);
    e["narrow"] = b.narrow;
    jb.push_back(e);
  }
  j["box"] = jb;
  j["elapsed_seconds"] = timer.seconds();
  print_json(j);
  return 0;
}

int run_zd2(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zeta = parse_qvec(opt.zeta);
  auto theta = make_theta(spec, zeta, opt);
  auto brane = brane_or_default(opt, spec);
  auto alpha = alpha_or_default(opt, spec);

  auto chamber = glsm::chamber_of(spec, zeta);
  auto series = glsm::chamber_partition(spec, chamber, theta, brane, alpha, opt.tol,
                                        opt.max_shell, opt.threads);
  if (!opt.emit_csv.empty()) glsm::write_series_csv(opt.emit_csv, series);

  auto env = base_envelope(command, spec);
  env.value = series.value;
  env.diagnostics.terms = series.terms_used;
  env.diagnostics.shells = series.shells_used;
  env.diagnostics.tail_estimate = series.tail_estimate;
  env.elapsed_seconds = timer.seconds();
  print_json(glsm::envelope_to_json(env));
  return 0;
}

int run_central_charge(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zeta = parse_qvec(opt.zeta);
  if (opt.log_y.empty()) throw glsm::ParseError("--log-y is required");
  auto log_y = parse_complex_list(opt.log_y);
  if (static_cast<int>(log_y.size()) != spec.kappa)
    throw glsm::ParseError("--log-y needs " + std::to_string(spec.kappa) + " entries");
  std::vector<Complex> lambda(spec.total(), Complex{0.0, 0.0});
  if (!opt.lambda.empty()) {
    lambda = parse_complex_list(opt.lambda);
    if (static_cast<int>(lambda.size()) != spec.total())
      throw glsm::ParseError("--lambda needs " + std::to_string(spec.total()) + " entries");
  }
  Complex z = parse_complex_pair(opt.z);
  std::vector<long long> t(spec.kappa, 0);
  if (!opt.t.empty()) {
    t = parse_ints(opt.t);
    if (static_cast<int>(t.size()) != spec.kappa)
      throw glsm::ParseError("--t needs " + std::to_string(spec.kappa) + " entries");
  }

  auto series =
      glsm::central_charge_equivariant(spec, zeta, log_y, lambda, z, t, opt.tol, opt.max_shell);

  auto env = base_envelope(command, spec);
  env.value = series.value;
  env.diagnostics.terms = series.terms_used;
  env.diagnostics.shells = series.shells_used;
  env.diagnostics.tail_estimate = series.tail_estimate;
  env.elapsed_seconds = timer.seconds();
  print_json(glsm::envelope_to_json(env));
  return 0;
}

int run_ifun(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zeta = parse_qvec(opt.zeta);
  if (opt.anticone.empty()) throw glsm::ParseError("--anticone is required");
  auto idx = parse_index_set(opt.anticone, spec.total());
  // The index set must name a fixed point of this chamber.
  bool found = false;
  for (const auto& I : glsm::minimal_anticones(spec, zeta)) found = found || I.indices == idx;
  if (!found)
    throw glsm::Error(3, "the given anticone is not a fixed point of the chamber of zeta");
  auto I = glsm::make_anticone(spec, idx);

  std::vector<std::pair<glsm::BoxElement, Complex>> values;
  if (opt.k_theory) {
    if (opt.y.empty()) throw glsm::ParseError("--y is required with --k-theory");
    auto y = parse_complex_list(opt.y);
    if (static_cast<int>(y.size()) != spec.kappa)
      throw glsm::ParseError("--y needs " + std::to_string(spec.kappa) + " entries");
    std::vector<Complex> Lambda(spec.total(), Complex{1.0, 0.0});
    if (!opt.lambda.empty()) {
      Lambda = parse_complex_list(opt.lambda);
      if (static_cast<int>(Lambda.size()) != spec.total())
        throw glsm::ParseError("--lambda needs " + std::to_string(spec.total()) + " entries");
    }
    Complex q = parse_complex_pair(opt.q.empty() ? "0.5" : opt.q);
    values = glsm::k_i_function_fixed_point(spec, zeta, I, Lambda, q, y, opt.cutoff);
  } else {
    if (opt.log_y.empty()) throw glsm::ParseError("--log-y is required");
    auto log_y = parse_complex_list(opt.log_y);
    if (static_cast<int>(log_y.size()) != spec.kappa)
      throw glsm::ParseError("--log-y needs " + std::to_string(spec.kappa) + " entries");
    std::vector<Complex> lambda(spec.total(), Complex{0.0, 0.0});
    if (!opt.lambda.empty()) {
      lambda = parse_complex_list(opt.lambda);
      if (static_cast<int>(lambda.size()) != spec.total())
        throw glsm::ParseError("--lambda needs " + std::to_string(spec.total()) + " entries");
    }
    Complex z = parse_complex_pair(opt.z);
    values = glsm::i_function_fixed_point(spec, zeta, I, lambda, z, log_y, opt.cutoff);
  }

  ojson j;
  j["schema"] = glsm::kEnvelopeSchema;
  j["command"] = command;
  j["input_hash"] = glsm::input_hash_hex(spec);
  j["anticone"] = indices_1based(idx);
  j["cutoff"] = opt.cutoff;
  j["k_theory"] = opt.k_theory;
  ojson jv = ojson::array();
  for (const auto& [box, value] : values) {
    ojson e;
    e["gamma"] = qvec_to_json(box.gamma);
    e["age"] = glsm::rational_to_string(box.age);
    e["narrow"] = box.narrow;
    e["value"] = glsm::complex_to_json(value);
    jv.push_back(e);
  }
  j["values"] = jv;
  j["elapsed_seconds"] = timer.seconds();
  print_json(j);
  return 0;
}

int run_mb(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zeta = parse_qvec(opt.zeta);
  auto theta = make_theta(spec, zeta, opt);
  auto brane = brane_or_default(opt, spec);
  auto alpha = alpha_or_default(opt, spec);
  double delta = opt.delta.empty() ? glsm::find_delta_1d(spec, alpha) : parse_double(opt.delta);

  std::vector<std::pair<double, Complex>> samples;
  auto result = glsm::mb_integral_1d(spec, delta, theta, brane, alpha, opt.tol,
                                     opt.emit_csv.empty() ? nullptr : &samples);
  if (!opt.emit_csv.empty()) glsm::write_contour_csv(opt.emit_csv, samples);

  auto env = base_envelope(command, spec);
  env.value = result.value;
  env.diagnostics.terms = result.samples;
  env.diagnostics.quadrature_error = result.quadrature_error;
  env.elapsed_seconds = timer.seconds();
  ojson j = glsm::envelope_to_json(env);
  j["detail"] = {{"delta", delta},
                 {"truncation_radius", result.truncation_radius},
                 {"decay_certified", result.decay_certified}};
  print_json(j);
  return 0;
}

int run_wall(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  QVec zp = parse_qvec(opt.zeta_plus);
  QVec zm = parse_qvec(opt.zeta_minus);
  if (static_cast<int>(zp.size()) != spec.kappa || static_cast<int>(zm.size()) != spec.kappa)
    throw glsm::ParseError("--zeta-plus/--zeta-minus need " + std::to_string(spec.kappa) +
                           " entries");
  std::vector<double> B = opt.b.empty() ? std::vector<double>{} : parse_doubles(opt.b);
  B.resize(spec.kappa, 0.0);
  auto brane = brane_or_default(opt, spec);
  auto alpha = alpha_or_default(opt, spec);

  auto report = glsm::wall_crossing_check(spec, zp, zm, B, brane, alpha, opt.tol);
  if (opt.strict_window && report.wall_refused)
    throw glsm::GradeRestrictionViolated("brane outside the window; margin " +
                                         std::to_string(report.grr_margin));

  ojson j;
  j["schema"] = glsm::kEnvelopeSchema;
  j["command"] = command;
  j["input_hash"] = glsm::input_hash_hex(spec);
  ojson jc;
  jc["h"] = qvec_to_json(report.circuit.h);
  jc["h_i"] = report.circuit.h_i;
  jc["I_plus"] = indices_1based(report.circuit.I_plus);
  jc["I_minus"] = indices_1based(report.circuit.I_minus);
  j["circuit"] = jc;
  j["grr_ok"] = report.grr_ok;
  j["grr_margin"] = report.grr_margin;
  j["wall_refused"] = report.wall_refused;
  j["chamber_plus"] = glsm::complex_to_json(report.chamber_plus);
  j["chamber_minus"] = glsm::complex_to_json(report.chamber_minus);
  auto put_opt = [&](const char* key, const std::optional<Complex>& v) {
    if (v) j[key] = glsm::complex_to_json(*v);
  };
  put_opt("mb_plus", report.mb_plus);
  put_opt("mb_minus", report.mb_minus);
  put_opt("mb_zero", report.mb_zero);
  put_opt("wall_plus", report.wall_plus);
  put_opt("wall_minus", report.wall_minus);
  put_opt("wall_zero", report.wall_zero);
  j["max_discrepancy"] = report.max_discrepancy;
  j["elapsed_seconds"] = timer.seconds();
  print_json(j);
  return 0;
}

int run_convergence(const Options& opt, const std::string& command) {
  Timer timer;
  auto spec = load_spec(opt);
  auto zeta = parse_doubles(opt.zeta);
  if (static_cast<int>(zeta.size()) != spec.kappa)
    throw glsm::ParseError("--zeta needs " + std::to_string(spec.kappa) + " entries");
  if (opt.anticone.empty()) throw glsm::ParseError("--anticone is required");
  auto I = glsm::make_anticone(spec, parse_index_set(opt.anticone, spec.total()));

  double margin = 0.0;
  bool contains = glsm::convergence_contains(spec, I, zeta, &margin);

  ojson j;
  j["schema"] = glsm::kEnvelopeSchema;
  j["command"] = command;
  j["input_hash"] = glsm::input_hash_hex(spec);
  j["anticone"] = indices_1based(I.indices);
  j["contains"] = contains;
  j["margin"] = margin;
  j["elapsed_seconds"] = timer.seconds();
  print_json(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  for (int k = 0; k < argc; ++k) {
    if (k) command += ' ';
    command += argv[k];
  }

  CLI::App app{
      "Phase combinatorics, hemisphere partition functions, equivariant central charges, "
      "and wall-crossing checks for abelian gauge-theory models"};
  app.require_subcommand(1);

  Options opt;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "model spec file (JSON)")->required();
  };

  auto* phases = app.add_subcommand("phases", "anticones, chamber walls, and box classes");
  add_spec(phases);
  phases->add_option("--zeta", opt.zeta, "stability parameter (comma-separated rationals)")
      ->required();

  auto* zd2 = app.add_subcommand("zd2", "chamber hemisphere partition function (residue series)");
  add_spec(zd2);
  zd2->add_option("--zeta", opt.zeta, "stability parameter (rationals)")->required();
  zd2->add_option("--b", opt.b, "flat field (comma doubles, default 0)");
  zd2->add_option("--brane", opt.brane, "brane terms 't1,..,tk:coeff;...' (default single 0)");
  zd2->add_option("--alpha", opt.alpha, "row offsets (complex list, default q/2)");
  zd2->add_option("--tol", opt.tol, "relative tolerance");
  zd2->add_option("--max-shell", opt.max_shell, "shell cap (0 = rank default)");
  zd2->add_option("--threads", opt.threads, "worker threads (deterministic reduction)");
  zd2->add_option("--emit-csv", opt.emit_csv, "write shell partial sums as CSV");

  auto* cc = app.add_subcommand("central-charge", "equivariant central charge series");
  add_spec(cc);
  cc->add_option("--zeta", opt.zeta, "stability parameter (rationals)")->required();
  cc->add_option("--log-y", opt.log_y, "log Kaehler parameters (complex list, size rank)")
      ->required();
  cc->add_option("--lambda", opt.lambda, "equivariant parameters (complex list, default 0)");
  cc->add_option("--z", opt.z, "equivariant disk parameter 're,im' (default 1)");
  cc->add_option("--t", opt.t, "gauge character (integers, default 0)");
  cc->add_option("--tol", opt.tol, "relative tolerance");
  cc->add_option("--max-shell", opt.max_shell, "shell cap (0 = rank default)");

  auto* ifun = app.add_subcommand("ifun", "generating-series values at a fixed point");
  add_spec(ifun);
  ifun->add_option("--zeta", opt.zeta, "stability parameter (rationals)")->required();
  ifun->add_option("--anticone", opt.anticone, "fixed-point index set (1-based)")->required();
  ifun->add_option("--lambda", opt.lambda,
                   "equivariant parameters (additive; multiplicative with --k-theory)");
  ifun->add_option("--z", opt.z, "disk parameter 're,im' (default 1)");
  ifun->add_option("--log-y", opt.log_y, "log Kaehler parameters (complex list)");
  ifun->add_option("--cutoff", opt.cutoff, "degree cutoff (default 10)");
  ifun->add_flag("--k-theory", opt.k_theory, "K-theoretic q-product factors");
  ifun->add_option("--q", opt.q, "K-theoretic parameter 're,im' (|q| != 1)");
  ifun->add_option("--y", opt.y, "Kaehler parameters for --k-theory (complex list)");

  auto* mb = app.add_subcommand("mb", "rank-1 disk partition integral (vertical contour)");
  add_spec(mb);
  mb->add_option("--zeta", opt.zeta, "stability parameter (rationals)")->required();
  mb->add_option("--delta", opt.delta, "contour offset (default: positivity midpoint)");
  mb->add_option("--b", opt.b, "flat field (comma doubles, default 0)");
  mb->add_option("--brane", opt.brane, "brane terms (default single 0)");
  mb->add_option("--alpha", opt.alpha, "row offsets (complex list, default q/2)");
  mb->add_option("--tol", opt.tol, "absolute tolerance");
  mb->add_option("--emit-csv", opt.emit_csv, "write contour samples as CSV");

  auto* wall = app.add_subcommand("wall", "wall-crossing check across one wall");
  add_spec(wall);
  wall->add_option("--zeta-plus", opt.zeta_plus, "stability parameter, positive side")
      ->required();
  wall->add_option("--zeta-minus", opt.zeta_minus, "stability parameter, negative side")
      ->required();
  wall->add_option("--b", opt.b, "flat field (comma doubles, default 0)");
  wall->add_option("--brane", opt.brane, "brane terms (default single 0)");
  wall->add_option("--alpha", opt.alpha, "row offsets (complex list, default q/2)");
  wall->add_option("--tol", opt.tol, "tolerance");
  wall->add_flag("--strict-window", opt.strict_window,
                 "fail with the window exit code instead of a chamber-only report");

  auto* conv = app.add_subcommand("convergence", "series convergence-domain membership");
  add_spec(conv);
  conv->add_option("--zeta", opt.zeta, "stability direction (comma doubles)")->required();
  conv->add_option("--anticone", opt.anticone, "anticone index set (1-based)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (phases->parsed()) return run_phases(opt, command);
    if (zd2->parsed()) return run_zd2(opt, command);
    if (cc->parsed()) return run_central_charge(opt, command);
    if (ifun->parsed()) return run_ifun(opt, command);
    if (mb->parsed()) return run_mb(opt, command);
    if (wall->parsed()) return run_wall(opt, command);
    if (conv->parsed()) return run_convergence(opt, command);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const glsm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 9;
  }
}
